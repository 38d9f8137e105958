"""Count MAR modules, Hasse edges and lattice status for every orientation up to --max-n."""
import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from diamond_exact.checks import catalan
from diamond_exact.mar import enumerate_mar, mar_poset
from diamond_exact.quiver import all_orientations


@dataclass
class CensusConfig:
    min_n: int = 3
    max_n: int = 6
    output: str | None = None


def census(cfg: CensusConfig) -> list[dict]:
    rows = []
    for n in range(cfg.min_n, cfg.max_n + 1):
        start = time.perf_counter()
        counts, edges, lattices = Counter(), Counter(), 0
        for Q in all_orientations(n):
            poset = mar_poset(Q)
            counts[len(enumerate_mar(Q))] += 1
            edges[len(poset.hasse_edges)] += 1
            lattices += poset.is_lattice
        rows.append({"n": n, "orientations": 2 ** (n - 1), "catalan": catalan(n - 1),
                     "mar_counts": dict(counts), "hasse_edge_counts": dict(edges),
                     "lattices": lattices, "seconds": round(time.perf_counter() - start, 2)})
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--output")
    cfg = CensusConfig(**vars(ap.parse_args()))
    rows = census(cfg)
    text = json.dumps({"config": asdict(cfg), "rows": rows}, indent=2)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    for r in rows:
        print(f"n={r['n']}: {r['orientations']} orientations, MAR counts {r['mar_counts']} "
              f"(Catalan {r['catalan']}), Hasse edges {r['hasse_edge_counts']}, "
              f"lattices {r['lattices']}/{r['orientations']}, {r['seconds']}s")


if __name__ == "__main__":
    main()
