"""Command-line front end: ``python -m diamond_exact <command> ...``."""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
import dataclasses
from dataclasses import dataclass

from . import checks
from .exact import (abelian_structure, e_diamond, f_x, pd_e, relative_pd, split_structure,
                    zero_auslander_report)
from .grid import build_ar_grid, classify_pair, ext_class, hom_dim
from .mar import (NonMutableError, enumerate_mar, mar_poset, mutate, polygon_flip_graph,
                  verify_bijection)
from .oracle.linalg import QQ, PrimeField
from .oracle.counterexamples import verify_d4_example, verify_gentle_example
from .oracle.typea import interval_catalog
from .quiver import Interval, MarDomainError, ModuleSum, QuiverError, TypeAQuiver, all_orientations

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    orientation: str | None = None
    format: str = "json"
    output: str | None = None
    field: str = "qq"
    verbose: bool = False
    extra: dict = dataclasses.field(default_factory=dict)

    def quivers(self) -> list[TypeAQuiver]:
        if self.n is None:
            raise UsageError("-n is required")
        if self.orientation in (None, "all"):
            if self.orientation is None and self.n > 1:
                raise UsageError("-o is required (an R/L word or 'all')")
            return all_orientations(self.n)
        return [TypeAQuiver(self.n, self.orientation)]

    def single(self) -> TypeAQuiver:
        qs = self.quivers()
        if len(qs) != 1:
            raise UsageError(f"{self.command} needs a single orientation, not 'all'")
        return qs[0]

    def oracle_field(self):
        if self.field.lower() in ("qq", "q", "rational"):
            return QQ
        m = re.fullmatch(r"[fF]?(\d+)", self.field)
        if not m:
            raise UsageError(f"unknown field {self.field!r}; use 'qq' or a prime such as 7")
        p = int(m.group(1))
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise UsageError(f"{p} is not prime")
        return PrimeField(p)


# parsing helpers

def parse_interval(text: str) -> Interval:
    m = re.fullmatch(r"\[?\s*(\d+)\s*[,:-]\s*(\d+)\s*\]?", text.strip())
    if not m:
        raise UsageError(f"cannot read module {text!r}; write it as lo,hi")
    return Interval(int(m.group(1)), int(m.group(2)))


def parse_modules(text: str) -> list[Interval]:
    parts = re.findall(r"\[?\s*\d+\s*[,:-]\s*\d+\s*\]?", text)
    if not parts:
        raise UsageError(f"no modules found in {text!r}")
    return [parse_interval(p) for p in parts]


def _checked(Q: TypeAQuiver, *mods: Interval) -> None:
    for m in mods:
        Q.check_interval(m)


# commands; each returns (payload, text, dot, ok)

def cmd_ar_quiver(cfg: RunConfig):
    out, texts, dots = [], [], []
    for Q in cfg.quivers():
        g = build_ar_grid(Q)
        out.append(g.to_json())
        dots.append(g.to_dot())
        lines = [f"AR quiver of {Q} ({len(g.positions)} indecomposables)"]
        for i in reversed(Q.vertices):
            row = sorted(g.row(i), key=lambda m: g.position(m).x)
            lines.append(f"  row {i}: " + "  ".join(f"{m!r}@{g.position(m).x}" for m in row))
        texts.append("\n".join(lines))
    return _many(out), "\n".join(texts), "".join(dots), True


def cmd_hom(cfg: RunConfig):
    Q = cfg.single()
    a, b = parse_interval(cfg.extra["source"]), parse_interval(cfg.extra["target"])
    _checked(Q, a, b)
    g = build_ar_grid(Q)
    pc = classify_pair(g, a, b)
    payload = {"quiver": Q.to_json(), "source": a.to_json(), "target": b.to_json(),
               "hom_dim": hom_dim(g, a, b), "pair": pc.kind.value}
    ok = True
    if cfg.extra.get("oracle"):
        od = interval_catalog(Q, cfg.oracle_field()).hom_dim(a, b)
        payload["oracle_hom_dim"] = od
        ok = od == payload["hom_dim"]
    text = f"dim Hom({a!r}, {b!r}) = {payload['hom_dim']}  ({pc.kind.value})"
    return payload, text, None, ok


def cmd_ext(cfg: RunConfig):
    Q = cfg.single()
    quot, sub = parse_interval(cfg.extra["quot"]), parse_interval(cfg.extra["sub"])
    _checked(Q, quot, sub)
    ses = ext_class(build_ar_grid(Q), quot, sub)
    payload = {"quiver": Q.to_json(), "quot": quot.to_json(), "sub": sub.to_json(),
               "ext_dim": 0 if ses is None else 1, "class": None if ses is None else ses.to_json()}
    ok = True
    if cfg.extra.get("oracle"):
        cat = interval_catalog(Q, cfg.oracle_field())
        d = cat.ext_dim(quot, sub)
        payload["oracle_ext_dim"] = d
        ok = d == payload["ext_dim"]
        if d:
            mid = cat.decompose(cat.realize(quot, sub).middle)
            payload["oracle_middle"] = ModuleSum.of(mid.elements()).to_json()
            ok = ok and ses is not None and list(ses.middle.summands) == sorted(mid.elements())
    text = f"Ext^1({quot!r}, {sub!r}) = 0" if ses is None else f"{ses}  ({ses.kind.value})"
    return payload, text, None, ok


def _structure(Q: TypeAQuiver, cfg: RunConfig):
    name = cfg.extra.get("structure", "diamond")
    if name == "diamond":
        return e_diamond(Q)
    if name == "abelian":
        return abelian_structure(Q)
    if name == "split":
        return split_structure(Q)
    if name == "custom":
        gens = cfg.extra.get("generators")
        if not gens:
            raise UsageError("--structure custom needs --generators")
        mods = parse_modules(gens)
        _checked(Q, *mods)
        return f_x(Q, mods)
    raise UsageError(f"unknown structure {name!r}")


def cmd_exact_structure(cfg: RunConfig):
    out, texts = [], []
    for Q in cfg.quivers():
        ES = _structure(Q, cfg)
        rep = zero_auslander_report(ES)
        mods = ES.grid.modules()
        pds = {m: (pd_e(ES, m)[0] if ES.is_diamond else relative_pd(ES, m)) for m in mods}
        body = {"structure": ES.to_json(), "report": rep.to_json(),
                "pd": [{"module": m.to_json(), "pd": d} for m, d in pds.items()]}
        if ES.is_diamond:
            body["resolutions"] = [r.to_json() for r in rep.resolutions]
        body["witnesses"] = [w.to_json() for w in rep.witnesses]
        out.append(body)
        lines = [f"{ES.label} on {Q}: global dim {rep.global_dim}, dominant dim ok {rep.dominant_dim_ok}, "
                 f"0-Auslander {rep.is_0_auslander}",
                 "  relative projectives: " + " ".join(map(repr, sorted(rep.relative_projectives))),
                 "  relative injectives:  " + " ".join(map(repr, sorted(rep.relative_injectives)))]
        for r in rep.resolutions:
            if r.steps:
                lines.append(f"  resolution: {r}")
        texts.append("\n".join(lines))
    return _many(out), "\n".join(texts), None, True


def cmd_mar(cfg: RunConfig):
    out, texts, dots, ok = [], [], [], True
    for Q in cfg.quivers():
        Q.require_mar_domain()
        mars = enumerate_mar(Q)
        sizes_ok = all(len(T.summands) == 2 * Q.n - 1 for T in mars)
        body = {"quiver": Q.to_json(), "count": len(mars), "summand_count_ok": sizes_ok,
                "modules": [T.to_json() for T in mars]}
        line = f"{Q}: {len(mars)} MAR modules, each with {2 * Q.n - 1} summands: {sizes_ok}"
        if cfg.extra.get("hasse"):
            poset = mar_poset(Q)
            body["hasse_edges"] = [[h.lower, h.upper] for h in poset.hasse_edges]
            dots.append(poset.to_dot())
        if cfg.extra.get("flip_graph"):
            dots.append(_flip_dot(Q.n + 1))
        if cfg.extra.get("verify_bijection"):
            bij = verify_bijection(Q)
            body["bijection"] = bij.to_json(mars) if cfg.extra.get("certificate") else \
                {k: v for k, v in bij.to_json().items() if k != "certificate"}
            line += f"; bijection with triangulations: {'pass' if bij.ok else 'FAIL'}"
            ok = ok and bij.ok
        ok = ok and sizes_ok
        out.append(body)
        texts.append(line if not cfg.verbose else line + "\n" + "\n".join(f"  {T!r}" for T in mars))
    return _many(out), "\n".join(texts), "".join(dots), ok


def _flip_dot(m: int) -> str:
    g = polygon_flip_graph(m)
    nodes = sorted(g.nodes, key=lambda t: t.to_json())
    index = {t: i for i, t in enumerate(nodes)}
    lines = ["graph Flips {"]
    for t, i in index.items():
        lines.append(f'  {i} [label="{t.to_json()}"];')
    for s, t in sorted((sorted((index[a], index[b])) for a, b in g.edges)):
        lines.append(f"  {s} -- {t};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_mutate(cfg: RunConfig):
    Q = cfg.single()
    Q.require_mar_domain()
    T = ModuleSum.of(parse_modules(cfg.extra["module"]))
    X = parse_interval(cfg.extra["at"])
    _checked(Q, X, *T.summands)
    if T not in enumerate_mar(Q):
        raise UsageError(f"{T!r} is not maximal almost rigid for {Q}")
    res = mutate(Q, T, X)
    return res.to_json(), f"{X!r} -> {res.added!r} ({res.direction.value}) via {res.ses}\n  result: {res.result!r}", \
        None, True


def cmd_poset(cfg: RunConfig):
    Q = cfg.single()
    Q.require_mar_domain()
    poset = mar_poset(Q)
    lines = [f"{len(poset.elements)} MAR modules, {len(poset.hasse_edges)} covering relations, "
             f"lattice: {poset.is_lattice}"]
    for h in poset.hasse_edges:
        lines.append(f"  {h.lower} < {h.upper}: {h.removed!r} -> {h.added!r}")
    return poset.to_json(), "\n".join(lines), poset.to_dot(), poset.minimum is not None and poset.is_lattice


def cmd_verify(cfg: RunConfig):
    max_n = cfg.extra.get("max_n", 6)
    results, notices = [], []
    if cfg.extra.get("examples"):
        for rep in (verify_d4_example(), verify_gentle_example()):
            results.append({"check": f"{rep['example']}", "passed": rep["passed"], "report": rep})
    else:
        plan = [("hom", range(2, max_n + 1), checks.check_hom),
                ("ext", range(2, max_n + 1), checks.check_ext)]
        if max_n >= 3:
            plan += [("diamond characterization", range(3, max_n + 1), checks.check_diamond_characterization),
                     ("0-Auslander", range(3, max_n + 1), checks.check_zero_auslander),
                     ("MAR count", range(3, max_n + 1), checks.check_counts),
                     ("lattice and bijection", range(3, max_n + 1), checks.check_lattice_bijection),
                     ("MAR = tilting", range(3, min(max_n, 4) + 1), lambda Q: checks.check_mar_tilting(Q, True))]
        else:
            notices.append("MAR checks skipped: they need n >= 3")
        for name, ns, fn in plan:
            start = time.perf_counter()
            passed, cases, wit = True, 0, []
            for n in ns:
                for Q in all_orientations(n):
                    r = fn(Q)
                    passed &= r.passed
                    cases += r.cases
                    wit += r.witnesses
            results.append({"check": name, "n": [ns.start, ns.stop - 1], "passed": passed, "cases": cases,
                            "seconds": round(time.perf_counter() - start, 2),
                            "witnesses": wit[:checks.MAX_WITNESSES]})
    ok = all(r["passed"] for r in results)
    payload = {"passed": ok, "notices": notices, "checks": results}
    text = "\n".join(notices + [f"{_mark(r['passed'])} {r['check']}" +
                                (f" ({r['cases']} cases)" if "cases" in r else "") for r in results])
    return payload, text, None, ok


def _mark(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if os.environ.get("NO_COLOR") is not None or not sys.stdout.isatty():
        return word
    return f"\033[{32 if ok else 31}m{word}\033[0m"


def _many(items: list):
    return items[0] if len(items) == 1 else {"results": items}


COMMANDS = {
    "ar-quiver": cmd_ar_quiver, "hom": cmd_hom, "ext": cmd_ext, "exact-structure": cmd_exact_structure,
    "mar": cmd_mar, "mutate": cmd_mutate, "poset": cmd_poset, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diamond-exact",
                                description="Type A module categories, the diamond exact structure and MAR modules.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="number of vertices")
    common.add_argument("-o", "--orientation", help="R/L word of length n-1, or 'all'")
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--field", default="qq", help="oracle field: qq or a prime p")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("ar-quiver", parents=[common], help="the AR quiver on its grid")
    h = sub.add_parser("hom", parents=[common], help="dim Hom between two intervals")
    h.add_argument("source")
    h.add_argument("target")
    h.add_argument("--oracle", action="store_true", help="cross-check by linear algebra")
    e = sub.add_parser("ext", parents=[common], help="the Ext^1 class with its middle term")
    e.add_argument("quot")
    e.add_argument("sub")
    e.add_argument("--oracle", action="store_true", help="cross-check by linear algebra")
    x = sub.add_parser("exact-structure", parents=[common], help="relative homological data and 0-Auslander report")
    x.add_argument("--structure", choices=("diamond", "abelian", "split", "custom"), default="diamond")
    x.add_argument("--generators", help="generators of F_X for --structure custom, e.g. '1,1 2,3'")
    m = sub.add_parser("mar", parents=[common], help="list maximal almost rigid modules")
    m.add_argument("--hasse", action="store_true", help="emit the Hasse diagram as DOT")
    m.add_argument("--flip-graph", action="store_true", help="emit the polygon flip graph as DOT")
    m.add_argument("--verify-bijection", action="store_true")
    m.add_argument("--certificate", action="store_true", help="include the isomorphism vertex matching")
    mu = sub.add_parser("mutate", parents=[common], help="mutate a MAR module at a summand")
    mu.add_argument("--module", required=True, help="summands, e.g. '1,1 1,2 2,5'")
    mu.add_argument("--at", required=True, help="the summand to exchange")
    sub.add_parser("poset", parents=[common], help="the MAR poset and its Hasse diagram")
    v = sub.add_parser("verify", parents=[common], help="cross-check everything against the oracle")
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--examples", action="store_true", help="the D4 and gentle counterexamples")
    v.add_argument("--section5", dest="examples", action="store_true", help=argparse.SUPPRESS)
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    base = {"command", "n", "orientation", "format", "output", "field", "verbose"}
    extra = {k: v for k, v in vars(args).items() if k not in base}
    return RunConfig(args.command, args.n, args.orientation, args.format, args.output, args.field,
                     args.verbose, extra)


def render(cfg: RunConfig, payload, text, dot) -> str:
    if cfg.format == "json":
        body = {"schema": SCHEMA, "command": cfg.command}
        body.update(payload if isinstance(payload, dict) else {"data": payload})
        return json.dumps(body, indent=2) + "\n"
    if cfg.format == "dot":
        if not dot:
            raise UsageError(f"{cfg.command} has no DOT output" +
                             ("; add --hasse or --flip-graph" if cfg.command == "mar" else ""))
        return dot
    return text + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        if cfg.command == "verify" and cfg.n is not None:
            raise UsageError("verify takes --max-n, not -n")
        payload, text, dot, ok = COMMANDS[cfg.command](cfg)
        rendered = render(cfg, payload, text, dot)
    except (UsageError, QuiverError, MarDomainError, NonMutableError) as exc:
        print(f"{parser.prog} {cfg.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
