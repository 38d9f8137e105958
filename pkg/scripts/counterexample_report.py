"""Dump the D4 and gentle reports as JSON and print a one-line summary per fact."""
import argparse
import json

from diamond_exact.oracle.counterexamples import verify_d4_example, verify_gentle_example


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--output", help="write both reports to this JSON file")
    args = ap.parse_args()
    reports = [verify_d4_example(), verify_gentle_example()]
    for rep in reports:
        print(f"{rep['example']}: {'PASS' if rep['passed'] else 'FAIL'}")
        for c in rep["checks"]:
            print(f"  {'ok  ' if c['passed'] else 'FAIL'} {c['check']}")
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(reports, fh, indent=2)
    raise SystemExit(0 if all(r["passed"] for r in reports) else 1)


if __name__ == "__main__":
    main()
