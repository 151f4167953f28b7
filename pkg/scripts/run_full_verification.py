#!/usr/bin/env python3
"""Run the whole identity suite over every field and summarize the outcome.

Writes one JSON report per field and prints a per-check table.  A nonzero
exit status means at least one non-skipped check failed somewhere.
"""

import argparse
import json
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from crossratio.verify import run_suite

DEFAULT_FIELDS = ["rational", "gf:5", "gf:101", "quaternion"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fields", nargs="*", default=DEFAULT_FIELDS)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--out-dir", default="verification_reports")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    all_passed = True
    for name in args.fields:
        started = time.time()
        report = run_suite(name, seed=args.seed, samples=args.samples)
        elapsed = time.time() - started
        all_passed &= report["passed"]

        target = out_dir / f"{name.replace(':', '_')}.json"
        target.write_text(json.dumps(report, indent=2))

        print(f"== {name}  ({elapsed:.1f}s)  passed={report['passed']}")
        for record in report["checks"]:
            if record["skipped"]:
                print(f"   SKIP {record['name']:36s} {record['reason']}")
            else:
                state = "pass" if record["passed"] else "FAIL"
                print(
                    f"   {state} {record['name']:36s} "
                    f"{record['strategy']:10s} n={record['samples_run']:<6d} "
                    f"failures={record['failures']}"
                )
        print(f"   report -> {target}")
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
