#!/usr/bin/env python3
"""Emit SVG figures of the ruler constructions for a worked example.

Draws the three-step sum and product constructions over the rational
plane and writes one SVG per operation.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from crossratio.fields import RationalField
from crossratio.plane import construct_product, construct_sum, point
from crossratio.svg import render_construction


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", default="2", help="coordinate of the first operand")
    parser.add_argument("--b", default="3", help="coordinate of the second operand")
    parser.add_argument("--out-dir", default="figures")
    args = parser.parse_args()

    field = RationalField()
    o, i = point(field, 0, 0), point(field, 1, 0)
    a = point(field, field.parse(args.a), 0)
    b = point(field, field.parse(args.b), 0)
    aux = point(field, 0, 1)

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for label, builder in (("sum", construct_sum), ("product", construct_product)):
        built = builder(o, i, a, b, aux)
        target = out_dir / f"{label}.svg"
        target.write_text(render_construction(built))
        print(f"{label}: C = {built.result} (coordinate {built.value}) -> {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
