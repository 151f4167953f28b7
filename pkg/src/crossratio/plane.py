"""Incidence geometry of the coordinatized affine plane over a skew field.

The plane is K^2 for a skew field K.  Lines are vertical, {(c, y)}, or
sloped, {(x, x*m + b)}, with the slope multiplying x on the RIGHT; over a
noncommutative field the two possible conventions give different
coordinatizations, and every formula here is tied to this one.  On a fixed
axis line with chosen base points O (zero) and I (one), the classical ruler
constructions add and multiply axis points using only parallels and
intersections, and the results agree with the field arithmetic of the
coordinates.  The module also ships a checker and a seeded generator for
Desargues configurations (two triangles in parallel or central perspective
with two pairs of parallel sides).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .fields import DivisionByZeroError, Element, Field, FieldMismatchError


class IdenticalPointsError(ValueError):
    """Two points required to be distinct coincide."""


class IdenticalLinesError(ValueError):
    """Two lines required to be distinct coincide."""


class NotOnLineError(ValueError):
    """A point required to lie on a line does not."""


class AuxiliaryPointError(ValueError):
    """The construction's auxiliary point lies on the axis."""


class DegenerateConfigurationError(ValueError):
    """A construction step needed an intersection that does not exist."""


class HypothesisViolationError(DegenerateConfigurationError):
    """A Desargues configuration violates a named hypothesis clause."""


class GenerationFailureError(RuntimeError):
    """The configuration generator exhausted its retry budget."""


@dataclass(frozen=True)
class PlanePoint:
    """A point of K^2; both coordinates must come from the same field."""

    x: Element
    y: Element

    def __post_init__(self):
        if self.x.field != self.y.field:
            raise FieldMismatchError("point coordinates must share a field")

    @property
    def field(self) -> Field:
        return self.x.field

    def __str__(self):
        return f"{self.x},{self.y}"

    def __repr__(self):
        return f"PlanePoint({self.x}, {self.y})"


def point(field: Field, x, y) -> PlanePoint:
    """Build a PlanePoint coercing raw coordinate values into the field."""
    return PlanePoint(field.element(x), field.element(y))


def _shift(p: PlanePoint, dx: Element, dy: Element) -> PlanePoint:
    return PlanePoint(p.x + dx, p.y + dy)


class PlaneLine:
    """A line of the plane: x = intercept, or y = x*slope + intercept."""

    __slots__ = ("slope", "intercept")

    def __init__(self, slope: Element | None, intercept: Element):
        self.slope = slope  # None encodes a vertical line
        self.intercept = intercept

    @classmethod
    def vertical(cls, c: Element) -> "PlaneLine":
        return cls(None, c)

    @classmethod
    def sloped(cls, m: Element, b: Element) -> "PlaneLine":
        return cls(m, b)

    @property
    def is_vertical(self) -> bool:
        return self.slope is None

    @property
    def field(self) -> Field:
        return self.intercept.field

    def contains(self, p: PlanePoint) -> bool:
        if self.is_vertical:
            return p.x == self.intercept
        return p.y == p.x * self.slope + self.intercept

    def __eq__(self, other):
        if not isinstance(other, PlaneLine):
            return NotImplemented
        return self.slope == other.slope and self.intercept == other.intercept

    def __hash__(self):
        return hash((self.slope, self.intercept))

    def __str__(self):
        if self.is_vertical:
            return f"x = {self.intercept}"
        return f"y = x*({self.slope}) + ({self.intercept})"

    def __repr__(self):
        return f"PlaneLine<{self}>"


def line_through(p: PlanePoint, q: PlanePoint) -> PlaneLine:
    """The unique line incident with two distinct points."""
    if p == q:
        raise IdenticalPointsError("no unique line through a repeated point")
    if p.x == q.x:
        return PlaneLine.vertical(p.x)
    m = (q.x - p.x).inv() * (q.y - p.y)
    return PlaneLine.sloped(m, p.y - p.x * m)


def parallel_through(l: PlaneLine, p: PlanePoint) -> PlaneLine:
    """The unique line through p with the same direction as l."""
    if l.is_vertical:
        return PlaneLine.vertical(p.x)
    return PlaneLine.sloped(l.slope, p.y - p.x * l.slope)


def parallel(l1: PlaneLine, l2: PlaneLine) -> bool:
    """Whether two lines have the same direction (equal lines included)."""
    return l1.slope == l2.slope


def intersect(l1: PlaneLine, l2: PlaneLine) -> PlanePoint | None:
    """The common point of two distinct lines, or None when parallel."""
    if l1 == l2:
        raise IdenticalLinesError("intersection of a line with itself is the line")
    if parallel(l1, l2):
        return None
    if l1.is_vertical:
        x = l1.intercept
        return PlanePoint(x, x * l2.slope + l2.intercept)
    if l2.is_vertical:
        x = l2.intercept
        return PlanePoint(x, x * l1.slope + l1.intercept)
    # x*m1 + b1 = x*m2 + b2 solved by the right inverse of (m1 - m2)
    x = (l2.intercept - l1.intercept) * (l1.slope - l2.slope).inv()
    return PlanePoint(x, x * l1.slope + l1.intercept)


def collinear(p: PlanePoint, q: PlanePoint, r: PlanePoint) -> bool:
    if p == q or p == r or q == r:
        return True
    return line_through(p, q).contains(r)


def point_at(o: PlanePoint, i: PlanePoint, t: Element) -> PlanePoint:
    """The point of the axis through o and i with coordinate t (o -> 0, i -> 1)."""
    if o == i:
        raise IdenticalPointsError("the base points of an axis must differ")
    return PlanePoint(o.x + t * (i.x - o.x), o.y + t * (i.y - o.y))


def coordinatize(o: PlanePoint, i: PlanePoint, p: PlanePoint) -> Element:
    """The coordinate of an axis point p under the o -> 0, i -> 1 chart."""
    if o == i:
        raise IdenticalPointsError("the base points of an axis must differ")
    if not line_through(o, i).contains(p):
        raise NotOnLineError(f"{p} is not on the axis through {o} and {i}")
    if o.x == i.x:
        return (p.y - o.y) * (i.y - o.y).inv()
    return (p.x - o.x) * (i.x - o.x).inv()


@dataclass
class Construction:
    """A ruler construction trace: labeled points, labeled lines, result."""

    kind: str
    points: dict[str, PlanePoint]
    lines: list[tuple[str, PlaneLine]] = dc_field(default_factory=list)
    result: PlanePoint | None = None
    value: Element | None = None


def _axis_setup(o, i, a, b, aux) -> PlaneLine:
    axis = line_through(o, i)
    if not axis.contains(a):
        raise NotOnLineError("operand A must lie on the axis")
    if not axis.contains(b):
        raise NotOnLineError("operand B must lie on the axis")
    if axis.contains(aux):
        raise AuxiliaryPointError("the auxiliary point must not lie on the axis")
    return axis


def _meet(l1: PlaneLine, l2: PlaneLine, stage: str) -> PlanePoint:
    got = intersect(l1, l2)
    if got is None:
        raise DegenerateConfigurationError(f"parallel lines where {stage} needs a point")
    return got


def construct_sum(o, i, a, b, aux) -> Construction:
    """Ruler construction of the axis point with coordinate coord(a)+coord(b).

    Steps: P1 is the intersection of the axis-parallel through the auxiliary
    point with the parallel to line O-aux through A; the result C is where
    the parallel to line B-aux through P1 meets the axis again.
    """
    axis = _axis_setup(o, i, a, b, aux)
    base = line_through(o, aux)
    through_aux = parallel_through(axis, aux)
    through_a = parallel_through(base, a)
    p1 = _meet(through_aux, through_a, "locating P1")
    transfer = line_through(b, aux)
    through_p1 = parallel_through(transfer, p1)
    c = _meet(through_p1, axis, "locating the sum")
    return Construction(
        kind="add",
        points={"O": o, "I": i, "A": a, "B": b, "B1": aux, "P1": p1, "C": c},
        lines=[
            ("axis", axis),
            ("O-B1", base),
            ("axis parallel through B1", through_aux),
            ("O-B1 parallel through A", through_a),
            ("B-B1", transfer),
            ("B-B1 parallel through P1", through_p1),
        ],
        result=c,
        value=coordinatize(o, i, c),
    )


def construct_product(o, i, a, b, aux) -> Construction:
    """Ruler construction of the axis point with coordinate coord(a)*coord(b).

    Steps: P1 is the intersection of the parallel to line I-aux through A
    with line O-aux; the result C is where the parallel to line B-aux
    through P1 meets the axis.
    """
    axis = _axis_setup(o, i, a, b, aux)
    unit = line_through(i, aux)
    ray = line_through(o, aux)
    through_a = parallel_through(unit, a)
    p1 = _meet(through_a, ray, "locating P1")
    transfer = line_through(b, aux)
    through_p1 = parallel_through(transfer, p1)
    c = _meet(through_p1, axis, "locating the product")
    return Construction(
        kind="mul",
        points={"O": o, "I": i, "A": a, "B": b, "B1": aux, "P1": p1, "C": c},
        lines=[
            ("axis", axis),
            ("I-B1", unit),
            ("O-B1", ray),
            ("I-B1 parallel through A", through_a),
            ("B-B1", transfer),
            ("B-B1 parallel through P1", through_p1),
        ],
        result=c,
        value=coordinatize(o, i, c),
    )


def geometric_add(o, i, a, b, aux) -> PlanePoint:
    """The axis point representing the sum of a and b (see construct_sum)."""
    return construct_sum(o, i, a, b, aux).result


def geometric_mul(o, i, a, b, aux) -> PlanePoint:
    """The axis point representing the product of a and b, left factor first."""
    return construct_product(o, i, a, b, aux).result


def default_aux(o: PlanePoint, i: PlanePoint) -> PlanePoint:
    """A deterministic auxiliary point off the axis through o and i."""
    axis = line_through(o, i)
    field = o.field
    for dx, dy in ((field.zero, field.one), (field.one, field.zero)):
        candidate = _shift(o, dx, dy)
        if not axis.contains(candidate):
            return candidate
    raise DegenerateConfigurationError("no off-axis point found")  # unreachable


@dataclass(frozen=True)
class DesarguesConfig:
    """Two triangles in parallel or central perspective.

    center is None for the parallel (translation-like) form and the common
    point of the three vertex-joining lines for the central form.
    """

    a: PlanePoint
    b: PlanePoint
    c: PlanePoint
    a_prime: PlanePoint
    b_prime: PlanePoint
    c_prime: PlanePoint
    center: PlanePoint | None = None

    @property
    def mode(self) -> str:
        return "parallel" if self.center is None else "concurrent"

    def canonical(self) -> str:
        parts = [
            f"A={self.a}", f"B={self.b}", f"C={self.c}",
            f"A'={self.a_prime}", f"B'={self.b_prime}", f"C'={self.c_prime}",
        ]
        parts.append("mode=parallel" if self.center is None else f"center={self.center}")
        return " ".join(parts)


def validate_desargues_config(cfg: DesarguesConfig) -> None:
    """Check every hypothesis clause, raising on the first violation."""

    def fail(clause: str):
        raise HypothesisViolationError(f"hypothesis violated: {clause}")

    a, b, c = cfg.a, cfg.b, cfg.c
    a2, b2, c2 = cfg.a_prime, cfg.b_prime, cfg.c_prime
    if len({a, b, c}) != 3:
        fail("vertices A, B, C must be pairwise distinct")
    if len({a2, b2, c2}) != 3:
        fail("vertices A', B', C' must be pairwise distinct")
    if a == a2 or b == b2 or c == c2:
        fail("corresponding vertices must be distinct (A!=A', B!=B', C!=C')")

    join_a, join_b, join_c = line_through(a, a2), line_through(b, b2), line_through(c, c2)
    side_ac, side_ac2 = line_through(a, c), line_through(a2, c2)
    five = [join_a, join_b, join_c, side_ac, side_ac2]
    if len(set(five)) != 5:
        fail("the lines AA', BB', CC', AC, A'C' must be pairwise distinct")

    if cfg.center is None:
        if not (parallel(join_a, join_b) and parallel(join_b, join_c)):
            fail("the lines AA', BB', CC' must be mutually parallel")
    else:
        for join in (join_a, join_b, join_c):
            if not join.contains(cfg.center):
                fail("the lines AA', BB', CC' must pass through the center")

    side_ab, side_ab2 = line_through(a, b), line_through(a2, b2)
    if not parallel(side_ab, side_ab2):
        fail("sides AB and A'B' must be parallel")
    if side_ab == side_ab2:
        fail("sides AB and A'B' must be distinct lines")
    side_bc, side_bc2 = line_through(b, c), line_through(b2, c2)
    if not parallel(side_bc, side_bc2):
        fail("sides BC and B'C' must be parallel")
    if side_bc == side_bc2:
        fail("sides BC and B'C' must be distinct lines")


def check_desargues(cfg: DesarguesConfig) -> bool:
    """Validate the hypotheses, then test the conclusion AC parallel to A'C'."""
    validate_desargues_config(cfg)
    return parallel(line_through(cfg.a, cfg.c), line_through(cfg.a_prime, cfg.c_prime))


def random_point(field: Field, rng: random.Random) -> PlanePoint:
    return PlanePoint(field.random_element(rng), field.random_element(rng))


def _draw_config(field: Field, rng: random.Random, mode: str) -> DesarguesConfig | None:
    a, b, c = (random_point(field, rng) for _ in range(3))
    if collinear(a, b, c):
        return None
    side_ab, side_bc = line_through(a, b), line_through(b, c)
    if mode == "parallel":
        dx, dy = field.random_element(rng), field.random_element(rng)
        if dx.is_zero and dy.is_zero:
            return None
        a2 = _shift(a, dx, dy)
        join = line_through(a, a2)
        b2 = intersect(parallel_through(side_ab, a2), parallel_through(join, b))
        if b2 is None:
            return None
        c2 = intersect(parallel_through(side_bc, b2), parallel_through(join, c))
        if c2 is None:
            return None
        return DesarguesConfig(a, b, c, a2, b2, c2, center=None)
    p = random_point(field, rng)
    alpha = field.random_element(rng)
    if alpha.is_zero or alpha == field.one or p in (a, b, c):
        return None
    a2 = PlanePoint(p.x + alpha * (a.x - p.x), p.y + alpha * (a.y - p.y))
    b2 = intersect(parallel_through(side_ab, a2), line_through(p, b))
    if b2 is None:
        return None
    c2 = intersect(parallel_through(side_bc, b2), line_through(p, c))
    if c2 is None:
        return None
    return DesarguesConfig(a, b, c, a2, b2, c2, center=p)


GENERATION_RETRIES = 100


def generate_desargues_config(field: Field, seed: int | str, mode: str = "parallel") -> DesarguesConfig:
    """Seeded random configuration satisfying every hypothesis clause.

    Rejection-samples up to GENERATION_RETRIES times; the stream depends
    only on (field name, mode, seed).
    """
    if mode not in ("parallel", "concurrent"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(f"desargues:{field}:{mode}:{seed}")
    for _ in range(GENERATION_RETRIES):
        try:
            cfg = _draw_config(field, rng, mode)
        except (IdenticalPointsError, IdenticalLinesError, DivisionByZeroError):
            continue
        if cfg is None:
            continue
        try:
            validate_desargues_config(cfg)
        except HypothesisViolationError:
            continue
        return cfg
    raise GenerationFailureError(
        f"no valid {mode} configuration over {field} after {GENERATION_RETRIES} draws"
    )
