"""Ratio and cross-ratio calculus for collinear points over a skew field.

Points of the line are identified with elements of the field.  The 2-point
ratio is r(A:B) = B^-1 * A, the 3-point ratio is r(A,B;C) = (B-C)^-1 (A-C),
and the cross-ratio of four points is the product

    c_r(A,B;C,D) = [(A-D)^-1 (B-D)] * [(B-C)^-1 (A-C)],

kept in exactly this factor order: in a noncommutative field any other
arrangement is a different point.  The codomain is the line extended by a
single point at infinity, written ``inf``, which absorbs the 0^-1 cases
arising when two of the four arguments coincide.
"""

from __future__ import annotations

from .fields import DivisionByZeroError, Element, Field, FieldMismatchError


class CrossRatioArgumentError(ValueError):
    """Argument tuple outside the cross-ratio's domain."""


class InvalidRatioPointError(ValueError):
    """A ratio value of 0 or 1 admits no nondegenerate fourth point."""


class InfiniteSolutionError(ValueError):
    """The unique fourth point exists only at infinity."""


class ExtendedPoint:
    """A field element or the point at infinity, tagged with its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: Element | None):
        self.field = field
        self.value = value  # None encodes infinity

    @classmethod
    def finite(cls, x: Element) -> "ExtendedPoint":
        return cls(x.field, x)

    @classmethod
    def infinity(cls, field: Field) -> "ExtendedPoint":
        return cls(field, None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def inv(self) -> "ExtendedPoint":
        """Inverse with the conventions 0^-1 = inf and inf^-1 = 0."""
        if self.is_infinity:
            return ExtendedPoint.finite(self.field.zero)
        if self.value.is_zero:
            return ExtendedPoint.infinity(self.field)
        return ExtendedPoint.finite(self.value.inv())

    def __neg__(self) -> "ExtendedPoint":
        if self.is_infinity:
            return self
        return ExtendedPoint.finite(-self.value)

    def __eq__(self, other):
        if isinstance(other, ExtendedPoint):
            return self.field == other.field and self.value == other.value
        if isinstance(other, Element):
            return not self.is_infinity and self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return "inf" if self.is_infinity else str(self.value)

    def __repr__(self):
        return f"<{self.field}: {self}>"


def _as_extended(x: Element | ExtendedPoint) -> ExtendedPoint:
    if isinstance(x, ExtendedPoint):
        return x
    if isinstance(x, Element):
        return ExtendedPoint.finite(x)
    raise TypeError(f"expected an element or extended point, got {type(x).__name__}")


def _same_field(points: tuple[ExtendedPoint, ...]) -> Field:
    field = points[0].field
    for p in points[1:]:
        if p.field != field:
            raise FieldMismatchError(f"mixing elements of {field} and {p.field}")
    return field


def ratio2(a: Element, b: Element) -> Element:
    """2-point ratio r(A:B) = B^-1 * A; requires B != 0."""
    if b.is_zero:
        raise DivisionByZeroError("ratio of two points needs a nonzero second point")
    return b.inv() * a


def ratio2_swapped(a: Element, b: Element) -> Element:
    """r(B:A), the swapped companion of ratio2 (equals its inverse)."""
    return ratio2(b, a)


def ratio3(a: Element, b: Element, c: Element) -> Element:
    """3-point ratio r(A,B;C) = (B-C)^-1 (A-C); requires B != C."""
    if b == c:
        raise DivisionByZeroError("ratio of three points needs B != C")
    return (b - c).inv() * (a - c)


def ratio3_swapped(a: Element, b: Element, c: Element) -> Element:
    """r(B,A;C), the swapped companion of ratio3 (equals its inverse)."""
    return ratio3(b, a, c)


def cross_ratio(
    a: Element | ExtendedPoint,
    b: Element | ExtendedPoint,
    c: Element | ExtendedPoint,
    d: Element | ExtendedPoint,
) -> ExtendedPoint:
    """Cross-ratio c_r(A,B;C,D) of four collinear points, at most one infinite.

    Case order: a single infinite argument selects its reduced formula; then
    a coincidence between two arguments selects the fixed degenerate value
    (A=B -> 1, A=C -> 0, A=D -> inf, B=C -> inf, B=D -> 0, C=D -> 1); only a
    tuple of four distinct finite points reaches the defining product.
    Three equal arguments, or two infinite ones, are rejected.
    """
    points = tuple(_as_extended(x) for x in (a, b, c, d))
    field = _same_field(points)

    infinite = [i for i, p in enumerate(points) if p.is_infinity]
    if len(infinite) > 1:
        raise CrossRatioArgumentError("at most one cross-ratio argument may be infinite")

    finite = [p.value for p in points if not p.is_infinity]
    if max(finite.count(v) for v in finite) >= 3:
        raise CrossRatioArgumentError("no three cross-ratio arguments may coincide")

    if infinite:
        ea, eb, ec, ed = (p.value for p in points)
        if infinite[0] == 0:
            num, den = eb - ed, eb - ec  # c_r(inf,B;C,D) = (B-D)(B-C)^-1
        elif infinite[0] == 1:
            den, num = ea - ed, ea - ec  # c_r(A,inf;C,D) = (A-D)^-1(A-C)
        elif infinite[0] == 2:
            den, num = ea - ed, eb - ed  # c_r(A,B;inf,D) = (A-D)^-1(B-D)
        else:
            den, num = eb - ec, ea - ec  # c_r(A,B;C,inf) = (B-C)^-1(A-C)
        if den.is_zero:
            return ExtendedPoint.infinity(field)  # 0^-1 = inf convention
        if infinite[0] == 0:
            return ExtendedPoint.finite(num * den.inv())
        return ExtendedPoint.finite(den.inv() * num)

    ea, eb, ec, ed = (p.value for p in points)
    if ea == eb or ec == ed:
        return ExtendedPoint.finite(field.one)
    if ea == ec or eb == ed:
        return ExtendedPoint.finite(field.zero)
    if ea == ed or eb == ec:
        return ExtendedPoint.infinity(field)
    value = ((ea - ed).inv() * (eb - ed)) * ((eb - ec).inv() * (ea - ec))
    return ExtendedPoint.finite(value)


def cross_ratio_alt(a: Element, b: Element, c: Element, d: Element) -> Element:
    """Inverse-difference form of the cross-ratio, for distinct finite points.

    Evaluates [(A-B)^-1 - (A-D)^-1] * [(A-B)^-1 - (A-C)^-1]^-1, which agrees
    with cross_ratio on every tuple of four pairwise distinct points.
    """
    if len({a, b, c, d}) != 4:
        raise CrossRatioArgumentError("inverse-difference form needs four distinct points")
    ab = (a - b).inv()
    return (ab - (a - d).inv()) * (ab - (a - c).inv()).inv()


def solve_fourth_point(r: Element, a: Element, b: Element, c: Element) -> Element:
    """The unique finite D with cross_ratio(A,B;C,D) = R.

    Requires R outside {0, 1} and A, B, C pairwise distinct.  Writing
    S = R * r(A,B;C)^-1, the defining relation r(B,A;D) = S unwinds to
    D = (A*S - B) * (S - 1)^-1; S = 1 means the solution escaped to
    infinity and raises InfiniteSolutionError.
    """
    if r.is_zero or r == r.field.one:
        raise InvalidRatioPointError("the target ratio value must differ from 0 and 1")
    if len({a, b, c}) != 3:
        raise CrossRatioArgumentError("the three given points must be pairwise distinct")
    s = r * ratio3(a, b, c).inv()
    if s == s.field.one:
        raise InfiniteSolutionError("the fourth point for this value lies at infinity")
    return (a * s - b) * (s - s.field.one).inv()


def negate_all(a, b, c, d):
    """Componentwise negation of a 4-tuple; infinity is a fixed point."""
    return (-a, -b, -c, -d)


def invert_all(a: Element, b: Element, c: Element, d: Element):
    """Componentwise inverse of four finite nonzero points."""
    return (a.inv(), b.inv(), c.inv(), d.inv())
