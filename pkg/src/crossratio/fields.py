"""Exact arithmetic in three concrete skew fields behind one element type.

Supported fields: the rationals, prime fields GF(p), and the rational
quaternions (a genuinely noncommutative division ring).  All arithmetic is
arbitrary-precision and exact; floating point never appears.  Elements carry
a reference to their field instance and refuse to combine across fields.

The module also owns the element literal grammar shared with the CLI:

    rational   := '-'? digits ('/' digits)?
    gfp        := digits                       (reduced mod p from context)
    quaternion := term (('+'|'-') term)*
    term       := rational unit? | unit ;  unit := 'i' | 'j' | 'k'

Whitespace is ignored.  ``format_element(parse_element(field, s))`` is the
canonical spelling of ``s``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

# Bound on random numerators/denominators: keeps bignum growth desk-scale.
RANDOM_COEFF_BOUND = 1000


class FieldMismatchError(ValueError):
    """Binary operation applied to elements of different field instances."""


class DivisionByZeroError(ZeroDivisionError):
    """Multiplicative inverse of the zero element was requested."""


class Element:
    """One exact element of a skew field, tagged with its field instance."""

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        self.field = field
        self.value = value

    @property
    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def inv(self) -> "Element":
        """Multiplicative inverse; raises DivisionByZeroError on zero."""
        if self.is_zero:
            raise DivisionByZeroError(f"cannot invert zero in {self.field}")
        return Element(self.field, self.field._inv(self.value))

    def _check(self, other) -> "Element":
        if not isinstance(other, Element):
            raise TypeError(f"expected a field element, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"mixing elements of {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Element(self.field, self.field._add(self.value, other.value))

    def __sub__(self, other):
        other = self._check(other)
        return Element(self.field, self.field._sub(self.value, other.value))

    def __neg__(self):
        return Element(self.field, self.field._neg(self.value))

    def __mul__(self, other):
        other = self._check(other)
        return Element(self.field, self.field._mul(self.value, other.value))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field._format(self.value)

    def __repr__(self):
        return f"<{self.field}: {self.field._format(self.value)}>"


class Field:
    """A concrete skew field instance.  Subclasses define the payload ops."""

    name: str
    commutative: bool

    @property
    def zero(self) -> Element:
        return Element(self, self._zero())

    @property
    def one(self) -> Element:
        return Element(self, self._one())

    def element(self, raw) -> Element:
        """Coerce an int, Fraction, literal string, or payload to an Element."""
        if isinstance(raw, Element):
            if raw.field != self:
                raise FieldMismatchError(f"element of {raw.field} is not in {self}")
            return raw
        if isinstance(raw, str):
            return self.parse(raw)
        return Element(self, self._coerce(raw))

    def parse(self, text: str) -> Element:
        return Element(self, self._parse(re.sub(r"\s+", "", text)))

    def random_element(self, rng, nonzero: bool = False) -> Element:
        while True:
            value = self._random(rng)
            if not (nonzero and self._is_zero(value)):
                return Element(self, value)

    def basis(self) -> list[Element]:
        """Spanning elements whose centralizer determines the center."""
        return [self.one]

    def is_central(self, x: Element) -> bool:
        """Whether x commutes with every element of the field."""
        raise NotImplementedError

    def __str__(self):
        return self.name

    def __repr__(self):
        return self.name


class RationalField(Field):
    """The field of rationals, stored as reduced arbitrary-precision fractions."""

    name = "rational"
    commutative = True

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def _coerce(self, raw):
        if isinstance(raw, (int, Fraction)):
            return Fraction(raw)
        raise TypeError(f"cannot make a rational from {type(raw).__name__}")

    def _is_zero(self, a):
        return a == 0

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _random(self, rng):
        return Fraction(
            rng.randint(-RANDOM_COEFF_BOUND, RANDOM_COEFF_BOUND),
            rng.randint(1, RANDOM_COEFF_BOUND),
        )

    def _format(self, a):
        return str(a)

    def _parse(self, text):
        return _parse_rational(text)

    def is_central(self, x):
        return True

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.name)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


class GaloisField(Field):
    """Prime field GF(p); residues in [0, p).  Mixing moduli is an error."""

    commutative = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"GF modulus must be prime, got {p}")
        self.p = p
        self.name = f"gf:{p}"

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _coerce(self, raw):
        if isinstance(raw, int):
            return raw % self.p
        raise TypeError(f"cannot make a GF({self.p}) element from {type(raw).__name__}")

    def _is_zero(self, a):
        return a == 0

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _random(self, rng):
        return rng.randrange(self.p)

    def _format(self, a):
        return str(a)

    def _parse(self, text):
        if not text.isdigit():
            raise ValueError(f"invalid GF({self.p}) literal: {text!r}")
        return int(text) % self.p

    def elements(self) -> list[Element]:
        return [Element(self, r) for r in range(self.p)]

    def is_central(self, x):
        return True

    def __eq__(self, other):
        return isinstance(other, GaloisField) and other.p == self.p

    def __hash__(self):
        return hash((GaloisField, self.p))


class QuaternionField(Field):
    """Rational quaternions a + bi + cj + dk: a noncommutative division ring.

    Payload is a 4-tuple of Fractions.  The norm a^2+b^2+c^2+d^2 vanishes
    only at zero (sums of rational squares), which is what makes every
    nonzero element invertible.
    """

    name = "quaternion"
    commutative = False

    def _zero(self):
        z = Fraction(0)
        return (z, z, z, z)

    def _one(self):
        return (Fraction(1), Fraction(0), Fraction(0), Fraction(0))

    def _coerce(self, raw):
        if isinstance(raw, (int, Fraction)):
            return (Fraction(raw), Fraction(0), Fraction(0), Fraction(0))
        if isinstance(raw, tuple) and len(raw) == 4:
            return tuple(Fraction(part) for part in raw)
        raise TypeError(f"cannot make a quaternion from {type(raw).__name__}")

    def _is_zero(self, q):
        return all(part == 0 for part in q)

    def _add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def _sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def _neg(self, x):
        return tuple(-a for a in x)

    def _mul(self, x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def _inv(self, q):
        n = self._norm(q)
        a, b, c, d = q
        return (a / n, -b / n, -c / n, -d / n)

    @staticmethod
    def _norm(q):
        a, b, c, d = q
        return a * a + b * b + c * c + d * d

    def norm(self, x: Element) -> Fraction:
        """Quaternion norm a^2+b^2+c^2+d^2 as an exact Fraction."""
        return self._norm(x.value)

    def conjugate(self, x: Element) -> Element:
        a, b, c, d = x.value
        return Element(self, (a, -b, -c, -d))

    def _random(self, rng):
        rat = RationalField()._random
        return tuple(rat(rng) for _ in range(4))

    def basis(self):
        units = [self.one]
        for pos in (1, 2, 3):
            parts = [Fraction(0)] * 4
            parts[pos] = Fraction(1)
            units.append(Element(self, tuple(parts)))
        return units

    def is_central(self, x):
        # Scalars are exactly the quaternions commuting with i, j and k.
        _, b, c, d = x.value
        return b == 0 and c == 0 and d == 0

    def _format(self, q):
        names = ("", "i", "j", "k")
        terms = []
        for coeff, unit in zip(q, names):
            if coeff == 0:
                continue
            if unit and abs(coeff) == 1:
                body = unit if coeff > 0 else "-" + unit
            else:
                body = str(coeff) + unit
            if terms and not body.startswith("-"):
                terms.append("+" + body)
            else:
                terms.append(body)
        return "".join(terms) or "0"

    def _parse(self, text):
        return _parse_quaternion(text)

    def __eq__(self, other):
        return isinstance(other, QuaternionField)

    def __hash__(self):
        return hash(self.name)


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")
_QUAT_TERM_RE = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)([ijk])?|([ijk]))")


def _parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"invalid rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in literal: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def _parse_quaternion(text: str):
    if not text:
        raise ValueError("empty quaternion literal")
    parts = [Fraction(0)] * 4
    slot = {"": 0, "i": 1, "j": 2, "k": 3}
    pos = 0
    first = True
    while pos < len(text):
        m = _QUAT_TERM_RE.match(text, pos)
        if not m or (not first and not m.group(1)):
            raise ValueError(f"invalid quaternion literal: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(4) is not None:
            coeff, unit = Fraction(1), m.group(4)
        else:
            coeff = _parse_rational(m.group(2))
            unit = m.group(3) or ""
        parts[slot[unit]] += sign * coeff
        pos = m.end()
        first = False
    return tuple(parts)


def parse_element(field: Field, text: str) -> Element:
    """Parse an element literal in the grammar above, in the field's context."""
    return field.parse(text)


def format_element(x: Element) -> str:
    """Canonical literal for an element; inverse of parse_element."""
    return str(x)


def field_by_name(name: str) -> Field:
    """Resolve a field selector: 'rational', 'gf:P' (P prime), or 'quaternion'."""
    if name == "rational":
        return RationalField()
    if name == "quaternion":
        return QuaternionField()
    if name.startswith("gf:"):
        body = name[3:]
        if not body.isdigit():
            raise ValueError(f"invalid GF modulus: {body!r}")
        return GaloisField(int(body))
    raise ValueError(f"unknown field selector: {name!r}")


def commutes(x: Element, y: Element) -> bool:
    """Whether x*y == y*x."""
    if x.field != y.field:
        raise FieldMismatchError(f"mixing elements of {x.field} and {y.field}")
    return x * y == y * x


def is_central(x: Element) -> bool:
    """Whether x lies in the center of its field."""
    return x.field.is_central(x)


def conjugate_by(p: Element, q: Element) -> Element:
    """The conjugate q^-1 * p * q; q must be nonzero."""
    return q.inv() * p * q
