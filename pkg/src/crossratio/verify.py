"""Seeded exact verification of the field, ratio, cross-ratio and plane laws.

Every check evaluates algebraic identities with exact arithmetic on inputs
drawn from a deterministic per-sample stream (seeded by "seed:check:index"),
so a report is reproducible from (field, seed, samples) alone.  Draws that
violate a check's preconditions are redrawn and counted, never evaluated.
A failing sample is recorded as a witness carrying the formatted inputs and
both sides of the identity; witness lists are capped, full failure counts
are not.  Most checks are universally quantified equalities; the
noncommutativity check is an existence search whose pass criterion is that
a witness IS found.  On small prime fields, checks with a registered
enumerator run exhaustively over all valid tuples instead of sampling.
"""

from __future__ import annotations

import datetime
import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .fields import (
    Element,
    Field,
    GaloisField,
    QuaternionField,
    commutes,
    field_by_name,
    is_central,
)
from .plane import (
    GenerationFailureError,
    check_desargues,
    coordinatize,
    generate_desargues_config,
    geometric_add,
    geometric_mul,
    intersect,
    line_through,
    parallel,
    parallel_through,
    point,
    point_at,
    random_point,
)
from .ratio import (
    ExtendedPoint,
    InfiniteSolutionError,
    cross_ratio,
    cross_ratio_alt,
    ratio2,
    ratio3,
    solve_fourth_point,
)

WITNESS_CAP = 10
REDRAW_CAP = 1000
EXHAUSTIVE_MAX_MODULUS = 7
EXHAUSTIVE_MAX_TUPLES = 10**6


class UnknownCheckError(ValueError):
    """Requested check name is not registered."""


@dataclass(frozen=True)
class CheckSpec:
    """One check run request: which identity, over which field, how hard."""

    name: str
    field: Field | str
    samples: int
    seed: int

    def resolved_field(self) -> Field:
        if isinstance(self.field, str):
            return field_by_name(self.field)
        return self.field


@dataclass(frozen=True)
class CheckDef:
    name: str
    description: str
    scope: str = "all"  # all | commutative | noncommutative | quaternion
    kind: str = "equality"  # equality | witness-search
    draw: Callable | None = None  # (field, rng) -> inputs tuple, or None to redraw
    evaluate: Callable | None = None  # (field, inputs) -> list of witness dicts
    enumerate_inputs: Callable[[Field], Iterator] | None = None
    arity: int = 0  # tuple-space exponent for the exhaustive bound
    runner: Callable | None = None  # custom: (field, seed, samples) -> record


CHECKS: dict[str, CheckDef] = {}


def _register(check: CheckDef) -> CheckDef:
    CHECKS[check.name] = check
    return check


def _witness(inputs: list[str], lhs, rhs) -> dict:
    return {"inputs": inputs, "lhs": str(lhs), "rhs": str(rhs)}


def _labeled(names: str, values) -> list[str]:
    return [f"{n}={v}" for n, v in zip(names, values)]


def _sample_rng(seed: int, name: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{name}:{index}")


def applicable(check: CheckDef, field: Field) -> tuple[bool, str | None]:
    if check.scope == "commutative" and not field.commutative:
        return False, "holds only over a commutative field"
    if check.scope == "noncommutative" and field.commutative:
        return False, "needs a noncommutative field"
    if check.scope == "quaternion" and not isinstance(field, QuaternionField):
        return False, "defined for quaternions only"
    return True, None


def _can_enumerate(check: CheckDef, field: Field) -> bool:
    return (
        check.enumerate_inputs is not None
        and isinstance(field, GaloisField)
        and field.p <= EXHAUSTIVE_MAX_MODULUS
        and field.p**check.arity <= EXHAUSTIVE_MAX_TUPLES
    )


def _draw_valid(check: CheckDef, field: Field, rng: random.Random):
    tries = 0
    while True:
        inputs = check.draw(field, rng)
        if inputs is not None:
            return inputs, tries
        tries += 1
        if tries >= REDRAW_CAP:
            raise RuntimeError(
                f"{check.name}: no precondition-satisfying draw over {field} "
                f"after {REDRAW_CAP} redraws"
            )


def _base_record(check: CheckDef, strategy: str) -> dict:
    return {
        "name": check.name,
        "kind": check.kind,
        "skipped": False,
        "strategy": strategy,
        "samples_run": 0,
        "redraws": 0,
        "passed": True,
        "failures": 0,
        "witnesses": [],
    }


def _run_sampled(check: CheckDef, field: Field, seed: int, samples: int) -> dict:
    record = _base_record(check, "sampled")
    for index in range(samples):
        rng = _sample_rng(seed, check.name, index)
        inputs, redraws = _draw_valid(check, field, rng)
        record["redraws"] += redraws
        fails = check.evaluate(field, inputs)
        record["samples_run"] += 1
        record["failures"] += len(fails)
        for witness in fails:
            if len(record["witnesses"]) < WITNESS_CAP:
                record["witnesses"].append(witness)
    record["passed"] = record["failures"] == 0
    return record


def _run_exhaustive(check: CheckDef, field: Field) -> dict:
    record = _base_record(check, "exhaustive")
    for inputs in check.enumerate_inputs(field):
        fails = check.evaluate(field, inputs)
        record["samples_run"] += 1
        record["failures"] += len(fails)
        for witness in fails:
            if len(record["witnesses"]) < WITNESS_CAP:
                record["witnesses"].append(witness)
    record["passed"] = record["failures"] == 0
    return record


def run_check(spec: CheckSpec, strategy: str = "auto") -> dict:
    """Run one named check; strategy is auto, sampled, or exhaustive."""
    if spec.name not in CHECKS:
        raise UnknownCheckError(f"unknown check: {spec.name!r}")
    if spec.samples < 1:
        raise ValueError("samples must be >= 1")
    check = CHECKS[spec.name]
    field = spec.resolved_field()
    if check.runner is not None:
        return check.runner(field, spec.seed, spec.samples)
    if strategy == "exhaustive" and not _can_enumerate(check, field):
        raise ValueError(f"{spec.name} cannot run exhaustively over {field}")
    if strategy == "exhaustive" or (strategy == "auto" and _can_enumerate(check, field)):
        return _run_exhaustive(check, field)
    return _run_sampled(check, field, spec.seed, spec.samples)


def run_suite(field: Field | str, seed: int, samples: int = 1000) -> dict:
    """Run every check applicable to the field; skips are recorded, not lost."""
    if isinstance(field, str):
        field = field_by_name(field)
    records = []
    for check in CHECKS.values():
        ok, reason = applicable(check, field)
        if not ok:
            records.append(
                {
                    "name": check.name,
                    "kind": check.kind,
                    "skipped": True,
                    "reason": reason,
                    "strategy": "none",
                    "samples_run": 0,
                    "redraws": 0,
                    "passed": None,
                    "failures": 0,
                    "witnesses": [],
                }
            )
            continue
        records.append(run_check(CheckSpec(check.name, field, samples, seed)))
    return {
        "field": field.name,
        "seed": seed,
        "samples": samples,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "passed": all(r["passed"] for r in records if not r["skipped"]),
        "checks": records,
    }


# ---------------------------------------------------------------- draws


def _draw_tuple(count: int, nonzero: bool = False, distinct: bool = False):
    def draw(field, rng):
        out = []
        for _ in range(count):
            x = field.random_element(rng, nonzero=nonzero)
            if distinct and x in out:
                return None
            out.append(x)
        return tuple(out)

    return draw


def _enum_tuples(count: int, nonzero: bool = False, distinct: bool = False):
    def enumerate_inputs(field):
        elems = field.elements()
        if nonzero:
            elems = [e for e in elems if not e.is_zero]
        if distinct:
            return itertools.permutations(elems, count)
        return itertools.product(elems, repeat=count)

    return enumerate_inputs


def _draw_scalar_int(rng, lo=-20, hi=20, nonzero=False):
    while True:
        k = rng.randint(lo, hi)
        if not (nonzero and k == 0):
            return k


# ---------------------------------------------------------------- field checks


def _eval_field_axioms(field, xs):
    x, y, z = xs
    tags = _labeled("xyz", xs)
    fails = []

    def law(tag, lhs, rhs):
        if lhs != rhs:
            fails.append(_witness([f"law={tag}"] + tags, lhs, rhs))

    law("add-associative", (x + y) + z, x + (y + z))
    law("add-commutative", x + y, y + x)
    law("add-identity", x + field.zero, x)
    law("add-inverse", x + (-x), field.zero)
    law("mul-associative", (x * y) * z, x * (y * z))
    law("mul-identity-left", field.one * x, x)
    law("mul-identity-right", x * field.one, x)
    law("left-distributive", x * (y + z), x * y + x * z)
    law("right-distributive", (x + y) * z, x * z + y * z)
    return fails


_register(
    CheckDef(
        name="field_axioms",
        description="ring axioms with two-sided distributivity and additive inverses",
        draw=_draw_tuple(3),
        evaluate=_eval_field_axioms,
        enumerate_inputs=_enum_tuples(3),
        arity=3,
    )
)


def _eval_inverse_laws(field, xs):
    x, y = xs
    tags = _labeled("xy", xs)
    fails = []

    def law(tag, lhs, rhs):
        if lhs != rhs:
            fails.append(_witness([f"law={tag}"] + tags, lhs, rhs))

    law("double-inverse", x.inv().inv(), x)
    law("right-inverse", x * x.inv(), field.one)
    law("left-inverse", x.inv() * x, field.one)
    law("product-inverse-antihomomorphism", (x * y).inv(), y.inv() * x.inv())
    return fails


_register(
    CheckDef(
        name="multiplicative_inverse_laws",
        description="x^-1 is two-sided, involutive, and reverses products",
        draw=_draw_tuple(2, nonzero=True),
        evaluate=_eval_inverse_laws,
        enumerate_inputs=_enum_tuples(2, nonzero=True),
        arity=2,
    )
)


def _eval_no_zero_divisors(field, xs):
    x, y = xs
    if (x * y).is_zero:
        return [_witness(_labeled("xy", xs), x * y, "nonzero product expected")]
    return []


_register(
    CheckDef(
        name="no_zero_divisors",
        description="products of nonzero elements are nonzero",
        draw=_draw_tuple(2, nonzero=True),
        evaluate=_eval_no_zero_divisors,
        enumerate_inputs=_enum_tuples(2, nonzero=True),
        arity=2,
    )
)


def _eval_difference_of_inverses(field, xs):
    x, y = xs
    lhs = x.inv() - y.inv()
    rhs = y.inv() * (y - x) * x.inv()
    if lhs != rhs:
        return [_witness(_labeled("xy", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="difference_of_inverses",
        description="x^-1 - y^-1 = y^-1 (y - x) x^-1 for nonzero x, y",
        draw=_draw_tuple(2, nonzero=True),
        evaluate=_eval_difference_of_inverses,
        enumerate_inputs=_enum_tuples(2, nonzero=True),
        arity=2,
    )
)


def _eval_norm_multiplicativity(field, xs):
    x, y = xs
    lhs = field.norm(x * y)
    rhs = field.norm(x) * field.norm(y)
    if lhs != rhs:
        return [_witness(_labeled("xy", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="norm_multiplicativity",
        description="quaternion norm is multiplicative over exact rationals",
        scope="quaternion",
        draw=_draw_tuple(2),
        evaluate=_eval_norm_multiplicativity,
    )
)


def _draw_center_membership(field, rng):
    x = field.random_element(rng)
    scalar = field.element(_draw_scalar_int(rng))
    probes = tuple(field.random_element(rng) for _ in range(50))
    return (x, scalar, probes)


def _eval_center_membership(field, inputs):
    x, scalar, probes = inputs
    fails = []
    for candidate, tag in ((x, "random"), (scalar, "scalar")):
        expected = all(commutes(candidate, s) for s in field.basis()) and all(
            commutes(candidate, s) for s in probes
        )
        got = is_central(candidate)
        if got != expected:
            fails.append(
                _witness([f"candidate({tag})={candidate}"], got, f"probe says {expected}")
            )
    return fails


_register(
    CheckDef(
        name="center_membership",
        description="is_central agrees with commuting against basis plus 50 probes",
        draw=_draw_center_membership,
        evaluate=_eval_center_membership,
    )
)


# ---------------------------------------------------------------- ratio checks


def _draw_ratio2_inputs(field, rng):
    return _draw_tuple(3, nonzero=True)(field, rng)


def _eval_ratio2_laws(field, xs):
    a, b, c = xs
    tags = _labeled("ABC", xs)
    fails = []

    def law(tag, lhs, rhs):
        if lhs != rhs:
            fails.append(_witness([f"law={tag}"] + tags, lhs, rhs))

    law("sum-splits", ratio2(a + b, c), ratio2(a, c) + ratio2(b, c))
    law("product-in-first-slot", ratio2(a * b, c), ratio2(a, c) * b)
    law("product-in-second-slot", ratio2(a, b * c), c.inv() * ratio2(a, b))
    law("inverse-swaps-arguments", ratio2(a, b).inv(), ratio2(b, a))
    for u, v, tag in ((a, b, "generic"), (b, b, "equal"), (-b, b, "negated")):
        symmetric = ratio2(u, v) == ratio2(v, u)
        trivial = u == v or u == -v
        if symmetric != trivial:
            fails.append(
                _witness(
                    [f"law=symmetry-iff-{tag}", f"A={u}", f"B={v}"],
                    f"symmetric={symmetric}",
                    f"A=+-B is {trivial}",
                )
            )
    return fails


_register(
    CheckDef(
        name="ratio2_laws",
        description="two-point ratio arithmetic laws and the symmetry criterion",
        draw=_draw_ratio2_inputs,
        evaluate=_eval_ratio2_laws,
        enumerate_inputs=_enum_tuples(3, nonzero=True),
        arity=3,
    )
)


def _eval_ratio3_laws(field, xs):
    a, b, c = xs
    tags = _labeled("ABC", xs)
    fails = []

    def law(tag, lhs, rhs):
        if lhs != rhs:
            fails.append(_witness([f"law={tag}"] + tags, lhs, rhs))

    law("negation-invariance", ratio3(-a, -b, -c), ratio3(a, b, c))
    law("inverse-swaps-arguments", ratio3(a, b, c).inv(), ratio3(b, a, c))
    law(
        "inverse-points-conjugation",
        ratio3(a.inv(), b.inv(), c.inv()),
        b * ratio3(a, b, c) * a.inv(),
    )
    return fails


_register(
    CheckDef(
        name="ratio3_laws",
        description="three-point ratio laws: negation, inversion, argument swap",
        draw=_draw_tuple(3, nonzero=True, distinct=True),
        evaluate=_eval_ratio3_laws,
        enumerate_inputs=_enum_tuples(3, nonzero=True, distinct=True),
        arity=3,
    )
)


def _eval_ratio3_inverse_commutative(field, xs):
    a, b, c = xs
    lhs = ratio3(a.inv(), b.inv(), c.inv())
    rhs = ratio3(a, b, c) * ratio3(b, a, field.zero)
    if lhs != rhs:
        return [_witness(_labeled("ABC", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="ratio3_inverse_commutative",
        description="commutative form of the inverse-points ratio law",
        scope="commutative",
        draw=_draw_tuple(3, nonzero=True, distinct=True),
        evaluate=_eval_ratio3_inverse_commutative,
        enumerate_inputs=_enum_tuples(3, nonzero=True, distinct=True),
        arity=3,
    )
)


def _draw_bijectivity(field, rng):
    b = field.random_element(rng, nonzero=True)
    x1 = field.random_element(rng)
    x2 = field.random_element(rng)
    if x1 == x2:
        return None
    r = field.random_element(rng)
    return (b, x1, x2, r)


def _eval_bijectivity(field, inputs):
    b, x1, x2, r = inputs
    fails = []
    if ratio2(x1, b) == ratio2(x2, b):
        fails.append(
            _witness(
                [f"B={b}", f"X1={x1}", f"X2={x2}"],
                ratio2(x1, b),
                "distinct images expected",
            )
        )
    if ratio2(b * r, b) != r:
        fails.append(_witness([f"B={b}", f"R={r}"], ratio2(b * r, b), r))
    return fails


_register(
    CheckDef(
        name="ratio_map_bijectivity",
        description="X -> ratio2(X, B) is injective and onto (X = B*R solves it)",
        draw=_draw_bijectivity,
        evaluate=_eval_bijectivity,
    )
)


# ---------------------------------------------------------------- cross-ratio checks


def _eval_cr_inverse_swap(field, xs):
    a, b, c, d = xs
    lhs = cross_ratio(a, b, d, c)
    rhs = cross_ratio(a, b, c, d).value.inv()
    if lhs != rhs:
        return [_witness(_labeled("ABCD", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="cr_inverse_swap",
        description="swapping the last two points inverts the cross-ratio",
        draw=_draw_tuple(4, distinct=True),
        evaluate=_eval_cr_inverse_swap,
        enumerate_inputs=_enum_tuples(4, distinct=True),
        arity=4,
    )
)


def _eval_cr_negation_invariance(field, xs):
    # -1 is central, so both bracket factors of the defining product are
    # unchanged when every point is negated.
    a, b, c, d = xs
    lhs = cross_ratio(-a, -b, -c, -d)
    rhs = cross_ratio(a, b, c, d)
    if lhs != rhs:
        return [_witness(_labeled("ABCD", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="cr_negation_invariance",
        description="negating all four points leaves the cross-ratio unchanged",
        draw=_draw_tuple(4, distinct=True),
        evaluate=_eval_cr_negation_invariance,
        enumerate_inputs=_enum_tuples(4, distinct=True),
        arity=4,
    )
)


def _eval_cr_alternative_formula(field, xs):
    a, b, c, d = xs
    lhs = cross_ratio(a, b, c, d)
    rhs = cross_ratio_alt(a, b, c, d)
    if lhs != rhs:
        return [_witness(_labeled("ABCD", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="cr_alternative_formula",
        description="inverse-difference formula agrees with the defining product",
        draw=_draw_tuple(4, distinct=True),
        evaluate=_eval_cr_alternative_formula,
        enumerate_inputs=_enum_tuples(4, distinct=True),
        arity=4,
    )
)


def _eval_cr_complement(field, xs):
    a, b, c, d = xs
    lhs = field.one - cross_ratio(a, b, c, d).value
    rhs = cross_ratio(a, c, b, d)
    if rhs != ExtendedPoint.finite(lhs):
        return [_witness(_labeled("ABCD", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="cr_complement",
        description="one minus the cross-ratio swaps the middle points",
        draw=_draw_tuple(4, distinct=True),
        evaluate=_eval_cr_complement,
        enumerate_inputs=_enum_tuples(4, distinct=True),
        arity=4,
    )
)


def _eval_cr_permutation_trio(field, xs):
    # Distinct 4-tuples give cross-ratio values outside {0, 1}, so every
    # inverse below exists; see the uniqueness argument in the ratio module.
    a, b, c, d = xs
    x = cross_ratio(a, b, c, d).value
    one = field.one
    tags = _labeled("ABCD", xs)
    fails = []

    def law(tag, lhs, rhs):
        if lhs != ExtendedPoint.finite(rhs):
            fails.append(_witness([f"law={tag}"] + tags, lhs, rhs))

    law("swap-to-BC", cross_ratio(a, d, b, c), one - x.inv())
    law("swap-to-DB", cross_ratio(a, c, d, b), (one - x).inv())
    law("swap-to-CB", cross_ratio(a, d, c, b), (x - one).inv() * x)
    return fails


_register(
    CheckDef(
        name="cr_permutation_trio",
        description="the three rewiring identities for permuted last points",
        draw=_draw_tuple(4, distinct=True),
        evaluate=_eval_cr_permutation_trio,
        enumerate_inputs=_enum_tuples(4, distinct=True),
        arity=4,
    )
)


def _conjugation_runner(field: Field, seed: int, samples: int) -> dict:
    check = CHECKS["cr_inverse_points_conjugation"]
    record = _base_record(check, "sampled")
    form_abcd = form_acbd = 0
    for index in range(samples):
        rng = _sample_rng(seed, check.name, index)
        inputs, redraws = _draw_valid(check, field, rng)
        record["redraws"] += redraws
        a, b, c, d = inputs
        lhs = cross_ratio(a.inv(), b.inv(), c.inv(), d.inv())
        candidate_abcd = a * cross_ratio(a, b, c, d).value * a.inv()
        candidate_acbd = a * cross_ratio(a, c, b, d).value * a.inv()
        if lhs == ExtendedPoint.finite(candidate_abcd):
            form_abcd += 1
        if lhs == ExtendedPoint.finite(candidate_acbd):
            form_acbd += 1
        record["samples_run"] += 1
        if lhs != ExtendedPoint.finite(candidate_abcd):
            record["failures"] += 1
            if len(record["witnesses"]) < WITNESS_CAP:
                record["witnesses"].append(
                    _witness(_labeled("ABCD", inputs), lhs, candidate_abcd)
                )
    record["passed"] = record["failures"] == 0
    record["details"] = {
        "pinned_form": "A * cr(A,B;C,D) * A^-1",
        "form_abcd_matches": form_abcd,
        "form_acbd_matches": form_acbd,
    }
    return record


_register(
    CheckDef(
        name="cr_inverse_points_conjugation",
        description="inverting all points conjugates the cross-ratio by A",
        draw=_draw_tuple(4, nonzero=True, distinct=True),
        runner=_conjugation_runner,
    )
)


def _draw_central_first(field, rng):
    if field.commutative:
        a = field.random_element(rng, nonzero=True)
    else:
        a = field.element(_draw_scalar_int(rng, nonzero=True))
    rest = []
    for _ in range(3):
        x = field.random_element(rng, nonzero=True)
        if x == a or x in rest:
            return None
        rest.append(x)
    return (a, *rest)


def _eval_central_collapse(field, xs):
    a, b, c, d = xs
    lhs = cross_ratio(a.inv(), b.inv(), c.inv(), d.inv())
    rhs = cross_ratio(a, b, c, d)
    if lhs != rhs:
        return [_witness(_labeled("ABCD", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="cr_central_collapse",
        description="with central A the inverse-points conjugation disappears",
        draw=_draw_central_first,
        evaluate=_eval_central_collapse,
        enumerate_inputs=_enum_tuples(4, nonzero=True, distinct=True),
        arity=4,
    )
)


def _eval_cr_commutative_symmetry(field, xs):
    a, b, c, d = xs
    lhs = cross_ratio(a, b, c, d)
    rhs = cross_ratio(b, a, d, c)
    if lhs != rhs:
        return [_witness(_labeled("ABCD", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="cr_commutative_symmetry",
        description="over a commutative field both argument orders agree",
        scope="commutative",
        draw=_draw_tuple(4, distinct=True),
        evaluate=_eval_cr_commutative_symmetry,
        enumerate_inputs=_enum_tuples(4, distinct=True),
        arity=4,
    )
)


def _noncommutativity_runner(field: Field, seed: int, samples: int) -> dict:
    check = CHECKS["cr_noncommutativity_witness"]
    record = _base_record(check, "sampled")
    record["passed"] = False
    for index in range(samples):
        rng = _sample_rng(seed, check.name, index)
        inputs, redraws = _draw_valid(check, field, rng)
        record["redraws"] += redraws
        record["samples_run"] += 1
        a, b, c, d = inputs
        lhs = cross_ratio(a, b, c, d)
        rhs = cross_ratio(b, a, d, c)
        if lhs != rhs:
            record["passed"] = True
            record["witnesses"].append(_witness(_labeled("ABCD", inputs), lhs, rhs))
            break
    return record


_register(
    CheckDef(
        name="cr_noncommutativity_witness",
        description="search for a tuple whose two argument orders disagree",
        scope="noncommutative",
        kind="witness-search",
        draw=_draw_tuple(4, distinct=True),
        runner=_noncommutativity_runner,
    )
)


def _draw_commuting_ratios(field, rng):
    triple = _draw_tuple(3, distinct=True)(field, rng)
    if triple is None:
        return None
    a, b, c = triple
    r2 = ratio3(a, b, c)
    alpha = field.element(_draw_scalar_int(rng))
    beta = field.element(_draw_scalar_int(rng))
    r1 = alpha + beta * r2
    if r1.is_zero or r1 == field.one:
        return None
    d = (a * r1 - b) * (r1 - field.one).inv()
    if d in (a, b, c):
        return None
    return (a, b, c, d)


def _eval_commuting_ratios(field, xs):
    a, b, c, d = xs
    tags = _labeled("ABCD", xs)
    if not commutes(ratio3(b, a, d), ratio3(a, b, c)):
        return [_witness(tags, "ratio points do not commute", "conditioned draw")]
    lhs = cross_ratio(a, b, c, d)
    rhs = cross_ratio(b, a, d, c)
    if lhs != rhs:
        return [_witness(tags, lhs, rhs)]
    return []


_register(
    CheckDef(
        name="cr_commuting_ratios_symmetry",
        description="commuting ratio points force both argument orders to agree",
        draw=_draw_commuting_ratios,
        evaluate=_eval_commuting_ratios,
    )
)


def _eval_cr_factorization(field, xs):
    a, b, c, d = xs
    lhs = cross_ratio(a, b, c, d)
    rhs = ratio3(b, a, d) * ratio3(a, b, c)
    if lhs != ExtendedPoint.finite(rhs):
        return [_witness(_labeled("ABCD", xs), lhs, rhs)]
    return []


_register(
    CheckDef(
        name="cr_ratio_factorization",
        description="the cross-ratio factors as r(B,A;D) * r(A,B;C)",
        draw=_draw_tuple(4, distinct=True),
        evaluate=_eval_cr_factorization,
        enumerate_inputs=_enum_tuples(4, distinct=True),
        arity=4,
    )
)


def _eval_cr_infinity_reductions(field, xs):
    a, b, c, d = xs
    inf = ExtendedPoint.infinity(field)
    tags = _labeled("ABCD", xs)
    fails = []

    def law(tag, lhs, rhs):
        if lhs != ExtendedPoint.finite(rhs):
            fails.append(_witness([f"law={tag}"] + tags, lhs, rhs))

    law("first-infinite", cross_ratio(inf, b, c, d), (b - d) * (b - c).inv())
    law("second-infinite", cross_ratio(a, inf, c, d), (a - d).inv() * (a - c))
    law("third-infinite", cross_ratio(a, b, inf, d), (a - d).inv() * (b - d))
    law("fourth-infinite", cross_ratio(a, b, c, inf), ratio3(a, b, c))
    return fails


_register(
    CheckDef(
        name="cr_infinity_reductions",
        description="one infinite argument reduces to the documented quotient form",
        draw=_draw_tuple(4, distinct=True),
        evaluate=_eval_cr_infinity_reductions,
        enumerate_inputs=_enum_tuples(4, distinct=True),
        arity=4,
    )
)


def _draw_solve_roundtrip(field, rng):
    triple = _draw_tuple(3, distinct=True)(field, rng)
    if triple is None:
        return None
    r = field.random_element(rng)
    if r.is_zero or r == field.one:
        return None
    try:
        solve_fourth_point(r, *triple)
    except InfiniteSolutionError:
        return None
    return (r, *triple)


def _eval_solve_roundtrip(field, inputs):
    r, a, b, c = inputs
    tags = [f"R={r}"] + _labeled("ABC", (a, b, c))
    d = solve_fourth_point(r, a, b, c)
    fails = []
    if d in (a, b, c):
        fails.append(_witness(tags, d, "a fourth point distinct from A, B, C"))
    got = cross_ratio(a, b, c, d)
    if got != ExtendedPoint.finite(r):
        fails.append(_witness(tags + [f"D={d}"], got, r))
    if solve_fourth_point(r, a, b, c) != d:
        fails.append(_witness(tags, "re-solve differs", d))
    return fails


_register(
    CheckDef(
        name="solve_fourth_point_roundtrip",
        description="solving for D reproduces the requested cross-ratio, uniquely",
        draw=_draw_solve_roundtrip,
        evaluate=_eval_solve_roundtrip,
    )
)


# ---------------------------------------------------------------- plane checks


def _draw_incidence(field, rng):
    p = random_point(field, rng)
    q = random_point(field, rng)
    r = random_point(field, rng)
    s = random_point(field, rng)
    if p == q or r == s:
        return None
    return (p, q, r, s)


def _eval_incidence(field, inputs):
    p, q, r, s = inputs
    tags = [f"P={p}", f"Q={q}", f"R={r}", f"S={s}"]
    fails = []
    line = line_through(p, q)
    if not (line.contains(p) and line.contains(q)):
        fails.append(_witness(tags, line, "line through both points"))
    if line_through(q, p) != line:
        fails.append(_witness(tags, line_through(q, p), line))
    shifted = parallel_through(line, r)
    if not shifted.contains(r):
        fails.append(_witness(tags, shifted, f"line through {r}"))
    if not parallel(line, shifted):
        fails.append(_witness(tags, shifted, f"parallel to {line}"))
    if parallel_through(line, p) != line:
        fails.append(_witness(tags, parallel_through(line, p), line))
    other = line_through(r, s)
    if parallel(line, other):
        if line != other and intersect(line, other) is not None:
            fails.append(_witness(tags, intersect(line, other), "no intersection"))
    else:
        cross = intersect(line, other)
        if cross is None or not (line.contains(cross) and other.contains(cross)):
            fails.append(_witness(tags, cross, "a common point on both lines"))
    corner = point(field, 0, 0), point(field, 1, 0), point(field, 0, 1)
    if line_through(corner[0], corner[1]).contains(corner[2]):
        fails.append(_witness(tags, "collinear", "three non-collinear points"))
    return fails


_register(
    CheckDef(
        name="plane_incidence_axioms",
        description="unique joins, Playfair parallels, and a non-collinear triple",
        draw=_draw_incidence,
        evaluate=_eval_incidence,
    )
)


def _draw_chart(field, rng):
    o = random_point(field, rng)
    i = random_point(field, rng)
    if o == i:
        return None
    t = field.random_element(rng)
    return (o, i, t)


def _eval_chart(field, inputs):
    o, i, t = inputs
    tags = [f"O={o}", f"I={i}", f"t={t}"]
    fails = []
    p = point_at(o, i, t)
    if coordinatize(o, i, p) != t:
        fails.append(_witness(tags, coordinatize(o, i, p), t))
    if point_at(o, i, coordinatize(o, i, p)) != p:
        fails.append(_witness(tags, point_at(o, i, coordinatize(o, i, p)), p))
    if not coordinatize(o, i, o).is_zero:
        fails.append(_witness(tags, coordinatize(o, i, o), "0"))
    if coordinatize(o, i, i) != field.one:
        fails.append(_witness(tags, coordinatize(o, i, i), "1"))
    return fails


_register(
    CheckDef(
        name="coordinate_chart_roundtrip",
        description="point_at and coordinatize are mutually inverse on the axis",
        draw=_draw_chart,
        evaluate=_eval_chart,
    )
)


def _draw_geometric(field, rng):
    o = random_point(field, rng)
    i = random_point(field, rng)
    if o == i:
        return None
    axis = line_through(o, i)
    aux = random_point(field, rng)
    if axis.contains(aux):
        return None
    a = field.random_element(rng)
    b = field.random_element(rng)
    return (o, i, a, b, aux)


def _eval_geometric_add(field, inputs):
    o, i, a, b, aux = inputs
    result = geometric_add(o, i, point_at(o, i, a), point_at(o, i, b), aux)
    got = coordinatize(o, i, result)
    if got != a + b:
        tags = [f"O={o}", f"I={i}", f"a={a}", f"b={b}", f"aux={aux}"]
        return [_witness(tags, got, a + b)]
    return []


_register(
    CheckDef(
        name="geometric_add_agreement",
        description="the addition construction realizes coordinate addition",
        draw=_draw_geometric,
        evaluate=_eval_geometric_add,
    )
)


def _eval_geometric_mul(field, inputs):
    o, i, a, b, aux = inputs
    result = geometric_mul(o, i, point_at(o, i, a), point_at(o, i, b), aux)
    got = coordinatize(o, i, result)
    if got != a * b:
        tags = [f"O={o}", f"I={i}", f"a={a}", f"b={b}", f"aux={aux}"]
        return [_witness(tags, got, a * b)]
    return []


_register(
    CheckDef(
        name="geometric_mul_agreement",
        description="the multiplication construction realizes the left-to-right product",
        draw=_draw_geometric,
        evaluate=_eval_geometric_mul,
    )
)


def _draw_aux_family(field, rng):
    o = random_point(field, rng)
    i = random_point(field, rng)
    if o == i:
        return None
    axis = line_through(o, i)
    auxes = []
    tries = 0
    while len(auxes) < 10:
        candidate = random_point(field, rng)
        tries += 1
        if tries > 500:
            return None
        if axis.contains(candidate) or candidate in auxes:
            continue
        auxes.append(candidate)
    a = field.random_element(rng)
    b = field.random_element(rng)
    return (o, i, a, b, tuple(auxes))


def _eval_aux_independence(field, inputs):
    o, i, a, b, auxes = inputs
    pa, pb = point_at(o, i, a), point_at(o, i, b)
    tags = [f"O={o}", f"I={i}", f"a={a}", f"b={b}"]
    fails = []
    sums = {geometric_add(o, i, pa, pb, aux) for aux in auxes}
    if len(sums) != 1:
        fails.append(_witness(tags, f"{len(sums)} distinct sums", "1"))
    products = {geometric_mul(o, i, pa, pb, aux) for aux in auxes}
    if len(products) != 1:
        fails.append(_witness(tags, f"{len(products)} distinct products", "1"))
    return fails


_register(
    CheckDef(
        name="aux_point_independence",
        description="construction results do not depend on the auxiliary point",
        draw=_draw_aux_family,
        evaluate=_eval_aux_independence,
    )
)


def _draw_desargues(field, rng):
    return (rng.getrandbits(32),)


def _eval_desargues(field, inputs):
    (sub_seed,) = inputs
    fails = []
    for mode in ("parallel", "concurrent"):
        tags = [f"seed={sub_seed}", f"mode={mode}"]
        try:
            cfg = generate_desargues_config(field, sub_seed, mode)
        except GenerationFailureError as exc:
            fails.append(_witness(tags, str(exc), "a valid configuration"))
            continue
        if not check_desargues(cfg):
            fails.append(_witness(tags + [cfg.canonical()], "sides not parallel", "parallel"))
    return fails


_register(
    CheckDef(
        name="desargues_axiom_holds",
        description="generated perspective triangles always satisfy the conclusion",
        draw=_draw_desargues,
        evaluate=_eval_desargues,
    )
)


def resolve_conjugation_form(seed: int, samples: int, field: Field | None = None) -> dict:
    """Decide which conjugated cross-ratio form the inverse-points law obeys.

    Competing candidates for cr(A^-1,B^-1;C^-1,D^-1) are A*X*A^-1 with
    X = cr(A,B;C,D) (form_abcd) or X = cr(A,C;B,D) (form_acbd).  Returns
    match counts for both and the name of the unique full matcher.  The
    candidates are distinct argument permutations, so they stay apart even
    over a commutative field where the conjugation itself is trivial.
    """
    field = field if field is not None else QuaternionField()
    draw = _draw_tuple(4, nonzero=True, distinct=True)
    form_abcd = form_acbd = 0
    for index in range(samples):
        rng = _sample_rng(seed, "resolve_conjugation_form", index)
        inputs = draw(field, rng)
        tries = 0
        while inputs is None:
            tries += 1
            if tries >= REDRAW_CAP:
                raise RuntimeError(f"cannot draw distinct nonzero tuples over {field}")
            inputs = draw(field, rng)
        a, b, c, d = inputs
        lhs = cross_ratio(a.inv(), b.inv(), c.inv(), d.inv())
        if lhs == ExtendedPoint.finite(a * cross_ratio(a, b, c, d).value * a.inv()):
            form_abcd += 1
        if lhs == ExtendedPoint.finite(a * cross_ratio(a, c, b, d).value * a.inv()):
            form_acbd += 1
    if form_abcd == samples and form_acbd == samples:
        resolved = "both"
    elif form_abcd == samples:
        resolved = "form_abcd"
    elif form_acbd == samples:
        resolved = "form_acbd"
    else:
        resolved = "neither"
    return {
        "field": field.name,
        "seed": seed,
        "samples": samples,
        "form_abcd_matches": form_abcd,
        "form_acbd_matches": form_acbd,
        "resolved": resolved,
    }
