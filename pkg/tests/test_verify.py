"""Deterministic seeded verification engine: records, skips, strategies."""

import json

import pytest

from conftest import GF5, GF101, QUATERNION, RATIONAL
from crossratio.verify import (
    CHECKS,
    CheckDef,
    CheckSpec,
    UnknownCheckError,
    WITNESS_CAP,
    applicable,
    resolve_conjugation_form,
    run_check,
    run_suite,
)

RECORD_KEYS = {
    "name",
    "kind",
    "skipped",
    "strategy",
    "samples_run",
    "redraws",
    "passed",
    "failures",
    "witnesses",
}


def strip_timestamp(report):
    return {k: v for k, v in report.items() if k != "timestamp"}


# ---------------------------------------------------------------- run_check


def test_unknown_check_rejected():
    with pytest.raises(UnknownCheckError):
        run_check(CheckSpec("no_such_check", "rational", 10, 0))


def test_invalid_sample_count_rejected():
    with pytest.raises(ValueError):
        run_check(CheckSpec("field_axioms", "rational", 0, 0))


def test_run_check_record_shape():
    rec = run_check(CheckSpec("cr_inverse_swap", "rational", 25, 4))
    assert RECORD_KEYS <= set(rec)
    assert rec["passed"] and rec["failures"] == 0 and rec["witnesses"] == []
    assert rec["samples_run"] == 25
    assert rec["strategy"] == "sampled"


def test_run_check_is_deterministic():
    spec = CheckSpec("cr_complement", "quaternion", 30, 99)
    assert run_check(spec) == run_check(spec)


def test_field_accepts_instance_or_selector():
    by_name = run_check(CheckSpec("ratio2_laws", "gf:101", 20, 1))
    by_instance = run_check(CheckSpec("ratio2_laws", GF101, 20, 1))
    assert by_name == by_instance


# ---------------------------------------------------------------- strategies


def test_small_prime_fields_enumerate_exhaustively():
    rec = run_check(CheckSpec("cr_inverse_swap", "gf:5", 1000, 0))
    assert rec["strategy"] == "exhaustive"
    assert rec["samples_run"] == 5 * 4 * 3 * 2  # ordered distinct 4-tuples
    assert rec["passed"]


def test_sampled_and_exhaustive_agree_on_gf5():
    names = [
        "cr_inverse_swap",
        "cr_negation_invariance",
        "cr_alternative_formula",
        "cr_complement",
        "cr_permutation_trio",
        "cr_ratio_factorization",
        "cr_commutative_symmetry",
    ]
    for name in names:
        sampled = run_check(CheckSpec(name, "gf:5", 300, 8), strategy="sampled")
        full = run_check(CheckSpec(name, "gf:5", 300, 8), strategy="exhaustive")
        assert sampled["passed"] == full["passed"] is True, name


def test_exhaustive_strategy_needs_enumerable_field():
    with pytest.raises(ValueError):
        run_check(CheckSpec("cr_inverse_swap", "rational", 10, 0), strategy="exhaustive")
    with pytest.raises(ValueError):
        run_check(CheckSpec("cr_inverse_swap", "gf:101", 10, 0), strategy="exhaustive")


# ---------------------------------------------------------------- witness search


def test_noncommutativity_witness_absent_over_rationals():
    rec = run_check(CheckSpec("cr_noncommutativity_witness", "rational", 100, 2))
    assert rec["kind"] == "witness-search"
    assert rec["passed"] is False  # no witness can exist
    assert rec["samples_run"] == 100


def test_noncommutativity_witness_found_over_quaternions():
    rec = run_check(CheckSpec("cr_noncommutativity_witness", "quaternion", 100, 2))
    assert rec["passed"] is True
    assert rec["samples_run"] <= 100
    wit = rec["witnesses"][0]
    assert set(wit) == {"inputs", "lhs", "rhs"}
    assert wit["lhs"] != wit["rhs"]


# ---------------------------------------------------------------- failing checks


def test_failing_check_reports_capped_witnesses():
    name = "always_unequal_probe"
    CHECKS[name] = CheckDef(
        name=name,
        description="probe: zero never equals one",
        draw=lambda field, rng: (field.random_element(rng),),
        evaluate=lambda field, xs: [
            {"inputs": [str(xs[0])], "lhs": str(field.zero), "rhs": str(field.one)}
        ],
        arity=1,
    )
    try:
        rec = run_check(CheckSpec(name, "rational", 40, 0))
        assert rec["passed"] is False
        assert rec["failures"] == 40
        assert len(rec["witnesses"]) == WITNESS_CAP
        suite = run_suite("rational", seed=0, samples=5)
        assert suite["passed"] is False
    finally:
        del CHECKS[name]


# ---------------------------------------------------------------- run_suite


def test_suite_shape_and_skips():
    report = run_suite("quaternion", seed=5, samples=8)
    assert {"field", "seed", "samples", "timestamp", "passed", "checks"} <= set(report)
    assert report["field"] == "quaternion" and report["passed"] is True
    by_name = {rec["name"]: rec for rec in report["checks"]}
    assert len(by_name) == len(report["checks"])  # unique names
    for skip_name in ("ratio3_inverse_commutative", "cr_commutative_symmetry"):
        assert by_name[skip_name]["skipped"] is True
        assert by_name[skip_name]["reason"]
        assert by_name[skip_name]["passed"] is None
    assert by_name["norm_multiplicativity"]["skipped"] is False
    # the pinned conjugation form is part of the suite report
    details = by_name["cr_inverse_points_conjugation"]["details"]
    assert details["pinned_form"] == "A * cr(A,B;C,D) * A^-1"
    assert details["form_abcd_matches"] == 8
    assert details["form_acbd_matches"] == 0


def test_suite_skips_on_commutative_fields():
    report = run_suite("gf:101", seed=5, samples=8)
    by_name = {rec["name"]: rec for rec in report["checks"]}
    assert by_name["norm_multiplicativity"]["skipped"] is True
    assert by_name["cr_noncommutativity_witness"]["skipped"] is True
    assert by_name["ratio3_inverse_commutative"]["skipped"] is False
    assert report["passed"] is True


def test_suite_is_deterministic_modulo_timestamp():
    a = run_suite("rational", seed=31, samples=12)
    b = run_suite("rational", seed=31, samples=12)
    assert strip_timestamp(a) == strip_timestamp(b)
    assert json.dumps(strip_timestamp(a)) == json.dumps(strip_timestamp(b))


def test_suite_reports_are_json_serializable():
    report = run_suite("gf:5", seed=1, samples=6)
    parsed = json.loads(json.dumps(report))
    assert parsed["passed"] is True


def test_applicability_matrix():
    assert applicable(CHECKS["norm_multiplicativity"], RATIONAL) == (
        False,
        "defined for quaternions only",
    )
    ok, reason = applicable(CHECKS["cr_commutative_symmetry"], QUATERNION)
    assert not ok and reason
    ok, reason = applicable(CHECKS["cr_inverse_swap"], GF5)
    assert ok and reason is None


# ---------------------------------------------------------------- conjugation resolver


def test_conjugation_resolver_pins_the_statement_form():
    out = resolve_conjugation_form(seed=17, samples=60)
    assert out["field"] == "quaternion"
    assert out["form_abcd_matches"] == 60
    assert out["form_acbd_matches"] < 60
    assert out["resolved"] == "form_abcd"


def test_conjugation_resolver_same_answer_over_commutative_fields():
    # conjugation is trivial over a field, but the two candidate forms are
    # different argument permutations, so only one can match there too
    out = resolve_conjugation_form(seed=17, samples=40, field=RATIONAL)
    assert out["form_abcd_matches"] == 40
    assert out["form_acbd_matches"] == 0
    assert out["resolved"] == "form_abcd"


def test_conjugation_collapses_for_central_first_point():
    rec = run_check(CheckSpec("cr_central_collapse", "quaternion", 50, 3))
    assert rec["passed"]
