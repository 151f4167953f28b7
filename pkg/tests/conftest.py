"""Shared fixtures, element strategies, and the acceptance result board."""

import functools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from crossratio.fields import GaloisField, QuaternionField, RationalField

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.load_profile("suite")

RATIONAL = RationalField()
GF5 = GaloisField(5)
GF7 = GaloisField(7)
GF101 = GaloisField(101)
QUATERNION = QuaternionField()

# every field under test; MAIN_FIELDS is the heavy-duty trio used at scale
FIELDS = (RATIONAL, GF5, GF101, QUATERNION)
MAIN_FIELDS = (RATIONAL, GF101, QUATERNION)


@pytest.fixture(params=FIELDS, ids=lambda f: f.name)
def field(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(977)


def element_strategy(field, nonzero=False):
    # bounded literals keep bignum growth small while exercising signs and denominators
    if isinstance(field, GaloisField):
        strat = st.integers(min_value=0, max_value=field.p - 1).map(field.element)
    elif isinstance(field, QuaternionField):
        scalar = st.fractions(min_value=-6, max_value=6, max_denominator=6)
        strat = st.tuples(scalar, scalar, scalar, scalar).map(field.element)
    else:
        strat = st.fractions(min_value=-40, max_value=40, max_denominator=24).map(
            field.element
        )
    if nonzero:
        strat = strat.filter(lambda x: not x.is_zero)
    return strat


@st.composite
def field_and_elements(draw, n, nonzero=False, distinct=False, fields=FIELDS):
    fld = draw(st.sampled_from(list(fields)))
    xs = draw(
        st.lists(
            element_strategy(fld, nonzero=nonzero),
            min_size=n,
            max_size=n,
            unique=distinct,
        )
    )
    return fld, xs


# one line per acceptance criterion, echoed after the run so a scan of the
# terminal output shows the pass/fail state of each numbered criterion
ACCEPTANCE_RESULTS = []


def criterion(label):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                ACCEPTANCE_RESULTS.append((label, "FAIL"))
                raise
            ACCEPTANCE_RESULTS.append((label, "PASS"))

        return run

    return wrap


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status}  {label}")
