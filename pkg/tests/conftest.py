import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from uqsl2.algebra import algebra
from uqsl2.cyclotomic import field

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cycnums(draw, p):
    fld = field(p)
    return fld.from_coeffs(draw(st.lists(small_fracs, min_size=fld.degree, max_size=fld.degree)))


@st.composite
def nonzero_cycnums(draw, p):
    x = draw(cycnums(p))
    if x.is_zero():
        x = field(p).one
    return x


@st.composite
def elements(draw, p, max_terms=4):
    alg = algebra(p)
    mons = draw(st.lists(st.sampled_from(alg.monomials), min_size=0, max_size=max_terms, unique=True))
    return alg.element({m: draw(cycnums(p)) for m in mons})


@pytest.fixture(params=[2, 3, 4, 5])
def p(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "CRITERION_LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
