from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from egh_liaison.polyalg import Ideal, Polynomial, RingContext, monomials_of_degree

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

P = 32003


@st.composite
def forms(draw, ring: RingContext, degree=None, max_degree: int = 3, max_terms: int = 4):
    """A nonzero homogeneous polynomial of ``ring``."""
    d = draw(st.integers(1, max_degree)) if degree is None else degree
    monos = list(monomials_of_degree(ring.num_vars, d))
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=max_terms, unique=True))
    coeffs = draw(st.lists(st.integers(1, ring.characteristic - 1),
                           min_size=len(chosen), max_size=len(chosen)))
    return Polynomial(ring, dict(zip(chosen, coeffs)))


@st.composite
def ideals(draw, ring: RingContext, min_gens: int = 1, max_gens: int = 3, max_degree: int = 3):
    gens = draw(st.lists(forms(ring, max_degree=max_degree), min_size=min_gens, max_size=max_gens))
    return Ideal(ring, gens)


@st.composite
def monomial_sets(draw, n: int, max_degree: int = 4, max_size: int = 4):
    exps = st.tuples(*[st.integers(0, max_degree) for _ in range(n)]).filter(lambda e: sum(e) > 0)
    return draw(st.lists(exps, min_size=1, max_size=max_size, unique=True))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.VERDICTS:
            terminalreporter.write_line(line)
