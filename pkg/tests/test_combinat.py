import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from egh_liaison.combinat import (
    CIType,
    TypeChain,
    ci_hilbert,
    gamma,
    k_lift,
    k_lift_hilbert_prediction,
    lex_plus_powers,
    liaison_hf,
    predicted_chain_hf,
    tilde_gamma_chain,
    validate_multicomplex,
    witness_ideal,
)
from egh_liaison.errors import NotAchievableError
from egh_liaison.polyalg import HilbertFunction, MonomialIdeal, RingContext
from egh_liaison.suites import nonincreasing_chains, order_ideal_hfs

R1, R2, R3 = RingContext(1), RingContext(2), RingContext(3)


def HF(*v):
    return HilbertFunction(tuple(v))


def brute_tilde_gamma(types, n):
    """Direct transcription of the backwards recursion over explicit divisor lists."""
    def divisors(top):
        return set(itertools.product(*(range(t + 1) for t in top)))

    cur = divisors([a - 1 for a in types[-1]])
    for a in reversed(types[:-1]):
        top = [x - 1 for x in a]
        cur = {q for q in divisors(top) if tuple(t - e for t, e in zip(top, q)) not in cur}
    return cur


def test_types():
    assert CIType.parse("3,2") == CIType((2, 3))
    assert CIType((2, 3)).dominates(CIType((1, 3)))
    assert not CIType((2, 2)).dominates(CIType((1, 3)))
    with pytest.raises(ValueError):
        CIType((0, 2))
    assert str(TypeChain.parse("3,3;2,2;1,1")) == "3,3;2,2;1,1"
    with pytest.raises(ValueError):
        TypeChain.parse("2,2;2,3")


def test_gamma_examples():
    assert set(gamma((2, 2), R2).monomials) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert set(gamma((1, 1), R2).monomials) == {(0, 0)}
    g = gamma((3, 2), R2)
    assert set(g.monomials) == {(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)}


def test_tilde_gamma_examples():
    one = tilde_gamma_chain(TypeChain.parse("2,2"), R2)[0]
    assert set(one.monomials) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    one = tilde_gamma_chain(TypeChain.parse("2,2;1,1"), R2)[0]
    assert set(one.monomials) == {(0, 0), (1, 0), (0, 1)}
    one = tilde_gamma_chain(TypeChain.parse("3,3;2,2;1,1"), R2)[0]
    assert set(one.monomials) == {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}
    assert one.hilbert_function() == HF(1, 2, 3)


def test_witness_examples():
    assert str(witness_ideal(TypeChain.parse("2,2"), R2)) == "<x1^2, x2^2>"
    assert str(witness_ideal(TypeChain.parse("2,2;1,1"), R2)) == "<x1^2, x1*x2, x2^2>"
    W = witness_ideal(TypeChain.parse("3,3;2,2;1,1"), R2)
    assert str(W) == "<x1^3, x1^2*x2, x1*x2^2, x2^3>"
    assert W.hilbert_function() == HF(1, 2, 3)


def test_pfaffian_like_chain_witness():
    W = witness_ideal(TypeChain.parse("2,2,2;1,2,2;1,1,1"), R3)
    assert str(W) == "<x1^2, x1*x2, x1*x3, x2^2, x3^2>"
    assert W.hilbert_function() == HF(1, 3, 1)


def test_validate_multicomplex():
    assert validate_multicomplex({(0,), (1,), (2,)}) == (True, None)
    assert validate_multicomplex({(1,)}) == (False, ((1,), (0,)))


def test_liaison_hf_examples():
    assert liaison_hf(HF(1, 2, 1), HF(1, 0, 0)) == HF(1, 2)
    assert liaison_hf(HF(1, 2, 1), HF(1, 2, 1)).total() == 0
    assert liaison_hf(HF(1, 3, 3, 1), HF(1, 1, 0, 0)) == HF(1, 3, 2)


def test_liaison_hf_rejects_bad_input():
    with pytest.raises(ValueError):
        liaison_hf(HF(1, 2, 2), HF(1))
    with pytest.raises(ValueError):
        liaison_hf(HF(1, 2, 1), HF(1, 3))


def test_ci_hilbert_examples():
    assert ci_hilbert((2, 2)) == HF(1, 2, 1)
    assert ci_hilbert((1, 1, 1)) == HF(1)
    assert ci_hilbert((2, 3)) == HF(1, 2, 2, 1)


def test_lex_plus_powers_examples():
    assert str(lex_plus_powers((2, 2), HF(1, 2, 1), R2)) == "<x1^2, x2^2>"
    assert str(lex_plus_powers((2, 2), HF(1, 2, 0), R2)) == "<x1^2, x1*x2, x2^2>"
    with pytest.raises(NotAchievableError):
        lex_plus_powers((2, 2), HF(1, 3), R2)


def test_lex_plus_powers_three_variables():
    M = lex_plus_powers((2, 2, 2), HF(1, 3, 2), R3)
    assert M.hilbert_function() == HF(1, 3, 2)
    assert all(M.contains_power(i, 2) for i in range(3))


def test_k_lift_examples():
    assert k_lift([MonomialIdeal(R1, [(2,)])], R2) == MonomialIdeal(R2, [(2, 0)])
    K = k_lift([MonomialIdeal(R1, [(2,)]), MonomialIdeal(R1, [(1,)])], R2)
    assert str(K) == "<x1^2, x1*x2>"
    M = MonomialIdeal(R1, [(3,)])
    assert k_lift([M, M, M], R2) == MonomialIdeal(R2, [(3, 0)])


def test_k_lift_hilbert_prediction_holds_for_increasing_layers():
    layers = [MonomialIdeal(R2, [(3, 0), (0, 3)]), MonomialIdeal(R2, [(2, 0), (0, 2)]),
              MonomialIdeal(R2, [(1, 0), (0, 1)])]
    K = k_lift(layers, R3)
    # the lift is not Artinian (x3 is free past the last layer), compare a window
    hf = K.hilbert_function(6)
    assert tuple(hf(t) for t in range(7)) == k_lift_hilbert_prediction(layers, 6)


def test_k_lift_ring_mismatch():
    with pytest.raises(ValueError):
        k_lift([MonomialIdeal(R2, [(1, 0)])], R2)


# -- properties ---------------------------------------------------------------

def test_tilde_gamma_sets_exhaustive_small_chains():
    for n in (2, 3):
        ring = RingContext(n)
        for chain in nonincreasing_chains(n, 3, 3):
            sets = tilde_gamma_chain(chain, ring)
            assert all(validate_multicomplex(s.monomials)[0] for s in sets)
            assert set(sets[0].monomials) == brute_tilde_gamma(chain.types, n)
            assert sets[0].hilbert_function() == predicted_chain_hf(chain)
            W = witness_ideal(chain, ring)
            assert all(W.contains_power(i, a) for i, a in enumerate(chain.types[0]))


chains = st.integers(2, 3).flatmap(lambda n: st.lists(
    st.lists(st.integers(1, 4), min_size=n, max_size=n), min_size=1, max_size=4))


@given(chains)
def test_witness_hf_is_the_liaison_prediction(raw):
    # sort columnwise into a nonincreasing chain of sorted types
    types = [tuple(sorted(t)) for t in raw]
    cols = [sorted((t[i] for t in types), reverse=True) for i in range(len(types[0]))]
    chain = TypeChain(tuple(CIType(tuple(c[k] for c in cols)) for k in range(len(types))))
    n = len(chain.types[0])
    W = witness_ideal(chain, RingContext(n))
    assert W.hilbert_function() == predicted_chain_hf(chain)
    top = len(W.hilbert_function())
    assert W.hilbert_function().padded(top + 1) == tuple(
        oracles.brute_standard_counts(W.generators, n, top))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_ci_hilbert_is_symmetric(a):
    hf = ci_hilbert(a)
    s = sum(a) - len(a)
    assert all(hf(t) == hf(s - t) for t in range(s + 1))
    assert hf.total() == math.prod(a)


@given(st.lists(st.integers(1, 3), min_size=2, max_size=3), st.data())
def test_liaison_hf_involution(a, data):
    n = len(a)
    box = [q for q in itertools.product(*(range(x) for x in a))]
    # a random order ideal inside the box gives a genuine HF bounded by the CI
    picks = data.draw(st.sets(st.sampled_from(box), max_size=len(box)))
    closed = {q for q in box if any(all(x <= y for x, y in zip(q, p)) for p in picks)}
    counts = [0] * (sum(a) - n + 1)
    for q in closed:
        counts[sum(q)] += 1
    hf_I = HilbertFunction(tuple(counts))
    hf_J = ci_hilbert(a)
    assert liaison_hf(hf_J, liaison_hf(hf_J, hf_I)) == hf_I


def test_order_ideal_brute_force_counts():
    assert len(order_ideal_hfs((2, 2))) == 4
    assert HF(1, 2) in order_ideal_hfs((2, 2))


@given(st.lists(st.integers(1, 3), min_size=3, max_size=3),
       st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_lex_plus_powers_success_has_target_hf(e, tail):
    target = HilbertFunction((1,) + tuple(tail))
    try:
        M = lex_plus_powers(e, target, R3)
    except NotAchievableError:
        return
    assert M.hilbert_function() == target
    assert all(M.contains_power(i, a) for i, a in enumerate(sorted(e)))
