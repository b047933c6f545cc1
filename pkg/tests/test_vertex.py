from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from parafermion.distinguished import omega_aff, omega_alpha, omega_h, w3_alpha
from parafermion.fock import FockSpace
from parafermion.lie import build_algebra
from parafermion.vertex import l_mode, mode_product, primary_check, virasoro_check

PROPS = settings(max_examples=200, deadline=None)
SPACES = [FockSpace(build_algebra("A1"), 2), FockSpace(build_algebra("A2"), 1),
          FockSpace(build_algebra("B2"), 1)]


def monomials(space, top):
    return [space.vector({m: 1}) for w in range(top + 1)
            for ms in space.monomials_of_weight(w).values() for m in ms]


UP2 = {id(s): monomials(s, 2) for s in SPACES}
UP3 = {id(s): monomials(s, 3) for s in SPACES[:2]}


def binom(s, r):
    """Generalised binomial coefficient C(s, r) for integer s, r >= 0."""
    out = Fraction(1)
    for i in range(r):
        out *= Fraction(s - i, i + 1)
    return out


# --- examples ---------------------------------------------------------------

def test_creation_property():
    for s in SPACES:
        for u in UP2[id(s)]:
            assert mode_product(u, -1, s.vacuum) == u


@pytest.mark.parametrize("space", SPACES)
def test_generator_modes_are_affine_modes(space):
    L = space.lie
    for b in range(L.dim):
        a = space.straighten([(b, -1)])
        for v in UP2[id(space)][:20]:
            for n in range(-2, 3):
                assert mode_product(a, n, v) == space.apply_mode(b, n, v)


@pytest.mark.parametrize("depth", [1, 2, 3, 4])
def test_derivative_formula(depth):
    s = SPACES[1]
    L = s.lie
    idx = L.x(L.theta)
    u = s.straighten([(idx, -depth)])
    for v in UP2[id(s)][:15]:
        for mode in range(-3, 4):
            want = s.apply_mode(idx, mode + 1 - depth, v) * ((-1) ** (depth - 1) * binom(mode, depth - 1))
            assert mode_product(u, mode, v) == want


def test_l_minus_one_on_sugawara_pair():
    s = FockSpace(build_algebra("A2"), 2)
    L = s.lie
    om = omega_aff(s).vector
    for a in L.positive_roots:
        xa, ya = L.x(a), L.x(tuple(-c for c in a))
        v = s.straighten([(ya, -1), (xa, -1)])
        want = s.straighten([(ya, -2), (xa, -1)]) + s.straighten([(ya, -1), (xa, -2)])
        assert l_mode(om, -1, v) == want


@pytest.mark.parametrize("space", SPACES)
def test_l_minus_one_on_generators(space):
    om = omega_aff(space).vector
    for b in range(space.lie.dim):
        for n in range(1, 5):
            v = space.straighten([(b, -n)])
            assert l_mode(om, -1, v) == space.straighten([(b, -n - 1)]) * n


def test_l_zero_vacuum_and_weights():
    s = SPACES[0]
    om = omega_aff(s).vector
    assert not l_mode(om, 0, s.vacuum)
    for v in UP3[id(s)]:
        assert l_mode(om, 0, v) == v * v.weight


@pytest.mark.parametrize("space", SPACES[:2])
def test_sugawara_commutes_like_derivation(space):
    om = omega_aff(space).vector
    L = space.lie
    for v in UP2[id(space)][:12]:
        for b in range(L.dim):
            for m in range(-3, 4):
                for n in range(-3, 4):
                    lhs = (l_mode(om, m, space.apply_mode(b, n, v))
                           - space.apply_mode(b, n, l_mode(om, m, v)))
                    assert lhs == space.apply_mode(b, m + n, v) * (-n)


def test_primary_examples():
    s = FockSpace(build_algebra("A1"), 2)
    theta = s.lie.theta
    assert primary_check(omega_alpha(s, theta).vector, w3_alpha(s, theta).vector, 3)
    om = omega_aff(s).vector
    assert primary_check(om, s.vacuum, 0)
    a2 = s.straighten([(s.lie.h(0), -2)])
    assert not primary_check(om, a2, 2)
    assert l_mode(om, 1, a2) == s.straighten([(s.lie.h(0), -1)]) * 2


def test_virasoro_check_rejects():
    s = SPACES[0]
    om = omega_aff(s).vector
    res = virasoro_check(om * 2, 1)
    assert not res.is_virasoro and res.failure
    res = virasoro_check(s.straighten([(s.lie.h(0), -1)]), 1)
    assert not res.is_virasoro and "weight 2" in res.failure["reason"]


def test_virasoro_translation_samples():
    s = SPACES[0]
    om = omega_aff(s).vector
    res = virasoro_check(om, 1, translation_samples=monomials(s, 2))
    assert res.is_virasoro and res.central_charge == Fraction(3, 2)


def test_mixed_spaces_rejected():
    with pytest.raises(ValueError):
        mode_product(SPACES[0].vacuum, -1, FockSpace(build_algebra("A1"), 2).vacuum)


# --- properties -------------------------------------------------------------

space_st = st.sampled_from(SPACES)


@PROPS
@given(st.data())
def test_weight_and_charge_additivity(data):
    s = data.draw(st.sampled_from(SPACES[:2]))
    u = data.draw(st.sampled_from(UP3[id(s)]))
    v = data.draw(st.sampled_from(UP3[id(s)]))
    n = data.draw(st.integers(-3, 5))
    out = mode_product(u, n, v)
    if out:
        (wu, cu), (wv, cv) = s.grading(u), s.grading(v)
        assert s.grading(out) == (wu + wv - n - 1, tuple(a + b for a, b in zip(cu, cv)))


@PROPS
@given(st.data())
def test_iterate_matches_commutator(data):
    s = data.draw(space_st)
    pool = UP2[id(s)]
    u, v, w = (data.draw(st.sampled_from(pool)) for _ in range(3))
    m = data.draw(st.integers(-2, 2))
    n = data.draw(st.integers(-2, 2))
    lhs = mode_product(u, m, mode_product(v, n, w)) - mode_product(v, n, mode_product(u, m, w))
    rhs = s.zero
    for j in range(u.weight + v.weight):
        c = binom(m, j)
        if c:
            rhs = rhs + mode_product(mode_product(u, j, v), m + n - j, w) * c
    assert lhs == rhs


@PROPS
@given(st.data())
def test_skew_symmetry(data):
    s = data.draw(space_st)
    pool = UP2[id(s)]
    u = data.draw(st.sampled_from(pool))
    v = data.draw(st.sampled_from(pool))
    n = data.draw(st.integers(-3, 3))
    total = s.zero
    for j in range(max(0, u.weight + v.weight - n)):
        t = mode_product(v, n + j, u)
        for _ in range(j):
            t = s.translate(t)
        sign = -1 if (n + j + 1) % 2 else 1
        total = total + t * Fraction(sign, factorial(j))
    assert mode_product(u, n, v) == total


@PROPS
@given(st.data())
def test_truncation_slack_changes_nothing(data):
    s = data.draw(space_st)
    pool = UP2[id(s)]
    u = data.draw(st.sampled_from(pool))
    v = data.draw(st.sampled_from(pool))
    n = data.draw(st.integers(-3, 4))
    assert mode_product(u, n, v, slack=5) == mode_product(u, n, v)


@pytest.mark.parametrize("name,k", [("A1", 1), ("A2", 1), ("A2", 2), ("C2", 1), ("G2", 1)])
def test_heisenberg_central_charge_is_rank(name, k):
    s = FockSpace(build_algebra(name), k)
    res = virasoro_check(omega_h(s).vector, 1)
    assert res.is_virasoro and res.central_charge == s.lie.rank


@pytest.mark.parametrize("name,k", [("A1", 1), ("A2", 1), ("C2", 1), ("B2", 2)])
def test_sugawara_central_charge(name, k):
    s = FockSpace(build_algebra(name), k)
    res = virasoro_check(omega_aff(s).vector, 1)
    L = s.lie
    assert res.is_virasoro and res.central_charge == Fraction(k * L.dim, k + L.dual_coxeter)


@pytest.mark.parametrize("name,k", [("A2", 1), ("C2", 1), ("G2", 1)])
def test_root_coset_central_charge(name, k):
    s = FockSpace(build_algebra(name), k)
    for a in s.lie.positive_roots:
        K = s.lie.level_rescale(a, k)
        res = virasoro_check(omega_alpha(s, a).vector, 1)
        assert res.is_virasoro and res.central_charge == Fraction(2 * (K - 1), K + 2)
