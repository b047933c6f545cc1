from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from parafermion.fock import FockSpace
from parafermion.lie import build_algebra

A1 = build_algebra("A1")
A2 = build_algebra("A2")
B2 = build_algebra("B2")
SPACES = [FockSpace(A1, 2), FockSpace(A2, 1), FockSpace(B2, 2)]
PROPS = settings(max_examples=200, deadline=None)


def small_vectors(space, top=3):
    return [space.vector({m: 1}) for w in range(top + 1)
            for ms in space.monomials_of_weight(w).values() for m in ms]


SMALL = {id(s): small_vectors(s) for s in SPACES}


# --- examples ----------------------------------------------------------------

def test_reorder_with_bracket_term():
    s = FockSpace(A1, 3)
    x, y = A1.x((1,)), A1.x((-1,))
    got = s.straighten([(x, -1), (y, -1)])
    want = s.vector({((1, y), (1, x)): 1, ((2, A1.h(0)),): 1})
    assert got == want


def test_nonnegative_modes_kill_vacuum():
    s = FockSpace(A2, 1)
    for b in range(A2.dim):
        for n in range(3):
            assert not s.apply_mode(b, n, s.vacuum)


def test_cartan_modes_commute():
    s = FockSpace(A1, 1)
    h = A1.h(0)
    assert s.straighten([(h, -1), (h, -2)]) == s.vector({((2, h), (1, h)): 1})


@pytest.mark.parametrize("name,k", [("A1", 1), ("A1", 4), ("C2", 2), ("G2", 1)])
def test_positive_mode_pairing(name, k):
    L = build_algebra(name)
    s = FockSpace(L, k)
    for a in L.positive_roots:
        v = s.straighten([(L.x(tuple(-c for c in a)), -1)])
        ratio = L.inner(L.theta, L.theta) / L.inner(a, a)
        assert s.apply_mode(L.x(a), 1, v) == s.vacuum * (ratio * k)


def test_charge_eigenvalue():
    s = FockSpace(A2, 1)
    for b in A2.roots:
        v = s.straighten([(A2.x(b), -1)])
        for i in A2.cartan_indices:
            assert s.apply_mode(i, 0, v) == v * A2.pairing(b, i - A2.npos)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_theta_power_eigenvalue(k):
    s = FockSpace(A2, k)
    v = s.straighten([(A2.x(A2.theta), -1)] * (k + 1))
    assert s.apply_mode(A2.h_alpha(A2.theta), 0, v) == v * (2 * (k + 1))


def test_gradings():
    s = FockSpace(A1, 2)
    x, y = A1.x((1,)), A1.x((-1,))
    assert s.grading(s.straighten([(x, -2), (y, -1)])) == (3, (0,))
    assert s.grading(s.straighten([(x, -1)] * 3)) == (3, (3,))
    assert s.grading(s.vacuum) == (0, (0,))
    assert s.grading(s.vacuum + s.straighten([(x, -1)])) is None


def test_enumerate_basis_examples():
    s = FockSpace(A1, 1)
    assert [len(s.enumerate_basis(w)) for w in range(5)] == [1, 1, 3, 6, 13]
    assert s.enumerate_basis(1, (1,)) == [((1, A1.x((1,))),)]
    for L in (A1, A2, B2):
        assert FockSpace(L, 1).enumerate_basis(0) == [()]


@pytest.mark.parametrize("name,top", [("A1", 6), ("A2", 4), ("B2", 3), ("G2", 3)])
def test_enumeration_matches_generating_function(name, top):
    L = build_algebra(name)
    s = FockSpace(L, 1)
    counts = oracles.graded_counts(oracles.algebra_charges(L.series, L.rank), top)
    for w in range(top + 1):
        got = {ch: len(ms) for ch, ms in s.monomials_of_weight(w).items()}
        want = {ch: c for (ww, ch), c in counts.items() if ww == w and c}
        assert got == want


def test_text_round_trip():
    s = SPACES[1]
    for v in SMALL[id(s)][:40]:
        (mono,) = v.terms
        text = s.format_monomial(mono)
        assert s.parse_monomial(text) == v
    assert s.format_monomial(()) == "|0>"
    with pytest.raises(ValueError):
        s.parse_monomial("x[a7](-1) |0>")


def test_vector_arithmetic():
    s = FockSpace(A1, 1)
    v = s.straighten([(A1.h(0), -2)])
    assert v - v == 0 and not (v - v)
    assert (v * 3) / 3 == v
    assert v.level == 1
    with pytest.raises(ValueError):
        v + FockSpace(A1, 1).vacuum


def test_level_must_be_positive():
    with pytest.raises(ValueError):
        FockSpace(A1, 0)


# --- properties -----------------------------------------------------------------

space_st = st.sampled_from(SPACES)


@PROPS
@given(st.data())
def test_affine_bracket_relation(data):
    s = data.draw(space_st)
    L = s.lie
    v = data.draw(st.sampled_from(SMALL[id(s)]))
    a = data.draw(st.integers(0, L.dim - 1))
    b = data.draw(st.integers(0, L.dim - 1))
    m = data.draw(st.integers(-4, 4))
    n = data.draw(st.integers(-4, 4))
    lhs = s.apply_mode(a, m, s.apply_mode(b, n, v)) - s.apply_mode(b, n, s.apply_mode(a, m, v))
    rhs = s.apply_mode(L.bracket(L.basis_elem(a), L.basis_elem(b)), m + n, v)
    if m + n == 0:
        rhs = rhs + v * (m * L.form_basis(a, b) * s.k)
    assert lhs == rhs


@PROPS
@given(st.data())
def test_mode_shifts_weight_and_charge(data):
    s = data.draw(space_st)
    L = s.lie
    v = data.draw(st.sampled_from(SMALL[id(s)]))
    b = data.draw(st.sampled_from(L.roots))
    n = data.draw(st.integers(-3, 3))
    out = s.apply_mode(L.x(b), n, v)
    if out:
        w, ch = s.grading(v)
        assert s.grading(out) == (w - n, tuple(c + d for c, d in zip(ch, b)))


def _before(a, b):
    # a = (index, mode) strictly before b in canonical order (creation modes only)
    return -a[1] > -b[1] or (a[1] == b[1] and a[0] < b[0])


def rewrite(space, word, rng):
    """Normal form by commuting a randomly chosen adjacent disordered pair."""
    L = space.lie
    todo = [(Fraction(1), tuple(word))]
    done = {}
    while todo:
        coef, w = todo.pop(rng.randrange(len(todo)))
        if w and w[-1][1] >= 0:
            continue  # annihilator on the vacuum
        bad = [i for i in range(len(w) - 1)
               if w[i + 1][1] >= 0 or (w[i] != w[i + 1] and not _before(w[i], w[i + 1]))]
        if not bad:
            mono = tuple((-n, a) for a, n in w)
            done[mono] = done.get(mono, 0) + coef
            continue
        i = rng.choice(bad)
        (a, m), (b, n) = w[i], w[i + 1]
        todo.append((coef, w[:i] + ((b, n), (a, m)) + w[i + 2:]))
        for c, val in L.bracket_basis(a, b).items():
            todo.append((coef * val, w[:i] + ((c, m + n),) + w[i + 2:]))
        if m + n == 0 and L.form_basis(a, b):
            todo.append((coef * m * L.form_basis(a, b) * space.k, w[:i] + w[i + 2:]))
    return space.vector({k: v for k, v in done.items() if v})


@PROPS
@given(st.data(), st.randoms(use_true_random=False))
def test_straightening_confluent(data, rng):
    s = data.draw(space_st)
    L = s.lie
    word = data.draw(st.lists(st.tuples(st.integers(0, L.dim - 1), st.integers(-3, 2)),
                              min_size=1, max_size=4))
    assert s.straighten(word) == rewrite(s, word, rng)
