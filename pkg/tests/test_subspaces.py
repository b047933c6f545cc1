import pytest

import oracles
from minimal_model_character import vacuum_character
from parafermion.distinguished import omega_parafermion, parafermion_singular, theta_singular
from parafermion.fock import FockSpace
from parafermion.lie import build_algebra
from parafermion.subspaces import (GradedBasis, affine_ideal, charge_space, charge_zero_space,
                                   full_space, generated_ideal, generated_subalgebra,
                                   highest_weight_space, intersect, quotient_dims)

A1, A2, C2 = (build_algebra(n) for n in ("A1", "A2", "C2"))


def test_charge_zero_dims():
    assert charge_zero_space(FockSpace(A1, 1), 4).dims_by_weight() == [1, 1, 3, 6, 13]
    dims = charge_zero_space(FockSpace(A2, 1), 3).dims_by_weight()
    assert dims[:2] == [1, 2] and dims == oracles.charge_zero_dims("A", 2, 3)


def test_charged_space_matches_oracle():
    s = FockSpace(A2, 1)
    counts = oracles.graded_counts(oracles.algebra_charges("A", 2), 4)
    got = charge_space(s, 4, (1, 1)).dims_by_weight()
    assert got == [counts.get((w, (1, 1)), 0) for w in range(5)]


@pytest.mark.parametrize("name,k,top", [("A1", 1, 5), ("A1", 3, 5), ("A2", 1, 4), ("C2", 1, 3),
                                        ("G2", 1, 2)])
def test_commutant_dims_match_character(name, k, top):
    L = build_algebra(name)
    got = highest_weight_space(FockSpace(L, k), top).dims_by_weight()
    assert got == oracles.commutant_dims(L.series, L.rank, top)


def test_commutant_examples():
    s = FockSpace(A1, 2)
    n0 = highest_weight_space(s, 4)
    assert n0.dims_by_weight() == [1, 0, 1, 2, 4]
    assert n0.contains(omega_parafermion(s).vector)
    assert not n0.contains(s.straighten([(A1.h(0), -1)]))


@pytest.mark.parametrize("name,k,top", [("A1", 2, 6), ("A2", 1, 4), ("C2", 2, 3)])
def test_heisenberg_decomposition(name, k, top):
    L = build_algebra(name)
    s = FockSpace(L, k)
    v0 = charge_zero_space(s, top).dims_by_weight()
    n0 = highest_weight_space(s, top).dims_by_weight()
    p = oracles.partitions(top, L.rank)
    assert v0 == [sum(p[j] * n0[w - j] for j in range(w + 1)) for w in range(top + 1)]


def test_vacuum_generates_nothing_else():
    s = FockSpace(A2, 1)
    assert generated_subalgebra([s.vacuum], 4).dims_by_weight() == [1, 0, 0, 0, 0]


def test_generated_subalgebra_idempotent():
    s = FockSpace(A1, 2)
    om = omega_parafermion(s).vector
    first = generated_subalgebra([om], 5)
    again = generated_subalgebra(first.all_vectors(), 5)
    assert first.equals(again)
    assert first.dims_by_weight() == [1, 0, 1, 1, 2, 2]


def test_inhomogeneous_generator_rejected():
    s = FockSpace(A1, 1)
    with pytest.raises(ValueError):
        generated_subalgebra([s.vacuum + omega_parafermion(s).vector], 3)


def test_ideal_trivial_generators():
    s = FockSpace(A1, 2)
    n0 = highest_weight_space(s, 4)
    assert generated_ideal(s.vacuum, n0).equals(n0)
    assert generated_ideal(s.zero, n0).dims_by_weight() == [0] * 5
    with pytest.raises(ValueError, match="outside ambient"):
        generated_ideal(s.straighten([(A1.h(0), -1)]), n0)


def test_quotient_rejects_non_subspace():
    s = FockSpace(A1, 2)
    n0 = highest_weight_space(s, 3)
    with pytest.raises(ValueError):
        quotient_dims(n0, charge_zero_space(s, 3))


def test_quotient_level_one():
    s = FockSpace(A1, 1)
    n0 = highest_weight_space(s, 4)
    J = affine_ideal(s, theta_singular(s).vector, 4)
    table = quotient_dims(n0, intersect(J, n0))
    assert table.quotient_dims == [1, 0, 0, 0, 0]
    full = full_space(s, 2)
    J2 = affine_ideal(s, theta_singular(s).vector, 2)
    assert quotient_dims(full, J2).rows[1] == (1, 3, 0, 3)
    assert all(r["quotient"] >= 0 for r in table.to_dicts())


def test_quotient_ising():
    s = FockSpace(A1, 2)
    n0 = highest_weight_space(s, 6)
    J = affine_ideal(s, theta_singular(s).vector, 6)
    table = quotient_dims(n0, intersect(J, n0))
    assert table.quotient_dims == vacuum_character(4, 3, 7)


@pytest.mark.parametrize("L,k,top", [(A1, 1, 4), (A1, 3, 5), (C2, 1, 3)])
def test_ideal_cross_check(L, k, top):
    s = FockSpace(L, k)
    n0 = highest_weight_space(s, top)
    J = affine_ideal(s, theta_singular(s).vector, top)
    via_j = intersect(J, n0)
    direct = generated_ideal(parafermion_singular(s).vector, n0)
    assert direct.mismatches(via_j) == []
    assert via_j.issubset(n0)


def test_graded_basis_helpers():
    s = FockSpace(A1, 1)
    g = GradedBasis(s, 2, "g")
    om = omega_parafermion(s).vector
    assert g.add(om) is not None and g.add(om * 3) is None
    assert g.dims_by_weight() == [0, 0, 1]
    assert g.contains(om) and g.contains(s.zero) and not g.contains(s.vacuum)
    with pytest.raises(ValueError):
        g.add(om + s.vacuum)
    c = g.copy("c")
    c.add(s.vacuum)
    assert g.issubset(c) and not c.issubset(g)
    assert g.mismatches(c) == [{"weight": 0, "charge": [0], "dims": [0, 1]}]
