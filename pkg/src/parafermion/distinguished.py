"""Named vectors of V(k,0): conformal vectors, W3 vectors, singular vectors."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .fock import FockSpace, FockVector, Terms, add_into
from .lie import AlgElem, Root, WeylAutomorphism


@dataclass(frozen=True)
class NamedVector:
    name: str
    vector: FockVector
    weight: int
    charge: Tuple[int, ...]
    note: str = ""

    def __post_init__(self):
        if self.vector and self.vector.space.grading(self.vector) != (self.weight, self.charge):
            raise ValueError(f"{self.name}: grading differs from ({self.weight}, {self.charge})")

    def to_dict(self) -> dict:
        return {"name": self.name, "weight": self.weight, "charge": list(self.charge),
                "note": self.note, "vector": self.vector.to_text()}


def _zero(space: FockSpace) -> Tuple[int, ...]:
    return (0,) * space.lie.rank


def _inverse(matrix: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    n = len(matrix)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col])
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def cartan_casimir(space: FockSpace, basis: Optional[Sequence[AlgElem]] = None) -> FockVector:
    """sum_i u_i(-1) u^i(-1)|0> over a basis of h and its dual under <,>.

    Independent of the chosen basis; ``basis`` defaults to the simple coroots.
    """
    lie = space.lie
    if basis is None:
        basis = [lie.basis_elem(i) for i in lie.cartan_indices]
    gram = [[lie.form(a, b) for b in basis] for a in basis]
    inv = _inverse(gram)
    out: Terms = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if inv[i][j]:
                add_into(out, space.straighten([(a, -1), (b, -1)]).terms, inv[i][j])
    return FockVector(space, out)


def omega_aff(space: FockSpace) -> NamedVector:
    lie, k = space.lie, space.k
    out: Terms = dict(cartan_casimir(space).terms)
    for a in lie.roots:
        neg = tuple(-c for c in a)
        scale = lie.inner(a, a) / 2
        v = space.straighten([(lie.x(a), -1), (lie.x(neg), -1)])
        add_into(out, v.terms, scale)
    vec = FockVector(space, out) * Fraction(1, 2 * (k + lie.dual_coxeter))
    return NamedVector("omega_aff", vec, 2, _zero(space), "Sugawara vector")


def omega_h(space: FockSpace) -> NamedVector:
    vec = cartan_casimir(space) * Fraction(1, 2 * space.k)
    return NamedVector("omega_h", vec, 2, _zero(space), "Heisenberg conformal vector")


def omega_parafermion(space: FockSpace) -> NamedVector:
    vec = omega_aff(space).vector - omega_h(space).vector
    return NamedVector("omega", vec, 2, _zero(space), "omega_aff - omega_h")


def _check_positive(space: FockSpace, alpha) -> Root:
    alpha = tuple(alpha)
    if alpha not in space.lie.positive_roots:
        raise ValueError(f"{alpha} is not a positive root")
    return alpha


def omega_alpha(space: FockSpace, alpha) -> NamedVector:
    """(1/(2K(K+2))) (-K h(-2) - h(-1)^2 + 2K x_a(-1) x_{-a}(-1))|0>, K = k_alpha."""
    lie = space.lie
    alpha = _check_positive(space, alpha)
    K = lie.level_rescale(alpha, space.k)
    x, h, y = lie.sl2_triple(alpha)
    vec = (space.straighten([(h, -2)]) * (-K)
           - space.straighten([(h, -1), (h, -1)])
           + space.straighten([(x, -1), (y, -1)]) * (2 * K))
    vec = vec * Fraction(1, 2 * K * (K + 2))
    return NamedVector(f"omega_alpha[{alpha}]", vec, 2, _zero(space), f"k_alpha = {K}")


def w3_alpha(space: FockSpace, alpha) -> NamedVector:
    """The weight-3 primary W^3_alpha, unnormalised, with K = k_alpha."""
    lie = space.lie
    alpha = _check_positive(space, alpha)
    K = lie.level_rescale(alpha, space.k)
    x, h, y = lie.sl2_triple(alpha)
    s = space.straighten
    vec = (s([(h, -3)]) * K ** 2
           + s([(h, -2), (h, -1)]) * (3 * K)
           + s([(h, -1), (h, -1), (h, -1)]) * 2
           - s([(h, -1), (x, -1), (y, -1)]) * (6 * K)
           + s([(x, -2), (y, -1)]) * (3 * K ** 2)
           - s([(x, -1), (y, -2)]) * (3 * K ** 2))
    return NamedVector(f"W3_alpha[{alpha}]", vec, 3, _zero(space), f"k_alpha = {K}")


def root_power_vector(space: FockSpace, alpha, power: int) -> FockVector:
    """x_alpha(-1)^power |0>."""
    idx = space.lie.x(alpha)
    return space.straighten([(idx, -1)] * power)


def lowered_vector(space: FockSpace, alpha, power: int, lowering: Optional[int] = None) -> FockVector:
    """x_{-alpha}(0)^lowering x_alpha(-1)^power |0>, lowering defaults to power."""
    alpha = tuple(alpha)
    neg = tuple(-c for c in alpha)
    lowering = power if lowering is None else lowering
    idx = space.lie.x(neg)
    v = root_power_vector(space, alpha, power)
    for _ in range(lowering):
        v = space.apply_mode(idx, 0, v)
    return v


def theta_singular(space: FockSpace) -> NamedVector:
    theta = space.lie.theta
    k = space.k
    vec = root_power_vector(space, theta, k + 1)
    charge = tuple((k + 1) * c for c in theta)
    return NamedVector("theta_singular", vec, k + 1, charge, "x_theta(-1)^(k+1)|0>")


def parafermion_singular(space: FockSpace) -> NamedVector:
    k = space.k
    vec = lowered_vector(space, space.lie.theta, k + 1)
    return NamedVector("parafermion_singular", vec, k + 1, _zero(space),
                       "x_-theta(0)^(k+1) x_theta(-1)^(k+1)|0>")


def alpha_singular(space: FockSpace, alpha) -> FockVector:
    """x_{-a}(0)^{K+1} x_a(-1)^{K+1}|0> with K = k_alpha."""
    alpha = _check_positive(space, alpha)
    K = space.lie.level_rescale(alpha, space.k)
    return lowered_vector(space, alpha, K + 1)


def weyl_apply(sigma: WeylAutomorphism, v: FockVector) -> FockVector:
    """Factor-wise action of a Lie algebra automorphism on V(k,0)."""
    space = v.space
    if sigma.lie is not space.lie:
        raise ValueError("automorphism and vector use different Lie algebras")
    out: Terms = {}
    for mono, c in v.terms.items():
        word = [(sigma.image(i), -d) for d, i in mono]
        add_into(out, space.straighten(word).terms, c)
    return FockVector(space, out)
