"""Vertex-operator modes u_n v on V(k,0).

Convention: Y(u, z) = sum_n u_n z^{-n-1}, so (a(-1)|0>)_n = a(n) and
L(n) = omega_{n+1}.

For a monomial u = a(-m) w the iterate formula gives

    u_n v = sum_j C(m+j-1, j) a(-m-j) (w_{n+j} v)
            - (-1)^m sum_j C(m+j-1, j) w_{n-m-j} (a(j) v)

Both sums are finite: w_{n+j} v vanishes once wt(w) + wt(v) - n - j - 1 < 0
and a(j) v vanishes for j > wt(v).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Dict, List, Optional, Sequence

from .fock import FockSpace, FockVector, Monomial, Terms, add_into


def _product(space: FockSpace, u: Monomial, n: int, v: Monomial, slack: int = 0) -> Terms:
    wt_v = space.mono_weight(v)
    wt_u = space.mono_weight(u)
    if wt_u + wt_v - n - 1 < 0:
        return {}
    if not u:
        return {v: 1} if n == -1 else {}
    memo = space.products
    key = (u, n, v)
    if not slack:
        hit = memo.get(key)
        if hit is not None:
            return hit
    m, a = u[0]
    w = u[1:]
    wt_w = wt_u - m
    out: Terms = {}
    for j in range(wt_w + wt_v - n + slack):
        inner = _product(space, w, n + j, v, slack)
        if not inner:
            continue
        c = comb(m + j - 1, j)
        for mono, coef in inner.items():
            add_into(out, space.create(a, m + j, mono), c * coef)
    sign = 1 if m % 2 else -1
    for j in range(wt_v + 1 + slack):
        av = space.annihilate(a, j, v)
        if not av:
            continue
        c = sign * comb(m + j - 1, j)
        for mono, coef in av.items():
            add_into(out, _product(space, w, n - m - j, mono, slack), c * coef)
    if not slack:
        memo[key] = out
    return out


def mode_product(u: FockVector, n: int, v: FockVector, slack: int = 0) -> FockVector:
    """u_n v.

    ``slack`` widens both truncated sums by that many extra terms; the result
    must not change (used to test that the truncation is exact).
    """
    space = u.space
    if v.space is not space:
        raise ValueError("u and v live in different Fock spaces")
    out: Terms = {}
    for um, uc in u.terms.items():
        for vm, vc in v.terms.items():
            add_into(out, _product(space, um, n, vm, slack), uc * vc)
    return FockVector(space, out)


def l_mode(omega: FockVector, n: int, v: FockVector) -> FockVector:
    """L(n) v with L(n) = omega_{n+1}."""
    return mode_product(omega, n + 1, v)


def all_monomials(space: FockSpace, max_weight: int) -> List[FockVector]:
    out = []
    for w in range(max_weight + 1):
        for charge, monos in sorted(space.monomials_of_weight(w).items()):
            out.extend(space.vector({m: 1}) for m in monos)
    return out


@dataclass
class VirasoroResult:
    is_virasoro: bool
    central_charge: Optional[Rational]
    checked: int = 0
    failure: Optional[Dict] = None
    notes: List[str] = field(default_factory=list)


def virasoro_check(omega: FockVector, bound: int = 2,
                   samples: Optional[Sequence[FockVector]] = None,
                   translation_samples: Optional[Sequence[FockVector]] = None) -> VirasoroResult:
    """Check the Virasoro relations for the modes of omega.

    The relations [L(m), L(n)] = (m-n) L(m+n) + (m^3-m)/12 c delta_{m+n,0}
    are tested for |m|, |n| <= bound on every monomial of weight <= bound
    (or on ``samples``), with c read off from L(2) L(-2)|0> = (c/2)|0>.

    L(-1) u = u_{-2}|0> only holds inside the vertex algebra omega is
    conformal for, so it is checked on ``translation_samples``, which
    default to the vacuum and omega itself.
    """
    space = omega.space
    g = space.grading(omega)
    if g is None or g[0] != 2 or any(g[1]):
        return VirasoroResult(False, None, failure={"reason": "omega is not weight 2, charge 0"})
    vac = space.vacuum
    top = l_mode(omega, 2, l_mode(omega, -2, vac))
    c = 2 * top.coefficient(()) if set(top.terms) <= {()} else None
    if c is None:
        return VirasoroResult(False, None, failure={"reason": "L(2)L(-2)|0> not proportional to vacuum"})
    c = Fraction(c)
    c = c.numerator if c.denominator == 1 else c
    if samples is None:
        samples = all_monomials(space, bound)
    if translation_samples is None:
        translation_samples = [vac, omega]
    checked = 0
    for v in samples:
        for m in range(-bound, bound + 1):
            for n in range(-bound, bound + 1):
                lhs = l_mode(omega, m, l_mode(omega, n, v)) - l_mode(omega, n, l_mode(omega, m, v))
                rhs = l_mode(omega, m + n, v) * (m - n)
                if m + n == 0:
                    rhs = rhs + v * (Fraction(m ** 3 - m, 12) * c)
                checked += 1
                if lhs != rhs:
                    return VirasoroResult(False, c, checked, failure={
                        "m": m, "n": n, "witness": v.to_text(),
                        "difference": (lhs - rhs).to_text()})
    for v in translation_samples:
        checked += 1
        if l_mode(omega, -1, v) != mode_product(v, -2, vac):
            return VirasoroResult(False, c, checked, failure={
                "reason": "L(-1)u != u_{-2}|0>", "witness": v.to_text()})
    return VirasoroResult(True, c, checked)


def primary_check(omega: FockVector, v: FockVector, delta: Rational) -> bool:
    """L(0) v = delta v and L(n) v = 0 for 1 <= n <= wt(v)."""
    if l_mode(omega, 0, v) != v * delta:
        return False
    top = v.max_weight()
    return all(not l_mode(omega, n, v) for n in range(1, top + 1))
