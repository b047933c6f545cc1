"""Graded subspaces of V(k,0): charge-zero spaces, Heisenberg highest-weight
spaces, generated subalgebras, generated ideals and quotients.

A :class:`GradedBasis` keeps one :class:`~parafermion.echelon.Echelon` per
(weight, charge) bucket, with rows over canonical monomials.
"""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .echelon import Echelon, ResourceCapExceeded, intersection, kernel
from .fock import FockSpace, FockVector
from .vertex import mode_product

Key = Tuple[int, Tuple[int, ...]]

DEFAULT_BUCKET_CAP = 20000


class Deadline:
    """Wall-clock budget shared by long-running closures."""

    def __init__(self, seconds: Optional[float] = None):
        self.end = None if seconds is None else time.monotonic() + seconds

    def check(self):
        if self.end is not None and time.monotonic() > self.end:
            raise ResourceCapExceeded("wall-clock cap exceeded")


class GradedBasis:
    def __init__(self, space: FockSpace, max_weight: int, name: str = "",
                 cap: Optional[int] = DEFAULT_BUCKET_CAP):
        self.space = space
        self.max_weight = max_weight
        self.name = name
        self.cap = cap
        self.buckets: Dict[Key, Echelon] = {}

    def __repr__(self) -> str:
        return f"GradedBasis({self.name!r}, dims={self.dims_by_weight()})"

    def bucket(self, key: Key) -> Echelon:
        ech = self.buckets.get(key)
        if ech is None:
            ech = self.buckets[key] = Echelon(self.cap)
        return ech

    def keys(self) -> List[Key]:
        return sorted(k for k, e in self.buckets.items() if e.dim)

    def dim(self, key: Key) -> int:
        e = self.buckets.get(key)
        return e.dim if e else 0

    def dims_by_weight(self, charge=None) -> List[int]:
        out = [0] * (self.max_weight + 1)
        for (w, ch), e in self.buckets.items():
            if charge is None or ch == tuple(charge):
                out[w] += e.dim
        return out

    def basis(self, key: Key) -> List[FockVector]:
        e = self.buckets.get(key)
        if not e:
            return []
        return [FockVector(self.space, r) for r in e.basis()]

    def all_vectors(self, max_weight: Optional[int] = None) -> List[FockVector]:
        top = self.max_weight if max_weight is None else max_weight
        return [v for key in self.keys() if key[0] <= top for v in self.basis(key)]

    def add(self, v: FockVector) -> Optional[FockVector]:
        """Add a homogeneous vector; returns the new basis row if the span grew."""
        if not v:
            return None
        g = self.space.grading(v)
        if g is None:
            raise ValueError("inhomogeneous vector")
        if g[0] > self.max_weight:
            return None
        row = self.bucket(g).add(v.terms)
        return None if row is None else FockVector(self.space, row)

    def contains(self, v: FockVector) -> bool:
        if not v:
            return True
        g = self.space.grading(v)
        if g is None:
            # membership of each homogeneous component
            parts: Dict[Key, dict] = {}
            for m, c in v.terms.items():
                key = (self.space.mono_weight(m), self.space.mono_charge(m))
                parts.setdefault(key, {})[m] = c
            return all(self.contains(FockVector(self.space, p)) for p in parts.values())
        e = self.buckets.get(g)
        return e is not None and e.contains(v.terms)

    def issubset(self, other: "GradedBasis") -> bool:
        return all(other.buckets.get(key, Echelon()).dim >= self.dim(key)
                   and self.buckets[key].issubset(other.buckets.get(key, Echelon()))
                   for key in self.keys())

    def equals(self, other: "GradedBasis", max_weight: Optional[int] = None) -> bool:
        return not self.mismatches(other, max_weight)

    def mismatches(self, other: "GradedBasis", max_weight: Optional[int] = None) -> List[dict]:
        """Buckets where the two spans differ, with both dimensions."""
        top = min(self.max_weight, other.max_weight) if max_weight is None else max_weight
        out = []
        for key in sorted(set(self.keys()) | set(other.keys())):
            if key[0] > top:
                continue
            a = self.buckets.get(key) or Echelon()
            b = other.buckets.get(key) or Echelon()
            if not a.same_span(b):
                out.append({"weight": key[0], "charge": list(key[1]),
                            "dims": [a.dim, b.dim]})
        return out

    def copy(self, name: Optional[str] = None) -> "GradedBasis":
        g = GradedBasis(self.space, self.max_weight, name or self.name, self.cap)
        g.buckets = {k: e.copy() for k, e in self.buckets.items()}
        return g


@dataclass
class QuotientTable:
    rows: List[Tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def quotient_dims(self) -> List[int]:
        return [r[3] for r in self.rows]

    def to_dicts(self) -> List[dict]:
        return [dict(zip(("weight", "ambient", "ideal", "quotient"), r)) for r in self.rows]


# --- spaces -----------------------------------------------------------------

def _zero(space: FockSpace):
    return (0,) * space.lie.rank


def charge_space(space: FockSpace, max_weight: int, charge=None,
                 cap: Optional[int] = DEFAULT_BUCKET_CAP) -> GradedBasis:
    """V(k,0)(charge) up to weight max_weight (monomial basis)."""
    charge = _zero(space) if charge is None else tuple(charge)
    g = GradedBasis(space, max_weight, f"V(k,0)({charge})", cap)
    for w in range(max_weight + 1):
        monos = space.enumerate_basis(w, charge)
        if cap is not None and len(monos) > cap:
            raise ResourceCapExceeded(f"bucket dimension cap {cap} exceeded")
        e = g.bucket((w, charge))
        for m in monos:
            e.rows[m] = {m: 1}
        e.pivots = sorted(e.rows)
    return g


def charge_zero_space(space: FockSpace, max_weight: int, cap: Optional[int] = DEFAULT_BUCKET_CAP) -> GradedBasis:
    return charge_space(space, max_weight, None, cap)


def full_space(space: FockSpace, max_weight: int, cap: Optional[int] = DEFAULT_BUCKET_CAP) -> GradedBasis:
    """All of V(k,0) up to weight max_weight."""
    g = GradedBasis(space, max_weight, "V(k,0)", cap)
    for w in range(max_weight + 1):
        for charge, monos in space.monomials_of_weight(w).items():
            e = g.bucket((w, charge))
            for m in monos:
                e.rows[m] = {m: 1}
            e.pivots = sorted(e.rows)
    return g


def highest_weight_space(space: FockSpace, max_weight: int, charge=None,
                         cap: Optional[int] = DEFAULT_BUCKET_CAP) -> GradedBasis:
    """N_charge: vectors with h(m)v = 0 for m >= 1, in V(k,0)(charge)."""
    lie = space.lie
    charge = _zero(space) if charge is None else tuple(charge)
    g = GradedBasis(space, max_weight, f"N_{charge}", cap)
    for w in range(max_weight + 1):
        monos = space.enumerate_basis(w, charge)
        if cap is not None and len(monos) > cap:
            raise ResourceCapExceeded(f"bucket dimension cap {cap} exceeded")

        def columns():
            for m in monos:
                image = {}
                for i in lie.cartan_indices:
                    for n in range(1, w + 1):
                        for t, c in space.annihilate(i, n, m).items():
                            image[(i, n, t)] = c
                yield m, image

        e = g.bucket((w, charge))
        for vec in kernel(columns()):
            e.add(vec)
    return g


# --- closures ---------------------------------------------------------------

def _mode_range(wt_s: int, wt_w: int, max_weight: int):
    # target weight wt_s + wt_w - n - 1 must lie in [0, max_weight]
    return range(wt_s + wt_w - 1 - max_weight, wt_s + wt_w)


def _homogeneous(vectors: Sequence[FockVector], what: str) -> List[Tuple[FockVector, int]]:
    out = []
    for s in vectors:
        if not s:
            continue
        g = s.space.grading(s)
        if g is None:
            raise ValueError(f"non-homogeneous {what}")
        out.append((s, g[0]))
    return out


def _close(result: GradedBasis, seeds: Iterable[FockVector],
           multipliers: List[Tuple[FockVector, int]], deadline: Optional[Deadline]) -> GradedBasis:
    """Worklist closure of result under s_n for s in multipliers."""
    N = result.max_weight
    queue = deque()
    for v in seeds:
        row = result.add(v)
        if row is not None:
            queue.append(row)
    while queue:
        w = queue.popleft()
        wt_w = w.max_weight()
        for s, wt_s in multipliers:
            for n in _mode_range(wt_s, wt_w, N):
                if deadline is not None:
                    deadline.check()
                t = mode_product(s, n, w)
                if t:
                    row = result.add(t)
                    if row is not None:
                        queue.append(row)
    return result


def generated_subalgebra(generators: Sequence[FockVector], max_weight: int,
                         modulo: Optional[GradedBasis] = None,
                         deadline: Optional[Deadline] = None,
                         cap: Optional[int] = DEFAULT_BUCKET_CAP) -> GradedBasis:
    """Smallest graded space containing the vacuum and closed under s_n.

    Products are kept when their weight is at most ``max_weight``.  With
    ``modulo`` (an ideal) the closure runs in the quotient: the result's
    buckets contain the ideal, and quotient dimensions are differences.
    """
    if not generators:
        raise ValueError("need at least one generator")
    space = generators[0].space
    gens = _homogeneous(generators, "generator")
    if modulo is not None:
        result = modulo.copy("subalgebra")
        result.max_weight = max_weight
    else:
        result = GradedBasis(space, max_weight, "subalgebra", cap)
    return _close(result, [space.vacuum], gens, deadline)


def generated_ideal(gen: FockVector, ambient: GradedBasis,
                    multipliers: Optional[Sequence[FockVector]] = None,
                    max_weight: Optional[int] = None,
                    deadline: Optional[Deadline] = None) -> GradedBasis:
    """Span of u_n gen and its closure under the same products.

    ``u`` runs over the ambient basis up to ``max_weight`` unless explicit
    ``multipliers`` (e.g. strong generators of the ambient algebra) are given.
    """
    N = ambient.max_weight if max_weight is None else max_weight
    result = GradedBasis(ambient.space, N, "ideal", ambient.cap)
    if not gen:
        return result
    if not ambient.contains(gen):
        raise ValueError("generator outside ambient")
    if multipliers is None:
        multipliers = ambient.all_vectors(N)
    mult = _homogeneous(multipliers, "multiplier")
    return _close(result, [gen], mult, deadline)


def intersect(a: GradedBasis, b: GradedBasis, name: str = "") -> GradedBasis:
    out = GradedBasis(a.space, min(a.max_weight, b.max_weight), name or f"{a.name}&{b.name}", a.cap)
    for key in set(a.keys()) & set(b.keys()):
        if key[0] > out.max_weight:
            continue
        e = intersection(a.buckets[key].basis(), b.buckets[key].basis())
        if e.dim:
            out.buckets[key] = e
    return out


def quotient_dims(ambient: GradedBasis, ideal: GradedBasis, charge=None) -> QuotientTable:
    """Per-weight dimensions of ambient / ideal (optionally one charge only)."""
    if not ideal.issubset(ambient):
        raise ValueError("ideal is not contained in the ambient space")
    amb = ambient.dims_by_weight(charge)
    idl = ideal.dims_by_weight(charge)
    table = QuotientTable()
    for w in range(min(len(amb), len(idl))):
        table.rows.append((w, amb[w], idl[w], amb[w] - idl[w]))
    return table


def affine_ideal(space: FockSpace, gen: FockVector, max_weight: int,
                 deadline: Optional[Deadline] = None,
                 cap: Optional[int] = DEFAULT_BUCKET_CAP) -> GradedBasis:
    """Ideal of V(k,0) generated by gen, up to max_weight.

    V(k,0) is generated by the a(-1)|0>, so closing under their modes a(n)
    gives the ideal; below the weight cap this is exact because creation
    modes only raise the weight.
    """
    lie = space.lie
    result = GradedBasis(space, max_weight, "J", cap)
    queue = deque()
    row = result.add(gen)
    if row is not None:
        queue.append(row)
    while queue:
        w = queue.popleft()
        wt = w.max_weight()
        for b in range(lie.dim):
            for n in range(-(max_weight - wt), wt + 1):
                if deadline is not None:
                    deadline.check()
                t = space.apply_mode(b, n, w)
                if t:
                    row = result.add(t)
                    if row is not None:
                        queue.append(row)
    return result
