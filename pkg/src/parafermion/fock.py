"""The vacuum module V(k,0) as a space of canonical PBW monomials.

A monomial is a tuple of factors ``(depth, index)`` meaning
``b_index(-depth)``; the tuple is read left to right as operators applied
to the vacuum.  Canonical order: depth non-increasing, ties broken by the
basis index of the Lie algebra.  The empty tuple is the vacuum.

All monomial-level results are cached per :class:`FockSpace` and carry
integer coefficients (the Chevalley structure constants, the form on the
basis and the level are integers).  Rational coefficients only enter
through user-built vectors.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .lie import AlgElem, LieData, Root

Factor = Tuple[int, int]
Monomial = Tuple[Factor, ...]
Terms = Dict[Monomial, Rational]

VACUUM: Monomial = ()


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def add_into(out: Terms, terms: Mapping[Monomial, Rational], scale: Rational = 1) -> None:
    for m, c in terms.items():
        v = out.get(m, 0) + scale * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)


def _before(a: Factor, b: Factor) -> bool:
    """Strict canonical precedence of factor a over factor b."""
    return a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


class FockSpace:
    """V(k,0) for a fixed Lie algebra and numeric level k."""

    def __init__(self, lie: LieData, k: int):
        if k < 1:
            raise ValueError("level must be a positive integer")
        self.lie = lie
        self.k = k
        self._create: Dict[Tuple[int, int, Monomial], Terms] = {}
        self._ann: Dict[Tuple[int, int, Monomial], Terms] = {}
        self.products: Dict = {}  # memo for the vertex engine
        self._by_weight: Dict[int, Dict[Root, List[Monomial]]] = {}
        self._zero = (0,) * lie.rank

    def __repr__(self) -> str:
        return f"FockSpace({self.lie.name}, k={self.k})"

    # --- monomial level -------------------------------------------------
    def create(self, c: int, d: int, mono: Monomial) -> Terms:
        """c(-d) applied to a canonical monomial, d >= 1."""
        if not mono or not _before(mono[0], (d, c)):
            return {((d, c),) + mono: 1}
        key = (c, d, mono)
        hit = self._create.get(key)
        if hit is not None:
            return hit
        f = mono[0]
        rest = mono[1:]
        out: Terms = {}
        for m, a in self.create(c, d, rest).items():
            add_into(out, self.create(f[1], f[0], m), a)
        # [c(-d), f] = [c, f_b](-d - f_d); no central term for two creators
        for e, a in self.lie.bracket_basis(c, f[1]).items():
            add_into(out, self.create(e, d + f[0], rest), a)
        self._create[key] = out
        return out

    def annihilate(self, b: int, n: int, mono: Monomial) -> Terms:
        """b(n) applied to a canonical monomial, n >= 0."""
        if not mono:
            return {}
        key = (b, n, mono)
        hit = self._ann.get(key)
        if hit is not None:
            return hit
        d, c = mono[0]
        rest = mono[1:]
        out: Terms = {}
        for m, a in self.annihilate(b, n, rest).items():
            add_into(out, self.create(c, d, m), a)
        for e, a in self.lie.bracket_basis(b, c).items():
            add_into(out, self.mode(e, n - d, rest), a)
        if n == d:
            f = self.lie.form_basis(b, c)
            if f:
                add_into(out, {rest: 1}, n * f * self.k)
        self._ann[key] = out
        return out

    def mode(self, b: int, n: int, mono: Monomial) -> Terms:
        if n < 0:
            return self.create(b, -n, mono)
        return self.annihilate(b, n, mono)

    def act_terms(self, b: int, n: int, terms: Mapping[Monomial, Rational]) -> Terms:
        out: Terms = {}
        for m, a in terms.items():
            add_into(out, self.mode(b, n, m), a)
        return out

    # --- vectors --------------------------------------------------------
    def vector(self, terms: Optional[Mapping[Monomial, Rational]] = None) -> "FockVector":
        return FockVector(self, terms or {})

    @property
    def vacuum(self) -> "FockVector":
        return FockVector(self, {VACUUM: 1})

    @property
    def zero(self) -> "FockVector":
        return FockVector(self, {})

    def monomial(self, factors: Sequence[Factor]) -> "FockVector":
        """The vector b1(-d1) ... bs(-ds)|0> for factors given as (depth, index)."""
        return self.straighten([(i, -d) for d, i in factors])

    def straighten(self, word: Sequence[Tuple[Union[int, AlgElem], int]]) -> "FockVector":
        """Canonical expansion of a word of modes applied to the vacuum.

        ``word`` lists ``(element, mode)`` pairs left to right; elements are
        basis indices or :class:`AlgElem`.
        """
        terms: Terms = {VACUUM: 1}
        for a, n in reversed(word):
            elem = a if isinstance(a, AlgElem) else self.lie.basis_elem(a)
            out: Terms = {}
            for b, coef in elem.terms.items():
                add_into(out, self.act_terms(b, n, terms), coef)
            terms = out
        return FockVector(self, terms)

    def apply_mode(self, a: Union[int, AlgElem], n: int, v: "FockVector") -> "FockVector":
        """a(n) v."""
        elem = a if isinstance(a, AlgElem) else self.lie.basis_elem(a)
        out: Terms = {}
        for b, coef in elem.terms.items():
            add_into(out, self.act_terms(b, n, v.terms), coef)
        return FockVector(self, out)

    # --- grading --------------------------------------------------------
    def mono_weight(self, mono: Monomial) -> int:
        return sum(d for d, _ in mono)

    def mono_charge(self, mono: Monomial) -> Root:
        ch = list(self._zero)
        charges = self.lie.charges
        for _, i in mono:
            for j, c in enumerate(charges[i]):
                ch[j] += c
        return tuple(ch)

    def grading(self, v: "FockVector"):
        """(weight, charge) shared by all terms, or None if inhomogeneous.

        The zero vector is reported as None as well.
        """
        grades = {(self.mono_weight(m), self.mono_charge(m)) for m in v.terms}
        if len(grades) != 1:
            return None
        return grades.pop()

    # --- bases ----------------------------------------------------------
    def monomials_of_weight(self, w: int) -> Dict[Root, List[Monomial]]:
        """All canonical monomials of weight w, grouped by charge."""
        if w in self._by_weight:
            return self._by_weight[w]
        dim = self.lie.dim
        factors = [(d, i) for d in range(w, 0, -1) for i in range(dim)]
        groups: Dict[Root, List[Monomial]] = {}

        def rec(start: int, remaining: int, prefix: List[Factor]):
            if remaining == 0:
                m = tuple(prefix)
                groups.setdefault(self.mono_charge(m), []).append(m)
                return
            for pos in range(start, len(factors)):
                f = factors[pos]
                if f[0] > remaining:
                    continue
                prefix.append(f)
                rec(pos, remaining - f[0], prefix)
                prefix.pop()

        rec(0, w, [])
        self._by_weight[w] = groups
        return groups

    def enumerate_basis(self, w: int, charge: Optional[Sequence[int]] = None) -> List[Monomial]:
        if w < 0:
            return []
        charge = self._zero if charge is None else tuple(charge)
        return list(self.monomials_of_weight(w).get(charge, []))

    # --- text -----------------------------------------------------------
    def format_monomial(self, mono: Monomial) -> str:
        parts = [f"{self.lie.labels[i]}(-{d})" for d, i in mono]
        return " ".join(parts + ["|0>"])

    def parse_monomial(self, text: str) -> "FockVector":
        """Inverse of :meth:`format_monomial` (accepts any factor order)."""
        lookup = {lab: i for i, lab in enumerate(self.lie.labels)}
        word = []
        for lab, n in re.findall(r"(h\d+|x\[[^\]]+\])\((-?\d+)\)", text):
            if lab not in lookup:
                raise ValueError(f"unknown basis label {lab!r}")
            word.append((lookup[lab], int(n)))
        return self.straighten(word)

    def translate(self, v: "FockVector") -> "FockVector":
        """The derivation D with D a(-m) = m a(-m-1) and D|0> = 0."""
        out: Terms = {}
        for mono, c in v.terms.items():
            for pos, (d, i) in enumerate(mono):
                word = [(j, -e) for e, j in mono[:pos]] + [(i, -d - 1)] + [(j, -e) for e, j in mono[pos + 1:]]
                add_into(out, self.straighten(word).terms, c * d)
        return FockVector(self, out)


class FockVector:
    """Finite rational combination of canonical monomials in V(k,0)."""

    __slots__ = ("space", "terms")

    def __init__(self, space: FockSpace, terms: Mapping[Monomial, Rational]):
        self.space = space
        self.terms: Terms = {m: _clean(c) for m, c in terms.items() if c != 0}

    @property
    def level(self) -> int:
        return self.space.k

    def _check(self, other: "FockVector"):
        if other.space is not self.space:
            raise ValueError("vectors live in different Fock spaces")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = dict(self.terms)
        add_into(out, other.terms)
        return FockVector(self.space, out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = dict(self.terms)
        add_into(out, other.terms, -1)
        return FockVector(self.space, out)

    def __neg__(self) -> "FockVector":
        return FockVector(self.space, {m: -c for m, c in self.terms.items()})

    def __mul__(self, scalar) -> "FockVector":
        return FockVector(self.space, {m: c * scalar for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "FockVector":
        return FockVector(self.space, {m: Fraction(c) / scalar for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, FockVector) and other.space is self.space and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Rational]]:
        return iter(sorted(self.terms.items()))

    @property
    def weight(self) -> Optional[int]:
        g = self.space.grading(self)
        return None if g is None else g[0]

    @property
    def charge(self) -> Optional[Root]:
        g = self.space.grading(self)
        return None if g is None else g[1]

    def max_weight(self) -> int:
        return max((self.space.mono_weight(m) for m in self.terms), default=0)

    def coefficient(self, mono: Monomial) -> Rational:
        return self.terms.get(mono, 0)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            parts.append(f"({c}) {self.space.format_monomial(mono)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FockVector[{self.to_text()}]"
