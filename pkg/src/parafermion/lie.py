"""Simple Lie algebras in a Chevalley basis with exact structure constants.

The algebra is built from its Dynkin type.  Positive roots come from the
usual root-string closure over the Cartan matrix; the constants
``N(a, b)`` are fixed by declaring every extraspecial pair positive and
propagating signs through the standard relations between the ``N``'s.

The Cartan part of the basis consists of the simple coroots
``h_i = 2 t_{a_i} / <a_i, a_i>``.  With long roots of squared length 2 this
makes every structure constant and every value of the form on the basis an
integer, which keeps the Fock-space arithmetic integral.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Root = Tuple[int, ...]

DEFAULT_MAX_RANK = 4


class UnsupportedAlgebra(ValueError):
    pass


def _frac(x) -> Rational:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _inner_products(series: str, rank: int) -> List[List[Fraction]]:
    """Gram matrix of the simple roots, long roots normalised to length 2."""
    G = [[Fraction(0)] * rank for _ in range(rank)]

    def link(i, j, value):
        G[i][j] = G[j][i] = Fraction(value)

    if series == "A" and rank >= 1:
        for i in range(rank):
            G[i][i] = Fraction(2)
        for i in range(rank - 1):
            link(i, i + 1, -1)
    elif series == "B" and rank >= 2:
        for i in range(rank - 1):
            G[i][i] = Fraction(2)
        G[rank - 1][rank - 1] = Fraction(1)
        for i in range(rank - 1):
            link(i, i + 1, -1)
    elif series == "C" and rank >= 2:
        for i in range(rank - 1):
            G[i][i] = Fraction(1)
        G[rank - 1][rank - 1] = Fraction(2)
        for i in range(rank - 2):
            link(i, i + 1, Fraction(-1, 2))
        link(rank - 2, rank - 1, -1)
    elif series == "D" and rank >= 4:
        for i in range(rank):
            G[i][i] = Fraction(2)
        for i in range(rank - 2):
            link(i, i + 1, -1)
        link(rank - 3, rank - 1, -1)
    elif series == "E" and rank in (6, 7, 8):
        # Bourbaki labelling: 1-3-4-5-6(-7-8), 2 attached to 4
        for i in range(rank):
            G[i][i] = Fraction(2)
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, rank - 1):
            link(i, i + 1, -1)
    elif series == "F" and rank == 4:
        G[0][0] = G[1][1] = Fraction(2)
        G[2][2] = G[3][3] = Fraction(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, Fraction(-1, 2))
    elif series == "G" and rank == 2:
        G[0][0] = Fraction(2, 3)
        G[1][1] = Fraction(2)
        link(0, 1, -1)
    else:
        raise UnsupportedAlgebra(f"unsupported algebra {series}{rank}")
    return G


def parse_type(name: str) -> Tuple[str, int]:
    name = name.strip()
    if len(name) < 2 or not name[0].isalpha() or not name[1:].isdigit():
        raise UnsupportedAlgebra(f"unsupported algebra {name!r}")
    return name[0].upper(), int(name[1:])


class AlgElem:
    """Sparse element of a Lie algebra: basis index -> rational coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[int, Rational]] = None):
        self.terms: Dict[int, Rational] = {
            i: _frac(c) for i, c in (terms or {}).items() if c != 0
        }

    def __add__(self, other: "AlgElem") -> "AlgElem":
        out = dict(self.terms)
        for i, c in other.terms.items():
            out[i] = out.get(i, 0) + c
        return AlgElem(out)

    def __neg__(self) -> "AlgElem":
        return AlgElem({i: -c for i, c in self.terms.items()})

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def __mul__(self, scalar) -> "AlgElem":
        return AlgElem({i: c * scalar for i, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"AlgElem({self.terms})"


@dataclass(frozen=True, eq=False)
class LieData:
    """A simple Lie algebra in a Chevalley basis.

    Basis order: ``x_{-b}`` for positive roots ``b`` by decreasing height,
    then the simple coroots ``h_1..h_l``, then ``x_b`` by increasing height.
    """

    series: str
    rank: int
    gram: Tuple[Tuple[Fraction, ...], ...]
    positive_roots: Tuple[Root, ...]
    structure: Dict[Tuple[int, int], Dict[int, int]] = field(repr=False)
    form_table: Dict[Tuple[int, int], int] = field(repr=False)
    charges: Tuple[Root, ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def dim(self) -> int:
        return len(self.charges)

    @property
    def npos(self) -> int:
        return len(self.positive_roots)

    @property
    def theta(self) -> Root:
        return self.positive_roots[-1]

    @cached_property
    def dual_coxeter(self) -> int:
        # h^v = 1 + <theta, rho^v> where rho^v pairs to 1 with every simple root
        coroot = self.coroot_coords(self.theta)
        return 1 + sum(coroot)

    @cached_property
    def roots(self) -> Tuple[Root, ...]:
        return tuple(self.charges[i] for i in range(self.dim) if any(self.charges[i]))

    @cached_property
    def _root_index(self) -> Dict[Root, int]:
        return {self.charges[i]: i for i in range(self.dim) if any(self.charges[i])}

    # --- root data -------------------------------------------------------
    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        """(a, b) for a, b in simple-root coordinates."""
        return sum(
            (a[i] * self.gram[i][j] * b[j] for i in range(self.rank) for j in range(self.rank)
             if a[i] and b[j]),
            Fraction(0),
        )

    def is_root(self, a: Sequence[int]) -> bool:
        return tuple(a) in self._root_index

    def is_long(self, a: Root) -> bool:
        return self.inner(a, a) == 2

    def coroot_coords(self, a: Root) -> Tuple[int, ...]:
        """h_a in the basis of simple coroots."""
        aa = self.inner(a, a)
        out = []
        for i, c in enumerate(a):
            v = Fraction(c) * self.gram[i][i] / aa
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    def pairing(self, a: Root, i: int) -> int:
        """a(h_i) = 2 (a, a_i) / (a_i, a_i)."""
        v = 2 * sum(a[j] * self.gram[j][i] for j in range(self.rank)) / self.gram[i][i]
        assert v.denominator == 1
        return int(v)

    def height(self, a: Root) -> int:
        return sum(a)

    def level_rescale(self, a: Root, k: int) -> int:
        """k_a = (<theta,theta>/<a,a>) k."""
        if not self.is_root(a):
            raise ValueError(f"{a} is not a root")
        v = 2 * Fraction(k) / self.inner(a, a)
        assert v.denominator == 1
        return int(v)

    # --- basis -----------------------------------------------------------
    def x(self, a: Sequence[int]) -> int:
        """Basis index of x_a."""
        try:
            return self._root_index[tuple(a)]
        except KeyError:
            raise ValueError(f"{tuple(a)} is not a root") from None

    def h(self, i: int) -> int:
        """Basis index of the simple coroot h_{i+1} (0-based i)."""
        return self.npos + i

    @property
    def cartan_indices(self) -> range:
        return range(self.npos, self.npos + self.rank)

    def is_cartan(self, idx: int) -> bool:
        return self.npos <= idx < self.npos + self.rank

    def basis_elem(self, idx: int) -> AlgElem:
        return AlgElem({idx: 1})

    def x_elem(self, a: Sequence[int]) -> AlgElem:
        return self.basis_elem(self.x(a))

    def h_alpha(self, a: Root) -> AlgElem:
        """Coroot h_a = [x_a, x_{-a}] for a positive or negative root."""
        return AlgElem({self.h(i): c for i, c in enumerate(self.coroot_coords(a)) if c})

    def t_alpha(self, a: Sequence) -> AlgElem:
        """t_a with a(h) = <t_a, h>, for any a in simple-root coordinates."""
        return AlgElem({self.h(i): Fraction(c) * self.gram[i][i] / 2 for i, c in enumerate(a) if c})

    def label(self, idx: int) -> str:
        if self.is_cartan(idx):
            return f"h{idx - self.npos + 1}"
        return f"x[{root_name(self.charges[idx])}]"

    @cached_property
    def labels(self) -> Tuple[str, ...]:
        return tuple(self.label(i) for i in range(self.dim))

    # --- bracket and form -----------------------------------------------
    def bracket_basis(self, i: int, j: int) -> Dict[int, int]:
        return self.structure.get((i, j), {})

    def bracket(self, x: AlgElem, y: AlgElem) -> AlgElem:
        out: Dict[int, Rational] = {}
        for i, a in x.terms.items():
            for j, b in y.terms.items():
                for l, c in self.structure.get((i, j), {}).items():
                    out[l] = out.get(l, 0) + a * b * c
        return AlgElem(out)

    def form_basis(self, i: int, j: int) -> int:
        return self.form_table.get((i, j), 0)

    def form(self, x: AlgElem, y: AlgElem) -> Rational:
        total = 0
        for i, a in x.terms.items():
            for j, b in y.terms.items():
                total += a * b * self.form_table.get((i, j), 0)
        return _frac(Fraction(total))

    def cartan_gram(self) -> List[List[int]]:
        return [[self.form_basis(self.h(i), self.h(j)) for j in range(self.rank)]
                for i in range(self.rank)]

    def sl2_triple(self, a: Root) -> Tuple[AlgElem, AlgElem, AlgElem]:
        """(x_a, h_a, x_{-a}) for a positive root a."""
        a = tuple(a)
        if a not in self.positive_roots:
            raise ValueError(f"{a} is not a positive root")
        neg = tuple(-c for c in a)
        return self.x_elem(a), self.h_alpha(a), self.x_elem(neg)


def root_name(a: Sequence[int]) -> str:
    """Deterministic name: (1,1) -> 'a1+a2', (-2,-1) -> '-2a1-a2'."""
    parts = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}a{i + 1}")
    return "".join(parts) or "0"


def _positive_roots(gram: List[List[Fraction]]) -> List[Root]:
    rank = len(gram)

    def pairing(a, i):
        return int(2 * sum(a[j] * gram[j][i] for j in range(rank)) / gram[i][i])

    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for a in layer:
            for i in range(rank):
                # p = how far the a_i-string extends downward from a
                p = 0
                b = list(a)
                while True:
                    b[i] -= 1
                    if tuple(b) in roots:
                        p += 1
                    else:
                        break
                q = p - pairing(a, i)
                if q > 0:
                    c = list(a)
                    c[i] += 1
                    c = tuple(c)
                    if c not in roots:
                        roots.add(c)
                        nxt.append(c)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


class _Constants:
    """N(a, b) for arbitrary roots, signs fixed by extraspecial pairs."""

    def __init__(self, positive: List[Root], inner):
        self.positive = positive
        self.order = {r: n for n, r in enumerate(positive)}
        self.roots = set(positive) | {tuple(-c for c in r) for r in positive}
        self.inner = inner
        self.extraspecial: Dict[Root, Tuple[Root, Root]] = {}
        for a in positive:
            for b in positive:
                xi = _add(a, b)
                if xi in self.roots and self.order[a] < self.order[b]:
                    prev = self.extraspecial.get(xi)
                    if prev is None or self.order[a] < self.order[prev[0]]:
                        self.extraspecial[xi] = (a, b)
        self.memo: Dict[Tuple[Root, Root], Fraction] = {}

    def is_pos(self, a: Root) -> bool:
        return a in self.order

    def string_p(self, a: Root, b: Root) -> int:
        p = 0
        c = _sub(b, a)
        while c in self.roots:
            p += 1
            c = _sub(c, a)
        return p

    def N(self, a: Root, b: Root) -> Fraction:
        xi = _add(a, b)
        if xi not in self.roots:
            return Fraction(0)
        key = (a, b)
        if key in self.memo:
            return self.memo[key]
        if self.is_pos(a) and self.is_pos(b):
            if self.order[a] < self.order[b]:
                val = self._special(a, b)
            else:
                val = -self.N(b, a)
        elif not self.is_pos(a) and not self.is_pos(b):
            val = -self.N(_neg(a), _neg(b))
        elif not self.is_pos(a):
            val = -self.N(b, a)
        else:
            c = _neg(xi)
            if self.is_pos(xi):
                # b, c negative: N(a,b)/(c,c) = N(b,c)/(a,a)
                val = self.inner(c, c) / self.inner(a, a) * self.N(b, c)
            else:
                val = self.inner(c, c) / self.inner(b, b) * self.N(c, a)
        self.memo[key] = val
        return val

    def _special(self, a: Root, b: Root) -> Fraction:
        xi = _add(a, b)
        a1, b1 = self.extraspecial[xi]
        if (a, b) == (a1, b1):
            return Fraction(self.string_p(a1, b1) + 1)
        total = Fraction(0)
        for (r, s), (u, v) in (((b, _neg(a1)), (a, _neg(b1))), ((_neg(a1), a), (b, _neg(b1)))):
            rs = _add(r, s)
            if rs in self.roots:
                total += self.N(r, s) * self.N(u, v) / self.inner(rs, rs)
        return self.inner(xi, xi) / self.N(a1, b1) * total


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def build_algebra(series: str, rank: Optional[int] = None, max_rank: int = DEFAULT_MAX_RANK) -> LieData:
    """Build the simple Lie algebra of type ``series`` + ``rank``.

    ``build_algebra("A2")`` and ``build_algebra("A", 2)`` are equivalent.
    """
    if rank is None:
        series, rank = parse_type(series)
    series = series.upper()
    if rank < 1:
        raise UnsupportedAlgebra(f"unsupported algebra {series}{rank}")
    gram = _inner_products(series, rank)
    if rank > max_rank:
        raise UnsupportedAlgebra(
            f"unsupported algebra {series}{rank}: rank exceeds cap {max_rank}")

    def inner(a, b):
        return sum((a[i] * gram[i][j] * b[j] for i in range(rank) for j in range(rank)
                    if a[i] and b[j]), Fraction(0))

    pos = _positive_roots(gram)
    npos = len(pos)
    zero = (0,) * rank
    charges: List[Root] = [_neg(r) for r in reversed(pos)] + [zero] * rank + list(pos)
    dim = len(charges)
    index = {charges[i]: i for i in range(dim) if any(charges[i])}
    consts = _Constants(pos, inner)

    def coroot(a):
        aa = inner(a, a)
        return [int(Fraction(c) * gram[i][i] / aa) for i, c in enumerate(a)]

    def pairing(a, i):
        return int(2 * sum(a[j] * gram[j][i] for j in range(rank)) / gram[i][i])

    structure: Dict[Tuple[int, int], Dict[int, int]] = {}
    form_table: Dict[Tuple[int, int], int] = {}
    for i in range(dim):
        for j in range(dim):
            a, b = charges[i], charges[j]
            ia, ib = any(a), any(b)
            out: Dict[int, int] = {}
            if ia and ib:
                s = _add(a, b)
                if not any(s):
                    out = {npos + l: c for l, c in enumerate(coroot(a)) if c}
                elif s in index:
                    n = consts.N(a, b)
                    assert n.denominator == 1
                    out = {index[s]: int(n)}
            elif ib:
                v = pairing(b, i - npos)
                if v:
                    out = {j: v}
            elif ia:
                v = -pairing(a, j - npos)
                if v:
                    out = {i: v}
            if out:
                structure[i, j] = out
            # invariant form
            if ia and ib and not any(_add(a, b)):
                f = 2 / inner(a, a)
            elif not ia and not ib:
                p, q = i - npos, j - npos
                f = 4 * gram[p][q] / (gram[p][p] * gram[q][q])
            else:
                f = Fraction(0)
            if f:
                assert f.denominator == 1
                form_table[i, j] = int(f)

    return LieData(
        series=series,
        rank=rank,
        gram=tuple(tuple(row) for row in gram),
        positive_roots=tuple(pos),
        structure=structure,
        form_table=form_table,
        charges=tuple(charges),
    )


# --- Weyl group ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class WeylAutomorphism:
    """Automorphism of g lifting a Weyl group element.

    ``word = [i1, ..., ir]`` (1-based) realises s_{i1} ... s_{ir}; the
    rightmost reflection acts first.
    """

    lie: LieData
    word: Tuple[int, ...]
    matrix: Tuple[AlgElem, ...] = field(repr=False)

    def __call__(self, x: AlgElem) -> AlgElem:
        out: Dict[int, Rational] = {}
        for i, c in x.terms.items():
            for j, d in self.matrix[i].terms.items():
                out[j] = out.get(j, 0) + c * d
        return AlgElem(out)

    def image(self, idx: int) -> AlgElem:
        return self.matrix[idx]

    def act_on_root(self, a: Sequence[int]) -> Root:
        """Root b with sigma(x_a) proportional to x_b."""
        img = self.matrix[self.lie.x(a)]
        (j,) = img.terms
        return self.lie.charges[j]


def _ad_exp(lie: LieData, x: AlgElem) -> List[AlgElem]:
    """Matrix of exp(ad x) for nilpotent x, as images of basis vectors."""
    cols = []
    for i in range(lie.dim):
        term = lie.basis_elem(i)
        total = term
        j = 1
        while True:
            term = lie.bracket(x, term) * Fraction(1, j)
            if not term:
                break
            total = total + term
            j += 1
        cols.append(total)
    return cols


def _compose(lie: LieData, outer: Sequence[AlgElem], inner: Sequence[AlgElem]) -> List[AlgElem]:
    """Matrix of outer o inner."""
    result = []
    for i in range(lie.dim):
        out: Dict[int, Rational] = {}
        for j, c in inner[i].terms.items():
            for l, d in outer[j].terms.items():
                out[l] = out.get(l, 0) + c * d
        result.append(AlgElem(out))
    return result


def simple_reflection(lie: LieData, i: int) -> List[AlgElem]:
    simple = tuple(int(j == i - 1) for j in range(lie.rank))
    e = lie.x_elem(simple)
    f = lie.x_elem(_neg(simple))
    ee = _ad_exp(lie, e)
    ff = _ad_exp(lie, -f)
    return _compose(lie, ee, _compose(lie, ff, ee))


def weyl_element(lie: LieData, word: Iterable[int]) -> WeylAutomorphism:
    word = tuple(word)
    for i in word:
        if not 1 <= i <= lie.rank:
            raise ValueError(f"simple reflection index {i} out of range 1..{lie.rank}")
    matrix = [lie.basis_elem(i) for i in range(lie.dim)]
    for i in reversed(word):
        matrix = _compose(lie, simple_reflection(lie, i), matrix)
    return WeylAutomorphism(lie, word, tuple(matrix))


def weyl_word_to(lie: LieData, target: Root, start: Optional[Root] = None) -> Tuple[int, ...]:
    """A word w with w(start) = target (start defaults to theta), if one exists."""
    start = tuple(start or lie.theta)
    target = tuple(target)
    if lie.inner(start, start) != lie.inner(target, target):
        raise ValueError("roots of different length are not Weyl-conjugate")
    seen = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for r in frontier:
            if r == target:
                return seen[r]
            for i in range(lie.rank):
                c = lie.pairing(r, i)
                s = tuple(v - c * int(j == i) for j, v in enumerate(r))
                if s not in seen:
                    seen[s] = (i + 1,) + seen[r]
                    nxt.append(s)
        frontier = nxt
    raise ValueError(f"{target} is not in the Weyl orbit of {start}")

