"""Exact sparse row echelon forms over Q.

Rows are dicts ``key -> int`` kept primitive (content 1, positive pivot),
with the pivot being the smallest key of the row.  Elimination is
fraction-free; rational input is cleared of denominators on entry.
Keys only need to be mutually comparable.
"""
from __future__ import annotations

from bisect import insort
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Tuple

Row = Dict[Hashable, int]


class ResourceCapExceeded(RuntimeError):
    pass


def integral(vec: Mapping) -> Row:
    """Primitive integer multiple of a rational vector (zero entries dropped)."""
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    out = {}
    for key, c in vec.items():
        if c:
            v = c * den
            out[key] = v.numerator if isinstance(v, Fraction) else int(v)
    return _primitive(out)


def _primitive(row: Row) -> Row:
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        row = {key: c // g for key, c in row.items()}
    return row


def _combine(a: int, x: Row, b: int, y: Row) -> Row:
    """a*x - b*y with zeros removed."""
    out = {key: a * c for key, c in x.items()} if a != 1 else dict(x)
    for key, c in y.items():
        v = out.get(key, 0) - b * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def joint_integral(vec: Mapping, track: Mapping) -> Tuple[Row, Row]:
    """Clear denominators of a pair of vectors with one common factor."""
    den = 1
    for c in list(vec.values()) + list(track.values()):
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)

    def conv(d):
        out = {}
        for key, c in d.items():
            if c:
                v = c * den
                out[key] = v.numerator if isinstance(v, Fraction) else int(v)
        return out

    return conv(vec), conv(track)


class Echelon:
    """Incrementally built echelon basis of a subspace.

    A row may carry a companion vector transformed in lockstep with it
    (:meth:`add_pair`); when the main part of an inserted pair reduces to
    zero the transformed companion is returned.  This gives kernels and
    intersections without a separate elimination.
    """

    def __init__(self, cap: Optional[int] = None):
        self.rows: Dict[Hashable, Row] = {}
        self.tracks: Dict[Hashable, Row] = {}
        self.pivots: List = []
        self.cap = cap

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def copy(self) -> "Echelon":
        e = Echelon(self.cap)
        e.rows = dict(self.rows)
        e.tracks = dict(self.tracks)
        e.pivots = list(self.pivots)
        return e

    def _reduce(self, vec: Row, track: Optional[Row]) -> Tuple[Row, Optional[Row]]:
        if not vec or not self.rows:
            return vec, track
        lo = min(vec)
        for p in self.pivots:
            if p < lo:
                continue
            b = vec.get(p)
            if not b:
                continue
            row = self.rows[p]
            a = row[p]
            g = gcd(a, b)
            a //= g
            b //= g
            vec = _combine(a, vec, b, row)
            if track is not None:
                track = _combine(a, track, b, self.tracks.get(p, {}))
            if not vec:
                break
        return vec, track

    def reduce(self, vec: Mapping) -> Row:
        """Remainder of vec modulo the span (primitive, possibly empty)."""
        rem, _ = self._reduce(integral(vec), None)
        return _primitive(rem) if rem else rem

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def _insert(self, vec: Row, track: Optional[Row]) -> Row:
        p = min(vec)
        sign = -1 if vec[p] < 0 else 1
        g = 0
        for c in vec.values():
            g = gcd(g, c)
        if track is not None:
            for c in track.values():
                g = gcd(g, c)
        g *= sign
        if g != 1:
            vec = {key: c // g for key, c in vec.items()}
            if track is not None:
                track = {key: c // g for key, c in track.items()}
        if self.cap is not None and len(self.rows) >= self.cap:
            raise ResourceCapExceeded(f"bucket dimension cap {self.cap} exceeded")
        self.rows[p] = vec
        if track is not None:
            self.tracks[p] = track
        insort(self.pivots, p)
        return vec

    def add(self, vec: Mapping) -> Optional[Row]:
        """Insert vec; return the new primitive row, or None if dependent."""
        rem, _ = self._reduce(integral(vec), None)
        if not rem:
            return None
        return self._insert(rem, None)

    def add_pair(self, vec: Mapping, track: Mapping) -> Tuple[Optional[Row], Optional[Row]]:
        """Insert (vec, track).  Returns (row, None) or (None, companion)."""
        vec, track = joint_integral(vec, track)
        rem, track = self._reduce(vec, track)
        if not rem:
            return None, (_primitive(track) if track else track)
        return self._insert(rem, track), None

    def basis(self) -> List[Row]:
        return [self.rows[p] for p in self.pivots]

    def issubset(self, other: "Echelon") -> bool:
        return all(other.contains(r) for r in self.basis())

    def same_span(self, other: "Echelon") -> bool:
        return self.dim == other.dim and self.issubset(other)


def kernel(columns: Iterable[Tuple[Hashable, Mapping]]) -> List[Row]:
    """Kernel of a linear map given as (basis key, image vector) pairs.

    Returns a basis of the kernel as integer vectors over the basis keys.
    """
    ech = Echelon()
    out = []
    for key, image in columns:
        row, companion = ech.add_pair(image, {key: 1})
        if row is None:
            out.append(companion)
    return out


def intersection(a: Iterable[Mapping], b: Iterable[Mapping]) -> Echelon:
    """Echelon basis of span(a) & span(b) (Zassenhaus)."""
    ech = Echelon()
    for v in a:
        ech.add_pair(v, v)
    out = Echelon()
    for v in b:
        row, companion = ech.add_pair(v, {})
        if row is None and companion:
            out.add(companion)
    return out
