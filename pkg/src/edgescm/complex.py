"""Simplicial complexes and reduced homology over Q or GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable

from .graph import Graph
from .ideal import DomainError, MonomialIdeal, minimal_transversals, to_mask


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field, identified by its characteristic (0 means Q)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)


def _face_key(f: frozenset) -> tuple:
    return tuple(sorted(f))


def _maximal(sets: Iterable[frozenset]) -> list:
    out = []
    for s in sorted(set(sets), key=lambda s: (-len(s), _face_key(s))):
        if not any(s <= t for t in out):
            out.append(s)
    return sorted(out, key=lambda s: (len(s), _face_key(s)))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices 1..n given by its facets.

    ``facets == ()`` is the void complex (no faces at all); ``facets == (frozenset(),)``
    is the irrelevant complex whose only face is the empty set.
    """

    n: int
    facets: tuple

    def __post_init__(self):
        facets = [frozenset(f) for f in self.facets]
        for f in facets:
            if any(not 1 <= v <= self.n for v in f):
                raise ValueError(f"face {sorted(f)} uses a vertex outside 1..{self.n}")
        object.__setattr__(self, "facets", tuple(_maximal(facets)))

    @classmethod
    def of(cls, n: int, *facets: Iterable[int]) -> "SimplicialComplex":
        return cls(n, tuple(frozenset(f) for f in facets))

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void():
            raise DomainError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def contains_face(self, face: Iterable[int]) -> bool:
        s = frozenset(face)
        return any(s <= f for f in self.facets)

    def faces(self, dim: int) -> list:
        """All faces of the given dimension, in lexicographic order of sorted vertex lists."""
        k = dim + 1
        if k < 0:
            return []
        found = set()
        for f in self.facets:
            if len(f) >= k:
                found.update(frozenset(c) for c in combinations(sorted(f), k))
        return sorted(found, key=_face_key)

    def facet_lists(self) -> list:
        return [sorted(f) for f in self.facets]

    def __str__(self):
        if self.is_void():
            return "<void>"
        return " ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    if ideal.is_unit():
        raise DomainError("the unit ideal has no Stanley-Reisner complex here")
    # Facets are the complements of the minimal primes' supports.
    everything = frozenset(range(1, ideal.n + 1))
    return SimplicialComplex(ideal.n, tuple(everything - t for t in minimal_transversals(ideal.gens)))


def maximal_cliques(h: Graph) -> list:
    adj = h.adjacency()
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: (len(p & adj[u]), -u))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(h.vertices), set())
    return out


def clique_complex(h: Graph) -> SimplicialComplex:
    return SimplicialComplex(h.n, tuple(maximal_cliques(h)))


def pure_skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    if not -1 <= i <= cx.dim:
        raise ValueError(f"skeleton dimension {i} outside -1..{cx.dim}")
    return SimplicialComplex(cx.n, tuple(cx.faces(i)))


def ideal_of_complex(cx: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal: generated by the minimal non-faces."""
    if cx.is_void():
        return MonomialIdeal(cx.n, (frozenset(),))
    candidates = set()
    for d in range(-1, cx.dim + 1):
        for face in cx.faces(d):
            for v in range(1, cx.n + 1):
                if v not in face:
                    candidates.add(face | {v})
    nonfaces = [s for s in candidates if not cx.contains_face(s)]
    return MonomialIdeal(cx.n, tuple(nonfaces))


def _reduce(value: int, p: int) -> int:
    return value % p if p else value


def boundary_matrix(cx: SimplicialComplex, s: int, field: FieldSpec = QQ) -> list:
    """Matrix of the boundary map from s-faces (columns) to (s-1)-faces (rows)."""
    p = field.characteristic
    cols = cx.faces(s) if not cx.is_void() else []
    rows = cx.faces(s - 1) if not cx.is_void() else []
    row_index = {f: r for r, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for t, v in enumerate(sorted(face)):
            mat[row_index[face - {v}]][c] = _reduce((-1) ** t, p)
    return mat


def rank_sparse(rows: Iterable[dict], p: int = 0) -> int:
    """Rank of a matrix given as sparse rows {column: entry}.

    Characteristic 0 uses fraction-free integer elimination with content
    removal; characteristic p works in GF(p).
    """
    pivots = {}
    for row in rows:
        r = {c: _reduce(v, p) for c, v in row.items()}
        r = {c: v for c, v in r.items() if v}
        while r:
            c = min(r)
            prow = pivots.get(c)
            if prow is None:
                if p:
                    inv = pow(r[c], -1, p)
                    r = {k: v * inv % p for k, v in r.items()}
                pivots[c] = r
                break
            if p:
                f = r[c]
                for k, v in prow.items():
                    nv = (r.get(k, 0) - f * v) % p
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            else:
                a, b = prow[c], r[c]
                new = {k: a * v for k, v in r.items()}
                for k, v in prow.items():
                    nv = new.get(k, 0) - b * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                content = 0
                for v in new.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content > 1:
                    new = {k: v // content for k, v in new.items()}
                r = new
    return len(pivots)


def rank(matrix: list, field: FieldSpec = QQ) -> int:
    return rank_sparse(({c: v for c, v in enumerate(row) if v} for row in matrix), field.characteristic)


def _boundary_rank(higher: list, lower_index: dict, p: int) -> int:
    # Rank of the transpose: one sparse row per higher face.
    rows = []
    for face in higher:
        row = {}
        sign = 1
        bits = face
        while bits:
            low = bits & -bits
            row[lower_index[face ^ low]] = sign
            sign = -sign
            bits ^= low
        rows.append(row)
    return rank_sparse(rows, p)


def homology_from_faces(faces_by_size: list, p: int = 0) -> dict:
    """Reduced homology dims {i: dim H~_i} from faces grouped by vertex count (bitmasks).

    ``faces_by_size[k]`` lists the faces with k vertices, so index 0 holds the
    empty face when the complex is not void.
    """
    top = len(faces_by_size)
    ranks = [0] * (top + 1)
    for k in range(1, top):
        if faces_by_size[k] and faces_by_size[k - 1]:
            index = {f: r for r, f in enumerate(faces_by_size[k - 1])}
            ranks[k] = _boundary_rank(faces_by_size[k], index, p)
    return {k - 1: len(faces_by_size[k]) - ranks[k] - ranks[k + 1] for k in range(top)}


def reduced_homology_dims(cx: SimplicialComplex, field: FieldSpec = QQ) -> dict:
    """Reduced homology dimensions {i: dim H~_i(cx; k)} for -1 <= i <= dim."""
    if cx.is_void():
        return {-1: 0}
    faces_by_size = [[to_mask(f) for f in cx.faces(k - 1)] for k in range(cx.dim + 2)]
    return homology_from_faces(faces_by_size, field.characteristic)

