"""Graded Betti numbers of squarefree ideals via upper Koszul simplicial complexes."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .complex import QQ, FieldSpec, SimplicialComplex, homology_from_faces
from .ideal import DomainError, Monomial, MonomialIdeal, colon_by, squarefree_component

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,j}: i is the homological degree, j the internal degree. Zero entries are absent."""

    entries: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        for (i, j), b in self.entries.items():
            if i < 0 or j < 0 or b < 0:
                raise ValueError(f"bad Betti entry beta_{i},{j} = {b}")
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    def __getitem__(self, key: tuple) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __bool__(self):
        return bool(self.entries)

    def items(self):
        return self.entries.items()

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(b for (ii, _), b in self.entries.items() if ii == i)

    def to_json(self) -> list:
        return [{"i": i, "j": j, "beta": b} for (i, j), b in self.entries.items()]

    def to_text(self) -> str:
        """Macaulay2-style layout: column i, row j - i."""
        if not self.entries:
            return "(empty Betti table)"
        cols = range(self.projective_dimension + 1)
        rows = sorted({j - i for i, j in self.entries})
        cells = [[str(i) for i in cols], [str(self.total(i)) for i in cols]]
        for r in rows:
            cells.append([str(self[(i, i + r)]) if self[(i, i + r)] else "." for i in cols])
        labels = ["", "total:"] + [f"{r}:" for r in rows]
        lw = max(len(s) for s in labels)
        width = max(len(c) for row in cells for c in row)
        lines = []
        for label, row in zip(labels, cells):
            lines.append(label.rjust(lw) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()


def upper_koszul(ideal: MonomialIdeal, b: Iterable[int]) -> SimplicialComplex:
    """Faces are the c contained in b with x^(b - c) in the ideal."""
    b = frozenset(b)
    members = [frozenset(c) for c in _subsets(sorted(b)) if any(g <= b - frozenset(c) for g in ideal.gens)]
    return SimplicialComplex(ideal.n, tuple(members))


def _subsets(items: Sequence) -> Iterable[tuple]:
    for mask in range(1 << len(items)):
        yield tuple(x for k, x in enumerate(items) if mask >> k & 1)


def _membership_table(gen_masks: list, bits: int) -> list:
    gens = set(gen_masks)
    member = [False] * (1 << bits)
    for mask in range(1 << bits):
        if mask in gens:
            member[mask] = True
            continue
        rest = mask
        while rest:
            low = rest & -rest
            if member[mask ^ low]:
                member[mask] = True
                break
            rest ^= low
    return member


def multigraded_betti(ideal: MonomialIdeal, field: FieldSpec = QQ) -> dict:
    """Nonzero beta_{i,b} keyed by (i, b) with b a frozenset of variables."""
    if ideal.is_zero():
        raise DomainError("Betti numbers of the zero ideal are not computed")
    p = field.characteristic
    support = sorted(set().union(*ideal.gens))
    pos = {v: k for k, v in enumerate(support)}
    m = len(support)
    gen_masks = [sum(1 << pos[v] for v in g) for g in ideal.gens]
    member = _membership_table(gen_masks, m)
    out = {}
    for b in range(1 << m):
        if not member[b]:
            continue
        faces = []
        c = b
        while True:
            if member[b ^ c]:
                faces.append(c)
            if c == 0:
                break
            c = (c - 1) & b
        if _has_cone_point(b, faces, member):
            continue
        size = bin(b).count("1")
        by_size = [[] for _ in range(size + 1)]
        for f in faces:
            by_size[bin(f).count("1")].append(f)
        while by_size and not by_size[-1]:
            by_size.pop()
        b_set = frozenset(support[k] for k in range(m) if b >> k & 1)
        for i_minus_1, dim in homology_from_faces(by_size, p).items():
            if dim:
                out[(i_minus_1 + 1, b_set)] = dim
    return out


def _has_cone_point(b: int, faces: list, member: list) -> bool:
    # v is a cone point when c | v is a face for every face c; the complex is then acyclic.
    rest = b
    while rest:
        v = rest & -rest
        rest ^= v
        if all(member[b ^ (c | v)] for c in faces):
            return True
    return False


def betti_table(ideal: MonomialIdeal, field: FieldSpec = QQ) -> BettiTable:
    entries = {}
    for (i, b), dim in multigraded_betti(ideal, field).items():
        key = (i, len(b))
        entries[key] = entries.get(key, 0) + dim
    return BettiTable(entries)


def regularity(table: BettiTable) -> int:
    if not table:
        raise DomainError("regularity of an empty Betti table")
    return max(j - i for i, j in table.entries)


def has_linear_resolution(ideal: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    degrees = ideal.degrees()
    if len(degrees) != 1:
        log.debug("not equigenerated (degrees %s); no linear resolution", degrees)
        return False
    d = degrees[0]
    return all(j == i + d for i, j in betti_table(ideal, field).entries)


def is_componentwise_linear(ideal: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    """Every squarefree component I_[d] has a linear resolution."""
    if ideal.is_zero():
        raise DomainError("componentwise linearity of the zero ideal is not decided here")
    for d in range(min(ideal.degrees()), ideal.n + 1):
        component = squarefree_component(ideal, d)
        if component.is_zero():
            continue
        if not has_linear_resolution(component, field):
            log.debug("component in degree %d is not linear", d)
            return False
    return True


def _colon_is_linear(previous: Iterable[Monomial], u: Monomial, n: int) -> bool:
    colon = colon_by(MonomialIdeal(n, tuple(previous)), u)
    return all(len(g) == 1 for g in colon.gens)


def has_linear_quotients(ideal: MonomialIdeal, order: Sequence[Monomial]) -> bool:
    order = [frozenset(u) for u in order]
    if sorted(order, key=lambda u: (len(u), sorted(u))) != list(ideal.gens):
        raise ValueError("order must list every minimal generator exactly once")
    if any(len(a) > len(b) for a, b in zip(order, order[1:])):
        raise ValueError("order must have nondecreasing degrees")
    return all(_colon_is_linear(order[:k], order[k], ideal.n) for k in range(1, len(order)))


def find_linear_quotient_order(ideal: MonomialIdeal) -> list | None:
    """Lexicographically first (in generator index) ordering with linear quotients, or None."""
    if ideal.is_zero():
        raise DomainError("the zero ideal has no generators to order")
    gens = list(ideal.gens)
    dead = set()

    def extend(prefix: list, used: frozenset):
        if len(prefix) == len(gens):
            return prefix
        if used in dead:
            return None
        low = min(len(gens[k]) for k in range(len(gens)) if k not in used)
        for k, u in enumerate(gens):
            if k in used or len(u) != low:
                continue
            if prefix and not _colon_is_linear([gens[q] for q in prefix], u, ideal.n):
                continue
            found = extend(prefix + [k], used | {k})
            if found is not None:
                return found
        # Colon ideals depend only on which generators precede, so a failed set fails in any order.
        dead.add(used)
        return None

    found = extend([], frozenset())
    return None if found is None else [gens[k] for k in found]

