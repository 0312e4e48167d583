"""Squarefree monomial ideals.

A squarefree monomial is stored as the frozenset of its variable indices
(x1*x3 is ``frozenset({1, 3})``); an ideal is an ambient variable count plus
a minimal generating set kept in (degree, lexicographic) order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, is_vertex_cover

Monomial = frozenset


class DomainError(ValueError):
    """Input outside the domain where an operation is defined."""


def monomial(*indices: int) -> Monomial:
    return frozenset(indices)


def monomial_key(m: Monomial) -> tuple:
    return (len(m), tuple(sorted(m)))


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(f"x{i}" for i in sorted(m))


def minimalize(monomials: Iterable[Monomial]) -> list:
    """Drop every monomial divisible by another one; result sorted canonically."""
    out = []
    for m in sorted(set(monomials), key=monomial_key):
        if not any(g <= m for g in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple

    def __post_init__(self):
        gens = [frozenset(g) for g in self.gens]
        for g in gens:
            if any(not 1 <= v <= self.n for v in g):
                raise ValueError(f"monomial {sorted(g)} uses a variable outside x1..x{self.n}")
        object.__setattr__(self, "gens", tuple(minimalize(gens)))

    @classmethod
    def of(cls, n: int, *gens: Iterable[int]) -> "MonomialIdeal":
        return cls(n, tuple(frozenset(g) for g in gens))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (frozenset(),)

    def degrees(self) -> list:
        return sorted({len(g) for g in self.gens})

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) == 1

    def generator_lists(self) -> list:
        return [sorted(g) for g in self.gens]

    def __str__(self):
        if self.is_zero():
            return "0"
        return ", ".join(format_monomial(g) for g in self.gens)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return any(g <= m for g in ideal.gens)


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(g.n, tuple(frozenset(e) for e in g.edges))


def _check_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise DomainError("the Alexander dual of the zero ideal is not defined here")
    if ideal.is_unit():
        raise DomainError("the Alexander dual of the unit ideal is not defined here")


def minimal_transversals(sets: Iterable[frozenset]) -> list:
    """Minimal hitting sets, folding in one set at a time."""
    partial = [frozenset()]
    for s in sets:
        grown = []
        for t in partial:
            if t & s:
                grown.append(t)
            else:
                grown.extend(t | {v} for v in s)
        partial = minimalize(grown)
    return partial


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    _check_proper(ideal)
    return MonomialIdeal(ideal.n, tuple(minimal_transversals(ideal.gens)))


def squarefree_component(ideal: MonomialIdeal, d: int) -> MonomialIdeal:
    """The ideal generated by the squarefree degree-d monomials of `ideal`."""
    if d < 0 or d > ideal.n:
        return zero_ideal(ideal.n)
    variables = frozenset(range(1, ideal.n + 1))
    out = set()
    for g in ideal.gens:
        if len(g) > d:
            continue
        for extra in combinations(sorted(variables - g), d - len(g)):
            out.add(g | frozenset(extra))
    return MonomialIdeal(ideal.n, tuple(out))


def dual_component(g: Graph, d: int) -> MonomialIdeal:
    """Generated by the vertex covers of G of size exactly d."""
    if d < 0 or d > g.n:
        return zero_ideal(g.n)
    covers = [frozenset(c) for c in combinations(g.vertices, d) if is_vertex_cover(g, c)]
    return MonomialIdeal(g.n, tuple(covers))


def colon_by(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, tuple(g - m for g in ideal.gens))


def is_unmixed(ideal: MonomialIdeal) -> bool:
    return alexander_dual(ideal).is_equigenerated()


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    if not 0 <= d <= n:
        raise ValueError(f"degree {d} outside 0..{n}")
    return MonomialIdeal(n, tuple(frozenset(c) for c in combinations(range(1, n + 1), d)))


def to_mask(m: Monomial) -> int:
    mask = 0
    for v in m:
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> Monomial:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)
