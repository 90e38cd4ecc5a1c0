"""Maximal clique enumeration with an abort threshold."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph

MAP_GRAPH_CLIQUE_FACTOR = 27


class CapExceeded(RuntimeError):
    """More maximal cliques than the caller allowed."""

    def __init__(self, cap: int) -> None:
        super().__init__(f"more than {cap} maximal cliques")
        self.cap = cap


@dataclass(frozen=True)
class CliqueSet:
    """All maximal cliques of a graph, each a sorted tuple, in lexicographic order."""

    cliques: tuple[tuple[int, ...], ...]
    source_size: int

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.cliques)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.cliques[i]


def maximal_cliques(g: Graph, cap: int | None = None) -> CliqueSet:
    """Enumerate maximal cliques by Bron-Kerbosch with pivoting.

    The outer loop fixes the smallest member ``v`` of the clique, so each call
    only sees ``N(v)``. Inside, the pivot is the candidate or excluded vertex
    with the most neighbors among the candidates, ties to the lowest id.

    Raises:
        CapExceeded: as soon as more than ``cap`` cliques have been found.
    """
    sets = [g.neighbor_set(v) for v in range(g.n)]
    found: list[tuple[int, ...]] = []
    limit = -1 if cap is None else cap

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p:
            if not x:
                found.append(tuple(sorted(r)))
                if len(found) == limit + 1:
                    raise CapExceeded(limit)
            return
        pivot = min(p | x, key=lambda u: (-len(sets[u] & p), u))
        for v in sorted(p - sets[pivot]):
            nv = sets[v]
            r.append(v)
            expand(r, p & nv, x & nv)
            r.pop()
            p.discard(v)
            x.add(v)

    for v in range(g.n):
        nv = sets[v]
        later = {u for u in nv if u > v}
        earlier = {u for u in nv if u < v}
        if not later:
            # fast path: {v} plus nothing; maximal only if no earlier neighbor
            if not earlier:
                found.append((v,))
                if len(found) == limit + 1:
                    raise CapExceeded(limit)
            continue
        expand([v], later, earlier)
    found.sort()
    return CliqueSet(tuple(found), g.n)


def clique_count_bound_check(g: Graph, cs: CliqueSet) -> bool:
    """True iff ``g`` respects the map-graph bound of 27 maximal cliques per vertex."""
    return len(cs) <= MAP_GRAPH_CLIQUE_FACTOR * g.n

