"""Maximum matching, deficiency, defect-d existence, and k-matching enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from . import _engine
from .errors import ParameterError, SearchCapExceeded
from .graph import Edge, Graph

#: berge_violating_set enumerates every vertex subset; 2^20 is the default
#: practical limit.
SUBSET_SEARCH_CAP = 20


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges.

    Edges are normalized to ``u < v`` and sorted.  Disjointness is enforced
    at construction; membership in a host graph via :meth:`validate`.
    """

    edges: tuple[Edge, ...]

    def __init__(self, edges=()):
        normalized = sorted(tuple(sorted(e)) for e in edges)
        seen: set[int] = set()
        for u, v in normalized:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) in matching")
            if u in seen or v in seen:
                raise ValueError(f"edge ({u}, {v}) shares a vertex with another edge")
            seen.update((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)

    def validate(self, g: Graph) -> None:
        """Raise ValueError unless every edge belongs to ``g``."""
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise ValueError(f"matching edge ({u}, {v}) is not an edge of the graph")


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching of ``g``, found by augmenting-path search with
    odd-cycle shrinking (correct on non-bipartite graphs).  Deterministic."""
    adj = [sorted(g.neighbors(v)) for v in range(g.order)]
    mate = _engine.max_matching_pairs(g.order, adj)
    return Matching((v, mate[v]) for v in range(g.order) if mate[v] > v)


def nu(g: Graph) -> int:
    """Maximum matching size; cached on the graph instance."""
    return _engine.cached(g, "nu", lambda: len(maximum_matching(g)))


def deficiency(g: Graph) -> int:
    """Number of vertices missed by a maximum matching: ``|V| - 2*nu``."""
    return g.order - 2 * nu(g)


def _check_defect(g: Graph, d: int) -> None:
    if not 0 <= d <= g.order:
        raise ParameterError(f"defect {d} is outside 0..{g.order}")
    if (g.order - d) % 2:
        raise ParameterError(
            f"parity: order {g.order} and defect {d} must have the same parity"
        )


def has_defect_matching(g: Graph, d: int) -> bool:
    """Whether some matching covers exactly ``|V| - d`` vertices.

    Requires ``0 <= d <= |V|`` and ``|V| == d (mod 2)``; violations raise
    ParameterError rather than returning False.  Equivalent to
    ``deficiency(g) <= d`` (downsize a maximum matching to hit d exactly).
    """
    _check_defect(g, d)
    return deficiency(g) <= d


def berge_violating_set(
    g: Graph, d: int, cap: int | None = None
) -> tuple[int, ...] | None:
    """A vertex set S with more than ``|S| + d`` odd components left after
    deletion, or None if every subset obeys the bound.

    Subsets are tried in increasing size, lexicographically within a size,
    and the first violator is returned; note the empty set is a possible
    answer, distinct from None.  Enumeration is exhaustive, hence the order
    cap (default 20, overridable by passing ``cap`` explicitly).
    """
    _check_defect(g, d)
    limit = SUBSET_SEARCH_CAP if cap is None else cap
    if g.order > limit:
        raise SearchCapExceeded(
            f"subset enumeration is capped at {limit} vertices, graph has "
            f"{g.order}; pass a larger cap to accept the cost"
        )
    adj = _engine.adjacency_masks(g)
    full = _engine.full_mask(g)
    table = _engine.odd_table(g) if g.order <= _engine.TABLE_LIMIT else None
    for size in range(g.order + 1):
        for subset in combinations(range(g.order), size):
            rest = full & ~_engine.mask_of(subset)
            o = table[rest] if table is not None else _engine.odd_component_count(adj, rest)
            if o > size + d:
                return subset
    return None


def enumerate_k_matchings(g: Graph, k: int) -> Iterator[Matching]:
    """All matchings of size exactly ``k``, each once, in canonical order.

    Edges are scanned in sorted order and matchings are emitted in
    lexicographic order of their sorted edge tuples.  ``k = 0`` yields
    exactly the empty matching.
    """
    if k < 0:
        raise ValueError(f"matching size must be non-negative, got {k}")
    edges = g.edges
    chosen: list[Edge] = []

    def rec(start: int, used: int):
        if len(chosen) == k:
            yield Matching(tuple(chosen))
            return
        remaining = k - len(chosen)
        for i in range(start, len(edges) - remaining + 1):
            u, v = edges[i]
            pair = (1 << u) | (1 << v)
            if used & pair:
                continue
            chosen.append(edges[i])
            yield from rec(i + 1, used | pair)
            chosen.pop()

    return rec(0, 0)


def has_k_matching(g: Graph, k: int) -> bool:
    """Whether the graph contains a matching of ``k`` edges."""
    return nu(g) >= k
