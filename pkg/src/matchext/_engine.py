"""Shared algorithmic core: blossom matching and per-graph bitmask tables.

Graphs are immutable, so every table computed here is memoised on the host
instance (``g._cache``) and never invalidated.  Vertex subsets are plain
Python ints used as bitmasks.
"""

from __future__ import annotations

from collections import deque

from .errors import SearchCapExceeded
from .graph import Graph

# Hard ceiling for the 2^n subset tables; anything bigger would not fit in
# memory regardless of how much patience the caller declares.
TABLE_LIMIT = 24


def cached(g: Graph, key, builder):
    cache = g._cache
    if key not in cache:
        cache[key] = builder()
    return cache[key]


def adjacency_masks(g: Graph) -> tuple[int, ...]:
    def build():
        masks = [0] * g.order
        for u, v in g.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    return cached(g, "adj_masks", build)


def full_mask(g: Graph) -> int:
    return (1 << g.order) - 1


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def spread(adj: tuple[int, ...], seed: int, mask: int) -> int:
    """Vertices of ``mask`` reachable from the ``seed`` bits within ``mask``."""
    comp = seed & mask
    frontier = comp
    while frontier:
        grown = 0
        m = frontier
        while m:
            b = m & -m
            grown |= adj[b.bit_length() - 1]
            m ^= b
        frontier = grown & mask & ~comp
        comp |= frontier
    return comp


def component_split(adj: tuple[int, ...], mask: int) -> list[int]:
    """Connected components of the induced subgraph on ``mask``, each a
    bitmask, ordered by lowest vertex."""
    comps = []
    rest = mask
    while rest:
        comp = spread(adj, rest & -rest, rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def odd_component_count(adj: tuple[int, ...], mask: int) -> int:
    return sum(1 for c in component_split(adj, mask) if c.bit_count() & 1)


def _require_table(g: Graph):
    if g.order > TABLE_LIMIT:
        raise SearchCapExceeded(
            f"exhaustive subset tables are limited to {TABLE_LIMIT} vertices, "
            f"graph has {g.order}"
        )


def nu_table(g: Graph) -> list[int]:
    """Maximum matching size of every induced subgraph, indexed by bitmask.

    Classic subset DP: the lowest vertex of the mask is either unmatched or
    matched to one of its in-mask neighbours.
    """

    def build():
        _require_table(g)
        adj = adjacency_masks(g)
        table = [0] * (1 << g.order)
        for mask in range(1, 1 << g.order):
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            best = table[rest]
            m = adj[v] & rest
            while m:
                b = m & -m
                cand = 1 + table[rest ^ b]
                if cand > best:
                    best = cand
                m ^= b
            table[mask] = best
        return table

    return cached(g, "nu_table", build)


def odd_table(g: Graph) -> list[int]:
    """Odd-component count of every induced subgraph, indexed by bitmask."""

    def build():
        _require_table(g)
        adj = adjacency_masks(g)
        table = [0] * (1 << g.order)
        for mask in range(1, 1 << g.order):
            comp = spread(adj, mask & -mask, mask)
            table[mask] = table[mask & ~comp] + (comp.bit_count() & 1)
        return table

    return cached(g, "odd_table", build)


def factor_critical_mask(g: Graph, comp_mask: int) -> bool:
    """Whether the induced subgraph on ``comp_mask`` (assumed connected) is
    factor-critical.  Cached per graph, keyed by the vertex mask."""
    fc = g._cache.setdefault("fc_mask", {})
    got = fc.get(comp_mask)
    if got is None:
        size = comp_mask.bit_count()
        if size % 2 == 0:
            got = False
        elif size == 1:
            got = True
        else:
            nu = nu_table(g)
            want = (size - 1) // 2
            got = all(
                nu[comp_mask ^ (1 << v)] == want for v in bits_of(comp_mask)
            )
        fc[comp_mask] = got
    return got


# -- blossom maximum matching ------------------------------------------------


def max_matching_pairs(n: int, adj: list[list[int]]) -> list[int]:
    """Maximum matching by alternating-tree search with odd-cycle shrinking.

    ``adj`` is an adjacency list; returns ``mate`` with ``mate[v]`` the
    partner of ``v`` or -1.  Deterministic: vertices and neighbours are
    scanned in increasing order.
    """
    mate = [-1] * n
    # greedy seed to cut down the number of augmentation phases
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    break

    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_blossom = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if mate[x] == -1:
                break
            x = parent[mate[x]]
        x = b
        while True:
            x = base[x]
            if seen[x]:
                return x
            x = parent[mate[x]]

    def mark_path(v: int, b: int, child: int):
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting_path(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_queue[i] = False
        in_queue[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # even vertex reached: an odd cycle closes; shrink it
                    cur_base = lca(v, to)
                    for i in range(n):
                        in_blossom[i] = False
                    mark_path(v, cur_base, to)
                    mark_path(to, cur_base, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    in_queue[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for root in range(n):
        if mate[root] != -1:
            continue
        finish = find_augmenting_path(root)
        if finish == -1:
            continue
        v = finish
        while v != -1:
            pv = parent[v]
            next_v = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = next_v
    return mate
