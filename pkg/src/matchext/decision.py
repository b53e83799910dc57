"""Parameter-triple deciders with machine-checkable witnesses.

A graph is an (n, k, d)-graph when deleting any n vertices leaves a subgraph
that contains a k-matching and every such k-matching extends to a matching
covering all but d of the remaining vertices.  Two independent deciders are
provided: one straight from that definition, and one from the subset-count
characterization (for every S with |S| >= n the deletion leaves at most
|S| - n + d odd components, and for every S with |S| >= n + 2k whose induced
subgraph contains a k-matching it leaves at most |S| - n - 2k + d).

Both are exhaustive and therefore capped by graph order; pass an explicit
``cap`` to accept the exponential cost on larger graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Union

from . import _engine
from .errors import ParameterError, SearchCapExceeded
from .graph import Edge, Graph
from .matching import Matching

DECIDER_CAP = 16
WITNESS_SEARCH_CAP = 14

_NEG = -(1 << 30)


@dataclass(frozen=True)
class NkdParams:
    """The triple (n, k, d): vertices deleted, matching size, allowed defect."""

    n: int
    k: int
    d: int

    def __post_init__(self):
        for name in ("n", "k", "d"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ParameterError(f"{name} must be a non-negative integer, got {value!r}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)


def validate_params(g: Graph, params: NkdParams) -> None:
    """Check the two graph-relative rules; raises ParameterError naming the
    violated rule, returns None when both hold."""
    n, k, d = params.as_tuple()
    if n + 2 * k + d > g.order - 2:
        raise ParameterError(
            f"size rule violated: n + 2k + d = {n + 2 * k + d} exceeds "
            f"order - 2 = {g.order - 2}"
        )
    if (g.order - n - d) % 2:
        raise ParameterError(
            f"parity rule violated: order - n - d = {g.order - n - d} is odd"
        )


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class NoKMatching:
    """Deleting ``deleted`` (an n-set) leaves no k-matching."""

    deleted: tuple[int, ...]

    kind = "no-k-matching"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "deleted": list(self.deleted)}


@dataclass(frozen=True)
class BlockedExtension:
    """After deleting ``deleted``, the k-matching ``matching`` cannot be
    extended to a defect-d matching; ``blocker`` is a vertex set T of the
    remainder with more than |T| + d odd components left after its removal."""

    deleted: tuple[int, ...]
    matching: tuple[Edge, ...]
    blocker: tuple[int, ...]

    kind = "blocked-extension"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "deleted": list(self.deleted),
            "matching": [list(e) for e in self.matching],
            "blocker": list(self.blocker),
        }


@dataclass(frozen=True)
class CharacterizationViolation:
    """A subset breaking characterization condition "i" or "ii"."""

    condition: str
    subset: tuple[int, ...]

    kind = "characterization-violation"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "condition": self.condition, "subset": list(self.subset)}


Witness = Union[NoKMatching, BlockedExtension, CharacterizationViolation]


@dataclass(frozen=True)
class Verdict:
    """Decision result; carries a witness exactly when the property fails."""

    holds: bool
    witness: Witness | None = None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }

    def kv_lines(self) -> list[str]:
        lines = [f"holds: {'true' if self.holds else 'false'}"]
        if self.witness is not None:
            lines += witness_kv_lines(self.witness)
        return lines


def witness_kv_lines(w: Witness) -> list[str]:
    """Key-value text serialization (see README for the schema)."""
    lines = [f"witness: {w.kind}"]
    if isinstance(w, NoKMatching):
        lines.append(f"deleted: {_ints(w.deleted)}")
    elif isinstance(w, BlockedExtension):
        lines.append(f"deleted: {_ints(w.deleted)}")
        lines.append(f"matching: {_edges(w.matching)}")
        lines.append(f"blocker: {_ints(w.blocker)}")
    elif isinstance(w, CharacterizationViolation):
        lines.append(f"condition: {w.condition}")
        lines.append(f"subset: {_ints(w.subset)}")
    return lines


def _ints(values) -> str:
    return " ".join(map(str, values)) if values else "(empty)"


def _edges(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges) if edges else "(empty)"


# -- deciders ----------------------------------------------------------------


def _check_cap(g: Graph, cap: int | None, default: int, what: str) -> None:
    limit = default if cap is None else cap
    if g.order > limit:
        raise SearchCapExceeded(
            f"the exhaustive {what} is capped at {limit} vertices, graph has "
            f"{g.order}; pass a larger cap to accept the cost"
        )


def _matchings_in_mask(edges: tuple[Edge, ...], mask: int, k: int) -> Iterator[tuple[tuple[Edge, ...], int]]:
    """Size-k matchings using only vertices of ``mask``, canonical order,
    yielded with their covered-vertex mask."""
    avail = [
        (e, (1 << e[0]) | (1 << e[1]))
        for e in edges
        if (mask >> e[0]) & 1 and (mask >> e[1]) & 1
    ]
    chosen: list[Edge] = []

    def rec(start: int, used: int):
        if len(chosen) == k:
            yield tuple(chosen), used
            return
        remaining = k - len(chosen)
        for i in range(start, len(avail) - remaining + 1):
            e, pair = avail[i]
            if used & pair:
                continue
            chosen.append(e)
            yield from rec(i + 1, used | pair)
            chosen.pop()

    return rec(0, 0)


def _first_berge_blocker(g: Graph, mask: int, d: int) -> tuple[int, ...]:
    """Smallest (then lexicographically least) T inside ``mask`` with more
    than |T| + d odd components left; exists whenever the induced subgraph
    has deficiency above d."""
    odd = _engine.odd_table(g)
    vertices = _engine.bits_of(mask)
    for size in range(len(vertices) + 1):
        for subset in combinations(vertices, size):
            if odd[mask & ~_engine.mask_of(subset)] > size + d:
                return subset
    raise AssertionError("no blocking set found for a deficient subgraph")


def is_nkd_by_definition(g: Graph, params: NkdParams, cap: int | None = None) -> Verdict:
    """Decide straight from the definition by scanning every n-subset and
    every k-matching of its complement.

    Failure returns the first violation in deterministic order: deleted
    subsets lexicographic, matchings in canonical enumeration order; the
    blocking set of an inextensible matching is the smallest-first
    lexicographically least one.
    """
    validate_params(g, params)
    _check_cap(g, cap, DECIDER_CAP, "decider")
    n, k, d = params.as_tuple()
    nu = _engine.nu_table(g)
    full = _engine.full_mask(g)
    for subset in combinations(range(g.order), n):
        rest = full & ~_engine.mask_of(subset)
        if nu[rest] < k:
            return Verdict(False, NoKMatching(subset))
        for medges, mmask in _matchings_in_mask(g.edges, rest, k):
            rem = rest & ~mmask
            if rem.bit_count() - 2 * nu[rem] > d:
                blocker = _first_berge_blocker(g, rem, d)
                return Verdict(False, BlockedExtension(subset, medges, blocker))
    return Verdict(True)


def _char_summary(g: Graph) -> list[list[int]]:
    """summary[k][s]: the largest value of (odd components after deleting S)
    minus |S| over subsets S of size s whose induced subgraph has a
    k-matching; suffix-maximised over s so row lookups answer "any size >= s"."""

    def build():
        nu = _engine.nu_table(g)
        odd = _engine.odd_table(g)
        full = _engine.full_mask(g)
        top = nu[full]
        rows = [[_NEG] * (g.order + 2) for _ in range(top + 1)]
        for mask in range(full + 1):
            s = mask.bit_count()
            value = odd[full & ~mask] - s
            row = rows[nu[mask]]
            if value > row[s]:
                row[s] = value
        # a subset with a k-matching also has every smaller matching
        for kk in range(top - 1, -1, -1):
            upper = rows[kk + 1]
            row = rows[kk]
            for s in range(g.order + 1):
                if upper[s] > row[s]:
                    row[s] = upper[s]
        # suffix max over sizes
        for row in rows:
            for s in range(g.order - 1, -1, -1):
                if row[s + 1] > row[s]:
                    row[s] = row[s + 1]
        return rows

    return _engine.cached(g, "char_summary", build)


def _characterization_holds(g: Graph, n: int, k: int, d: int) -> bool:
    rows = _char_summary(g)
    if rows[0][n] > d - n:
        return False
    if k >= len(rows) or n + 2 * k > g.order:
        return True
    return rows[k][n + 2 * k] <= d - n - 2 * k


def nkd_holds(g: Graph, params: NkdParams, cap: int | None = None) -> bool:
    """Boolean-only characterization decision, cached on the graph instance.

    Same answer as :func:`is_nkd_by_characterization` without witness
    extraction; used where deciders are called in bulk.
    """
    validate_params(g, params)
    _check_cap(g, cap, DECIDER_CAP, "decider")
    key = ("nkd",) + params.as_tuple()
    got = g._cache.get(key)
    if got is None:
        got = _characterization_holds(g, *params.as_tuple())
        g._cache[key] = got
    return got


def is_nkd_by_characterization(g: Graph, params: NkdParams, cap: int | None = None) -> Verdict:
    """Decide via the subset-count characterization.

    Condition "i" is checked for every subset of size at least n and
    condition "ii" for every subset of size at least n + 2k whose induced
    subgraph contains a k-matching, with no pruning shortcuts.  Failure
    returns the first violation in size-then-lexicographic subset order
    (condition "i" tested before "ii" on each subset).
    """
    validate_params(g, params)
    _check_cap(g, cap, DECIDER_CAP, "decider")
    n, k, d = params.as_tuple()
    if _characterization_holds(g, n, k, d):
        return Verdict(True)
    nu = _engine.nu_table(g)
    odd = _engine.odd_table(g)
    full = _engine.full_mask(g)
    for size in range(n, g.order + 1):
        for subset in combinations(range(g.order), size):
            mask = _engine.mask_of(subset)
            o = odd[full & ~mask]
            if o > size - n + d:
                return Verdict(False, CharacterizationViolation("i", subset))
            if size >= n + 2 * k and nu[mask] >= k and o > size - n - 2 * k + d:
                return Verdict(False, CharacterizationViolation("ii", subset))
    raise AssertionError("summary table reported a violation the scan cannot find")


def is_k_extendable(g: Graph, k: int, cap: int | None = None) -> Verdict:
    """Alias for the (0, k, 0) decision: every k-matching extends to a
    perfect matching."""
    return is_nkd_by_definition(g, NkdParams(0, k, 0), cap=cap)


def is_n_critical(g: Graph, n: int, cap: int | None = None) -> Verdict:
    """Alias for the (n, 0, 0) decision: deleting any n vertices leaves a
    perfectly matchable graph."""
    return is_nkd_by_definition(g, NkdParams(n, 0, 0), cap=cap)


# -- witness re-verification (independent of the table-driven search) --------


def verify_witness(g: Graph, params: NkdParams, witness: Witness) -> bool:
    """Re-check a failure witness against its defining inequalities using the
    matching/structure layer only (augmenting-path matching and flood-fill
    component counts), independent of the subset tables that produced it.
    Malformed witnesses yield False rather than an exception."""
    try:
        return _verify_witness(g, params, witness)
    except ValueError:
        return False


def _verify_witness(g: Graph, params: NkdParams, witness: Witness) -> bool:
    from .matching import maximum_matching
    from .structure import odd_count_after_deletion

    n, k, d = params.as_tuple()

    def nu_without(removed) -> int:
        sub, _ = g.delete_vertices(removed)
        return len(maximum_matching(sub))

    if isinstance(witness, NoKMatching):
        return len(witness.deleted) == n and nu_without(witness.deleted) < k

    if isinstance(witness, BlockedExtension):
        if len(witness.deleted) != n or len(witness.matching) != k:
            return False
        body = Matching(witness.matching)
        body.validate(g)
        deleted = set(witness.deleted)
        if deleted & body.vertices():
            return False
        removed = deleted | body.vertices()
        blocker = set(witness.blocker)
        if blocker & removed:
            return False
        o = odd_count_after_deletion(g, removed | blocker)
        return o > len(blocker) + d

    if isinstance(witness, CharacterizationViolation):
        size = len(witness.subset)
        o = odd_count_after_deletion(g, witness.subset)
        if witness.condition == "i":
            return size >= n and o > size - n + d
        if witness.condition == "ii":
            if size < n + 2 * k:
                return False
            sub, _ = g.induced_subgraph(witness.subset)
            if len(maximum_matching(sub)) < k:
                return False
            return o > size - n - 2 * k + d
    return False


# -- separator decompositions (edge-deletion rules) ---------------------------


@dataclass(frozen=True)
class DecompositionWitness:
    """A separator S of size n - 2 + 2k whose removal leaves d factor-critical
    odd components plus the bare distinguished edge.

    ``variant`` records which matching requirement the separator met inside
    its induced subgraph: "d1" demands a k-matching, "d3" a (k-1)-matching;
    ``separator_matching`` is the first such matching in canonical order.
    All coordinates are in the host graph's vertex ids.
    """

    separator: tuple[int, ...]
    edge: Edge
    variant: str
    odd_components: tuple[tuple[int, ...], ...]
    separator_matching: tuple[Edge, ...]

    def to_dict(self) -> dict:
        return {
            "separator": list(self.separator),
            "edge": list(self.edge),
            "variant": self.variant,
            "odd_components": [list(c) for c in self.odd_components],
            "separator_matching": [list(e) for e in self.separator_matching],
        }

    def kv_lines(self) -> list[str]:
        lines = [
            f"variant: {self.variant}",
            f"separator: {_ints(self.separator)}",
            f"separator-matching: {_edges(self.separator_matching)}",
        ]
        for comp in self.odd_components:
            lines.append(f"odd-component: {_ints(comp)}")
        lines.append(f"edge-component: {self.edge[0]} {self.edge[1]}")
        return lines


def find_decomposition_witness(
    g: Graph,
    params: NkdParams,
    edge: Edge,
    variant: str,
    cap: int | None = None,
) -> DecompositionWitness | None:
    """Search for the separator witnessing that deleting ``edge`` destroys
    the shifted parameters (n-2, k, d) for variant "d1", or (n, k-1, d) for
    variant "d3".

    Scans all subsets of size n - 2 + 2k avoiding the edge's endpoints, in
    lexicographic order, and returns the first whose induced subgraph holds
    the required matching while the rest of the graph splits into exactly d
    factor-critical odd components plus the bare edge.  Returns None when no
    such separator exists.
    """
    variant = variant.lower()
    if variant not in ("d1", "d3"):
        raise ParameterError(f"variant must be 'd1' or 'd3', got {variant!r}")
    n, k, d = params.as_tuple()
    if variant == "d1" and n < 2:
        raise ParameterError(f"the d1 search needs n >= 2, got n={n}")
    if variant == "d3" and k < 1:
        raise ParameterError(f"the d3 search needs k >= 1, got k={k}")
    validate_params(g, params)
    _check_cap(g, cap, WITNESS_SEARCH_CAP, "decomposition search")
    u, v = edge
    if not g.has_edge(u, v):
        raise ParameterError(f"({u}, {v}) is not an edge of the graph")
    u, v = min(u, v), max(u, v)
    need = k if variant == "d1" else k - 1
    size = n - 2 + 2 * k
    others = [w for w in range(g.order) if w not in (u, v)]
    if size > len(others):
        return None
    nu = _engine.nu_table(g)
    adj = _engine.adjacency_masks(g)
    full = _engine.full_mask(g)
    uv_mask = (1 << u) | (1 << v)
    for subset in combinations(others, size):
        smask = _engine.mask_of(subset)
        if nu[smask] < need:
            continue
        comps = _engine.component_split(adj, full & ~smask)
        if len(comps) != d + 1 or uv_mask not in comps:
            continue
        if all(
            c.bit_count() & 1 and _engine.factor_critical_mask(g, c)
            for c in comps
            if c != uv_mask
        ):
            inner = next(_matchings_in_mask(g.edges, smask, need))[0]
            odd_comps = tuple(
                tuple(_engine.bits_of(c)) for c in comps if c != uv_mask
            )
            return DecompositionWitness(subset, (u, v), variant, odd_comps, inner)
    return None


def verify_decomposition_witness(g: Graph, params: NkdParams, w: DecompositionWitness) -> bool:
    """Independent re-check of a decomposition witness via the public
    matching/structure operations.  Malformed witnesses yield False."""
    try:
        return _verify_decomposition_witness(g, params, w)
    except ValueError:
        return False


def _verify_decomposition_witness(g: Graph, params: NkdParams, w: DecompositionWitness) -> bool:
    from .matching import maximum_matching
    from .structure import components, is_factor_critical

    n, k, d = params.as_tuple()
    u, v = w.edge
    if not g.has_edge(u, v):
        return False
    if len(w.separator) != n - 2 + 2 * k or {u, v} & set(w.separator):
        return False
    need = k if w.variant == "d1" else k - 1
    inner = Matching(w.separator_matching)
    inner.validate(g)
    if len(inner) != need or not inner.vertices() <= set(w.separator):
        return False
    sub, old_ids = g.delete_vertices(w.separator)
    profile = components(sub)
    comps = [tuple(old_ids[x] for x in comp) for comp in profile]
    if tuple(sorted((u, v))) not in [tuple(sorted(c)) for c in comps if len(c) == 2]:
        return False
    odd = [c for c in comps if len(c) % 2 == 1]
    if len(comps) != d + 1 or len(odd) != d:
        return False
    if sorted(odd) != sorted(w.odd_components):
        return False
    for comp in odd:
        piece, _ = g.induced_subgraph(comp)
        if not is_factor_critical(piece):
            return False
    sep, _ = g.induced_subgraph(w.separator)
    return len(maximum_matching(sep)) >= need
