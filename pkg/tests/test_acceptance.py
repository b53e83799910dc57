"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Criterion 4 asserts a published claim about the hub/clique blow-up
family that is mathematically false (both deciders and a hand check agree);
it is implemented as stated and left red rather than weakened.
"""

import time
from contextlib import contextmanager

from matchext import (
    NkdParams,
    berge_violating_set,
    enumerate_k_matchings,
    family_blowup_bipartite,
    family_cliques_plus_edge,
    family_cliques_plus_edge_cone,
    family_gadget_chain,
    find_decomposition_witness,
    has_defect_matching,
    is_nkd_by_characterization,
    is_nkd_by_definition,
    nu,
    read_edge_list,
    read_graph6,
    run_census,
    valid_triples,
    write_edge_list,
    write_graph6,
)
from conftest import connected_census


@contextmanager
def criterion(number: int, title: str):
    start = time.time()
    try:
        yield
    except BaseException:
        print(f"criterion {number}: FAIL - {title} [{time.time() - start:.1f}s]")
        raise
    print(f"criterion {number}: PASS - {title} [{time.time() - start:.1f}s]")


def both_hold(g, p) -> bool:
    a = is_nkd_by_definition(g, p).holds
    b = is_nkd_by_characterization(g, p).holds
    assert a == b, f"deciders disagree on {g} {p}: definition={a} characterization={b}"
    return a


def test_criterion_1_decider_equivalence(census7, order8_sample):
    with criterion(1, "decider equivalence over the order-<=7 census and 500 order-8 graphs"):
        start = time.time()
        assert sum(1 for g in census7 if g.order == 7) == 853
        checked = 0
        for g in census7 + order8_sample:
            for p in valid_triples(g.order):
                both_hold(g, p)
                checked += 1
        elapsed = time.time() - start
        assert checked > 30000
        assert elapsed < 600, f"equivalence sweep took {elapsed:.0f}s"


def test_criterion_2_cliques_plus_edge_family():
    with criterion(2, "bare-edge family is (2,1,2); deleting its edge destroys (0,1,2)"):
        h = family_cliques_plus_edge(2, 1)
        assert both_hold(h, NkdParams(2, 1, 2)) is True
        assert both_hold(h.delete_edge(6, 7), NkdParams(0, 1, 2)) is False


def test_criterion_3_cone_family():
    with criterion(3, "coned family is (3,1,2); minus the distinguished edge not (1,1,2)"):
        h = family_cliques_plus_edge_cone(2, 1)
        assert both_hold(h, NkdParams(3, 1, 2)) is True
        assert both_hold(h.delete_edge(6, 7), NkdParams(1, 1, 2)) is False


def test_criterion_4_blowup_family():
    with criterion(4, "blow-up family claims: (1,2,1) holds; +hub edge not (1,1,1); not (3,0,1)"):
        h = family_blowup_bipartite(1, 1)
        assert both_hold(h.add_edge(0, 1), NkdParams(1, 1, 1)) is False
        assert both_hold(h, NkdParams(3, 0, 1)) is False
        # Published claim; actually false: delete hub 0 and match hubs 1, 2
        # into the same 3-clique, leaving K1 + K3 + K3 with deficiency 3 > 1.
        # The family first satisfies k=2 at defect 3: see (1,2,3) below.
        assert both_hold(h, NkdParams(1, 2, 3)) is True
        assert both_hold(h, NkdParams(1, 2, 1)) is True, (
            "the blow-up family is not a (1,2,1)-graph: witness "
            f"{is_nkd_by_definition(h, NkdParams(1, 2, 1)).witness}"
        )


def test_criterion_5_gadget_family():
    with criterion(5, "gadget chain is (1,3,3); -uv not (1,2,3); no d3 witness; max degree 5"):
        h = family_gadget_chain(2)
        u, v = 10, 11
        assert both_hold(h, NkdParams(1, 3, 3)) is True
        assert both_hold(h.delete_edge(u, v), NkdParams(1, 2, 3)) is False
        assert find_decomposition_witness(h, NkdParams(1, 3, 3), (u, v), "d3") is None
        assert max(h.degree(u), h.degree(v)) == 5


def test_criterion_6_theorem_census(census7, disconnected1000):
    with criterion(6, "zero violations for all 11 checkers over connected + disconnected censuses"):
        lines = [write_graph6(g) for g in census7 + disconnected1000]
        result = run_census(lines)
        assert result.graphs == len(lines)
        assert not result.decode_errors
        for tid, report in result.reports.items():
            assert report.passed, f"{tid}: {[v.to_dict() for v in report.violations]}"
        assert result.total_violations == 0


def test_criterion_7_matching_engine_vs_enumeration(mixed_sample8):
    with criterion(7, "shrinking-based matching size equals enumeration maximum on 1000 graphs"):
        assert len(mixed_sample8) == 1000
        for g in mixed_sample8:
            best = 0
            for k in range(g.order // 2 + 1):
                if next(iter(enumerate_k_matchings(g, k)), None) is not None:
                    best = k
            assert nu(g) == best, g


def test_criterion_8_defect_matching_equivalence(census7, order8_sample, disconnected1000):
    with criterion(8, "defect-d existence agrees with the subset-enumeration oracle"):
        for g in census7 + order8_sample + disconnected1000:
            for d in range(g.order % 2, g.order + 1, 2):
                assert has_defect_matching(g, d) == (
                    berge_violating_set(g, d) is None
                ), (g, d)


def test_criterion_9_round_trip_io(census7, order8_sample, disconnected1000):
    with criterion(9, "graph6 and edge-list round-trips are the identity on every census graph"):
        for g in census7 + order8_sample + disconnected1000:
            line = write_graph6(g)
            assert read_graph6(line) == g
            assert write_graph6(read_graph6(line)) == line
            assert read_edge_list(write_edge_list(g)) == g
