# -*- coding: utf-8 -*-

import numpy as np
import pytest
from hypothesis import HealthCheck
from hypothesis import given
from hypothesis import settings

from ppcov.data.utils import PathLimitExceeded
from ppcov.data.utils import format_mask
from ppcov.data.utils import to_bins
from ppcov.contrib import diamond_chain
from ppcov.instrument import DISCARD
from ppcov.instrument import INITIALIZE
from ppcov.instrument import RECORD
from ppcov.instrument import Step
from ppcov.instrument import build_plan
from ppcov.instrument import discard_sets
from ppcov.instrument import index_paths
from ppcov.instrument import init_sets
from ppcov.instrument import instrumentation_table
from ppcov.instrument import partition_bins
from ppcov.instrument import record_sets
from ppcov.instrument import render_pseudo_source
from ppcov.paths import prime_paths

from conftest import GETCWD_LABELED
from conftest import cfgs

# bitmasks of getcwd by reference label, bit k is label k + 1
LABELED_MASKS = {
    1: ('00000000', '00000000', '00000011'),
    2: ('00000100', '00000000', '00000100'),
    3: ('00001000', '00000000', '00001000'),
    4: ('00100000', '00010001', '00110000'),
    5: ('00000000', '11101110', '00000000'),
    6: ('01000000', '00000000', '01000000'),
    7: ('00010001', '00000000', '00000000'),
    8: ('10000010', '00000000', '10000000'),
}

# R/D/I marks of getcwd by reference label, per vertex
LABELED_RDI = {
    1: {1: 'I', 2: 'I'},
    2: {3: 'RI'},
    3: {4: 'RI'},
    4: {1: 'D', 5: 'DI', 6: 'RI'},
    5: {2: 'D', 3: 'D', 4: 'D', 6: 'D', 7: 'D', 8: 'D'},
    6: {7: 'RI'},
    7: {1: 'R', 5: 'R'},
    8: {2: 'R', 8: 'RI'},
}


@pytest.fixture
def getcwd_table(getcwd):
    return instrumentation_table(getcwd, index_paths(prime_paths(getcwd)), 8)


@pytest.fixture
def relabel(getcwd):
    """Reference label to lexicographic index."""
    idx = index_paths(prime_paths(getcwd))
    return {k: idx.index_of(p) for k, p in GETCWD_LABELED.items()}


def _permute(text, relabel):
    r = 0
    for k, n in relabel.items():
        if int(text, 2) >> (k - 1) & 1:
            r |= 1 << (n - 1)
    return r


def test_index_is_lexicographic(getcwd):
    idx = index_paths(prime_paths(getcwd))
    assert idx.count == len(idx) == 8
    assert idx.path(1) == (1, 2, 3, 4, 6, 8)
    assert idx.index_of([1, 2, 3, 5, 7]) == 2
    assert [n for n, _ in idx.items()] == list(range(1, 9))


def test_index_of_aborted_enumeration():
    with pytest.raises(PathLimitExceeded):
        index_paths(prime_paths(diamond_chain(10), limit=100))


def test_sets_of_getcwd(getcwd):
    idx = index_paths(prime_paths(getcwd))
    r = record_sets(idx, getcwd.vertices)
    i = init_sets(idx, getcwd.vertices)
    d = discard_sets(idx, getcwd)
    assert r[7] == {2, 6}
    assert r[1] == r[5] == frozenset()
    assert i[1] == {1, 2}
    assert i[4] == {5, 6}
    assert d.edge[(3, 4)] == {2, 6}
    assert d.edge[(3, 5)] == {1, 3, 4, 5, 7, 8}
    assert d.edge[(8, 2)] == frozenset()
    assert d.vertex[5] == d.edge[(3, 5)]
    assert all(d.hoistable.values())


def test_masks_match_labeled_paths(getcwd_table, relabel):
    for v, (rec, dis, ini) in LABELED_MASKS.items():
        assert getcwd_table.record[v] == _permute(rec, relabel)
        assert getcwd_table.discard_vertex[v] == _permute(dis, relabel)
        assert getcwd_table.init[v] == _permute(ini, relabel)


def test_rdi_table_matches_labeled_paths(getcwd_table, relabel):
    df = getcwd_table.rdi_frame()
    assert list(df.columns) == list(range(1, 9))
    assert list(df.index) == [f"P{n}" for n in range(1, 9)]
    for v, marks in LABELED_RDI.items():
        for k in range(1, 9):
            assert df.loc[f"P{relabel[k]}", v] == marks.get(k, '')


def test_mask_frame(getcwd_table):
    df = getcwd_table.mask_frame()
    assert df.loc[1, 'B_I'] == '00000011'
    assert df.loc[5, 'B_D'] == '11011101'
    assert df.loc[4, 'B_D'] == '00100010'
    assert df.loc[7, 'B_R'] == '00100010'
    assert df.loc[8, 'B_R'] == '10000001'
    assert getcwd_table.edge_frame().empty


def test_looped5_masks_are_six_bits(looped5):
    table = instrumentation_table(looped5, index_paths(prime_paths(looped5)))
    assert table.count == 6
    assert table.bins == 1
    assert set(len(i) for i in table.mask_frame().values.ravel()) == {6}


def test_unhoistable_discards_stay_on_edges(bdd4):
    table = instrumentation_table(bdd4, index_paths(prime_paths(bdd4)))
    assert not table.hoistable[5]
    assert not table.hoistable[4]
    assert table.hoistable[6]
    assert table.discard_edge[(1, 5)] == 0b011111
    assert table.discard_edge[(3, 5)] == 0b000011
    assert table.discard_edge[(4, 5)] == 0b010010
    edges = table.edge_frame()
    assert list(edges.index) == ['1->5', '2->4', '3->4', '3->5', '4->5']
    assert edges.loc['1->5', 'D'] == '011111'
    plan = build_plan(bdd4, table)
    assert all(s.kind != DISCARD for s in plan.steps_at(5))
    assert plan.steps_on(3, 5) == (Step(DISCARD, [(0, 0b000011)]), )
    assert plan.edges == [(1, 5), (2, 4), (3, 4), (3, 5), (4, 5)]


def test_bad_word_size(getcwd):
    with pytest.raises(ValueError):
        instrumentation_table(getcwd, index_paths(prime_paths(getcwd)), 12)


def test_partition_bins():
    assert partition_bins(0, 8) == []
    assert partition_bins(0b100, 4) == [(0, 0b100)]
    assert partition_bins(0b0100_0000, 4) == [(1, 0b0100)]
    assert partition_bins((1 << 64) | 1, 64) == [(0, 1), (1, 1)]
    assert partition_bins(1 << 63, 64) == [(0, 1 << 63)]


def test_step_apply_in_place():
    live = to_bins(0b0011_0000, 4, 2)
    covered = np.zeros(2, dtype=np.uint64)
    Step(RECORD, [(1, 0b0001)]).apply(live, covered)
    assert list(covered) == [0, 1]
    Step(DISCARD, [(1, 0b0010)]).apply(live, covered)
    assert list(live) == [0, 1]
    Step(INITIALIZE, [(0, 0b0100)]).apply(live, covered)
    assert list(live) == [4, 1]


def test_plan_elides_empty_steps(getcwd, getcwd_table):
    plan = build_plan(getcwd, getcwd_table)
    assert [s.kind for s in plan.steps_at(5)] == [DISCARD]
    assert [s.kind for s in plan.steps_at(4)] == [RECORD, DISCARD, INITIALIZE]
    assert [s.kind for s in plan.steps_at(2)] == [RECORD, INITIALIZE]
    assert [s.kind for s in plan.steps_at(1)] == [INITIALIZE]
    assert [s.kind for s in plan.steps_at(7)] == [RECORD]
    assert plan.edges == []


def test_plan_touches_affected_bins_only(bsearch):
    table = instrumentation_table(bsearch, index_paths(prime_paths(bsearch)), 8)
    plan = build_plan(bsearch, table)
    assert plan.bins == 3
    assert plan.steps_at(1) == (Step(INITIALIZE, [(0, 0b00001111)]), )
    assert plan.steps_at(9) == (
        Step(RECORD, [(0, 0b10001100), (1, 0b00010010), (2, 0b1)]), )
    assert [s.kind for s in plan.steps_at(7)] == [RECORD, DISCARD, INITIALIZE]
    assert plan.steps_at(7)[1] == Step(DISCARD, [(0, 0b100), (1, 0b10000), (2, 0b1)])
    assert plan.steps_at(7)[2] == Step(INITIALIZE, [(1, 0b10000000), (2, 0b1)])


def test_pseudo_source(getcwd, getcwd_table):
    text = render_pseudo_source(build_plan(getcwd, getcwd_table), getcwd)
    lines = text.splitlines()
    assert lines[1] == "uint P[1];"
    i = lines.index("block 1:")
    assert lines[i + 1:i + 4] == ["  uint L[1] = {0};", "  L |= 00000011;",
                                  "  void *gnu_getcwd () {"]
    i = lines.index("block 5:")
    assert lines[i + 1:i + 3] == ["  L &= ~11011101;", "  return buffer;"]
    i = lines.index("block 4:")
    assert lines[i + 1:i + 4] == ["  P |= L & 00010000;", "  L &= ~00100010;",
                                  "  L |= 00110000;"]
    assert "edge" not in text


def test_pseudo_source_with_bins(bsearch):
    table = instrumentation_table(bsearch, index_paths(prime_paths(bsearch)), 8)
    text = render_pseudo_source(build_plan(bsearch, table), bsearch)
    assert "uint P[3];" in text
    assert "  L[0] |= 00001111;" in text
    assert "  L[1] |= 10000000;" in text
    assert "  L[2] |= 1;" in text
    assert "  P[2] |= L[2] & 1;" in text


def test_pseudo_source_edge_sections(bdd4):
    table = instrumentation_table(bdd4, index_paths(prime_paths(bdd4)), 8)
    lines = render_pseudo_source(build_plan(bdd4, table), bdd4).splitlines()
    i = lines.index("edge 3 -> 5:")
    assert lines[i + 1] == "  L &= ~000011;"


def test_render_mask():
    assert format_mask(0b11, 8) == '00000011'
    assert format_mask(0, 0) == ''


@settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(cfgs())
def test_tables_are_consistent(g):
    idx = index_paths(prime_paths(g))
    record = record_sets(idx, g.vertices)
    init = init_sets(idx, g.vertices)
    for n, path in idx.items():
        assert [v for v in g.vertices if n in record[v]] == [path[-1]]
        assert [v for v in g.vertices if n in init[v]] == [path[0]]
    ds = discard_sets(idx, g)
    for v in g.vertices:
        incoming = [ds.edge[(p, v)] for p in g.predecessors(v)]
        assert ds.vertex[v] == frozenset().union(*incoming)
        assert ds.hoistable[v] == (len(set(incoming)) <= 1)
    for (src, dst), discarded in ds.edge.items():
        for n in discarded:
            path = idx.path(n)
            assert (src, dst) not in set(zip(path, path[1:]))
