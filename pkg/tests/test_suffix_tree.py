# -*- coding: utf-8 -*-

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ppcov.paths import SuffixTree
from ppcov.paths import extend_candidates

from conftest import contains

LOOPED5_DUMP = """\
1
  4
    2
      3 *
    5 *
2
  3
    4
      2 *
      5 *
3
  4
    2
      3 *
    5
4
  2
    3
      4 *
  5
5
"""


def test_subpath_inserted_later_is_pruned():
    t = SuffixTree()
    t.insert_with_suffixes([2, 3, 4, 5])
    assert not t.insert_with_suffixes([3, 4, 5]).final_path_recorded
    assert t.enumerate_final() == [(2, 3, 4, 5)]
    assert t.insert_counter == 1


def test_subpath_inserted_first_is_pruned():
    t = SuffixTree()
    assert t.insert_with_suffixes([3, 4, 5]).final_path_recorded
    assert t.insert_with_suffixes([2, 3, 4, 5]).final_path_recorded
    assert t.enumerate_final() == [(2, 3, 4, 5)]
    assert t.insert_counter == 2


def test_extension_clears_the_prefix():
    t = SuffixTree()
    t.insert([1, 2])
    outcome = t.insert([1, 2, 3])
    assert outcome.created_node
    assert outcome.was_extension
    assert t.enumerate_final() == [(1, 2, 3)]


def test_duplicate_insert_creates_nothing():
    t = SuffixTree()
    t.insert_with_suffixes([1, 2])
    n = len(t)
    assert t.insert([1, 2]) == (False, False)
    assert len(t) == n == 3
    assert t.enumerate_final() == [(1, 2)]


def test_tails_stop_at_the_first_existing_tail():
    t = SuffixTree()
    t.insert_with_suffixes([3, 4])
    work = t.work_counter
    t.insert_with_suffixes([1, 2, 3, 4])
    # [1 2 3 4] and [2 3 4] are walked, [3 4] is found and ends the tails
    assert t.work_counter - work == 4 + 3 + 2
    assert t.enumerate_final() == [(1, 2, 3, 4)]


def test_contains_as_subpath_does_not_modify():
    t = SuffixTree()
    t.insert_with_suffixes([2, 3, 4, 5])
    n = len(t)
    assert t.contains_as_subpath([3, 4])
    assert t.contains_as_subpath([5])
    assert not t.contains_as_subpath([4, 3])
    assert not t.contains_as_subpath([1])
    assert len(t) == n
    assert t.enumerate_final() == [(2, 3, 4, 5)]


def test_empty_path_is_rejected():
    with pytest.raises(ValueError):
        SuffixTree().insert([])


def test_looped5_tree(looped5):
    t = SuffixTree()
    for candidate in extend_candidates(looped5):
        t.insert_with_suffixes(candidate)
    assert t.dump() == LOOPED5_DUMP
    assert len(t) == 21
    assert t.enumerate_final() == [
        (1, 4, 2, 3), (1, 4, 5), (2, 3, 4, 2), (2, 3, 4, 5), (3, 4, 2, 3), (4, 2, 3, 4)]


@given(st.lists(st.lists(st.integers(0, 4), min_size=1, max_size=6), min_size=1, max_size=12))
def test_finals_are_the_maximal_insertions(paths):
    t = SuffixTree()
    for p in paths:
        t.insert_with_suffixes(p)
    inserted = set(tuple(p) for p in paths)
    expected = sorted(p for p in inserted
                      if not any(q != p and contains(q, p) for q in inserted))
    assert t.enumerate_final() == expected
    for p in paths:
        for i in range(len(p)):
            assert t.contains_as_subpath(p[i:])
