# -*- coding: utf-8 -*-

import pytest
from hypothesis import strategies as st

from ppcov.contrib import load_fixture
from ppcov.graph import ControlFlowGraph

# getcwd prime paths by their reference label; lexicographic order numbers them
# 2 1 3 4 6 5 7 8
GETCWD_LABELED = {
    1: (1, 2, 3, 5, 7),
    2: (1, 2, 3, 4, 6, 8),
    3: (2, 3, 4, 6, 8, 2),
    4: (3, 4, 6, 8, 2, 3),
    5: (4, 6, 8, 2, 3, 5, 7),
    6: (4, 6, 8, 2, 3, 4),
    7: (6, 8, 2, 3, 4, 6),
    8: (8, 2, 3, 4, 6, 8),
}


@pytest.fixture
def getcwd():
    return load_fixture('getcwd')


@pytest.fixture
def bsearch():
    return load_fixture('bsearch')


@pytest.fixture
def diamond2():
    return load_fixture('diamond2')


@pytest.fixture
def looped5():
    return load_fixture('looped5')


@pytest.fixture
def bdd4():
    return load_fixture('bdd4')


@pytest.fixture
def loopnest():
    return load_fixture('loopnest')


@st.composite
def cfgs(draw, max_vertices=10, max_edges=20, max_id=40):
    """Well-formed graphs over sparse vertex IDs.

    The smallest ID is the entry and the highest few IDs are exits. Every
    other vertex has a successor above it, which keeps each exit reachable
    when extra edges add loops and self-edges on non-entry vertices.
    """
    n = draw(st.integers(1, max_vertices))
    ids = sorted(draw(st.sets(st.integers(0, max_id), min_size=n, max_size=n)))
    k = draw(st.integers(1, max(1, min(3, n - 1))))
    inner = n - k  # positions below inner have successors
    edges = set()
    for i in range(1, n):
        edges.add((draw(st.integers(0, min(i - 1, inner - 1))), i))
    for i in range(inner):
        edges.add((i, draw(st.integers(i + 1, n - 1))))
    if n > 1:
        extra = draw(st.lists(st.tuples(st.integers(0, inner - 1), st.integers(1, n - 1)),
                              max_size=max_edges))
        for src, dst in extra:
            if len(edges) >= max_edges:
                break
            edges.add((src, dst))
    return ControlFlowGraph('g', ids, [(ids[a], ids[b]) for a, b in edges], ids[0])


@st.composite
def walks(draw, g, max_length=30):
    """Entry-rooted walk of *g*, ending at an exit or after *max_length*
    vertices.
    """
    length = draw(st.integers(1, max_length))
    r = [g.entry]
    while len(r) < length and g.successors(r[-1]):
        r.append(draw(st.sampled_from(g.successors(r[-1]))))
    return tuple(r)


def contains(trace, path):
    """Test if *path* is a contiguous part of *trace*.
    """
    k = len(path)
    return any(tuple(trace[i:i + k]) == tuple(path) for i in range(len(trace) - k + 1))
