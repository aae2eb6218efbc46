# -*- coding: utf-8 -*-

""" Record, discard and initialize sets over the indexed prime paths and
their bitset encoding.

Path index *n* (1-based, lexicographic order of the paths) is bit ``n - 1``
of every mask, masks render most significant bit first.
"""

from collections import namedtuple

import pandas as pd

from ppcov.data.utils import DEFAULT_WORD_SIZE
from ppcov.data.utils import WORD_SIZES
from ppcov.data.utils import PathLimitExceeded
from ppcov.data.utils import bin_count
from ppcov.data.utils import format_mask
from ppcov.data.utils import mask_of

DiscardSets = namedtuple('DiscardSets', ['edge', 'vertex', 'hoistable'])


class PathIndex(object):
    """Bijection between 1-based indices and prime paths.

    Parameters
    ----------
    paths : sequence
        Prime paths in lexicographic order.
    """
    def __init__(self, paths):
        self._paths = tuple(tuple(p) for p in paths)
        self._index = {p: n for n, p in enumerate(self._paths, 1)}

    @property
    def paths(self):
        """tuple : Paths, position ``n - 1`` holds path *n*.
        """
        return self._paths

    @property
    def count(self):
        return len(self._paths)

    def index_of(self, path):
        """1-based index of *path*.
        """
        return self._index[tuple(path)]

    def path(self, n):
        return self._paths[n - 1]

    def items(self):
        """Iterate ``(n, path)`` pairs.
        """
        return enumerate(self._paths, 1)

    def __len__(self):
        return len(self._paths)

    def __repr__(self):
        return f"PathIndex: [{len(self._paths)}] paths."


def index_paths(paths) -> PathIndex:
    """Number the paths of a PrimePathSet from 1 in lexicographic order.

    Raises
    ------
    PathLimitExceeded
        If enumeration was aborted.
    """
    if paths.limit_exceeded:
        raise PathLimitExceeded(paths.limit)
    return PathIndex(sorted(paths.paths))


def _collect(idx, vertices, pick):
    r = {v: set() for v in vertices}
    for n, p in idx.items():
        r.setdefault(pick(p), set()).add(n)
    return {v: frozenset(s) for v, s in r.items()}


def record_sets(idx: PathIndex, vertices=()) -> dict:
    """R(v): indices of the paths ending in *v*.

    Every vertex in *vertices* gets an entry, empty or not.
    """
    return _collect(idx, vertices, lambda p: p[-1])


def init_sets(idx: PathIndex, vertices=()) -> dict:
    """I(v): indices of the paths starting in *v*.
    """
    return _collect(idx, vertices, lambda p: p[0])


def _successors_in_path(path):
    # vertex -> vertices immediately following any of its occurrences
    r = {}
    for a, b in zip(path, path[1:]):
        r.setdefault(a, set()).add(b)
    return r


def discard_sets(idx: PathIndex, g) -> DiscardSets:
    """D(p -> v) per edge, its union per vertex, and hoistable flags.

    Path *P* is discarded on edge ``p -> v`` when an occurrence of *p* in
    *P* has a successor in *P* and no occurrence of *p* is followed by *v*.

    A vertex is hoistable when all incoming edges discard the same paths,
    the discard then runs once at the vertex after the record step. No path
    ending in the vertex is discarded on the edge it arrives by, so running
    it after the record loses nothing.

    Returns
    -------
    r : DiscardSets
        ``edge`` maps edges, ``vertex`` and ``hoistable`` map vertices.
    """
    nexts = [(n, _successors_in_path(p)) for n, p in idx.items()]
    edge = {}
    for src, dst in g.edges:
        edge[(src, dst)] = frozenset(
            n for n, following in nexts
            if src in following and dst not in following[src])
    vertex = {}
    hoistable = {}
    for v in g.vertices:
        incoming = [edge[(p, v)] for p in g.predecessors(v)]
        vertex[v] = frozenset().union(*incoming)
        hoistable[v] = all(s == incoming[0] for s in incoming[1:])
    return DiscardSets(edge, vertex, hoistable)


class InstrumentationTable(object):
    """Bitset tables of one function.

    Discard masks are stored as the set of discarded paths, the complement
    is taken when applied.

    Parameters
    ----------
    idx : PathIndex
        Indexed prime paths.
    record : dict
        Vertex to B_R mask.
    init : dict
        Vertex to B_I mask.
    discard_edge : dict
        Edge to discard mask.
    discard_vertex : dict
        Vertex to B_D mask, the union over incoming edges.
    hoistable : dict
        Vertex to flag.
    word_size : int
        Bits per bin.
    """
    def __init__(self, idx, record, init, discard_edge, discard_vertex,
                 hoistable, word_size):
        self.idx = idx
        self.record = record
        self.init = init
        self.discard_edge = discard_edge
        self.discard_vertex = discard_vertex
        self.hoistable = hoistable
        self.word_size = word_size
        # paths of a single vertex are covered by visiting it
        self.single = {v: mask_of(n for n, p in idx.items() if len(p) == 1 and p[0] == v)
                       for v in record}

    @property
    def count(self):
        """int : Number of paths, the meaningful bits of every mask.
        """
        return self.idx.count

    @property
    def bins(self):
        """int : Bins per bitset, ``ceil(count / word_size)``.
        """
        return bin_count(self.count, self.word_size)

    def render(self, mask):
        return format_mask(mask, self.count)

    def mask_frame(self) -> pd.DataFrame:
        """Table of B_R, B_D and B_I per vertex as binary text.
        """
        vertices = sorted(self.record)
        df = pd.DataFrame({
            'B_R': [self.render(self.record[v]) for v in vertices],
            'B_D': [self.render(self.discard_vertex[v]) for v in vertices],
            'B_I': [self.render(self.init[v]) for v in vertices],
        }, index=pd.Index(vertices, name='v'))
        return df

    def edge_frame(self) -> pd.DataFrame:
        """Per-edge discard masks into the vertices that are not hoistable.
        """
        rows = [(f"{src}->{dst}", self.render(m))
                for (src, dst), m in sorted(self.discard_edge.items())
                if not self.hoistable[dst]]
        return pd.DataFrame.from_records(rows, columns=['edge', 'D']).set_index('edge')

    def rdi_frame(self) -> pd.DataFrame:
        """Path by vertex table of R, D and I marks.
        """
        vertices = sorted(self.record)
        data = {}
        for v in vertices:
            col = []
            for n in range(1, self.count + 1):
                bit = 1 << (n - 1)
                marks = ''
                if self.record[v] & bit:
                    marks += 'R'
                if self.discard_vertex[v] & bit:
                    marks += 'D'
                if self.init[v] & bit:
                    marks += 'I'
                col.append(marks)
            data[v] = col
        return pd.DataFrame(data, index=pd.Index([f"P{n}" for n in range(1, self.count + 1)]))

    def __repr__(self):
        return f"InstrumentationTable: [{self.count}] paths, [{self.bins}] bin(s) of {self.word_size} bits."


def build_bitmasks(record, init, discard, idx, word_size=DEFAULT_WORD_SIZE) -> InstrumentationTable:
    """Encode record, init and discard sets as bitsets.

    Parameters
    ----------
    record : dict
        Output of :func:`record_sets`.
    init : dict
        Output of :func:`init_sets`.
    discard : DiscardSets
        Output of :func:`discard_sets`.
    idx : PathIndex
        Indexed paths.
    word_size : int
        Bits per bin, one of 8, 16, 32, 64.
    """
    if word_size not in WORD_SIZES:
        raise ValueError(f"unsupported word size {word_size}, use one of {WORD_SIZES}")
    return InstrumentationTable(
        idx,
        {v: mask_of(s) for v, s in record.items()},
        {v: mask_of(s) for v, s in init.items()},
        {e: mask_of(s) for e, s in discard.edge.items()},
        {v: mask_of(s) for v, s in discard.vertex.items()},
        dict(discard.hoistable),
        word_size)


def instrumentation_table(g, idx: PathIndex, word_size=DEFAULT_WORD_SIZE) -> InstrumentationTable:
    """Derive the full table of *g* for the indexed paths.
    """
    return build_bitmasks(record_sets(idx, g.vertices),
                          init_sets(idx, g.vertices),
                          discard_sets(idx, g), idx, word_size)


def partition_bins(mask: int, word_size: int) -> list:
    """Split *mask* into bins of *word_size* bits.

    Returns
    -------
    r : list
        ``(bin index, value)`` for the non-zero bins, bin *j* holding path
        indices ``j * word_size + 1`` to ``(j + 1) * word_size``.
    """
    r = []
    word_mask = (1 << word_size) - 1
    j = 0
    while mask:
        value = mask & word_mask
        if value:
            r.append((j, value))
        mask >>= word_size
        j += 1
    return r
