# -*- coding: utf-8 -*-

""" Prime path enumeration.

Candidates are the forward-maximal simple paths and the simple cycles of
the graph, grown depth-first from every vertex. Each candidate goes into a
suffix tree together with its tails, which prunes every candidate that is a
subpath of another, what is left marked final are the prime paths.
"""

import logging

from ppcov.data.utils import DEFAULT_PATH_LIMIT
from ppcov.data.utils import ORACLE_MAX_VERTICES
from ppcov.data.utils import OracleSizeError
from .suffix_tree import SuffixTree

_LOGGER = logging.getLogger(__name__)


class PrimePathSet(object):
    """Result of prime path enumeration for one graph.

    Parameters
    ----------
    paths : tuple
        Prime paths as tuples of vertex IDs, lexicographic order, empty if
        the limit was exceeded.
    limit_exceeded : bool
        Enumeration was aborted by the path limit.
    limit : int
        Threshold used.
    insertions_counted : int
        Running count of the suffix tree when enumeration stopped.

    Keyword Arguments
    -----------------
    candidates_seen : int
        Candidates fed to the suffix tree.
    longest_candidate : int
        Length of the longest candidate.
    work_counter : int
        Suffix tree work.
    """
    def __init__(self, paths, limit_exceeded, limit, insertions_counted, **kws):
        self.paths = tuple(tuple(p) for p in paths)
        self.limit_exceeded = limit_exceeded
        self.limit = limit
        self.insertions_counted = insertions_counted
        self.candidates_seen = kws.get('candidates_seen', 0)
        self.longest_candidate = kws.get('longest_candidate', 0)
        self.work_counter = kws.get('work_counter', 0)

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __getitem__(self, i):
        return self.paths[i]

    def __str__(self):
        if self.limit_exceeded:
            return f"PrimePathSet: aborted, [{self.insertions_counted}] insertions exceed limit {self.limit}."
        return f"PrimePathSet: [{len(self.paths)}] prime paths."

    __repr__ = __str__


def extend_candidates(g):
    """Yield the candidate paths of *g*.

    From every vertex in ascending order, paths are extended depth-first by
    successors in ascending order: a successor not yet on the path extends
    it, a successor equal to the first vertex closes a simple cycle which is
    yielded and not extended further. A path nothing extends is yielded.

    Parameters
    ----------
    g : ControlFlowGraph
        A valid graph.

    Returns
    -------
    r : generator
        Tuples of vertex IDs.
    """
    for v in g.vertices:
        path = [v]
        onpath = {v}
        frames = [iter(g.successors(v))]
        grew = [False]
        while frames:
            for s in frames[-1]:
                if s == path[0]:
                    grew[-1] = True
                    yield tuple(path) + (s, )
                elif s not in onpath:
                    grew[-1] = True
                    path.append(s)
                    onpath.add(s)
                    frames.append(iter(g.successors(s)))
                    grew.append(False)
                    break
            else:
                frames.pop()
                if not grew.pop():
                    yield tuple(path)
                onpath.discard(path.pop())


def prime_paths(g, limit: int = DEFAULT_PATH_LIMIT) -> PrimePathSet:
    """Enumerate the prime paths of *g*.

    The count of insertions is never corrected when a path is subsumed
    later, so enumeration may stop on graphs just under the limit.

    Parameters
    ----------
    g : ControlFlowGraph
        A valid graph.
    limit : int
        Give up once more than *limit* candidate insertions created nodes,
        default 250000.

    Returns
    -------
    r : PrimePathSet
        Prime paths in lexicographic order, or the aborted result.
    """
    if limit < 1:
        raise ValueError(f"path limit must be positive, got {limit}")
    tree = SuffixTree()
    m = 0
    n = 0
    for candidate in extend_candidates(g):
        m += 1
        n = max(n, len(candidate))
        tree.insert_with_suffixes(candidate)
        if tree.insert_counter > limit:
            _LOGGER.warning("'%s': path limit %d exceeded, enumeration aborted",
                            g.name, limit)
            return PrimePathSet((), True, limit, tree.insert_counter,
                                candidates_seen=m, longest_candidate=n,
                                work_counter=tree.work_counter)
    paths = tree.enumerate_final()
    _LOGGER.debug("'%s': %d prime paths from %d candidates", g.name, len(paths), m)
    return PrimePathSet(paths, False, limit, tree.insert_counter,
                        candidates_seen=m, longest_candidate=n,
                        work_counter=tree.work_counter)


def _guard(g):
    if len(g.vertices) > ORACLE_MAX_VERTICES:
        raise OracleSizeError(len(g.vertices), ORACLE_MAX_VERTICES)


def simple_paths_bruteforce(g, include_single: bool = False) -> list:
    """Every simple path and simple cycle of *g*, sorted.

    Parameters
    ----------
    g : ControlFlowGraph
        Graph of at most 16 vertices.
    include_single : bool
        If set, single-vertex paths are listed too.
    """
    _guard(g)
    r = set()

    def visit(path):
        if len(path) > 1 or include_single:
            r.add(tuple(path))
        for s in g.successors(path[-1]):
            if s == path[0]:
                r.add(tuple(path) + (s, ))
            elif s not in path:
                visit(path + [s])

    for v in g.vertices:
        visit([v])
    return sorted(r)


def prime_paths_bruteforce(g) -> list:
    """Maximal elements of the simple paths and cycles of *g*, sorted.
    """
    paths = simple_paths_bruteforce(g, include_single=True)
    inner = set()
    for p in paths:
        k = len(p)
        for i in range(k):
            for j in range(i + 1, k + 1):
                if j - i < k:
                    inner.add(p[i:j])
    return [p for p in paths if p not in inner]
