# -*- coding: utf-8 -*-

""" Persistent prime path coverage of one function, and replay of runs
through the instrumentation.
"""

import logging

import numpy as np

from ppcov.data.utils import ABORTED_NOTICE
from ppcov.data.utils import ChecksumMismatch
from ppcov.data.utils import MergeError
from ppcov.data.utils import TraceError
from ppcov.data.utils import bit_count
from ppcov.data.utils import bits_of
from ppcov.data.utils import from_bins
from ppcov.data.utils import to_bins
from ppcov.graph import canonical_checksum
from ppcov.instrument import InstrumentationPlan
from ppcov.instrument import InstrumentationTable

_LOGGER = logging.getLogger(__name__)


class CoverageState(object):
    """Covered prime paths of a function, accumulated over runs.

    Parameters
    ----------
    name : str
        Function name.
    checksum : int
        Canonical checksum of the graph the paths were computed from.
    count : int
        Number of prime paths.

    Keyword Arguments
    -----------------
    aborted : bool
        Enumeration hit the path limit, no paths are tracked.
    covered : int
        Bitset, bit ``n - 1`` for path index *n*.
    runs : int
        Replayed runs.
    """
    def __init__(self, name, checksum, count, **kws):
        self.name = name
        self.checksum = checksum
        self.aborted = kws.get('aborted', False)
        self.count = 0 if self.aborted else count
        self.covered = 0 if self.aborted else kws.get('covered', 0)
        self.runs = kws.get('runs', 0)
        if self.covered >> self.count:
            raise ValueError(f"'{name}': covered bits beyond {self.count} paths")

    def copy(self, **kws):
        d = dict(aborted=self.aborted, covered=self.covered, runs=self.runs)
        d.update(kws)
        return CoverageState(self.name, self.checksum, self.count, **d)

    @property
    def covered_indices(self):
        """list : Covered path indices, ascending.
        """
        return bits_of(self.covered)

    def is_covered(self, n):
        return bool(self.covered >> (n - 1) & 1)

    def __eq__(self, other):
        if not isinstance(other, CoverageState):
            return NotImplemented
        return ((self.name, self.checksum, self.count, self.aborted, self.covered, self.runs)
                == (other.name, other.checksum, other.count, other.aborted, other.covered, other.runs))

    def __str__(self):
        return f"CoverageState '{self.name}': {coverage_summary(self)}, [{self.runs}] runs."

    __repr__ = __str__


def new_state(g, paths) -> CoverageState:
    """Fresh state for *g* and its PrimePathSet *paths*.
    """
    return CoverageState(g.name, canonical_checksum(g), len(paths),
                         aborted=paths.limit_exceeded)


def check_trace(g, vertices, lineno=None):
    """Raise TraceError unless *vertices* is a run of *g* from its entry.
    """
    if not vertices:
        return
    if vertices[0] != g.entry:
        raise TraceError(f"'{g.name}': run starts at {vertices[0]}, entry is {g.entry}", lineno)
    for a, b in zip(vertices, vertices[1:]):
        if not g.has_edge(a, b):
            raise TraceError(f"'{g.name}': {a} -> {b} is not an edge", lineno)


def _replay_plan(plan, state, vertices):
    k = plan.bins
    w = plan.word_size
    live = np.zeros(k, dtype=np.uint64)
    covered = to_bins(state.covered, w, k)
    extra = 0

    def enter(v):
        for step in plan.steps_at(v):
            step.apply(live, covered)
        return plan.single.get(v, 0)

    extra |= enter(vertices[0])
    for p, v in zip(vertices, vertices[1:]):
        for step in plan.steps_on(p, v):
            step.apply(live, covered)
        extra |= enter(v)
    return from_bins(covered, w) | extra


def _replay_table(table, state, vertices):
    # full-width reference: per-edge discard, then record, then initialize
    live = 0
    covered = state.covered | table.single[vertices[0]]
    live |= table.init[vertices[0]]
    for p, v in zip(vertices, vertices[1:]):
        live &= ~table.discard_edge[(p, v)]
        covered |= live & table.record[v]
        live |= table.init[v]
        covered |= table.single[v]
    return covered


def replay_run(state, instrumentation, g, trace) -> CoverageState:
    """Replay one run and return the updated state.

    Parameters
    ----------
    state : CoverageState
        State before the run, unchanged by the call.
    instrumentation : InstrumentationPlan or InstrumentationTable
        An elided plan runs bin by bin, a table runs full-width with the
        per-edge discards.
    g : ControlFlowGraph
        Graph of the function.
    trace : Trace or sequence
        Vertices of the run.

    Raises
    ------
    ChecksumMismatch
        If *state* was not recorded against *g*.
    TraceError
        If the run does not start at the entry or takes a non-edge.
    """
    vertices = tuple(getattr(trace, 'vertices', trace))
    checksum = canonical_checksum(g)
    if checksum != state.checksum:
        raise ChecksumMismatch(g.name, checksum, state.checksum)
    check_trace(g, vertices, getattr(trace, 'lineno', None))
    if not vertices:
        return state.copy()
    if state.aborted:
        return state.copy(runs=state.runs + 1)
    if isinstance(instrumentation, InstrumentationPlan):
        covered = _replay_plan(instrumentation, state, vertices)
    elif isinstance(instrumentation, InstrumentationTable):
        covered = _replay_table(instrumentation, state, vertices)
    else:
        raise TypeError(f"cannot replay with {type(instrumentation).__name__}")
    _LOGGER.debug("'%s': run of %d vertices, %d path(s) covered", g.name, len(vertices), bit_count(covered))
    return state.copy(covered=covered, runs=state.runs + 1)


def merge(a: CoverageState, b: CoverageState) -> CoverageState:
    """Union of two states of the same function.

    Raises
    ------
    MergeError
        Naming the first identity field that differs.
    """
    for field in ('name', 'checksum', 'count', 'aborted'):
        if getattr(a, field) != getattr(b, field):
            raise MergeError(field, a.name)
    return a.copy(covered=a.covered | b.covered, runs=a.runs + b.runs)


class Summary(object):
    """Covered count, total and ratio of a state.
    """
    def __init__(self, covered, total, aborted=False):
        self.covered = covered
        self.total = total
        self.aborted = aborted

    @property
    def ratio(self):
        """float : Covered fraction, None if aborted or there are no paths.
        """
        if self.aborted or self.total == 0:
            return None
        return self.covered / self.total

    def __iter__(self):
        return iter((self.covered, self.total, self.ratio))

    def __str__(self):
        if self.aborted:
            return ABORTED_NOTICE
        return f"{self.covered}/{self.total}"


def coverage_summary(state: CoverageState, paths=None) -> Summary:
    """Covered count, total and ratio of *state*.

    Parameters
    ----------
    state : CoverageState
        Coverage of a function.
    paths : PrimePathSet
        Optional, prime paths of the function. The total is taken from
        *state*, which must agree with *paths* when both are given.

    Raises
    ------
    ValueError
        If *paths* and *state* disagree on the number of paths.
    """
    if state.aborted:
        return Summary(0, 0, aborted=True)
    if paths is not None and (paths.limit_exceeded or len(paths) != state.count):
        raise ValueError(f"'{state.name}': state has {state.count} paths, not {len(paths)}")
    return Summary(bit_count(state.covered), state.count)
