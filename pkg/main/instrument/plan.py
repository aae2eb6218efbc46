# -*- coding: utf-8 -*-

""" Per-location instrumentation plan.

Each vertex runs record, discard and initialize in that order, every step
limited to the bins its mask touches and left out when the mask is empty.
Discards of vertices that are not hoistable run on the incoming edges
instead, before the vertex is entered.
"""

import numpy as np

from ppcov.data.utils import format_mask
from .tables import partition_bins

RECORD = 'record'
DISCARD = 'discard'
INITIALIZE = 'initialize'


class Step(object):
    """One masked bitset operation.

    Parameters
    ----------
    kind : str
        'record', 'discard' or 'initialize'.
    bins : list
        ``(bin index, value)`` of the affected bins.
    """
    __slots__ = ('kind', 'bins', 'index', 'values')

    def __init__(self, kind, bins):
        self.kind = kind
        self.bins = tuple(bins)
        self.index = np.array([j for j, _ in self.bins], dtype=np.intp)
        self.values = np.array([m for _, m in self.bins], dtype=np.uint64)

    def apply(self, live, covered):
        """Apply to the bin arrays *live* (L) and *covered* (P) in place.
        """
        i = self.index
        if self.kind == RECORD:
            covered[i] |= live[i] & self.values
        elif self.kind == DISCARD:
            live[i] &= ~self.values
        else:
            live[i] |= self.values

    def __eq__(self, other):
        return isinstance(other, Step) and (self.kind, self.bins) == (other.kind, other.bins)

    def __repr__(self):
        return f"Step({self.kind!r}, {list(self.bins)!r})"


class InstrumentationPlan(object):
    """Elided steps per vertex and per edge.
    """
    def __init__(self, vertex_steps, edge_steps, word_size, count, single):
        self._vertex_steps = vertex_steps
        self._edge_steps = edge_steps
        self.word_size = word_size
        self.count = count
        self.single = single

    @property
    def bins(self):
        return -(-self.count // self.word_size)

    def steps_at(self, v):
        """Ordered steps run on entering vertex *v*.
        """
        return self._vertex_steps.get(v, ())

    def steps_on(self, src, dst):
        """Discard steps run when taking edge ``src -> dst``.
        """
        return self._edge_steps.get((src, dst), ())

    @property
    def edges(self):
        """Edges that carry steps, ascending.
        """
        return sorted(self._edge_steps)

    def __repr__(self):
        n = sum(len(s) for s in self._vertex_steps.values())
        n += sum(len(s) for s in self._edge_steps.values())
        return f"InstrumentationPlan: [{n}] steps, [{self.bins}] bin(s) of {self.word_size} bits."


def build_plan(g, table) -> InstrumentationPlan:
    """Elide empty operations and unaffected bins of *table*.

    Parameters
    ----------
    g : ControlFlowGraph
        The instrumented graph.
    table : InstrumentationTable
        Bitset tables of *g*.
    """
    w = table.word_size
    vertex_steps = {}
    edge_steps = {}
    for v in g.vertices:
        steps = []
        masks = [(RECORD, table.record[v]), (INITIALIZE, table.init[v])]
        if table.hoistable[v]:
            masks.insert(1, (DISCARD, table.discard_vertex[v]))
        else:
            for p in g.predecessors(v):
                bins = partition_bins(table.discard_edge[(p, v)], w)
                if bins:
                    edge_steps[(p, v)] = (Step(DISCARD, bins), )
        for kind, mask in masks:
            bins = partition_bins(mask, w)
            if bins:
                steps.append(Step(kind, bins))
        vertex_steps[v] = tuple(steps)
    return InstrumentationPlan(vertex_steps, edge_steps, w, table.count, dict(table.single))


def _bin_width(plan, j):
    return min(plan.word_size, plan.count - j * plan.word_size)


def _render_step(plan, step):
    out = []
    for j, value in step.bins:
        text = format_mask(value, _bin_width(plan, j))
        sub = f"[{j}]" if plan.bins > 1 else ""
        if step.kind == RECORD:
            out.append(f"P{sub} |= L{sub} & {text};")
        elif step.kind == DISCARD:
            out.append(f"L{sub} &= ~{text};")
        else:
            out.append(f"L{sub} |= {text};")
    return out


def render_pseudo_source(plan: InstrumentationPlan, g) -> str:
    """Render the plan as C-like pseudo source, block by block.

    Edge discards are listed as ``edge p -> v:`` sections after the block
    of *p*, source lines follow the operations of their block.
    """
    width = max(plan.bins, 1)
    out = [f"/* {g.name}: {plan.count} prime paths, {plan.bins} x {plan.word_size}-bit bins */"]
    out.append(f"uint P[{width}];")
    for v in g.vertices:
        out.append(f"block {v}:")
        if v == g.entry:
            out.append(f"  uint L[{width}] = {{0}};")
        for step in plan.steps_at(v):
            out.extend(f"  {i}" for i in _render_step(plan, step))
        for _, text in g.lines_of(v):
            out.append(f"  {text}")
        for s in g.successors(v):
            steps = plan.steps_on(v, s)
            if steps:
                out.append(f"edge {v} -> {s}:")
                for step in steps:
                    out.extend(f"  {i}" for i in _render_step(plan, step))
    return "\n".join(out) + "\n"
