# -*- coding: utf-8 -*-

""" Control flow graphs: text format parser, well-formedness checks,
strongly connected component diagnostics and the checksum that binds a
counts file to the graph it was recorded against.

The text format is one directive per line, ``#`` starts a comment::

    graph getcwd
    vertex 1
      line 7 int size = 100;
    vertex 2
    edge 1 2
    edge 3 5 true
    entry 1
"""

import logging
import pathlib
from collections import namedtuple

import networkx as nx

from ppcov.data.utils import CfgSyntaxError
from ppcov.data.utils import CfgValidationError
from ppcov.data.utils import DECISION_LABELS
from ppcov.data.utils import fnv1a_64
from ppcov.data.utils import is_vertex_id

_LOGGER = logging.getLogger(__name__)

SourceLine = namedtuple('SourceLine', ['lineno', 'text'])

ComponentReport = namedtuple('ComponentReport',
                             ['largest', 'singletons', 'isomorphic'])


class ControlFlowGraph(object):
    """Immutable control flow graph of one function.

    Parameters
    ----------
    name : str
        Function identifier.
    vertices : iterable
        Vertex IDs, non-negative integers.
    edges : iterable
        ``(src, dst)`` pairs over *vertices*.
    entry : int
        Entry vertex.

    Keyword Arguments
    -----------------
    lines : dict
        Vertex to list of ``(lineno, text)`` source lines.
    edge_labels : dict
        Edge to ``'true'`` or ``'false'``.
    """
    def __init__(self, name, vertices, edges, entry, **kws):
        if not name:
            raise CfgValidationError('<unnamed>', ["empty function name"])
        self._name = name
        # sorted insertion keeps networkx traversals independent of
        # declaration order
        g = nx.DiGraph()
        for v in sorted(vertices):
            if not isinstance(v, int) or v < 0:
                raise CfgValidationError(name, [f"invalid vertex id {v!r}"])
            g.add_node(v)
        for src, dst in sorted(edges):
            for v in (src, dst):
                if v not in g:
                    raise CfgValidationError(
                        name, [f"edge {src}->{dst} references unknown vertex {v}"])
            g.add_edge(src, dst)
        if entry not in g:
            raise CfgValidationError(name, [f"entry {entry} is not a vertex"])
        self._graph = nx.freeze(g)
        self._entry = entry
        self._lines = {v: tuple(SourceLine(*i) for i in l)
                       for v, l in kws.get('lines', {}).items()}
        self._edge_labels = dict(kws.get('edge_labels', {}))
        self._vertices = tuple(sorted(g.nodes))
        self._edges = tuple(sorted(g.edges))
        self._succ = {v: tuple(sorted(g.successors(v))) for v in self._vertices}
        self._pred = {v: tuple(sorted(g.predecessors(v))) for v in self._vertices}

    @property
    def name(self):
        """str : Function identifier.
        """
        return self._name

    @property
    def entry(self):
        """int : Entry vertex.
        """
        return self._entry

    @property
    def vertices(self):
        """tuple : Vertex IDs, ascending.
        """
        return self._vertices

    @property
    def edges(self):
        """tuple : ``(src, dst)`` pairs, ascending.
        """
        return self._edges

    @property
    def exits(self):
        """tuple : Vertices without outgoing edges, ascending.
        """
        return tuple(v for v in self._vertices if not self._succ[v])

    @property
    def graph(self):
        """DiGraph : Frozen networkx view of the graph.
        """
        return self._graph

    def successors(self, v):
        return self._succ[v]

    def predecessors(self, v):
        return self._pred[v]

    def has_edge(self, src, dst):
        return self._graph.has_edge(src, dst)

    def lines_of(self, v):
        """Source lines attached to vertex *v*, may be empty.
        """
        return self._lines.get(v, ())

    def label_of(self, src, dst):
        """Decision kind of edge ``src -> dst``, or None.
        """
        return self._edge_labels.get((src, dst))

    @property
    def has_metadata(self):
        return bool(self._lines) or bool(self._edge_labels)

    def is_walk(self, seq):
        """Test if consecutive pairs of *seq* are all edges.
        """
        return all(self.has_edge(a, b) for a, b in zip(seq, seq[1:]))

    def check(self):
        """Raise CfgValidationError unless the graph is well formed.
        """
        violations = validate(self)
        if violations:
            raise CfgValidationError(self._name, violations)
        return self

    def to_text(self):
        """Render the graph in the CFG text format.
        """
        out = [f"graph {self._name}"]
        for v in self._vertices:
            out.append(f"vertex {v}")
            for lineno, text in self.lines_of(v):
                out.append(f"  line {lineno} {text}".rstrip())
        for src, dst in self._edges:
            label = self.label_of(src, dst)
            out.append(f"edge {src} {dst}" + (f" {label}" if label else ""))
        out.append(f"entry {self._entry}")
        return "\n".join(out) + "\n"

    def __str__(self):
        return f"CFG '{self._name}': [{len(self._vertices)}] vertices, [{len(self._edges)}] edges, entry {self._entry}."

    __repr__ = __str__


def _parse_id(tok, lineno, raw):
    if not is_vertex_id(tok):
        raise CfgSyntaxError(lineno, raw, f"invalid vertex id '{tok}'")
    return int(tok)


def parse_cfg_text(text: str) -> ControlFlowGraph:
    """Parse one graph from the CFG text format.

    Parameters
    ----------
    text : str
        Graph description.

    Returns
    -------
    r : ControlFlowGraph
        The parsed graph, not yet validated.

    Raises
    ------
    CfgSyntaxError
        On malformed directives, unknown or duplicate vertices, duplicate
        edges or a missing ``graph``/``entry`` directive.
    """
    name = None
    vertices = []
    seen = set()
    edges = []
    edge_set = set()
    labels = {}
    lines = {}
    entry = None
    entry_at = None
    current = None
    pending = []  # edges and entry resolve after all vertices are declared
    last_lineno = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_lineno = lineno
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        keyword = stripped.split(None, 1)[0]
        if keyword == 'line':
            # source text keeps any '#'
            parts = stripped.split(None, 2)
            if current is None:
                raise CfgSyntaxError(lineno, raw, "'line' without a preceding vertex")
            if len(parts) < 2 or not is_vertex_id(parts[1]):
                raise CfgSyntaxError(lineno, raw, "expected 'line <n> <text>'")
            lines.setdefault(current, []).append(
                (int(parts[1]), parts[2] if len(parts) > 2 else ''))
            continue
        tokens = stripped.split('#', 1)[0].split()
        if name is None and keyword != 'graph':
            raise CfgSyntaxError(lineno, raw, "first directive must be 'graph <name>'")
        if keyword == 'graph':
            if name is not None:
                raise CfgSyntaxError(lineno, raw, "duplicate 'graph' directive")
            if len(tokens) != 2:
                raise CfgSyntaxError(lineno, raw, "expected 'graph <name>'")
            name = tokens[1]
        elif keyword == 'vertex':
            if len(tokens) != 2:
                raise CfgSyntaxError(lineno, raw, "expected 'vertex <id>'")
            v = _parse_id(tokens[1], lineno, raw)
            if v in seen:
                raise CfgSyntaxError(lineno, raw, f"duplicate vertex {v}")
            seen.add(v)
            vertices.append(v)
            current = v
        elif keyword == 'edge':
            if len(tokens) not in (3, 4):
                raise CfgSyntaxError(lineno, raw, "expected 'edge <src> <dst> [true|false]'")
            e = (_parse_id(tokens[1], lineno, raw), _parse_id(tokens[2], lineno, raw))
            if e in edge_set:
                raise CfgSyntaxError(lineno, raw, f"duplicate edge {e[0]}->{e[1]}")
            edge_set.add(e)
            if len(tokens) == 4:
                if tokens[3] not in DECISION_LABELS:
                    raise CfgSyntaxError(lineno, raw, f"invalid edge label '{tokens[3]}'")
                labels[e] = tokens[3]
            edges.append(e)
            pending.append((lineno, raw, e))
            current = None
        elif keyword == 'entry':
            if len(tokens) != 2:
                raise CfgSyntaxError(lineno, raw, "expected 'entry <id>'")
            if entry is not None:
                raise CfgSyntaxError(lineno, raw, "duplicate 'entry' directive")
            entry = _parse_id(tokens[1], lineno, raw)
            entry_at = (lineno, raw)
            current = None
        else:
            raise CfgSyntaxError(lineno, raw, f"unknown directive '{keyword}'")
    if name is None:
        raise CfgSyntaxError(last_lineno, '', "missing 'graph' directive")
    if entry is None:
        raise CfgSyntaxError(last_lineno, '', "missing 'entry' directive")
    for lineno, raw, (src, dst) in pending:
        for v in (src, dst):
            if v not in seen:
                raise CfgSyntaxError(lineno, raw, f"edge references unknown vertex {v}")
    if entry not in seen:
        raise CfgSyntaxError(entry_at[0], entry_at[1], f"unknown entry vertex {entry}")
    g = ControlFlowGraph(name, vertices, edges, entry, lines=lines, edge_labels=labels)
    _LOGGER.debug("Parsed %s", g)
    return g


def read_cfg(filepath) -> ControlFlowGraph:
    """Parse the CFG file at *filepath*.
    """
    path = pathlib.Path(filepath).expanduser()
    with open(path, 'r', encoding='utf-8') as fp:
        return parse_cfg_text(fp.read())


def validate(g: ControlFlowGraph) -> list:
    """Check the well-formedness conditions of *g*.

    Returns
    -------
    r : list
        Violations as text, empty when the graph is well formed.
    """
    r = []
    for p in g.predecessors(g.entry):
        r.append(f"entry has incoming edge {p} -> {g.entry}")
    exits = g.exits
    if not exits:
        r.append("no exit vertex")
    reachable = nx.descendants(g.graph, g.entry) | {g.entry}
    for v in g.vertices:
        if v not in reachable:
            r.append(f"vertex {v} is unreachable from entry {g.entry}")
    coreachable = set(exits)
    for x in exits:
        coreachable |= nx.ancestors(g.graph, x)
    for v in g.vertices:
        if v not in coreachable:
            r.append(f"no exit is reachable from vertex {v}")
    if r:
        _LOGGER.debug("'%s' has %d violation(s)", g.name, len(r))
    return r


class SccPartition(object):
    """Strongly connected components of a graph.

    Components are ordered by their smallest vertex.
    """
    def __init__(self, components, component_of, condensation_edges):
        self.components = components
        self.component_of = component_of
        self.condensation_edges = condensation_edges

    def __len__(self):
        return len(self.components)

    def __repr__(self):
        sizes = [len(c) for c in self.components]
        return f"SccPartition: [{len(sizes)}] components, sizes {sizes}"


def scc_partition(g: ControlFlowGraph) -> SccPartition:
    """Maximal strongly connected components of *g* and the condensation.
    """
    components = sorted((frozenset(c) for c in nx.strongly_connected_components(g.graph)),
                        key=min)
    cg = nx.condensation(g.graph, scc=components)
    component_of = dict(cg.graph['mapping'])
    return SccPartition(components, component_of, tuple(sorted(cg.edges)))


def component_diagnostics(g: ControlFlowGraph) -> ComponentReport:
    """Summarise the component structure of *g*.

    ``isomorphic`` is set when every component is a single vertex, the case
    where component-wise enumeration gains nothing.
    """
    sizes = [len(c) for c in scc_partition(g).components]
    singletons = sum(1 for i in sizes if i == 1)
    return ComponentReport(max(sizes), singletons, singletons == len(sizes))


def canonical_checksum(g: ControlFlowGraph) -> int:
    """64-bit FNV-1a over name, sorted vertices and sorted edges.

    Source lines and edge labels are not part of the checksum.
    """
    items = [g.name]
    items.extend(str(v) for v in g.vertices)
    items.extend(f"{src} {dst}" for src, dst in g.edges)
    return fnv1a_64(("\n".join(items) + "\n").encode('utf-8'))
