# -*- coding: utf-8 -*-

""" Human and machine readable prime path coverage reports.

Uncovered paths are printed as the blocks, with their source lines, in the
order they must run, the branch taken out of a block is annotated on it::

    path 1 not covered:
    BB 1:            7: int size = 100;
    BB 3:(false)    12: if (val != 0)
"""

from collections import namedtuple

import networkx as nx
import simplejson as json

from ppcov.coverage import coverage_summary
from ppcov.data.utils import ABORTED_NOTICE

ReportLine = namedtuple('ReportLine', ['vertex', 'decision', 'lines'])


def path_directions(g, path) -> list:
    """One ReportLine per vertex of *path*, in path order.

    Parameters
    ----------
    g : ControlFlowGraph
        Graph of *path*.
    path : sequence
        Vertex IDs, consecutive pairs must be edges of *g*.

    Returns
    -------
    r : list
        ReportLine with the decision kind of the edge to the next vertex,
        if labeled, and the source lines of the vertex.
    """
    path = tuple(path)
    if not path or not g.is_walk(path):
        raise ValueError(f"{list(path)} is not a path of '{g.name}'")
    r = []
    for i, v in enumerate(path):
        decision = g.label_of(v, path[i + 1]) if i + 1 < len(path) else None
        r.append(ReportLine(v, decision, g.lines_of(v)))
    return r


def format_directions(lines) -> list:
    out = []
    for rl in lines:
        head = f"BB {rl.vertex}:"
        mark = f"({rl.decision})" if rl.decision else ""
        if not rl.lines:
            out.append(f"{head}{mark}".rstrip())
            continue
        # the decision is taken at the last line of the block
        for i, (lineno, text) in enumerate(rl.lines):
            m = mark if i == len(rl.lines) - 1 else ""
            out.append(f"{head}{m:<8}{lineno:>5}: {text}")
    return out


def suggest_run(g, path) -> tuple:
    """Entry to exit run of *g* that contains *path*.

    The shortest walk from the entry to the first vertex of *path* and the
    shortest walk from its last vertex to an exit, ties broken by exit ID.
    """
    path = tuple(path)
    prefix = nx.shortest_path(g.graph, g.entry, path[0])
    walks = nx.single_source_shortest_path(g.graph, path[-1])
    target = min((len(walks[x]), x) for x in g.exits if x in walks)[1]
    return tuple(prefix[:-1]) + path + tuple(walks[target][1:])


def _header(g, paths, state):
    return f"function {g.name}: " + (
        ABORTED_NOTICE if state.aborted else f"covered {coverage_summary(state, paths)}")


def text_report(g, paths, state, suggest=False) -> str:
    """Coverage report of one function for people.

    Parameters
    ----------
    g : ControlFlowGraph
        Graph of the function.
    paths : PrimePathSet
        Prime paths of *g*.
    state : CoverageState
        Coverage of *g*.
    suggest : bool
        If set, each uncovered path also lists an entry to exit run that
        covers it.
    """
    out = [_header(g, paths, state)]
    if not state.aborted:
        for n, p in enumerate(paths.paths, 1):
            if state.is_covered(n):
                continue
            out.append(f"path {n} not covered:")
            out.extend(format_directions(path_directions(g, p)))
            if suggest:
                out.append("suggested run: " + " ".join(map(str, suggest_run(g, p))))
    return "\n".join(out) + "\n"


def machine_report(g, paths, state) -> str:
    """Condensed line-oriented report, one line per path.
    """
    if state.aborted:
        return f"{g.name}:summary:aborted\n"
    out = [f"{g.name}:summary:{coverage_summary(state, paths)}"]
    for n, p in enumerate(paths.paths, 1):
        status = 'covered' if state.is_covered(n) else 'uncovered'
        out.append(f"{g.name}:path:{n}:{status}:{','.join(map(str, p))}")
    return "\n".join(out) + "\n"


def report_dict(g, paths, state) -> dict:
    summary = coverage_summary(state, paths)
    r = {
        'function': g.name,
        'aborted': state.aborted,
        'covered': summary.covered,
        'total': summary.total,
        'runs': state.runs,
        'paths': [],
    }
    if not state.aborted:
        r['paths'] = [{'index': n, 'covered': state.is_covered(n), 'vertices': list(p)}
                      for n, p in enumerate(paths.paths, 1)]
    return r


def json_report(g, paths, state) -> str:
    """The machine report as JSON.
    """
    return json.dumps(report_dict(g, paths, state), sort_keys=True, indent=2) + "\n"
