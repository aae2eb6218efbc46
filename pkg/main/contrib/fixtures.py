# -*- coding: utf-8 -*-

""" Bundled example graphs and graph generators.
"""

import pathlib

from ppcov.graph import ControlFlowGraph
from ppcov.graph import read_cfg

CDIR_PATH = pathlib.Path(__file__).parent
FIXTURES_PATH = CDIR_PATH.joinpath("fixtures")


def fixture_names() -> list:
    """Names of the bundled graphs, sorted.
    """
    return sorted(p.stem for p in FIXTURES_PATH.glob("*.cfg"))


def fixture_path(name: str) -> pathlib.Path:
    path = FIXTURES_PATH.joinpath(f"{name}.cfg")
    if not path.is_file():
        raise FileNotFoundError(f"no bundled graph '{name}', "
                                f"choose from {', '.join(fixture_names())}")
    return path


def load_fixture(name: str) -> ControlFlowGraph:
    """Parse and validate the bundled graph *name*.

    Parameters
    ----------
    name : str
        One of :func:`fixture_names`, e.g. 'getcwd'.

    Returns
    -------
    r : ControlFlowGraph
        The graph, checked for well-formedness.
    """
    return read_cfg(fixture_path(name)).check()


def diamond_chain(n: int, name: str = None) -> ControlFlowGraph:
    """Chain of *n* sequential if-then-else diamonds.

    Vertex 1 is the entry and falls into the first decision, decision
    ``d = 2 + 3 * i`` branches to ``d + 1`` (true) and ``d + 2`` (false),
    both join at ``d + 3``, which is the next decision or the exit. The
    chain has ``2 ** n`` prime paths, each running from the entry to the
    exit.

    Parameters
    ----------
    n : int
        Number of diamonds, non-negative.
    name : str
        Function name, 'diamond<n>' by default.
    """
    if n < 0:
        raise ValueError(f"diamond count must be non-negative, got {n}")
    edges = [(1, 2)]
    for i in range(n):
        d = 2 + 3 * i
        edges += [(d, d + 1), (d, d + 2), (d + 1, d + 3), (d + 2, d + 3)]
    labels = {}
    for i in range(n):
        d = 2 + 3 * i
        labels[(d, d + 1)] = 'true'
        labels[(d, d + 2)] = 'false'
    vertices = range(1, 3 * n + 3)
    return ControlFlowGraph(name or f"diamond{n}", vertices, edges, 1,
                            edge_labels=labels)


def decide(g: ControlFlowGraph, values: dict) -> tuple:
    """Run of *g* that follows the labeled edges as *values* decide.

    Starting at the entry, a vertex with labeled out-edges takes the edge
    labeled 'true' or 'false' after ``values[v]``, a vertex with a single
    successor falls through, an exit ends the run.

    Examples
    --------
    >>> g = load_fixture('bdd4')
    >>> decide(g, {1: False, 2: True, 3: True, 4: False})
    (1, 2, 3, 5)
    """
    r = [g.entry]
    v = g.entry
    while g.successors(v):
        succ = g.successors(v)
        if len(succ) == 1:
            v = succ[0]
        else:
            want = 'true' if values[v] else 'false'
            picked = [s for s in succ if g.label_of(v, s) == want]
            if len(picked) != 1:
                raise ValueError(f"'{g.name}': vertex {v} has no single '{want}' edge")
            v = picked[0]
        r.append(v)
        if len(r) > len(g.vertices) * len(g.vertices) + 1:
            raise ValueError(f"'{g.name}': decisions do not reach an exit")
    return tuple(r)
