# -*- coding: utf-8 -*-

""" Trace files, one run per line::

    # comment
    getcwd: 1 2 3 5 7
"""

import pathlib
from collections import namedtuple

from ppcov.data.utils import TraceError
from ppcov.data.utils import is_vertex_id

Trace = namedtuple('Trace', ['function', 'vertices', 'lineno'], defaults=(None, ))


def parse_traces(text: str) -> list:
    """Parse runs from trace file text.

    Returns
    -------
    r : list
        Trace per run, in file order.
    """
    r = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        name, sep, rest = line.partition(':')
        name = name.strip()
        if not sep or not name or ' ' in name:
            raise TraceError("expected '<function>: v1 v2 ...'", lineno)
        vertices = []
        for tok in rest.split():
            if not is_vertex_id(tok):
                raise TraceError(f"invalid vertex id '{tok}'", lineno)
            vertices.append(int(tok))
        r.append(Trace(name, tuple(vertices), lineno))
    return r


def read_traces(filepath) -> list:
    path = pathlib.Path(filepath).expanduser()
    with open(path, 'r', encoding='utf-8') as fp:
        return parse_traces(fp.read())
