# -*- coding: utf-8 -*-

""" The ``ppcov`` command.

Exit status is 0 on success, 1 on bad input and 2 when prime path
enumeration gives up at the path limit::

    ppcov paths getcwd.cfg
    ppcov run getcwd.cfg runs.trace --counts getcwd.pcov
    ppcov report getcwd.cfg --counts getcwd.pcov --suggest
"""

import argparse
import logging
import pathlib
import sys

import simplejson as json

from ppcov.coverage import coverage_summary
from ppcov.coverage import load_counts
from ppcov.coverage import merge
from ppcov.coverage import new_state
from ppcov.coverage import read_traces
from ppcov.coverage import replay_run
from ppcov.coverage import save_counts
from ppcov.data.utils import ABORTED_NOTICE
from ppcov.data.utils import DEFAULT_PATH_LIMIT
from ppcov.data.utils import DEFAULT_WORD_SIZE
from ppcov.data.utils import WORD_SIZES
from ppcov.data.utils import ChecksumMismatch
from ppcov.data.utils import PathLimitExceeded
from ppcov.data.utils import PpcovError
from ppcov.graph import canonical_checksum
from ppcov.graph import component_diagnostics
from ppcov.graph import read_cfg
from ppcov.instrument import build_plan
from ppcov.instrument import index_paths
from ppcov.instrument import instrumentation_table
from ppcov.instrument import render_pseudo_source
from ppcov.paths import PrimePathSet
from ppcov.paths import prime_paths
from ppcov.report import json_report
from ppcov.report import machine_report
from ppcov.report import text_report

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LIMIT = 2


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors, status 2 is taken by the path limit
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class _Aborted(Exception):
    def __init__(self, g, paths):
        self.g = g
        self.paths = paths


def _load_graph(filepath):
    return read_cfg(filepath).check()


def _enumerate(g, limit):
    paths = prime_paths(g, limit)
    if paths.limit_exceeded:
        raise _Aborted(g, paths)
    return paths


def _table(g, paths, word_size):
    return instrumentation_table(g, index_paths(paths), word_size)


def _find(states, name):
    for s in states:
        if s.name == name:
            return s
    return None


def cmd_paths(args):
    g = _load_graph(args.cfg)
    paths = _enumerate(g, args.path_limit)
    if args.format == 'machine':
        out = [f"{g.name}:path:{n}:{','.join(map(str, p))}" for n, p in enumerate(paths, 1)]
        text = "".join(f"{i}\n" for i in out)
    elif args.format == 'json':
        text = json.dumps({'function': g.name, 'aborted': False,
                           'paths': [list(p) for p in paths]},
                          sort_keys=True, indent=2) + "\n"
    else:
        text = "".join(" ".join(map(str, p)) + "\n" for p in paths)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_tables(args):
    g = _load_graph(args.cfg)
    paths = _enumerate(g, args.path_limit)
    table = _table(g, paths, args.word_size)
    out = [f"function {g.name}: {table.count} prime paths, "
           f"{table.bins} x {table.word_size}-bit bins"]
    for n, p in enumerate(paths, 1):
        out.append(f"P{n} = [{' '.join(map(str, p))}]")
    if table.count:
        out.extend(["", table.rdi_frame().to_string(), "", table.mask_frame().to_string()])
        edges = table.edge_frame()
        if len(edges):
            out.extend(["", edges.to_string()])
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_plan(args):
    g = _load_graph(args.cfg)
    paths = _enumerate(g, args.path_limit)
    plan = build_plan(g, _table(g, paths, args.word_size))
    sys.stdout.write(render_pseudo_source(plan, g))
    return EXIT_OK


def cmd_run(args):
    g = _load_graph(args.cfg)
    paths = prime_paths(g, args.path_limit)
    counts = pathlib.Path(args.counts)
    states = load_counts(counts) if counts.exists() else []
    previous = _find(states, g.name)
    checksum = canonical_checksum(g)
    if previous is not None and previous.checksum != checksum:
        raise ChecksumMismatch(g.name, checksum, previous.checksum)
    plan = None
    if not paths.limit_exceeded:
        plan = build_plan(g, _table(g, paths, args.word_size))
    state = new_state(g, paths)
    for filepath in args.traces:
        for trace in read_traces(filepath):
            if trace.function != g.name:
                _LOGGER.warning("%s:%d: skipped run of '%s', graph is '%s'",
                                filepath, trace.lineno, trace.function, g.name)
                continue
            state = replay_run(state, plan, g, trace)
    if previous is None:
        states.append(state)
    else:
        state = merge(previous, state)
        states = [state if s.name == g.name else s for s in states]
    save_counts(states, counts)
    print(f"{g.name}: {coverage_summary(state)}")
    return EXIT_LIMIT if state.aborted else EXIT_OK


def cmd_report(args):
    g = _load_graph(args.cfg)
    state = _find(load_counts(args.counts), g.name)
    if state is None:
        raise PpcovError(f"'{g.name}': no record in {args.counts}")
    checksum = canonical_checksum(g)
    if state.checksum != checksum:
        raise ChecksumMismatch(g.name, checksum, state.checksum)
    if state.aborted:
        # aborted records are never enumerated again
        paths = PrimePathSet((), True, args.path_limit, 0)
    else:
        paths = prime_paths(g, args.path_limit)
        if paths.limit_exceeded:
            raise PathLimitExceeded(args.path_limit, g.name)
        if len(paths) != state.count:
            raise PpcovError(f"'{g.name}': counts record has {state.count} paths, "
                             f"the graph has {len(paths)}")
    fmt = 'machine' if args.machine else args.format
    if fmt == 'machine':
        text = machine_report(g, paths, state)
    elif fmt == 'json':
        text = json_report(g, paths, state)
    else:
        text = text_report(g, paths, state, suggest=args.suggest)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_merge(args):
    left = load_counts(args.a)
    right = load_counts(args.b)
    merged = []
    for s in left:
        other = _find(right, s.name)
        merged.append(s if other is None else merge(s, other))
    merged.extend(s for s in right if _find(left, s.name) is None)
    save_counts(merged, args.output)
    for s in merged:
        print(f"{s.name}: {coverage_summary(s)}")
    return EXIT_OK


def _path_limit(text):
    try:
        limit = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid path limit '{text}'")
    if limit < 1:
        raise argparse.ArgumentTypeError(f"path limit must be at least 1, got {limit}")
    return limit


def _add_limit(p):
    p.add_argument('--path-limit', type=_path_limit, default=DEFAULT_PATH_LIMIT,
                   help=f"give up enumeration beyond this many paths (default {DEFAULT_PATH_LIMIT})")


def _add_word_size(p):
    p.add_argument('--word-size', type=int, default=DEFAULT_WORD_SIZE, choices=WORD_SIZES,
                   help=f"bits per bitset bin (default {DEFAULT_WORD_SIZE})")


def make_parser():
    parser = _Parser(prog='ppcov', description="Prime path coverage of control flow graphs.")
    parser.add_argument('-v', '--verbose', action='store_true', help="log debug messages")
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('paths', help="list the prime paths of a graph")
    p.add_argument('cfg', help="CFG file")
    _add_limit(p)
    p.add_argument('--format', choices=('text', 'machine', 'json'), default='text')
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser('tables', help="dump the record, discard and initialize tables")
    p.add_argument('cfg', help="CFG file")
    _add_limit(p)
    _add_word_size(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser('plan', help="render the instrumentation as pseudo source")
    p.add_argument('cfg', help="CFG file")
    _add_limit(p)
    _add_word_size(p)
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser('run', help="replay runs into a counts file")
    p.add_argument('cfg', help="CFG file")
    p.add_argument('traces', nargs='+', help="trace files")
    p.add_argument('--counts', required=True, help="counts file, created if missing")
    _add_limit(p)
    _add_word_size(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser('report', help="report prime path coverage")
    p.add_argument('cfg', help="CFG file")
    p.add_argument('--counts', required=True, help="counts file")
    _add_limit(p)
    p.add_argument('--format', choices=('text', 'machine', 'json'), default='text')
    p.add_argument('--machine', action='store_true', help="same as --format machine")
    p.add_argument('--suggest', action='store_true',
                   help="list a run that covers each uncovered path")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser('merge', help="merge two counts files")
    p.add_argument('a', help="counts file")
    p.add_argument('b', help="counts file")
    p.add_argument('-o', '--output', required=True, help="merged counts file")
    p.set_defaults(func=cmd_merge)
    return parser


def main(argv=None) -> int:
    """Run the ``ppcov`` command with *argv*, return the exit status.
    """
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(name)s: %(message)s")
    try:
        return args.func(args)
    except _Aborted as e:
        report = component_diagnostics(e.g)
        _LOGGER.info("'%s': largest strongly connected component has %d vertices",
                     e.g.name, report.largest)
        if getattr(args, 'format', 'text') == 'json':
            print(json.dumps({'function': e.g.name, 'aborted': True, 'paths': []},
                             sort_keys=True, indent=2))
        else:
            print(f"{e.g.name}: {ABORTED_NOTICE}")
        return EXIT_LIMIT
    except PathLimitExceeded as e:
        print(f"ppcov: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (PpcovError, OSError) as e:
        print(f"ppcov: {e}", file=sys.stderr)
        return EXIT_INPUT
