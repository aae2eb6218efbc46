# -*- coding: utf-8 -*-

""" Counts files: the covered-path bitsets of many functions.

The file stores no paths, they are recomputed from the graph, the checksum
ties each record to the graph it was recorded against::

    ppcov-counts 1
    function getcwd 9f6c0d2a51e3b7c4 8 0 2
    00000000000000f5
"""

import logging
import os
import pathlib
import tempfile

from ppcov.data.utils import COUNTS_MAGIC
from ppcov.data.utils import COUNTS_VERSION
from ppcov.data.utils import COUNTS_WORD_DIGITS
from ppcov.data.utils import CountsFormatError
from .state import CoverageState

_LOGGER = logging.getLogger(__name__)

_WORD_BITS = COUNTS_WORD_DIGITS * 4
_WORD_MASK = (1 << _WORD_BITS) - 1


def dumps_counts(states) -> str:
    """Serialize *states* in the given order.
    """
    out = [f"{COUNTS_MAGIC} {COUNTS_VERSION}"]
    seen = set()
    for s in states:
        if s.name in seen:
            raise CountsFormatError(f"duplicate function record '{s.name}'")
        seen.add(s.name)
        out.append(f"function {s.name} {s.checksum:016x} {s.count} {int(s.aborted)} {s.runs}")
        covered = s.covered
        for _ in range(-(-s.count // _WORD_BITS)):
            out.append(f"{covered & _WORD_MASK:0{COUNTS_WORD_DIGITS}x}")
            covered >>= _WORD_BITS
    return "\n".join(out) + "\n"


def _int(tok, lineno, what, base=10):
    try:
        v = int(tok, base)
    except ValueError:
        raise CountsFormatError(f"invalid {what} '{tok}'", lineno)
    if v < 0:
        raise CountsFormatError(f"invalid {what} '{tok}'", lineno)
    return v


def loads_counts(text: str) -> list:
    """Parse counts file text.

    Returns
    -------
    r : list
        CoverageState per record, in file order.

    Raises
    ------
    CountsFormatError
        On a bad header, malformed or truncated records, or a function
        recorded twice.
    """
    lines = text.splitlines()
    if not lines or lines[0].split() != [COUNTS_MAGIC, str(COUNTS_VERSION)]:
        raise CountsFormatError(f"expected header '{COUNTS_MAGIC} {COUNTS_VERSION}'", 1)
    r = []
    seen = set()
    i = 1
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        lineno = i + 1
        tokens = lines[i].split()
        if len(tokens) != 6 or tokens[0] != 'function':
            raise CountsFormatError("expected 'function <name> <checksum> <count> <aborted> <runs>'",
                                    lineno)
        name = tokens[1]
        if name in seen:
            raise CountsFormatError(f"duplicate function record '{name}'", lineno)
        seen.add(name)
        if len(tokens[2]) != 16:
            raise CountsFormatError(f"invalid checksum '{tokens[2]}'", lineno)
        checksum = _int(tokens[2], lineno, 'checksum', 16)
        count = _int(tokens[3], lineno, 'path count')
        if tokens[4] not in ('0', '1'):
            raise CountsFormatError(f"invalid aborted flag '{tokens[4]}'", lineno)
        aborted = tokens[4] == '1'
        runs = _int(tokens[5], lineno, 'run count')
        if aborted and count:
            raise CountsFormatError(f"aborted function '{name}' with {count} paths", lineno)
        nwords = -(-count // _WORD_BITS)
        covered = 0
        for j in range(nwords):
            i += 1
            if i >= len(lines):
                raise CountsFormatError(f"'{name}' truncated, {nwords - j} word(s) missing", i + 1)
            word = lines[i].strip()
            if len(word) != COUNTS_WORD_DIGITS:
                raise CountsFormatError(f"invalid word '{word}'", i + 1)
            covered |= _int(word, i + 1, 'word', 16) << (j * _WORD_BITS)
        if covered >> count:
            raise CountsFormatError(f"'{name}' has bits beyond its {count} paths", lineno)
        r.append(CoverageState(name, checksum, count, aborted=aborted,
                               covered=covered, runs=runs))
        i += 1
    return r


def save_counts(states, destination) -> None:
    """Write *states* to *destination*, replacing it atomically.

    The file is written next to *destination* and renamed over it, a reader
    sees either the old or the new file. Concurrent writers are not merged,
    the last rename wins.
    """
    states = list(states)
    path = pathlib.Path(destination).expanduser()
    data = dumps_counts(states)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix='.tmp')
    try:
        with os.fdopen(fd, 'w') as fp:
            fp.write(data)
        os.replace(tmp, path)
    except BaseException:
        pathlib.Path(tmp).unlink(missing_ok=True)
        raise
    _LOGGER.info("Saved %d function record(s) to %s", len(states), path)


def load_counts(source) -> list:
    path = pathlib.Path(source).expanduser()
    with open(path, 'r') as fp:
        return loads_counts(fp.read())
