# -*- coding: utf-8 -*-

import pathlib
import numpy as np
import toml

CDIR_PATH = pathlib.Path(__file__).parent

CONFIG = toml.load(CDIR_PATH.joinpath("defaults.toml"))

DEFAULT_PATH_LIMIT = CONFIG['enumerate']['path_limit']
DEFAULT_WORD_SIZE = CONFIG['instrument']['word_size']
WORD_SIZES = tuple(CONFIG['instrument']['word_sizes'])
COUNTS_MAGIC = CONFIG['counts']['magic']
COUNTS_VERSION = CONFIG['counts']['version']
COUNTS_WORD_DIGITS = CONFIG['counts']['word_digits']
ORACLE_MAX_VERTICES = CONFIG['oracle']['max_vertices']
DECISION_LABELS = tuple(CONFIG['report']['decision_labels'])
ABORTED_NOTICE = CONFIG['report']['aborted_notice']


class PpcovError(Exception):
    """Base class of all errors raised by ppcov.
    """
    pass


class CfgSyntaxError(PpcovError):
    """Malformed CFG text.

    Parameters
    ----------
    lineno : int
        1-based line number of the offending line.
    line : str
        The offending line.
    message : str
        What is wrong with it.
    """
    def __init__(self, lineno, line, message):
        self.lineno = lineno
        self.line = line
        super(CfgSyntaxError, self).__init__(
            f"line {lineno}: {message}: '{line.strip()}'")


class CfgValidationError(PpcovError):
    """Graph violates the control flow graph invariants.
    """
    def __init__(self, name, violations):
        self.violations = list(violations)
        super(CfgValidationError, self).__init__(
            f"invalid cfg '{name}': " + "; ".join(self.violations))


class PathLimitExceeded(PpcovError):
    def __init__(self, limit, name=None):
        self.limit = limit
        prefix = f"'{name}': " if name else ""
        super(PathLimitExceeded, self).__init__(f"{prefix}path limit {limit} exceeded")


class OracleSizeError(PpcovError):
    def __init__(self, size, limit):
        super(OracleSizeError, self).__init__(
            f"brute-force enumeration refuses {size} vertices (limit {limit})")


class TraceError(PpcovError):
    """Trace does not parse or does not follow the graph.
    """
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super(TraceError, self).__init__(message)


class ChecksumMismatch(PpcovError):
    def __init__(self, name, expected, found):
        self.expected = expected
        self.found = found
        super(ChecksumMismatch, self).__init__(
            f"'{name}': cfg checksum mismatch "
            f"(graph {expected:016x}, counts {found:016x})")


class MergeError(PpcovError):
    def __init__(self, field, name):
        self.field = field
        if field == 'checksum':
            message = f"'{name}': cfg checksum mismatch"
        else:
            message = f"'{name}': cannot merge, {field} differs"
        super(MergeError, self).__init__(message)


class CountsFormatError(PpcovError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super(CountsFormatError, self).__init__(f"malformed counts file, {message}")


def is_vertex_id(tok: str) -> bool:
    """Test if *tok* spells a vertex ID, ASCII decimal digits only.
    """
    return tok.isascii() and tok.isdigit()


def bit_count(value: int) -> int:
    return bin(value).count('1')


def bits_of(value: int) -> list:
    """Return the 1-based path indices set in *value*, ascending.
    """
    r = []
    n = 1
    while value:
        if value & 1:
            r.append(n)
        value >>= 1
        n += 1
    return r


def mask_of(indices) -> int:
    """Bitset with bit ``n - 1`` set for every 1-based path index *n*.
    """
    r = 0
    for n in indices:
        r |= 1 << (n - 1)
    return r


def format_mask(value: int, width: int) -> str:
    """Render *value* as binary text, most significant bit first.
    """
    if width == 0:
        return ''
    return format(value, f'0{width}b')


def bin_count(count: int, word_size: int) -> int:
    """Number of *word_size* bins needed for *count* paths.
    """
    return -(-count // word_size)


def to_bins(value: int, word_size: int, nbins: int) -> np.ndarray:
    """Split *value* into *nbins* words of *word_size* bits, bin 0 lowest.
    """
    word_mask = (1 << word_size) - 1
    return np.array([(value >> (j * word_size)) & word_mask for j in range(nbins)],
                    dtype=np.uint64)


def from_bins(bins: np.ndarray, word_size: int) -> int:
    r = 0
    for j, v in enumerate(bins):
        r |= int(v) << (j * word_size)
    return r


def fnv1a_64(data: bytes) -> int:
    """FNV-1a, 64-bit.
    """
    h = 0xcbf29ce484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001b3) & 0xffffffffffffffff
    return h
