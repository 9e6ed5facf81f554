import logging
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np

from modules.errors import GroupFormatError, MalformedTable, NoIdentity, NotAssociative, NotLatinSquare
from modules.group_core.group_types import GroupTable

logger = logging.getLogger(__name__)

RawTable = Union[np.ndarray, Sequence[Sequence[int]]]


def _as_square(raw: RawTable) -> np.ndarray:
    try:
        table = np.asarray(raw)
    except (TypeError, ValueError) as e:
        raise MalformedTable(f"table is not an integer array: {e}") from e
    if table.size and table.dtype.kind not in "iu":
        raise MalformedTable(f"table entries must be integers, got {table.dtype}")
    table = table.astype(np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise MalformedTable(f"table must be a nonempty square array, got shape {table.shape}")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise MalformedTable(f"entries must lie in 0..{n - 1}")
    return table


def _check_latin(table: np.ndarray):
    n = table.shape[0]
    expected = np.arange(n)
    bad_rows = np.flatnonzero(~np.all(np.sort(table, axis=1) == expected, axis=1))
    if bad_rows.size:
        raise NotLatinSquare(f"row {int(bad_rows[0])} repeats an entry")
    bad_cols = np.flatnonzero(~np.all(np.sort(table, axis=0) == expected[:, None], axis=0))
    if bad_cols.size:
        raise NotLatinSquare(f"column {int(bad_cols[0])} repeats an entry")


def _find_identity(table: np.ndarray) -> int:
    expected = np.arange(table.shape[0])
    left = np.all(table == expected[None, :], axis=1)
    right = np.all(table == expected[:, None], axis=0)
    candidates = np.flatnonzero(left & right)
    if not candidates.size:
        raise NoIdentity("no two-sided identity element")
    return int(candidates[0])


def _relabel(table: np.ndarray, e: int) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """Swap labels 0 and e so the identity sits at index 0."""
    n = table.shape[0]
    sigma = np.arange(n)
    sigma[0], sigma[e] = e, 0
    relabeled = sigma[table[np.ix_(sigma, sigma)]]
    return relabeled, tuple(int(x) for x in sigma)


def _check_associative(table: np.ndarray):
    n = table.shape[0]
    # left[i, j, k] = (ij)k, right[i, j, k] = i(jk)
    left = table[table]
    right = table[np.arange(n)[:, None, None], table[None, :, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        i, j, k = (int(v) for v in bad[0])
        raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})", triple=(i, j, k))


def validate_table(raw: RawTable, descriptor: str = "table") -> GroupTable:
    table = _as_square(raw)
    _check_latin(table)
    e = _find_identity(table)
    relabeling: Tuple[int, ...] = ()
    if e != 0:
        logger.info(f"identity found at index {e}; relabeling it to 0")
        table, relabeling = _relabel(table, e)
    if _find_identity(table) != 0:
        raise NoIdentity("identity is not at index 0 after relabeling")
    _check_associative(table)
    inv = np.argmax(table == 0, axis=1)
    return GroupTable(mul=np.array(table), inv=inv.astype(np.int64), descriptor=descriptor, relabeling=relabeling)


def format_group(g: GroupTable) -> str:
    lines = [f"n={g.n}"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in g.mul)
    return "\n".join(lines) + "\n"


def parse_group_lines(lines: List[str], pos: int = 0) -> Tuple[np.ndarray, int]:
    """Parse one group table starting at lines[pos]; returns the raw table and the next position."""
    if pos >= len(lines) or not lines[pos].startswith("n="):
        raise GroupFormatError(f"line {pos + 1}: expected 'n=<int>'")
    try:
        n = int(lines[pos][2:])
    except ValueError as e:
        raise GroupFormatError(f"line {pos + 1}: bad order {lines[pos]!r}") from e
    if n <= 0:
        raise GroupFormatError(f"line {pos + 1}: order must be positive")
    rows = []
    for offset in range(1, n + 1):
        if pos + offset >= len(lines):
            raise GroupFormatError(f"expected {n} table rows, file ended after {offset - 1}")
        try:
            row = [int(tok) for tok in lines[pos + offset].split()]
        except ValueError as e:
            raise GroupFormatError(f"line {pos + offset + 1}: non-integer entry") from e
        if len(row) != n:
            raise GroupFormatError(f"line {pos + offset + 1}: expected {n} entries, got {len(row)}")
        rows.append(row)
    return np.array(rows, dtype=np.int64), pos + n + 1


def parse_group(text: str) -> GroupTable:
    lines = text.splitlines()
    raw, pos = parse_group_lines(lines)
    if any(line.strip() for line in lines[pos:]):
        raise GroupFormatError(f"trailing content after the table at line {pos + 1}")
    return validate_table(raw)


def read_group_file(path: Path) -> GroupTable:
    return parse_group(Path(path).read_text(encoding="utf-8"))


def write_group_file(g: GroupTable, path: Path):
    Path(path).write_text(format_group(g), encoding="utf-8")
