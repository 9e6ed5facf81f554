from pathlib import Path
from typing import List, Optional

from modules.cipher.cipher_types import PgmKey
from modules.cipher.pgm_cipher import key_from_signatures
from modules.errors import KeyFormatError
from modules.group_core import GroupTable, format_group, parse_group_lines, validate_table
from modules.signatures import format_signature, parse_signature_lines, validate_log_signature


def format_key(k: PgmKey) -> str:
    seed = "none" if k.seed is None else str(k.seed)
    return format_group(k.group) + format_signature(k.alpha) + format_signature(k.beta) + f"seed={seed}\n"


def _table_labels(g: GroupTable, blocks: List[List[int]]) -> List[List[int]]:
    """Map block entries from the file's labels onto the validated table's labels."""
    if not g.relabeling:
        return blocks
    # the relabeling swaps two labels, so it is its own inverse
    return [[g.relabeling[x] if 0 <= x < g.n else x for x in block] for block in blocks]


def parse_key(text: str) -> PgmKey:
    lines = text.splitlines()
    raw, pos = parse_group_lines(lines)
    g = validate_table(raw)
    alpha_blocks, pos = parse_signature_lines(lines, pos)
    beta_blocks, pos = parse_signature_lines(lines, pos)
    if pos >= len(lines) or not lines[pos].startswith("seed="):
        raise KeyFormatError(f"line {pos + 1}: expected 'seed=<int>' or 'seed=none'")
    value = lines[pos][len("seed="):].strip()
    seed: Optional[int] = None
    if value != "none":
        try:
            seed = int(value)
        except ValueError as e:
            raise KeyFormatError(f"line {pos + 1}: bad seed {value!r}") from e
    if any(line.strip() for line in lines[pos + 1:]):
        raise KeyFormatError(f"trailing content after the seed at line {pos + 2}")
    alpha = validate_log_signature(g, _table_labels(g, alpha_blocks))
    beta = validate_log_signature(g, _table_labels(g, beta_blocks))
    return key_from_signatures(g, alpha, beta, seed)


def read_key_file(path: Path) -> PgmKey:
    return parse_key(Path(path).read_text(encoding="utf-8"))


def write_key_file(k: PgmKey, path: Path):
    Path(path).write_text(format_key(k), encoding="utf-8")
