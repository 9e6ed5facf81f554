from pathlib import Path
from typing import List, Tuple

from modules.errors import SignatureFormatError
from modules.group_core import GroupTable
from modules.signatures.breve import validate_log_signature
from modules.signatures.signature_types import LogSignature


def format_signature(sig: LogSignature) -> str:
    lines = [f"s={sig.s}", "radices=" + " ".join(str(r) for r in sig.radices)]
    lines.extend(" ".join(str(v) for v in block) for block in sig.blocks)
    return "\n".join(lines) + "\n"


def _int_list(text: str, lineno: int) -> List[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError as e:
        raise SignatureFormatError(f"line {lineno}: non-integer entry in {text!r}") from e


def parse_signature_lines(lines: List[str], pos: int = 0) -> Tuple[List[List[int]], int]:
    """Parse one signature starting at lines[pos]; returns its blocks and the next position."""
    if pos + 1 >= len(lines) or not lines[pos].startswith("s=") or not lines[pos + 1].startswith("radices="):
        raise SignatureFormatError(f"line {pos + 1}: expected 's=<int>' then 'radices=...'")
    s_values = _int_list(lines[pos][2:], pos + 1)
    radices = _int_list(lines[pos + 1][len("radices="):], pos + 2)
    if len(s_values) != 1 or s_values[0] < 1 or len(radices) != s_values[0]:
        raise SignatureFormatError(f"line {pos + 2}: radices must list exactly s positive values")
    s = s_values[0]
    blocks = []
    for i, r in enumerate(radices):
        lineno = pos + 2 + i
        if lineno >= len(lines):
            raise SignatureFormatError(f"expected {s} blocks, file ended after {i}")
        block = _int_list(lines[lineno], lineno + 1)
        if len(block) != r:
            raise SignatureFormatError(f"line {lineno + 1}: block {i} has {len(block)} entries, radix says {r}")
        blocks.append(block)
    return blocks, pos + 2 + s


def parse_signature(text: str, g: GroupTable) -> LogSignature:
    lines = text.splitlines()
    blocks, pos = parse_signature_lines(lines)
    if any(line.strip() for line in lines[pos:]):
        raise SignatureFormatError(f"trailing content after the signature at line {pos + 1}")
    return validate_log_signature(g, blocks)


def read_signature_file(path: Path, g: GroupTable) -> LogSignature:
    return parse_signature(Path(path).read_text(encoding="utf-8"), g)


def write_signature_file(sig: LogSignature, path: Path):
    Path(path).write_text(format_signature(sig), encoding="utf-8")
