from pathlib import Path

from modules.witnesses.witness_types import WitnessWord


def format_witness(word: WitnessWord) -> str:
    lines = [str(f) for f in word.factors]
    lines.append(str(word.product))
    return "\n".join(lines) + "\n"


def write_witness_file(word: WitnessWord, path: Path):
    Path(path).write_text(format_witness(word), encoding="utf-8")
