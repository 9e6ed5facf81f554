from pathlib import Path
from typing import List, Sequence

from modules.errors import DegreeMismatch, NotAPermutation, PermutationFormatError
from modules.transforms.transform_types import Permutation


def format_permutation(p: Permutation) -> str:
    return str(p)


def parse_permutation(line: str) -> Permutation:
    try:
        images = tuple(int(tok) for tok in line.split())
    except ValueError as e:
        raise PermutationFormatError(f"non-integer image in {line!r}") from e
    if not images:
        raise PermutationFormatError("empty permutation line")
    try:
        return Permutation(images)
    except NotAPermutation as e:
        raise PermutationFormatError(str(e)) from e


def parse_generator_set(text: str) -> List[Permutation]:
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            gens.append(parse_permutation(line))
        except PermutationFormatError as e:
            raise PermutationFormatError(f"line {lineno}: {e}") from e
    if len({p.degree for p in gens}) > 1:
        raise DegreeMismatch(f"generators of mixed degrees {sorted({p.degree for p in gens})}")
    return gens


def format_generator_set(gens: Sequence[Permutation], labels: Sequence[str] = ()) -> str:
    lines = []
    for i, p in enumerate(gens):
        if i < len(labels):
            lines.append(f"# {labels[i]}")
        lines.append(format_permutation(p))
    return "\n".join(lines) + "\n"


def read_generator_file(path: Path) -> List[Permutation]:
    return parse_generator_set(Path(path).read_text(encoding="utf-8"))


def write_generator_file(gens: Sequence[Permutation], path: Path, labels: Sequence[str] = ()):
    Path(path).write_text(format_generator_set(gens, labels), encoding="utf-8")
