"""
Lattice text format.

    lattice <size>
    labels<TAB><label 0><TAB><label 1>...
    cover <lo> <up>

Indices are 0-based. Blank lines and ``#`` comments are ignored. Writing
emits the Hasse diagram, so a transitively closed input comes back reduced.
"""

import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import ValidationError as PydanticValidationError

from engines.lattice_core.lattice import FiniteLattice
from shared.constants import FileFormats
from shared.exceptions import LatticeFormatError, ValidationError
from shared.shared_types import CoverList

_LABELS_LINE = re.compile(rf"^{FileFormats.LABELS_KEYWORD}[ \t](.*)$")


def parse_cover_list(text: str) -> CoverList:
    size: Optional[int] = None
    labels: Optional[List[str]] = None
    covers: List[Tuple[int, int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        stripped = line.strip()
        if not stripped or stripped.startswith(FileFormats.COMMENT_PREFIX):
            continue
        words = stripped.split()
        keyword = words[0]
        if size is None:
            if keyword != FileFormats.LATTICE_HEADER or len(words) != 2 or not words[1].isdigit():
                raise LatticeFormatError("expected 'lattice <size>' header", line_number=number, line=line)
            size = int(words[1])
        elif keyword == FileFormats.LABELS_KEYWORD:
            match = _LABELS_LINE.match(line.lstrip())
            if labels is not None or match is None:
                raise LatticeFormatError("malformed or repeated labels line", line_number=number, line=line)
            labels = match.group(1).split(FileFormats.FIELD_SEPARATOR)
        elif keyword == FileFormats.COVER_KEYWORD:
            try:
                lo, up = (int(w) for w in words[1:])
            except ValueError:
                raise LatticeFormatError("expected 'cover <lo> <up>'", line_number=number, line=line) from None
            covers.append((lo, up))
        else:
            raise LatticeFormatError(f"unknown keyword {keyword!r}", line_number=number, line=line)

    if size is None:
        raise LatticeFormatError("missing 'lattice <size>' header")
    try:
        return CoverList(size=size, covers=covers, labels=labels)
    except PydanticValidationError as e:
        raise LatticeFormatError(f"invalid lattice description: {e.errors()[0]['msg']}", cause=e) from e


def read_lattice(text: str) -> FiniteLattice:
    return FiniteLattice.from_cover_relations(parse_cover_list(text))


def write_lattice(lattice: FiniteLattice) -> str:
    for label in lattice.labels:
        if FileFormats.FIELD_SEPARATOR in label or "\n" in label:
            raise ValidationError(f"label {label!r} cannot be written", field="labels", value=label)
    lines = [
        f"{FileFormats.LATTICE_HEADER} {lattice.size}",
        FileFormats.FIELD_SEPARATOR.join((FileFormats.LABELS_KEYWORD,) + lattice.labels),
    ]
    lines.extend(f"{FileFormats.COVER_KEYWORD} {lo} {up}" for lo, up in lattice.cover_pairs())
    return "\n".join(lines) + "\n"


def load_lattice(path: Union[str, Path]) -> FiniteLattice:
    return read_lattice(Path(path).read_text(encoding="utf-8"))


def save_lattice(lattice: FiniteLattice, path: Union[str, Path]) -> None:
    Path(path).write_text(write_lattice(lattice), encoding="utf-8")
