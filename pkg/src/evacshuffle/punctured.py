"""Tableaux carrying a marked box, and genomic tableaux with a repeated gene."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .tableau import (
    BOX,
    Cell,
    Partition,
    SkewTableau,
    content,
    format_rows,
    is_ballot,
    is_semistandard,
    parse_rows,
    reading_word,
)


@dataclass(frozen=True)
class PuncturedTableau:
    """A ballot tableau with one BOX cell sitting between two of its strips.

    ``stage`` is the index ``i`` such that the BOX lies after the strip of
    ``i - 1``'s and before the strip of ``i``'s. Stage 1 is the box-first
    position and stage ``len(beta) + 1`` is the box-last position. For
    semistandardness the BOX compares as the number ``stage - 1/2``.
    """

    tableau: SkewTableau
    stage: int

    def __post_init__(self) -> None:
        if self.tableau.box_cell is None:
            raise ValueError("punctured tableau has no BOX")
        if self.stage < 1:
            raise ValueError(f"stage must be positive, got {self.stage}")

    @classmethod
    def box_first(cls, tableau: SkewTableau) -> "PuncturedTableau":
        return cls(tableau, 1)

    @classmethod
    def box_last(cls, tableau: SkewTableau) -> "PuncturedTableau":
        return cls(tableau, len(content(tableau)) + 1)

    @classmethod
    def parse(cls, lines, position: str = "box-first") -> "PuncturedTableau":
        T = parse_rows(lines)
        if position == "box-first":
            return cls.box_first(T)
        if position == "box-last":
            return cls.box_last(T)
        raise ValueError(f"unknown position {position!r}")

    @property
    def beta(self) -> Partition:
        return Partition(content(self.tableau))

    @property
    def box_cell(self) -> Cell:
        return self.tableau.box_cell  # type: ignore[return-value]

    @property
    def box_rank(self) -> float:
        return self.stage - 0.5

    @property
    def is_box_first(self) -> bool:
        return self.stage == 1

    @property
    def is_box_last(self) -> bool:
        return self.stage == len(self.beta) + 1

    @property
    def position(self) -> str:
        if self.is_box_first:
            return "box-first"
        if self.is_box_last:
            return "box-last"
        return f"between-{self.stage}"

    def rows(self) -> List[str]:
        return format_rows(self.tableau)

    def sort_key(self) -> Tuple[float, ...]:
        """Lexicographic key on the reading word with BOX read at its rank."""
        return tuple(self.box_rank if e is BOX else e for e in reading_word(self.tableau))

    def is_valid(self) -> bool:
        """Ballot and semistandard with the BOX placed at its stage."""
        beta = content(self.tableau)
        if any(a < b for a, b in zip(beta, beta[1:])) or 0 in beta:
            return False
        if not 1 <= self.stage <= len(beta) + 1:
            return False
        return is_ballot(reading_word(self.tableau)) and is_semistandard(self.tableau, self.box_rank)

    def to_json(self) -> dict:
        r, c = self.box_cell
        return {"rows": self.rows(), "box": [r, c], "stage": self.stage, "position": self.position}

    @classmethod
    def from_json(cls, obj: dict) -> "PuncturedTableau":
        pt = cls(parse_rows(obj["rows"]), int(obj["stage"]))
        if "box" in obj and list(pt.box_cell) != list(obj["box"]):
            raise ValueError("box cell does not match the rows")
        return pt

    def __str__(self) -> str:
        return "\n".join(self.rows())


def are_adjacent(a: Cell, b: Cell) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


@dataclass(frozen=True)
class GenomicTableau:
    """A semistandard filling of content ``beta + e_family`` with two marked cells.

    The marked cells hold the same gene of the gene family ``family``.
    """

    base: SkewTableau
    marked: FrozenSet[Cell]
    family: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "marked", frozenset(self.marked))
        if len(self.marked) != 2:
            raise ValueError("a genomic tableau marks exactly two cells")

    def ordered_marks(self) -> Tuple[Cell, Cell]:
        """The marked cells in reading order."""
        order = {cell: k for k, cell in enumerate(self.base.shape.reading_cells())}
        a, b = sorted(self.marked, key=order.__getitem__)
        return a, b

    def is_valid(self) -> bool:
        """Check the ballot-on-deletion description of ballot genomic tableaux."""
        i = self.family
        if not is_semistandard(self.base):
            return False
        a, b = self.ordered_marks()
        if are_adjacent(a, b) or self.base.get(a) != i or self.base.get(b) != i:
            return False
        cells = self.base.shape.reading_cells()
        ka, kb = cells.index(a), cells.index(b)
        if any(self.base[cells[k]] == i for k in range(ka + 1, kb)):
            return False
        word = [self.base[cell] for cell in cells]
        return is_ballot(word[:ka] + word[ka + 1:]) and is_ballot(word[:kb] + word[kb + 1:])

    def genes(self) -> Dict[Cell, Tuple[int, int]]:
        """Label every cell by (gene family, gene), numbering genes in reading order."""
        seen: Dict[int, int] = {}
        out: Dict[Cell, Tuple[int, int]] = {}
        second = self.ordered_marks()[1]
        for cell in self.base.shape.reading_cells():
            v = self.base[cell]
            if cell != second:
                seen[v] = seen.get(v, 0) + 1
            out[cell] = (v, seen[v])
        return out

    def key(self) -> tuple:
        return (self.family, self.base.rows, tuple(sorted(self.marked)))

    def to_json(self) -> dict:
        return {
            "rows": format_rows(self.base),
            "marked": [list(cell) for cell in sorted(self.marked)],
            "family": self.family,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GenomicTableau":
        return cls(parse_rows(obj["rows"]), frozenset(tuple(c) for c in obj["marked"]), int(obj["family"]))
