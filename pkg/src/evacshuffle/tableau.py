"""Partitions, skew shapes and skew tableaux in English notation.

Cells are 1-indexed ``(row, col)`` pairs measured from the top-left corner.
The reading word of a tableau reads its rows from bottom to top, each row
from left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

Cell = Tuple[int, int]


class _Box:
    """The distinguished marked cell of a punctured tableau."""

    _instance: Optional["_Box"] = None

    def __new__(cls) -> "_Box":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BOX"

    def __reduce__(self):
        return (_Box, ())


BOX = _Box()
Entry = Union[int, _Box]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        if any(p <= 0 for p in values):
            raise ValueError(f"partition parts must be positive: {values}")
        if any(a < b for a, b in zip(values, values[1:])):
            raise ValueError(f"partition must be weakly decreasing: {values}")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,1"``; an empty string, ``"0"`` or ``"-"`` is the empty partition."""
        text = text.strip()
        if text in ("", "-", "0", "()"):
            return cls()
        try:
            return cls(int(tok) for tok in text.strip("()").split(",") if tok.strip())
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}: {exc}") from None

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-indexed), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= c) for c in range(1, self[0] + 1))

    def contains(self, other: Sequence[int]) -> bool:
        """True when the diagram of ``other`` lies inside this one."""
        other = Partition(other)
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def cells(self) -> List[Cell]:
        return [(r, c) for r, p in enumerate(self, start=1) for c in range(1, p + 1)]

    def add_cell(self, row: int) -> "Partition":
        parts = list(self) + [0]
        parts[row - 1] += 1
        return Partition(parts)

    def remove_cell(self, row: int) -> "Partition":
        parts = list(self)
        parts[row - 1] -= 1
        return Partition(parts)

    def corners(self) -> List[Cell]:
        """Cells whose removal leaves a partition."""
        return [(r, p) for r, p in enumerate(self, start=1) if self.part(r + 1) < p]

    def cocorners(self) -> List[Cell]:
        """Cells outside the diagram whose addition leaves a partition."""
        out = [(r, self.part(r) + 1) for r in range(1, len(self) + 1) if r == 1 or self.part(r - 1) > self.part(r)]
        out.append((len(self) + 1, 1))
        return out


@dataclass(frozen=True)
class Rectangle:
    """A ``rows`` by ``cols`` box, the ambient shape of the Grassmannian."""

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"rectangle dimensions must be positive, got {self.rows}x{self.cols}")

    @classmethod
    def parse(cls, text: str) -> "Rectangle":
        """Parse ``"4x5"``."""
        try:
            rows, cols = (int(tok) for tok in text.lower().replace("×", "x").split("x"))
        except ValueError:
            raise ValueError(f"malformed rectangle {text!r}, expected ROWSxCOLS") from None
        return cls(rows, cols)

    @property
    def size(self) -> int:
        return self.rows * self.cols

    @property
    def n(self) -> int:
        return self.rows + self.cols

    def contains(self, p: Sequence[int]) -> bool:
        p = Partition(p)
        return len(p) <= self.rows and (not p or p[0] <= self.cols)

    def transpose(self) -> "Rectangle":
        return Rectangle(self.cols, self.rows)

    def partitions(self) -> Iterator[Partition]:
        """All partitions fitting inside the rectangle, by size then reverse lex."""
        def rec(prefix: List[int], remaining_rows: int, cap: int) -> Iterator[List[int]]:
            yield prefix
            if remaining_rows == 0:
                return
            for part in range(cap, 0, -1):
                yield from rec(prefix + [part], remaining_rows - 1, part)

        found = [Partition(p) for p in rec([], self.rows, self.cols)]
        found.sort(key=lambda p: (p.size, [-x for x in p]))
        return iter(found)

    def __str__(self) -> str:
        return f"{self.rows}x{self.cols}"


def complement(p: Sequence[int], rect: Rectangle) -> Partition:
    """The complement of ``p`` inside ``rect``, rotated to a partition."""
    p = Partition(p)
    if not rect.contains(p):
        raise ValueError(f"{tuple(p)} does not fit in a {rect} rectangle")
    return Partition(rect.cols - p.part(r) for r in range(rect.rows, 0, -1))


def transpose(p: Sequence[int]) -> Partition:
    return Partition(p).transpose()


@dataclass(frozen=True)
class SkewShape:
    """The cells of ``outer`` that are not in ``inner``.

    Corner queries depend on the pair of partitions, not just the cell set:
    inner corners border ``inner`` and outer corners border the outside.
    """

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {tuple(self.inner)} is not contained in outer {tuple(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return 1 <= r <= len(self.outer) and self.inner.part(r) < c <= self.outer.part(r)

    def row_range(self, r: int) -> range:
        return range(self.inner.part(r) + 1, self.outer.part(r) + 1)

    def cells(self) -> List[Cell]:
        """Cells in row-major order."""
        return [(r, c) for r in range(1, len(self.outer) + 1) for c in self.row_range(r)]

    def reading_cells(self) -> List[Cell]:
        """Cells in reading order: bottom row first, each row left to right."""
        return [(r, c) for r in range(len(self.outer), 0, -1) for c in self.row_range(r)]

    def inner_corners(self) -> List[Cell]:
        """Cells of the shape that can be absorbed into ``inner``."""
        return [cell for cell in self.inner.cocorners() if cell in self]

    def outer_corners(self) -> List[Cell]:
        """Cells of the shape that can be removed from ``outer``."""
        return [cell for cell in self.outer.corners() if cell in self]

    def inner_cocorners(self) -> List[Cell]:
        """Cells of ``inner`` that can be released into the shape."""
        return self.inner.corners()

    def outer_cocorners(self, rect: Optional[Rectangle] = None) -> List[Cell]:
        """Cells outside ``outer`` that can be added, optionally inside ``rect``."""
        cells = self.outer.cocorners()
        if rect is not None:
            cells = [(r, c) for r, c in cells if r <= rect.rows and c <= rect.cols]
        return cells

    def transpose(self) -> "SkewShape":
        return SkewShape(self.outer.transpose(), self.inner.transpose())

    def rotate(self, rect: Rectangle) -> "SkewShape":
        return SkewShape(complement(self.inner, rect), complement(self.outer, rect))

    def is_horizontal_strip(self) -> bool:
        return all(self.inner.part(r) >= self.outer.part(r + 1) for r in range(1, len(self.outer) + 1))

    def is_vertical_strip(self) -> bool:
        return self.transpose().is_horizontal_strip()


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape, stored row by row.

    ``rows[r - 1]`` lists the entries of row ``r`` from column
    ``inner[r] + 1`` to ``outer[r]``. Semistandardness and ballotness are
    queried with the module functions rather than enforced here.
    """

    shape: SkewShape
    rows: Tuple[Tuple[Entry, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.shape.outer):
            raise ValueError("row count does not match the shape")
        boxes = 0
        for r, row in enumerate(self.rows, start=1):
            if len(row) != len(self.shape.row_range(r)):
                raise ValueError(f"row {r} has {len(row)} entries, shape needs {len(self.shape.row_range(r))}")
            for e in row:
                if e is BOX:
                    boxes += 1
                elif not isinstance(e, int) or e < 1:
                    raise ValueError(f"entries must be positive integers or BOX, got {e!r}")
        if boxes > 1:
            raise ValueError("a tableau carries at most one BOX")

    @classmethod
    def from_dict(cls, shape: SkewShape, entries: Mapping[Cell, Entry]) -> "SkewTableau":
        missing = [cell for cell in shape.cells() if cell not in entries]
        if missing or len(entries) != shape.size:
            raise ValueError(f"entries do not match the shape cells (missing {missing[:3]})")
        rows = tuple(tuple(entries[(r, c)] for c in shape.row_range(r)) for r in range(1, len(shape.outer) + 1))
        return cls(shape, rows)

    @classmethod
    def empty(cls, p: Sequence[int] = ()) -> "SkewTableau":
        """The empty tableau of shape ``p/p``."""
        p = Partition(p)
        return cls(SkewShape(p, p), tuple(() for _ in p))

    def __getitem__(self, cell: Cell) -> Entry:
        if cell not in self.shape:
            raise KeyError(cell)
        r, c = cell
        return self.rows[r - 1][c - self.shape.inner.part(r) - 1]

    def get(self, cell: Cell, default=None):
        return self[cell] if cell in self.shape else default

    def __len__(self) -> int:
        return self.shape.size

    def items(self) -> Iterator[Tuple[Cell, Entry]]:
        for r, row in enumerate(self.rows, start=1):
            start = self.shape.inner.part(r)
            for k, e in enumerate(row, start=1):
                yield (r, start + k), e

    def to_dict(self) -> Dict[Cell, Entry]:
        return dict(self.items())

    def replace(self, changes: Mapping[Cell, Entry]) -> "SkewTableau":
        entries = self.to_dict()
        entries.update(changes)
        return SkewTableau.from_dict(self.shape, entries)

    @property
    def box_cell(self) -> Optional[Cell]:
        for cell, e in self.items():
            if e is BOX:
                return cell
        return None

    def reading_word(self) -> List[Entry]:
        return reading_word(self)

    def __str__(self) -> str:
        return "\n".join(format_rows(self))


def highest_weight(p: Sequence[int]) -> SkewTableau:
    """The straight tableau of shape ``p`` whose row ``i`` is filled with ``i``."""
    p = Partition(p)
    return SkewTableau(SkewShape(p), tuple((r,) * part for r, part in enumerate(p, start=1)))


def reading_word(T: SkewTableau) -> List[Entry]:
    """Rows from bottom to top, each read left to right; BOX stays in place."""
    return [e for row in reversed(T.rows) for e in row]


def is_ballot(word: Iterable[Entry]) -> bool:
    """True when every suffix has at least as many ``i`` as ``i+1``; BOX is skipped."""
    counts: Dict[int, int] = {}
    for e in reversed(list(word)):
        if e is BOX:
            continue
        counts[e] = counts.get(e, 0) + 1
        if e > 1 and counts[e] > counts.get(e - 1, 0):
            return False
    return True


def content(T: Union[SkewTableau, Iterable[Entry]]) -> List[int]:
    """Counts of ``1, 2, ...`` up to the largest entry, ignoring BOX."""
    word = reading_word(T) if isinstance(T, SkewTableau) else list(T)
    values = [e for e in word if e is not BOX]
    if not values:
        return []
    counts = [0] * max(values)
    for e in values:
        counts[e - 1] += 1
    return counts


def _rank(e: Entry, box_rank: Optional[float]) -> float:
    if e is BOX:
        if box_rank is None:
            raise ValueError("tableau contains BOX but no box rank was given")
        return box_rank
    return e


def is_semistandard(T: SkewTableau, box_rank: Optional[float] = None, skip_box: bool = False) -> bool:
    """Rows weakly increase and columns strictly increase.

    With ``skip_box`` the BOX cell is ignored entirely; otherwise it is
    compared as the number ``box_rank``.
    """
    entries = T.to_dict()
    for (r, c), e in entries.items():
        if skip_box and e is BOX:
            continue
        for nb, strict in (((r, c + 1), False), ((r + 1, c), True)):
            f = entries.get(nb)
            if f is None or (skip_box and f is BOX):
                continue
            a, b = _rank(e, box_rank), _rank(f, box_rank)
            if a > b or (strict and a == b):
                return False
    return True


def is_standard(T: SkewTableau) -> bool:
    values = sorted(e for _, e in T.items() if e is not BOX)
    return len(values) == len(T) and values == list(range(1, len(T) + 1)) and is_semistandard(T)


def standardize(T: SkewTableau) -> SkewTableau:
    """Relabel by ``1..|T|``, breaking ties between equal entries in reading order."""
    if T.box_cell is not None:
        raise ValueError("cannot standardize a tableau containing BOX")
    if not is_semistandard(T):
        raise ValueError("standardize requires a semistandard tableau")
    order = T.shape.reading_cells()
    ranked = sorted(range(len(order)), key=lambda k: (T[order[k]], k))
    labels = {order[k]: n for n, k in enumerate(ranked, start=1)}
    return SkewTableau.from_dict(T.shape, labels)


def rotate180(T: SkewTableau, rect: Rectangle, top: Optional[int] = None) -> SkewTableau:
    """Rotate by 180 degrees inside ``rect`` and reverse the numbering.

    Entries ``m`` become ``top + 1 - m`` where ``top`` defaults to the largest
    entry, which for a standard tableau is ``|T|``. BOX is carried along.
    """
    values = [e for _, e in T.items() if e is not BOX]
    if top is None:
        top = max(values, default=0)
    shape = T.shape.rotate(rect)
    entries = {
        (rect.rows + 1 - r, rect.cols + 1 - c): (e if e is BOX else top + 1 - e)
        for (r, c), e in T.items()
    }
    return SkewTableau.from_dict(shape, entries)


def transpose_tableau(T: SkewTableau) -> SkewTableau:
    """Reflect cells across the main diagonal, keeping entries."""
    return SkewTableau.from_dict(T.shape.transpose(), {(c, r): e for (r, c), e in T.items()})


# -- text format -------------------------------------------------------------

_INNER_TOKENS = (".", ":")
_BOX_TOKENS = ("X", "x")


def _token(e: Entry) -> str:
    return "X" if e is BOX else str(e)


def format_rows(T: SkewTableau) -> List[str]:
    """Render one string per row: ``.`` for inner cells, ``X`` for BOX.

    Tokens are comma separated in every row when any entry has two digits.
    """
    wide = any(e is not BOX and e >= 10 for _, e in T.items())
    sep = "," if wide else ""
    lines = []
    for r, row in enumerate(T.rows, start=1):
        tokens = ["."] * T.shape.inner.part(r) + [_token(e) for e in row]
        lines.append(sep.join(tokens))
    return lines


def parse_rows(lines: Union[str, Sequence[str]]) -> SkewTableau:
    """Inverse of :func:`format_rows`; ``:`` is accepted for inner cells."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    lines = [line.strip() for line in lines]
    while lines and not lines[-1]:
        lines.pop()
    wide = any("," in line for line in lines)
    inner: List[int] = []
    outer: List[int] = []
    entries: Dict[Cell, Entry] = {}
    for r, line in enumerate(lines, start=1):
        tokens = [t.strip() for t in line.split(",")] if wide else list(line.replace(" ", ""))
        tokens = [t for t in tokens if t]
        k = 0
        while k < len(tokens) and tokens[k] in _INNER_TOKENS:
            k += 1
        inner.append(k)
        outer.append(len(tokens))
        for c, tok in enumerate(tokens[k:], start=k + 1):
            if tok in _BOX_TOKENS:
                entries[(r, c)] = BOX
            elif tok.isdigit() and int(tok) > 0:
                entries[(r, c)] = int(tok)
            else:
                raise ValueError(f"bad token {tok!r} in row {r}")
    try:
        shape = SkewShape(Partition(outer), Partition(inner))
    except ValueError as exc:
        raise ValueError(f"rows do not describe a skew shape: {exc}") from None
    return SkewTableau.from_dict(shape, entries)
