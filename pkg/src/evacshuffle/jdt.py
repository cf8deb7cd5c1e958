"""Jeu de taquin: slides, rectification, shuffling and the evacuation-shuffle oracles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .punctured import PuncturedTableau
from .tableau import (
    BOX,
    Cell,
    Entry,
    Partition,
    Rectangle,
    SkewShape,
    SkewTableau,
    highest_weight,
    is_semistandard,
    rotate180,
    standardize,
    transpose_tableau,
)


@dataclass(frozen=True)
class SlideRecord:
    """Where the empty square started, where it ended, and every cell it visited."""

    start: Cell
    end: Cell
    path: Tuple[Cell, ...]

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def to_json(self) -> dict:
        return {"start": list(self.start), "end": list(self.end), "path": [list(c) for c in self.path]}


def _slide_in(entries: Dict[Cell, float], hole: Cell) -> List[Cell]:
    """Move the hole down/right until it leaves the tableau; mutates ``entries``."""
    path = [hole]
    r, c = hole
    while True:
        below = entries.get((r + 1, c))
        right = entries.get((r, c + 1))
        if below is None and right is None:
            return path
        if right is None or (below is not None and below <= right):
            nxt = (r + 1, c)
        else:
            nxt = (r, c + 1)
        entries[(r, c)] = entries.pop(nxt)
        r, c = nxt
        path.append(nxt)


def _slide_out(entries: Dict[Cell, float], hole: Cell) -> List[Cell]:
    """Move the hole up/left until it leaves the tableau; mutates ``entries``."""
    path = [hole]
    r, c = hole
    while True:
        above = entries.get((r - 1, c))
        left = entries.get((r, c - 1))
        if above is None and left is None:
            return path
        if left is None or (above is not None and above >= left):
            nxt = (r - 1, c)
        else:
            nxt = (r, c - 1)
        entries[(r, c)] = entries.pop(nxt)
        r, c = nxt
        path.append(nxt)


def _numeric(T: SkewTableau, box_rank: Optional[float]) -> Dict[Cell, float]:
    out: Dict[Cell, float] = {}
    for cell, e in T.items():
        if e is BOX:
            if box_rank is None:
                raise ValueError("tableau contains BOX but no box rank was given")
            out[cell] = box_rank
        else:
            out[cell] = e
    return out


def _restore(entries: Dict[Cell, float], box_rank: Optional[float]) -> Dict[Cell, Entry]:
    return {cell: (BOX if box_rank is not None and v == box_rank else int(v)) for cell, v in entries.items()}


def inward_slide(T: SkewTableau, hole: Cell, box_rank: Optional[float] = None) -> Tuple[SkewTableau, SlideRecord]:
    """Slide into ``hole``, which must be a corner of the inner shape."""
    if hole not in T.shape.inner_cocorners():
        raise ValueError(f"{hole} is not an inner co-corner of the shape")
    entries = _numeric(T, box_rank)
    path = _slide_in(entries, hole)
    end = path[-1]
    shape = SkewShape(T.shape.outer.remove_cell(end[0]), T.shape.inner.remove_cell(hole[0]))
    return SkewTableau.from_dict(shape, _restore(entries, box_rank)), SlideRecord(hole, end, tuple(path))


def outward_slide(T: SkewTableau, hole: Cell, box_rank: Optional[float] = None) -> Tuple[SkewTableau, SlideRecord]:
    """Slide into ``hole``, an outer co-corner with an entry above or to its left."""
    if hole not in T.shape.outer_cocorners():
        raise ValueError(f"{hole} is not an outer co-corner of the shape")
    r, c = hole
    if (r - 1, c) not in T.shape and (r, c - 1) not in T.shape:
        raise ValueError(f"no entry can slide into {hole}")
    entries = _numeric(T, box_rank)
    path = _slide_out(entries, hole)
    end = path[-1]
    shape = SkewShape(T.shape.outer.add_cell(hole[0]), T.shape.inner.add_cell(end[0]))
    return SkewTableau.from_dict(shape, _restore(entries, box_rank)), SlideRecord(hole, end, tuple(path))


@dataclass(frozen=True)
class Rectification:
    """A rectified tableau together with the data needed to undo it.

    ``vacated[k]`` is the outer cell emptied by the ``k``-th slide, and
    ``steps`` counts individual entry moves.
    """

    entries: Dict[Cell, float]
    vacated: Tuple[Cell, ...]
    steps: int


def _rectify_entries(entries: Dict[Cell, float], inner: Partition, order: Optional[Sequence[Cell]] = None) -> Rectification:
    entries = dict(entries)
    vacated: List[Cell] = []
    steps = 0
    if order is None:
        # Last cell of the last row first: the order given by the highest-weight filling of the inner shape.
        order = [(r, c) for r in range(len(inner), 0, -1) for c in range(inner.part(r), 0, -1)]
    current = inner
    for hole in order:
        if hole not in current.corners():
            raise ValueError(f"slide order visits {hole}, which is not an inner co-corner at that point")
        path = _slide_in(entries, hole)
        current = current.remove_cell(hole[0])
        vacated.append(path[-1])
        steps += len(path) - 1
    if current:
        raise ValueError("slide order does not exhaust the inner shape")
    return Rectification(entries, tuple(vacated), steps)


def _unrectify_entries(entries: Dict[Cell, float], vacated: Sequence[Cell]) -> Tuple[Dict[Cell, float], int]:
    entries = dict(entries)
    steps = 0
    for hole in reversed(vacated):
        path = _slide_out(entries, hole)
        steps += len(path) - 1
    return entries, steps


def _shape_of(cells, inner: Partition) -> SkewShape:
    counts: Dict[int, int] = {}
    for r, _ in cells:
        counts[r] = counts.get(r, 0) + 1
    rows = max(list(counts) + [len(inner)], default=0)
    outer = Partition(inner.part(r) + counts.get(r, 0) for r in range(1, rows + 1))
    return SkewShape(outer, inner)


def rectify(T: SkewTableau, order: Optional[Sequence[Cell]] = None) -> SkewTableau:
    """Slide ``T`` to straight shape.

    ``order`` lists the inner cells in the order they are slid into; by
    default the last cell of the bottom row of the inner shape goes first.
    """
    rect = _rectify_entries(_numeric(T, None), T.shape.inner, order)
    shape = _shape_of(rect.entries, Partition())
    return SkewTableau.from_dict(shape, _restore(rect.entries, None))


def rectification_orders(inner: Sequence[int]) -> List[List[Cell]]:
    """Every order in which the cells of ``inner`` can be slid into."""
    inner = Partition(inner)
    if not inner:
        return [[]]
    out = []
    for corner in inner.corners():
        for rest in rectification_orders(inner.remove_cell(corner[0])):
            out.append([corner] + rest)
    return out


def _standard_order(S: SkewTableau) -> List[Cell]:
    """Cells of ``S`` by standardized label, largest first."""
    std = standardize(S)
    return [cell for cell, _ in sorted(std.items(), key=lambda item: -item[1])]


def shuffle(S: SkewTableau, T: SkewTableau) -> Tuple[SkewTableau, SkewTableau]:
    """Exchange adjacent tableaux: ``T`` slides inward through ``S``.

    The cells of ``S`` are used as holes from the largest standardized label
    down, and each vacated outer cell receives the entry of the ``S`` cell
    that was used. Returns ``(T', S')``.
    """
    if T.shape.inner != S.shape.outer:
        raise ValueError("the shape of T must extend the shape of S")
    if not is_semistandard(S) or not is_semistandard(T):
        raise ValueError("shuffle requires semistandard tableaux")
    entries = _numeric(T, None)
    s_out: Dict[Cell, Entry] = {}
    for hole in _standard_order(S):
        path = _slide_in(entries, hole)
        s_out[path[-1]] = S[hole]
    t_shape = _shape_of(entries, S.shape.inner)
    T2 = SkewTableau.from_dict(t_shape, _restore(entries, None))
    S2 = SkewTableau.from_dict(SkewShape(T.shape.outer, t_shape.outer), s_out)
    return T2, S2


@dataclass(frozen=True)
class Chain:
    """Skew tableaux whose shapes nest, each extending the previous one."""

    tableaux: Tuple[SkewTableau, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tableaux", tuple(self.tableaux))
        for a, b in zip(self.tableaux, self.tableaux[1:]):
            if b.shape.inner != a.shape.outer:
                raise ValueError("chain shapes do not nest")

    def shuffle_at(self, i: int) -> "Chain":
        """Shuffle the ``i``-th and ``(i+1)``-th members (1-indexed)."""
        ts = list(self.tableaux)
        ts[i - 1], ts[i] = shuffle(ts[i - 1], ts[i])
        return Chain(tuple(ts))


# -- evacuation shuffle oracles ---------------------------------------------


def _split_box(pt: PuncturedTableau) -> Tuple[Dict[Cell, float], Cell, int]:
    t = len(pt.beta)
    entries = _numeric(pt.tableau, 0)
    return entries, pt.box_cell, t


def esh_oracle_with_cost(pt: PuncturedTableau, rectifier: Optional[SkewTableau] = None) -> Tuple[PuncturedTableau, int]:
    """Rectify, promote and un-rectify; also return the number of entry moves.

    ``rectifier`` is a straight tableau of the inner shape whose standardized
    labels fix the order of the rectifying slides (largest label first). The
    result does not depend on it.
    """
    if not pt.is_box_first or not pt.is_valid():
        raise ValueError("esh needs a valid box-first punctured tableau")
    inner = pt.tableau.shape.inner
    entries, _, t = _split_box(pt)
    order = None
    if rectifier is not None:
        if rectifier.shape != SkewShape(inner):
            raise ValueError("rectifier must be a straight tableau of the inner shape")
        order = _standard_order(rectifier)
    rect = _rectify_entries(entries, inner, order)
    straight = rect.entries
    if straight.get((1, 1)) != 0:
        raise AssertionError("rectified box is not in the corner")
    del straight[(1, 1)]
    path = _slide_in(straight, (1, 1))
    straight[path[-1]] = t + 1
    back, undo_steps = _unrectify_entries(straight, rect.vacated)
    steps = rect.steps + len(path) - 1 + undo_steps
    result = {cell: (BOX if v == t + 1 else int(v)) for cell, v in back.items()}
    out = SkewTableau.from_dict(pt.tableau.shape, result)
    return PuncturedTableau(out, t + 1), steps


def esh_oracle(pt: PuncturedTableau, rectifier: Optional[SkewTableau] = None) -> PuncturedTableau:
    """Evacuation-shuffle computed by rectification and promotion."""
    return esh_oracle_with_cost(pt, rectifier)[0]


def esh_by_shuffles(pt: PuncturedTableau) -> PuncturedTableau:
    """Evacuation-shuffle as a word in pairwise shuffles.

    The chain (highest-weight filling of the inner shape, BOX, T) is acted on
    by ``sh1 sh2 sh1 sh2 sh1`` (rightmost first), which moves the BOX to the end
    and returns the first member to the highest-weight filling.
    """
    if not pt.is_box_first or not pt.is_valid():
        raise ValueError("esh needs a valid box-first punctured tableau")
    T = pt.tableau
    inner = T.shape.inner
    box = pt.box_cell
    with_box = inner.add_cell(box[0])
    if box != (box[0], inner.part(box[0]) + 1):
        raise AssertionError("box does not extend the inner shape")
    anchor = highest_weight(inner)
    marker = SkewTableau.from_dict(SkewShape(with_box, inner), {box: 1})
    body = SkewTableau.from_dict(SkewShape(T.shape.outer, with_box), {c: e for c, e in T.items() if e is not BOX})
    chain = Chain((anchor, marker, body))
    for i in (1, 2, 1, 2, 1):
        chain = chain.shuffle_at(i)
    first, middle, last = chain.tableaux
    if first != anchor:
        raise AssertionError("first chain member did not return to the highest-weight filling")
    (cell,) = [c for c, _ in last.items()]
    entries = middle.to_dict()
    entries[cell] = BOX
    return PuncturedTableau(SkewTableau.from_dict(T.shape, entries), len(pt.beta) + 1)


def sh(pt: PuncturedTableau) -> PuncturedTableau:
    """Slide the BOX from the end of the chain back to the front."""
    if not pt.is_box_last or not pt.is_valid():
        raise ValueError("sh needs a valid box-last punctured tableau")
    entries = {c: e for c, e in pt.tableau.items() if e is not BOX}
    path = _slide_out(entries, pt.box_cell)
    entries[path[-1]] = BOX
    return PuncturedTableau(SkewTableau.from_dict(pt.tableau.shape, entries), 1)


def sh_inverse(pt: PuncturedTableau) -> PuncturedTableau:
    """Slide the BOX from the front of the chain to the end."""
    if not pt.is_box_first or not pt.is_valid():
        raise ValueError("inverse sh needs a valid box-first punctured tableau")
    entries = {c: e for c, e in pt.tableau.items() if e is not BOX}
    path = _slide_in(entries, pt.box_cell)
    entries[path[-1]] = BOX
    return PuncturedTableau.box_last(SkewTableau.from_dict(pt.tableau.shape, entries))


# -- highest-weight representatives -----------------------------------------


def highest_weight_representative(T: SkewTableau) -> SkewTableau:
    """The ballot tableau dual equivalent to ``T``.

    Rectify the standardization of ``T`` while recording vacated cells,
    replace the result by the highest-weight filling of the same shape and
    slide back out.
    """
    std = standardize(T)
    rect = _rectify_entries(_numeric(std, None), T.shape.inner)
    shape = _shape_of(rect.entries, Partition())
    hw = {cell: float(e) for cell, e in highest_weight(shape.outer).items()}
    back, _ = _unrectify_entries(hw, rect.vacated)
    return SkewTableau.from_dict(T.shape, _restore(back, None))


def _last_instances(T: SkewTableau) -> List[List[Cell]]:
    """``out[j-1]`` holds the ``j``-th-from-last occurrence of each entry in reading order."""
    by_value: Dict[int, List[Cell]] = {}
    for cell in T.shape.reading_cells():
        e = T[cell]
        if e is not BOX:
            by_value.setdefault(e, []).append(cell)
    width = max((len(v) for v in by_value.values()), default=0)
    out: List[List[Cell]] = [[] for _ in range(width)]
    for cells in by_value.values():
        for j, cell in enumerate(reversed(cells)):
            out[j].append(cell)
    return out


def rotate_transpose_highest_weight(pt, rect: Rectangle):
    """Rotate by 180 degrees, transpose, and take the highest-weight representative.

    Works combinatorially: the ``j``-th-from-last occurrences of all entries
    form a vertical strip, whose cells are rotated, transposed and filled
    with ``j``. Accepts a plain ballot tableau or a punctured one; a box-first
    BOX lands in box-last position and vice versa, inside the transposed
    rectangle.
    """
    T = pt.tableau if isinstance(pt, PuncturedTableau) else pt

    def move(cell: Cell) -> Cell:
        r, c = cell
        return (rect.cols + 1 - c, rect.rows + 1 - r)

    entries: Dict[Cell, Entry] = {}
    for j, cells in enumerate(_last_instances(T), start=1):
        for cell in cells:
            entries[move(cell)] = j
    box = T.box_cell
    if box is not None:
        entries[move(box)] = BOX
    shape = T.shape.rotate(rect).transpose()
    out = SkewTableau.from_dict(shape, entries)
    if not isinstance(pt, PuncturedTableau):
        return out
    if pt.is_box_first:
        return PuncturedTableau.box_last(out)
    if pt.is_box_last:
        return PuncturedTableau.box_first(out)
    raise ValueError("only box-first or box-last tableaux can be rotated")


def rotate_transpose_by_rectification(T: SkewTableau, rect: Rectangle) -> SkewTableau:
    """Same target as :func:`rotate_transpose_highest_weight`, via jeu de taquin."""
    rotated = rotate180(standardize(T), rect)
    return highest_weight_representative(transpose_tableau(rotated))


def transpose_class(pt: PuncturedTableau) -> PuncturedTableau:
    """Transpose a box-first tableau's class and return its ballot representative."""
    if not pt.is_box_first:
        raise ValueError("transpose_class expects a box-first tableau")
    T = pt.tableau
    box = pt.box_cell
    inner = T.shape.inner.add_cell(box[0])
    body = SkewTableau.from_dict(SkewShape(T.shape.outer, inner), {c: e for c, e in T.items() if e is not BOX})
    rep = highest_weight_representative(transpose_tableau(standardize(body)))
    entries = rep.to_dict()
    entries[(box[1], box[0])] = BOX
    return PuncturedTableau.box_first(SkewTableau.from_dict(T.shape.transpose(), entries))


__all__ = [
    "Chain",
    "SlideRecord",
    "esh_by_shuffles",
    "esh_oracle",
    "esh_oracle_with_cost",
    "highest_weight_representative",
    "inward_slide",
    "outward_slide",
    "rectification_orders",
    "rectify",
    "rotate_transpose_by_rectification",
    "rotate_transpose_highest_weight",
    "sh",
    "sh_inverse",
    "shuffle",
    "transpose_class",
]
