"""Local evacuation-shuffling: moving the BOX through the strips of a ballot tableau.

The forward algorithm runs in two phases. While some ``i`` precedes the BOX
in reading order, the BOX swaps with the nearest such ``i`` (a vertical move
or a down-left Pieri move). After that, at each ``i`` it moves forward
through the ``i``'s until the part of the reading word after it holds equally
many ``i``'s and ``(i+1)``'s. The step-by-step form of the second phase
records each individual swap as a horizontal or up-right move.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from .punctured import PuncturedTableau
from .tableau import BOX, Cell, Partition, SkewShape, SkewTableau, content, is_ballot, is_semistandard

VERT = "Vert"
PIERI = "Pieri"
JUMP = "Jump"
HORIZ = "Horiz"
CPIERI = "CPieri"


@dataclass(frozen=True)
class Move:
    """One swap of the BOX with an entry ``value``.

    ``index`` is ``i`` for Vert, Pieri and Jump moves and the position ``j``
    along the path for Horiz and CPieri moves. ``after`` is the tableau right
    after the move when tracing is on.
    """

    kind: str
    index: int
    from_cell: Cell
    to_cell: Cell
    value: int
    after: Optional[SkewTableau] = field(default=None, compare=False, repr=False)

    @property
    def is_generator(self) -> bool:
        """Pieri and CPieri moves swap non-adjacent cells."""
        return self.kind in (PIERI, CPIERI)

    def to_json(self) -> dict:
        from .tableau import format_rows

        out = {
            "kind": self.kind,
            "index": self.index,
            "value": self.value,
            "from": list(self.from_cell),
            "to": list(self.to_cell),
        }
        if self.after is not None:
            out["rows"] = format_rows(self.after)
        return out


@dataclass(frozen=True)
class EvacuShufflePath:
    """Cells visited by the BOX, the moves taken and the transition step.

    ``moves`` is the step-by-step expansion; ``steps`` has exactly one entry
    per value ``i`` (the Vert/Pieri move or the possibly zero-length Jump).
    """

    cells: Tuple[Cell, ...]
    moves: Tuple[Move, ...]
    steps: Tuple[Move, ...]
    transition_step: int

    @property
    def move_count(self) -> int:
        return len(self.moves)

    def phase_one_cells(self) -> Tuple[Cell, ...]:
        n = sum(1 for m in self.moves if m.kind in (VERT, PIERI))
        return self.cells[: n + 1]

    def phase_two_cells(self) -> Tuple[Cell, ...]:
        n = sum(1 for m in self.moves if m.kind in (VERT, PIERI))
        return self.cells[n:]

    def is_connected(self) -> bool:
        return all(abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1 for a, b in zip(self.cells, self.cells[1:]))

    def to_json(self) -> dict:
        return {
            "transition_step": self.transition_step,
            "cells": [list(c) for c in self.cells],
            "moves": [m.to_json() for m in self.moves],
            "steps": [m.to_json() for m in self.steps],
        }


class _Board:
    """A mutable working copy indexed by reading position.

    Positions of each value are kept sorted so suffix counts and nearest
    occurrences come from bisection rather than rescanning the word.
    """

    def __init__(self, tableau: SkewTableau):
        self.shape = tableau.shape
        self.order: List[Cell] = tableau.shape.reading_cells()
        self.entries: Dict[Cell, object] = tableau.to_dict()
        self.where: Dict[int, List[int]] = {}
        self.box = -1
        for p, cell in enumerate(self.order):
            e = self.entries[cell]
            if e is BOX:
                self.box = p
            else:
                self.where.setdefault(e, []).append(p)

    def cell(self, p: int) -> Cell:
        return self.order[p]

    def value(self, p: int):
        return self.entries[self.order[p]]

    def count_after(self, v: int, p: int) -> int:
        """Occurrences of ``v`` strictly after position ``p``."""
        lst = self.where.get(v, ())
        return len(lst) - bisect_right(lst, p)

    def count_from(self, v: int, p: int) -> int:
        """Occurrences of ``v`` at or after position ``p``."""
        lst = self.where.get(v, ())
        return len(lst) - bisect_left(lst, p)

    def tied_after(self, i: int, p: int) -> bool:
        return self.count_after(i, p) == self.count_after(i + 1, p)

    def nearest_before(self, v: int, p: int) -> Optional[int]:
        lst = self.where.get(v, ())
        k = bisect_left(lst, p)
        return lst[k - 1] if k > 0 else None

    def nearest_after(self, v: int, p: int) -> Optional[int]:
        lst = self.where.get(v, ())
        k = bisect_right(lst, p)
        return lst[k] if k < len(lst) else None

    def before(self, v: int, p: int) -> List[int]:
        """Positions of ``v`` before ``p``, nearest first."""
        lst = self.where.get(v, ())
        return lst[: bisect_left(lst, p)][::-1]

    def first(self, v: int) -> Optional[int]:
        lst = self.where.get(v, ())
        return lst[0] if lst else None

    def swap(self, p: int) -> int:
        """Exchange the BOX with the entry at ``p``; returns that entry."""
        v = self.value(p)
        lst = self.where[v]
        k = bisect_left(lst, p)
        lst[k] = self.box
        if (k > 0 and lst[k - 1] > lst[k]) or (k + 1 < len(lst) and lst[k + 1] < lst[k]):
            lst.sort()
        self.entries[self.order[self.box]] = v
        self.entries[self.order[p]] = BOX
        self.box = p
        return v

    def snapshot(self) -> SkewTableau:
        return SkewTableau.from_dict(self.shape, self.entries)


def _check_position(pt: PuncturedTableau, stage: int, what: str) -> None:
    if pt.stage != stage:
        raise ValueError(f"{what} expects the BOX at stage {stage}, got {pt.position}")
    if not pt.is_valid():
        raise ValueError(f"{what} got an invalid punctured tableau")


class _Recorder:
    def __init__(self, board: _Board, trace: bool):
        self.board = board
        self.trace = trace
        self.cells: List[Cell] = [board.cell(board.box)]
        self.moves: List[Move] = []
        self.steps: List[Move] = []

    def swap(self, kind: str, index: Optional[int], p: int) -> Move:
        b = self.board
        frm, to = b.cell(b.box), b.cell(p)
        v = b.swap(p)
        if index is None:
            index = len(self.moves) + 1
        move = Move(kind, index, frm, to, v, b.snapshot() if self.trace else None)
        self.moves.append(move)
        self.cells.append(to)
        return move

    def step(self, move: Move) -> None:
        self.steps.append(move)

    def jump(self, i: int, start: Cell) -> None:
        b = self.board
        self.steps.append(Move(JUMP, i, start, b.cell(b.box), i, b.snapshot() if self.trace else None))


def _phase_one_move(rec: _Recorder, i: int, q: int) -> None:
    b = rec.board
    kind = VERT if b.cell(q)[1] == b.cell(b.box)[1] else PIERI
    rec.step(rec.swap(kind, i, q))


def _jump_forward(rec: _Recorder, i: int) -> None:
    b = rec.board
    start = b.cell(b.box)
    while not b.tied_after(i, b.box):
        q = b.nearest_after(i, b.box)
        if q is None:
            raise ValueError("reading word is not ballot")
        kind = HORIZ if b.cell(q)[0] == b.cell(b.box)[0] else CPIERI
        rec.swap(kind, None, q)
    rec.jump(i, start)


def local_esh(pt: PuncturedTableau, trace: bool = True) -> Tuple[PuncturedTableau, EvacuShufflePath]:
    """Move the BOX from the front of the tableau to the back.

    Returns the box-last tableau and the step-by-step path. With
    ``trace=False`` the per-move snapshots are skipped.
    """
    _check_position(pt, 1, "local_esh")
    t = len(pt.beta)
    board = _Board(pt.tableau)
    rec = _Recorder(board, trace)
    i = 1
    while i <= t:
        q = board.nearest_before(i, board.box)
        if q is None:
            break
        _phase_one_move(rec, i, q)
        i += 1
    s = i
    for i in range(s, t + 1):
        _jump_forward(rec, i)
    path = EvacuShufflePath(tuple(rec.cells), tuple(rec.moves), tuple(rec.steps), s)
    return PuncturedTableau(board.snapshot(), t + 1), path


def local_esh_default(pt: PuncturedTableau) -> PuncturedTableau:
    """The same map with whole jumps and suffix counts recomputed from scratch."""
    _check_position(pt, 1, "local_esh_default")
    t = len(pt.beta)
    order = pt.tableau.shape.reading_cells()
    word = [pt.tableau[c] for c in order]

    def box() -> int:
        return next(k for k, e in enumerate(word) if e is BOX)

    def tied(i: int, p: int) -> bool:
        tail = word[p + 1:]
        return tail.count(i) == tail.count(i + 1)

    i = 1
    while i <= t:
        b = box()
        prior = [k for k in range(b) if word[k] == i]
        if not prior:
            break
        word[prior[-1]], word[b] = BOX, i
        i += 1
    while i <= t:
        b = box()
        if not tied(i, b):
            z = next(k for k in range(b + 1, len(word)) if word[k] == i and tied(i, k))
            word[z], word[b] = BOX, i
        i += 1
    return PuncturedTableau(SkewTableau.from_dict(pt.tableau.shape, dict(zip(order, word))), t + 1)


def local_esh_reverse(pt: PuncturedTableau, trace: bool = True) -> Tuple[PuncturedTableau, EvacuShufflePath]:
    """Undo :func:`local_esh`, moving the BOX from the back to the front.

    Starting at ``i = len(beta)``: while the part of the word after the BOX
    does not hold more ``i``'s than ``(i+1)``'s, the BOX moves back to the
    nearest ``i`` (or stays put) whose weak suffix is tied for ``(i-1, i)``,
    falling back to the first ``i`` in reading order. For ``i = 1`` only the
    fallback applies. The remaining values are undone by swapping with the
    nearest later ``i``. The path is listed in the order the BOX travels it.
    """
    t = len(pt.beta)
    _check_position(pt, t + 1, "local_esh_reverse")
    board = _Board(pt.tableau)
    rec = _Recorder(board, trace)
    i = t
    while i >= 1:
        b = board.box
        if board.count_after(i, b) > board.count_after(i + 1, b):
            break
        target = None
        if i > 1:
            if board.count_after(i - 1, b) == board.count_after(i, b):
                target = b
            else:
                target = next((q for q in board.before(i, b) if board.count_from(i - 1, q) == board.count_from(i, q)), None)
        if target is None:
            first = board.first(i)
            target = first if first is not None and first < b else b
        start = board.cell(b)
        while board.box > target:
            q = board.nearest_before(i, board.box)
            kind = HORIZ if board.cell(q)[0] == board.cell(board.box)[0] else CPIERI
            rec.swap(kind, None, q)
        rec.jump(i, start)
        i -= 1
    s = i + 1
    while i >= 1:
        q = board.nearest_after(i, board.box)
        if q is None:
            raise ValueError("reverse phase one found no later entry to swap with")
        kind = VERT if board.cell(q)[1] == board.cell(board.box)[1] else PIERI
        rec.step(rec.swap(kind, i, q))
        i -= 1
    rec.steps.reverse()
    path = EvacuShufflePath(tuple(rec.cells), tuple(rec.moves), tuple(rec.steps), s)
    return PuncturedTableau(board.snapshot(), 1), path


def transition_step(pt: PuncturedTableau) -> int:
    """The value of ``i`` at which the forward algorithm enters its second phase."""
    return local_esh(pt, trace=False)[1].transition_step


# -- single steps between consecutive strips ----------------------------------


def _step_ell(i: int, x: PuncturedTableau, trace: bool = False) -> Tuple[PuncturedTableau, List[Move]]:
    _check_position(x, i, "step_ell")
    board = _Board(x.tableau)
    rec = _Recorder(board, trace)
    b = board.box
    untied = i == 1 or not (board.count_after(i - 1, b) == board.count_after(i, b))
    q = board.nearest_before(i, b)
    if untied and q is not None:
        _phase_one_move(rec, i, q)
    else:
        _jump_forward(rec, i)
    return PuncturedTableau(board.snapshot(), i + 1), rec.moves


def step_ell(i: int, x: PuncturedTableau) -> PuncturedTableau:
    """Move the BOX past the strip of ``i``'s, deciding the phase from ``x`` alone.

    A phase-one move is taken when some ``i`` precedes the BOX and (for
    ``i > 1``) the suffix after the BOX is not tied for ``(i-1, i)``.
    """
    return _step_ell(i, x)[0]


def step_ell_moves(i: int, x: PuncturedTableau) -> Tuple[PuncturedTableau, List[Move]]:
    """:func:`step_ell` together with the step-by-step moves it made."""
    return _step_ell(i, x, trace=True)


def step_sh(i: int, x: PuncturedTableau) -> PuncturedTableau:
    """Slide the BOX backwards through the ``i``'s only (stage ``i+1`` to ``i``)."""
    _check_position(x, i + 1, "step_sh")
    entries = x.tableau.to_dict()
    r, c = x.box_cell
    while True:
        if entries.get((r - 1, c)) == i:
            nxt = (r - 1, c)
        elif entries.get((r, c - 1)) == i:
            nxt = (r, c - 1)
        else:
            break
        entries[(r, c)] = i
        r, c = nxt
    entries[(r, c)] = BOX
    return PuncturedTableau(SkewTableau.from_dict(x.tableau.shape, entries), i)


def step_sh_inverse(i: int, x: PuncturedTableau) -> PuncturedTableau:
    """Slide the BOX forwards through the ``i``'s only (stage ``i`` to ``i+1``)."""
    _check_position(x, i, "step_sh_inverse")
    entries = x.tableau.to_dict()
    r, c = x.box_cell
    while True:
        if entries.get((r + 1, c)) == i:
            nxt = (r + 1, c)
        elif entries.get((r, c + 1)) == i:
            nxt = (r, c + 1)
        else:
            break
        entries[(r, c)] = i
        r, c = nxt
    entries[(r, c)] = BOX
    return PuncturedTableau(SkewTableau.from_dict(x.tableau.shape, entries), i + 1)


# -- s-decompositions -------------------------------------------------------


@dataclass(frozen=True)
class SDecomposition:
    """Horizontal strips ``H_1..H_{s-1}`` and vertical strips ``V_s..V_t``."""

    horizontals: Tuple[FrozenSet[Cell], ...]
    verticals: Tuple[FrozenSet[Cell], ...]
    s: int
    t: int

    def strips(self) -> Tuple[FrozenSet[Cell], ...]:
        return self.horizontals + self.verticals


def s_decomposition(T: SkewTableau, s: int) -> SDecomposition:
    """Split a ballot tableau at ``s``.

    Entries below ``s`` give one horizontal strip per value. The remaining
    cells are grouped by the ``j``-th-from-last occurrence of each value in
    reading order; the group for ``j`` is ``V_{t+1-j}`` with ``t = beta_s + s - 1``.
    A BOX, if present, is ignored.
    """
    beta = Partition(content(T))
    if not 1 <= s <= len(beta) + 1:
        raise ValueError(f"s must lie in 1..{len(beta) + 1}, got {s}")
    t = beta.part(s) + s - 1
    horizontals = tuple(frozenset(c for c, e in T.items() if e == i) for i in range(1, s))
    occurrences: Dict[int, List[Cell]] = {}
    for cell in T.shape.reading_cells():
        e = T[cell]
        if e is not BOX and e >= s:
            occurrences.setdefault(e, []).append(cell)
    groups: List[set] = [set() for _ in range(beta.part(s))]
    for cells in occurrences.values():
        for j, cell in enumerate(reversed(cells)):
            groups[j].add(cell)
    verticals = tuple(frozenset(g) for g in reversed(groups))
    return SDecomposition(horizontals, verticals, s, t)


def check_intermediate(tableau: SkewTableau) -> bool:
    """Ballot and semistandard when the BOX is left out."""
    from .tableau import reading_word

    return is_ballot(reading_word(tableau)) and is_semistandard(tableau, skip_box=True)


__all__ = [
    "CPIERI",
    "EvacuShufflePath",
    "HORIZ",
    "JUMP",
    "Move",
    "PIERI",
    "SDecomposition",
    "VERT",
    "check_intermediate",
    "local_esh",
    "local_esh_default",
    "local_esh_reverse",
    "s_decomposition",
    "step_ell",
    "step_ell_moves",
    "step_sh",
    "step_sh_inverse",
    "transition_step",
]
