"""Enumerating punctured ballot tableaux, genomic tableaux and Pieri strips.

Fillings are built by backtracking over cells in reverse reading order, so
every partial filling is a suffix of the reading word and ballotness can be
pruned as it is built.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .punctured import GenomicTableau, PuncturedTableau
from .tableau import BOX, Cell, Partition, Rectangle, SkewShape, SkewTableau, complement

Triple = Tuple[Partition, Partition, Partition, Rectangle]


def validate_triple(alpha, beta, gamma, rect: Rectangle) -> SkewShape:
    """Check the three partitions against ``rect`` and return the shape to fill."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    for name, p in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not rect.contains(p):
            raise ValueError(f"{name}={tuple(p)} does not fit in {rect}")
    total = alpha.size + beta.size + gamma.size
    if total != rect.size - 1:
        raise ValueError(
            f"sizes must add up to {rect.size - 1} for {rect}: "
            f"|alpha|={alpha.size}, |beta|={beta.size}, |gamma|={gamma.size}"
        )
    outer = complement(gamma, rect)
    if not outer.contains(alpha):
        raise ValueError(f"alpha={tuple(alpha)} is not inside the complement {tuple(outer)} of gamma")
    return SkewShape(outer, alpha)


def _fillings(
    shape: SkewShape,
    counts: Dict[float, int],
    deficit_value: Optional[int] = None,
) -> Iterator[Dict[Cell, float]]:
    """Semistandard fillings with the given multiset of (numeric) values.

    Values that are not positive integers are exempt from ballot pruning.
    Every suffix must satisfy ``#v <= #(v-1)``, except that for
    ``v == deficit_value`` an excess of one is tolerated.
    """
    cells = list(reversed(shape.reading_cells()))
    remaining = dict(counts)
    seen: Dict[int, int] = {}
    filled: Dict[Cell, float] = {}
    values = sorted(remaining)

    def rec(k: int) -> Iterator[Dict[Cell, float]]:
        if k == len(cells):
            yield dict(filled)
            return
        r, c = cells[k]
        upper = filled.get((r, c + 1))
        lower = filled.get((r - 1, c))
        for v in values:
            if not remaining[v]:
                continue
            if upper is not None and v > upper:
                break
            if lower is not None and v <= lower:
                continue
            ballot = isinstance(v, int) and v >= 1
            if ballot and v > 1:
                slack = 1 if v == deficit_value else 0
                if seen.get(v, 0) + 1 > seen.get(v - 1, 0) + slack:
                    continue
            remaining[v] -= 1
            if ballot:
                seen[v] = seen.get(v, 0) + 1
            filled[(r, c)] = v
            yield from rec(k + 1)
            del filled[(r, c)]
            if ballot:
                seen[v] -= 1
            remaining[v] += 1

    yield from rec(0)


def enumerate_stage(alpha, beta, gamma, rect: Rectangle, stage: int) -> List[PuncturedTableau]:
    """Ballot fillings of the shape by ``beta`` plus a BOX at the given stage, sorted."""
    shape = validate_triple(alpha, beta, gamma, rect)
    beta = Partition(beta)
    if not 1 <= stage <= len(beta) + 1:
        raise ValueError(f"stage must lie in 1..{len(beta) + 1}")
    box = stage - 0.5
    counts: Dict[float, int] = {i: b for i, b in enumerate(beta, start=1)}
    counts[box] = 1
    out = []
    for filling in _fillings(shape, counts):
        entries = {cell: (BOX if v == box else int(v)) for cell, v in filling.items()}
        out.append(PuncturedTableau(SkewTableau.from_dict(shape, entries), stage))
    out.sort(key=PuncturedTableau.sort_key)
    return out


def enumerate_box_first(alpha, beta, gamma, rect: Rectangle) -> List[PuncturedTableau]:
    """All tableaux with the BOX before the strip of 1's, in canonical order."""
    return enumerate_stage(alpha, beta, gamma, rect, 1)


def enumerate_box_last(alpha, beta, gamma, rect: Rectangle) -> List[PuncturedTableau]:
    """All tableaux with the BOX after the last strip, in canonical order."""
    return enumerate_stage(alpha, beta, gamma, rect, len(Partition(beta)) + 1)


def _adjacent(a: Cell, b: Cell) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def _ballot_prefix_ok(word: Sequence[int]) -> List[bool]:
    """``ok[k]`` tells whether the suffix ``word[k:]`` is ballot."""
    ok = [True] * (len(word) + 1)
    seen: Dict[int, int] = {}
    good = True
    for k in range(len(word) - 1, -1, -1):
        v = word[k]
        seen[v] = seen.get(v, 0) + 1
        if v > 1 and seen[v] > seen.get(v - 1, 0):
            good = False
        ok[k] = good
    return ok


def _marked_pairs(shape: SkewShape, filling: Dict[Cell, int], i: int) -> Iterator[Tuple[Cell, Cell]]:
    order = shape.reading_cells()
    word = [filling[c] for c in order]
    positions = [k for k, v in enumerate(word) if v == i]
    for a, b in zip(positions, positions[1:]):
        ca, cb = order[a], order[b]
        if _adjacent(ca, cb):
            continue
        if all(_is_ballot_without(word, k) for k in (a, b)):
            yield ca, cb


def _is_ballot_without(word: Sequence[int], k: int) -> bool:
    return _ballot_prefix_ok(list(word[:k]) + list(word[k + 1:]))[0]


def enumerate_genomic(alpha, beta, gamma, rect: Rectangle) -> Dict[int, List[GenomicTableau]]:
    """Genomic tableaux grouped by the gene family holding the repeated gene.

    A base filling of content ``beta + e_i`` qualifies with a marked pair of
    non-adjacent ``i``'s, consecutive among the ``i``'s in reading order, when
    deleting either one leaves a ballot word.
    """
    shape = validate_triple(alpha, beta, gamma, rect)
    beta = Partition(beta)
    out: Dict[int, List[GenomicTableau]] = {}
    for i in range(1, len(beta) + 1):
        counts = {j: b for j, b in enumerate(beta, start=1)}
        counts[i] += 1
        found = []
        for filling in _fillings(shape, counts, deficit_value=i):
            ints = {cell: int(v) for cell, v in filling.items()}
            base = None
            for a, b in _marked_pairs(shape, ints, i):
                if base is None:
                    base = SkewTableau.from_dict(shape, ints)
                found.append(GenomicTableau(base, frozenset((a, b)), i))
        found.sort(key=GenomicTableau.key)
        out[i] = found
    return out


def count_genomic(alpha, beta, gamma, rect: Rectangle) -> int:
    return sum(len(v) for v in enumerate_genomic(alpha, beta, gamma, rect).values())


def enumerate_pieri_strips(shape: SkewShape, max_content: int) -> List[SkewTableau]:
    """Fillings of a horizontal strip whose reading word is ``1..max_content`` weakly increasing.

    Every value appears, and each row is strictly increasing.
    """
    if not shape.is_horizontal_strip():
        raise ValueError("Pieri strips live on horizontal strips")
    order = shape.reading_cells()
    out: List[SkewTableau] = []
    word: List[int] = []

    def rec(k: int) -> None:
        if k == len(order):
            if word and word[-1] == max_content or (not word and max_content == 0):
                out.append(SkewTableau.from_dict(shape, dict(zip(order, word))))
            return
        prev = word[-1] if word else 1
        r, c = order[k]
        for v in (prev, prev + 1) if word else (1,):
            if v > max_content:
                continue
            if (r, c - 1) in shape and word and order[k - 1] == (r, c - 1) and word[-1] >= v:
                continue
            word.append(v)
            rec(k + 1)
            word.pop()

    rec(0)
    return out


# -- named families --------------------------------------------------------


def staircase_family(t: int) -> Triple:
    """Staircase inner and outer shapes with ``beta = (t+1, 2, 1^(t-2))``."""
    if t < 3:
        raise ValueError(f"the staircase family needs t >= 3, got {t}")
    stair = Partition(range(t, 0, -1))
    beta = Partition([t + 1, 2] + [1] * (t - 2))
    return stair, beta, stair, Rectangle(t + 1, t + 2)


def many_components_family(m: int) -> Triple:
    """Hook ``beta = (m, 1, 1)`` filling a shape that contains a 2x2 square."""
    if m < 2:
        raise ValueError(f"the many-components family needs m >= 2, got {m}")
    rect = Rectangle(m + 1, m + 1)
    alpha = Partition(range(m, 1, -1))
    outer = Partition(list(range(m + 1, 1, -1)) + [2])
    return alpha, Partition((m, 1, 1)), complement(outer, rect), rect


__all__ = [
    "count_genomic",
    "enumerate_box_first",
    "enumerate_box_last",
    "enumerate_genomic",
    "enumerate_pieri_strips",
    "enumerate_stage",
    "many_components_family",
    "staircase_family",
    "validate_triple",
]
