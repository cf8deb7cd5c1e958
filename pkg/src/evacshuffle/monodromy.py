"""The monodromy permutation, its orbits and the genomic tableaux its steps generate."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .enumeration import enumerate_box_first, enumerate_genomic, validate_triple
from .jdt import sh
from .local import CPIERI, PIERI, Move, local_esh, step_ell, step_sh, step_sh_inverse
from .punctured import GenomicTableau, PuncturedTableau
from .tableau import BOX, Partition, Rectangle


class InvariantViolation(AssertionError):
    """Raised when a proven identity fails on a concrete input."""


def omega(pt: PuncturedTableau) -> PuncturedTableau:
    """One trip of the BOX to the back by local moves and home again by a slide."""
    return sh(local_esh(pt, trace=False)[0])


def genomic_from_move(move: Move) -> GenomicTableau:
    """The genomic tableau generated by a Pieri or CPieri move.

    The BOX is replaced by the value it swapped with, and the two cells the
    move connects are marked.
    """
    if not move.is_generator:
        raise ValueError(f"{move.kind} moves join adjacent cells and generate nothing")
    if move.after is None:
        raise ValueError("move was recorded without a snapshot")
    base = move.after.replace({move.to_cell: move.value})
    return GenomicTableau(base, frozenset((move.from_cell, move.to_cell)), move.value)


def phi1(pt: PuncturedTableau) -> List[GenomicTableau]:
    """Genomic tableaux from the Pieri moves of the first phase."""
    _, path = local_esh(pt)
    return [genomic_from_move(m) for m in path.moves if m.kind == PIERI]


def phi2(pt: PuncturedTableau) -> List[GenomicTableau]:
    """Genomic tableaux from the CPieri moves of the second phase."""
    _, path = local_esh(pt)
    return [genomic_from_move(m) for m in path.moves if m.kind == CPIERI]


def omega_i(i: int, pt: PuncturedTableau) -> PuncturedTableau:
    """The ``i``-th factor of the monodromy: slide the BOX out to stage ``i``,
    take one local step past the ``i``'s, and slide back through the same strips."""
    t = len(pt.beta)
    if not 1 <= i <= t:
        raise ValueError(f"i must lie in 1..{t}, got {i}")
    if not pt.is_box_first:
        raise ValueError("omega_i expects a box-first tableau")
    x = pt
    for j in range(1, i):
        x = step_sh_inverse(j, x)
    x = step_sh(i, step_ell(i, x))
    for j in range(i - 1, 0, -1):
        x = step_sh(j, x)
    return x


class FixedPointFlags(NamedTuple):
    fixed: bool
    path_connected: bool
    no_genomic: bool

    @property
    def consistent(self) -> bool:
        return self.fixed == self.path_connected == self.no_genomic


def is_fixed_point(pt: PuncturedTableau) -> FixedPointFlags:
    """Three independently computed conditions that should coincide."""
    out, path = local_esh(pt)
    fixed = sh(out) == pt
    return FixedPointFlags(fixed, path.is_connected(), not any(m.is_generator for m in path.moves))


def _cycles(perm: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        k = start
        while not seen[k]:
            seen[k] = True
            cycle.append(k)
            k = perm[k]
        cycles.append(cycle)
    return cycles


def permutation_of(ordering: Sequence[PuncturedTableau], op) -> List[int]:
    index = {pt: k for k, pt in enumerate(ordering)}
    perm = []
    for pt in ordering:
        image = op(pt)
        if image not in index:
            raise InvariantViolation(f"image of\n{pt}\nis not in the enumerated set:\n{image}")
        perm.append(index[image])
    if sorted(perm) != list(range(len(ordering))):
        raise InvariantViolation("operator is not a bijection on the enumerated set")
    return perm


@dataclass(frozen=True)
class OrbitStats:
    members: Tuple[int, ...]
    k1: Tuple[GenomicTableau, ...] = field(repr=False)
    k2: Tuple[GenomicTableau, ...] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OrbitReport:
    """Cycle structure of the monodromy on the canonically ordered box-first set."""

    alpha: Partition
    beta: Partition
    gamma: Partition
    rect: Rectangle
    ordering: Tuple[PuncturedTableau, ...]
    permutation: Tuple[int, ...]
    cycles: Tuple[Tuple[int, ...], ...]
    orbits: Tuple[OrbitStats, ...]

    @property
    def fixed_points(self) -> Tuple[int, ...]:
        return tuple(k for k, v in enumerate(self.permutation) if k == v)

    @property
    def sizes(self) -> List[int]:
        return [o.size for o in self.orbits]

    def table(self) -> List[Tuple[int, int, int]]:
        """Rows of (orbit size, phase-one count, phase-two count), largest orbit first."""
        rows = [(o.size, len(o.k1), len(o.k2)) for o in self.orbits]
        return sorted(rows, key=lambda r: (-r[0], -r[1], -r[2]))


def orbit_decomposition(alpha, beta, gamma, rect: Rectangle) -> OrbitReport:
    """Orbits of the monodromy with the genomic tableaux each orbit generates."""
    validate_triple(alpha, beta, gamma, rect)
    ordering = enumerate_box_first(alpha, beta, gamma, rect)
    index = {pt: k for k, pt in enumerate(ordering)}
    perm: List[int] = []
    k1: List[List[GenomicTableau]] = []
    k2: List[List[GenomicTableau]] = []
    for pt in ordering:
        out, path = local_esh(pt)
        image = sh(out)
        if image not in index:
            raise InvariantViolation(f"monodromy image of\n{pt}\nis not in the enumerated set")
        perm.append(index[image])
        k1.append([genomic_from_move(m) for m in path.moves if m.kind == PIERI])
        k2.append([genomic_from_move(m) for m in path.moves if m.kind == CPIERI])
    if sorted(perm) != list(range(len(ordering))):
        raise InvariantViolation("monodromy is not a bijection")
    cycles = _cycles(perm)
    orbits = tuple(
        OrbitStats(tuple(c), tuple(g for k in c for g in k1[k]), tuple(g for k in c for g in k2[k])) for c in cycles
    )
    return OrbitReport(
        Partition(alpha), Partition(beta), Partition(gamma), rect,
        tuple(ordering), tuple(perm), tuple(tuple(c) for c in cycles), orbits,
    )


@dataclass(frozen=True)
class OrbitVerdict:
    size: int
    k1: int
    k2: int
    members: Tuple[PuncturedTableau, ...] = field(repr=False, default=())

    @property
    def k1_ok(self) -> bool:
        return self.k1 >= self.size - 1

    @property
    def k2_ok(self) -> bool:
        return self.k2 >= self.size - 1

    @property
    def sum_ok(self) -> bool:
        return self.k1 + self.k2 >= self.size - 1

    @property
    def sum_strict_ok(self) -> bool:
        return self.size == 1 or self.k1 + self.k2 > self.size - 1

    @property
    def passes(self) -> bool:
        return self.k1_ok and self.k2_ok

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "k1": self.k1,
            "k2": self.k2,
            "k1_ok": self.k1_ok,
            "k2_ok": self.k2_ok,
            "sum_ok": self.sum_ok,
            "sum_strict_ok": self.sum_strict_ok,
            "members": [pt.rows() for pt in self.members],
        }


def check_conjecture(alpha, beta, gamma, rect: Rectangle, report: Optional[OrbitReport] = None) -> List[OrbitVerdict]:
    """Per orbit: does each phase generate at least ``|orbit| - 1`` genomic tableaux?"""
    if report is None:
        report = orbit_decomposition(alpha, beta, gamma, rect)
    return [
        OrbitVerdict(o.size, len(o.k1), len(o.k2), tuple(report.ordering[k] for k in o.members))
        for o in report.orbits
    ]


@dataclass(frozen=True)
class CurveInvariants:
    lr_count: int
    k_count: int
    k_by_family: Tuple[int, ...]
    chi: int
    rlength: int
    sign: int
    eta: int
    genus: Optional[int]
    half_ramification: int
    two_row_checked: bool = False

    def to_json(self) -> dict:
        out = {
            "lr_count": self.lr_count,
            "k_count": self.k_count,
            "k_by_family": list(self.k_by_family),
            "chi": self.chi,
            "rlength": self.rlength,
            "sign": self.sign,
            "eta": self.eta,
            "half_ramification": self.half_ramification,
            "half_ramification_note": "conditional on smoothness",
            "two_row_checked": self.two_row_checked,
        }
        if self.genus is not None:
            out["genus"] = self.genus
        return out


def curve_invariants(alpha, beta, gamma, rect: Rectangle, report: Optional[OrbitReport] = None) -> CurveInvariants:
    """Counts and topological invariants read off the orbit structure.

    For two-row ``beta`` the per-orbit phase-one bound is asserted.
    """
    if report is None:
        report = orbit_decomposition(alpha, beta, gamma, rect)
    genomic = enumerate_genomic(alpha, beta, gamma, rect)
    by_family = tuple(len(genomic[i]) for i in sorted(genomic))
    lr = len(report.ordering)
    k = sum(by_family)
    eta = len(report.cycles)
    rlength = lr - eta
    two_row = len(Partition(beta)) == 2
    if two_row:
        for verdict in check_conjecture(alpha, beta, gamma, rect, report):
            if not verdict.k1_ok:
                raise InvariantViolation(f"two-row orbit of size {verdict.size} generates only {verdict.k1} in phase one")
    return CurveInvariants(
        lr_count=lr,
        k_count=k,
        k_by_family=by_family,
        chi=lr - k,
        rlength=rlength,
        sign=rlength % 2,
        eta=eta,
        genus=(k - lr + 1) if eta == 1 else None,
        half_ramification=k,
        two_row_checked=two_row,
    )


def omega_i_orbits(i: int, ordering: Sequence[PuncturedTableau]) -> List[List[int]]:
    return _cycles(permutation_of(ordering, lambda pt: omega_i(i, pt)))


__all__ = [
    "CurveInvariants",
    "FixedPointFlags",
    "InvariantViolation",
    "OrbitReport",
    "OrbitStats",
    "OrbitVerdict",
    "check_conjecture",
    "curve_invariants",
    "genomic_from_move",
    "is_fixed_point",
    "omega",
    "omega_i",
    "omega_i_orbits",
    "orbit_decomposition",
    "permutation_of",
    "phi1",
    "phi2",
]
