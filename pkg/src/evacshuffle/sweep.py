"""Exhaustive verification over every triple in small rectangles."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .enumeration import enumerate_box_first, enumerate_box_last, enumerate_genomic, enumerate_stage
from .jdt import esh_by_shuffles, esh_oracle, rotate_transpose_highest_weight, sh, transpose_class
from .local import (
    CPIERI,
    PIERI,
    check_intermediate,
    local_esh,
    local_esh_default,
    local_esh_reverse,
    step_ell,
    step_sh,
)
from .monodromy import check_conjecture, genomic_from_move, omega_i, orbit_decomposition, permutation_of, _cycles
from .punctured import PuncturedTableau
from .tableau import Partition, Rectangle, complement

CHECKS = (
    "oracle-equivalence",
    "reverse-roundtrip",
    "ballotness",
    "phi-bijections",
    "omega-i",
    "conjecture",
    "antidiagonal",
    "fixed-points",
    "path-shape",
    "transition-duality",
)


@dataclass(frozen=True)
class SweepSpec:
    """Which rectangles and triples to visit and which checks to run."""

    max_n: int = 8
    checks: Tuple[str, ...] = CHECKS
    rect_filter: Optional[Callable[[Rectangle], bool]] = None
    triple_filter: Optional[Callable[[Partition, Partition, Partition, Rectangle], bool]] = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.max_n < 2:
            raise ValueError("max_n must be at least 2")
        if not self.checks:
            raise ValueError("select at least one check")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


@dataclass(frozen=True)
class Failure:
    check: str
    triple: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...], str]
    message: str
    rows: Tuple[str, ...] = ()

    def to_json(self) -> dict:
        a, b, g, r = self.triple
        return {
            "check": self.check,
            "alpha": list(a),
            "beta": list(b),
            "gamma": list(g),
            "rect": r,
            "message": self.message,
            "rows": list(self.rows),
        }


@dataclass
class SweepResult:
    triples: int = 0
    tableaux: int = 0
    checked: Counter = field(default_factory=Counter)
    failures: List[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "SweepResult") -> None:
        self.triples += other.triples
        self.tableaux += other.tableaux
        self.checked.update(other.checked)
        self.failures.extend(other.failures)

    def failures_for(self, check: str) -> List[Failure]:
        return [f for f in self.failures if f.check == check]


def iter_rectangles(max_n: int) -> Iterator[Rectangle]:
    for n in range(2, max_n + 1):
        for rows in range(1, n):
            yield Rectangle(rows, n - rows)


def iter_triples(rect: Rectangle) -> Iterator[Tuple[Partition, Partition, Partition]]:
    """Every (alpha, beta, gamma) in ``rect`` whose sizes add up to one less than the area."""
    parts = list(rect.partitions())
    by_size: Dict[int, List[Partition]] = {}
    for p in parts:
        by_size.setdefault(p.size, []).append(p)
    for alpha in parts:
        for gamma in parts:
            outer = complement(gamma, rect)
            if not outer.contains(alpha):
                continue
            b = rect.size - 1 - alpha.size - gamma.size
            for beta in by_size.get(b, []):
                yield alpha, beta, gamma


def _triple_key(alpha, beta, gamma, rect):
    return (tuple(alpha), tuple(beta), tuple(gamma), str(rect))


def run_triple(alpha, beta, gamma, rect: Rectangle, checks: Sequence[str]) -> SweepResult:
    """Run the selected checks on one triple; stop a check at its first failure."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    res = SweepResult()
    first = enumerate_box_first(alpha, beta, gamma, rect)
    if not first:
        return res
    res.triples = 1
    res.tableaux = len(first)
    key = _triple_key(alpha, beta, gamma, rect)
    t = len(beta)
    failed = set()

    def fail(check: str, message: str, pt: Optional[PuncturedTableau] = None) -> None:
        if check in failed:
            return
        failed.add(check)
        res.failures.append(Failure(check, key, message, tuple(pt.rows()) if pt is not None else ()))

    traces = {pt: local_esh(pt) for pt in first}
    last = enumerate_box_last(alpha, beta, gamma, rect)
    checks = set(checks)

    if "oracle-equivalence" in checks:
        for pt in first:
            out = traces[pt][0]
            if out != esh_oracle(pt):
                fail("oracle-equivalence", "local result differs from rectification oracle", pt)
            elif out != esh_by_shuffles(pt):
                fail("oracle-equivalence", "local result differs from the shuffle-word oracle", pt)
            elif out != local_esh_default(pt):
                fail("oracle-equivalence", "step-by-step and whole-jump results differ", pt)
        res.checked["oracle-equivalence"] += len(first)

    if "reverse-roundtrip" in checks:
        for pt in first:
            if local_esh_reverse(traces[pt][0])[0] != pt:
                fail("reverse-roundtrip", "reverse(local(T)) != T", pt)
        for q in last:
            if local_esh(local_esh_reverse(q)[0])[0] != q:
                fail("reverse-roundtrip", "local(reverse(T)) != T", q)
        if len(first) != len(last):
            fail("reverse-roundtrip", f"{len(first)} box-first vs {len(last)} box-last tableaux")
        res.checked["reverse-roundtrip"] += len(first) + len(last)

    if "ballotness" in checks:
        for pt in first:
            for m in traces[pt][1].moves:
                if not check_intermediate(m.after):
                    fail("ballotness", f"intermediate after {m.kind}{m.index} is not ballot semistandard", pt)
                    break
            if not traces[pt][0].is_valid():
                fail("ballotness", "output is not a valid box-last tableau", pt)
        res.checked["ballotness"] += len(first)

    if "path-shape" in checks:
        b_conj = Partition(beta).transpose()
        for pt in first:
            path = traces[pt][1]
            s = path.transition_step
            one, two = path.phase_one_cells(), path.phase_two_cells()
            if any(b[0] <= a[0] for a, b in zip(one, one[1:])):
                fail("path-shape", "phase-one cells do not descend strictly", pt)
            if any(b[1] <= a[1] for a, b in zip(two, two[1:])):
                fail("path-shape", "phase-two cells do not move strictly right", pt)
            if s <= t:
                if len(path.cells) != s + beta.part(s):
                    fail("path-shape", f"path has {len(path.cells)} cells, expected {s + beta.part(s)}", pt)
                if (s, beta.part(s) + 1) not in beta.cocorners():
                    fail("path-shape", f"transition step {s} is not at an outer co-corner of beta", pt)
            elif len(path.cells) != s:
                fail("path-shape", f"phase one only path has {len(path.cells)} cells, expected {s}", pt)
            if path.move_count > len(beta) + len(b_conj):
                fail("path-shape", "more moves than l(beta) + l(beta*)", pt)
        res.checked["path-shape"] += len(first)

    if "phi-bijections" in checks:
        genomic = enumerate_genomic(alpha, beta, gamma, rect)
        expected = Counter(g.key() for gs in genomic.values() for g in gs)
        for kind, name in ((PIERI, "phase one"), (CPIERI, "phase two")):
            got = Counter(
                genomic_from_move(m).key() for pt in first for m in traces[pt][1].moves if m.kind == kind
            )
            if got != expected:
                missing = sum((expected - got).values())
                extra = sum((got - expected).values())
                fail("phi-bijections", f"{name}: {missing} genomic tableaux missed, {extra} extra or repeated")
        res.checked["phi-bijections"] += len(first)

    if "omega-i" in checks:
        genomic = enumerate_genomic(alpha, beta, gamma, rect)
        index = {pt: k for k, pt in enumerate(first)}
        omega_perm = [index[sh(traces[pt][0])] for pt in first]
        composed = list(range(len(first)))
        for i in range(1, t + 1):
            try:
                perm = permutation_of(first, lambda pt, i=i: omega_i(i, pt))
            except AssertionError as exc:
                fail("omega-i", f"omega_{i}: {exc}")
                break
            composed = [perm[k] for k in composed]
            excess = sum(len(c) - 1 for c in _cycles(perm))
            if excess != len(genomic[i]):
                fail("omega-i", f"omega_{i} orbits give {excess}, family {i} has {len(genomic[i])} genomic tableaux")
        else:
            if composed != omega_perm:
                fail("omega-i", "product of the factors differs from the monodromy")
            ell = first
            for pt in first:
                x = pt
                for i in range(1, t + 1):
                    x = step_ell(i, x)
                if x != traces[pt][0]:
                    fail("omega-i", "composed single steps differ from local_esh", pt)
                for i in range(t, 0, -1):
                    x = step_sh(i, x)
                if x != sh(traces[pt][0]):
                    fail("omega-i", "composed single slides differ from sh", pt)
            for i in range(1, t + 2):
                stage = enumerate_stage(alpha, beta, gamma, rect, i)
                reached = set(ell)
                if len(stage) != len(first) or set(stage) != reached:
                    fail("omega-i", f"intermediate set at stage {i} is not the valid set")
                    break
                ell = [step_ell(i, x) for x in ell] if i <= t else ell
            k = sum(len(v) for v in genomic.values())
            cycles = _cycles(omega_perm)
            rlength = len(first) - len(cycles)
            if k < rlength or (k - rlength) % 2:
                fail("omega-i", f"genomic count {k} vs reflection length {rlength}")
        res.checked["omega-i"] += len(first)

    if "conjecture" in checks:
        report = orbit_decomposition(alpha, beta, gamma, rect)
        for verdict in check_conjecture(alpha, beta, gamma, rect, report):
            if not verdict.passes:
                fail("conjecture", f"orbit size {verdict.size}: K1={verdict.k1}, K2={verdict.k2}",
                     verdict.members[0] if verdict.members else None)
            if not verdict.sum_strict_ok:
                fail("conjecture", f"orbit size {verdict.size}: K1+K2={verdict.k1 + verdict.k2} not strict",
                     verdict.members[0] if verdict.members else None)
        res.checked["conjecture"] += len(report.orbits)

    if "antidiagonal" in checks:
        for pt in first:
            out, path = traces[pt]
            mirror_in = rotate_transpose_highest_weight(out, rect)
            mirror_out, mirror_path = local_esh(mirror_in)
            if rotate_transpose_highest_weight(mirror_out, rect.transpose()) != pt:
                fail("antidiagonal", "rotated-transposed maps do not invert", pt)
            reflected = tuple((rect.cols + 1 - c, rect.rows + 1 - r) for r, c in reversed(path.cells))
            if mirror_path.cells != reflected:
                fail("antidiagonal", "mirrored path is not the antidiagonal reflection", pt)
            if rotate_transpose_highest_weight(mirror_in, rect.transpose()) != out:
                fail("antidiagonal", "rotate-transpose is not an involution", pt)
        res.checked["antidiagonal"] += len(first)

    if "fixed-points" in checks:
        for pt in first:
            out, path = traces[pt]
            fixed = sh(out) == pt
            connected = path.is_connected()
            quiet = not any(m.is_generator for m in path.moves)
            if not fixed == connected == quiet:
                fail("fixed-points", f"fixed={fixed}, connected={connected}, no genomic={quiet}", pt)
        res.checked["fixed-points"] += len(first)

    if "transition-duality" in checks:
        for pt in first:
            s = traces[pt][1].transition_step
            if s <= t:
                dual = local_esh(transpose_class(pt))[1].transition_step
                if dual != beta.part(s) + 1:
                    fail("transition-duality", f"transposed class has s={dual}, expected {beta.part(s) + 1}", pt)
        res.checked["transition-duality"] += len(first)

    return res


def _run_chunk(args) -> SweepResult:
    items, checks = args
    res = SweepResult()
    for alpha, beta, gamma, rect in items:
        res.merge(run_triple(alpha, beta, gamma, rect, checks))
    return res


def sweep_items(spec: SweepSpec) -> List[Tuple[Partition, Partition, Partition, Rectangle]]:
    items = []
    for rect in iter_rectangles(spec.max_n):
        if spec.rect_filter is not None and not spec.rect_filter(rect):
            continue
        for alpha, beta, gamma in iter_triples(rect):
            if spec.triple_filter is None or spec.triple_filter(alpha, beta, gamma, rect):
                items.append((alpha, beta, gamma, rect))
    return items


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Run every selected check on every triple; results merge in triple order."""
    items = sweep_items(spec)
    total = SweepResult()
    if spec.jobs <= 1:
        total.merge(_run_chunk((items, spec.checks)))
        return total
    size = max(1, len(items) // (spec.jobs * 8))
    chunks = [(items[k:k + size], spec.checks) for k in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
        for part in pool.map(_run_chunk, chunks):
            total.merge(part)
    return total


__all__ = ["CHECKS", "Failure", "SweepResult", "SweepSpec", "iter_rectangles", "iter_triples", "run_sweep", "run_triple"]
