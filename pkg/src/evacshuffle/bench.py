"""Compare local evacuation-shuffling with the rectification oracle on the staircase family."""

from __future__ import annotations

import statistics
import time
from dataclasses import asdict, dataclass
from typing import Iterable, List

from .enumeration import enumerate_box_first, staircase_family
from .jdt import esh_oracle_with_cost
from .local import local_esh


@dataclass(frozen=True)
class BenchRow:
    t: int
    lr_count: int
    alpha_size: int
    b: int
    local_moves_max: int
    local_moves_mean: float
    oracle_steps_mean: float
    step_ratio: float
    local_seconds: float
    oracle_seconds: float

    @property
    def time_ratio(self) -> float:
        return self.oracle_seconds / self.local_seconds if self.local_seconds else float("inf")

    def to_json(self) -> dict:
        out = asdict(self)
        out["time_ratio"] = self.time_ratio
        return out


def _median_time(fn, items, repeats: int) -> float:
    samples = []
    for _ in range(repeats):
        for pt in items:
            start = time.perf_counter()
            fn(pt)
            samples.append(time.perf_counter() - start)
    return statistics.median(samples) if samples else 0.0


def bench_staircase(ts: Iterable[int], repeats: int = 1) -> List[BenchRow]:
    """Step counters and median per-call times over the full box-first set for each ``t``.

    The step counters are deterministic: local moves for the local algorithm
    and individual entry moves for the oracle.
    """
    rows = []
    for t in ts:
        alpha, beta, gamma, rect = staircase_family(t)
        items = enumerate_box_first(alpha, beta, gamma, rect)
        moves = [local_esh(pt, trace=False)[1].move_count for pt in items]
        steps = [esh_oracle_with_cost(pt)[1] for pt in items]
        local_mean = statistics.fmean(moves)
        oracle_mean = statistics.fmean(steps)
        rows.append(
            BenchRow(
                t=t,
                lr_count=len(items),
                alpha_size=alpha.size,
                b=len(beta) + beta[0],
                local_moves_max=max(moves),
                local_moves_mean=local_mean,
                oracle_steps_mean=oracle_mean,
                step_ratio=oracle_mean / local_mean,
                local_seconds=_median_time(lambda pt: local_esh(pt, trace=False), items, repeats),
                oracle_seconds=_median_time(esh_oracle_with_cost, items, repeats),
            )
        )
    return rows
