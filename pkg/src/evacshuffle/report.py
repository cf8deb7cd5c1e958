"""JSON documents, tab-separated tables and matplotlib figures for the command line."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle as Patch  # noqa: E402

from .bench import BenchRow
from .local import EvacuShufflePath
from .monodromy import CurveInvariants, OrbitReport, OrbitVerdict
from .punctured import PuncturedTableau
from .tableau import BOX, Rectangle, SkewTableau, format_rows

FORMAT_VERSION = 1


def document(kind: str, **fields) -> dict:
    return {"format": FORMAT_VERSION, "kind": kind, **fields}


def triple_json(alpha, beta, gamma, rect: Rectangle) -> dict:
    return {"alpha": list(alpha), "beta": list(beta), "gamma": list(gamma), "rect": [rect.rows, rect.cols]}


def orbit_report_json(report: OrbitReport) -> dict:
    return document(
        "orbits",
        **triple_json(report.alpha, report.beta, report.gamma, report.rect),
        ordering=[pt.to_json() for pt in report.ordering],
        permutation=list(report.permutation),
        cycles=[list(c) for c in report.cycles],
        fixed_points=list(report.fixed_points),
        orbits=[
            {
                "size": o.size,
                "members": list(o.members),
                "k1": [g.to_json() for g in o.k1],
                "k2": [g.to_json() for g in o.k2],
            }
            for o in report.orbits
        ],
    )


def tsv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(_fmt(v) for v in row))
    return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.4g}"
    return str(v)


def orbit_table(report: OrbitReport) -> str:
    return tsv(("orbit_size", "K1", "K2"), report.table())


def verdict_table(verdicts: Sequence[OrbitVerdict]) -> str:
    rows = [(v.size, v.k1, v.k2, v.k1_ok, v.k2_ok, v.sum_strict_ok) for v in verdicts]
    return tsv(("orbit_size", "K1", "K2", "K1_ok", "K2_ok", "sum_strict_ok"), rows)


def invariants_table(inv: CurveInvariants) -> str:
    data = inv.to_json()
    data["k_by_family"] = ",".join(str(k) for k in inv.k_by_family)
    return tsv(("field", "value"), data.items())


def bench_table(rows: Sequence[BenchRow]) -> str:
    header = (
        "t", "lr_count", "alpha_size", "b", "local_moves_max", "local_moves_mean",
        "oracle_steps_mean", "step_ratio", "local_seconds", "oracle_seconds", "time_ratio",
    )
    body = [
        (r.t, r.lr_count, r.alpha_size, r.b, r.local_moves_max, r.local_moves_mean,
         r.oracle_steps_mean, r.step_ratio, r.local_seconds, r.oracle_seconds, r.time_ratio)
        for r in rows
    ]
    return tsv(header, body)


# -- figures ---------------------------------------------------------------


def _draw_tableau(ax, T: SkewTableau, rect: Optional[Rectangle]) -> None:
    rows = rect.rows if rect else len(T.shape.outer)
    cols = rect.cols if rect else max(T.shape.outer, default=0)
    for r in range(1, rows + 1):
        for c in range(1, cols + 1):
            inside = (r, c) in T.shape
            inner = c <= T.shape.inner.part(r)
            face = "white" if inside else ("#e6e6e6" if inner else "none")
            edge = "black" if inside else "#bbbbbb"
            ax.add_patch(Patch((c - 1, r - 1), 1, 1, facecolor=face, edgecolor=edge, linewidth=0.8))
    ax.set_xlim(-0.1, cols + 0.1)
    ax.set_ylim(rows + 0.1, -0.1)
    ax.set_aspect("equal")
    ax.axis("off")


def path_figure(start: PuncturedTableau, path: EvacuShufflePath, out: Path, rect: Optional[Rectangle] = None) -> Path:
    """Grid diagram of the BOX's path: first cell black, last gray, transition starred."""
    T = start.tableau
    fig, ax = plt.subplots(figsize=(0.5 * (rect.cols if rect else max(T.shape.outer)) + 1, 0.5 * (rect.rows if rect else len(T.shape.outer)) + 1))
    _draw_tableau(ax, T, rect)
    first, last = path.cells[0], path.cells[-1]
    ax.add_patch(Patch((last[1] - 1, last[0] - 1), 1, 1, facecolor="#9a9a9a", edgecolor="black"))
    ax.add_patch(Patch((first[1] - 1, first[0] - 1), 1, 1, facecolor="black", edgecolor="black"))
    for cell, e in T.items():
        if e is BOX or cell in (first, last):
            continue
        ax.text(cell[1] - 0.5, cell[0] - 0.5, str(e), ha="center", va="center", fontsize=9)
    xs = [c - 0.5 for _, c in path.cells]
    ys = [r - 0.5 for r, _ in path.cells]
    ax.plot(xs, ys, color="tab:red", linewidth=1.5, marker="o", markersize=3)
    ones = sum(1 for m in path.moves if m.kind in ("Vert", "Pieri"))
    pivot = path.cells[ones]
    if len(path.cells) > 1 and ones < len(path.cells) - 1:
        ax.plot([pivot[1] - 0.5], [pivot[0] - 0.5], marker="*", color="gold", markersize=14, markeredgecolor="black")
    ax.set_title(f"transition step s = {path.transition_step}", fontsize=9)
    fig.tight_layout()
    fig.savefig(out, format=Path(out).suffix.lstrip(".") or "svg")
    plt.close(fig)
    return Path(out)


def orbit_figure(report: OrbitReport, out: Path) -> Path:
    rows = report.table()
    fig, ax = plt.subplots(figsize=(max(3.0, 0.9 * len(rows) + 2), 3))
    xs = range(len(rows))
    width = 0.27
    ax.bar([x - width for x in xs], [r[0] - 1 for r in rows], width, label="|O| - 1", color="#555555")
    ax.bar(list(xs), [r[1] for r in rows], width, label="K1", color="tab:blue")
    ax.bar([x + width for x in xs], [r[2] for r in rows], width, label="K2", color="tab:orange")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([str(r[0]) for r in rows])
    ax.set_xlabel("orbit size")
    ax.set_ylabel("count")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out, format=Path(out).suffix.lstrip(".") or "svg")
    plt.close(fig)
    return Path(out)


def bench_figure(rows: Sequence[BenchRow], out: Path) -> Path:
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    ts = [r.t for r in rows]
    ax.plot(ts, [r.local_moves_mean for r in rows], marker="o", label="local moves (mean)")
    ax.plot(ts, [r.oracle_steps_mean for r in rows], marker="s", label="oracle slide steps (mean)")
    ax.plot(ts, [r.b for r in rows], linestyle="--", color="gray", label="l(beta) + beta_1")
    ax.set_xlabel("staircase t")
    ax.set_ylabel("steps per call")
    ax.set_yscale("log")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out, format=Path(out).suffix.lstrip(".") or "svg")
    plt.close(fig)
    return Path(out)


def trace_text(start: PuncturedTableau, end: PuncturedTableau, path: EvacuShufflePath) -> List[str]:
    lines = ["input:"] + ["  " + row for row in start.rows()]
    for m in path.moves:
        lines.append(f"{m.kind}{m.index} [{m.value}] {m.from_cell} -> {m.to_cell}")
        if m.after is not None:
            lines.extend("  " + row for row in format_rows(m.after))
    lines.append("output:")
    lines.extend("  " + row for row in end.rows())
    lines.append(f"transition_step\t{path.transition_step}")
    lines.append(f"path\t{' '.join(f'({r},{c})' for r, c in path.cells)}")
    return lines

