"""Report rendering: per-fixed-point contribution ledger as delimited output
plus matplotlib figures, written next to each other in an output directory."""

import csv
import os
from fractions import Fraction

from .fixed_points import enumerate_fixed_points
from .localization import MAX_RESAMPLE_ATTEMPTS, contribution
from .errors import ResampleExhausted, ZeroDenominator
from .weights import sample_weights

__all__ = ["contribution_ledger", "write_report"]


def contribution_ledger(problem, seed=0):
    """Per-fixed-point contributions at the first admissible sample.

    Returns (sample, rows); each row is (chain, a, b, contribution).
    """
    n = problem.shape.n
    for attempt in range(MAX_RESAMPLE_ATTEMPTS):
        w = sample_weights(n, seed, attempt)
        rows = []
        try:
            for fp in enumerate_fixed_points(problem.shape, problem.degrees):
                rows.append((fp.chain, fp.a, fp.b, contribution(fp, problem, w)))
        except ZeroDenominator:
            continue
        return w, rows
    raise ResampleExhausted(
        f"no admissible sample after {MAX_RESAMPLE_ATTEMPTS} attempts"
    )


def _fmt_matrix(rows):
    return "|".join(
        ",".join(f"{j}:{row[j]}" for j in sorted(row)) for row in rows
    )


def write_report(problem, outdir, seed=0):
    """Write contributions.csv and two PNG figures under ``outdir``.

    Returns the paths written.  The CSV carries exact values; the figures
    necessarily use floating point, for display only.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(outdir, exist_ok=True)
    w, rows = contribution_ledger(problem, seed=seed)

    csv_path = os.path.join(outdir, "contributions.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "chain", "a", "b", "contribution"])
        for idx, (chain, a, b, value) in enumerate(rows):
            writer.writerow([
                idx,
                "|".join(",".join(map(str, J)) for J in chain),
                _fmt_matrix(a),
                _fmt_matrix(b),
                str(value),
            ])

    values = [float(v) for _, _, _, v in rows]
    total = sum((v for _, _, _, v in rows), Fraction(0))

    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(range(len(values)), values, color="steelblue")
    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_xlabel("fixed point index")
    ax.set_ylabel("contribution")
    ax.set_title(f"localization terms (total = {total})")
    bar_path = os.path.join(outdir, "contributions.png")
    fig.tight_layout()
    fig.savefig(bar_path, dpi=150)
    plt.close(fig)

    running = []
    acc = Fraction(0)
    for _, _, _, v in rows:
        acc += v
        running.append(float(acc))
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(range(1, len(running) + 1), running, marker="o", ms=3)
    ax.axhline(float(total), color="gray", linestyle="--", linewidth=0.8)
    ax.set_xlabel("fixed points summed")
    ax.set_ylabel("partial sum")
    ax.set_title("running localization sum")
    run_path = os.path.join(outdir, "running_sum.png")
    fig.tight_layout()
    fig.savefig(run_path, dpi=150)
    plt.close(fig)

    return {"csv": csv_path, "bars": bar_path, "running": run_path}
