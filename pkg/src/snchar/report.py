"""Report rendering: delimited output plus figures for the positivity report
and the verification suite.

Figures go through the Agg backend so the CLI can run headless; every file is
written under the caller's output directory.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .stanley import PositivityRow
from .verify import VerifyResult

CHECK_ORDER = ("full", "top", "k-1", "k-3", "gamma")
CHECK_LABELS = {
    "full": "all degrees",
    "top": "degree k+1",
    "k-1": "degree k-1",
    "k-3": "degree k-3",
    "gamma": "gamma expansion",
}


def write_positivity_csv(rows: list[PositivityRow], path: Path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["k", "m", "check", "positive", "consistent",
                         "monomials", "min_coeff", "witness", "detail"])
        for row in rows:
            for check in row.checks:
                writer.writerow([
                    row.k, row.m, check.name,
                    "yes" if check.positive else "no",
                    "yes" if check.consistent else "no",
                    check.monomials,
                    "" if check.min_coeff is None else str(check.min_coeff),
                    check.witness or "",
                    check.detail,
                ])
    return path


def render_positivity_figures(rows: list[PositivityRow], outdir: Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    ks = [row.k for row in rows]
    grid = []
    for name in CHECK_ORDER:
        line = []
        for row in rows:
            match = next((c for c in row.checks if c.name == name), None)
            if match is None:
                line.append(0.5)  # not applicable at this k
            else:
                line.append(1.0 if match.ok else 0.0)
        grid.append(line)

    fig, ax = plt.subplots(figsize=(1.2 + 0.6 * len(ks), 3.2))
    ax.imshow(grid, cmap="RdYlGn", vmin=0.0, vmax=1.0, aspect="auto")
    ax.set_xticks(range(len(ks)), [str(k) for k in ks])
    ax.set_yticks(range(len(CHECK_ORDER)), [CHECK_LABELS[c] for c in CHECK_ORDER])
    ax.set_xlabel("k")
    m = rows[0].m if rows else 0
    ax.set_title(f"positivity of $(-1)^k F_k(\\mathbf{{p}}; -\\mathbf{{q}})$, m = {m}")
    for i in range(len(CHECK_ORDER)):
        for j in range(len(ks)):
            value = grid[i][j]
            text = "ok" if value == 1.0 else ("-" if value == 0.5 else "FAIL")
            ax.text(j, i, text, ha="center", va="center", fontsize=8)
    fig.tight_layout()
    status_path = outdir / "positivity_status.png"
    fig.savefig(status_path, dpi=150)
    plt.close(fig)
    written.append(status_path)

    counts = []
    mins = []
    for row in rows:
        full = next((c for c in row.checks if c.name == "full"), None)
        counts.append(full.monomials if full else 0)
        mins.append(float(full.min_coeff) if full and full.min_coeff is not None else 0.0)
    fig, ax = plt.subplots(figsize=(1.2 + 0.6 * len(ks), 3.2))
    ax.bar([str(k) for k in ks], counts, color="steelblue")
    ax.set_xlabel("k")
    ax.set_ylabel("monomials in $(-1)^k F_k(\\mathbf{p}; -\\mathbf{q})$")
    if max(counts, default=0) > 50:
        ax.set_yscale("log")
    ax2 = ax.twinx()
    ax2.plot([str(k) for k in ks], mins, "o-", color="darkorange")
    ax2.set_ylabel("smallest coefficient", color="darkorange")
    ax.set_title(f"monomial growth, m = {rows[0].m if rows else 0}")
    fig.tight_layout()
    growth_path = outdir / "positivity_monomials.png"
    fig.savefig(growth_path, dpi=150)
    plt.close(fig)
    written.append(growth_path)
    return written


def write_positivity_report(rows: list[PositivityRow], outdir: Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [write_positivity_csv(rows, outdir / "positivity.csv")]
    written.extend(render_positivity_figures(rows, outdir))
    return written


def write_verify_csv(results: list[VerifyResult], path: Path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["index", "item", "statement", "status", "detail"])
        for r in results:
            writer.writerow([r.index, r.name, r.statement,
                             "pass" if r.ok else "fail", r.detail])
    return path


def render_verify_figure(results: list[VerifyResult], outdir: Path) -> Path:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    names = [r.name for r in results]
    values = [1 if r.ok else 0 for r in results]
    colors = ["seagreen" if v else "firebrick" for v in values]
    fig, ax = plt.subplots(figsize=(7, 0.28 * len(names) + 1.2))
    ax.barh(range(len(names)), [1] * len(names), color=colors)
    ax.set_yticks(range(len(names)), names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xticks([])
    ax.set_title(f"verification suite: {sum(values)}/{len(values)} items pass")
    fig.tight_layout()
    path = outdir / "verify_status.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_verify_report(results: list[VerifyResult], outdir: Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    return [write_verify_csv(results, outdir / "verify.csv"),
            render_verify_figure(results, outdir)]
