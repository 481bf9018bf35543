"""Report rendering: delimited sweep data and figures on disk.

The CSV holds one row per sweep instance with exact fraction text; the
figures are a float rendering of the same data for eyeballing the families.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .linalg import format_rational
from .verify import VerifyReport


def write_csv(report: VerifyReport, path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "instance", "computed", "expected", "status"])
        for check in report.checks:
            for row in check.rows:
                writer.writerow(
                    [
                        check.name,
                        row.instance,
                        format_rational(row.computed),
                        format_rational(row.expected),
                        "pass" if row.ok else "fail",
                    ]
                )
    return path


def _check(report: VerifyReport, name: str):
    for check in report.checks:
        if check.name == name:
            return check
    return None


def _lens_families_figure(report: VerifyReport, path: Path) -> bool:
    t2 = _check(report, "quadratic-family-lens")
    t3 = _check(report, "twist-family-lens")
    if t2 is None and t3 is None:
        return False
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6))
    if t2 is not None:
        rs = [row.params[0] for row in t2.rows]
        values = [float(row.computed) for row in t2.rows]
        axes[0].plot(rs, values, "o-", markersize=3)
        axes[0].set_xlabel("r")
        axes[0].set_ylabel("lambda(L(r^2+1, r))")
        axes[0].set_title("one-parameter family (identically zero)")
    if t3 is not None:
        by_b: dict[int, list[tuple[int, float]]] = {}
        for row in t3.rows:
            n, b = row.params
            by_b.setdefault(b, []).append((n, float(row.computed)))
        for b, points in sorted(by_b.items()):
            points.sort()
            axes[1].plot(
                [n for n, _ in points], [v for _, v in points], "o-", markersize=3, label=f"b={b}"
            )
        axes[1].set_xlabel("n")
        axes[1].set_ylabel("lambda = b^2 (n^3 - n) / 12")
        axes[1].set_title("twist family lens spaces")
        axes[1].legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return True


def _dedekind_figure(report: VerifyReport, path: Path) -> bool:
    c1 = _check(report, "quadratic-family-dedekind")
    c2 = _check(report, "twist-family-dedekind")
    if c1 is None and c2 is None:
        return False
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6))
    if c1 is not None:
        rs = [row.params[0] for row in c1.rows]
        values = [float(row.computed) for row in c1.rows]
        axes[0].plot(rs, values, "o-", markersize=3)
        axes[0].set_xlabel("r")
        axes[0].set_ylabel("s(r^2+1, r)")
        axes[0].set_title("Dedekind sums, quadratic family")
    if c2 is not None:
        by_b: dict[int, list[tuple[int, float]]] = {}
        for row in c2.rows:
            n, b = row.params
            by_b.setdefault(b, []).append((n, float(row.computed)))
        for b, points in sorted(by_b.items()):
            points.sort()
            axes[1].plot(
                [n for n, _ in points], [v for _, v in points], "o-", markersize=3, label=f"b={b}"
            )
        axes[1].set_xlabel("n")
        axes[1].set_ylabel("s(2n^2b^2+2nb+1, 2nb^2)")
        axes[1].set_title("Dedekind sums, twist family")
        axes[1].legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return True


def _calibration_figure(report: VerifyReport, path: Path) -> bool:
    cal = _check(report, "lens-calibration")
    if cal is None:
        return False
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = [row.params[0] / row.params[1] for row in cal.rows]
    ys = [float(row.computed) for row in cal.rows]
    ax.plot(xs, ys, ".", markersize=4)
    ax.set_xlabel("surgery coefficient p/q")
    ax.set_ylabel("lambda(L(p, q))")
    ax.set_title("lens space invariants over coprime pairs")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return True


def write_figures(report: VerifyReport, outdir) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, renderer in [
        ("lens_families.png", _lens_families_figure),
        ("dedekind_sums.png", _dedekind_figure),
        ("lens_calibration.png", _calibration_figure),
    ]:
        path = outdir / name
        if renderer(report, path):
            written.append(path)
    return written


def write_report(report: VerifyReport, outdir) -> list[Path]:
    """Write sweeps.csv plus all figures into ``outdir``; returns the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [write_csv(report, outdir / "sweeps.csv")]
    written.extend(write_figures(report, outdir))
    return written
