"""Sweep verification: closed-form families checked against the surgery formula.

Each check sweeps a parameter family, comparing two independently computed
exact values per instance.  The report records every instance, so failures
name their first counterexample and the full data can be exported or
plotted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from . import dedekind
from .lens import ChainPresentation, LensSpace, chain_lens_space, lens_lambda, twist_chain, chain_to_lens
from .linalg import format_rational
from .links import chain, hopf, make_link, unknot
from .moves import mirror_lambda, tn_path
from .surgery import lescop_lambda


@dataclass(frozen=True)
class SweepRow:
    instance: str
    params: tuple
    computed: Fraction
    expected: Fraction

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


@dataclass
class SweepCheck:
    name: str
    description: str
    rows: list[SweepRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def failures(self) -> list[SweepRow]:
        return [row for row in self.rows if not row.ok]

    def first_failure(self) -> SweepRow | None:
        for row in self.rows:
            if not row.ok:
                return row
        return None

    def summary(self) -> str:
        if self.passed:
            return f"PASS {self.name}: {self.description} ({len(self.rows)} instances)"
        first = self.first_failure()
        return (
            f"FAIL {self.name}: {self.description} "
            f"({len(self.rows)} instances, {len(self.failures)} failures; "
            f"first {first.instance}: computed {format_rational(first.computed)}, "
            f"expected {format_rational(first.expected)})"
        )


@dataclass
class VerifyReport:
    checks: list[SweepCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_text(self) -> str:
        lines = [check.summary() for check in self.checks]
        total = sum(len(check.rows) for check in self.checks)
        failed = [check.name for check in self.checks if not check.passed]
        if failed:
            lines.append(
                f"verification: FAIL ({len(self.checks)} checks, {total} instances; "
                f"failing: {', '.join(failed)})"
            )
        else:
            lines.append(f"verification: PASS ({len(self.checks)} checks, {total} instances)")
        return "\n".join(lines)


def _coprime_pairs(bound: int):
    for p in range(1, bound + 1):
        for q in range(1, p + 1):
            if gcd(p, q) == 1 and (q < p or p == 1):
                yield p, q


def run_verification(max_r: int = 50, max_nb: int = 8) -> VerifyReport:
    """Run every sweep; bounds control the two closed-form families."""
    if max_r < 1 or max_nb < 1:
        raise ValueError("sweep bounds must be >= 1")
    checks = []

    rows = []
    for r in range(1, max_r + 1):
        rows.append(
            SweepRow(
                instance=f"r={r}",
                params=(r,),
                computed=lens_lambda(LensSpace(r * r + 1, r)),
                expected=Fraction(0),
            )
        )
    checks.append(SweepCheck("quadratic-family-lens", "lambda(L(r^2+1, r)) = 0", rows))

    rows = []
    for r in range(1, min(max_r, 30) + 1):
        rows.append(
            SweepRow(
                instance=f"r={r}",
                params=(r,),
                computed=lescop_lambda(hopf(r, -r)),
                expected=Fraction(0),
            )
        )
    checks.append(
        SweepCheck("quadratic-family-surgery", "surgery formula on the (r, -r) Hopf link vanishes", rows)
    )

    rows = []
    for r in range(1, max_r + 1):
        rows.append(
            SweepRow(
                instance=f"r={r}",
                params=(r,),
                computed=dedekind.dedekind_sum(r * r + 1, r),
                expected=Fraction(r * r - 3 * r + 2, 12 * r),
            )
        )
    checks.append(
        SweepCheck("quadratic-family-dedekind", "s(r^2+1, r) = (r^2-3r+2)/12r", rows)
    )

    lens_rows, mirror_rows, chain_rows, cor2_rows = [], [], [], []
    for n, b in product(range(1, max_nb + 1), repeat=2):
        p = 2 * n * n * b * b + 2 * n * b + 1
        q = 2 * n * b * b
        closed_form = Fraction(b * b * (n**3 - n), 12)
        label = f"n={n},b={b}"
        lens_rows.append(
            SweepRow(label, (n, b), lens_lambda(LensSpace(p, q)), closed_form)
        )
        mirror_rows.append(
            SweepRow(
                label,
                (n, b),
                mirror_lambda(tn_path(n, Fraction(n * b + 1, b))),
                closed_form,
            )
        )
        cp, cq = chain_to_lens(twist_chain(n, b))
        chain_rows.append(SweepRow(label, (n, b), Fraction(cp, cq), Fraction(p, q)))
        cor2_rows.append(
            SweepRow(
                label,
                (n, b),
                dedekind.dedekind_sum(p, q),
                Fraction(2 * n * n * b * b - 3 * n * b * b + 1, 12 * n * b * b),
            )
        )
    checks.append(
        SweepCheck("twist-family-lens", "lambda(L(2n^2b^2+2nb+1, 2nb^2)) = b^2(n^3-n)/12", lens_rows)
    )
    checks.append(
        SweepCheck("twist-family-mirror", "crossing-change mirror solver matches the closed form", mirror_rows)
    )
    checks.append(
        SweepCheck("twist-family-chain", "twist chain continued fraction hits the lens pair", chain_rows)
    )
    checks.append(
        SweepCheck(
            "twist-family-dedekind", "s(2n^2b^2+2nb+1, 2nb^2) = (2n^2b^2-3nb^2+1)/12nb^2", cor2_rows
        )
    )

    rows = []
    for p in range(2, 31):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            rows.append(
                SweepRow(
                    instance=f"p={p},q={q}",
                    params=(p, q),
                    computed=lescop_lambda(unknot(Fraction(p, q))),
                    expected=lens_lambda(LensSpace(p, q)),
                )
            )
    checks.append(
        SweepCheck("lens-calibration", "surgery formula on the unknot matches the lens closed form", rows)
    )

    rows = []
    for length in (1, 2, 3):
        for coeffs in product(range(2, 7), repeat=length):
            space = chain_lens_space(ChainPresentation(coeffs))
            rows.append(
                SweepRow(
                    instance="chain(" + ",".join(map(str, coeffs)) + ")",
                    params=coeffs,
                    computed=lescop_lambda(chain(coeffs)),
                    expected=lens_lambda(space),
                )
            )
    checks.append(
        SweepCheck("chain-agreement", "surgery formula on chains matches their lens spaces", rows)
    )

    rows = []
    pairs = list(_coprime_pairs(12))
    for p1, q1 in pairs:
        for p2, q2 in pairs:
            link = make_link([Fraction(p1, q1), Fraction(p2, q2)])
            expected = p2 * lens_lambda(LensSpace(p1, q1)) + p1 * lens_lambda(
                LensSpace(p2, q2)
            )
            rows.append(
                SweepRow(
                    instance=f"{p1}/{q1}+{p2}/{q2}",
                    params=(p1, q1, p2, q2),
                    computed=lescop_lambda(link),
                    expected=expected,
                )
            )
    checks.append(
        SweepCheck("connected-sum", "split unions add with homology-order weights", rows)
    )

    return VerifyReport(checks)
