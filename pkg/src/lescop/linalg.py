"""Exact linear algebra over the rationals.

Every scalar in this package is a ``fractions.Fraction``; matrices are
immutable ``SymMatrix`` values (or plain nested tuples where symmetry is
not guaranteed, e.g. crossing-change matrices).  Determinants are computed
by rational Gaussian elimination, inertia by symmetric congruence
diagonalization, so all results are exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(-?\d+))?")


def parse_rational(token: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into a canonical Fraction.

    Only integer numerators and positive integer denominators are accepted;
    anything else (floats, empty strings, negative denominators) raises
    ValueError.  A unicode minus sign is tolerated.
    """
    token = token.strip().replace("−", "-")
    m = _RATIONAL_RE.fullmatch(token)
    if m is None:
        raise ValueError(f"malformed rational {token!r} (expected p or p/q)")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {token!r}")
    if den < 0:
        raise ValueError(f"negative denominator in {token!r} (write -p/q instead)")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``p/q``, or plain ``p`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Inertia(NamedTuple):
    """Counts of positive, negative, and zero eigenvalues."""

    n_plus: int
    n_minus: int
    n_zero: int


class SymMatrix:
    """A symmetric matrix of Fractions, indexed from 0.

    The 0x0 matrix is a valid value; it is the identity object of the
    surgery formula's boundary terms (determinant 1, sign +1, signature 0).
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SymMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(map(format_rational, r)) + "]" for r in self.rows)
        return f"SymMatrix([{body}])"

    def submatrix(self, keep: Sequence[int]) -> "SymMatrix":
        """Principal submatrix on the (0-based) indices in ``keep``, in order."""
        keep = list(keep)
        for i in keep:
            if not 0 <= i < self.n:
                raise ValueError(f"index {i} out of range for {self.n}x{self.n} matrix")
        return SymMatrix(tuple(tuple(self.rows[i][j] for j in keep) for i in keep))


def _as_rows(m) -> list[list[Fraction]]:
    if isinstance(m, SymMatrix):
        return [list(row) for row in m.rows]
    rows = [[Fraction(x) for x in row] for row in m]
    for row in rows:
        if len(row) != len(rows):
            raise ValueError("matrix is not square")
    return rows


def det_exact(m) -> Fraction:
    """Exact determinant of a square rational matrix.

    Accepts a SymMatrix or any nested sequence; symmetry is not required
    (crossing-change matrices are asymmetric).  det() of the 0x0 matrix is 1,
    the empty-product convention the surgery formula depends on.
    """
    rows = _as_rows(m)
    n = len(rows)
    result = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            result = -result
        pivot = rows[k][k]
        result *= pivot
        for i in range(k + 1, n):
            if rows[i][k]:
                factor = rows[i][k] / pivot
                for j in range(k, n):
                    rows[i][j] -= factor * rows[k][j]
    return result


def inertia(m) -> Inertia:
    """Eigenvalue sign counts of a symmetric matrix, by congruence diagonalization.

    Symmetric row/column elimination preserves inertia (Sylvester).  A zero
    pivot whose column is not yet zero is handled either by swapping in a
    partner with nonzero diagonal or, failing that, by eliminating the
    hyperbolic 2x2 block [[0, a], [a, 0]], which contributes one positive
    and one negative count for any a != 0.
    """
    rows = _as_rows(m)
    n = len(rows)
    if isinstance(m, SymMatrix):
        pass
    else:
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("inertia requires a symmetric matrix")
    n_plus = n_minus = n_zero = 0
    k = 0
    while k < n:
        if rows[k][k] != 0:
            pivot = rows[k][k]
            if pivot > 0:
                n_plus += 1
            else:
                n_minus += 1
            for i in range(k + 1, n):
                if rows[i][k]:
                    factor = rows[i][k] / pivot
                    for j in range(k + 1, n):
                        rows[i][j] -= factor * rows[k][j]
            for i in range(k + 1, n):
                rows[i][k] = rows[k][i] = Fraction(0)
            k += 1
            continue
        partner = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
        if partner is None:
            n_zero += 1
            k += 1
            continue
        swap_in = next(
            (i for i in range(k + 1, n) if rows[i][k] != 0 and rows[i][i] != 0), None
        )
        if swap_in is not None:
            rows[k], rows[swap_in] = rows[swap_in], rows[k]
            for row in rows:
                row[k], row[swap_in] = row[swap_in], row[k]
            continue
        # Pure hyperbolic step: both diagonal entries of the block vanish.
        if partner != k + 1:
            rows[k + 1], rows[partner] = rows[partner], rows[k + 1]
            for row in rows:
                row[k + 1], row[partner] = row[partner], row[k + 1]
        a = rows[k + 1][k]
        n_plus += 1
        n_minus += 1
        coeffs = [(rows[r][k], rows[r][k + 1]) for r in range(k + 2, n)]
        for r in range(k + 2, n):
            xr, yr = coeffs[r - k - 2]
            for c in range(k + 2, n):
                xc, yc = coeffs[c - k - 2]
                rows[r][c] -= (xr * yc + yr * xc) / a
        for r in range(k + 2, n):
            rows[r][k] = rows[r][k + 1] = rows[k][r] = rows[k + 1][r] = Fraction(0)
        k += 2
    return Inertia(n_plus, n_minus, n_zero)


def matrix_sign(m) -> int:
    """(-1) raised to the number of negative eigenvalues; +1 for the 0x0 matrix."""
    return -1 if inertia(m).n_minus % 2 else 1


def signature(m) -> int:
    """Number of positive minus number of negative eigenvalues."""
    ine = inertia(m)
    return ine.n_plus - ine.n_minus
