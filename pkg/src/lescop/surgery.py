"""Lescop's surgery formula for framed links in the 3-sphere.

For a framed n-component link the Casson-Walker-Lescop invariant of the
surgered manifold is assembled from three pieces: a sum of reduced-matrix
determinants weighted by Conway coefficients a1(L_I), a sum of restricted
determinants weighted by combinatorial terms built from cycles and
connecting paths in the linking data, and a boundary term carrying the
signature and Dedekind sums of the framings.

The cycle/path combinatorics are evaluated by subset dynamic programming:
path_sum(i, j, S) sums the entry products A(i, g(1)) A(g(1), g(2)) ...
A(g(m), j) over all orderings g of S, which turns the factorial-size
enumeration into an O(2^n n^2) table (Held-Karp style).  Conventions that
the formula needs and that are fixed here:

* the matrix A carries the framings s_i on its diagonal, so the empty-path
  value path_sum(i, i, {}) is s_i and the one-term cycle weight of {i} is
  s_i as well;
* cycle weights are rotation-anchored: each cyclic ordering of a set J is
  counted once, as a path from min(J) back to itself through J - {min(J)};
* a connecting path with no interior vertices degenerates to the plain
  matrix entry A(i, j), diagonal included.

These choices are the unique set that simultaneously reproduces the lens
space formula in one variable, the vanishing for the (r, -r)-framed Hopf
link, integer-framed Hopf links against their lens spaces, additivity on
split unions, and chain links against negative continued fractions; the
test suite enforces all of these identities exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Iterable, Iterator

from . import dedekind
from .linalg import SymMatrix, det_exact, matrix_sign, signature
from .links import FramedLink


class PathSums:
    """Memoized ordered-path sums over a fixed symmetric matrix.

    The table is a pure function of the matrix, so a single instance may be
    shared by every subset computation for one link; it must not be shared
    across matrices.
    """

    __slots__ = ("matrix", "_memo")

    def __init__(self, matrix: SymMatrix):
        self.matrix = matrix
        self._memo: dict = {}

    def path(self, start: int, end: int, through: Iterable[int]) -> Fraction:
        """Sum over all orderings g of ``through`` of A(start, g(1)) ... A(g(m), end).

        With ``through`` empty this is the matrix entry A(start, end);
        start == end is allowed.  Indices are 0-based.
        """
        through = frozenset(through)
        n = self.matrix.n
        for i in (start, end, *through):
            if not 0 <= i < n:
                raise ValueError(f"index {i} out of range for {n}x{n} matrix")
        if start in through or end in through:
            raise ValueError("path endpoints may not appear in the interior set")
        return self._path(start, end, through)

    def _path(self, start: int, end: int, through: frozenset) -> Fraction:
        if not through:
            return self.matrix[start, end]
        key = (start, end, through)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        total = Fraction(0)
        for k in through:
            total += self.matrix[start, k] * self._path(k, end, through - {k})
        self._memo[key] = total
        return total

    def cycle(self, members: Iterable[int]) -> Fraction:
        """Sum over cyclic orderings of ``members`` of the cyclic entry product.

        Anchored at the smallest member, so each rotation class contributes
        once; the singleton value is the diagonal entry (the framing).
        """
        members = frozenset(members)
        if not members:
            raise ValueError("cycle weight of the empty set is undefined")
        anchor = min(members)
        return self.path(anchor, anchor, members - {anchor})


def path_sum(matrix: SymMatrix, start: int, end: int, through: Iterable[int]) -> Fraction:
    """One-off path_sum; see PathSums.path for the definition."""
    return PathSums(matrix).path(start, end, through)


def cycle_sum(matrix: SymMatrix, members: Iterable[int]) -> Fraction:
    """One-off anchored cycle weight; see PathSums.cycle."""
    return PathSums(matrix).cycle(members)


def linking_weight(matrix: SymMatrix, members: Iterable[int], sums: PathSums | None = None) -> Fraction:
    """The raw combinatorial weight of an index set I inside ``matrix``.

    Sums, over nonempty J inside I and ordered pairs (i, j) of J, the anchored
    cycle weight of J times the path sum from i to j through I - J.  Indices
    are 0-based; pass a shared PathSums over the same matrix to reuse tables.
    """
    members = sorted(set(members))
    if not members:
        raise ValueError("weight of the empty index set is undefined")
    if sums is None:
        sums = PathSums(matrix)
    total = Fraction(0)
    for size in range(1, len(members) + 1):
        for J in combinations(members, size):
            interior = frozenset(members) - frozenset(J)
            inner = Fraction(0)
            for i in J:
                for j in J:
                    inner += sums.path(i, j, interior)
            total += sums.cycle(J) * inner
    return total


def sublink_weight(link: FramedLink, members: Iterable[int], sums: PathSums | None = None) -> Fraction:
    """The weight of a sublink as it enters the surgery formula.

    This is the linking_weight of the sublink's index set with a correction
    depending on its size: a singleton {i} gains (q_i^2 + 1)/q_i^2, a pair
    {i, j} loses twice the linking number, and larger sets are uncorrected.
    ``members`` are 1-based component indices.
    """
    members = sorted(set(members))
    if not members:
        raise ValueError("weight of the empty sublink is undefined")
    if not set(members) <= set(range(1, link.n + 1)):
        raise ValueError("sublink out of range")
    if sums is None:
        sums = PathSums(link.surgery_matrix())
    weight = linking_weight(sums.matrix, [i - 1 for i in members], sums)
    if len(members) == 1:
        q = link.framing(members[0]).denominator
        weight += Fraction(q * q + 1, q * q)
    elif len(members) == 2:
        weight -= 2 * link.linking_number(members[0], members[1])
    return weight


def reduced_matrix(link: FramedLink, collapsed: Iterable[int]) -> SymMatrix:
    """Linking matrix of the components outside ``collapsed``, with the
    diagonal corrected by linking into the collapsed set.

    Entry (i, i) is s_i + sum of n_ki over k in ``collapsed``; off-diagonal
    entries are plain linking numbers.  ``collapsed`` may be empty (the full
    surgery matrix) or everything (the 0x0 matrix, determinant 1).
    """
    collapsed = set(collapsed)
    if not collapsed <= set(range(1, link.n + 1)):
        raise ValueError("collapsed set out of range")
    rest = [i for i in range(1, link.n + 1) if i not in collapsed]
    rows = []
    for i in rest:
        row = []
        for j in rest:
            if i == j:
                row.append(link.framing(i) + sum(link.linking_number(k, i) for k in collapsed))
            else:
                row.append(Fraction(link.linking_number(i, j)))
        rows.append(tuple(row))
    return SymMatrix(tuple(rows))


def subsets_by_size(n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of 1..n as sorted tuples, by cardinality then lex."""
    for size in range(1, n + 1):
        yield from combinations(range(1, n + 1), size)


def h1_order(link: FramedLink) -> int:
    """Order of the first homology of the surgered manifold; 0 when infinite.

    Equals the product of the framing denominators times the sign and the
    determinant of the surgery matrix, which is always a nonnegative integer.
    """
    matrix = link.surgery_matrix()
    d = det_exact(matrix)
    if d == 0:
        return 0
    value = prod(s.denominator for s in link.framings) * matrix_sign(matrix) * d
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"homology order came out as {value}; this is a bug")
    return int(value)


def lescop_lambda(link: FramedLink) -> Fraction:
    """The Casson-Walker-Lescop invariant of surgery on ``link``.

    Defined for every framed link, including ones whose surgery is not a
    rational homology sphere.  a1 coefficients missing from the link's table
    are taken as 0; call link.defaulted_a1() to see which.
    """
    matrix = link.surgery_matrix()
    sums = PathSums(matrix)
    sign = matrix_sign(matrix)
    q_product = prod(s.denominator for s in link.framings)

    conway_part = Fraction(0)
    weight_part = Fraction(0)
    for subset in subsets_by_size(link.n):
        conway_part += det_exact(reduced_matrix(link, subset)) * link.a1(subset)
        rest = [i - 1 for i in range(1, link.n + 1) if i not in subset]
        weight_part += (
            det_exact(matrix.submatrix(rest))
            * (-1) ** len(subset)
            * sublink_weight(link, subset, sums)
        )

    boundary = Fraction(signature(matrix), 8) + sum(
        Fraction(dedekind.dedekind_sum(s.numerator, s.denominator), 2)
        for s in link.framings
    )
    return sign * q_product * conway_part + sign * q_product * weight_part / 24 + h1_order(link) * boundary


def walker_lambda(link: FramedLink) -> Fraction:
    """The Casson-Walker invariant: twice lescop_lambda over the homology order.

    Only defined when surgery yields a rational homology sphere, i.e. the
    surgery matrix is nonsingular.
    """
    order = h1_order(link)
    if order == 0:
        raise ValueError("not a rational homology sphere: the surgery matrix is singular")
    return 2 * lescop_lambda(link) / order
