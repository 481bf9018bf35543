"""Crossing-change differences of the invariant, and homotopy paths of them.

A self-crossing change inside one component passes through a singular link
whose double point splits the component into two lobes.  The smoothing data
(the lobes' mutual linking number and the linking numbers of one lobe with
every other component) determine how the invariant jumps across the change,
through the determinant of a single matrix; no surgery formula evaluation
is needed.

Sign convention used throughout: a delta is the value for the negative
resolution minus the value for the positive resolution of the singular
data.  A path of steps therefore accumulates lambda(start) - lambda(end)
when each step is written with the start link on its negative side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Mapping

from .linalg import det_exact, matrix_sign
from .links import FramedLink, ParseError, _build_link, iter_directives, make_link
from .surgery import h1_order


@dataclass(frozen=True)
class CrossingStep:
    """Smoothing data for one self-crossing change.

    ``component`` is the component carrying the crossing; ``lobes_linking``
    is the linking number of the two smoothed lobes; ``lobe_a`` maps every
    other component j to the linking number of lobe a with j (missing keys
    are 0).  The lobe-b numbers are never stored: they are forced to be
    n_cj minus the lobe-a number, which keeps the data consistent by
    construction.
    """

    component: int
    lobes_linking: int
    lobe_a: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "lobe_a", dict(self.lobe_a))


@dataclass(frozen=True)
class HomotopyPath:
    """An ordered sequence of self-crossing changes on a fixed framed link.

    Self-crossing changes never alter linking numbers, so one link (with its
    framings) serves the whole path.
    """

    link: FramedLink
    steps: tuple[CrossingStep, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        for step in self.steps:
            _check_step(self.link, step)


def _check_step(link: FramedLink, step: CrossingStep):
    c = step.component
    if not 1 <= c <= link.n:
        raise ValueError(f"crossing component {c} out of range 1..{link.n}")
    for j in step.lobe_a:
        if j == c or not 1 <= j <= link.n:
            raise ValueError(f"lobe linking index {j} invalid for component {c}")


def crossing_matrix(link: FramedLink, step: CrossingStep):
    """The matrix whose determinant drives every crossing-change delta.

    With the crossing component relabeled into position 1: entry (1,1) is
    the lobes' linking number, the first row holds the lobe-a linking
    numbers, the first column the complementary lobe-b numbers, and the
    remaining block is the surgery matrix of the other components.  Not
    symmetric in general; returned as nested tuples of Fractions.
    """
    _check_step(link, step)
    c = step.component
    others = [j for j in range(1, link.n + 1) if j != c]
    ka = {j: step.lobe_a.get(j, 0) for j in others}
    first_row = [Fraction(step.lobes_linking)] + [Fraction(ka[j]) for j in others]
    rows = [first_row]
    for i in others:
        row = [Fraction(link.linking_number(c, i) - ka[i])]
        for j in others:
            row.append(link.framing(i) if i == j else Fraction(link.linking_number(i, j)))
        rows.append(row)
    return tuple(tuple(row) for row in rows)


def lambda_delta(link: FramedLink, step: CrossingStep) -> Fraction:
    """Jump of the Casson-Walker-Lescop invariant across one crossing change.

    sign(A) times the product of framing denominators times the crossing
    matrix determinant; valid even when the surgery matrix is singular.
    """
    q_product = prod(s.denominator for s in link.framings)
    return (
        matrix_sign(link.surgery_matrix())
        * q_product
        * det_exact(crossing_matrix(link, step))
    )


def walker_delta(link: FramedLink, step: CrossingStep) -> Fraction:
    """Jump of the Casson-Walker invariant: twice the crossing determinant
    over the surgery determinant.  Requires a rational homology sphere."""
    d = det_exact(link.surgery_matrix())
    if d == 0:
        raise ValueError("Casson-Walker delta undefined: the surgery matrix is singular")
    return 2 * det_exact(crossing_matrix(link, step)) / d


def conway_a1_delta(link: FramedLink, step: CrossingStep) -> int:
    """Difference of the top Conway coefficients a1 across the crossing change.

    Evaluates the crossing matrix with every framing replaced by minus the
    total linking of its component; at that framing vector every reduced
    matrix of a proper sublink has zero row sums, so only the full-link term
    of the invariant's jump survives and the determinant is the a1 jump.
    """
    substituted = link.with_framings(
        -sum(link.linking_number(i, k) for k in range(1, link.n + 1) if k != i)
        for i in range(1, link.n + 1)
    )
    value = det_exact(crossing_matrix(substituted, step))
    assert value.denominator == 1
    return int(value)


def path_delta(path: HomotopyPath) -> Fraction:
    """Sum of lambda_delta over the path's steps; 0 for the empty path."""
    return sum(
        (lambda_delta(path.link, step) for step in path.steps), Fraction(0)
    )


def tn_path(n: int, framing) -> HomotopyPath:
    """The standard homotopy carrying the twist family link to its mirror.

    The link has two components with linking number n and framings
    (s, -s); undoing the n - 1 self-crossings of the twisted component
    gives steps whose lobes are unlinked from each other and where lobe a
    wraps the second component n - i times at step i.
    """
    if n < 1:
        raise ValueError(f"linking number must be >= 1, got {n}")
    s = Fraction(framing)
    link = make_link([s, -s], {(1, 2): n})
    steps = tuple(
        CrossingStep(component=1, lobes_linking=0, lobe_a={2: n - i})
        for i in range(1, n)
    )
    return HomotopyPath(link, steps)


def mirror_lambda(path: HomotopyPath) -> Fraction:
    """lambda of a two-component link with (s, -s) framings, from a homotopy
    to its interchanged mirror image.

    Such a link and its mirror have opposite invariants, so half the path
    total is the invariant itself.  The caller asserts that the path really
    ends at the interchanged mirror; that is a geometric fact this code
    cannot check.
    """
    link = path.link
    if link.n != 2:
        raise ValueError(f"mirror solver needs a 2-component link, got {link.n}")
    if link.framing(2) != -link.framing(1):
        raise ValueError("mirror solver needs framings of the form (s, -s)")
    return path_delta(path) / 2


def parse_path(text: str) -> HomotopyPath:
    """Parse a path file: a `.lnk` link block followed by a path block.

    The path block is ``path component <c>`` followed by one
    ``step <l> [j:ka_j ...]`` line per crossing change; omitted lobe-a
    entries default to 0.
    """
    directives = list(iter_directives(text))
    split = next(
        (pos for pos, (_, tokens) in enumerate(directives) if tokens[0] == "path"),
        None,
    )
    if split is None:
        raise ParseError("no 'path' directive found")
    link = _build_link(directives[:split])

    lineno, tokens = directives[split]
    if len(tokens) != 3 or tokens[1] != "component":
        raise ParseError(f"line {lineno}: usage: path component <c>")
    try:
        component = int(tokens[2])
    except ValueError:
        raise ParseError(f"line {lineno}: expected a component index, got {tokens[2]!r}")
    if not 1 <= component <= link.n:
        raise ParseError(f"line {lineno}: component {component} out of range 1..{link.n}")

    steps = []
    for lineno, tokens in directives[split + 1:]:
        if tokens[0] == "path":
            raise ParseError(f"line {lineno}: only one path block is allowed")
        if tokens[0] != "step":
            raise ParseError(f"line {lineno}: expected 'step', got {tokens[0]!r}")
        if len(tokens) < 2:
            raise ParseError(f"line {lineno}: usage: step <l> [j:ka_j ...]")
        try:
            lobes = int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected an integer lobe linking, got {tokens[1]!r}")
        lobe_a = {}
        for token in tokens[2:]:
            j_part, sep, v_part = token.partition(":")
            try:
                if not sep:
                    raise ValueError
                j = int(j_part)
                value = int(v_part)
            except ValueError:
                raise ParseError(f"line {lineno}: expected j:ka_j, got {token!r}")
            if j == component or not 1 <= j <= link.n:
                raise ParseError(f"line {lineno}: lobe index {j} invalid for component {component}")
            if j in lobe_a:
                raise ParseError(f"line {lineno}: duplicate lobe entry for component {j}")
            lobe_a[j] = value
        steps.append(CrossingStep(component=component, lobes_linking=lobes, lobe_a=lobe_a))
    return HomotopyPath(link, tuple(steps))
