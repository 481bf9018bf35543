"""Lens spaces, chain presentations, and their invariant values in closed form.

L(p, q) is p/q surgery on the unknot.  Its invariant has the one-line
closed form

    lambda(L(p, q)) = q (-1/24 - (p^2 + 1)/(24 q^2)) + p/8 + p s(p, q)/2

with s the Dedekind sum; an equivalent form -p s(q, p)/2 follows from the
reciprocity law and serves as a second, independent evaluator.  Chains of
Hopf-linked unknots with integer coefficients (optionally a rational tail)
also present lens spaces, through the negative continued fraction
a_1 - 1/(a_2 - 1/(... - tail)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import dedekind


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) with p, q positive and coprime.

    A second argument larger than p is reduced mod p (same space); if the
    reduction hits 0 the pair is rejected rather than silently reoriented.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"lens space needs positive p, got {self.p}")
        if self.q < 1:
            raise ValueError(f"lens space needs positive q, got {self.q}")
        if self.q > self.p:
            reduced = self.q % self.p
            if reduced == 0:
                raise ValueError(f"q = {self.q} is a multiple of p = {self.p}")
            object.__setattr__(self, "q", reduced)
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got ({self.p}, {self.q})")

    def __str__(self):
        return f"L({self.p},{self.q})"


def lens_lambda(space: LensSpace) -> Fraction:
    """The invariant of L(p, q), evaluated from the closed form."""
    p, q = space.p, space.q
    return (
        q * (Fraction(-1, 24) - Fraction(p * p + 1, 24 * q * q))
        + Fraction(p, 8)
        + Fraction(p, 2) * dedekind.dedekind_sum(p, q)
    )


def lens_lambda_alt(space: LensSpace) -> Fraction:
    """The invariant of L(p, q) as -p s(q, p)/2.

    Algebraically equal to lens_lambda by Dedekind reciprocity; kept as an
    independent implementation so the two can cross-check each other.
    """
    return -Fraction(space.p, 2) * dedekind.dedekind_sum(space.q, space.p)


@dataclass(frozen=True)
class ChainPresentation:
    """Integer chain coefficients with an optional rational tail on the end."""

    coeffs: tuple[int, ...]
    tail: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if not self.coeffs:
            raise ValueError("a chain needs at least one coefficient")
        if self.tail is not None:
            object.__setattr__(self, "tail", Fraction(self.tail))


def chain_to_lens(presentation: ChainPresentation) -> tuple[int, int]:
    """Evaluate the negative continued fraction of a chain to a reduced (p, q).

    The innermost value is the last coefficient minus the tail (when
    present); each step to the left computes a_i - 1/previous.  The result
    is normalized to q > 0; p keeps its sign, and a negative p is the
    caller's problem to interpret (no silent reorientation).
    """
    value = Fraction(presentation.coeffs[-1])
    if presentation.tail is not None:
        value -= presentation.tail
    for a in reversed(presentation.coeffs[:-1]):
        if value == 0:
            raise ValueError("degenerate chain: division by zero in the continued fraction")
        value = a - 1 / value
    return value.numerator, value.denominator


def chain_lens_space(presentation: ChainPresentation) -> LensSpace:
    """The lens space a chain presents; rejects nonpositive p."""
    p, q = chain_to_lens(presentation)
    if p < 1:
        raise ValueError(
            f"chain evaluates to {p}/{q}, which is not a positively-oriented lens space"
        )
    return LensSpace(p, q)


def twist_chain(n: int, b: int) -> ChainPresentation:
    """Chain endpoint of the twist family at the homology-sphere condition.

    For linking number n and framing denominator b (numerator nb + 1) the
    chain [n, -b] with tail -b/(2nb + 1) evaluates to the lens pair
    (2 n^2 b^2 + 2 n b + 1, 2 n b^2).
    """
    if n < 1 or b < 1:
        raise ValueError("twist chain needs positive n and b")
    return ChainPresentation((n, -b), tail=Fraction(-b, 2 * n * b + 1))


def tn_lens_condition(n: int, framing) -> LensSpace | None:
    """Which lens space the twist family link presents, if any.

    The two-component link with linking number n and framings (a/b, -a/b)
    presents a lens space exactly when a = nb + 1 (the surgery gluing must
    induce an isomorphism on first homology); the space is then
    L(2 n^2 b^2 + 2 n b + 1, 2 n b^2).  Returns None when the condition
    fails.
    """
    if n < 1:
        raise ValueError(f"linking number must be >= 1, got {n}")
    s = Fraction(framing)
    a, b = s.numerator, s.denominator
    if a != n * b + 1:
        return None
    return LensSpace(2 * n * n * b * b + 2 * n * b + 1, 2 * n * b * b)
