"""Sawtooth function and Dedekind sums.

s(p, q) = sum_{i=1}^{q} ((i/q)) ((pi/q)) where ((x)) is the sawtooth
function: 0 at integers, x - floor(x) - 1/2 elsewhere.  Two evaluators are
provided: a definitional O(q) sum and an O(log q) reciprocity descent.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def sawtooth(x) -> Fraction:
    """((x)): zero at integers, otherwise x - floor(x) - 1/2.

    Periodic with period 1, odd, and bounded by |((x))| < 1/2.
    """
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_sum_direct(p: int, q: int) -> Fraction:
    """The Dedekind sum by direct summation; the reference evaluator.

    For 1 <= i < q the sawtooth values are ((i/q)) = (2i - q)/(2q) and
    ((pi/q)) = (2(pi mod q) - q)/(2q) unless pi = 0 mod q, so the sum is
    accumulated as a single integer over the common denominator 4q^2.
    Coprimality of p and q is not required.
    """
    if q < 1:
        raise ValueError(f"modulus must be positive, got q={q}")
    p_mod = p % q
    total = 0
    b = 0
    for i in range(1, q):
        b += p_mod
        if b >= q:
            b -= q
        if b == 0:
            continue
        total += (2 * i - q) * (2 * b - q)
    return Fraction(total, 4 * q * q)


def dedekind_sum(p: int, q: int) -> Fraction:
    """The Dedekind sum via the reciprocity law, in O(log q) steps.

    Uses s(p, q) + s(q, p) = -1/4 + (p^2 + q^2 + 1)/(12pq) together with
    periodicity in p to run a Euclid-style descent.  When p and q are not
    coprime (after reduction mod q) the reciprocity law does not apply and
    the definitional sum is used instead.
    """
    if q < 1:
        raise ValueError(f"modulus must be positive, got q={q}")
    p %= q
    if p == 0:
        return Fraction(0)
    if gcd(p, q) != 1:
        return dedekind_sum_direct(p, q)
    total = Fraction(0)
    sign = 1
    while p != 0:
        total += sign * (Fraction(-1, 4) + Fraction(p * p + q * q + 1, 12 * p * q))
        sign = -sign
        p, q = q % p, p
    return total
