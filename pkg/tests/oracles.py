"""Independent brute-force oracles and random-instance helpers for the tests.

Everything here is deliberately written the slow, obvious way (cofactor
expansions, factorial enumerations, literal definitional sums) so that the
package's optimized implementations are checked against genuinely
different code paths.
"""

from fractions import Fraction
from itertools import combinations, permutations

from lescop import FramedLink, dedekind_sum_direct, make_link, sawtooth


# ---------------------------------------------------------------- matrices

def det_cofactor(rows):
    """Determinant by first-row cofactor expansion; fine for n <= 5."""
    rows = [[Fraction(x) for x in row] for row in rows]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        total += (-1) ** j * rows[0][j] * det_cofactor(minor)
    return total


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_add(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for j, bj in enumerate(b):
        out[j] += bj
    return out


def _charpoly(rows):
    """Coefficients of det(A - x I), low degree first, by cofactor expansion
    over the polynomial ring."""
    n = len(rows)
    entries = [
        [
            [Fraction(rows[i][j]), Fraction(-1)] if i == j else [Fraction(rows[i][j])]
            for j in range(n)
        ]
        for i in range(n)
    ]

    def rec(mat):
        m = len(mat)
        if m == 0:
            return [Fraction(1)]
        if m == 1:
            return mat[0][0]
        acc = [Fraction(0)]
        for j in range(m):
            minor = [[mat[i][k] for k in range(m) if k != j] for i in range(1, m)]
            term = _poly_mul(mat[0][j], rec(minor))
            if j % 2:
                term = [-c for c in term]
            acc = _poly_add(acc, term)
        return acc

    return rec(entries)


def inertia_brute(rows):
    """Inertia from the characteristic polynomial via Descartes' rule.

    All eigenvalues of a symmetric matrix are real, so the count of
    positive roots equals the number of sign changes exactly.
    """
    coeffs = _charpoly(rows)
    n_zero = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        n_zero += 1

    def sign_changes(seq):
        signs = [1 if c > 0 else -1 for c in seq if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    n_plus = sign_changes(coeffs)
    n_minus = sign_changes([c if i % 2 == 0 else -c for i, c in enumerate(coeffs)])
    return n_plus, n_minus, n_zero


def mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return [
        [sum((Fraction(a[i][t]) * Fraction(b[t][j]) for t in range(k)), Fraction(0)) for j in range(m)]
        for i in range(n)
    ]


def transpose(a):
    return [list(col) for col in zip(*a)]


def random_unimodular(rng, n, max_ops=10):
    """Product of up to max_ops elementary row additions: determinant 1."""
    u = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    if n < 2:
        return u
    for _ in range(rng.randint(1, max_ops)):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for col in range(n):
            u[i][col] += c * u[j][col]
    return u


def random_symmetric(rng, n, lo=-4, hi=4):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(rng.randint(lo, hi))
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = Fraction(rng.randint(lo, hi))
    return rows


# ------------------------------------------------------- subset enumeration

def theta_b_brute(rows, members):
    """Factorial enumeration of the cycle/path weight of an index set.

    Sums over nonempty J inside members, ordered pairs (i, j) in J^2, and
    orderings g of members - J, the anchored cycle product of J times the
    chain product A(i, g(1)) ... A(g(m), j).  Cycles are anchored at min(J):
    each cyclic ordering counts once, and the singleton cycle value is the
    diagonal entry.
    """
    members = sorted(members)
    total = Fraction(0)
    for size in range(1, len(members) + 1):
        for J in combinations(members, size):
            anchor = J[0]
            lk_c = Fraction(0)
            for tail in permutations([x for x in J if x != anchor]):
                cyc = (anchor,) + tail
                prod = Fraction(1)
                for a, b in zip(cyc, cyc[1:] + (anchor,)):
                    prod *= rows[a][b]
                lk_c += prod
            rest = [x for x in members if x not in J]
            inner = Fraction(0)
            for i in J:
                for j in J:
                    for g in permutations(rest):
                        seq = (i,) + g + (j,)
                        prod = Fraction(1)
                        for a, b in zip(seq, seq[1:]):
                            prod *= rows[a][b]
                        inner += prod
            total += lk_c * inner
    return total


# ------------------------------------------------------------- dedekind

def dedekind_literal(p, q):
    """The definitional sum, term by term through the sawtooth function."""
    return sum(
        (sawtooth(Fraction(i, q)) * sawtooth(Fraction(p * i, q)) for i in range(1, q + 1)),
        Fraction(0),
    )


# ------------------------------------------------------------- full formula

def lescop_lambda_brute(link: FramedLink) -> Fraction:
    """The surgery formula assembled entirely from the oracles above.

    Shares no arithmetic code with the package: cofactor determinants,
    charpoly inertia, factorial subset weights, literal Dedekind sums.
    Only practical for n <= 5.
    """
    n = link.n
    rows = [
        [
            link.framing(i) if i == j else Fraction(link.linking_number(i, j))
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    n_plus, n_minus, n_zero = inertia_brute(rows)
    sign = (-1) ** n_minus
    q_prod = 1
    for s in link.framings:
        q_prod *= s.denominator
    det_full = det_cofactor(rows)
    h1 = 0 if det_full == 0 else q_prod * sign * det_full

    subsets = []
    for size in range(1, n + 1):
        subsets.extend(combinations(range(1, n + 1), size))

    conway_part = Fraction(0)
    weight_part = Fraction(0)
    for subset in subsets:
        inside = set(subset)
        rest = [i for i in range(1, n + 1) if i not in inside]
        reduced = [
            [
                (link.framing(i) + sum(link.linking_number(k, i) for k in subset))
                if i == j
                else Fraction(link.linking_number(i, j))
                for j in rest
            ]
            for i in rest
        ]
        conway_part += det_cofactor(reduced) * link.a1(subset)

        plain = [[rows[i - 1][j - 1] for j in rest] for i in rest]
        weight = theta_b_brute(rows, [i - 1 for i in subset])
        if len(subset) == 1:
            q = link.framing(subset[0]).denominator
            weight += Fraction(q * q + 1, q * q)
        elif len(subset) == 2:
            weight -= 2 * link.linking_number(subset[0], subset[1])
        weight_part += det_cofactor(plain) * (-1) ** len(subset) * weight

    boundary = Fraction(n_plus - n_minus, 8) + sum(
        Fraction(dedekind_literal(s.numerator, s.denominator), 2) for s in link.framings
    )
    return sign * q_prod * conway_part + sign * q_prod * weight_part / 24 + h1 * boundary


# ------------------------------------------------------------- random links

def random_link(rng, n, max_den=1, lk_bound=3, with_a1=True) -> FramedLink:
    lk = {
        (i, j): rng.randint(-lk_bound, lk_bound)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    framings = []
    for _ in range(n):
        den = rng.randint(1, max_den)
        num = rng.randint(-6, 6)
        while den > 1 and num == 0:
            num = rng.randint(-6, 6)
        framings.append(Fraction(num, den))
    a1 = {}
    if with_a1:
        for size in range(1, n + 1):
            for subset in combinations(range(1, n + 1), size):
                if rng.random() < 0.4:
                    a1[subset] = rng.randint(-3, 3)
    return make_link(framings, lk, a1)


def random_rhs_link(rng, n, max_den=1) -> FramedLink:
    """A random link whose surgery is a rational homology sphere."""
    while True:
        link = random_link(rng, n, max_den=max_den)
        if det_cofactor([list(r) for r in link.surgery_matrix().rows]) != 0:
            return link


def random_step(rng, link):
    from lescop import CrossingStep

    c = rng.randint(1, link.n)
    lobe_a = {j: rng.randint(-2, 2) for j in range(1, link.n + 1) if j != c}
    return CrossingStep(component=c, lobes_linking=rng.randint(-3, 3), lobe_a=lobe_a)


def permute_link(link: FramedLink, perm: dict) -> FramedLink:
    """Relabel components by perm (old 1-based index -> new 1-based index)."""
    n = link.n
    inverse = {new: old for old, new in perm.items()}
    framings = [link.framing(inverse[i]) for i in range(1, n + 1)]
    lk = {
        (i, j): link.linking_number(inverse[i], inverse[j])
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    a1 = {
        frozenset(perm[i] for i in key): value
        for key, value in link.a1_table.items()
    }
    return make_link(framings, lk, a1)
