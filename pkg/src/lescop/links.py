"""Framed links: the data model and the `.lnk` text format.

A framed link is encoded by its component count, symmetric integer linking
numbers, one rational surgery coefficient per component, and a table of
Conway-polynomial coefficients a1(L_I) (the z^{#I + 1} coefficient) for
nonempty sublinks.  Missing a1 entries read as 0; which keys defaulted is
reported so that assumption is never silent.

Components are numbered from 1, matching the usual surgery-diagram
conventions; sublinks are frozensets of component indices.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Mapping

from .linalg import SymMatrix, format_rational, parse_rational


class ParseError(ValueError):
    """Raised on malformed `.lnk` input; the message carries the line number."""


def subset_label(members) -> str:
    """Canonical text for a component subset: '1,3,4'."""
    return ",".join(str(i) for i in sorted(members))


@dataclass(frozen=True)
class FramedLink:
    """An n-component framed link given by linking numbers, framings and a1 data.

    ``linking`` is the full symmetric n x n integer matrix with zero diagonal
    (the diagonal carries no information); ``framings`` are canonical
    Fractions p_i/q_i with q_i >= 1; ``a1_table`` maps frozensets of 1-based
    component indices to integers.
    """

    framings: tuple[Fraction, ...]
    linking: tuple[tuple[int, ...], ...]
    a1_table: Mapping[frozenset, int]

    def __post_init__(self):
        n = len(self.framings)
        if n < 1:
            raise ValueError("a link needs at least one component")
        for s in self.framings:
            if not isinstance(s, Fraction):
                raise ValueError("framings must be Fractions")
        if len(self.linking) != n or any(len(row) != n for row in self.linking):
            raise ValueError("linking matrix shape does not match component count")
        for i in range(n):
            if self.linking[i][i] != 0:
                raise ValueError("linking matrix diagonal must be zero")
            for j in range(i + 1, n):
                if self.linking[i][j] != self.linking[j][i]:
                    raise ValueError(f"linking numbers not symmetric at ({i + 1}, {j + 1})")
        for key, value in self.a1_table.items():
            if not key or not key <= set(range(1, n + 1)):
                raise ValueError(f"a1 key {subset_label(key) or '{}'} is not a nonempty sublink")
            if not isinstance(value, int):
                raise ValueError("a1 coefficients must be integers")

    @property
    def n(self) -> int:
        return len(self.framings)

    def framing(self, i: int) -> Fraction:
        return self.framings[i - 1]

    def linking_number(self, i: int, j: int) -> int:
        return self.linking[i - 1][j - 1]

    def a1(self, members) -> int:
        """a1 of the sublink on ``members``; 0 when no explicit entry exists."""
        members = frozenset(members)
        if not members or not members <= set(range(1, self.n + 1)):
            raise ValueError(f"invalid sublink {subset_label(members) or '{}'}")
        return self.a1_table.get(members, 0)

    def defaulted_a1(self) -> list[frozenset]:
        """Nonempty sublinks whose a1 value defaults to 0, smallest first."""
        missing = []
        for members in _nonempty_subsets(self.n):
            if members not in self.a1_table:
                missing.append(members)
        return missing

    def surgery_matrix(self) -> SymMatrix:
        """The linking matrix with framings on the diagonal."""
        n = self.n
        return SymMatrix(
            tuple(
                tuple(
                    self.framings[i] if i == j else Fraction(self.linking[i][j])
                    for j in range(n)
                )
                for i in range(n)
            )
        )

    def sublink(self, members) -> "FramedLink":
        """Restriction to ``members``, re-indexed to 1..#members in order."""
        members = sorted(set(members))
        if not members:
            raise ValueError("cannot restrict to the empty sublink")
        if not set(members) <= set(range(1, self.n + 1)):
            raise ValueError(f"sublink {subset_label(members)} out of range")
        renumber = {old: new for new, old in enumerate(members, start=1)}
        framings = tuple(self.framings[i - 1] for i in members)
        linking = tuple(
            tuple(self.linking[i - 1][j - 1] for j in members) for i in members
        )
        a1 = {
            frozenset(renumber[i] for i in key): value
            for key, value in self.a1_table.items()
            if key <= set(members)
        }
        return FramedLink(framings, linking, a1)

    def with_framings(self, framings) -> "FramedLink":
        return replace(self, framings=tuple(Fraction(s) for s in framings))


def _nonempty_subsets(n: int) -> Iterator[frozenset]:
    from itertools import combinations

    for size in range(1, n + 1):
        for combo in combinations(range(1, n + 1), size):
            yield frozenset(combo)


def make_link(framings, linking=None, a1=None) -> FramedLink:
    """Build a FramedLink from loose data.

    ``framings``: rationals (anything Fraction accepts).  ``linking``: map
    from (i, j) pairs to integers, symmetric closure taken automatically.
    ``a1``: map from index tuples/sets to integers.
    """
    framings = tuple(Fraction(s) for s in framings)
    n = len(framings)
    rows = [[0] * n for _ in range(n)]
    for (i, j), value in (linking or {}).items():
        if i == j:
            raise ValueError(f"linking number needs two distinct components, got ({i}, {j})")
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = int(value)
    table = {frozenset(key): int(value) for key, value in (a1 or {}).items()}
    return FramedLink(framings, tuple(tuple(r) for r in rows), table)


def unknot(framing) -> FramedLink:
    return make_link([framing])


def hopf(framing1, framing2, linking: int = 1) -> FramedLink:
    """Two components with the given linking number (1 for the Hopf link)."""
    return make_link([framing1, framing2], {(1, 2): linking})


def chain(framings) -> FramedLink:
    """An open chain: consecutive components Hopf-linked, all other pairs split."""
    framings = list(framings)
    linking = {(i, i + 1): 1 for i in range(1, len(framings))}
    return make_link(framings, linking)


def iter_directives(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield (line number, tokens) for each non-blank, non-comment line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].replace("−", "-")
        tokens = line.split()
        if tokens:
            yield lineno, tokens


def _fail(lineno: int, message: str):
    raise ParseError(f"line {lineno}: {message}")


def _parse_index(lineno: int, token: str, n: int) -> int:
    try:
        i = int(token)
    except ValueError:
        _fail(lineno, f"expected a component index, got {token!r}")
    if not 1 <= i <= n:
        _fail(lineno, f"component index {i} out of range 1..{n}")
    return i


def _parse_int(lineno: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        _fail(lineno, f"expected an integer {what}, got {token!r}")


def _build_link(directives: list[tuple[int, list[str]]]) -> FramedLink:
    if not directives:
        raise ParseError("empty link description")
    lineno, tokens = directives[0]
    if tokens[0] != "components":
        _fail(lineno, f"first directive must be 'components', got {tokens[0]!r}")
    if len(tokens) != 2:
        _fail(lineno, "usage: components <n>")
    n = _parse_int(lineno, tokens[1], "component count")
    if n < 1:
        _fail(lineno, f"component count must be >= 1, got {n}")

    framings: dict[int, Fraction] = {}
    lk: dict[tuple[int, int], tuple[int, int]] = {}  # (i,j) -> (value, lineno)
    a1: dict[frozenset, tuple[int, int]] = {}

    for lineno, tokens in directives[1:]:
        verb = tokens[0]
        if verb == "components":
            _fail(lineno, "duplicate 'components' directive")
        elif verb == "framing":
            if len(tokens) != 3:
                _fail(lineno, "usage: framing <i> <p>/<q>")
            i = _parse_index(lineno, tokens[1], n)
            if i in framings:
                _fail(lineno, f"duplicate framing for component {i}")
            try:
                framings[i] = parse_rational(tokens[2])
            except ValueError as exc:
                _fail(lineno, str(exc))
        elif verb == "lk":
            if len(tokens) != 4:
                _fail(lineno, "usage: lk <i> <j> <v>")
            i = _parse_index(lineno, tokens[1], n)
            j = _parse_index(lineno, tokens[2], n)
            if i == j:
                _fail(lineno, f"linking number needs two distinct components, got {i} twice")
            value = _parse_int(lineno, tokens[3], "linking number")
            key = (min(i, j), max(i, j))
            if key in lk and lk[key][0] != value:
                _fail(
                    lineno,
                    f"conflicting linking numbers for ({key[0]}, {key[1]}): "
                    f"{lk[key][0]} at line {lk[key][1]}, {value} here",
                )
            lk[key] = (value, lineno)
        elif verb == "a1":
            if len(tokens) != 3:
                _fail(lineno, "usage: a1 <i1,i2,...,ik> <v>")
            parts = tokens[1].split(",")
            indices = [_parse_index(lineno, part, n) for part in parts]
            if any(b <= a for a, b in zip(indices, indices[1:])):
                _fail(lineno, f"subset {tokens[1]!r} must be strictly increasing")
            value = _parse_int(lineno, tokens[2], "a1 coefficient")
            key = frozenset(indices)
            if key in a1 and a1[key][0] != value:
                _fail(
                    lineno,
                    f"conflicting a1 values for {tokens[1]}: "
                    f"{a1[key][0]} at line {a1[key][1]}, {value} here",
                )
            a1[key] = (value, lineno)
        else:
            _fail(lineno, f"unknown directive {verb!r}")

    missing = [i for i in range(1, n + 1) if i not in framings]
    if missing:
        raise ParseError(
            f"missing framing for component(s) {', '.join(map(str, missing))}"
        )
    return make_link(
        [framings[i] for i in range(1, n + 1)],
        {key: value for key, (value, _) in lk.items()},
        {key: value for key, (value, _) in a1.items()},
    )


def parse_link(text: str) -> FramedLink:
    """Parse the `.lnk` format into a validated FramedLink."""
    return _build_link(list(iter_directives(text)))


def link_to_text(link: FramedLink) -> str:
    """Serialize a FramedLink to canonical `.lnk` text.

    Deterministic: framings in lowest terms with an explicit denominator,
    nonzero linking numbers sorted lexicographically, a1 entries sorted by
    cardinality then lexicographically.  parse_link(link_to_text(L)) == L.
    """
    lines = [f"components {link.n}"]
    for i in range(1, link.n + 1):
        s = link.framing(i)
        lines.append(f"framing {i} {s.numerator}/{s.denominator}")
    for i in range(1, link.n + 1):
        for j in range(i + 1, link.n + 1):
            value = link.linking_number(i, j)
            if value != 0:
                lines.append(f"lk {i} {j} {value}")
    for key in sorted(link.a1_table, key=lambda s: (len(s), sorted(s))):
        lines.append(f"a1 {subset_label(key)} {link.a1_table[key]}")
    return "\n".join(lines) + "\n"
