"""Exact monomial and monomial-ideal arithmetic.

Monomials are exponent vectors over a fixed ambient variable set
x1..xn.  Ideals are stored by their unique minimal generating set,
kept in graded-lex descending order (x1 > x2 > ... > xn), so every
listing in the library and in reports is reproducible.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Sequence

__all__ = [
    "DimensionMismatch",
    "Monomial",
    "MonomialIdeal",
    "lcm",
    "gcd",
    "minimal_generators",
    "ideal_power",
    "restrict_leq",
    "squarefree_power",
    "edge_ideal",
    "parse_ideal_text",
    "format_ideal_text",
]


class DimensionMismatch(ValueError):
    """Raised when two values live over different ambient variable counts."""


class Monomial:
    """An exponent vector; immutable and hashable.

    The ambient variable count is ``len(exps)``.  Variables are 1-based
    in all printed forms (x1..xn) and 0-based in the exponent tuple.
    """

    __slots__ = ("exps",)

    def __init__(self, exps: Iterable[int]):
        t = tuple(int(e) for e in exps)
        if any(e < 0 for e in t):
            raise ValueError(f"negative exponent in {t}")
        object.__setattr__(self, "exps", t)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> "Monomial":
        """The monomial x_i (1-based) in n variables."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(n)))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Monomial":
        """Build from (variable, exponent) pairs, variables 1-based."""
        exps = [0] * n
        for i, e in pairs:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} out of range 1..{n}")
            exps[i - 1] += int(e)
        return cls(exps)

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_one(self) -> bool:
        return not any(self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    @property
    def support(self) -> frozenset[int]:
        """1-based indices of variables with positive exponent."""
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    def _check(self, other: "Monomial") -> None:
        if len(self.exps) != len(other.exps):
            raise DimensionMismatch(
                f"ambient mismatch: {len(self.exps)} vs {len(other.exps)} variables"
            )

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(map(max, self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(map(min, self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if ``other`` does not divide ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    # Graded-lex with x1 > x2 > ... > xn: compare degree, then the
    # exponent tuple itself (earlier variables dominate).
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.degree, self.exps)

    def __lt__(self, other: "Monomial") -> bool:
        self._check(other)
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Monomial") -> bool:
        self._check(other)
        return self.sort_key() <= other.sort_key()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self.exps!r})"


def lcm(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise maximum of exponents."""
    return a.lcm(b)


def gcd(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise minimum of exponents."""
    return a.gcd(b)


def _minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal subset, sorted graded-lex descending."""
    distinct = sorted(set(monomials), key=Monomial.sort_key)  # degree ascending
    kept: list[Monomial] = []
    for m in distinct:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    kept.sort(key=Monomial.sort_key, reverse=True)
    return kept


class MonomialIdeal:
    """A monomial ideal, held as its unique minimal generating set.

    The constructor minimalizes and canonically orders whatever it is
    given, so two ideals compare equal iff they have the same ambient n
    and the same generators.  The empty generating set is the zero ideal.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, monomials: Iterable[Monomial] = ()):
        if n < 1:
            raise ValueError("ambient variable count must be >= 1")
        ms = list(monomials)
        for m in ms:
            if m.n != n:
                raise DimensionMismatch(f"generator {m} has {m.n} variables, ambient is {n}")
            if m.is_one:
                raise ValueError("unit ideal (generator 1) is out of scope")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(_minimalize(ms)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @property
    def is_equigenerated(self) -> bool:
        degs = {g.degree for g in self.gens}
        return len(degs) <= 1

    @property
    def degree(self) -> int | None:
        """Common generator degree for an equigenerated ideal, else None.

        The zero ideal has no degree (None).
        """
        degs = {g.degree for g in self.gens}
        if len(degs) == 1:
            return degs.pop()
        return None

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: some generator divides m."""
        if m.n != self.n:
            raise DimensionMismatch(f"{m} has {m.n} variables, ambient is {self.n}")
        return any(g.divides(m) for g in self.gens)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"MonomialIdeal(n={self.n}, zero)"
        return f"MonomialIdeal(n={self.n}, ({', '.join(map(str, self.gens))}))"


def minimal_generators(monomials: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Divisibility-minimal subset of ``monomials`` as an ideal.

    Result is independent of input order.  ``n`` is required when the
    input is empty (a zero ideal still carries an ambient).
    """
    ms = list(monomials)
    if not ms:
        if n is None:
            raise ValueError("ambient n required for an empty generating set")
        return MonomialIdeal(n)
    ambient = n if n is not None else ms[0].n
    return MonomialIdeal(ambient, ms)


def ideal_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generating set of I^k, k >= 1 (k = 0 is rejected)."""
    if k < 1:
        raise ValueError("power k must be >= 1 (unit ideal is out of scope)")
    if k == 1 or I.is_zero:
        return I
    products = []
    for combo in itertools.combinations_with_replacement(I.gens, k):
        m = combo[0]
        for g in combo[1:]:
            m = m * g
        products.append(m)
    return MonomialIdeal(I.n, products)


def restrict_leq(J: MonomialIdeal, alpha: Sequence[int | None]) -> MonomialIdeal:
    """Sub-ideal of generators within the exponent bound ``alpha``.

    ``alpha`` has one entry per variable; ``None`` (or any value >= the
    occurring exponents, e.g. math.inf) means unbounded in that slot.
    A subset of a minimal generating set is minimal, so no
    re-minimization happens.
    """
    if len(alpha) != J.n:
        raise DimensionMismatch(f"bound vector has {len(alpha)} entries, ambient is {J.n}")
    for a in alpha:
        if a is not None and a < 0:
            raise ValueError("bound entries must be >= 0")

    def within(m: Monomial) -> bool:
        return all(a is None or e <= a for e, a in zip(m.exps, alpha))

    kept = [g for g in J.gens if within(g)]
    out = MonomialIdeal(J.n, kept)
    assert set(out.gens) <= set(J.gens)
    return out


def squarefree_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """The k-th squarefree power: squarefree members of G(I^k).

    For an edge ideal the generators correspond to size-k matchings.
    """
    if not I.is_squarefree:
        raise ValueError("squarefree powers are defined for squarefree ideals only")
    if k < 1:
        raise ValueError("power k must be >= 1")
    return restrict_leq(ideal_power(I, k), (1,) * I.n)


def edge_ideal(G) -> MonomialIdeal:
    """Edge ideal of a graph: x_i*x_j per edge, x_i^2 per loop."""
    n = G.n
    gens = []
    for e in G.sorted_edges():
        i, j = e
        gens.append(Monomial.from_pairs(n, [(i, 1), (j, 1)]))
    for i in sorted(G.loops):
        gens.append(Monomial.from_pairs(n, [(i, 2)]))
    return MonomialIdeal(n, gens)


# --- text format -----------------------------------------------------------
#
# One monomial per line, either space-separated `var:exp` pairs or a
# compact string like `x1^2*x3`; ambient declared first as `n=<int>`.

_COMPACT_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _parse_monomial_line(line: str, n: int, lineno: int) -> Monomial:
    line = line.strip()
    if line == "1":
        return Monomial.one(n)
    pairs: list[tuple[int, int]] = []
    if ":" in line:
        for tok in line.split():
            var, _, exp = tok.partition(":")
            if not var.isdigit() or not exp.isdigit():
                raise ValueError(f"line {lineno}: bad var:exp token {tok!r}")
            pairs.append((int(var), int(exp)))
    else:
        for tok in line.split("*"):
            m = _COMPACT_FACTOR.match(tok.strip())
            if not m:
                raise ValueError(f"line {lineno}: bad factor {tok!r}")
            pairs.append((int(m.group(1)), int(m.group(2) or 1)))
    try:
        return Monomial.from_pairs(n, pairs)
    except ValueError as exc:
        raise ValueError(f"line {lineno}: {exc}") from None


def parse_ideal_text(text: str) -> MonomialIdeal:
    """Parse the ideal text format.  Raises ValueError with line numbers."""
    n: int | None = None
    gens: list[Monomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = re.match(r"^n\s*=\s*(\d+)$", line)
            if not m:
                raise ValueError(f"line {lineno}: expected header 'n=<int>', got {line!r}")
            n = int(m.group(1))
            if n < 1:
                raise ValueError(f"line {lineno}: ambient n must be >= 1")
            continue
        gens.append(_parse_monomial_line(line, n, lineno))
    if n is None:
        raise ValueError("missing header line 'n=<int>'")
    return MonomialIdeal(n, gens)


def format_ideal_text(I: MonomialIdeal) -> str:
    lines = [f"n={I.n}"]
    lines.extend(str(g) for g in I.gens)
    return "\n".join(lines) + "\n"
