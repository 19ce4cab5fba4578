"""The lcm lattice of a monomial ideal.

Elements are the least common multiples of subsets of the minimal
generators (computed by iterated pairwise closure), ordered by
divisibility, with the monomial 1 as bottom.  Lattices and their open
intervals are immutable after construction; interval queries memoize.
"""

from __future__ import annotations

from functools import lru_cache

from .monomials import Monomial, MonomialIdeal

__all__ = ["LcmLattice", "build_lcm_lattice", "lcm_closure"]


def lcm_closure(atoms: tuple[Monomial, ...]) -> set[Monomial]:
    """All lcms of nonempty subsets of ``atoms`` (join closure)."""
    closure: set[Monomial] = set(atoms)
    frontier = set(atoms)
    while frontier:
        new: set[Monomial] = set()
        for v in frontier:
            for a in atoms:
                j = v.lcm(a)
                if j not in closure:
                    new.add(j)
        closure |= new
        frontier = new
    return closure


class LcmLattice:
    """L(I): join-closed set of lcms with bottom element 1."""

    __slots__ = ("ideal", "bottom", "elements", "_set", "_intervals")

    def __init__(self, ideal: MonomialIdeal):
        if ideal.is_zero:
            raise ValueError("the zero ideal has no lcm lattice")
        object.__setattr__(self, "ideal", ideal)
        bottom = Monomial.one(ideal.n)
        object.__setattr__(self, "bottom", bottom)
        elems = sorted(lcm_closure(ideal.gens) | {bottom}, key=Monomial.sort_key)
        object.__setattr__(self, "elements", tuple(elems))
        object.__setattr__(self, "_set", frozenset(elems))
        object.__setattr__(self, "_intervals", {})

    @property
    def atoms(self) -> tuple[Monomial, ...]:
        return self.ideal.gens

    def contains(self, u: Monomial) -> bool:
        return u in self._set

    def __len__(self) -> int:
        return len(self.elements)

    def open_interval(self, u: Monomial) -> tuple[Monomial, ...]:
        """Elements v with 1 < v < u, sorted; memoized per u."""
        if not self.contains(u):
            raise ValueError(f"{u} is not a lattice element")
        cached = self._intervals.get(u)
        if cached is None:
            cached = tuple(
                v
                for v in self.elements
                if not v.is_one and v != u and v.divides(u)
            )
            self._intervals[u] = cached
        return cached


@lru_cache(maxsize=256)
def build_lcm_lattice(I: MonomialIdeal) -> LcmLattice:
    """Lattice of all distinct lcms of subsets of G(I); rejects the zero ideal."""
    return LcmLattice(I)
