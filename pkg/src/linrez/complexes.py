"""Simplicial complexes: clique complexes, induced subcomplexes,
Stanley-Reisner complexes, and order complexes of lcm-lattice intervals.

A complex is stored by its facets (inclusion-maximal faces) over an
arbitrary orderable, hashable vertex-label set.  Two degenerate values
are distinguished: the void complex (no faces at all) and the empty
complex {∅} (the empty face only); the latter carries reduced homology
in degree -1.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .monomials import Monomial, MonomialIdeal

__all__ = [
    "SimplicialComplex",
    "clique_complex",
    "induced_subcomplex",
    "stanley_reisner_complex",
    "order_complex_of_interval",
    "dump_complex",
]


class SimplicialComplex:
    """Facet-based simplicial complex on orderable vertex labels."""

    __slots__ = ("facets", "vertices", "_faces_cache")

    def __init__(self, facets: Iterable[Iterable]):
        fs = {frozenset(f) for f in facets}
        maximal = frozenset(f for f in fs if not any(f < g for g in fs))
        object.__setattr__(self, "facets", maximal)
        object.__setattr__(self, "vertices", frozenset(v for f in maximal for v in f))
        object.__setattr__(self, "_faces_cache", {})

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(())

    @classmethod
    def empty_complex(cls) -> "SimplicialComplex":
        return cls((frozenset(),))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        """Max facet size minus 1; -1 for {∅}; -2 for the void complex."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def has_face(self, face: Iterable) -> bool:
        fs = frozenset(face)
        return any(fs <= g for g in self.facets)

    def faces_by_dim(self, max_dim: int | None = None) -> dict[int, list[tuple]]:
        """Faces as sorted tuples, grouped by dimension (-1 holds ``()``).

        Enumeration stops at ``max_dim`` so large simplices are never
        expanded past the homological degrees a caller needs.
        """
        if self.is_void:
            return {}
        cap = self.dimension if max_dim is None else min(max_dim, self.dimension)
        cached = self._faces_cache.get(cap)
        if cached is not None:
            return cached
        seen: set[tuple] = set()
        for f in self.facets:
            fv = sorted(f)
            top = min(len(fv), cap + 1)
            for k in range(0, top + 1):
                seen.update(itertools.combinations(fv, k))
        out: dict[int, list[tuple]] = {}
        for face in seen:
            out.setdefault(len(face) - 1, []).append(face)
        for k in out:
            out[k].sort()
        self._faces_cache[cap] = out
        return out

    def f_vector(self) -> dict[int, int]:
        return {k: len(v) for k, v in self.faces_by_dim().items()}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        shown = sorted(tuple(sorted(f)) for f in self.facets)
        return f"SimplicialComplex(facets={shown})"


def clique_complex(G) -> SimplicialComplex:
    """Facets are the maximal cliques of a simple graph."""
    if not G.is_simple:
        raise ValueError("clique complex is defined for simple graphs")
    verts = list(range(1, G.n + 1))
    adj = {v: G.neighbors(v) for v in verts}
    cliques: list[frozenset[int]] = []

    # Bron-Kerbosch without pivoting; graphs here are tiny.
    def expand(R: set[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            cliques.append(frozenset(R))
            return
        for v in sorted(P):
            expand(R | {v}, P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    expand(set(), set(verts), set())
    return SimplicialComplex(cliques)


def induced_subcomplex(D: SimplicialComplex, W: Iterable) -> SimplicialComplex:
    """Faces of D contained in W."""
    ws = frozenset(W)
    if D.is_void:
        return SimplicialComplex.void()
    return SimplicialComplex(f & ws for f in D.facets)


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """Complex on 1..n whose minimal nonfaces are the generator supports."""
    if not I.is_squarefree:
        raise ValueError("Stanley-Reisner complex needs a squarefree ideal")
    n = I.n
    nonfaces = [g.support for g in I.gens]
    faces = []
    for k in range(n, -1, -1):
        for W in itertools.combinations(range(1, n + 1), k):
            ws = frozenset(W)
            if not any(nf <= ws for nf in nonfaces):
                if not any(ws <= f for f in faces):
                    faces.append(ws)
    return SimplicialComplex(faces)


def order_complex_of_interval(L, u: Monomial) -> SimplicialComplex:
    """Order complex of the open interval (1, u) in an lcm lattice.

    Vertices are the lattice elements strictly between 1 and u; faces
    are the chains.  Facets are the maximal chains; for an atom the
    interval is empty and the result is the empty complex {∅}, which is
    what makes beta_0 come out as 1 on generators.
    """
    if not L.contains(u):
        raise ValueError(f"{u} is not a lattice element")
    elems = L.open_interval(u)
    if not elems:
        return SimplicialComplex.empty_complex()
    order = sorted(elems, key=Monomial.sort_key)
    above: dict[Monomial, list[Monomial]] = {
        v: [w for w in order if v != w and v.divides(w)] for v in order
    }
    # covers: strict successors with nothing in between
    covers: dict[Monomial, list[Monomial]] = {}
    for v in order:
        succ = above[v]
        covers[v] = [w for w in succ if not any(z.divides(w) and z != w for z in succ)]
    below_counts = {v: 0 for v in order}
    for v in order:
        for w in above[v]:
            below_counts[w] += 1
    minimal = [v for v in order if below_counts[v] == 0]

    # maximal chains = cover-paths from minimal to maximal elements
    chains: list[tuple[Monomial, ...]] = []

    def extend(chain: list[Monomial]) -> None:
        succs = covers[chain[-1]]
        if not succs:
            chains.append(tuple(chain))
            return
        for w in succs:
            chain.append(w)
            extend(chain)
            chain.pop()

    for v in minimal:
        extend([v])
    return SimplicialComplex(chains)


def dump_complex(D: SimplicialComplex) -> str:
    """Debug/golden format: one facet per line, vertices space-separated."""
    if D.is_void:
        return "(void)\n"
    lines = []
    for f in sorted((tuple(sorted(x)) for x in D.facets)):
        lines.append(" ".join(str(v) for v in f) if f else "(empty)")
    return "\n".join(lines) + "\n"
