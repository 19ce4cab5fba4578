"""Graphs with optional loops, matchings, gaps, and small-graph enumeration.

Vertices are 1..n.  Edges are unordered pairs; a loop is kept separately
as a single vertex.  Matchings never use loops; gap tests treat a loop
at i as the one-element vertex set {i}.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "Matching",
    "MatchingReport",
    "cycle",
    "path",
    "complete",
    "whisker_graph",
    "loop_graph",
    "complement",
    "induced_subgraph",
    "is_gap_free",
    "edges_form_gap",
    "shortest_induced_cycle_ge4",
    "enumerate_matchings",
    "matching_number",
    "restricted_matching_number",
    "matching_report",
    "matching_graph",
    "canonical_edge_set",
    "enumerate_graphs",
    "enumerate_trees",
    "parse_graph_text",
    "format_graph_text",
]

Edge = frozenset  # of int


def _as_edge(pair) -> frozenset[int]:
    i, j = pair
    if i == j:
        raise ValueError(f"edge ({i},{j}) is a loop; pass loops separately")
    return frozenset((i, j))


class Graph:
    """A graph on the vertex set 1..n with no double edges, loops allowed."""

    __slots__ = ("n", "edges", "loops")

    def __init__(self, n: int, edges: Iterable = (), loops: Iterable[int] = ()):
        if n < 1:
            raise ValueError("vertex count must be >= 1")
        es = frozenset(_as_edge(e) for e in edges)
        ls = frozenset(int(v) for v in loops)
        for e in es:
            for v in e:
                if not 1 <= v <= n:
                    raise ValueError(f"edge vertex {v} out of range 1..{n}")
        for v in ls:
            if not 1 <= v <= n:
                raise ValueError(f"loop vertex {v} out of range 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "loops", ls)

    @property
    def is_simple(self) -> bool:
        return not self.loops

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def all_edges_with_loops(self) -> list[frozenset[int]]:
        """Edges and loops uniformly, loops as singleton sets; sorted."""
        items = [frozenset(e) for e in self.edges] + [frozenset((v,)) for v in self.loops]
        return sorted(items, key=lambda s: (min(s), max(s), len(s)))

    def neighbors(self, v: int) -> set[int]:
        return {w for e in self.edges if v in e for w in e if w != v}

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.edges

    def isolated_vertices(self) -> set[int]:
        covered = {v for e in self.edges for v in e} | set(self.loops)
        return set(range(1, self.n + 1)) - covered

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
            and self.loops == other.loops
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.loops))

    def __repr__(self) -> str:
        s = f"Graph(n={self.n}, edges={self.sorted_edges()}"
        if self.loops:
            s += f", loops={sorted(self.loops)}"
        return s + ")"


# --- constructors -----------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(1, n + 1), 2))


def whisker_graph(G: Graph) -> Graph:
    """2n vertices: original edges plus a pendant {i, n+i} at every vertex."""
    if not G.is_simple:
        raise ValueError("whisker graph is defined for simple graphs")
    n = G.n
    edges = list(G.sorted_edges()) + [(i, n + i) for i in range(1, n + 1)]
    return Graph(2 * n, edges)


def loop_graph(G: Graph) -> Graph:
    """The same graph with a loop added at every vertex."""
    if not G.is_simple:
        raise ValueError("loop graph is defined for simple graphs")
    return Graph(G.n, G.edges, loops=range(1, G.n + 1))


def complement(G: Graph) -> Graph:
    if not G.is_simple:
        raise ValueError("complement is defined for simple graphs")
    all_pairs = {frozenset(p) for p in itertools.combinations(range(1, G.n + 1), 2)}
    return Graph(G.n, all_pairs - G.edges)


def induced_subgraph(G: Graph, W: Iterable[int]) -> Graph:
    """Induced subgraph on W, relabeled 1..|W| by increasing original label."""
    ws = sorted(set(W))
    if not ws:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    relab = {v: i + 1 for i, v in enumerate(ws)}
    edges = [tuple(relab[v] for v in e) for e in G.edges if set(e) <= set(ws)]
    loops = [relab[v] for v in G.loops if v in relab]
    return Graph(len(ws), edges, loops)


# --- gaps -------------------------------------------------------------------


def edges_form_gap(G: Graph, e: frozenset[int], f: frozenset[int]) -> bool:
    """True when e and f are disjoint and no edge of G meets both."""
    if e & f:
        return False
    return not any(g & e and g & f for g in G.all_edges_with_loops())


def is_gap_free(G: Graph) -> tuple[bool, tuple | None]:
    """Whether every pair of disjoint edges is bridged by a third edge.

    Returns (True, None) or (False, witness) where the witness is the
    first gap pair in canonical order, each edge as a sorted tuple.
    """
    items = G.all_edges_with_loops()
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            e, f = items[a], items[b]
            if not e & f and not any(g & e and g & f for g in items):
                return False, (tuple(sorted(e)), tuple(sorted(f)))
    return True, None


# --- induced cycles ---------------------------------------------------------


def _is_induced_cycle(G: Graph, W: tuple[int, ...]) -> bool:
    inside = [e for e in G.edges if set(e) <= set(W)]
    if len(inside) != len(W):
        return False
    deg = {v: 0 for v in W}
    for e in inside:
        for v in e:
            deg[v] += 1
    if any(d != 2 for d in deg.values()):
        return False
    # 2-regular with |E|=|V|: connected iff a single cycle
    seen = {W[0]}
    frontier = [W[0]]
    adj = {v: set() for v in W}
    for e in inside:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(W)


def shortest_induced_cycle_ge4(G: Graph) -> int | None:
    """Minimum length >= 4 of an induced (chordless) cycle, or None.

    Exhaustive over vertex subsets; this is the reference implementation
    and the graphs here are tiny.
    """
    if not G.is_simple:
        raise ValueError("induced-cycle search is defined for simple graphs")
    for t in range(4, G.n + 1):
        for W in itertools.combinations(range(1, G.n + 1), t):
            if _is_induced_cycle(G, W):
                return t
    return None


# --- matchings --------------------------------------------------------------


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint non-loop edges."""

    edges: frozenset[frozenset[int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}


def is_matching(G: Graph, edges: Iterable[frozenset[int]]) -> bool:
    es = list(edges)
    if any(e not in G.edges for e in es):
        return False
    seen: set[int] = set()
    for e in es:
        if e & seen:
            return False
        seen |= e
    return True


def enumerate_matchings(G: Graph, k: int) -> list[Matching]:
    """All size-k matchings, each once, in a deterministic order."""
    if k < 1:
        raise ValueError("matching size must be >= 1")
    edges = [frozenset(e) for e in G.sorted_edges()]
    out: list[Matching] = []

    def extend(start: int, chosen: list[frozenset[int]], used: set[int]) -> None:
        if len(chosen) == k:
            out.append(Matching(frozenset(chosen)))
            return
        # not enough edges left to finish
        for idx in range(start, len(edges) - (k - len(chosen)) + 1):
            e = edges[idx]
            if not e & used:
                chosen.append(e)
                extend(idx + 1, chosen, used | e)
                chosen.pop()

    extend(0, [], set())
    return out


def _adot(G: Graph) -> list[int]:
    """Adjacency bitmasks (bit v-1 set when adjacent), loops ignored."""
    adj = [0] * (G.n + 1)
    for e in G.edges:
        a, b = tuple(e)
        adj[a] |= 1 << (b - 1)
        adj[b] |= 1 << (a - 1)
    return adj


def matching_number(G: Graph) -> int:
    return matching_report(G).nu


def _max_matching(G: Graph) -> list[tuple[int, int]]:
    """A maximum matching via bitmask DP over available vertices."""
    adj = _adot(G)
    memo: dict[int, tuple[int, tuple]] = {}

    def best(avail: int) -> tuple[int, tuple]:
        if avail == 0:
            return 0, ()
        if avail in memo:
            return memo[avail]
        v = (avail & -avail).bit_length()  # lowest available vertex
        rest = avail & ~(1 << (v - 1))
        size, picked = best(rest)  # v unmatched
        nbrs = adj[v] & rest
        while nbrs:
            u = (nbrs & -nbrs).bit_length()
            nbrs &= nbrs - 1
            s2, p2 = best(rest & ~(1 << (u - 1)))
            if s2 + 1 > size:
                size, picked = s2 + 1, ((v, u),) + p2
        memo[avail] = (size, picked)
        return size, picked

    _, picked = best((1 << G.n) - 1)
    return sorted(tuple(sorted(p)) for p in picked)


def restricted_matching_number(
    G: Graph,
) -> tuple[int, Matching | None, frozenset[int] | None]:
    """nu_0(G) together with a witness matching and its anchor edge.

    A restricted matching contains an edge forming a gap with every
    other edge of the matching; its size is at least 2.  When none
    exists the value is 1 by convention and the witness is None.
    """
    nu = len(_max_matching(G))
    for s in range(nu, 1, -1):
        for M in enumerate_matchings(G, s):
            for e in sorted(M.edges, key=lambda x: sorted(x)):
                if all(edges_form_gap(G, e, f) for f in M.edges if f != e):
                    return s, M, e
    return 1, None, None


@dataclass(frozen=True)
class MatchingReport:
    """nu, nu_0 and self-certifying witnesses for one graph."""

    nu: int
    nu0: int
    witness_max: Matching | None
    witness_restricted: Matching | None
    witness_anchor: frozenset[int] | None


def matching_report(G: Graph) -> MatchingReport:
    mm = _max_matching(G)
    witness = Matching(frozenset(frozenset(e) for e in mm)) if mm else None
    nu0, wr, anchor = restricted_matching_number(G)
    return MatchingReport(len(mm), nu0, witness, wr, anchor)


def matching_graph(G: Graph, M: Matching) -> Graph:
    """Graph on the edges of M; two edges adjacent when some edge of G
    meets both.  Vertex i corresponds to M.sorted_edges()[i-1]."""
    if not is_matching(G, M.edges):
        raise ValueError("M is not a matching of G")
    edges_of_m = [frozenset(e) for e in M.sorted_edges()]
    k = len(edges_of_m)
    out = []
    for a in range(k):
        for b in range(a + 1, k):
            e1, e2 = edges_of_m[a], edges_of_m[b]
            if any(g & e1 and g & e2 for g in G.all_edges_with_loops()):
                out.append((a + 1, b + 1))
    return Graph(max(k, 1), out)


def graph_is_acyclic(G: Graph) -> bool:
    """True when the simple graph G has no cycle (loops count as cycles)."""
    if G.loops:
        return False
    parent = list(range(G.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in G.sorted_edges():
        a, b = find(e[0]), find(e[1])
        if a == b:
            return False
        parent[a] = b
    return True


# --- canonical labeling and enumeration -------------------------------------


def _refined_classes(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    """Vertex classes under an iterated degree refinement (iso-invariant)."""
    nbrs: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    color = {v: len(nbrs[v]) for v in range(1, n + 1)}
    for _ in range(n):
        sig = {v: (color[v], tuple(sorted(color[w] for w in nbrs[v]))) for v in color}
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in color}
        if new == color:
            break
        color = new
    classes: dict[int, list[int]] = {}
    for v in sorted(color):
        classes.setdefault(color[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_edge_set(G: Graph) -> tuple[int, frozenset[tuple[int, int]]]:
    """Canonical form (n, edge set) under vertex relabeling; simple graphs.

    Brute force over the permutations compatible with an iterated degree
    refinement; adequate for n <= 8.
    """
    if not G.is_simple:
        raise ValueError("canonical form implemented for simple graphs")
    edges = G.sorted_edges()
    classes = _refined_classes(G.n, edges)
    # target slots: class blocks occupy consecutive new labels
    slots: list[list[int]] = []
    start = 1
    for cls in classes:
        slots.append(list(range(start, start + len(cls))))
        start += len(cls)
    best: frozenset[tuple[int, int]] | None = None
    for assignment in itertools.product(*(itertools.permutations(s) for s in slots)):
        perm: dict[int, int] = {}
        for cls, targets in zip(classes, assignment):
            perm.update(zip(cls, targets))
        mapped = frozenset(tuple(sorted((perm[a], perm[b]))) for a, b in edges)
        key = sorted(mapped)
        if best is None or key > sorted(best):
            best = mapped
    assert best is not None or not edges
    return G.n, best if best is not None else frozenset()


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """Non-isomorphic simple graphs on n vertices (isolated vertices allowed)."""
    if n == 1:
        return (Graph(1),)
    reps: dict[frozenset, Graph] = {}
    for parent in _all_graphs(n - 1):
        pedges = parent.sorted_edges()
        for attach in range(1 << (n - 1)):
            new_edges = list(pedges) + [
                (v, n) for v in range(1, n) if attach >> (v - 1) & 1
            ]
            g = Graph(n, new_edges)
            _, key = canonical_edge_set(g)
            if key not in reps:
                reps[key] = Graph(n, sorted(key))
    return tuple(reps[k] for k in sorted(reps, key=sorted))


def enumerate_graphs(n: int, *, no_isolated: bool = True) -> tuple[Graph, ...]:
    """Non-isomorphic simple graphs on exactly n vertices, deterministic order."""
    gs = _all_graphs(n)
    if no_isolated:
        gs = tuple(g for g in gs if not g.isolated_vertices())
    return gs


def enumerate_trees(n: int) -> tuple[Graph, ...]:
    """Non-isomorphic trees on n vertices (filtered from the graph list)."""
    return tuple(
        g
        for g in enumerate_graphs(n, no_isolated=(n > 1))
        if len(g.edges) == n - 1 and graph_is_acyclic(g)
    )


# --- text format -------------------------------------------------------------
#
# Header `n <int>`, then one edge per line `i j` (1-based); `i i` is a loop.


def parse_graph_text(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    loops: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = re.match(r"^n\s+(\d+)$", line)
            if not m:
                raise ValueError(f"line {lineno}: expected header 'n <int>', got {line!r}")
            n = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ValueError(f"line {lineno}: expected edge 'i j', got {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if i == j:
            loops.append(i)
        else:
            edges.append((i, j))
    if n is None:
        raise ValueError("missing header line 'n <int>'")
    try:
        return Graph(n, edges, loops)
    except ValueError as exc:
        raise ValueError(str(exc)) from None


def format_graph_text(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines.extend(f"{i} {j}" for i, j in G.sorted_edges())
    lines.extend(f"{v} {v}" for v in sorted(G.loops))
    return "\n".join(lines) + "\n"


def graph_from_json(obj: dict) -> Graph:
    return Graph(int(obj["n"]), [tuple(e) for e in obj.get("edges", [])], obj.get("loops", []))


def graph_to_json(G: Graph) -> dict:
    out: dict = {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}
    if G.loops:
        out["loops"] = sorted(G.loops)
    return out
