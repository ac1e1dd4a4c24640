"""Small simple graphs: construction, combinators, queries, serialization.

Vertices are 0..n-1. Adjacency is kept as one integer bitmask per vertex,
which keeps the exhaustive searches elsewhere in the package cheap. All
values are immutable by convention; every operation returns a new Graph.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Undirected simple graph on vertices 0..n-1 (n = 0 is legal)."""

    __slots__ = ("n", "nbrs")

    def __init__(self, n: int, nbrs: Sequence[int]):
        self.n = n
        self.nbrs = tuple(nbrs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.nbrs == other.nbrs

    def __hash__(self) -> int:
        return hash((self.n, self.nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def degree(self, v: int) -> int:
        return self.nbrs[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbrs[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as sorted (u, v) pairs with u < v, lexicographic."""
        out = []
        for u in range(self.n):
            m = self.nbrs[u] >> (u + 1) << (u + 1)
            while m:
                low = m & -m
                out.append((u, low.bit_length() - 1))
                m ^= low
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.nbrs) // 2

    def adjacency_matrix(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix as float64."""
        a = np.zeros((self.n, self.n))
        for u in range(self.n):
            m = self.nbrs[u]
            while m:
                low = m & -m
                a[u, low.bit_length() - 1] = 1.0
                m ^= low
        return a

    def laplacian_matrix(self) -> np.ndarray:
        """Degree matrix minus adjacency matrix."""
        a = self.adjacency_matrix()
        return np.diag(a.sum(axis=1)) - a


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with the given edges; duplicates are idempotent."""
    nbrs = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        nbrs[u] |= 1 << v
        nbrs[v] |= 1 << u
    return Graph(n, nbrs)


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertex-disjoint union; g1 keeps its labels, g2 is shifted by g1.n."""
    shift = g1.n
    nbrs = list(g1.nbrs) + [m << shift for m in g2.nbrs]
    return Graph(g1.n + g2.n, nbrs)


def union_of(g: Graph, copies: int) -> Graph:
    """Disjoint union of `copies` copies of g."""
    out = empty_graph(0)
    for _ in range(copies):
        out = disjoint_union(out, g)
    return out


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; K_0 is the identity."""
    shift = g1.n
    mask2 = ((1 << g2.n) - 1) << shift
    mask1 = (1 << shift) - 1
    nbrs = [m | mask2 for m in g1.nbrs] + [(m << shift) | mask1 for m in g2.nbrs]
    return Graph(g1.n + g2.n, nbrs)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ m ^ (1 << v) for v, m in enumerate(g.nbrs)])


def deletion_map(n: int, s: Iterable[int]) -> dict[int, int]:
    """Old-to-new index map for deleting vertex set s, order preserving."""
    dead = set(s)
    out = {}
    new = 0
    for v in range(n):
        if v not in dead:
            out[v] = new
            new += 1
    return out


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on V minus s, relabeled per deletion_map."""
    smask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        smask |= 1 << v
    keep = [v for v in range(g.n) if not smask >> v & 1]
    pos = {v: i for i, v in enumerate(keep)}
    nbrs = []
    for v in keep:
        m = g.nbrs[v] & ~smask
        new = 0
        while m:
            low = m & -m
            new |= 1 << pos[low.bit_length() - 1]
            m ^= low
        nbrs.append(new)
    return Graph(len(keep), nbrs)


def _component_masks(n: int, nbrs: Sequence[int]) -> list[int]:
    """Connected components as bitmasks, ordered by smallest member."""
    seen = 0
    full = (1 << n) - 1
    out = []
    while seen != full:
        rest = full & ~seen
        comp = rest & -rest
        while True:
            grow = comp
            m = comp
            while m:
                low = m & -m
                grow |= nbrs[low.bit_length() - 1]
                m ^= low
            if grow == comp:
                break
            comp = grow
        out.append(comp)
        seen |= comp
    return out


def components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    out = []
    for mask in _component_masks(g.n, g.nbrs):
        members = set()
        while mask:
            low = mask & -mask
            members.add(low.bit_length() - 1)
            mask ^= low
        out.append(frozenset(members))
    return out


def component_count(g: Graph) -> int:
    return len(_component_masks(g.n, g.nbrs))


def isolated_count(g: Graph) -> int:
    return sum(1 for m in g.nbrs if m == 0)


def degree_stats(g: Graph) -> tuple[int, int, bool]:
    """(min degree, max degree, is_regular); error on the 0-vertex graph."""
    if g.n == 0:
        raise ValueError("degree stats undefined on 0 vertices")
    degs = g.degrees()
    lo, hi = min(degs), max(degs)
    return lo, hi, lo == hi


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(_component_masks(g.n, g.nbrs)) == 1


def is_connected_masks(n: int, nbrs: Sequence[int]) -> bool:
    """Connectivity check on raw bitmask adjacency, for hot loops."""
    if n == 0:
        return False
    full = (1 << n) - 1
    comp = 1
    while True:
        grow = comp
        m = comp
        while m:
            low = m & -m
            grow |= nbrs[low.bit_length() - 1]
            m ^= low
        if grow == comp:
            return comp == full
        comp = grow


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertices whose removal disconnects g or leaves one vertex.

    Complete graphs give n-1; disconnected graphs give 0. Brute force over
    subsets in ascending size, which is exact at desk scale since the
    answer is at most the minimum degree.
    """
    if g.n == 0:
        raise ValueError("connectivity undefined on 0 vertices")
    n, nbrs = g.n, g.nbrs
    if g.edge_count() == n * (n - 1) // 2:
        return n - 1
    if len(_component_masks(n, nbrs)) > 1:
        return 0
    min_deg = min(m.bit_count() for m in nbrs)
    for size in range(1, min_deg + 1):
        for cut in combinations(range(n), size):
            smask = 0
            for v in cut:
                smask |= 1 << v
            rest = [nbrs[v] & ~smask for v in range(n)]
            live = [v for v in range(n) if not smask >> v & 1]
            # flood from the first surviving vertex
            comp = 1 << live[0]
            while True:
                grow = comp
                m = comp
                while m:
                    low = m & -m
                    grow |= rest[low.bit_length() - 1]
                    m ^= low
                if grow == comp:
                    break
                comp = grow
            if comp.bit_count() != len(live):
                return size
    return min_deg


# ---------------------------------------------------------------------------
# graph6 codec (short form, n <= 62)

def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 short form supports at most 62 vertices")
    chars = [chr(g.n + 63)]
    bits = []
    for j in range(1, g.n):
        col = g.nbrs[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise ValueError("graph6 long form (n > 62) not supported")
    if not 63 <= head <= 125:
        raise ValueError(f"malformed graph6 header byte {head}")
    n = head - 63
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    body = s[1:]
    if len(body) != want:
        raise ValueError(f"graph6 payload length {len(body)}, expected {want}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ValueError(f"malformed graph6 payload byte {ord(ch)}")
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero graph6 padding bits")
    nbrs = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                nbrs[i] |= 1 << j
                nbrs[j] |= 1 << i
            idx += 1
    return Graph(n, nbrs)


# ---------------------------------------------------------------------------
# edge-list text format: first line n, then one "u v" pair per line

def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge-list text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"edge-list header must be a vertex count, got {lines[0]!r}")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
