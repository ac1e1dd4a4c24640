"""Exact combinatorial oracles: violating sets and bounded spanning trees.

Two kinds of witness back every spectral claim in this package.  A violating
vertex set certifies that a degree-constrained spanning tree cannot exist; an
explicit tree certifies that one does.  Both searches are exhaustive at desk
scale, so a negative answer is a proof, not a heuristic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, is_connected

TREE_FOUND = "tree_found"
WIN_VIOLATOR = "win_violator"
KANEKO_VIOLATOR = "kaneko_violator"
EXHAUSTED = "exhausted"

# The Hamiltonian-path table has 2^n entries; past these sizes the generic
# backtracking search is used instead.
_DP_LIMIT_KTREE = 18
_DP_LIMIT_LEAF = 12


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree given as a lexicographically sorted tuple of edges."""

    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.edges) + 1


@dataclass(frozen=True)
class Certificate:
    """Outcome of a certification run: a witness tree or a violating set.

    kind is one of TREE_FOUND, WIN_VIOLATOR, KANEKO_VIOLATOR, EXHAUSTED.
    Violator certificates carry the component and isolated-vertex counts of
    the graph with the set deleted.
    """

    kind: str
    tree: SpanningTree | None = None
    vertex_set: tuple[int, ...] | None = None
    component_count: int | None = None
    isolated_count: int | None = None


def _stats_from_edges(edges) -> tuple[int, int]:
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if not deg:
        return (0, 0)
    load: dict[int, int] = {}
    for u, v in edges:
        if deg[u] == 1:
            load[v] = load.get(v, 0) + 1
        if deg[v] == 1:
            load[u] = load.get(u, 0) + 1
    return (max(deg.values()), max(load.values(), default=0))


def tree_stats(t: SpanningTree) -> tuple[int, int]:
    """Return (max_degree, leaf_degree) of a tree.

    leaf_degree is the largest number of degree-1 neighbors any one vertex
    has: a path scores 1, a star on three or more vertices scores n-1.
    """
    return _stats_from_edges(t.edges)


def is_spanning_tree(g: Graph, t: SpanningTree) -> bool:
    """Check that t has n-1 edges of g, is acyclic, and covers every vertex."""
    if len(t.edges) != g.n - 1:
        return False
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in t.edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _component_count(nbrs, alive: int) -> int:
    count = 0
    todo = alive
    while todo:
        count += 1
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= nbrs[b.bit_length() - 1]
            frontier = nxt & alive & ~comp
            comp |= frontier
        todo &= ~comp
    return count


def _isolated_count(nbrs, alive: int) -> int:
    count = 0
    m = alive
    while m:
        b = m & -m
        m ^= b
        if not (nbrs[b.bit_length() - 1] & alive):
            count += 1
    return count


def find_win_violator(g: Graph, k: int) -> tuple[int, ...] | None:
    """First vertex set S with more than (k-2)|S|+2 components left after
    deleting S, scanning subsets by size then lexicographically.  The empty
    set is included; it never violates on a connected graph.
    """
    if k < 3:
        raise ValueError("component-count condition needs k >= 3")
    n, nbrs = g.n, g.nbrs
    full = (1 << n) - 1
    # c(G-S) <= n-|S|, so sets larger than (n-3)/(k-1) cannot violate
    cap = max(0, (n - 3) // (k - 1))
    for size in range(min(cap, n) + 1):
        bound = (k - 2) * size + 2
        for combo in itertools.combinations(range(n), size):
            smask = 0
            for v in combo:
                smask |= 1 << v
            if _component_count(nbrs, full & ~smask) > bound:
                return combo
    return None


def find_kaneko_violator(g: Graph, k: int) -> tuple[int, ...] | None:
    """First nonempty S leaving at least (k+1)|S| isolated vertices, scanning
    subsets by size then lexicographically."""
    if k < 1:
        raise ValueError("isolated-vertex condition needs k >= 1")
    n, nbrs = g.n, g.nbrs
    full = (1 << n) - 1
    # i(G-S) <= n-|S|, so sets larger than n/(k+2) cannot violate
    cap = n // (k + 2)
    for size in range(1, cap + 1):
        bound = (k + 1) * size
        for combo in itertools.combinations(range(n), size):
            smask = 0
            for v in combo:
                smask |= 1 << v
            alive = full & ~smask
            hits = 0
            m = alive
            while m:
                b = m & -m
                m ^= b
                if not (nbrs[b.bit_length() - 1] & alive):
                    hits += 1
                    if hits >= bound:
                        return combo
    return None


def _hamiltonian_path(n: int, nbrs) -> tuple[int, ...] | None:
    """Vertex order of some Hamiltonian path, or None.  Exact subset DP."""
    if n == 1:
        return (0,)
    full = (1 << n) - 1
    ends = [0] * (full + 1)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, full):
        e = ends[mask]
        while e:
            b = e & -e
            e ^= b
            ext = nbrs[b.bit_length() - 1] & ~mask
            while ext:
                u = ext & -ext
                ext ^= u
                ends[mask | u] |= u
    if not ends[full]:
        return None
    # walk the table backwards, always taking the lowest usable endpoint
    path = []
    mask = full
    end = ends[mask] & -ends[mask]
    while True:
        v = end.bit_length() - 1
        path.append(v)
        mask ^= end
        if not mask:
            break
        cand = ends[mask] & nbrs[v]
        end = cand & -cand
    path.reverse()
    return tuple(path)


def _path_edges(path) -> tuple[tuple[int, int], ...]:
    edges = [
        (u, v) if u < v else (v, u) for u, v in zip(path, path[1:])
    ]
    edges.sort()
    return tuple(edges)


def _dfs_tree_edges(n: int, nbrs, root: int) -> list[tuple[int, int]]:
    seen = 1 << root
    stack = [root]
    edges = []
    while stack:
        v = stack[-1]
        rest = nbrs[v] & ~seen
        if rest:
            b = rest & -rest
            u = b.bit_length() - 1
            seen |= b
            edges.append((u, v) if u < v else (v, u))
            stack.append(u)
        else:
            stack.pop()
    return edges


def _tree_battery(g: Graph, accept) -> SpanningTree | None:
    """Greedy depth-first trees from each root; a cheap first pass that
    settles most searches before the exhaustive machinery runs."""
    n, nbrs = g.n, g.nbrs
    roots = sorted(range(n), key=lambda v: (-nbrs[v].bit_count(), v))
    for root in roots:
        edges = _dfs_tree_edges(n, nbrs, root)
        if accept(_stats_from_edges(edges)):
            edges.sort()
            return SpanningTree(tuple(edges))
    return None


def _backtrack_tree(
    g: Graph, deg_cap: int | None, leaf_cap: int | None
) -> SpanningTree | None:
    """Exhaustive search over edge subsets forming a spanning tree.

    Edges are tried in lexicographic order after relabeling vertices by
    ascending degree, so tightly constrained vertices are decided first.
    Include is tried before exclude; the first tree satisfying the cap is
    returned, and None is returned only after the whole space is pruned or
    explored.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (g.degree(v), v))
    pos = [0] * n
    for new, old in enumerate(order):
        pos[old] = new
    nbrs = [0] * n
    for old in range(n):
        acc = 0
        m = g.nbrs[old]
        while m:
            b = m & -m
            m ^= b
            acc |= 1 << pos[b.bit_length() - 1]
        nbrs[pos[old]] = acc
    edges = sorted(
        (pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u])
        for u, v in g.edges()
    )
    ne = len(edges)
    full = (1 << n) - 1

    parent = list(range(n))
    size = [1] * n
    deg = [0] * n
    undec = [0] * n
    for u, v in edges:
        undec[u] += 1
        undec[v] += 1
    avail = nbrs[:]  # adjacency over edges not yet excluded
    tree_nbr = [0] * n  # the unique tree neighbor while deg == 1
    leafload = [0] * n  # committed degree-1 neighbors; final in any completion
    chosen: list[tuple[int, int]] = []

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def connected_avail() -> bool:
        comp = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= avail[b.bit_length() - 1]
            frontier = nxt & ~comp
            comp |= frontier
        return comp == full

    def rec(i: int) -> bool:
        if len(chosen) == n - 1:
            # all later edges would close a cycle, so the tree is final here
            if leaf_cap is not None and _stats_from_edges(chosen)[1] > leaf_cap:
                return False
            return True
        if i == ne:
            return False
        u, v = edges[i]

        ru, rv = find(u), find(v)
        if ru != rv and (
            deg_cap is None or (deg[u] < deg_cap and deg[v] < deg_cap)
        ):
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            deg[u] += 1
            deg[v] += 1
            undec[u] -= 1
            undec[v] -= 1
            if deg[u] == 1:
                tree_nbr[u] = v
            if deg[v] == 1:
                tree_nbr[v] = u
            bumped: list[int] = []
            dead = False
            if leaf_cap is not None:
                for x in (u, v):
                    if undec[x] == 0 and deg[x] == 1:
                        z = tree_nbr[x]
                        leafload[z] += 1
                        bumped.append(z)
                        if leafload[z] > leaf_cap:
                            dead = True
            if not dead:
                chosen.append((u, v))
                if rec(i + 1):
                    return True
                chosen.pop()
            for z in bumped:
                leafload[z] -= 1
            parent[rv] = rv
            size[ru] -= size[rv]
            deg[u] -= 1
            deg[v] -= 1
            undec[u] += 1
            undec[v] += 1

        undec[u] -= 1
        undec[v] -= 1
        avail[u] &= ~(1 << v)
        avail[v] &= ~(1 << u)
        bumped2: list[int] = []
        dead = False
        for x in (u, v):
            if undec[x] == 0:
                if deg[x] == 0:
                    dead = True  # stranded: x can never join the tree
                elif leaf_cap is not None and deg[x] == 1:
                    z = tree_nbr[x]
                    leafload[z] += 1
                    bumped2.append(z)
                    if leafload[z] > leaf_cap:
                        dead = True
        if not dead and not connected_avail():
            dead = True
        found = False
        if not dead:
            found = rec(i + 1)
        for z in bumped2:
            leafload[z] -= 1
        avail[u] |= 1 << v
        avail[v] |= 1 << u
        undec[u] += 1
        undec[v] += 1
        return found

    if not rec(0):
        return None
    back = [
        (order[u], order[v]) if order[u] < order[v] else (order[v], order[u])
        for u, v in chosen
    ]
    back.sort()
    return SpanningTree(tuple(back))


def find_k_tree(g: Graph, k: int) -> SpanningTree | None:
    """Some spanning tree with every vertex degree at most k, or None.

    The search is exact: absence means no such tree exists.  k = 2 is the
    Hamiltonian-path case and is allowed here even though the component-count
    condition itself only speaks about k >= 3.
    """
    if k < 2:
        raise ValueError("degree-bounded tree search needs k >= 2")
    if not is_connected(g):
        raise ValueError("spanning-tree search needs a connected graph")
    if g.n == 1:
        return SpanningTree(())
    t = _tree_battery(g, lambda st: st[0] <= k)
    if t is not None:
        return t
    if k == 2:
        if g.n <= _DP_LIMIT_KTREE:
            path = _hamiltonian_path(g.n, g.nbrs)
            if path is None:
                return None
            return SpanningTree(_path_edges(path))
        return _backtrack_tree(g, deg_cap=2, leaf_cap=None)
    return _backtrack_tree(g, deg_cap=k, leaf_cap=None)


def find_leaf_tree(g: Graph, k: int) -> SpanningTree | None:
    """Some spanning tree whose leaf degree is at most k, or None.

    Exact: tries greedy depth-first trees, then a Hamiltonian path (leaf
    degree 1 whenever n >= 2), then the exhaustive backtracking search.
    """
    if k < 1:
        raise ValueError("leaf-degree tree search needs k >= 1")
    if not is_connected(g):
        raise ValueError("spanning-tree search needs a connected graph")
    if g.n == 1:
        return SpanningTree(())
    if g.n == 2:
        return SpanningTree(((0, 1),))
    t = _tree_battery(g, lambda st: st[1] <= k)
    if t is not None:
        return t
    if g.n <= _DP_LIMIT_LEAF:
        path = _hamiltonian_path(g.n, g.nbrs)
        if path is not None:
            cand = SpanningTree(_path_edges(path))
            # a path on exactly 3 vertices has leaf degree 2, not 1
            if tree_stats(cand)[1] <= k:
                return cand
    return _backtrack_tree(g, deg_cap=None, leaf_cap=k)


def _violator_certificate(kind: str, g: Graph, s) -> Certificate:
    smask = 0
    for v in s:
        smask |= 1 << v
    alive = ((1 << g.n) - 1) & ~smask
    return Certificate(
        kind=kind,
        vertex_set=tuple(s),
        component_count=_component_count(g.nbrs, alive),
        isolated_count=_isolated_count(g.nbrs, alive),
    )


def certify_win(g: Graph, k: int) -> Certificate:
    """Violating set for the component-count condition if one exists, else a
    spanning tree with max degree at most k, else EXHAUSTED."""
    if not is_connected(g):
        raise ValueError("certification needs a connected graph")
    s = find_win_violator(g, k)
    if s is not None:
        return _violator_certificate(WIN_VIOLATOR, g, s)
    t = find_k_tree(g, k)
    if t is not None:
        return Certificate(kind=TREE_FOUND, tree=t)
    return Certificate(kind=EXHAUSTED)


def certify_kaneko(g: Graph, k: int) -> Certificate:
    """Violating set for the isolated-vertex condition if one exists, else a
    spanning tree with leaf degree at most k, else EXHAUSTED."""
    if not is_connected(g):
        raise ValueError("certification needs a connected graph")
    s = find_kaneko_violator(g, k)
    if s is not None:
        return _violator_certificate(KANEKO_VIOLATOR, g, s)
    t = find_leaf_tree(g, k)
    if t is not None:
        return Certificate(kind=TREE_FOUND, tree=t)
    return Certificate(kind=EXHAUSTED)
