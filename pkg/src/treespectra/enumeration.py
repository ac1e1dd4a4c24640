"""Streaming enumeration of desk-scale graph families.

Every graph on n vertices is identified with the integer whose bits are the
upper-triangle adjacency entries in lexicographic pair order, pair (0, 1)
most significant. Enumeration kinds emit strictly ascending values of that
integer, so runs are reproducible and a scan can be sharded into contiguous
mask ranges. Deduplication keeps one representative per isomorphism class.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterator

import numpy as np

from .graphs import Graph, complement, is_connected_masks, parse_graph6

_LABELED_CAP = 8    # kinds all/connected scan 2^(n(n-1)/2) masks
_REGULAR_CAP = 12
_CANONICAL_CAP = 8  # brute-force permutation minimization

_PAIR_CACHE: dict[int, list[tuple[int, int]]] = {}


def _pairs(n: int) -> list[tuple[int, int]]:
    try:
        return _PAIR_CACHE[n]
    except KeyError:
        p = [(u, v) for u in range(n) for v in range(u + 1, n)]
        _PAIR_CACHE[n] = p
        return p


@dataclass(frozen=True)
class FamilySpec:
    """What to enumerate: kind in {all, connected, regular, file}."""

    kind: str
    n: int = 0
    r: int | None = None
    dedup_iso: bool = False
    path: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("all", "connected", "regular", "file"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "file":
            if not self.path:
                raise ValueError("kind 'file' needs a path")
            return
        if self.path is not None:
            raise ValueError("path only applies to kind 'file'")
        if self.kind == "regular":
            if self.r is None:
                raise ValueError("kind 'regular' needs r")
            if not 1 <= self.n <= _REGULAR_CAP:
                raise ValueError(f"regular enumeration needs 1 <= n <= {_REGULAR_CAP}")
            if not 0 <= self.r < self.n:
                raise ValueError("regularity needs 0 <= r < n")
        else:
            if self.r is not None:
                raise ValueError("r only applies to kind 'regular'")
            if not 1 <= self.n <= _LABELED_CAP:
                raise ValueError(f"kind {self.kind!r} needs 1 <= n <= {_LABELED_CAP}")


def adjacency_mask(g: Graph) -> int:
    """Upper-triangle adjacency as one integer, pair (0, 1) most significant."""
    m = 0
    for u, v in _pairs(g.n):
        m = m << 1 | (g.nbrs[u] >> v & 1)
    return m


def graph_from_mask(n: int, mask: int) -> Graph:
    nbrs = [0] * n
    bit = n * (n - 1) // 2
    for u, v in _pairs(n):
        bit -= 1
        if mask >> bit & 1:
            nbrs[u] |= 1 << v
            nbrs[v] |= 1 << u
    return Graph(n, nbrs)


def generate(spec: FamilySpec, mask_range: tuple[int, int] | None = None) -> Iterator[Graph]:
    """Stream the family in deterministic order (ascending mask; file order).

    mask_range=(lo, hi) restricts kinds all/connected to lo <= mask < hi,
    which is how long scans are sharded and resumed; dedup_iso then applies
    within the scanned range only.
    """
    if mask_range is not None and spec.kind not in ("all", "connected"):
        raise ValueError("mask_range only applies to kinds 'all' and 'connected'")
    if spec.kind in ("all", "connected"):
        return _labeled_stream(spec, mask_range)
    if spec.kind == "regular":
        if spec.dedup_iso:
            return iter(_regular_classes(spec.n, spec.r))
        return (
            Graph(spec.n, nb)
            for nb in _regular_nbrs(spec.n, spec.r, pin=False)
            if is_connected_masks(spec.n, nb)
        )
    return _file_stream(spec)


def count(spec: FamilySpec) -> int:
    """Number of graphs generate(spec) yields; closed form for kind 'all'."""
    if spec.kind == "all" and not spec.dedup_iso:
        return 1 << (spec.n * (spec.n - 1) // 2)
    return sum(1 for _ in generate(spec))


def _labeled_stream(spec: FamilySpec, mask_range: tuple[int, int] | None) -> Iterator[Graph]:
    n = spec.n
    nbits = n * (n - 1) // 2
    lo, hi = mask_range if mask_range is not None else (0, 1 << nbits)
    if not 0 <= lo <= hi <= 1 << nbits:
        raise ValueError("mask_range out of bounds")
    pairs = _pairs(n)
    want_connected = spec.kind == "connected"
    seen: set[int] | None = set() if spec.dedup_iso else None
    for mask in range(lo, hi):
        nbrs = [0] * n
        bit = nbits
        for u, v in pairs:
            bit -= 1
            if mask >> bit & 1:
                nbrs[u] |= 1 << v
                nbrs[v] |= 1 << u
        if want_connected and not is_connected_masks(n, nbrs):
            continue
        g = Graph(n, nbrs)
        if seen is not None:
            c = canonical_form(g)
            if c in seen:
                continue
            seen.add(c)
        yield g


def _file_stream(spec: FamilySpec) -> Iterator[Graph]:
    text = Path(spec.path).read_text()
    seen: set[int] | None = set() if spec.dedup_iso else None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except ValueError as exc:
            raise ValueError(f"{spec.path}: line {lineno}: {exc}") from exc
        if seen is not None:
            c = canonical_form(g)
            if c in seen:
                continue
            seen.add(c)
        yield g


def _regular_nbrs(n: int, r: int, pin: bool) -> Iterator[tuple[int, ...]]:
    """Backtrack over each vertex's higher-numbered neighbours.

    Choosing each vertex's neighbour set in reverse lexicographic order makes
    the emitted masks strictly ascending. pin=True fixes vertex 0's
    neighbourhood to {1..r}, which keeps at least one labeled copy of every
    isomorphism class while shrinking the scan by a factor of C(n-1, r).
    """
    rem = [r] * n
    nbrs = [0] * n

    def rec(v: int) -> Iterator[tuple[int, ...]]:
        if v == n - 1:
            if rem[v] == 0:
                yield tuple(nbrs)
            return
        need = rem[v]
        cands = [u for u in range(v + 1, n) if rem[u] > 0]
        if need > len(cands):
            return
        if sum(rem[v:]) % 2:
            return
        for u in range(v + 1, n):
            # u's possible partners from here on: v plus the vertices above
            # v other than u itself
            if rem[u] > n - 1 - v:
                return
        if pin and v == 0:
            choices = [tuple(range(1, r + 1))]
        else:
            choices = reversed(list(combinations(cands, need)))
        for pick in choices:
            for u in pick:
                nbrs[v] |= 1 << u
                nbrs[u] |= 1 << v
                rem[u] -= 1
            rem[v] = 0
            yield from rec(v + 1)
            rem[v] = need
            for u in pick:
                nbrs[v] ^= 1 << u
                nbrs[u] ^= 1 << v
                rem[u] += 1

    yield from rec(0)


def _regular_classes(n: int, r: int) -> list[Graph]:
    """One representative per isomorphism class of connected r-regular graphs.

    The pinned scan's survivors are bucketed by an isomorphism invariant;
    a bucket is certified to be a single class when its size matches the
    pinned-copy count n! / (|Aut| * C(n-1, r)), and split by pairwise
    isomorphism when it is not. Representatives come out in ascending mask
    order, each the smallest pinned copy of its class.
    """
    buckets: dict[tuple, list[Graph]] = {}
    for nb in _regular_nbrs(n, r, pin=True):
        if not is_connected_masks(n, nb):
            continue
        g = Graph(n, nb)
        buckets.setdefault(_invariant_key(g), []).append(g)
    pinned_total = math.factorial(n) // math.comb(n - 1, r)
    reps: list[Graph] = []
    for members in buckets.values():
        reps.extend(_split_certified(pinned_total, members))
    reps.sort(key=adjacency_mask)
    return reps


def _split_certified(pinned_total: int, members: list[Graph]) -> list[Graph]:
    expected, leftover = divmod(pinned_total, automorphism_count(members[0]))
    if leftover == 0 and expected == len(members):
        return [members[0]]
    classes: list[list[Graph]] = []
    for g in members:
        for cls in classes:
            if is_isomorphic(cls[0], g):
                cls.append(g)
                break
        else:
            classes.append([g])
    for cls in classes:
        expected, leftover = divmod(pinned_total, automorphism_count(cls[0]))
        if leftover or expected != len(cls):
            raise RuntimeError("regular dedup failed to certify an isomorphism class")
    return [cls[0] for cls in classes]


def _triangle_vector(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = g.nbrs[v]
        t = 0
        mm = m
        while mm:
            low = mm & -mm
            t += (g.nbrs[low.bit_length() - 1] & m).bit_count()
            mm ^= low
        out.append(t // 2)
    return out


def _invariant_key(g: Graph) -> tuple:
    # characteristic polynomial coefficients are integers; eigenvalue noise
    # stays far below 0.5 at these orders, so rounding recovers them exactly
    coeffs = np.poly(np.linalg.eigvalsh(g.adjacency_matrix()))
    poly = tuple(int(c) for c in np.rint(coeffs))
    return poly, tuple(sorted(_triangle_vector(g)))


def canonical_form(g: Graph) -> int:
    """Minimum adjacency mask over all vertex permutations (n <= 8 only)."""
    if g.n > _CANONICAL_CAP:
        raise ValueError(f"canonical form is brute force, needs n <= {_CANONICAL_CAP}")
    pairs = _pairs(g.n)
    best = None
    for p in permutations(range(g.n)):
        m = 0
        for u, v in pairs:
            m = m << 1 | (g.nbrs[p[u]] >> p[v] & 1)
        if best is None or m < best:
            best = m
    return best


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if sorted(_triangle_vector(g)) != sorted(_triangle_vector(h)):
        return False
    if g.n <= _CANONICAL_CAP:
        return canonical_form(g) == canonical_form(h)
    return _search_mappings(g, h, count_all=False) > 0


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group, by exhaustive consistent-image search."""
    n = g.n
    if n <= 1:
        return 1
    deg = g.degrees()
    if all(d == n - 1 for d in deg) or all(d == 0 for d in deg):
        return math.factorial(n)
    if sum(deg) > n * (n - 1) // 2:
        # same group, and the sparser side prunes much harder
        return automorphism_count(complement(g))
    return _search_mappings(g, g, count_all=True)


def _vertex_classes(g: Graph) -> list[tuple[int, int]]:
    tri = _triangle_vector(g)
    return [(g.nbrs[v].bit_count(), tri[v]) for v in range(g.n)]


def _mapping_order(g: Graph, classes: list[tuple[int, int]]) -> list[int]:
    """Rare classes first, then hug the already-placed set for pruning."""
    freq = Counter(classes)
    placed: list[int] = []
    placed_mask = 0
    remaining = set(range(g.n))
    while remaining:
        v = min(
            remaining,
            key=lambda u: (-(g.nbrs[u] & placed_mask).bit_count(), freq[classes[u]], u),
        )
        placed.append(v)
        placed_mask |= 1 << v
        remaining.discard(v)
    return placed


def _search_mappings(g: Graph, h: Graph, count_all: bool) -> int:
    """DFS over class- and adjacency-consistent images of g's vertices in h.

    Returns the number of isomorphisms g -> h, stopping at the first one
    unless count_all is set.
    """
    n = g.n
    cg = _vertex_classes(g)
    ch = _vertex_classes(h)
    if sorted(cg) != sorted(ch):
        return 0
    order = _mapping_order(g, cg)
    candidates: dict[tuple[int, int], list[int]] = {}
    for y in range(n):
        candidates.setdefault(ch[y], []).append(y)
    images = [0] * n
    found = 0

    def rec(i: int, used: int) -> bool:
        nonlocal found
        if i == n:
            found += 1
            return not count_all
        x = order[i]
        gx = g.nbrs[x]
        req = 0
        for j in range(i):
            if gx >> order[j] & 1:
                req |= 1 << images[j]
        for y in candidates[cg[x]]:
            if used >> y & 1:
                continue
            if h.nbrs[y] & used == req:
                images[i] = y
                if rec(i + 1, used | 1 << y):
                    return True
        return False

    rec(0, 0)
    return found
