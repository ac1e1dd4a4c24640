"""Extremal graph families that sit exactly at the spectral thresholds,
with closed-form spectral radii cross-checked against the eigensolver.

Two families live here. The first targets regular hosts: for degree r and
tree degree bound k it splits on q = ceil(r/(k-2)) into three joins of a
clique with a matching complement. The second targets leaf-degree bounds:
K_s joined to a clique plus (k+1)s isolated vertices, whose spectral
radius is the largest root of an explicit cubic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import graphs as gr
from .graphs import Graph
from .spectra import QuotientMatrix, largest_real_root, quotient_matrix

CASE_EVEN_Q = "even_q_ge3"
CASE_ODD_Q = "odd_q_ge3"
CASE_Q2_ODD_R = "q2_odd_r"


@dataclass(frozen=True)
class RegularCaseParams:
    """Parameters (r, k) for the regular-host family, with the derived
    case split. k is None only for the direct q=2 construction, which
    exists for odd r even when no k in [3, r) yields q = 2."""

    r: int
    k: int | None
    q: int
    case_tag: str

    @classmethod
    def from_degrees(cls, r: int, k: int) -> "RegularCaseParams":
        if r < 3:
            raise ValueError("degree r must be at least 3")
        if not 3 <= k < r:
            raise ValueError(f"tree degree bound must satisfy 3 <= k < r, got k={k}, r={r}")
        q = -(-r // (k - 2))
        if q == 2:
            if r % 2 == 0:
                raise ValueError(
                    "no extremal graph exists for even r with ceil(r/(k-2)) == 2: "
                    "every connected r-regular graph there has the required spanning tree")
            return cls(r, k, 2, CASE_Q2_ODD_R)
        tag = CASE_EVEN_Q if q % 2 == 0 else CASE_ODD_Q
        return cls(r, k, q, tag)

    @classmethod
    def q2_case(cls, r: int) -> "RegularCaseParams":
        """The q = 2 construction addressed directly by r (odd r only)."""
        if r < 3 or r % 2 == 0:
            raise ValueError("the q=2 construction requires odd r >= 3")
        return cls(r, None, 2, CASE_Q2_ODD_R)


def _matching_complement(pairs: int) -> Graph:
    """Complement of a perfect matching on 2*pairs vertices."""
    return gr.complement(gr.union_of(gr.complete(2), pairs))


def build_H(p: RegularCaseParams) -> Graph:
    """The regular-host extremal graph for p (r+1 vertices for q >= 3,
    r+2 vertices for the q = 2 odd-r case)."""
    r, q = p.r, p.q
    if p.case_tag == CASE_EVEN_Q:
        return gr.join(gr.complete(r - q + 3), _matching_complement((q - 2) // 2))
    if p.case_tag == CASE_ODD_Q:
        return gr.join(gr.complete(r - q + 2), _matching_complement((q - 1) // 2))
    base = gr.disjoint_union(gr.complete(1), gr.complete(2))
    return gr.join(base, _matching_complement((r - 1) // 2))


def _partition_for(p: RegularCaseParams) -> list[list[int]]:
    r, q = p.r, p.q
    if p.case_tag == CASE_EVEN_Q:
        a = r - q + 3
        return [list(range(a)), list(range(a, r + 1))]
    if p.case_tag == CASE_ODD_Q:
        a = r - q + 2
        return [list(range(a)), list(range(a, r + 1))]
    return [[0], [1, 2], list(range(3, r + 2))]


def quotient_B(p: RegularCaseParams) -> QuotientMatrix:
    """Equitable quotient of build_H(p) under its natural block partition."""
    h = build_H(p)
    return quotient_matrix(h.adjacency_matrix(), _partition_for(p))


def theta(r: int) -> float:
    """Largest root of x^3 + (2-r)x^2 - 2rx + (r-1)."""
    return largest_real_root([1.0, 2.0 - r, -2.0 * r, r - 1.0], r + 2)


def rho_extremal(p: RegularCaseParams) -> float:
    """Closed-form spectral radius of build_H(p)."""
    r, q = p.r, p.q
    if p.case_tag == CASE_EVEN_Q:
        return r / 2.0 + math.sqrt(r * r + 4 * r - 4 * q + 12) / 2.0 - 1.0
    if p.case_tag == CASE_ODD_Q:
        return r / 2.0 + math.sqrt(r * r + 4 * r - 4 * q + 8) / 2.0 - 1.0
    return theta(r)


# ---------------------------------------------------------------------------
# leaf-degree extremal family

@dataclass(frozen=True)
class LeafFamilyParams:
    n: int
    k: int
    s: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("leaf degree bound must be at least 1")
        if self.s < 1:
            raise ValueError("cut size s must be at least 1")
        if self.n < (self.k + 2) * self.s:
            raise ValueError(
                f"order n={self.n} too small: need n >= (k+2)s = {(self.k + 2) * self.s}")


def build_leaf_extremal(p: LeafFamilyParams) -> Graph:
    """K_s joined to (K_{n-(k+2)s} plus (k+1)s isolated vertices)."""
    m = p.n - (p.k + 2) * p.s
    inner = gr.disjoint_union(gr.complete(m), gr.empty_graph((p.k + 1) * p.s))
    return gr.join(gr.complete(p.s), inner)


def f_poly(p: LeafFamilyParams) -> tuple[int, int, int, int]:
    """Monic cubic whose largest root is the family's spectral radius,
    coefficients highest degree first (exact integers)."""
    n, k, s = p.n, p.k, p.s
    a2 = s - n + k * s + 2
    a1 = s - n + k * s - k * s * s - s * s + 1
    a0 = (n * s * s - 3 * k * s ** 3 - k * s * s - s * s
          - 2 * s ** 3 - k * k * s ** 3 + k * n * s * s)
    return (1, a2, a1, a0)


def lambda1_leaf_extremal(p: LeafFamilyParams) -> float:
    return largest_real_root([float(c) for c in f_poly(p)], float(p.n))
