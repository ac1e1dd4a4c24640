"""Spectra of small dense symmetric matrices, quotient matrices of vertex
partitions, polynomial root extraction, and interlacing checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import Graph

# Strictness margin for eigenvalue comparisons in theorem hypotheses:
# "a < b" is implemented as a < b - STRICT_EPS, and |a - b| <= STRICT_EPS
# is reported as a boundary case rather than pass/fail.
STRICT_EPS = 1e-9

_EQ_TOL = 1e-10


def _eigvalsh_desc(m: np.ndarray) -> np.ndarray:
    try:
        vals = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - should not happen
        raise RuntimeError(f"eigensolver failed to converge: {exc}")
    return vals[::-1]


def sym_eigenvalues(m: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric real matrix, descending."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(m, m.T, atol=1e-12):
        raise ValueError("matrix must be symmetric")
    return _eigvalsh_desc(m)


def adjacency_spectrum(g: Graph) -> np.ndarray:
    if g.n == 0:
        raise ValueError("spectrum undefined on 0 vertices")
    return _eigvalsh_desc(g.adjacency_matrix())


def laplacian_spectrum(g: Graph) -> np.ndarray:
    if g.n == 0:
        raise ValueError("spectrum undefined on 0 vertices")
    return _eigvalsh_desc(g.laplacian_matrix())


# ---------------------------------------------------------------------------
# quotient matrices of vertex partitions

@dataclass(frozen=True)
class QuotientMatrix:
    entries: np.ndarray
    block_sizes: tuple[int, ...]
    equitable: bool

    def spectrum(self) -> np.ndarray:
        """Eigenvalues descending; real because the quotient of a symmetric
        matrix is diagonally similar to a symmetric one."""
        d = np.sqrt(np.array(self.block_sizes, dtype=float))
        sym = self.entries * d[:, None] / d[None, :]
        return _eigvalsh_desc((sym + sym.T) / 2.0)

    def spectral_radius(self) -> float:
        vals = self.spectrum()
        return float(max(vals[0], -vals[-1]))


def _check_partition(order: int, blocks: Sequence[Sequence[int]]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for b in blocks:
        bl = sorted(b)
        if not bl:
            raise ValueError("partition blocks must be nonempty")
        for v in bl:
            if not 0 <= v < order:
                raise ValueError(f"index {v} out of range")
            if v in seen:
                raise ValueError(f"index {v} appears in two blocks")
            seen.add(v)
        out.append(bl)
    if len(seen) != order:
        raise ValueError("partition must cover the full index range")
    return out


def quotient_matrix(m: np.ndarray, blocks: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Block-averaged matrix B with b[i][j] = mean row sum of block M_{i,j};
    equitable iff every row sum within each block is constant (exact for
    integer matrices, tolerance otherwise)."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    blks = _check_partition(m.shape[0], blocks)
    t = len(blks)
    integral = bool(np.all(m == np.round(m)))
    entries = np.zeros((t, t))
    equitable = True
    for i, bi in enumerate(blks):
        for j, bj in enumerate(blks):
            rowsums = m[np.ix_(bi, bj)].sum(axis=1)
            entries[i, j] = rowsums.sum() / len(bi)
            if integral:
                if not np.all(rowsums == rowsums[0]):
                    equitable = False
            elif not np.all(np.abs(rowsums - rowsums[0]) <= _EQ_TOL):
                equitable = False
    return QuotientMatrix(entries, tuple(len(b) for b in blks), equitable)


# ---------------------------------------------------------------------------
# largest real root by descending integer scan plus bisection

_ROOT_TOL = 1e-12


def _horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def largest_real_root(coeffs: Sequence[float], bracket_hi: float) -> float:
    """Largest real root of the polynomial (coefficients highest degree
    first), scanned downward in unit steps from bracket_hi and bisected
    to 1e-12. Raises if no sign change appears down to -bracket_hi."""
    hi = float(bracket_hi)
    fhi = _horner(coeffs, hi)
    if fhi == 0.0:
        return hi
    x = hi
    while x >= -abs(bracket_hi) - 1.0:
        nxt = x - 1.0
        fnxt = _horner(coeffs, nxt)
        if fnxt == 0.0:
            return nxt
        if (fnxt < 0.0) != (fhi < 0.0):
            lo, f_lo = nxt, fnxt
            up = x
            while up - lo > _ROOT_TOL:
                mid = (lo + up) / 2.0
                fmid = _horner(coeffs, mid)
                if fmid == 0.0:
                    return mid
                if (fmid < 0.0) == (f_lo < 0.0):
                    lo, f_lo = mid, fmid
                else:
                    up = mid
            return (lo + up) / 2.0
        x, fhi = nxt, fnxt
    raise ValueError(
        f"no sign change found in [-{abs(bracket_hi)}, {bracket_hi}]")


def interlaces(inner: Sequence[float], outer: Sequence[float], tol: float = 1e-8) -> bool:
    """True iff outer[i] >= inner[i] >= outer[i + gap] for all i, within tol."""
    if len(inner) > len(outer):
        raise ValueError("inner spectrum longer than outer")
    gap = len(outer) - len(inner)
    for i, val in enumerate(inner):
        if not (outer[i] >= val - tol and val >= outer[i + gap] - tol):
            return False
    return True
