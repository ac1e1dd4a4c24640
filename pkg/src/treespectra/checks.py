"""Per-graph verdicts for the spectral spanning-tree conditions.

Each checker evaluates one condition's hypothesis and conclusion on a single
graph and reports pass / counterexample / boundary / vacuous. Hypotheses are
compared with a strictness margin so that floating-point ties land in
"boundary" instead of flipping between pass and counterexample; conclusions
come from the exact tree searches, never from spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from . import certificates as ct
from . import enumeration as en
from . import extremal as ex
from . import graphs as gr
from .spectra import STRICT_EPS, adjacency_spectrum, laplacian_spectrum

THEOREM_IDS = (
    "T3.6-ktree-lambda4",
    "T4.3-leaf-spectral",
    "C4.4-leaf-spectral-t1",
    "T5.2-leaf-laplacian",
    "C5.3-leaf-laplacian-tconn",
    "T5.4-leaf-complement",
    "L5.1-partition-bound",
    "L-Kaneko-iff",
)

PASS = "pass"
COUNTEREXAMPLE = "counterexample"
BOUNDARY = "boundary"
VACUOUS = "vacuous"

# the two Lemma-style inequalities carry their own looser tolerance
_L51_TOL = 1e-8


def resolve_theorem(text: str) -> str:
    """Expand a unique prefix (e.g. 'T5.2') to the full theorem id."""
    if text in THEOREM_IDS:
        return text
    hits = [tid for tid in THEOREM_IDS if tid.startswith(text)]
    if len(hits) == 1:
        return hits[0]
    if hits:
        raise ValueError(f"ambiguous theorem {text!r}: matches {', '.join(hits)}")
    raise ValueError(f"unknown theorem {text!r}: choose from {', '.join(THEOREM_IDS)}")


@dataclass(frozen=True)
class VerificationRecord:
    graph6: str
    theorem: str
    k: int | None
    r: int | None
    t: int | None
    hypothesis: dict
    hypothesis_holds: bool | str
    conclusion_holds: bool
    verdict: str


def _verdict(hyp_holds: bool | str, concl: bool) -> str:
    if hyp_holds == "boundary":
        return BOUNDARY
    if not hyp_holds:
        return VACUOUS
    return PASS if concl else COUNTEREXAMPLE


def _record(g, theorem, k, r, t, hypothesis, hyp_holds, concl) -> VerificationRecord:
    return VerificationRecord(
        graph6=gr.to_graph6(g),
        theorem=theorem,
        k=k,
        r=r,
        t=t,
        hypothesis=hypothesis,
        hypothesis_holds=hyp_holds,
        conclusion_holds=concl,
        verdict=_verdict(hyp_holds, concl),
    )


def _strict_lt(lhs: float, rhs: float) -> bool | str:
    if abs(lhs - rhs) <= STRICT_EPS:
        return "boundary"
    return lhs < rhs


def _has_k_tree(g: gr.Graph, k: int) -> bool:
    if g.n == 0 or not gr.is_connected(g):
        return False
    if g.n == 1:
        return True
    if k < 1:
        return False
    if k == 1:
        return g.n == 2
    return ct.find_k_tree(g, k) is not None


def _has_leaf_tree(g: gr.Graph, k: int) -> bool:
    if g.n == 0 or not gr.is_connected(g):
        return False
    if g.n == 1:
        return True
    if k < 1:
        return False
    return ct.find_leaf_tree(g, k) is not None


@lru_cache(maxsize=256)
def _leaf_threshold(n: int, k: int, s: int) -> float:
    return ex.lambda1_leaf_extremal(ex.LeafFamilyParams(n, k, s))


@lru_cache(maxsize=64)
def _leaf_extremal_graph(n: int, k: int, s: int) -> gr.Graph:
    return ex.build_leaf_extremal(ex.LeafFamilyParams(n, k, s))


def check_T36(g: gr.Graph, k: int) -> VerificationRecord:
    """Regular hosts: fourth adjacency eigenvalue below the closed-form
    threshold forces a spanning tree of maximum degree at most k."""
    tid = "T3.6-ktree-lambda4"
    if g.n < 4:
        raise ValueError("needs n >= 4: the fourth largest eigenvalue must exist")
    lam4 = float(adjacency_spectrum(g)[3])
    lo, hi, regular = gr.degree_stats(g)
    r = hi if regular else None
    concl = _has_k_tree(g, k)
    in_scope = regular and gr.is_connected(g) and hi >= 3 and 3 <= k < hi
    if not in_scope:
        hyp = {"lambda4": lam4, "rho": None}
        return _record(g, tid, k, r, None, hyp, False, concl)
    q = -(-r // (k - 2))
    if q == 2 and r % 2 == 0:
        # no threshold graph exists in this corner: the tree is unconditional
        hyp = {"lambda4": lam4, "rho": None, "always": True}
        return _record(g, tid, k, r, None, hyp, True, concl)
    rho = ex.rho_extremal(ex.RegularCaseParams.from_degrees(r, k))
    hyp = {"lambda4": lam4, "rho": rho}
    return _record(g, tid, k, r, None, hyp, _strict_lt(lam4, rho), concl)


def check_T43(g: gr.Graph, k: int, t: int) -> VerificationRecord:
    """Leaf-degree bound for t-connected hosts: spectral radius strictly
    above both endpoint extremal values forces the tree, unless the graph
    is one of the two extremal graphs themselves."""
    tid = "T4.3-leaf-spectral"
    n = g.n
    if k < 1:
        raise ValueError("leaf degree bound must be at least 1")
    s_max = n // (k + 2)
    if not 1 <= t <= s_max:
        raise ValueError(f"t must lie in [1, n//(k+2)] = [1, {s_max}]")
    lam1 = float(adjacency_spectrum(g)[0])
    thr_t = _leaf_threshold(n, k, t)
    thr_s = _leaf_threshold(n, k, s_max)
    thr = max(thr_t, thr_s)
    kappa = gr.vertex_connectivity(g)
    hyp = {
        "lambda1": lam1,
        "threshold": thr,
        "threshold_at_t": thr_t,
        "threshold_at_max_cut": thr_s,
        "kappa": kappa,
    }
    if kappa < t:
        return _record(g, tid, k, None, t, hyp, False, _has_leaf_tree(g, k))
    holds = _strict_lt(thr, lam1)
    concl = _has_leaf_tree(g, k)
    if not concl and holds == "boundary":
        # the stated exceptions attain equality; they only matter there
        concl = en.is_isomorphic(g, _leaf_extremal_graph(n, k, t)) or en.is_isomorphic(
            g, _leaf_extremal_graph(n, k, s_max)
        )
    return _record(g, tid, k, None, t, hyp, holds, concl)


def check_C44(g: gr.Graph, k: int) -> VerificationRecord:
    """Single-cut leaf-degree bound for large orders, non-strict: spectral
    radius at least the extremal value forces the tree unless the graph is
    the extremal graph itself (which attains equality and passes)."""
    tid = "C4.4-leaf-spectral-t1"
    n = g.n
    if k < 1:
        raise ValueError("leaf degree bound must be at least 1")
    lam1 = float(adjacency_spectrum(g)[0])
    in_scope = n >= 2 * k + 12 and gr.is_connected(g)
    thr = _leaf_threshold(n, k, 1) if n >= k + 2 else None
    hyp = {"lambda1": lam1, "threshold": thr}
    if not in_scope:
        return _record(g, tid, k, None, None, hyp, False, _has_leaf_tree(g, k))
    holds = lam1 >= thr - STRICT_EPS
    concl = _has_leaf_tree(g, k)
    if holds and not concl:
        concl = en.is_isomorphic(g, _leaf_extremal_graph(n, k, 1))
    return _record(g, tid, k, None, None, hyp, holds, concl)


def _laplacian_extremes(g: gr.Graph) -> tuple[float, float]:
    mu = laplacian_spectrum(g)
    return float(mu[0]), float(mu[-2])


def check_T52(g: gr.Graph, k: int) -> VerificationRecord:
    """Laplacian spread: largest eigenvalue under (k+1) times the algebraic
    connectivity forces a spanning tree of leaf degree at most k."""
    tid = "T5.2-leaf-laplacian"
    if g.n < 2:
        raise ValueError("needs n >= 2")
    if k < 1:
        raise ValueError("leaf degree bound must be at least 1")
    mu1, alg = _laplacian_extremes(g)
    bound = (k + 1) * alg
    hyp = {"mu1": mu1, "mu_n_minus_1": alg, "bound": bound}
    # a vanishing second-smallest eigenvalue (disconnected) can never win
    holds = False if alg <= STRICT_EPS else _strict_lt(mu1, bound)
    return _record(g, tid, k, None, None, hyp, holds, _has_leaf_tree(g, k))


def check_C53(g: gr.Graph, k: int, t: int = 2) -> VerificationRecord:
    """Non-strict variant of the Laplacian-spread condition for t-connected
    graphs, t >= 2."""
    tid = "C5.3-leaf-laplacian-tconn"
    if g.n < 2:
        raise ValueError("needs n >= 2")
    if k < 1:
        raise ValueError("leaf degree bound must be at least 1")
    if t < 2:
        raise ValueError("the t-connected variant needs t >= 2")
    mu1, alg = _laplacian_extremes(g)
    bound = (k + 1) * alg
    kappa = gr.vertex_connectivity(g)
    hyp = {"mu1": mu1, "mu_n_minus_1": alg, "bound": bound, "kappa": kappa}
    holds = kappa >= t and mu1 <= bound + STRICT_EPS
    return _record(g, tid, k, None, t, hyp, holds, _has_leaf_tree(g, k))


def check_T54(g: gr.Graph, k: int) -> VerificationRecord:
    """Complement spectral radius under (k+1)*min_degree - 1 forces a
    spanning tree of leaf degree at most k; connectivity is part of the
    hypothesis, so disconnected inputs are vacuous rather than errors."""
    tid = "T5.4-leaf-complement"
    if g.n < 2:
        raise ValueError("needs n >= 2")
    if k < 1:
        raise ValueError("leaf degree bound must be at least 1")
    lam1c = float(adjacency_spectrum(gr.complement(g))[0])
    delta = gr.degree_stats(g)[0]
    bound = (k + 1) * delta - 1
    hyp = {"lambda1_complement": lam1c, "min_degree": delta, "bound": bound}
    holds = _strict_lt(lam1c, bound) if gr.is_connected(g) else False
    return _record(g, tid, k, None, None, hyp, holds, _has_leaf_tree(g, k))


def check_L51(
    g: gr.Graph,
    s: tuple[int, ...],
    x: tuple[int, ...],
    y: tuple[int, ...],
) -> VerificationRecord:
    """Laplacian bounds on a separated partition V = S + X + Y with no
    X-Y edges: |X| <= n(mu1 - mu_{n-1})/(2 mu1) and
    |S| >= 2 mu_{n-1} |X| / (mu1 - mu_{n-1})."""
    n = g.n
    if g.edge_count() == 0:
        raise ValueError("needs at least one edge")
    s_set, x_set, y_set = set(s), set(x), set(y)
    if not x_set:
        raise ValueError("x must be nonempty")
    if len(s_set) + len(x_set) + len(y_set) != len(s) + len(x) + len(y):
        raise ValueError("s, x, y contain repeats")
    if s_set & x_set or s_set & y_set or x_set & y_set:
        raise ValueError("s, x, y must be disjoint")
    if s_set | x_set | y_set != set(range(n)):
        raise ValueError("s, x, y must cover all vertices")
    if len(x_set) > len(y_set):
        raise ValueError("need |x| <= |y|")
    y_mask = 0
    for v in y_set:
        y_mask |= 1 << v
    if any(g.nbrs[v] & y_mask for v in x_set):
        raise ValueError("no edges may run between x and y")
    mu1, alg = _laplacian_extremes(g)
    gap = mu1 - alg
    x_bound = n * gap / (2 * mu1)
    first_ok = len(x_set) <= x_bound + _L51_TOL
    if gap <= STRICT_EPS:
        # degenerate spread: the second bound divides by the gap, skip it
        s_bound = None
        second_ok = True
    else:
        s_bound = 2 * alg * len(x_set) / gap
        second_ok = len(s_set) >= s_bound - _L51_TOL
    hyp = {
        "mu1": mu1,
        "mu_n_minus_1": alg,
        "x_size": len(x_set),
        "s_size": len(s_set),
        "x_bound": x_bound,
        "s_bound": s_bound,
        "second_skipped": s_bound is None,
    }
    return _record(g, "L5.1-partition-bound", None, None, None, hyp, True, first_ok and second_ok)


def l51_decompositions(g: gr.Graph) -> Iterator[tuple[tuple, tuple, tuple]]:
    """All (s, x, y) splits meeting the separated-partition preconditions,
    deduplicated: each unordered {x, y} appears once, with x the smaller
    side (ties: the side holding the smallest vertex)."""
    n = g.n
    full = (1 << n) - 1
    for s_size in range(0, max(0, n - 1)):
        for s in combinations(range(n), s_size):
            s_mask = 0
            for v in s:
                s_mask |= 1 << v
            comps = _alive_components(g, full & ~s_mask)
            if len(comps) < 2:
                continue
            head, rest = comps[0], comps[1:]
            for bits in range(1, 1 << len(rest)):
                a = 0
                for i, c in enumerate(rest):
                    if bits >> i & 1:
                        a |= c
                b = (full & ~s_mask) ^ a  # head plus the unchosen components
                x_mask, y_mask = (a, b) if _x_before(a, b) else (b, a)
                yield s, _mask_vertices(x_mask), _mask_vertices(y_mask)


def _x_before(a: int, b: int) -> bool:
    if a.bit_count() != b.bit_count():
        return a.bit_count() < b.bit_count()
    return (a & -a) < (b & -b)


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _alive_components(g: gr.Graph, alive: int) -> list[int]:
    comps = []
    left = alive
    while left:
        comp = left & -left
        while True:
            grow = comp
            m = comp
            while m:
                low = m & -m
                grow |= g.nbrs[low.bit_length() - 1] & alive
                m ^= low
            if grow == comp:
                break
            comp = grow
        comps.append(comp)
        left &= ~comp
    return comps


def check_L51_all(g: gr.Graph) -> VerificationRecord:
    """One aggregated record per graph: every valid separated partition must
    satisfy both bounds; graphs admitting none are vacuous."""
    tid = "L5.1-partition-bound"
    count = 0
    all_ok = True
    min_x_slack = None
    min_s_slack = None
    if g.n > 0 and g.edge_count() > 0:
        mu1, alg = _laplacian_extremes(g)
        gap = mu1 - alg
        for s, x, y in l51_decompositions(g):
            count += 1
            x_slack = g.n * gap / (2 * mu1) - len(x)
            min_x_slack = x_slack if min_x_slack is None else min(min_x_slack, x_slack)
            if x_slack < -_L51_TOL:
                all_ok = False
            if gap > STRICT_EPS:
                s_slack = len(s) - 2 * alg * len(x) / gap
                min_s_slack = s_slack if min_s_slack is None else min(min_s_slack, s_slack)
                if s_slack < -_L51_TOL:
                    all_ok = False
    hyp = {
        "decompositions": count,
        "min_x_slack": min_x_slack,
        "min_s_slack": min_s_slack,
    }
    return _record(g, tid, None, None, None, hyp, count > 0, count > 0 and all_ok)


def check_kaneko_iff(g: gr.Graph, k: int) -> VerificationRecord:
    """Exact cross-check, no spectra: for connected graphs, the isolated-
    vertex violator must exist exactly when the bounded-leaf-degree spanning
    tree does not."""
    tid = "L-Kaneko-iff"
    if k < 1:
        raise ValueError("leaf degree bound must be at least 1")
    if not gr.is_connected(g):
        hyp = {"violator_found": None, "tree_found": None}
        return _record(g, tid, k, None, None, hyp, False, False)
    violator = ct.find_kaneko_violator(g, k)
    tree = _has_leaf_tree(g, k)
    hyp = {"violator_found": violator is not None, "tree_found": tree}
    return _record(g, tid, k, None, None, hyp, True, (violator is None) == tree)


def apply_theorem(theorem: str, g: gr.Graph, k: int | None, t: int | None) -> VerificationRecord:
    """Dispatch a full theorem id to its checker with the right parameters."""
    if theorem == "L5.1-partition-bound":
        return check_L51_all(g)
    if k is None:
        raise ValueError(f"theorem {theorem} needs k")
    if theorem == "T3.6-ktree-lambda4":
        return check_T36(g, k)
    if theorem == "T4.3-leaf-spectral":
        return check_T43(g, k, 1 if t is None else t)
    if theorem == "C4.4-leaf-spectral-t1":
        return check_C44(g, k)
    if theorem == "T5.2-leaf-laplacian":
        return check_T52(g, k)
    if theorem == "C5.3-leaf-laplacian-tconn":
        return check_C53(g, k, 2 if t is None else t)
    if theorem == "T5.4-leaf-complement":
        return check_T54(g, k)
    if theorem == "L-Kaneko-iff":
        return check_kaneko_iff(g, k)
    raise ValueError(f"unknown theorem {theorem!r}")
