import math

import numpy as np
import pytest

from treespectra import graphs as gr
from treespectra import spectra as sp


def _all_graphs(n):
    for bits in range(1 << (n * (n - 1) // 2)):
        edges = []
        idx = 0
        for u in range(n):
            for v in range(u + 1, n):
                if bits >> idx & 1:
                    edges.append((u, v))
                idx += 1
        yield gr.from_edges(n, edges)


def test_sym_eigenvalues_basic():
    assert np.allclose(sp.sym_eigenvalues(np.eye(3)), [1, 1, 1])
    assert np.allclose(sp.sym_eigenvalues([[0, 1], [1, 0]]), [1, -1])
    # C_4 adjacency: characteristic polynomial x^4 - 4x^2, roots 2, 0, 0, -2
    vals = sp.sym_eigenvalues(gr.cycle(4).adjacency_matrix())
    assert np.allclose(vals, [2, 0, 0, -2], atol=1e-10)


def test_sym_eigenvalues_rejects_asymmetric():
    with pytest.raises(ValueError):
        sp.sym_eigenvalues([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        sp.sym_eigenvalues([[0, 1, 0], [1, 0, 1]])


def test_adjacency_spectrum():
    assert np.allclose(sp.adjacency_spectrum(gr.complete(3)), [2, -1, -1])
    k5e = gr.join(gr.complete(3), gr.complement(gr.complete(2)))
    lam1 = sp.adjacency_spectrum(k5e)[0]
    assert abs(lam1 - (1 + math.sqrt(7))) < 1e-10
    assert np.allclose(sp.adjacency_spectrum(gr.empty_graph(2)), [0, 0])
    with pytest.raises(ValueError):
        sp.adjacency_spectrum(gr.complete(0))


def test_laplacian_spectrum():
    for n in (2, 3, 5):
        vals = sp.laplacian_spectrum(gr.complete(n))
        assert np.allclose(vals, [n] * (n - 1) + [0], atol=1e-9)
    assert np.allclose(sp.laplacian_spectrum(gr.path(3)), [3, 1, 0], atol=1e-9)
    assert np.allclose(sp.laplacian_spectrum(gr.empty_graph(2)), [0, 0])
    with pytest.raises(ValueError):
        sp.laplacian_spectrum(gr.complete(0))


def test_laplacian_connectivity_gap():
    # second-smallest Laplacian eigenvalue positive iff connected
    for n in range(2, 6):
        for g in _all_graphs(n):
            mu = sp.laplacian_spectrum(g)
            assert abs(mu[-1]) < 1e-9
            assert (mu[-2] > 1e-9) == gr.is_connected(g)


def test_trace_and_square_sum_invariants():
    for n in range(1, 6):
        for g in _all_graphs(n):
            vals = sp.adjacency_spectrum(g)
            assert vals.tolist() == sorted(vals, reverse=True)
            assert abs(vals.sum()) < 1e-8 * n
            assert abs((vals ** 2).sum() - 2 * g.edge_count()) < 1e-8 * n * n
            mu = sp.laplacian_spectrum(g)
            assert abs(mu.sum() - 2 * g.edge_count()) < 1e-8 * n


def test_quotient_matrix_examples():
    k5e = gr.join(gr.complete(3), gr.complement(gr.complete(2)))
    q = sp.quotient_matrix(k5e.adjacency_matrix(), [[0, 1, 2], [3, 4]])
    assert q.equitable
    assert q.entries.tolist() == [[2, 2], [3, 0]]

    m = np.array([[1.5, 2.0], [2.0, -1.0]])
    q = sp.quotient_matrix(m, [[0], [1]])
    assert q.equitable and np.allclose(q.entries, m)

    q = sp.quotient_matrix(gr.path(3).adjacency_matrix(), [[0, 2], [1]])
    assert q.equitable
    assert q.entries.tolist() == [[0, 1], [2, 0]]


def test_quotient_matrix_not_equitable():
    q = sp.quotient_matrix(gr.path(3).adjacency_matrix(), [[0, 1], [2]])
    assert not q.equitable


def test_quotient_partition_validation():
    m = np.zeros((3, 3))
    with pytest.raises(ValueError):
        sp.quotient_matrix(m, [[0, 1]])
    with pytest.raises(ValueError):
        sp.quotient_matrix(m, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        sp.quotient_matrix(m, [[0, 1, 2], []])
    with pytest.raises(ValueError):
        sp.quotient_matrix(m, [[0, 1, 2, 3]])


def test_equitable_quotient_shares_spectral_radius():
    k5e = gr.join(gr.complete(3), gr.complement(gr.complete(2)))
    q = sp.quotient_matrix(k5e.adjacency_matrix(), [[0, 1, 2], [3, 4]])
    lam1 = sp.adjacency_spectrum(k5e)[0]
    assert abs(q.spectrum()[0] - lam1) < 1e-8
    # complete multipartite example: K_{2,2,2} with its three parts
    g = gr.join(gr.empty_graph(2), gr.join(gr.empty_graph(2), gr.empty_graph(2)))
    q = sp.quotient_matrix(g.adjacency_matrix(), [[0, 1], [2, 3], [4, 5]])
    assert q.equitable
    assert abs(q.spectrum()[0] - sp.adjacency_spectrum(g)[0]) < 1e-8


def test_quotient_spectrum_matches_numpy_oracle():
    # non-symmetric quotient entries still give a real spectrum; compare
    # against direct dense eigenvalues of the quotient matrix
    k5e = gr.join(gr.complete(3), gr.complement(gr.complete(2)))
    q = sp.quotient_matrix(k5e.adjacency_matrix(), [[0, 1, 2], [3, 4]])
    oracle = sorted(np.linalg.eigvals(q.entries).real, reverse=True)
    assert np.allclose(q.spectrum(), oracle, atol=1e-9)


def test_largest_real_root():
    assert abs(sp.largest_real_root([1, -2, -6], 10) - (1 + math.sqrt(7))) < 1e-10
    assert abs(sp.largest_real_root([1, 0, -2], 5) - math.sqrt(2)) < 1e-10
    assert abs(sp.largest_real_root([1, -5], 8) - 5.0) < 1e-12
    # largest root of x^3 - x^2 - 6x + 2, compared to a companion-matrix oracle
    coeffs = [1, -1, -6, 2]
    oracle = max(r.real for r in np.roots(coeffs) if abs(r.imag) < 1e-12)
    got = sp.largest_real_root(coeffs, 5)
    assert abs(got - oracle) < 1e-9
    assert abs(got - 2.8554) < 5e-4


def test_largest_real_root_errors():
    with pytest.raises(ValueError):
        sp.largest_real_root([1, 0, 1], 10)  # x^2 + 1 has no real root


def test_largest_real_root_at_bracket():
    assert sp.largest_real_root([1, -5], 5) == 5.0


def test_interlaces():
    assert sp.interlaces([1, -1], [2, -1, -1])
    assert sp.interlaces([2, 0, -2], [2, 0, -2])
    assert not sp.interlaces([3, 0], [2, 0, -2])
    with pytest.raises(ValueError):
        sp.interlaces([1, 2, 3], [1, 2])


def test_vertex_deletion_interlacing():
    for n in range(2, 6):
        for g in _all_graphs(n):
            full = sp.adjacency_spectrum(g)
            for v in range(n):
                sub = sp.adjacency_spectrum(gr.delete_vertices(g, {v}))
                assert sp.interlaces(sub, full)


def test_induced_subgraph_monotonicity_n4():
    # top eigenvalues never grow when passing to an induced subgraph
    for g in _all_graphs(4):
        full = sp.adjacency_spectrum(g)
        for keep_bits in range(1, 16):
            drop = {v for v in range(4) if not keep_bits >> v & 1}
            h = gr.delete_vertices(g, drop)
            if h.n == 0:
                continue
            sub = sp.adjacency_spectrum(h)
            for i, val in enumerate(sub):
                assert val <= full[i] + 1e-8
