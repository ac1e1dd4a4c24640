import math

import pytest

from treespectra import graphs as gr
from treespectra import enumeration as en


def _spec(kind, n=0, **kw):
    return en.FamilySpec(kind, n, **kw)


def _masks(spec, **kw):
    return [en.adjacency_mask(g) for g in en.generate(spec, **kw)]


def _prism():
    return gr.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


def _connected_labeled_counts(upto):
    # c(n) = 2^C(n,2) - sum_{k<n} C(n-1, k-1) c(k) 2^C(n-k,2): subtract the
    # graphs whose component containing vertex 0 has k < n vertices
    c = {}
    for n in range(1, upto + 1):
        total = 1 << (n * (n - 1) // 2)
        for k in range(1, n):
            total -= math.comb(n - 1, k - 1) * c[k] * (1 << ((n - k) * (n - k - 1) // 2))
        c[n] = total
    return c


def test_spec_validation():
    with pytest.raises(ValueError):
        _spec("everything", 4)
    with pytest.raises(ValueError):
        _spec("all", 9)
    with pytest.raises(ValueError):
        _spec("connected", 0)
    with pytest.raises(ValueError):
        _spec("regular", 13, r=3)
    with pytest.raises(ValueError):
        _spec("regular", 6)
    with pytest.raises(ValueError):
        _spec("regular", 6, r=6)
    with pytest.raises(ValueError):
        _spec("all", 4, r=2)
    with pytest.raises(ValueError):
        _spec("file")
    with pytest.raises(ValueError):
        _spec("all", 4, path="x")


def test_mask_roundtrip():
    for n in (1, 3, 5):
        nbits = n * (n - 1) // 2
        for mask in range(0, 1 << nbits, 7):
            g = en.graph_from_mask(n, mask)
            assert en.adjacency_mask(g) == mask


def test_all_stream_is_every_mask_ascending():
    assert _masks(_spec("all", 3)) == list(range(8))
    assert _masks(_spec("all", 4)) == list(range(64))
    assert en.count(_spec("all", 3)) == 8
    assert en.count(_spec("all", 4)) == 64
    assert en.count(_spec("all", 8)) == 1 << 28


def test_connected_counts_match_recurrence():
    oracle = _connected_labeled_counts(6)
    assert oracle == {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}
    for n in range(1, 7):
        seen = 0
        for g in en.generate(_spec("connected", n)):
            assert gr.is_connected(g)
            seen += 1
        assert seen == oracle[n]


def test_connected_stream_masks_ascend():
    masks = _masks(_spec("connected", 4))
    assert masks == sorted(masks)
    assert len(set(masks)) == 38


def test_mask_range_shards_reassemble():
    whole = _masks(_spec("connected", 5))
    cuts = [0, 17, 300, 1 << 10]
    parts = []
    for lo, hi in zip(cuts, cuts[1:]):
        parts.extend(_masks(_spec("connected", 5), mask_range=(lo, hi)))
    assert parts == whole
    with pytest.raises(ValueError):
        list(en.generate(_spec("connected", 5), mask_range=(0, 2000)))
    with pytest.raises(ValueError):
        list(en.generate(_spec("regular", 5, r=2), mask_range=(0, 4)))


def test_connected_dedup_small():
    reps3 = list(en.generate(_spec("connected", 3, dedup_iso=True)))
    assert sorted(sorted(g.degrees()) for g in reps3) == [[1, 1, 2], [2, 2, 2]]
    assert en.count(_spec("connected", 4, dedup_iso=True)) == 6
    assert en.count(_spec("connected", 5, dedup_iso=True)) == 21


def test_dedup_reps_cover_every_graph_once():
    reps = list(en.generate(_spec("connected", 4, dedup_iso=True)))
    assert len({en.canonical_form(g) for g in reps}) == len(reps)
    for g in en.generate(_spec("connected", 4)):
        assert sum(en.is_isomorphic(g, rep) for rep in reps) == 1


def test_regular_n4_r3_is_k4():
    assert list(en.generate(_spec("regular", 4, r=3))) == [gr.complete(4)]


def test_regular_matches_filtered_all_stream():
    for n in range(2, 7):
        by_r = {r: [] for r in range(n)}
        for g in en.generate(_spec("all", n)):
            degs = g.degrees()
            r = degs[0]
            if all(d == r for d in degs) and gr.is_connected(g):
                by_r[r].append(en.adjacency_mask(g))
        for r in range(n):
            assert _masks(_spec("regular", n, r=r)) == by_r[r]


def test_regular_n7_closed_forms():
    # labeled connected 2-regular on 7 vertices: relabelings of C_7, 7!/14
    assert en.count(_spec("regular", 7, r=2)) == 360
    # 4-regular on 7 vertices: complements of the 465 2-regular graphs
    # (C_7 or C_3+C_4), and none is disconnected (components would need >= 5
    # vertices each)
    assert en.count(_spec("regular", 7, r=4)) == 465
    assert en.count(_spec("regular", 7, r=6)) == 1
    for r in (0, 1, 3, 5):
        assert en.count(_spec("regular", 7, r=r)) == 0


def test_regular_dedup_classes():
    reps = list(en.generate(_spec("regular", 6, r=3, dedup_iso=True)))
    assert len(reps) == 2
    tri = sorted(tuple(sorted(en._triangle_vector(g))) for g in reps)
    assert tri == [(0, 0, 0, 0, 0, 0), (1, 1, 1, 1, 1, 1)]  # K_{3,3}, prism
    assert any(en.is_isomorphic(g, gr.complete_bipartite(3, 3)) for g in reps)
    assert any(en.is_isomorphic(g, _prism()) for g in reps)
    # dedup agrees with canonicalizing the full labeled stream
    full = {en.canonical_form(g) for g in en.generate(_spec("regular", 6, r=3))}
    assert {en.canonical_form(g) for g in reps} == full


def test_regular_dedup_known_counts():
    assert en.count(_spec("regular", 5, r=4, dedup_iso=True)) == 1
    assert en.count(_spec("regular", 7, r=4, dedup_iso=True)) == 2
    assert en.count(_spec("regular", 8, r=3, dedup_iso=True)) == 5
    assert en.count(_spec("regular", 8, r=4, dedup_iso=True)) == 6


def test_canonical_form_basics():
    relabeled = gr.from_edges(4, [(3, 1), (1, 0), (0, 2)])  # a path in disguise
    assert en.canonical_form(relabeled) == en.canonical_form(gr.path(4))
    assert en.canonical_form(gr.path(4)) != en.canonical_form(gr.star(3))
    with pytest.raises(ValueError):
        en.canonical_form(gr.cycle(9))


def test_is_isomorphic_small():
    assert en.is_isomorphic(gr.cycle(4), gr.complete_bipartite(2, 2))
    assert not en.is_isomorphic(gr.cycle(6), gr.union_of(gr.cycle(3), 2))
    assert not en.is_isomorphic(gr.path(4), gr.star(3))
    assert not en.is_isomorphic(gr.path(3), gr.path(4))


def test_is_isomorphic_large_uses_search():
    # n > 8: degree and triangle invariants agree, only the search separates
    shuffled = gr.from_edges(10, [((3 * i) % 10, (3 * i + 3) % 10) for i in range(10)])
    assert en.is_isomorphic(gr.cycle(10), shuffled)
    two_c5 = gr.union_of(gr.cycle(5), 2)
    assert not en.is_isomorphic(gr.cycle(10), two_c5)


def test_automorphism_counts():
    assert en.automorphism_count(gr.complete(4)) == 24
    assert en.automorphism_count(gr.empty_graph(3)) == 6
    assert en.automorphism_count(gr.complete(12)) == math.factorial(12)
    assert en.automorphism_count(gr.cycle(5)) == 10
    assert en.automorphism_count(gr.cycle(6)) == 12
    assert en.automorphism_count(gr.complement(gr.cycle(6))) == 12
    assert en.automorphism_count(gr.path(4)) == 2
    assert en.automorphism_count(gr.star(3)) == 6
    assert en.automorphism_count(gr.complete_bipartite(3, 3)) == 72
    assert en.automorphism_count(_prism()) == 12


def test_file_stream_roundtrip(tmp_path):
    graphs = [gr.path(3), gr.complete(3), gr.cycle(5)]
    f = tmp_path / "family.g6"
    f.write_text("\n".join(gr.to_graph6(g) for g in graphs) + "\n\n")
    out = list(en.generate(_spec("file", path=str(f))))
    assert out == graphs
    assert en.count(_spec("file", path=str(f))) == 3


def test_file_stream_dedup(tmp_path):
    relabeled = gr.from_edges(3, [(1, 2), (2, 0)])
    f = tmp_path / "dups.g6"
    f.write_text("\n".join(gr.to_graph6(g) for g in [gr.path(3), relabeled, gr.complete(3)]))
    assert en.count(_spec("file", path=str(f), dedup_iso=True)) == 2
    big = tmp_path / "big.g6"
    big.write_text(gr.to_graph6(gr.cycle(9)) + "\n")
    with pytest.raises(ValueError):
        list(en.generate(_spec("file", path=str(big), dedup_iso=True)))


def test_file_stream_errors(tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text(gr.to_graph6(gr.path(3)) + "\n\x01\x02garbage\n")
    with pytest.raises(ValueError, match="line 2"):
        list(en.generate(_spec("file", path=str(f))))
    with pytest.raises(OSError):
        list(en.generate(_spec("file", path=str(tmp_path / "missing.g6"))))
