import numpy as np
import pytest
from hypothesis import given, strategies as st

from localmaxcut import (Clause, build_localmaxcut_hamiltonian, evaluate_all,
                         evaluate_classical, fourier_encode_clause,
                         hamiltonian_to_json, local_satisfaction_clause,
                         make_cycle, make_hamiltonian, make_named, mask_of,
                         vertices_of)


def test_mask_vertices_roundtrip():
    assert mask_of([0, 2, 5]) == 0b100101
    assert vertices_of(0b100101) == [0, 2, 5]
    assert mask_of([]) == 0
    assert vertices_of(0) == []


@given(st.sets(st.integers(min_value=0, max_value=30)))
def test_mask_roundtrip_property(vs):
    assert vertices_of(mask_of(vs)) == sorted(vs)


def test_make_hamiltonian_validation():
    h = make_hamiltonian(3, {0: 1.5, 0b011: -0.5, 0b100: 0.0})
    assert h.constant == 1.5
    assert h.nonconstant_terms() == ((0b011, -0.5),)  # zero weight dropped
    with pytest.raises(ValueError):
        make_hamiltonian(2, {0b100: 1.0})  # subset outside 0..n-1
    with pytest.raises(ValueError):
        make_hamiltonian(65, {})


def test_local_satisfaction_clause_tables():
    # bit 0 is the center; satisfied iff at most floor(d/2) neighbors agree
    c2 = local_satisfaction_clause(2)
    assert c2.support == (0, 1, 2)
    assert len(c2.truth_table) == 8
    assert c2.truth_table[0b000] == 0.0  # both neighbors agree
    assert c2.truth_table[0b110] == 1.0  # both disagree
    assert c2.truth_table[0b010] == 1.0  # one agrees
    assert sum(c2.truth_table) == 6.0  # 3/4 of 8 assignments
    c3 = local_satisfaction_clause(3)
    assert len(c3.truth_table) == 16
    assert sum(c3.truth_table) == 8.0  # exactly half satisfied


def test_clause_validation():
    with pytest.raises(ValueError):
        Clause(support=(0, 1), truth_table=(0.0,) * 3)  # not 2^|support|
    with pytest.raises(ValueError):
        Clause(support=(1, 1), truth_table=(0.0,) * 4)  # repeated vertex
    with pytest.raises(ValueError):
        Clause(support=tuple(range(17)), truth_table=(0.0,) * 2 ** 17)


def test_encoder_degree2_golden():
    h = fourier_encode_clause(local_satisfaction_clause(2))
    assert dict(h.terms) == {
        0: 0.75,
        mask_of((0, 1)): -0.25,
        mask_of((0, 2)): -0.25,
        mask_of((1, 2)): -0.25,
    }


def test_encoder_degree3_golden():
    h = fourier_encode_clause(local_satisfaction_clause(3))
    assert dict(h.terms) == {
        0: 0.5,
        mask_of((0, 1)): -0.25,
        mask_of((0, 2)): -0.25,
        mask_of((0, 3)): -0.25,
        mask_of((0, 1, 2, 3)): 0.25,
    }


def test_encoder_respects_support_labels():
    base = fourier_encode_clause(local_satisfaction_clause(2))
    moved = fourier_encode_clause(local_satisfaction_clause(2, support=(2, 5, 7)))
    relabel = {0: 2, 1: 5, 2: 7}
    expected = {mask_of(relabel[v] for v in vertices_of(m)): w
                for m, w in base.terms}
    assert dict(moved.terms) == expected


@given(st.lists(st.sampled_from([0.0, 1.0]), min_size=8, max_size=8))
def test_encoder_inverts_to_truth_table(table):
    # encoding then evaluating pointwise must reproduce the table exactly
    h = fourier_encode_clause(Clause(support=(0, 1, 2), truth_table=tuple(table)))
    for x in range(8):
        assert evaluate_classical(h, x) == pytest.approx(table[x], abs=1e-12)


def test_build_c3_merges_pairs_onto_edges():
    # on a triangle every distance-2 pair is itself an edge, so each edge
    # collects -1/4 from both endpoints plus -1/4 from the opposite vertex
    h = build_localmaxcut_hamiltonian(make_cycle(3))
    assert h.constant == 2.25
    assert sorted(h.nonconstant_terms()) == [
        (mask_of((0, 1)), -0.75),
        (mask_of((0, 2)), -0.75),
        (mask_of((1, 2)), -0.75),
    ]


def test_build_c4_merges_diagonals():
    # the two diagonals of C_4 each serve as the distance-2 pair of two
    # vertices, merging to the same -1/2 weight the true edges carry
    h = build_localmaxcut_hamiltonian(make_cycle(4))
    assert h.constant == 3.0
    weights = dict(h.nonconstant_terms())
    assert len(weights) == 6
    assert all(w == -0.5 for w in weights.values())


def test_build_k4_golden():
    h = build_localmaxcut_hamiltonian(make_named("K4"))
    weights = dict(h.nonconstant_terms())
    assert h.constant == 2.0
    assert weights.pop(mask_of((0, 1, 2, 3))) == 1.0  # four balls coincide
    assert len(weights) == 6
    assert all(w == -0.5 for w in weights.values())


def test_build_cycle_girth5_profile():
    # above girth 4 nothing merges: one edge and one pair term per vertex
    for n in (5, 7):
        h = build_localmaxcut_hamiltonian(make_cycle(n))
        assert h.constant == 0.75 * n
        weights = dict(h.nonconstant_terms())
        assert len(weights) == 2 * n
        assert sorted(weights.values()) == [-0.5] * n + [-0.25] * n


def test_build_requires_regular_graph():
    from localmaxcut import load_edge_list
    with pytest.raises(ValueError):
        build_localmaxcut_hamiltonian(load_edge_list("0 1\n1 2\n"))


def test_evaluate_classical_counts_satisfied_vertices():
    from localmaxcut import satisfied
    g = make_cycle(7)
    h = build_localmaxcut_hamiltonian(g)
    rng = np.random.default_rng(2)
    for _ in range(20):
        bits = rng.integers(0, 2, size=7)
        cut = np.where(bits == 1, 1, -1)
        count = sum(satisfied(g, cut, v) for v in range(7))
        assert evaluate_classical(h, list(bits)) == pytest.approx(count, abs=1e-12)


def test_evaluate_classical_accepts_mask_or_bits():
    h = build_localmaxcut_hamiltonian(make_cycle(5))
    for x in range(32):
        bits = [(x >> v) & 1 for v in range(5)]
        assert evaluate_classical(h, x) == evaluate_classical(h, bits)
    with pytest.raises(ValueError):
        evaluate_classical(h, [0, 1])  # wrong length
    with pytest.raises(ValueError):
        evaluate_classical(h, 1 << 5)  # mask out of range


def test_evaluate_all_matches_pointwise():
    h = build_localmaxcut_hamiltonian(make_named("K4"))
    vals = evaluate_all(h)
    assert vals.shape == (16,)
    for x in range(16):
        assert vals[x] == pytest.approx(evaluate_classical(h, x), abs=1e-12)


def test_hamiltonian_to_json_sorted():
    h = build_localmaxcut_hamiltonian(make_cycle(3))
    doc = hamiltonian_to_json(h)
    assert doc["n"] == 3
    assert doc["terms"][0] == {"subset": [], "weight": 2.25}
    assert [t["subset"] for t in doc["terms"][1:]] == [[0, 1], [0, 2], [1, 2]]
