import pytest

from thompsonf.gamma_s import (
    build_gamma_s,
    check_structure,
    descriptor_text,
    image_collisions,
    find_descriptor,
    gamma_s_doubling_witness,
    in_s,
    interior,
    verify_induced_edges,
    verify_vertex_equality,
)
from thompsonf.monoid import TRIVIAL, word_to_forest


def test_membership():
    assert not in_s(TRIVIAL)
    assert in_s(word_to_forest((3,)))
    assert in_s(word_to_forest((4, 0, 1, 1)))
    f = word_to_forest((0, 1))
    d = find_descriptor(f)
    assert word_to_forest((d[0],) + d[1]) == f
    assert find_descriptor(TRIVIAL) is None
    assert descriptor_text((3, (0, 1))) == "x3 x0 x1"


def test_boundary_identification_examples():
    # x_n v x0 = v x0 x1 for |v| = n - 2
    for n, v in ((2, ()), (3, (0,)), (3, (1,)), (4, (1, 0))):
        assert word_to_forest((n,) + v + (0,)) == word_to_forest(v + (0, 1))


def test_small_truncation_frozen_sizes():
    g = build_gamma_s(3, 3)
    assert len(g.descriptors) == 47
    assert len(g.vertices) == 99
    assert sum(1 for v in g.vertices if not g.is_explored(v)) == 52
    assert g.edge_count() == 98
    with pytest.raises(ValueError):
        build_gamma_s(1, 3)


def test_structure_passes():
    g = build_gamma_s(5, 6)
    rep = check_structure(g)
    assert rep.passed, rep.failures
    ids = rep.details["identifications_per_n"]
    for n in range(2, 6):
        assert ids[n] == 2 ** (n - 2)


def test_doubling_witness_and_negative_control():
    g = build_gamma_s(4, 8)
    assert len(interior(g)) > 0
    rep = gamma_s_doubling_witness(g, samples=30, seed=1, scan_nmax=4, scan_length=4)
    assert rep.passed, rep.failures
    same = lambda a: a.add_caret(1).add_caret(0)
    bad = gamma_s_doubling_witness(g, samples=30, seed=1, f_map=same, g_map=same, scan_nmax=3, scan_length=3)
    assert not bad.passed


def test_images_never_collide_for_small_words():
    assert image_collisions(4, 5) == []


def test_forest_and_pl_identifications_agree():
    rep = verify_vertex_equality(4, 4)
    assert rep.passed, rep.failures
    assert rep.details["coincidences"]


def test_edges_match_pl_products():
    rep = verify_induced_edges(build_gamma_s(3, 5))
    assert rep.passed, rep.failures
