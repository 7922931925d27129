from fractions import Fraction

import pytest

from predim.classes import ClassSpec
from predim.errors import InputError
from predim.graphs import Graph, complete_graph, cycle_graph
from predim.ramsey import (
    non_ramsey_certificate,
    one_point_refutation,
    search_bad_coloring,
)

from conftest import random_graph


def has_monochromatic_copy(host, pattern, coloring):
    from predim.embeddings import enumerate_copies

    for emb in enumerate_copies(pattern, host):
        colors = {coloring[v] for v in emb.image}
        if len(colors) == 1:
            return True
    return False


def test_triangle_in_k4_two_colors_refuted():
    cert = non_ramsey_certificate(complete_graph(3, "p"), complete_graph(4), 2)
    assert cert.verdict == "refuted"
    assert cert.m_C == Fraction(3, 2)
    assert cert.eta_star_B == 2
    assert cert.bad_coloring is not None
    assert not has_monochromatic_copy(complete_graph(4), complete_graph(3, "p"),
                                      cert.bad_coloring)


def test_triangle_in_k6_two_colors_inconclusive():
    cert = non_ramsey_certificate(complete_graph(3, "p"), complete_graph(6), 2)
    assert cert.verdict == "inconclusive"
    assert cert.m_C == Fraction(5, 2)


def test_five_cycle_pattern_against_class_member():
    # a sparse member of the positive class at alpha 2
    host = cycle_graph(7)
    cert = non_ramsey_certificate(cycle_graph(5, "p"), host, 3)
    assert cert.verdict == "refuted"  # m(C7) = 1 < 3


def test_search_finds_coloring_for_k4():
    result = search_bad_coloring(complete_graph(4), complete_graph(3, "p"), 2)
    assert result.status == "found"
    assert not has_monochromatic_copy(complete_graph(4), complete_graph(3, "p"),
                                      result.coloring)


def test_search_exhausts_on_k6():
    # R(3,3) = 6: every 2-coloring of K6 has a monochromatic triangle
    result = search_bad_coloring(complete_graph(6), complete_graph(3, "p"), 2)
    assert result.status == "exhausted"


def test_search_vacuous_when_no_copies():
    result = search_bad_coloring(cycle_graph(5), complete_graph(3, "p"), 2)
    assert result.status == "found"


def test_search_budget_returns_unknown():
    result = search_bad_coloring(complete_graph(6), complete_graph(3, "p"), 2, budget=5)
    assert result.status == "unknown"


def test_refuted_small_hosts_always_get_colorings(rng):
    # density certificate and exhaustive oracle agree on random instances
    checked = 0
    while checked < 100:
        b = random_graph(rng, rng.randint(2, 5), rng.random(), prefix="b")
        c = random_graph(rng, rng.randint(2, 9), rng.random())
        r = rng.randint(2, 4)
        cert = non_ramsey_certificate(b, c, r)
        if cert.verdict != "refuted":
            continue
        checked += 1
        assert cert.coloring_status == "found"
        assert not has_monochromatic_copy(c, b, cert.bad_coloring)


def test_one_point_refutation_valid():
    report = one_point_refutation(ClassSpec(2, "k_plus"), 3, 3)
    assert report.valid
    assert report.checks["cycle_in_class"]
    assert report.checks["all_vertices_closed"]
    assert report.checks["min_degree_parameter"] == 2


def test_one_point_refutation_ordered():
    report = one_point_refutation(ClassSpec(2, "k_plus"), 3, 3, ordered=True)
    assert report.valid and report.ordered


def test_one_point_rejects_small_r():
    with pytest.raises(InputError):
        one_point_refutation(ClassSpec(2, "k_plus"), 4, 2)
    with pytest.raises(InputError):
        one_point_refutation(ClassSpec(2, "k_plus"), 2, 3)


def test_one_point_for_controlled_class_checks_strict_closedness():
    report = one_point_refutation(ClassSpec(2, "k_f"), 4, 3)
    assert report.valid


def test_one_point_for_collapsed_class():
    from predim.graphs import graph_to_json

    fan = Graph(
        ["a", "b1", "b2", "b3"],
        [("b1", "b2"), ("b2", "b3"), ("b3", "b1"),
         ("a", "b1"), ("a", "b2"), ("a", "b3")],
    )
    spec_data = {
        "alpha": "2/1",
        "variant": "k_mu",
        "mu": [{"A": {"vertices": ["a"], "edges": []},
                "B": graph_to_json(fan), "bound": 2}],
    }
    from predim.classes import classspec_from_json

    report = one_point_refutation(classspec_from_json(spec_data), 3, 3)
    assert report.valid
