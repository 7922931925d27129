import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from predim.errors import InputError
from predim.graphs import Graph, complete_graph, cycle_graph
from predim.predimension import (
    delta,
    first_violation_by_size,
    min_delta_over,
    relative_delta,
)

from conftest import oracle_delta, random_graph


def test_delta_triangle_at_two():
    assert delta(complete_graph(3), 2) == 3


def test_delta_empty_graph():
    assert delta(Graph([], []), Fraction(7, 3)) == 0


def test_delta_four_cycle_at_one():
    assert delta(cycle_graph(4), 1) == 0


def test_delta_exact_rational():
    g = complete_graph(5)
    assert delta(g, Fraction(3, 2)) == Fraction(3, 2) * 5 - 10


def test_relative_delta_self_is_zero(rng):
    g = random_graph(rng, 6, 0.5)
    s = frozenset(g.vertices[:3])
    assert relative_delta(s, s, g, 2) == 0


def test_relative_delta_unknown_vertex():
    g = complete_graph(3)
    with pytest.raises(InputError):
        relative_delta({"nope"}, {"v1"}, g, 2)


def test_delta_chain_additivity(rng):
    # delta(ABC) = delta(AB/C) + delta(C), and the three-step chain, exactly
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        names = list(g.vertices)
        pick = lambda: frozenset(rng.sample(names, rng.randint(0, len(names))))
        a, b, c = pick(), pick(), pick()
        alpha = Fraction(rng.randint(1, 4), rng.randint(1, 3))
        from predim.graphs import induced

        abc = delta(induced(g, a | b | c), alpha)
        assert abc == relative_delta(a | b, c, g, alpha) + delta(induced(g, c), alpha)
        assert abc == (
            relative_delta(a, b | c, g, alpha)
            + relative_delta(b, c, g, alpha)
            + delta(induced(g, c), alpha)
        )


def _check_engines_agree(g, lower, alpha):
    enum = min_delta_over(g, lower, None, alpha, engine="enum")
    flow = min_delta_over(g, lower, None, alpha, engine="flow")
    assert enum.value == flow.value
    assert enum.minimal == flow.minimal
    assert enum.maximal == flow.maximal
    # the reported sets really achieve the value
    assert oracle_delta(g, enum.minimal, alpha) == enum.value
    assert oracle_delta(g, enum.maximal, alpha) == enum.value


def test_min_delta_engines_agree(rng):
    alphas = [Fraction(1), Fraction(2), Fraction(3, 2), Fraction(5, 3)]
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        lower = frozenset(rng.sample(list(g.vertices), rng.randint(0, g.num_vertices)))
        _check_engines_agree(g, lower, rng.choice(alphas))


def test_min_delta_value_is_true_minimum(rng):
    from itertools import combinations

    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 7), 0.5)
        lower = frozenset(rng.sample(list(g.vertices), rng.randint(0, g.num_vertices)))
        alpha = Fraction(rng.randint(1, 3))
        res = min_delta_over(g, lower, None, alpha, engine="flow")
        extra = sorted(set(g.vertices) - lower)
        best = min(
            oracle_delta(g, lower | set(c), alpha)
            for k in range(len(extra) + 1)
            for c in combinations(extra, k)
        )
        assert res.value == best


def test_first_violation_has_minimum_size(rng):
    from itertools import combinations

    hits = 0
    for _ in range(120):
        g = random_graph(rng, rng.randint(2, 7), 0.6)
        lower = frozenset(rng.sample(list(g.vertices), rng.randint(1, g.num_vertices)))
        alpha = Fraction(1)
        found = first_violation_by_size(g, lower, None, alpha)
        base = oracle_delta(g, lower, alpha)
        extra = sorted(set(g.vertices) - lower)
        sizes = [
            k
            for k in range(1, len(extra) + 1)
            for c in combinations(extra, k)
            if oracle_delta(g, lower | set(c), alpha) < base
        ]
        if not sizes:
            assert found is None
        else:
            hits += 1
            assert found is not None
            assert len(found - lower) == min(sizes)
            assert oracle_delta(g, found, alpha) < base
    assert hits > 10  # the sweep actually exercised violations


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 2**15 - 1), st.integers(2, 6), st.integers(1, 2))
def test_min_delta_flow_matches_enum_on_six_vertex_graphs(mask, p, q):
    from itertools import combinations

    names = [f"v{i}" for i in range(6)]
    slots = list(combinations(names, 2))
    g = Graph(names, [slots[i] for i in range(15) if mask >> i & 1])
    alpha = Fraction(p, q)  # rationals in [1, 6]
    enum = min_delta_over(g, frozenset(), None, alpha, engine="enum")
    flow = min_delta_over(g, frozenset(), None, alpha, engine="flow")
    assert enum.value == flow.value
    assert enum.minimal == flow.minimal


def test_min_delta_respects_bounds():
    g = cycle_graph(5)
    res = min_delta_over(g, {"v1"}, {"v1", "v2", "v3"}, 1)
    assert res.value == min(
        oracle_delta(g, s, 1)
        for s in [{"v1"}, {"v1", "v2"}, {"v1", "v3"}, {"v1", "v2", "v3"}]
    )
    with pytest.raises(InputError):
        min_delta_over(g, {"v4"}, {"v1", "v2"}, 1)
