"""Randomised invariants over generated diagrams."""

from __future__ import annotations

import networkx as nx
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles as O
from adequa.certifier import certify, turaev_genus
from adequa.diagram import canonical, connected_sum, mirror, parse_pd
from adequa.generators import random_alternating, random_diagram
from adequa.kauffman import Resolution, build_H, circle_counts, is_adequate, state_circle_count
from adequa.polyhedral import polyhedral_regions
from adequa.twist import is_prime_diagram, is_twist_reduced, two_edge_loop_condition

sizes = st.integers(1, 24)
seeds = st.integers(0, 10**6)
diagrams = st.one_of(st.builds(random_alternating, sizes, seeds), st.builds(random_diagram, sizes, seeds))
resolutions = st.sampled_from(list(Resolution))


@given(diagrams, st.data())
def test_single_flip_changes_one_circle(D, data):
    x = data.draw(st.integers(0, D.num_crossings - 1))
    states = data.draw(st.lists(resolutions, min_size=D.num_crossings, max_size=D.num_crossings))
    flipped = list(states)
    flipped[x] = states[x].other
    assert abs(state_circle_count(D, flipped) - state_circle_count(D, states)) == 1


@given(diagrams)
def test_mirror_duality(D):
    assert nx.is_isomorphic(O.state_graph(D, "A"), O.state_graph(mirror(D), "B"))
    assert circle_counts(mirror(D)) == circle_counts(D)[::-1]


@given(diagrams)
def test_genus_bound(D):
    s_a, s_b = circle_counts(D)
    assert s_a + s_b <= D.num_crossings + 2
    assert (s_a + s_b == D.num_crossings + 2) == (turaev_genus(D) == 0)


@given(st.builds(random_alternating, sizes, seeds))
def test_alternating_genus_zero(D):
    assert turaev_genus(D) == 0


@given(diagrams, resolutions)
def test_adequate_two_edge_loops_imply_twist_reduced(D, c):
    assume(is_adequate(D, c) and two_edge_loop_condition(D, c))
    assert is_twist_reduced(D, c)


@given(diagrams)
def test_mirror_verdict(D):
    a, b = certify(D), certify(mirror(D))
    assert a.verdict == b.verdict
    assert a.quantities["turaev_genus"] == b.quantities["turaev_genus"]


@given(diagrams, resolutions)
def test_regions_partition_segments(D, c):
    assume(is_adequate(D, c))
    regions = polyhedral_regions(build_H(D, c))
    assert sorted(x for r in regions for x in r.segments) == list(range(D.num_crossings))
    assert len(regions) >= O.circle_regions_with_segments(D, c.value)


@given(diagrams)
def test_pd_round_trip(D):
    assert parse_pd(D.pd_string()) == D
    assert canonical(parse_pd(canonical(D).pd_string())) == canonical(D)


@given(st.builds(random_alternating, st.integers(2, 12), seeds), st.builds(random_alternating, st.integers(2, 12), seeds))
def test_connected_sum(D1, D2):
    S = connected_sum(D1, D2)
    assert not is_prime_diagram(S)
    for c in Resolution:
        # one circle through the band on each side merges
        s1 = circle_counts(D1)[c is Resolution.B]
        s2 = circle_counts(D2)[c is Resolution.B]
        assert circle_counts(S)[c is Resolution.B] == s1 + s2 - 1
    assert turaev_genus(S) == turaev_genus(D1) + turaev_genus(D2)
