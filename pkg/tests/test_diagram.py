from __future__ import annotations

import random

import pytest

import oracles as O
from adequa.diagram import (
    BraidWord,
    DiagramBuilder,
    DiagramError,
    PlanarDiagram,
    braid_closure,
    canonical,
    connected_sum,
    disjoint_union,
    mirror,
    parse_braid,
    parse_diagram,
    parse_pd,
    parse_pretzel,
    pretzel,
    same_diagram,
    torus_2q,
    unknot,
)
from adequa.generators import random_alternating, random_diagram

TREFOIL = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


def relabel(D: PlanarDiagram, seed: int) -> PlanarDiagram:
    """Shuffle arc labels and crossing order."""
    rng = random.Random(seed)
    labels = sorted({v for x in D.crossings for v in x})
    new = list(range(10, 10 + len(labels)))
    rng.shuffle(new)
    m = dict(zip(labels, new))
    rows = [tuple(m[v] for v in x) for x in D.crossings]
    rng.shuffle(rows)
    return PlanarDiagram(tuple(rows), D.free_loops)


class TestParsing:
    def test_trefoil(self):
        D = parse_pd(TREFOIL)
        assert D.num_crossings == 3
        assert D.num_arcs == 6
        assert len(D.faces) == 5

    def test_wrapper_and_commas(self):
        assert parse_pd("PD[" + TREFOIL.replace(" ", ", ") + "]") == parse_pd(TREFOIL)

    def test_free_loops_round_trip(self):
        D = parse_pd(TREFOIL + " O*2")
        assert D.free_loops == 2
        assert parse_pd(D.pd_string()) == D

    @pytest.mark.parametrize(
        "text",
        ["", "   ", "X[1,2,3]", "X[1,1,2,3]", "X[0,1,1,0]", "Y[1,2,3,4]", "X[1,2,3,4] X[1,2,3,5]"],
    )
    def test_malformed(self, text):
        with pytest.raises(DiagramError):
            parse_pd(text)

    def test_nonplanar_gluing_rejected(self):
        # labels each used twice, but the gluing has the wrong face count
        with pytest.raises(DiagramError):
            parse_pd("X[1,2,3,4] X[1,3,2,4]")

    def test_parse_diagram_dispatch(self):
        assert parse_diagram("P(3,3,3)") == pretzel([3, 3, 3])
        assert parse_diagram("3: 1 -2 1 -2") == braid_closure(BraidWord(3, (1, -2, 1, -2)))
        assert parse_diagram(TREFOIL) == parse_pd(TREFOIL)

    def test_pretzel_text(self):
        assert parse_pretzel("P(-2, 3,3)") == [-2, 3, 3]
        with pytest.raises(DiagramError):
            parse_pretzel("P()")
        with pytest.raises(DiagramError):
            parse_pretzel("P(a,b)")

    def test_braid_text(self):
        b = parse_braid("4: 1, -3 2")
        assert b.strand_count == 4 and b.letters == (1, -3, 2)
        for bad in ("3: 0", "3: 3", "1:", "x: 1", "3: 1 a"):
            with pytest.raises(DiagramError):
                parse_braid(bad)


class TestStructure:
    @pytest.mark.parametrize("text", [TREFOIL, FIGURE_EIGHT])
    def test_faces_match_oracle(self, text):
        D = parse_pd(text)
        ours = sorted(sorted(f.corners) for f in D.faces)
        theirs = sorted(sorted((c, p) for c, p in f) for f in O.faces(D))
        assert ours == theirs

    @pytest.mark.parametrize("seed", range(40))
    def test_euler_relation(self, seed):
        D = random_diagram(3 + seed % 12, seed)
        # a connected 4-valent plane graph has V - E + F = 2
        assert D.num_crossings - 2 * D.num_crossings + len(D.faces) == 2
        assert sum(f.size for f in D.faces) == 4 * D.num_crossings

    def test_face_corner_lookup(self):
        D = parse_pd(FIGURE_EIGHT)
        for f in D.faces:
            for c, k in f.corners:
                assert D.face_of_corner[4 * c + k] == f.index

    def test_other_is_involution(self):
        D = pretzel([3, -2, 5])
        assert all(D.other[D.other[i]] == i and D.other[i] != i for i in range(4 * D.num_crossings))

    def test_components(self):
        assert parse_pd(TREFOIL).component_count == 1
        assert torus_2q(4).component_count == 2
        assert pretzel([2, 2, 2]).component_count == 3
        assert unknot(3).component_count == 3

    def test_pieces(self):
        D = disjoint_union(parse_pd(TREFOIL), torus_2q(2))
        assert D.num_pieces == 2 and not D.is_connected()
        assert parse_pd(TREFOIL + " O*1").num_pieces == 2
        assert parse_pd(TREFOIL).is_connected()


class TestConstructors:
    @pytest.mark.parametrize("q", [2, 3, 5, -4])
    def test_torus(self, q):
        D = torus_2q(q)
        assert D.num_crossings == abs(q)
        assert D.component_count == (1 if q % 2 else 2)

    def test_pretzel_counts(self):
        D = pretzel([-2, 3, 3])
        assert D.num_crossings == 8
        assert D.component_count == 1

    def test_braid_free_strand(self):
        D = braid_closure(BraidWord(4, (1, 1, 1)))
        assert D.free_loops == 2
        assert D.num_crossings == 3

    def test_builder_round_trip(self):
        D = pretzel([3, -3, 4])
        assert same_diagram(DiagramBuilder.from_diagram(D).build(), D)

    def test_connected_sum(self):
        T = parse_pd(TREFOIL)
        S = connected_sum(T, T)
        assert S.num_crossings == 6 and S.is_connected() and S.component_count == 1
        with pytest.raises(DiagramError):
            connected_sum(T, unknot())

    def test_mirror_is_involution(self):
        D = pretzel([-2, 3, 3])
        assert mirror(mirror(D)) == D
        assert mirror(D) != D


class TestCanonical:
    @pytest.mark.parametrize("seed", range(25))
    def test_relabelling_invariant(self, seed):
        D = random_diagram(4 + seed % 10, seed)
        assert canonical(relabel(D, seed)) == canonical(D)

    def test_distinguishes(self):
        assert not same_diagram(parse_pd(TREFOIL), mirror(parse_pd(TREFOIL)))
        assert not same_diagram(parse_pd(TREFOIL), parse_pd(FIGURE_EIGHT))

    def test_idempotent(self):
        D = canonical(random_alternating(9, 3))
        assert canonical(D) == D

    @pytest.mark.parametrize("seed", range(30))
    def test_idempotent_on_links(self, seed):
        # relabelling reorients some components; the form must not depend on it
        D = random_alternating(6 + seed % 10, seed)
        assert canonical(canonical(D)) == canonical(D)
        assert same_diagram(pretzel([2, 2, 2]), canonical(pretzel([2, 2, 2])))

    def test_trefoil_closure(self):
        assert same_diagram(torus_2q(3), torus_2q(3))
        assert canonical(torus_2q(3)).num_crossings == 3
