"""Brute-force reference computations, written independently of the package.

They work from the raw PD labels only: which two ports share an arc label,
and the counterclockwise port order.  Nothing here calls into the package's
state, face or primality code.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

# Ports joined by each smoothing, and the two ports whose state arcs the
# segment connects.
PAIRS = {"A": ((0, 1), (2, 3)), "B": ((1, 2), (3, 0))}
SEGMENT_PORTS = {"A": (0, 2), "B": (1, 3)}


class _DSU:
    def __init__(self, items):
        self.parent = {v: v for v in items}

    def find(self, v):
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def state_circles(crossings, choice):
    """Map each arc label to a circle id, and the number of circles."""
    labels = {v for x in crossings for v in x}
    dsu = _DSU(labels)
    for x in crossings:
        for p, q in PAIRS[choice]:
            dsu.union(x[p], x[q])
    roots = sorted({dsu.find(v) for v in labels})
    ids = {r: i for i, r in enumerate(roots)}
    return {v: ids[dsu.find(v)] for v in labels}, len(roots)


def circle_count(D, choice):
    return state_circles(D.crossings, choice)[1] + D.free_loops


def mixed_circle_count(D, choices):
    labels = {v for x in D.crossings for v in x}
    dsu = _DSU(labels)
    for x, c in zip(D.crossings, choices):
        for p, q in PAIRS[c]:
            dsu.union(x[p], x[q])
    return len({dsu.find(v) for v in labels}) + D.free_loops


def state_graph(D, choice) -> nx.MultiGraph:
    circ, n = state_circles(D.crossings, choice)
    G = nx.MultiGraph()
    G.add_nodes_from(range(n))
    p, q = SEGMENT_PORTS[choice]
    for i, x in enumerate(D.crossings):
        G.add_edge(circ[x[p]], circ[x[q]], crossing=i)
    return G


def has_loop(D, choice) -> bool:
    return any(u == v for u, v in state_graph(D, choice).edges())


def reduced_chi(D, choice):
    """Euler characteristic of the simple graph underlying the state graph."""
    G = nx.Graph(state_graph(D, choice))
    return G.number_of_nodes() - G.number_of_edges()


def parallel_pairs(D, choice):
    """Crossing pairs whose state graph edges join the same two circles."""
    G = state_graph(D, choice)
    by_ends = {}
    for u, v, data in G.edges(data=True):
        by_ends.setdefault(frozenset((u, v)), []).append(data["crossing"])
    return [pair for xs in by_ends.values() for pair in combinations(sorted(xs), 2)]


def _port_partner(crossings):
    where = {}
    for i, x in enumerate(crossings):
        for p, v in enumerate(x):
            where.setdefault(v, []).append((i, p))
    partner = {}
    for ends in where.values():
        a, b = ends
        partner[a], partner[b] = b, a
    return partner


def faces(D):
    """Faces as lists of ``(crossing, corner)``: leave through a port, arrive, turn left."""
    partner = _port_partner(D.crossings)
    seen = set()
    out = []
    for start in sorted(partner):
        if start in seen:
            continue
        face = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            face.append(cur)
            c, p = partner[cur]
            cur = (c, (p - 1) % 4)
        out.append(face)
    return out


def arc_faces(D):
    """For each arc label, the set of faces on its two sides."""
    fs = faces(D)
    face_of = {corner: i for i, f in enumerate(fs) for corner in f}
    partner = _port_partner(D.crossings)
    out = {}
    for (c, p), (e, q) in partner.items():
        label = D.crossings[c][p]
        # the face leaving through (c, p), and the one leaving through the far end
        out.setdefault(label, set()).update({face_of[(c, p)], face_of[(e, q)]})
    return out


def is_prime(D) -> bool:
    """No two distinct arcs border the same two faces and split the crossings."""
    n = len(D.crossings)
    if n < 2:
        return True
    G = nx.MultiGraph()
    G.add_nodes_from(range(n))
    partner = _port_partner(D.crossings)
    keys = {}
    for (c, p), (e, q) in partner.items():
        if (c, p) < (e, q):
            keys[D.crossings[c][p]] = (c, e, G.add_edge(c, e))
    sides = arc_faces(D)
    for u, v in combinations(sorted(sides), 2):
        if len(sides[u]) == 2 and sides[u] == sides[v]:
            H = G.copy()
            H.remove_edge(*keys[u])
            H.remove_edge(*keys[v])
            if nx.number_connected_components(H) > 1:
                return False
    return True


def twist_number(D) -> int:
    """Components of the graph joining crossings across bigon faces."""
    G = nx.Graph()
    G.add_nodes_from(range(len(D.crossings)))
    for f in faces(D):
        if len(f) == 2 and f[0][0] != f[1][0]:
            G.add_edge(f[0][0], f[1][0])
    return nx.number_connected_components(G)


def turaev_genus(D) -> int:
    twice = 2 + len(D.crossings) - circle_count(D, "A") - circle_count(D, "B")
    assert twice % 2 == 0
    return twice // 2


def nonprime_arc_candidates(D, choice) -> int:
    """Pairs of boundary arcs in one face of H that would make a non-prime arc.

    Walks each diagram face: an arc of the diagram contributes its state
    circle, a corner the smoothing leaves uncut contributes a segment.  Two
    stretches of one circle form a candidate when segments lie between them
    on both sides.
    """
    circ, _ = state_circles(D.crossings, choice)
    cut = 0 if choice == "A" else 1
    count = 0
    for f in faces(D):
        items = []
        for c, k in f:
            if k % 2 != cut:
                items.append(("seg", c))
            items.append(("circ", circ[D.crossings[c][k]]))
        n = len(items)
        for i, j in combinations(range(n), 2):
            if items[i][0] == items[j][0] == "circ" and items[i][1] == items[j][1]:
                inner = any(items[t][0] == "seg" for t in range(i + 1, j))
                outer = any(items[t % n][0] == "seg" for t in range(j + 1, i + n))
                if inner and outer:
                    count += 1
    return count


def circle_regions_with_segments(D, choice) -> int:
    """Regions of the complement of the state circles that contain a segment.

    Faces of the diagram meeting at a crossing's two uncut corners lie in one
    such region; the segment of that crossing runs between them.
    """
    fs = faces(D)
    face_of = {corner: i for i, f in enumerate(fs) for corner in f}
    G = nx.Graph()
    uncut = (1, 3) if choice == "A" else (0, 2)
    for c in range(len(D.crossings)):
        G.add_edge(face_of[(c, uncut[0])], face_of[(c, uncut[1])])
    return nx.number_connected_components(G)
