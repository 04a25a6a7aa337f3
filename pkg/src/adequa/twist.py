"""Twist regions, the 2-edge loop condition, primality and twist reduction."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .diagram import DiagramBuilder, DiagramError, PlanarDiagram
from .kauffman import InadequateError, Resolution, _choice, graph_of


class ResolutionKind(str, enum.Enum):
    SHORT = "Short"
    LONG = "Long"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class TwistRegion:
    """A maximal chain of crossings joined end to end by bigons.

    ``crossings`` are in chain order and ``bigons`` holds the face indices of
    the bigons between consecutive crossings, in the same order.  When the
    chain closes up (the standard (2, q) diagram) ``cyclic`` is set and the
    closing bigons come last.
    """

    crossings: tuple[int, ...]
    bigons: tuple[int, ...]
    alternating: bool
    cyclic: bool = False

    def __len__(self) -> int:
        return len(self.crossings)


def bigon_faces(D: PlanarDiagram):
    """Faces with two corners at two distinct crossings."""
    return [f for f in D.faces if f.size == 2 and f.corners[0][0] != f.corners[1][0]]


def _bigon_alternating(face) -> bool:
    (_, i), (_, j) = face.corners
    return i % 2 == j % 2


@lru_cache(maxsize=512)
def twist_regions(D: PlanarDiagram) -> tuple[TwistRegion, ...]:
    n = D.num_crossings
    adj: dict[int, list[tuple[int, int]]] = {x: [] for x in range(n)}
    for f in bigon_faces(D):
        (x, _), (y, _) = f.corners
        adj[x].append((y, f.index))
        adj[y].append((x, f.index))
    seen = [False] * n
    regions = []
    for root in range(n):
        if seen[root]:
            continue
        comp = []
        stack = [root]
        seen[root] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y, _ in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        ends = [x for x in comp if len({y for y, _ in adj[x]}) == 1]
        order = [min(ends) if ends else min(comp)]
        placed = set(order)
        while True:
            nxt = sorted(y for y, _ in adj[order[-1]] if y not in placed)
            if not nxt:
                break
            order.append(nxt[0])
            placed.add(nxt[0])
        between = {}
        for x in comp:
            for y, f in adj[x]:
                between.setdefault(frozenset((x, y)), set()).add(f)
        faces = [min(between[frozenset(p)]) for p in zip(order, order[1:])]
        faces += sorted({f for fs in between.values() for f in fs} - set(faces))
        alternating = all(_bigon_alternating(D.faces[f]) for f in faces)
        cyclic = len(comp) > 1 and len(faces) >= len(comp)
        regions.append(TwistRegion(tuple(order), tuple(faces), alternating, cyclic))
    return tuple(regions)


def twist_number(D: PlanarDiagram) -> int:
    return len(twist_regions(D))


def region_of_crossing(D: PlanarDiagram) -> list[int]:
    out = [0] * D.num_crossings
    for r, R in enumerate(twist_regions(D)):
        for x in R.crossings:
            out[x] = r
    return out


def resolution_kind(D: PlanarDiagram, R: TwistRegion, c: Resolution | str) -> ResolutionKind:
    """Whether resolving ``R`` by ``c`` is the short or the long resolution.

    Long means every bigon of ``R`` becomes a state circle, i.e. the bigon
    corners are the ones the smoothing cuts off.

    Raises:
        DiagramError: if ``R`` has a non-alternating bigon.
    """
    c = _choice(c)
    if len(R.crossings) == 1:
        return ResolutionKind.NOT_APPLICABLE
    if not R.alternating:
        raise DiagramError("twist region has a non-alternating bigon")
    _, k = D.faces[R.bigons[0]].corners[0]
    return ResolutionKind.LONG if k % 2 == c.offset else ResolutionKind.SHORT


def two_edge_loop_witness(D: PlanarDiagram, c: Resolution | str) -> tuple[int, int] | None:
    """A pair of parallel edges of G violating the 2-edge loop condition, or None.

    Pairs from different twist regions are reported before pairs from a
    single region resolved long.

    Raises:
        InadequateError: if G has a loop edge.
    """
    c = _choice(c)
    G = graph_of(D, c)
    loops = G.loops()
    if loops:
        raise InadequateError(f"diagram is not {c.value}-adequate", loops[0])
    regions = twist_regions(D)
    where = region_of_crossing(D)
    long_pair = None
    for xs in G.parallel_classes().values():
        first = where[xs[0]]
        for y in xs[1:]:
            if where[y] != first:
                return (xs[0], y)
        if long_pair is None:
            R = regions[first]
            if not R.alternating or resolution_kind(D, R, c) is not ResolutionKind.SHORT:
                long_pair = (xs[0], xs[1])
    return long_pair


def two_edge_loop_condition(D: PlanarDiagram, c: Resolution | str) -> bool:
    return two_edge_loop_witness(D, c) is None


def _arc_faces(D: PlanarDiagram) -> dict[int, tuple[int, int]]:
    fc = D.face_of_corner
    return {v: (fc[i], fc[j]) for v, (i, j) in D.arc_ends.items()}


def prime_cut_witness(D: PlanarDiagram) -> tuple[int, int] | None:
    """Two arcs forming a closed curve with crossings on both sides, or None.

    Raises:
        DiagramError: if ``D`` is not connected.
    """
    if not D.is_connected():
        raise DiagramError("primality is defined for connected diagrams")
    if D.num_crossings < 2:
        return None
    groups: dict[tuple[int, int], list[int]] = {}
    for v, (f, g) in _arc_faces(D).items():
        if f != g:
            groups.setdefault((min(f, g), max(f, g)), []).append(v)
    n = D.num_crossings
    no_cross = bytes(n)
    for arcs in groups.values():
        for a in range(len(arcs)):
            for b in range(a + 1, len(arcs)):
                blocked = bytearray(4 * n)
                for v in (arcs[a], arcs[b]):
                    i, j = D.arc_ends[v]
                    blocked[i] = blocked[j] = 1
                seed = D.arc_ends[arcs[a]][0] >> 2
                reach = kernels.flood(D.other, [seed], no_cross, blocked)
                inside = sum(reach)
                if 0 < inside < n:
                    return (arcs[a], arcs[b])
    return None


def is_prime_diagram(D: PlanarDiagram) -> bool:
    return prime_cut_witness(D) is None


def nugatory_crossings(D: PlanarDiagram) -> list[int]:
    """Crossings with the same face at two opposite corners."""
    fc = D.face_of_corner
    return [x for x in range(D.num_crossings) if fc[4 * x] == fc[4 * x + 2] or fc[4 * x + 1] == fc[4 * x + 3]]


def _curve_side(D, x1, x2, ports, corners):
    """Crossings strictly on one side of the curve, and the faces at its corners."""
    n = D.num_crossings
    fc = D.face_of_corner
    blocked = bytearray(n)
    blocked[x1] = blocked[x2] = 1
    seeds = []
    for p in ports:
        d = D.other[p] >> 2
        if d != x1 and d != x2:
            seeds.append(d)
    reach = kernels.flood(D.other, seeds, blocked, bytes(4 * n)) if seeds else bytearray(n)
    side = [d for d in range(n) if reach[d]]
    return side, {fc[k] for k in corners}


def twist_reduction_witness(D: PlanarDiagram, c: Resolution | str):
    """A curve ``(x1, x2, F, F')`` contradicting c-twist reducedness, or None.

    The curve runs through face ``F`` from ``x1`` to ``x2`` and back through
    ``F'``, entering each crossing at the two corners the c-smoothing cuts off,
    so the segments at both crossings are parallel to it.  It is harmless when
    one of its sides holds nothing but a row of bigons from ``x1`` to ``x2``.
    """
    c = _choice(c)
    s = c.offset
    fc = D.face_of_corner
    sizes = [f.size for f in D.faces]
    n = D.num_crossings
    for x1 in range(n):
        F, Fp = fc[4 * x1 + s], fc[4 * x1 + s + 2]
        if F == Fp:
            continue
        for x2 in range(x1 + 1, n):
            j = None
            for k in (s, s + 2):
                if fc[4 * x2 + k] == F and fc[4 * x2 + (k + 2) % 4] == Fp:
                    j = k
            if j is None:
                continue
            sides = (
                ([4 * x1 + (s + 1) % 4, 4 * x1 + (s + 2) % 4, 4 * x2 + (j + 3) % 4, 4 * x2 + j],
                 [4 * x1 + (s + 1) % 4, 4 * x2 + (j + 3) % 4]),
                ([4 * x1 + (s + 3) % 4, 4 * x1 + s, 4 * x2 + (j + 1) % 4, 4 * x2 + (j + 2) % 4],
                 [4 * x1 + (s + 3) % 4, 4 * x2 + (j + 1) % 4]),
            )
            ok = False
            for ports, corners in sides:
                side, side_faces = _curve_side(D, x1, x2, ports, corners)
                for d in side:
                    side_faces.update(fc[4 * d + k] for k in range(4))
                side_faces -= {F, Fp}
                if len(side_faces) == len(side) + 1 and all(sizes[f] == 2 for f in side_faces):
                    ok = True
                    break
            if not ok:
                return (x1, x2, F, Fp)
    return None


def is_twist_reduced(D: PlanarDiagram, c: Resolution | str) -> bool:
    return twist_reduction_witness(D, c) is None


def normalize_bigons(D: PlanarDiagram) -> PlanarDiagram:
    """Remove non-alternating bigons by Reidemeister II moves until none remain."""
    while D.crossings:
        bad = nonalternating_bigons(D)
        if not bad:
            break
        (x, _), (y, _) = bad[0].corners
        bld = DiagramBuilder.from_diagram(D)
        bld.remove_bigon(x, y)
        D = bld.build()
    return D


def nonalternating_bigons(D: PlanarDiagram):
    """Bigons whose two crossings do not alternate; a Reidemeister II move removes them."""
    return [f for f in bigon_faces(D) if not _bigon_alternating(f)]


def has_nonalternating_bigon(D: PlanarDiagram) -> bool:
    return bool(nonalternating_bigons(D))
