"""Non-prime arcs, polyhedral regions of H and the guts Euler characteristic.

The faces of H are read off the diagram faces: walking a diagram face, each
boundary arc contributes a stretch of the state circle through it and each
corner the smoothing does not cut contributes the segment of that crossing.
Consecutive stretches of one circle merge into a single boundary piece.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import DiagramError, PlanarDiagram
from .kauffman import InadequateError, Resolution, StateGraphH, build_H, reduced_graph, euler_char
from .twist import two_edge_loop_witness

# A side names where the A-state is taken: on the diagram itself, or on its
# mirror image, whose all-A state is the all-B state of the diagram.
SIDES = {"A": Resolution.A, "mirror": Resolution.B}


@dataclass(frozen=True)
class NonPrimeArc:
    """An arc in a face of H joining two points of one state circle.

    ``positions`` index into the circle's traversal (the arc of the circle the
    endpoint sits on) and ``side`` says whether the arc lies to the left or the
    right of the circle's traversal direction.
    """

    circle: int
    positions: tuple[int, int]
    side: str


@dataclass(frozen=True)
class PolyhedralRegion:
    """Segments, circles and arcs meeting one segment-bearing region."""

    segments: tuple[int, ...]
    circles: tuple[int, ...]
    arcs: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.segments)


def _h_faces(H: StateGraphH) -> list[list[tuple]]:
    """Boundary item lists of the faces of H.

    Items are ``("piece", circle, position, side)``, ``("seg", crossing)`` and,
    once cutting starts, ``("alpha", arc_index)``.
    """
    D = H.diagram
    if not D.is_connected():
        raise DiagramError("polyhedral regions need a connected diagram")
    s = H.choice.offset
    where: dict[int, tuple[int, int]] = {}
    for circ in H.circles:
        for pos, p in enumerate(circ.ports):
            where[p] = (circ.index, pos)
    out = []
    for face in D.faces:
        raw: list[tuple] = []
        for d, (x, k) in zip(face.darts, face.corners):
            if k % 2 != s:
                raw.append(("seg", x))
            if d in where:
                circle, pos = where[d]
                raw.append(("piece", circle, pos, "left"))
            else:
                circle, pos = where[D.other[d]]
                raw.append(("piece", circle, pos, "right"))
        segs = [t for t, item in enumerate(raw) if item[0] == "seg"]
        if segs:
            raw = raw[segs[0]:] + raw[:segs[0]]
        items: list[tuple] = []
        for item in raw:
            if item[0] == "piece" and items and items[-1][0] == "piece":
                continue
            items.append(item)
        if len(items) > 1 and items[0][0] == "piece" and items[-1][0] == "piece":
            items.pop()
        out.append(items)
    return out


def _candidates(items: list[tuple], circle: int | None = None):
    """Piece pairs of one circle whose two boundary chains both hold a segment."""
    n = len(items)
    before = [0] * (n + 1)
    for t, item in enumerate(items):
        before[t + 1] = before[t] + (item[0] == "seg")
    total = before[n]
    for i in range(n):
        a = items[i]
        if a[0] != "piece" or (circle is not None and a[1] != circle):
            continue
        for j in range(i + 1, n):
            b = items[j]
            if b[0] != "piece" or b[1] != a[1]:
                continue
            inner = before[j] - before[i + 1]
            if inner and total - inner:
                yield i, j


def _cut(faces: list[list[tuple]], fi: int, i: int, j: int, label: int) -> None:
    items = faces[fi]
    alpha = ("alpha", label)
    faces[fi] = items[i:j + 1] + [alpha]
    faces.append(items[j:] + items[:i + 1] + [alpha])


def _arc_of(items: list[tuple], i: int, j: int) -> NonPrimeArc:
    return NonPrimeArc(items[i][1], (items[i][2], items[j][2]), items[i][3])


def _cut_all(H: StateGraphH) -> tuple[list[NonPrimeArc], list[list[tuple]]]:
    faces = _h_faces(H)
    arcs: list[NonPrimeArc] = []
    while True:
        best = None
        for fi, items in enumerate(faces):
            for i, j in _candidates(items):
                key = (items[i][1], items[i][2], items[j][2], fi, i, j)
                if best is None or key < best:
                    best = key
        if best is None:
            return arcs, faces
        fi, i, j = best[3:]
        arcs.append(_arc_of(faces[fi], i, j))
        _cut(faces, fi, i, j, len(arcs) - 1)


def maximal_nonprime_arcs(H: StateGraphH) -> list[NonPrimeArc]:
    """A maximal collection of non-prime arcs, chosen greedily.

    Arcs are taken one at a time, smallest circle first and then by the
    traversal positions of the endpoints, until no face of the cut graph
    admits another arc with segments on both sides.
    """
    return _cut_all(H)[0]


def _replay(H: StateGraphH, arcs) -> list[list[tuple]]:
    faces = _h_faces(H)
    for label, arc in enumerate(arcs):
        hit = None
        for fi, items in enumerate(faces):
            for i, j in _candidates(items, arc.circle):
                if _arc_of(items, i, j) == arc:
                    hit = (fi, i, j)
                    break
            if hit:
                break
        if hit is None:
            raise DiagramError(f"arc {label} is not a non-prime arc of the cut graph")
        _cut(faces, *hit, label)
    return faces


def _regions(faces: list[list[tuple]]) -> list[PolyhedralRegion]:
    parent = list(range(len(faces)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    seen: dict[int, int] = {}
    for fi, items in enumerate(faces):
        for item in items:
            if item[0] == "seg":
                if item[1] in seen:
                    parent[find(fi)] = find(seen[item[1]])
                else:
                    seen[item[1]] = fi
    groups: dict[int, list[int]] = {}
    for fi in range(len(faces)):
        groups.setdefault(find(fi), []).append(fi)
    out = []
    for members in groups.values():
        segs, circles, alphas = set(), set(), set()
        for fi in members:
            for item in faces[fi]:
                if item[0] == "seg":
                    segs.add(item[1])
                elif item[0] == "piece":
                    circles.add(item[1])
                else:
                    alphas.add(item[1])
        if segs:
            out.append(PolyhedralRegion(tuple(sorted(segs)), tuple(sorted(circles)), tuple(sorted(alphas))))
    out.sort(key=lambda r: r.segments)
    return out


def polyhedral_regions(H: StateGraphH, arcs=None) -> list[PolyhedralRegion]:
    """Segment-bearing regions of the complement of the circles and ``arcs``.

    With ``arcs`` omitted the greedy maximal collection is used.

    Raises:
        DiagramError: if an arc is not a non-prime arc once the earlier arcs
            have been cut.
    """
    if arcs is None:
        return _regions(_cut_all(H)[1])
    return _regions(_replay(H, list(arcs)))


def side_status(D: PlanarDiagram, side: str) -> tuple[bool, bool, int | None]:
    """``(adequate, two_edge_loops_ok, chi)`` for one side; chi is None if inadequate."""
    c = SIDES[side]
    try:
        ok = two_edge_loop_witness(D, c) is None
    except InadequateError:
        return False, False, None
    return True, ok, euler_char(reduced_graph(D, c))


def choose_side(D: PlanarDiagram) -> str | None:
    """The qualifying side with the smallest chi of G', preferring A on ties.

    A side qualifies when its state graph has no loops and satisfies the
    2-edge loop condition.  Returns None when neither side qualifies.
    """
    best = None
    for side in SIDES:
        adequate, ok, chi = side_status(D, side)
        if adequate and ok and (best is None or chi < best[1]):
            best = (side, chi)
    return best[0] if best else None


def guts_euler(D: PlanarDiagram, side: str = "auto") -> int:
    """``max(-chi(G'), 0)`` for the chosen side.

    Args:
        D: the diagram.
        side: ``"A"``, ``"mirror"`` or ``"auto"`` (see :func:`choose_side`).

    Raises:
        DiagramError: if the side is not adequate or fails the 2-edge loop
            condition, where the formula is not available.
    """
    if side == "auto":
        chosen = choose_side(D)
        if chosen is None:
            raise DiagramError("no side is adequate with the 2-edge loop condition")
        side = chosen
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    adequate, ok, chi = side_status(D, side)
    if not (adequate and ok):
        raise DiagramError(f"side {side} is not adequate with the 2-edge loop condition")
    return max(-chi, 0)


def regions_of(D: PlanarDiagram, side: str = "A") -> list[PolyhedralRegion]:
    return polyhedral_regions(build_H(D, SIDES[side]))
