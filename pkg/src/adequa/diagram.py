"""Planar link diagrams: data model, parsers, constructors and face structure.

A diagram is stored as a PD code.  Crossing ``(a, b, c, d)`` lists the arc
labels at ports 0..3 in counterclockwise order, port 0 being the incoming
end of the understrand (so ports 0 and 2 carry the understrand, 1 and 3 the
overstrand).  Internally a port is addressed by the flat index
``4 * crossing + port``.

Corner ``k`` of a crossing is the region between ports ``k`` and ``k + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import kernels


class DiagramError(ValueError):
    """Raised for malformed or inconsistent diagram input."""


@dataclass(frozen=True)
class Face:
    """A face of the diagram, traversed with the face on the left.

    ``darts`` are the exit ports of the boundary arcs in traversal order and
    ``corners`` the ``(crossing, corner)`` incidences, aligned with ``darts``
    (the corner at the crossing each dart leaves from).
    """

    index: int
    darts: tuple[int, ...]
    arcs: tuple[int, ...]
    corners: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.corners)

    @property
    def crossings(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.corners)


@dataclass(frozen=True)
class PlanarDiagram:
    """A link diagram on the sphere.

    Attributes:
        crossings: PD tuples, one per crossing.
        free_loops: number of crossing-free unknotted components.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        if self.free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")
        if not self.crossings and self.free_loops == 0:
            raise DiagramError("empty diagram")
        for x in self.crossings:
            if len(x) != 4:
                raise DiagramError(f"crossing {x} does not have 4 ports")
            if any(v <= 0 for v in x):
                raise DiagramError(f"arc labels must be positive integers: {x}")
        counts: dict[int, int] = {}
        for x in self.crossings:
            for v in x:
                counts[v] = counts.get(v, 0) + 1
        bad = sorted(v for v, k in counts.items() if k != 2)
        if bad:
            raise DiagramError(f"arc labels {bad} do not occur exactly twice")
        self._check_euler()

    # -- structure ---------------------------------------------------------

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def num_arcs(self) -> int:
        return 2 * len(self.crossings) + self.free_loops

    @cached_property
    def arc_ends(self) -> dict[int, tuple[int, int]]:
        """Map arc label to its two port indices."""
        ends: dict[int, list[int]] = {}
        for c, x in enumerate(self.crossings):
            for p, v in enumerate(x):
                ends.setdefault(v, []).append(4 * c + p)
        return {v: (e[0], e[1]) for v, e in sorted(ends.items())}

    @cached_property
    def other(self) -> list[int]:
        """``other[i]`` is the port at the far end of the arc leaving port ``i``."""
        out = [0] * (4 * len(self.crossings))
        for i, j in self.arc_ends.values():
            out[i] = j
            out[j] = i
        return out

    def label(self, port: int) -> int:
        return self.crossings[port >> 2][port & 3]

    @cached_property
    def _face_data(self) -> tuple[list[int], int]:
        other = self.other
        nxt = [0] * len(other)
        for d in range(len(other)):
            j = other[d]
            nxt[d] = (j & ~3) | ((j + 3) & 3)
        return kernels.perm_cycles(nxt)

    @cached_property
    def face_of_corner(self) -> list[int]:
        """Face index at corner ``k`` of crossing ``c``, indexed ``4 * c + k``."""
        return list(self._face_data[0])

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        labels, count = self._face_data
        other = self.other
        found: list[Face | None] = [None] * count
        for start in range(len(labels)):
            f = labels[start]
            if found[f] is not None:
                continue
            darts = []
            d = start
            while True:
                darts.append(d)
                j = other[d]
                d = (j & ~3) | ((j + 3) & 3)
                if d == start:
                    break
            found[f] = Face(
                index=f,
                darts=tuple(darts),
                arcs=tuple(self.label(d) for d in darts),
                corners=tuple((d >> 2, d & 3) for d in darts),
            )
        return tuple(found)  # type: ignore[arg-type]

    @cached_property
    def _pieces(self) -> tuple[list[int], int]:
        n = 4 * len(self.crossings)
        rot = [(i & ~3) | ((i + 1) & 3) for i in range(n)]
        return kernels.involution_components(self.other, rot)

    @cached_property
    def piece_of_crossing(self) -> list[int]:
        labels = self._pieces[0]
        return [labels[4 * c] for c in range(len(self.crossings))]

    @property
    def num_pieces(self) -> int:
        """Connected pieces of the projection, free loops included."""
        return self._pieces[1] + self.free_loops

    @cached_property
    def component_count(self) -> int:
        """Number of link components."""
        n = 4 * len(self.crossings)
        straight = [i ^ 2 for i in range(n)]
        return kernels.involution_components(self.other, straight)[1] + self.free_loops

    def is_connected(self) -> bool:
        return self.num_pieces == 1

    def _check_euler(self) -> None:
        if not self.crossings:
            return
        labels, count = self._pieces
        verts = [0] * count
        nfaces = [0] * count
        for c in range(len(self.crossings)):
            verts[labels[4 * c]] += 1
        for face in self.faces:
            nfaces[labels[face.darts[0]]] += 1
        for k in range(count):
            if verts[k] - 2 * verts[k] + nfaces[k] != 2:
                raise DiagramError(
                    "inconsistent embedding: Euler characteristic "
                    f"{verts[k] - 2 * verts[k] + nfaces[k]} on a connected piece"
                )

    # -- rendering ---------------------------------------------------------

    def pd_string(self) -> str:
        body = " ".join("X[{},{},{},{}]".format(*x) for x in self.crossings)
        if self.free_loops:
            loops = f"O*{self.free_loops}"
            return f"{body} {loops}".strip()
        return body

    def __str__(self) -> str:
        return self.pd_string()


def faces(D: PlanarDiagram) -> tuple[Face, ...]:
    return D.faces


def is_connected(D: PlanarDiagram) -> bool:
    return D.is_connected()


# ---------------------------------------------------------------------------
# construction


class DiagramBuilder:
    """Assemble a diagram port by port, then orient and label it.

    Crossings are created with :meth:`crossing`; each port is a pair
    ``(crossing, port)`` with ports in counterclockwise order and the
    understrand on ports 0 and 2.  Ports are paired with :meth:`join`.
    """

    def __init__(self):
        self.nbr: dict[tuple[int, int], tuple[int, int]] = {}
        self.ncross = 0
        self.free_loops = 0

    @classmethod
    def from_diagram(cls, D: PlanarDiagram) -> DiagramBuilder:
        b = cls()
        b.ncross = D.num_crossings
        b.free_loops = D.free_loops
        for i, j in enumerate(D.other):
            b.nbr[(i >> 2, i & 3)] = (j >> 2, j & 3)
        return b

    def crossing(self) -> int:
        self.ncross += 1
        return self.ncross - 1

    def join(self, a: tuple[int, int], b: tuple[int, int]) -> None:
        if a in self.nbr or b in self.nbr:
            raise DiagramError(f"port already joined: {a if a in self.nbr else b}")
        self.nbr[a] = b
        self.nbr[b] = a

    def unjoin(self, a: tuple[int, int]) -> tuple[int, int]:
        b = self.nbr.pop(a)
        del self.nbr[b]
        return b

    def remove_bigon(self, x: int, y: int) -> None:
        """Delete two crossings cobounding a bigon, splicing their strands.

        Only valid when the two crossings form a Reidemeister II pair.
        """
        for c in (x, y):
            for p in (0, 1):
                a = (c, p)
                b = (c, p + 2)
                na = self.nbr.pop(a)
                nb = self.nbr.pop(b)
                if na == b:
                    self.free_loops += 1
                    continue
                del self.nbr[na]
                del self.nbr[nb]
                if na == a:
                    raise DiagramError("corrupt port map")
                self.nbr[na] = nb
                self.nbr[nb] = na
        self._drop({x, y})

    def _drop(self, gone: set[int]) -> None:
        keep = [c for c in range(self.ncross) if c not in gone]
        index = {c: i for i, c in enumerate(keep)}
        self.nbr = {(index[a[0]], a[1]): (index[b[0]], b[1]) for a, b in self.nbr.items()}
        self.ncross = len(keep)

    def build(self) -> PlanarDiagram:
        n = self.ncross
        for c in range(n):
            for p in range(4):
                if (c, p) not in self.nbr:
                    raise DiagramError(f"port {(c, p)} left unjoined")
        if n == 0:
            return unknot(self.free_loops) if self.free_loops else _raise_empty()
        labels = [[0] * 4 for _ in range(n)]
        flip = [False] * n
        seen: set[tuple[int, int]] = set()
        label = 0
        for c in range(n):
            for p in range(4):
                if (c, p) in seen:
                    continue
                start = (c, p)
                cur = start
                while True:
                    label += 1
                    far = self.nbr[cur]
                    seen.add(cur)
                    seen.add(far)
                    labels[cur[0]][cur[1]] = label
                    labels[far[0]][far[1]] = label
                    if far[1] == 2:
                        flip[far[0]] = True
                    elif far[1] == 0:
                        flip[far[0]] = False
                    cur = (far[0], far[1] ^ 2)
                    if cur == start:
                        break
        crossings = []
        for c in range(n):
            row = labels[c]
            if flip[c]:
                row = row[2:] + row[:2]
            crossings.append(tuple(row))
        return PlanarDiagram(tuple(crossings), self.free_loops)


def _raise_empty():
    raise DiagramError("empty diagram")


def unknot(components: int = 1) -> PlanarDiagram:
    """The crossing-free diagram of the ``components``-component unlink."""
    return PlanarDiagram((), components)


# ---------------------------------------------------------------------------
# PD text

_PD_TOKEN = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")
_LOOP_TOKEN = re.compile(r"O\*(\d+)")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse whitespace-separated ``X[a,b,c,d]`` tokens.

    An optional ``O*k`` token adds ``k`` crossing-free loops (this is how
    :meth:`PlanarDiagram.pd_string` renders them).
    """
    if text is None or not text.strip():
        raise DiagramError("empty diagram text")
    body = text.strip()
    if body.startswith("PD[") and body.endswith("]"):
        body = body[3:-1]
    crossings = []
    loops = 0
    for tok in re.findall(r"X\[[^\]]*\]|[^\s,]+", body):
        m = _PD_TOKEN.fullmatch(tok)
        if m:
            crossings.append(tuple(int(g) for g in m.groups()))
            continue
        m = _LOOP_TOKEN.fullmatch(tok)
        if m:
            loops += int(m.group(1))
            continue
        raise DiagramError(f"malformed token {tok!r}")
    if not crossings and not loops:
        raise DiagramError("empty diagram text")
    return PlanarDiagram(tuple(crossings), loops)


# ---------------------------------------------------------------------------
# braids


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group; letter ``+i``/``-i`` is sigma_i to the +1/-1."""

    strand_count: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(v) for v in self.letters))
        if self.strand_count < 2:
            raise DiagramError("a braid needs at least 2 strands")
        for v in self.letters:
            if not 1 <= abs(v) <= self.strand_count - 1:
                raise DiagramError(f"letter {v} out of range for {self.strand_count} strands")

    def syllables(self) -> list[tuple[int, int]]:
        """Maximal runs ``(generator, exponent)`` of a single generator and sign."""
        out: list[tuple[int, int]] = []
        for v in self.letters:
            g, s = abs(v), (1 if v > 0 else -1)
            if out and out[-1][0] == g and (out[-1][1] > 0) == (s > 0):
                out[-1] = (g, out[-1][1] + s)
            else:
                out.append((g, s))
        return out

    def __str__(self) -> str:
        return f"{self.strand_count}: " + " ".join(str(v) for v in self.letters)


def parse_braid(text: str) -> BraidWord:
    """Parse ``"n: e1 e2 ..."``."""
    m = re.fullmatch(r"\s*(\d+)\s*:\s*(.*?)\s*", text or "")
    if not m:
        raise DiagramError(f"malformed braid word {text!r}")
    body = m.group(2).replace(",", " ")
    try:
        letters = [int(t) for t in body.split()]
    except ValueError as exc:
        raise DiagramError(f"malformed braid letter in {text!r}") from exc
    if any(v == 0 for v in letters):
        raise DiagramError("braid letters must be nonzero")
    return BraidWord(int(m.group(1)), tuple(letters))


# port layout of a braid crossing: (in_low, in_high, out_low, out_high)
_POS_BRAID = (3, 2, 0, 1)
_NEG_BRAID = (2, 1, 3, 0)


def braid_closure(b: BraidWord) -> PlanarDiagram:
    """The closure diagram of a braid.

    For a positive letter the all-A smoothing joins the two strands entering
    from the left (it cuts the left and right corners), so positive syllables
    resolve long under A.
    """
    bld = DiagramBuilder()
    first: dict[int, tuple[int, int] | None] = {pos: None for pos in range(1, b.strand_count + 1)}
    ends: dict[int, tuple[int, int] | None] = dict(first)

    def attach(pos: int, slot: tuple[int, int]) -> None:
        if ends[pos] is None:
            first[pos] = slot
        else:
            bld.join(ends[pos], slot)

    for v in b.letters:
        i = abs(v)
        layout = _POS_BRAID if v > 0 else _NEG_BRAID
        x = bld.crossing()
        attach(i, (x, layout[0]))
        attach(i + 1, (x, layout[1]))
        ends[i] = (x, layout[2])
        ends[i + 1] = (x, layout[3])
    for pos in range(1, b.strand_count + 1):
        if first[pos] is None:
            bld.free_loops += 1
        else:
            bld.join(ends[pos], first[pos])
    return bld.build()


def torus_2q(q: int) -> PlanarDiagram:
    """The standard diagram of the (2, q) torus link, a closed 2-braid."""
    if q == 0:
        raise DiagramError("q must be nonzero")
    return braid_closure(BraidWord(2, (1 if q > 0 else -1,) * abs(q)))


# ---------------------------------------------------------------------------
# pretzels

# ports (NW, NE, SW, SE) of a band crossing
_POS_BAND = (0, 3, 1, 2)
_NEG_BAND = (1, 0, 2, 3)


def pretzel(params: Sequence[int]) -> PlanarDiagram:
    """Pretzel diagram with one vertical twisted band per parameter.

    A band of ``k > 0`` crossings resolves short under A (its crossings become
    parallel edges between two state circles); ``k < 0`` resolves long.
    """
    params = [int(k) for k in params]
    if not params:
        raise DiagramError("pretzel needs at least one parameter")
    if any(k == 0 for k in params):
        raise DiagramError("pretzel parameters must be nonzero")
    bld = DiagramBuilder()
    tops, bottoms = [], []
    for k in params:
        nw, ne, sw, se = _POS_BAND if k > 0 else _NEG_BAND
        prev = None
        for j in range(abs(k)):
            x = bld.crossing()
            if prev is None:
                tops.append(((x, nw), (x, ne)))
            else:
                bld.join((prev, sw), (x, nw))
                bld.join((prev, se), (x, ne))
            prev = x
        bottoms.append(((prev, sw), (prev, se)))
    r = len(params)
    for i in range(r):
        j = (i + 1) % r
        bld.join(tops[i][1], tops[j][0])
        bld.join(bottoms[i][1], bottoms[j][0])
    return bld.build()


def parse_pretzel(text: str) -> list[int]:
    m = re.fullmatch(r"\s*P\(\s*([-+\d\s,]*)\)\s*", text or "")
    if not m:
        raise DiagramError(f"malformed pretzel {text!r}")
    try:
        params = [int(t) for t in m.group(1).replace(",", " ").split()]
    except ValueError as exc:
        raise DiagramError(f"malformed pretzel {text!r}") from exc
    if not params:
        raise DiagramError("pretzel needs at least one parameter")
    return params


def parse_diagram(text: str) -> PlanarDiagram:
    """Parse any supported input: PD tokens, ``P(...)`` or ``"n: letters"``."""
    if text is None or not text.strip():
        raise DiagramError("empty diagram text")
    s = text.strip()
    if s.startswith("P("):
        return pretzel(parse_pretzel(s))
    if re.match(r"^\d+\s*:", s):
        return braid_closure(parse_braid(s))
    return parse_pd(s)


# ---------------------------------------------------------------------------
# operations


def mirror(D: PlanarDiagram) -> PlanarDiagram:
    """Mirror image: reflect the projection plane.

    Reversing the cyclic port order turns every crossing's A-corners into
    B-corners, so the all-A state of the mirror is the all-B state of ``D``.
    Port 0 stays the incoming understrand.
    """
    return PlanarDiagram(tuple((a, d, c, b) for a, b, c, d in D.crossings), D.free_loops)


def connected_sum(D1: PlanarDiagram, D2: PlanarDiagram, arc1: int | None = None, arc2: int | None = None) -> PlanarDiagram:
    """Band two diagrams together across one arc of each (lowest labels by default)."""
    if not D1.crossings or not D2.crossings:
        raise DiagramError("connected sum needs crossings on both sides")
    bld = DiagramBuilder.from_diagram(D1)
    off = bld.ncross
    bld.ncross += D2.num_crossings
    bld.free_loops += D2.free_loops
    for i, j in enumerate(D2.other):
        bld.nbr[(off + (i >> 2), i & 3)] = (off + (j >> 2), j & 3)
    a1, b1 = D1.arc_ends[arc1 if arc1 is not None else min(D1.arc_ends)]
    a2, b2 = D2.arc_ends[arc2 if arc2 is not None else min(D2.arc_ends)]
    p, q = (a1 >> 2, a1 & 3), (b1 >> 2, b1 & 3)
    r, s = (off + (a2 >> 2), a2 & 3), (off + (b2 >> 2), b2 & 3)
    bld.unjoin(p)
    bld.unjoin(r)
    bld.join(p, r)
    bld.join(q, s)
    return bld.build()


def disjoint_union(D1: PlanarDiagram, D2: PlanarDiagram) -> PlanarDiagram:
    """Place two diagrams side by side, relabelling the second."""
    shift = max((max(x) for x in D1.crossings), default=0)
    crossings = D1.crossings + tuple(tuple(v + shift for v in x) for x in D2.crossings)
    return PlanarDiagram(crossings, D1.free_loops + D2.free_loops)


def _traverse_form(D: PlanarDiagram, start: int, piece: set[int]) -> tuple:
    """Relabel the crossings of one connected piece by strand traversal from ``start``."""
    other = D.other
    order: dict[int, int] = {}
    labels: dict[int, int] = {}
    arrive_under: dict[int, int] = {}
    entered: dict[int, int] = {start >> 2: (start ^ 2) & 3}
    label = 0
    pending = [start]
    visited: set[int] = set()
    while pending:
        s = pending.pop(0)
        if s in visited:
            continue
        cur = s
        while True:
            label += 1
            far = other[cur]
            visited.add(cur)
            visited.add(far)
            labels[cur] = label
            labels[far] = label
            for c in (cur >> 2, far >> 2):
                if c not in order:
                    order[c] = len(order)
            entered.setdefault(far >> 2, far & 3)
            if far & 3 in (0, 2):
                arrive_under[far >> 2] = far & 3
            cur = far ^ 2
            if cur == s:
                break
        if len(visited) < 4 * len(piece):
            # next component: at the earliest crossing it meets, leave
            # counterclockwise of where the traversal first came in
            for c in sorted(order, key=order.get):
                if any(4 * c + p not in visited for p in range(4)):
                    pending.append(4 * c + (entered[c] + 1) % 4)
                    break
    rows = []
    for c in piece:
        row = [labels[4 * c + p] for p in range(4)]
        if arrive_under.get(c, 0) == 2:
            row = row[2:] + row[:2]
        rows.append(tuple(row))
    return tuple(sorted(rows))


def canonical(D: PlanarDiagram) -> PlanarDiagram:
    """Relabel ``D`` so that isomorphic diagrams get identical PD codes.

    Each connected piece is labelled by strand traversal from every possible
    starting port; the lexicographically least result is kept.
    """
    if not D.crossings:
        return D
    pieces: dict[int, set[int]] = {}
    for c, k in enumerate(D.piece_of_crossing):
        pieces.setdefault(k, set()).add(c)
    forms = []
    for piece in pieces.values():
        best = min(_traverse_form(D, 4 * c + p, piece) for c in piece for p in range(4))
        forms.append(best)
    forms.sort()
    crossings: list[tuple[int, ...]] = []
    shift = 0
    for form in forms:
        crossings.extend(tuple(v + shift for v in row) for row in form)
        shift += 2 * len(form)
    return PlanarDiagram(tuple(crossings), D.free_loops)  # type: ignore[arg-type]


def same_diagram(D1: PlanarDiagram, D2: PlanarDiagram) -> bool:
    return canonical(D1) == canonical(D2)


__all__ = [
    "BraidWord",
    "DiagramBuilder",
    "DiagramError",
    "Face",
    "PlanarDiagram",
    "braid_closure",
    "canonical",
    "connected_sum",
    "disjoint_union",
    "faces",
    "is_connected",
    "mirror",
    "parse_braid",
    "parse_diagram",
    "parse_pd",
    "parse_pretzel",
    "pretzel",
    "same_diagram",
    "torus_2q",
    "unknot",
]

