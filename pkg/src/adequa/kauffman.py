"""All-A / all-B states: state circles, the graphs H, G and G'.

With the PD convention of :mod:`adequa.diagram` the A-smoothing of a crossing
joins ports 0-1 and 2-3, and the B-smoothing joins 1-2 and 3-0.  Equivalently
the A-smoothing cuts off corners 0 and 2.  The segment of a crossing joins
the state arc hugging its first cut corner to the one hugging the second.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import kernels
from .diagram import PlanarDiagram


class Resolution(str, enum.Enum):
    A = "A"
    B = "B"

    @property
    def offset(self) -> int:
        """First port of the first smoothing pair: pairs are (s, s+1), (s+2, s+3)."""
        return 0 if self is Resolution.A else 1

    @property
    def other(self) -> Resolution:
        return Resolution.B if self is Resolution.A else Resolution.A


class InadequateError(ValueError):
    """A state graph has a loop edge, so the requested construction is undefined."""

    def __init__(self, message: str, crossing: int | None = None):
        super().__init__(message)
        self.crossing = crossing


def _choice(c) -> Resolution:
    return c if isinstance(c, Resolution) else Resolution(str(c).upper())


def pair_start(port: int, c: Resolution) -> int:
    """First port of the smoothing pair that contains ``port``."""
    s = c.offset
    return port if (port - s) % 2 == 0 else (port - 1) % 4


def partner(port: int, c: Resolution) -> int:
    s = c.offset
    return (port + 1) % 4 if (port - s) % 2 == 0 else (port - 1) % 4


@dataclass(frozen=True)
class StateCircle:
    """One state circle.

    ``attachments`` lists the smoothing points ``(crossing, pair_start)`` met
    along the circle, ``arcs`` the diagram arc leaving each one and ``ports``
    the flat port it leaves through, all in the same traversal order.
    """

    index: int
    arcs: tuple[int, ...]
    attachments: tuple[tuple[int, int], ...]
    ports: tuple[int, ...] = ()


@dataclass(frozen=True)
class StateCircleSet:
    diagram: PlanarDiagram
    choice: Resolution
    circles: tuple[StateCircle, ...]
    circle_of_port: tuple[int, ...]

    @property
    def circle_count(self) -> int:
        return len(self.circles)

    def circle_at(self, crossing: int, port: int) -> int:
        return self.circle_of_port[4 * crossing + port]


def _port_partners(D: PlanarDiagram, choices: Sequence[Resolution]) -> list[int]:
    out = [0] * (4 * D.num_crossings)
    for x, c in enumerate(choices):
        for p in range(4):
            out[4 * x + p] = 4 * x + partner(p, c)
    return out


def state_circle_count(D: PlanarDiagram, choices: Sequence[Resolution | str]) -> int:
    """Number of circles of an arbitrary state, one choice per crossing."""
    choices = [_choice(c) for c in choices]
    if len(choices) != D.num_crossings:
        raise ValueError("need one resolution per crossing")
    if not D.crossings:
        return D.free_loops
    _, count = kernels.involution_components(D.other, _port_partners(D, choices))
    return count + D.free_loops


@lru_cache(maxsize=512)
def _resolve(D: PlanarDiagram, c: Resolution) -> StateCircleSet:
    n = 4 * D.num_crossings
    other = D.other
    part = _port_partners(D, [c] * D.num_crossings)
    labels, count = kernels.involution_components(other, part) if n else ([], 0)
    circles = []
    done = [False] * count
    for start in range(n):
        k = labels[start]
        if done[k]:
            continue
        done[k] = True
        arcs, atts, ports = [], [], []
        i = start
        while True:
            j = part[i]
            atts.append((j >> 2, pair_start(j & 3, c)))
            arcs.append(D.label(j))
            ports.append(j)
            i = other[j]
            if i == start:
                break
        circles.append((k, tuple(arcs), tuple(atts), tuple(ports)))
    circles.sort()
    out = [StateCircle(k, a, t, p) for k, a, t, p in circles]
    for extra in range(D.free_loops):
        out.append(StateCircle(count + extra, (), ()))
    return StateCircleSet(D, c, tuple(out), tuple(labels))


def resolve_all(D: PlanarDiagram, c: Resolution | str) -> StateCircleSet:
    """The state circles of the all-A or all-B state."""
    return _resolve(D, _choice(c))


@dataclass(frozen=True)
class Segment:
    """The segment of H at one crossing.

    ``circles`` are the circles hugging the two cut corners and ``positions``
    the index of this crossing's attachment in each circle's traversal.
    """

    crossing: int
    circles: tuple[int, int]
    positions: tuple[int, int]


@dataclass(frozen=True)
class StateGraphH:
    diagram: PlanarDiagram
    choice: Resolution
    state: StateCircleSet
    segments: tuple[Segment, ...]

    @property
    def circles(self) -> tuple[StateCircle, ...]:
        return self.state.circles


@lru_cache(maxsize=512)
def _build_H(D: PlanarDiagram, c: Resolution) -> StateGraphH:
    state = _resolve(D, c)
    where: dict[tuple[int, int], tuple[int, int]] = {}
    for circ in state.circles:
        for pos, att in enumerate(circ.attachments):
            where[att] = (circ.index, pos)
    s = c.offset
    segments = []
    for x in range(D.num_crossings):
        a = where[(x, s)]
        b = where[(x, s + 2)]
        segments.append(Segment(x, (a[0], b[0]), (a[1], b[1])))
    return StateGraphH(D, c, state, tuple(segments))


def build_H(D: PlanarDiagram, c: Resolution | str) -> StateGraphH:
    return _build_H(D, _choice(c))


@dataclass(frozen=True)
class StateGraph:
    """The multigraph G: one vertex per circle, one edge per crossing.

    ``edges[x]`` is the (sorted) endpoint pair of the edge of crossing ``x``.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def loops(self) -> list[int]:
        return [x for x, (u, v) in enumerate(self.edges) if u == v]

    def parallel_classes(self) -> dict[tuple[int, int], list[int]]:
        """Edge classes with at least two members, keyed by endpoint pair."""
        classes: dict[tuple[int, int], list[int]] = {}
        for x, e in enumerate(self.edges):
            if e[0] != e[1]:
                classes.setdefault(e, []).append(x)
        return {e: xs for e, xs in sorted(classes.items()) if len(xs) > 1}

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return {v: sorted(ns) for v, ns in adj.items()}

    @property
    def euler_char(self) -> int:
        return len(self.vertices) - len(self.edges)


def state_graph(H: StateGraphH) -> StateGraph:
    edges = tuple(tuple(sorted(seg.circles)) for seg in H.segments)
    return StateGraph(tuple(c.index for c in H.circles), edges)  # type: ignore[arg-type]


@dataclass(frozen=True)
class ReducedStateGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: sorted(ns) for v, ns in adj.items()}


def reduce(G: StateGraph) -> ReducedStateGraph:
    """Collapse each class of parallel edges to one edge.

    Raises:
        InadequateError: if ``G`` has a loop edge.
    """
    loops = G.loops()
    if loops:
        raise InadequateError("state graph has a loop edge; the diagram is inadequate", loops[0])
    return ReducedStateGraph(G.vertices, tuple(sorted(set(G.edges))))


def euler_char(Gp: ReducedStateGraph) -> int:
    return len(Gp.vertices) - len(Gp.edges)


def graph_of(D: PlanarDiagram, c: Resolution | str) -> StateGraph:
    return state_graph(build_H(D, c))


def reduced_graph(D: PlanarDiagram, c: Resolution | str) -> ReducedStateGraph:
    return reduce(graph_of(D, c))


def loop_edges(D: PlanarDiagram, c: Resolution | str) -> list[int]:
    """Crossings whose edge in G is a loop (empty iff adequate)."""
    return graph_of(D, c).loops()


def is_adequate(D: PlanarDiagram, c: Resolution | str) -> bool:
    return not loop_edges(D, c)


def circle_counts(D: PlanarDiagram) -> tuple[int, int]:
    """``(s_A, s_B)``."""
    return resolve_all(D, Resolution.A).circle_count, resolve_all(D, Resolution.B).circle_count
