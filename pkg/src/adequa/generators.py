"""Diagram families for corpora: random diagrams, pretzels, braids and satellites."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .diagram import BraidWord, DiagramBuilder, DiagramError, PlanarDiagram, unknot
from .kauffman import Resolution, partner

Port = tuple[int, int]


# ---------------------------------------------------------------------------
# random 4-valent plane graphs


def _map_faces(nbr: dict[Port, Port]) -> list[list[Port]]:
    """Faces of a port map, each as its list of exit ports, face on the left."""
    seen: set[Port] = set()
    out = []
    for start in sorted(nbr):
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            c, p = nbr[d]
            d = (c, (p + 3) % 4)
        out.append(face)
    return out


def _pinch(nbr: dict[Port, Port], x: int, rng: random.Random) -> None:
    """Touch two boundary arcs of a random face together at a new vertex ``x``."""
    faces = [f for f in _map_faces(nbr) if len({frozenset((d, nbr[d])) for d in f}) > 1]
    face = rng.choice(faces)
    while True:
        a, c = rng.sample(face, 2)
        if nbr[a] != c:
            break
    b, d = nbr.pop(a), nbr.pop(c)
    del nbr[b], nbr[d]
    # Around x counterclockwise the four ends come in the order b, c, d, a.
    for port, end in enumerate((b, c, d, a)):
        nbr[(x, port)] = end
        nbr[end] = (x, port)


def _random_map(crossings: int, rng: random.Random) -> dict[Port, Port]:
    if crossings < 1:
        raise DiagramError("need at least one crossing")
    nbr = {(0, 0): (0, 1), (0, 1): (0, 0), (0, 2): (0, 3), (0, 3): (0, 2)}
    for x in range(1, crossings):
        _pinch(nbr, x, rng)
    return nbr


def _checkerboard(nbr: dict[Port, Port]) -> dict[Port, int]:
    """Colour of the face at each corner, keyed by the corner's first port."""
    faces = _map_faces(nbr)
    face_of = {d: i for i, f in enumerate(faces) for d in f}
    colour = [-1] * len(faces)
    colour[0] = 0
    stack = [0]
    while stack:
        i = stack.pop()
        for d in faces[i]:
            # across the arc leaving through d lies the face of the far end's corner
            j = face_of[nbr[d]]
            if colour[j] < 0:
                colour[j] = 1 - colour[i]
                stack.append(j)
    return {d: colour[face_of[d]] for d in nbr}


def _assemble(nbr: dict[Port, Port], crossings: int, turn: list[int]) -> PlanarDiagram:
    """Build a diagram, rotating crossing ``x``'s ports by ``turn[x]``."""
    bld = DiagramBuilder()
    for _ in range(crossings):
        bld.crossing()
    for (c, p), (e, q) in nbr.items():
        bld.nbr[(c, (p + turn[c]) % 4)] = (e, (q + turn[e]) % 4)
    return bld.build()


def random_alternating(crossings: int, seed: int) -> PlanarDiagram:
    """A random alternating diagram.

    The projection grows one vertex at a time by pinching two arcs of a
    random face together; crossings are then chosen so that each smoothing
    with the A-convention cuts off the shaded corners of a checkerboard
    colouring, which makes the strands alternate.
    """
    rng = random.Random(seed)
    nbr = _random_map(crossings, rng)
    colour = _checkerboard(nbr)
    turn = [0 if colour[(x, 0)] == 0 else 1 for x in range(crossings)]
    return _assemble(nbr, crossings, turn)


def random_diagram(crossings: int, seed: int) -> PlanarDiagram:
    """A random diagram on the same kind of projection, crossings chosen by coin flip."""
    rng = random.Random(seed)
    nbr = _random_map(crossings, rng)
    turn = [rng.randrange(2) for _ in range(crossings)]
    return _assemble(nbr, crossings, turn)


# ---------------------------------------------------------------------------
# pretzels and braids


def random_pretzel(seed: int, bands: tuple[int, int] = (3, 4), twists: tuple[int, int] = (3, 6)) -> list[int]:
    """Pretzel parameters: some positive bands followed by some negative ones.

    Args:
        seed: RNG seed.
        bands: inclusive range for the number of positive and of negative bands.
        twists: inclusive range for the crossings in each band.
    """
    rng = random.Random(seed)
    r = rng.randint(*bands)
    s = rng.randint(*bands)
    return [rng.randint(*twists) for _ in range(r)] + [-rng.randint(*twists) for _ in range(s)]


def random_braid(strands: int, seed: int, syllables: int | None = None, exponents: tuple[int, int] = (3, 5), sign: int = 1) -> BraidWord:
    """A braid whose syllables all have exponents of one sign within ``exponents``.

    Every generator occurs, so the closure is connected, and neighbouring
    syllables use different generators.
    """
    if strands < 2:
        raise DiagramError("a braid needs at least 2 strands")
    rng = random.Random(seed)
    gens = list(range(1, strands))
    rng.shuffle(gens)
    # with a single generator neighbouring syllables would merge
    count = max(syllables or 0, len(gens)) if strands > 2 else 1
    while len(gens) < count:
        gens.append(rng.choice([g for g in range(1, strands) if g != gens[-1]]))
    letters = []
    for g in gens:
        letters += [sign * g] * rng.randint(*exponents)
    return BraidWord(strands, tuple(letters))


# ---------------------------------------------------------------------------
# satellites


@dataclass(frozen=True)
class AnnularPattern:
    """A tangle in a rectangle whose two sides are glued to form an annulus.

    ``crossings`` are PD tuples.  ``meridian`` lists, bottom to top, the pairs
    ``(left, right)`` of arc labels meeting the left and right sides; each
    such label occurs once among the crossings, or not at all when
    ``left == right`` names a strand running straight across.  ``rect`` holds
    the (0-based) crossings inside the marked rectangle.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    meridian: tuple[tuple[int, int], ...]
    rect: tuple[int, ...]

    @property
    def winding(self) -> int:
        """Number of strands crossing the meridian (geometric, not algebraic)."""
        return len(self.meridian)

    def _ports(self) -> dict[int, list[Port]]:
        where: dict[int, list[Port]] = {}
        for t, x in enumerate(self.crossings):
            for q, v in enumerate(x):
                where.setdefault(v, []).append((t, q))
        return where

    def validate(self) -> None:
        if not self.meridian:
            raise DiagramError("pattern needs at least one meridian strand")
        where = self._ports()
        ends = set()
        for left, right in self.meridian:
            for v in {left, right}:
                if v in ends:
                    raise DiagramError(f"label {v} used twice on the meridian")
                ends.add(v)
            if left == right:
                if left in where:
                    raise DiagramError(f"straight strand {left} must not meet a crossing")
            elif len(where.get(left, ())) != 1 or len(where.get(right, ())) != 1:
                raise DiagramError(f"meridian labels {left}, {right} must each occur once")
        for v, ports in where.items():
            if v not in ends and len(ports) != 2:
                raise DiagramError(f"interior label {v} must occur twice")
        if any(not 0 <= t < len(self.crossings) for t in self.rect):
            raise DiagramError("rectangle names a crossing outside the pattern")

    def state_ends(self) -> list[tuple[str, int]]:
        """For each left end (bottom to top), where its A-state arc comes out.

        Returns ``("L", k)`` or ``("R", k)`` with ``k`` 0-based.
        """
        where = self._ports()
        end_of = {}
        for k, (left, right) in enumerate(self.meridian):
            end_of[left] = end_of.get(left, []) + [("L", k)]
            end_of[right] = end_of.get(right, []) + [("R", k)]
        out = []
        for k, (left, right) in enumerate(self.meridian):
            if left == right:
                out.append(("R", k))
                continue
            t, q = where[left][0]
            while True:
                q = partner(q, Resolution.A)
                v = self.crossings[t][q]
                nxt = [pq for pq in where[v] if pq != (t, q)]
                if not nxt:
                    tags = [e for e in end_of[v] if e != ("L", k)]
                    out.append(tags[0])
                    break
                t, q = nxt[0]
        return out

    def check_rectangle(self) -> None:
        """Raise unless clearing the rectangle leaves exactly the core copies.

        Everything of H inside the rectangle goes away, so every crossing has
        to lie in it, and the A-state arc entering on the left at height k
        must leave on the right at height k.

        Raises:
            DiagramError: if the rectangle condition fails.
        """
        self.validate()
        outside = set(range(len(self.crossings))) - set(self.rect)
        if outside:
            raise DiagramError(f"crossings {sorted(t + 1 for t in outside)} lie outside the rectangle")
        for k, end in enumerate(self.state_ends()):
            if end != ("R", k):
                raise DiagramError(f"state arc from left end {k + 1} leaves at {end[0]}{end[1] + 1}")

    def closure(self) -> PlanarDiagram:
        """The pattern closed up inside a plane annulus."""
        self.validate()
        bld = DiagramBuilder()
        ports = self._add_tangle(bld)
        n = self.winding
        for k in range(n):
            left, right = self.meridian[k]
            if left == right:
                bld.free_loops += 1
                continue
            bld.join(ports[left], ports[right])
        if not bld.ncross:
            return unknot(n)
        return bld.build()

    def _add_tangle(self, bld: DiagramBuilder) -> dict[int, Port]:
        """Add the crossings, join interior arcs, and return each boundary label's port."""
        base = bld.ncross
        for _ in self.crossings:
            bld.crossing()
        first: dict[int, Port] = {}
        ends = {v for pair in self.meridian for v in pair}
        for t, x in enumerate(self.crossings):
            for q, v in enumerate(x):
                port = (base + t, q)
                if v in ends:
                    first[v] = port
                elif v in first:
                    bld.join(first.pop(v), port)
                else:
                    first[v] = port
        return first


_SECTION = re.compile(r"(meridian|rect)\s*:", re.IGNORECASE)


def parse_pattern(text: str) -> AnnularPattern:
    """Parse ``"X[..] X[..]; meridian: l1:r1, l2:r2; rect: 1, 2"``.

    ``rect`` lists 1-based crossing positions and defaults to all crossings.
    """
    parts = _SECTION.split(text)
    pd = parts[0].strip().strip(";").strip()
    fields = {}
    for key, body in zip(parts[1::2], parts[2::2]):
        fields[key.lower()] = body.strip().strip(";").strip()
    crossings = []
    for tok in re.findall(r"X\[([^\]]*)\]", pd):
        vals = [int(v) for v in tok.split(",")]
        if len(vals) != 4:
            raise DiagramError(f"crossing X[{tok}] needs four labels")
        crossings.append(tuple(vals))
    if "meridian" not in fields:
        raise DiagramError("pattern needs a meridian: section")
    meridian = []
    for item in re.split(r"[,\s]+", fields["meridian"]):
        if not item:
            continue
        m = re.fullmatch(r"(\d+):(\d+)", item)
        if not m:
            raise DiagramError(f"malformed meridian pair {item!r}")
        meridian.append((int(m.group(1)), int(m.group(2))))
    if "rect" in fields:
        rect = tuple(int(v) - 1 for v in re.split(r"[,\s]+", fields["rect"]) if v)
    else:
        rect = tuple(range(len(crossings)))
    pattern = AnnularPattern(tuple(crossings), tuple(meridian), rect)
    pattern.validate()
    return pattern


WHITEHEAD_PATTERN = "X[1,4,2,5] X[6,3,5,2]; meridian: 1:4, 3:6; rect: 1, 2"


def whitehead_pattern() -> AnnularPattern:
    """Two strands around the annulus, hooked back on each other in a clasp."""
    return parse_pattern(WHITEHEAD_PATTERN)


def core_pattern() -> AnnularPattern:
    return AnnularPattern((), ((1, 1),), ())


def cable_pattern(n: int) -> AnnularPattern:
    """``n`` parallel strands and no crossings."""
    return AnnularPattern((), tuple((k, k) for k in range(1, n + 1)), ())


def _grid_end(grid: list[list[int]], n: int, p: int, i: int) -> Port:
    """Port of the grid for strand ``i`` (1-based, counterclockwise) at side ``p``.

    Grid crossings are indexed ``grid[x][y]`` from the west and south, and
    ports 0, 1, 2, 3 face east, north, west and south.
    """
    if p == 0:
        return grid[n - 1][i - 1], 0
    if p == 1:
        return grid[n - i][n - 1], 1
    if p == 2:
        return grid[0][n - i], 2
    return grid[i - 1][0], 3


def satellite(companion: PlanarDiagram, pattern: AnnularPattern, arc: int | None = None) -> PlanarDiagram:
    """Lay ``pattern`` along the blackboard-framed annulus of ``companion``.

    Each companion crossing becomes an n-by-n grid of crossings and each
    companion arc a band of n parallel strands; the pattern's rectangle is
    spliced into the band of ``arc`` (the lowest label by default).

    Raises:
        DiagramError: if the companion is not a knot diagram with crossings,
            or the pattern fails its rectangle condition.
    """
    pattern.check_rectangle()
    if not companion.crossings or companion.free_loops or companion.component_count != 1:
        raise DiagramError("companion must be a knot diagram with at least one crossing")
    n = pattern.winding
    arc = min(companion.arc_ends) if arc is None else arc
    if arc not in companion.arc_ends:
        raise DiagramError(f"companion has no arc {arc}")
    bld = DiagramBuilder()
    grids = []
    for _ in range(companion.num_crossings):
        g = [[bld.crossing() for _ in range(n)] for _ in range(n)]
        for x in range(n):
            for y in range(n):
                if x + 1 < n:
                    bld.join((g[x][y], 0), (g[x + 1][y], 2))
                if y + 1 < n:
                    bld.join((g[x][y], 1), (g[x][y + 1], 3))
        grids.append(g)

    def end(port: int, i: int) -> Port:
        return _grid_end(grids[port >> 2], n, port & 3, i)

    for v, (i, j) in sorted(companion.arc_ends.items()):
        if v != arc:
            for k in range(1, n + 1):
                bld.join(end(i, k), end(j, n + 1 - k))
            continue
        ports = pattern._add_tangle(bld)
        for k, (left, right) in enumerate(pattern.meridian, start=1):
            if left == right:
                bld.join(end(i, k), end(j, n + 1 - k))
            else:
                bld.join(end(i, k), ports[left])
                bld.join(ports[right], end(j, n + 1 - k))
    return bld.build()
