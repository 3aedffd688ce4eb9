"""Incidence computations in the projective plane PG(2, q).

Points are homogeneous coordinate triples normalized so the first
nonzero coordinate is 1, making equality a plain tuple comparison.
Lines are normalized dual triples; incidence is a dot product vanishing.

The arcs of interest trace the parity-check columns of the distance-4
codes: the conic {(1, t, t^2)} u {(0,0,1)}, for even q the regular
hyperoval (conic plus nucleus (0,1,0)), and the conic with its last one
or two points removed.  A bisecant census sorts the points off an arc
by how many of the arc's bisecants pass through them; the census on the
code side must match it coset class by coset class, which
`geometry_code_bridge` verifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .codes import LinearCode, Matrix, low_weight_census, syndrome_index, DEFAULT_BUDGET
from .gf import GF

Point = tuple[int, int, int]


def normalize_point(field: GF, coords) -> Point:
    coords = tuple(field.check(c) for c in coords)
    if len(coords) != 3 or not any(coords):
        raise ValueError(f"not a projective point: {coords}")
    lead = next(c for c in coords if c)
    scale = field.inv(lead)
    return tuple(field.mul(scale, c) for c in coords)  # type: ignore[return-value]


def det3(field: GF, a: Point, b: Point, c: Point) -> int:
    f = field
    pos = f.add(f.add(f.mul(a[0], f.mul(b[1], c[2])),
                      f.mul(a[1], f.mul(b[2], c[0]))),
                f.mul(a[2], f.mul(b[0], c[1])))
    neg = f.add(f.add(f.mul(a[2], f.mul(b[1], c[0])),
                      f.mul(a[0], f.mul(b[2], c[1]))),
                f.mul(a[1], f.mul(b[0], c[2])))
    return f.sub(pos, neg)


def line_through(field: GF, a: Point, b: Point) -> Point:
    """Normalized dual coordinates of the line joining two distinct points."""
    f = field
    cross = (f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
             f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
             f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])))
    return normalize_point(f, cross)


def incident(field: GF, line: Point, point: Point) -> bool:
    f = field
    dot = reduce(f.add, (f.mul(u, v) for u, v in zip(line, point)), 0)
    return dot == 0


def plane_points(field: GF) -> list[Point]:
    """All q^2 + q + 1 points of PG(2, q), canonically normalized."""
    q = field.q
    pts: list[Point] = [(1, y, z) for y in range(q) for z in range(q)]
    pts += [(0, 1, z) for z in range(q)]
    pts.append((0, 0, 1))
    return pts


class Arc:
    """An ordered n-arc in PG(2, q): no three points collinear."""

    def __init__(self, field: GF, points):
        self.field = field
        self.points = [normalize_point(field, p) for p in points]
        if len(set(self.points)) != len(self.points):
            raise ValueError("repeated arc point")
        n = len(self.points)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if det3(field, self.points[i], self.points[j], self.points[k]) == 0:
                        raise ValueError(
                            f"points {i},{j},{k} are collinear; not an arc")

    @property
    def n(self) -> int:
        return len(self.points)

    def bisecants(self) -> list[Point]:
        """The C(n,2) lines through two arc points (pairwise distinct on an arc)."""
        f = self.field
        lines = [line_through(f, a, b)
                 for i, a in enumerate(self.points)
                 for b in self.points[i + 1:]]
        assert len(set(lines)) == len(lines)
        return lines

    def unisecants_through(self, point: Point) -> int:
        """Number of lines meeting the arc exactly at the given arc point."""
        if point not in self.points:
            raise ValueError("not an arc point")
        f = self.field
        q = f.q
        others = [p for p in self.points if p != point]
        secants = {line_through(f, point, p) for p in others}
        return (q + 1) - len(secants)


def conic_points(field: GF) -> Arc:
    """The (q+1)-point conic traced by the distance-4 parity-check columns:
    (1, a, a^2) for a = 0 and each nonzero a ascending, then (0, 0, 1)."""
    q = field.q
    pts = [(1, a, field.mul(a, a)) for a in range(1, q)]
    pts.append((1, 0, 0))
    pts.append((0, 0, 1))
    return Arc(field, pts)


def hyperoval_points(field: GF) -> Arc:
    """For even q, the regular hyperoval: the conic plus its nucleus (0,1,0)."""
    if field.p != 2:
        raise ValueError(f"hyperoval requires even q, got q={field.q}")
    base = conic_points(field)
    return Arc(field, base.points + [(0, 1, 0)])


def shortened_conic(field: GF, remove: int = 1) -> Arc:
    """The conic with its last `remove` points dropped (the default column
    choice; the censuses below do not depend on which points go)."""
    if remove not in (1, 2):
        raise ValueError("remove one or two conic points")
    base = conic_points(field)
    return Arc(field, base.points[:-remove])


@dataclass(frozen=True)
class PointCensus:
    """Off-arc points of PG(2, q) grouped by bisecant count, largest first."""

    classes: tuple[tuple[int, int], ...]  # (bisecant count, number of points)
    covered: int

    def as_dict(self) -> dict[int, int]:
        return dict(self.classes)


def bisecant_census(arc: Arc) -> PointCensus:
    f = arc.field
    q = f.q
    lines = arc.bisecants()
    on_arc = set(arc.points)
    tally: dict[int, int] = {}
    covered = 0
    for pt in plane_points(f):
        if pt in on_arc:
            continue
        covered += 1
        b = sum(1 for ln in lines if incident(f, ln, pt))
        tally[b] = tally.get(b, 0) + 1
    assert covered == q * q + q + 1 - arc.n
    classes = tuple(sorted(tally.items(), reverse=True))
    return PointCensus(classes, covered)


# Predicted censuses for the conic family, per parity of q.

def conic_census_formulas(q: int) -> tuple[tuple[int, int], ...]:
    if q % 2:
        return (((q + 1) // 2, (q * q - q) // 2),
                ((q - 1) // 2, (q * q + q) // 2))
    return ((q // 2, q * q - 1), (0, 1))


def shortened_conic_census_formulas(q: int) -> tuple[tuple[int, int], ...]:
    if q < 5:
        raise ValueError("shortened-conic census formulas need q >= 5")
    if q % 2:
        return (((q - 1) // 2, (q * q + q) // 2),
                ((q - 3) // 2, (q * q - q) // 2),
                (0, 1))
    return ((q // 2, q - 1),
            ((q - 2) // 2, q * q - q),
            (0, 2))


def double_shortened_conic_census_formulas(q: int) -> tuple[tuple[int, int], ...]:
    if q < 7:
        raise ValueError("double-shortened-conic census formulas need q >= 7")
    if q % 2:
        return (((q - 1) // 2, (q + 1) // 2),
                ((q - 3) // 2, (q - 1) * (q + 4) // 2),
                ((q - 5) // 2, (q - 1) * (q - 3) // 2),
                (0, 2))
    return (((q - 2) // 2, 3 * (q - 1)),
            ((q - 4) // 2, (q - 1) * (q - 2)),
            (0, 3))


def hyperoval_census_formulas(q: int) -> tuple[tuple[int, int], ...]:
    if q % 2:
        raise ValueError("hyperovals need even q")
    return (((q + 2) // 2, q * q - 1),)


@dataclass(frozen=True)
class BridgeEntry:
    bisecants: int
    points: int
    coset_weight: int
    cosets: int


@dataclass
class BridgeReport:
    """Point classes of an arc matched against the coset classes of its code."""

    code: LinearCode
    census: PointCensus
    entries: tuple[BridgeEntry, ...]


def geometry_code_bridge(arc: Arc, budget: int = DEFAULT_BUDGET) -> BridgeReport:
    """Treat the arc points as parity-check columns and verify, class by
    class, that an off-arc point on b >= 1 bisecants yields q-1 cosets of
    weight 2 with B_2 = b, and a point on none yields q-1 weight-3 cosets.
    Arc points themselves must yield the weight-1 cosets."""
    f = arc.field
    q = f.q
    H = Matrix(f, [[p[t] for p in arc.points] for t in range(3)])
    code = LinearCode(H)
    lw = low_weight_census(code, 3, budget)
    lines = arc.bisecants()
    on_arc = set(arc.points)
    tally: dict[int, int] = {}
    for pt in plane_points(f):
        row_checks = []
        for lam in range(1, q):
            svec = tuple(f.mul(lam, c) for c in pt)
            row = lw.table[syndrome_index(q, svec)]
            row_checks.append(tuple(int(x) for x in row))
        if pt in on_arc:
            for row in row_checks:
                if row[1] != 1:
                    raise ValueError(f"arc point {pt}: expected a weight-1 coset, got {row}")
            continue
        b = sum(1 for ln in lines if incident(f, ln, pt))
        tally[b] = tally.get(b, 0) + 1
        for row in row_checks:
            if b >= 1:
                if row[1] != 0 or row[2] != b:
                    raise ValueError(
                        f"class with {b} bisecants: point {pt} gives coset counts {row}")
            else:
                if row[1] != 0 or row[2] != 0 or row[3] == 0:
                    raise ValueError(
                        f"bisecant-free class: point {pt} gives coset counts {row}")
    census = PointCensus(tuple(sorted(tally.items(), reverse=True)),
                         q * q + q + 1 - arc.n)
    entries = tuple(BridgeEntry(b, npts, 2 if b else 3, (q - 1) * npts)
                    for b, npts in census.classes)
    return BridgeReport(code, census, entries)
