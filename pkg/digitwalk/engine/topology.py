"""
Winding numbers of walks around lattice points.

The winding of the walk from S up to step ``upto`` around ``B`` is the signed
number of crossings of the horizontal ray from B towards +x. Upward crossings
strictly right of B count +1, downward crossings -1; a segment with an
endpoint on B is skipped. On closed loops that avoid B this is the usual
winding number and does not depend on the ray. Open paths are not reflection
symmetric: a vertex on B's horizontal line counts on one side of the ray only,
so the mirrored prefix around the mirrored centre can be off by one.

``angular_sector`` reports the smallest cone from S that holds a set of points.
"""
from dataclasses import dataclass
from functools import cmp_to_key
from math import atan2, degrees, gcd
from typing import Iterable, List, Optional, Tuple

from .enums import Grid, SectorKind
from .lattice import LatticePoint, ORIGIN, embed, to_cartesian
from .walk import Path


@dataclass(frozen=True)
class WindingQuery:
    path: Path
    upto: Optional[int] = None
    center: LatticePoint = ORIGIN

    def __post_init__(self):
        if self.upto is None:
            object.__setattr__(self, "upto", self.path.last_index)

        # Validates the index
        self.path.state(self.upto)


def is_left(point, l0, l1):
    """Positive if ``point`` lies left of the line from ``l0`` to ``l1``, negative if right, 0 on it."""
    return (l1[0] - l0[0]) * (point[1] - l0[1]) - (point[0] - l0[0]) * (l1[1] - l0[1])


def crossing(source, target, center) -> int:
    """Contribution of one embedded segment to the winding around ``center``."""
    if source == center or target == center:
        return 0

    if source[1] <= center[1] < target[1]:
        if is_left(center, source, target) > 0:
            return 1

    elif target[1] <= center[1] < source[1]:
        if is_left(center, source, target) < 0:
            return -1

    return 0


def _embedded(path):
    return [embed(p, path.grid) for p in path.positions]


def winding(q: WindingQuery) -> int:
    points = _embedded(q.path)
    center = embed(q.center, q.path.grid)
    return sum(crossing(points[i - 1], points[i], center) for i in range(1, q.upto + 1))


def winding_profile(path: Path, center: LatticePoint = ORIGIN) -> List[int]:
    points = _embedded(path)
    c = embed(center, path.grid)
    profile = [0]
    for i in range(1, len(points)):
        profile.append(profile[-1] + crossing(points[i - 1], points[i], c))

    return profile


def winding_range(profile: List[int]) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Smallest and largest winding of a profile, each with the first step that attains it."""
    low = min(range(len(profile)), key=lambda i: (profile[i], i))
    high = min(range(len(profile)), key=lambda i: (-profile[i], i))
    return (profile[low], low), (profile[high], high)


@dataclass(frozen=True)
class Sector:
    """Smallest closed cone with apex S holding a set of points.

    ``right`` and ``left`` are the primitive lattice directions of the
    clockwise and counterclockwise boundary rays; ``aperture`` is in degrees.
    """
    kind: SectorKind
    right: Optional[LatticePoint] = None
    left: Optional[LatticePoint] = None
    aperture: Optional[float] = None


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _half(v):
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _compare_angles(u, v):
    if _half(u) != _half(v):
        return _half(u) - _half(v)

    c = _cross(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _primitive(p: LatticePoint) -> LatticePoint:
    g = gcd(p.a, p.b)
    return LatticePoint(p.a // g, p.b // g)


def _aperture(right, left, grid):
    x0, y0 = to_cartesian(right, grid)
    x1, y1 = to_cartesian(left, grid)
    return degrees(atan2(y1, x1) - atan2(y0, x0)) % 360


def angular_sector(points: Iterable[LatticePoint], grid: Grid) -> Sector:
    rays = {}
    for p in points:
        if p != ORIGIN:
            ray = _primitive(p)
            rays[ray] = embed(ray, grid)

    if not rays:
        raise ValueError("no point apart from S")

    order = sorted(rays, key=cmp_to_key(lambda p, q: _compare_angles(rays[p], rays[q])))
    if len(order) == 1:
        return Sector(SectorKind.SECTOR, order[0], order[0], 0.0)

    half_plane = None
    # The counterclockwise gap from a to b exceeds half a turn at most once
    for a, b in zip(order, order[1:] + order[:1]):
        u, v = rays[a], rays[b]
        c = _cross(u, v)
        if c < 0:
            return Sector(SectorKind.SECTOR, b, a, _aperture(b, a, grid))

        if c == 0 and u[0] * v[0] + u[1] * v[1] < 0:
            half_plane = (b, a)

    if half_plane is not None:
        return Sector(SectorKind.HALF_PLANE, half_plane[0], half_plane[1], 180.0)

    return Sector(SectorKind.FULL)
