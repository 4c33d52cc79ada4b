"""
Exact geometry of the square (D=4) and triangular (D=6) lattices.

Points are stored in axial coordinates ``(a, b)``. On the hex grid the basis
vectors point at 0° and 60°, on the square grid at 0° and 90°. Everything that
decides something works on these integers; ``to_cartesian`` exists for
rendering only.
"""
import math
from typing import NamedTuple, Tuple

from .enums import Grid

SQRT3_2 = math.sqrt(3) / 2


class LatticePoint(NamedTuple):
    a: int
    b: int

    def __add__(self, other):
        return LatticePoint(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return LatticePoint(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return LatticePoint(-self.a, -self.b)

    def scale(self, m):
        return LatticePoint(self.a * m, self.b * m)

    def __str__(self):
        return "%d,%d" % (self.a, self.b)


ORIGIN = LatticePoint(0, 0)

UNIT_VECTORS = {
    Grid.HEX: (
        LatticePoint(1, 0), LatticePoint(0, 1), LatticePoint(-1, 1),
        LatticePoint(-1, 0), LatticePoint(0, -1), LatticePoint(1, -1)
    ),
    Grid.SQUARE: (
        LatticePoint(1, 0), LatticePoint(0, 1), LatticePoint(-1, 0), LatticePoint(0, -1)
    )
}


def unit_vector(direction, grid: Grid) -> LatticePoint:
    return UNIT_VECTORS[grid][direction % grid.direction_count]


def _rotate_once(p, grid):
    if grid is Grid.HEX:
        return LatticePoint(-p.b, p.a + p.b)

    return LatticePoint(-p.b, p.a)


def rotate(p: LatticePoint, steps, grid: Grid) -> LatticePoint:
    """Rotate counterclockwise about the origin by ``steps`` multiples of 2π/D."""
    for _ in range(steps % grid.direction_count):
        p = _rotate_once(p, grid)

    return p


def norm_sq(p: LatticePoint, grid: Grid) -> int:
    if grid is Grid.HEX:
        return p.a * p.a + p.a * p.b + p.b * p.b

    return p.a * p.a + p.b * p.b


def mirror(p: LatticePoint, grid: Grid) -> LatticePoint:
    # Reflection across the axis of direction 0
    if grid is Grid.HEX:
        return LatticePoint(p.a + p.b, -p.b)

    return LatticePoint(p.a, -p.b)


def mirror_direction(direction, grid: Grid):
    return (-direction) % grid.direction_count


def embed(p: LatticePoint, grid: Grid) -> Tuple[int, int]:
    """Integer image ``(X, Y)`` with the same orientation as the Euclidean plane.

    For the hex grid the true point is ``(X/2, Y·√3/2)``: a positive diagonal
    scaling, so sign predicates and horizontal lines carry over unchanged.
    """
    if grid is Grid.HEX:
        return 2 * p.a + p.b, p.b

    return p.a, p.b


def to_cartesian(p: LatticePoint, grid: Grid) -> Tuple[float, float]:
    if grid is Grid.HEX:
        return p.a + p.b / 2, p.b * SQRT3_2

    return float(p.a), float(p.b)
