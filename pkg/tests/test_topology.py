import math
import random
from fractions import Fraction
from math import gcd

import pytest

from digitwalk.engine import (
    Grid, LatticePoint, ORIGIN, Path, SectorKind, StepIndexOutOfRange, TurnMap, angular_sector,
    WindingQuery, classify, complement, expand, finite_digits, mirror, to_cartesian, walk_prefix, winding, winding_profile,
    winding_range
)
from digitwalk.engine.topology import crossing, is_left


def _angle_winding(points, center):
    cx, cy = center
    total = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        a0 = math.atan2(y0 - cy, x0 - cx)
        a1 = math.atan2(y1 - cy, x1 - cx)
        delta = a1 - a0
        while delta > math.pi:
            delta -= 2 * math.pi

        while delta < -math.pi:
            delta += 2 * math.pi

        total += delta

    return total / (2 * math.pi)


def test_is_left():
    assert is_left((0, 1), (0, 0), (1, 0)) > 0
    assert is_left((0, -1), (0, 0), (1, 0)) < 0
    assert is_left((2, 0), (0, 0), (1, 0)) == 0


def test_crossing_skips_segments_through_the_center():
    assert crossing((0, 0), (1, 1), (0, 0)) == 0
    assert crossing((1, -1), (1, 1), (0, 0)) == 1
    assert crossing((1, 1), (1, -1), (0, 0)) == -1
    assert crossing((-1, -1), (-1, 1), (0, 0)) == 0


def test_left_hexagon_winds_once(hex2):
    path = walk_prefix(finite_digits("000000"), 6, hex2)
    center = LatticePoint(-1, 1)
    assert winding(WindingQuery(path, center=center)) == 1
    assert winding_profile(path, center) == [0, 0, 1, 1, 1, 1, 1]
    assert winding_range(winding_profile(path, center)) == ((0, 0), (1, 2))


def test_right_hexagon_winds_backwards(hex2):
    path = walk_prefix(finite_digits("111111"), 6, hex2)
    assert winding(WindingQuery(path, center=LatticePoint(0, -1))) == -1
    # The left hexagon's centre lies outside the right one
    assert winding(WindingQuery(path, center=LatticePoint(-1, 1))) == 0


def test_start_point_counts_as_on_the_loop(hex2):
    path = walk_prefix(finite_digits("000000"), 6, hex2)
    assert winding(WindingQuery(path, center=ORIGIN)) == 0


def test_six_sevenths_loop(hex2):
    path = walk_prefix(expand(Fraction(6, 7)), 18, hex2)
    assert winding(WindingQuery(path, center=LatticePoint(-2, -2))) == -1
    assert winding(WindingQuery(path, center=LatticePoint(5, 5))) == 0
    assert winding(WindingQuery(path, upto=0, center=LatticePoint(-2, -2))) == 0


def test_query_index_is_checked(hex2):
    path = walk_prefix(finite_digits("0000"), 4, hex2)
    with pytest.raises(StepIndexOutOfRange):
        WindingQuery(path, upto=5)


def _closed_cycles(tm, max_q):
    for q in range(1, max_q + 1):
        for p in range(q):
            if gcd(p, q) != 1:
                continue

            c = classify(Fraction(p, q), tm)
            if c.closed:
                yield c


@pytest.mark.parametrize("base", [2, 3, 5])
def test_crossings_agree_with_angles(base):
    tm = TurnMap.default(base)
    rnd = random.Random(base * 100)
    cycles = list(_closed_cycles(tm, 100))
    rnd.shuffle(cycles)
    for c in cycles[:200]:
        loop = Path(tm, c.path.states[c.preperiod_length:])
        on_loop = set(loop.positions)
        xs = [p.a for p in on_loop]
        ys = [p.b for p in on_loop]
        points = [to_cartesian(p, tm.grid) for p in loop.positions]
        centers = 0
        while centers < 5:
            center = LatticePoint(
                rnd.randint(min(xs) - 2, max(xs) + 2),
                rnd.randint(min(ys) - 2, max(ys) + 2)
            )
            if center in on_loop:
                continue

            centers += 1
            angle = _angle_winding(points, to_cartesian(center, tm.grid))
            assert abs(angle - round(angle)) < 1e-6
            assert winding(WindingQuery(loop, center=center)) == round(angle)


def _loop(c, digits):
    path = walk_prefix(digits, c.path.last_index, c.turnmap)
    return Path(c.turnmap, path.states[c.preperiod_length:])


def _centers_near(loop, margin=2):
    xs = [p.a for p in loop.positions]
    ys = [p.b for p in loop.positions]
    for a in range(min(xs) - margin, max(xs) + margin + 1):
        for b in range(min(ys) - margin, max(ys) + margin + 1):
            yield LatticePoint(a, b)


@pytest.mark.parametrize("base", [2, 3, 5])
def test_mirrored_loop_winds_the_other_way(base):
    tm = TurnMap.default(base)
    for c in list(_closed_cycles(tm, 30))[:60]:
        loop = _loop(c, c.digits)
        mirrored = _loop(c, complement(c.digits))
        on_loop = set(loop.positions)
        for center in _centers_near(loop):
            if center in on_loop:
                continue

            w = winding(WindingQuery(loop, center=center))
            assert winding(WindingQuery(mirrored, center=mirror(center, tm.grid))) == -w


def test_mirror_is_off_by_one_on_open_prefixes(hex2):
    center = LatticePoint(-4, 0)
    straight = walk_prefix(expand(Fraction(0)), 1, hex2)
    mirrored = walk_prefix(complement(expand(Fraction(0))), 1, hex2)
    assert winding(WindingQuery(straight, center=center)) == 1
    assert winding(WindingQuery(mirrored, center=mirror(center, hex2.grid))) == 0


def test_windings_add_over_concatenated_loops(hex2):
    hexagon = walk_prefix(finite_digits("000000"), 6, hex2)
    sevenths = walk_prefix(expand(Fraction(6, 7)), 18, hex2)
    both = walk_prefix(finite_digits("000000" + "110" * 6), 24, hex2)
    assert both.final.pose == hexagon.final.pose == sevenths.final.pose

    on_loops = set(hexagon.positions) | set(sevenths.positions)
    nonzero = 0
    for center in _centers_near(both):
        if center in on_loops:
            continue

        w = winding(WindingQuery(both, center=center))
        assert w == winding(WindingQuery(hexagon, center=center)) + winding(WindingQuery(sevenths, center=center))
        nonzero += w != 0

    assert nonzero > 0


def _square(*points):
    return [LatticePoint(a, b) for a, b in points]


def test_sector_of_points():
    sector = angular_sector(_square((2, 1), (1, 3), (4, 2), (0, 0)), Grid.SQUARE)
    assert sector.kind is SectorKind.SECTOR
    assert (sector.right, sector.left) == (LatticePoint(2, 1), LatticePoint(1, 3))
    assert sector.aperture == pytest.approx(math.degrees(math.atan2(3, 1) - math.atan2(1, 2)))


def test_sector_across_the_positive_axis():
    sector = angular_sector(_square((1, -1), (1, 1)), Grid.SQUARE)
    assert (sector.right, sector.left) == (LatticePoint(1, -1), LatticePoint(1, 1))
    assert sector.aperture == pytest.approx(90)


def test_half_plane_and_full_turn():
    sector = angular_sector(_square((1, 0), (0, 1), (-3, 0)), Grid.SQUARE)
    assert sector.kind is SectorKind.HALF_PLANE
    assert (sector.right, sector.left) == (LatticePoint(1, 0), LatticePoint(-1, 0))

    sector = angular_sector(_square((1, 0), (0, 1), (-1, -1)), Grid.SQUARE)
    assert sector.kind is SectorKind.FULL
    assert sector.right is None and sector.aperture is None


def test_sector_needs_a_point_besides_the_start():
    with pytest.raises(ValueError):
        angular_sector([ORIGIN], Grid.SQUARE)
