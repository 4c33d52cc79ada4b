"""
Decide the fate of the infinite walk of an eventually periodic expansion.

One period of digits acts on the walk as a rigid motion: a rotation by ``tau``
units of 2π/D and a translation ``v``. If the rotation is trivial the walk
drifts by a constant vector every period (or stands still when ``v`` is zero);
otherwise ``k = D / gcd(tau mod D, D)`` periods close the walk.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from math import ceil, gcd, isqrt
from typing import Dict, Iterator, List, Optional, Tuple
import logging

from .digits import EventuallyPeriodicDigits, expand, value_of
from .enums import Kind
from .errors import ClosureMismatch, InvalidDigits, NonPositiveRadius
from .lattice import LatticePoint, ORIGIN, norm_sq, rotate
from .topology import Sector, angular_sector
from .walk import Path, START, TurnMap, WalkState, step, walk_from

log = logging.getLogger(__name__)

RECORD_FIELDS = (
    "r", "base", "digits", "kind", "tau", "v", "v_global", "k",
    "cycle_length", "distinct_points", "max_norm_sq", "torsion_rate"
)


@dataclass(frozen=True)
class PeriodIsometry:
    tau: int
    tau_mod: int
    v: LatticePoint


@dataclass(frozen=True)
class Classification:
    digits: EventuallyPeriodicDigits
    turnmap: TurnMap
    kind: Kind
    isometry: PeriodIsometry
    cycle_start: WalkState
    torsion_rate: Fraction
    # Closed: preperiod + one full cycle. Drift: preperiod + one period.
    path: Path = field(compare=False, repr=False)
    v_global: Optional[LatticePoint] = None
    multiplier: Optional[int] = None
    cycle_length: Optional[int] = None
    distinct_points: Optional[int] = None
    max_norm_sq: Optional[int] = None

    @property
    def closed(self):
        return self.kind is Kind.CLOSED

    @property
    def preperiod_length(self):
        return len(self.digits.preperiod)

    @property
    def period_length(self):
        return len(self.digits.period)

    @property
    def grid(self):
        return self.turnmap.grid

    @property
    def value(self):
        return value_of(self.digits)

    def record(self):
        def _point(p):
            return None if p is None else str(p)

        r = self.value
        return {
            "r": "%d/%d" % (r.numerator, r.denominator),
            "base": self.turnmap.base,
            "digits": str(self.digits),
            "kind": self.kind.value,
            "tau": self.isometry.tau,
            "v": _point(self.isometry.v),
            "v_global": _point(self.v_global),
            "k": self.multiplier,
            "cycle_length": self.cycle_length,
            "distinct_points": self.distinct_points,
            "max_norm_sq": self.max_norm_sq,
            "torsion_rate": str(self.torsion_rate)
        }


def iter_states(d, tm: TurnMap) -> Iterator[WalkState]:
    """States of the walk of ``d``, starting with the step 0 state."""
    state = START
    yield state
    for z in d:
        state = step(state, z, tm)
        yield state


def _as_digits(r, tm):
    if isinstance(r, EventuallyPeriodicDigits):
        if r.base != tm.base:
            raise InvalidDigits("digits are in base %d, the turn map in base %d" % (r.base, tm.base))

        return r

    return expand(Fraction(r), tm.base)


def period_isometry(d, tm: TurnMap) -> PeriodIsometry:
    period = d.period if isinstance(d, EventuallyPeriodicDigits) else tuple(d)
    end = walk_from(START, period, tm)[-1]
    return PeriodIsometry(end.turn_sum, end.turn_sum % tm.direction_count, end.position)


def classify(r, tm: TurnMap) -> Classification:
    d = _as_digits(r, tm)
    iso = period_isometry(d, tm)
    count = tm.direction_count
    pre = len(d.preperiod)

    states = walk_from(START, d.preperiod, tm)
    cycle_start = states[-1]
    rate = Fraction(iso.tau, count * len(d.period))

    if iso.tau_mod == 0 and iso.v != ORIGIN:
        states += walk_from(cycle_start, d.period, tm)[1:]
        v_global = rotate(iso.v, cycle_start.direction, tm.grid)
        log.debug("%s drifts by %s per period", d, v_global)
        return Classification(
            d, tm, Kind.DRIFT, iso, cycle_start, rate, Path(tm, states),
            v_global=v_global
        )

    k = 1 if iso.tau_mod == 0 else count // gcd(iso.tau_mod, count)
    states += walk_from(cycle_start, d.period * k, tm)[1:]
    if states[-1].pose != cycle_start.pose:
        raise ClosureMismatch("%s did not close after %d periods" % (d, k))

    cycle_points = {s.position for s in states[pre + 1:]}
    max_norm = max(norm_sq(s.position, tm.grid) for s in states)
    log.debug("%s closes after %d periods through %d points", d, k, len(cycle_points))
    return Classification(
        d, tm, Kind.CLOSED, iso, cycle_start, rate, Path(tm, states),
        multiplier=k,
        cycle_length=k * len(d.period),
        distinct_points=len(cycle_points),
        max_norm_sq=max_norm
    )


def compare_bases(r, bases=(2, 3, 5), sign=1) -> Dict[int, Classification]:
    """Classify ``r`` in several bases, each on its default grid."""
    return {base: classify(r, TurnMap.default(base, sign=sign)) for base in bases}


@dataclass(frozen=True)
class KMembership:
    radius: Fraction
    member: bool
    # First step whose distance from S is at least the radius
    witness_step: Optional[int] = None


def _drift_horizon(c, radius):
    tm = c.turnmap
    local = walk_from(START, c.digits.period, tm)
    reach = isqrt(max(norm_sq(s.position, tm.grid) for s in local)) + 1
    v_len = isqrt(norm_sq(c.v_global, tm.grid))
    periods = ceil(Fraction(ceil(radius) + c.preperiod_length + reach, v_len)) + 1
    return c.preperiod_length + c.period_length * periods


def in_class_K(c: Classification, M) -> KMembership:
    M = Fraction(M)
    if M <= 0:
        raise NonPositiveRadius(M)

    bound = M * M
    if c.closed:
        states = c.path.states
        horizon = len(states) - 1

    else:
        horizon = _drift_horizon(c, M)
        states = islice(iter_states(c.digits, c.turnmap), horizon + 1)

    for s in states:
        if norm_sq(s.position, c.grid) >= bound:
            return KMembership(M, False, s.step_index)

    if not c.closed:
        raise ClosureMismatch("drifting walk of %s stayed within %s for %d steps" % (c.digits, M, horizon))

    return KMembership(M, True)


@dataclass(frozen=True)
class Simplicity:
    simple: bool
    # Two step indices that reach the same lattice point
    repeat: Optional[Tuple[int, int]] = None
    # Closed walks run through their cycle points infinitely often
    recurrent: bool = False


def _multiple_of(diff, v):
    """The integer ``m`` with ``diff == m * v``, or None."""
    if diff.a * v.b != diff.b * v.a:
        return None

    if v.a != 0:
        m, rest = divmod(diff.a, v.a)
    else:
        m, rest = divmod(diff.b, v.b)

    return m if rest == 0 else None


def _first_repeat(positions):
    seen = {}
    for i, p in enumerate(positions):
        if p in seen:
            return seen[p], i

        seen[p] = i

    return None


def _drift_repeats(c) -> List[Tuple[int, int]]:
    pre, period = c.preperiod_length, c.period_length
    positions = c.path.positions
    head = positions[:pre]
    tail = positions[pre:pre + period]
    v = c.v_global

    pairs = []
    repeat = _first_repeat(head)
    if repeat is not None:
        pairs.append(repeat)

    for i, q in enumerate(head):
        for j, t in enumerate(tail):
            m = _multiple_of(q - t, v)
            if m is not None and m >= 0:
                pairs.append((i, pre + m * period + j))

    for j, t in enumerate(tail):
        for j2, t2 in enumerate(tail):
            if j == j2:
                continue

            m = _multiple_of(t - t2, v)
            if m is None or m < 0:
                continue

            if m == 0:
                pairs.append((pre + min(j, j2), pre + max(j, j2)))
            else:
                pairs.append((pre + j, pre + m * period + j2))

    return pairs


def is_simple(c: Classification) -> Simplicity:
    if c.closed:
        # One traversal: the final state revisits the cycle start by construction
        repeat = _first_repeat(c.path.positions[:-1])
        return Simplicity(repeat is None, repeat, recurrent=True)

    pairs = _drift_repeats(c)
    if not pairs:
        return Simplicity(True)

    first = min(pairs, key=lambda ij: (ij[1], ij[0]))
    return Simplicity(False, first)


@dataclass(frozen=True)
class Census:
    window: int
    counts: Dict[LatticePoint, int]
    # None stands for infinitely many visits
    multiplicity: Dict[LatticePoint, Optional[int]]
    start_occupied: bool = True


def _eventual_visits(c, point):
    pre, period = c.preperiod_length, c.period_length
    positions = c.path.positions
    if c.closed:
        if point in set(positions[pre:]):
            return None

        return sum(1 for p in positions[1:pre + 1] if p == point)

    visits = sum(1 for p in positions[1:pre] if p == point)
    for j, t in enumerate(positions[pre:pre + period]):
        m = _multiple_of(point - t, c.v_global)
        if m is not None and m >= 0 and pre + m * period + j >= 1:
            visits += 1

    return visits


def visit_census(c: Classification, window) -> Census:
    if window < 0:
        raise ValueError("window must not be negative")

    counts = {}
    for s in islice(iter_states(c.digits, c.turnmap), 1, window + 1):
        counts[s.position] = counts.get(s.position, 0) + 1

    multiplicity = {p: _eventual_visits(c, p) for p in set(counts) | {ORIGIN}}
    return Census(window, counts, multiplicity)


@dataclass(frozen=True)
class RecurrenceReport:
    far: Fraction
    near: Fraction
    horizon: int
    # (i, j): step i is farther than ``far``, the later step j nearer than ``near``
    witness: Optional[Tuple[int, int]] = None
    excursions: int = 0


def scan_recurrence(states, grid, N, K, horizon) -> RecurrenceReport:
    N, K = Fraction(N), Fraction(K)
    far_sq, near_sq = N * N, K * K
    first_far = None
    witness = None
    outside = False
    excursions = 0
    for s in islice(states, horizon + 1):
        d = norm_sq(s.position, grid)
        # With far < near a step can both end one excursion and start the next
        if d < near_sq:
            if witness is None and first_far is not None:
                witness = (first_far, s.step_index)

            if outside:
                outside = False
                excursions += 1

        if d > far_sq:
            outside = True
            if first_far is None:
                first_far = s.step_index

    return RecurrenceReport(N, K, horizon, witness, excursions)


def recurrence_stats(c: Classification, N, K, horizon) -> RecurrenceReport:
    return scan_recurrence(iter_states(c.digits, c.turnmap), c.grid, N, K, horizon)


def walk_sector(c: Classification) -> Sector:
    """Smallest cone from S holding the whole infinite walk.

    A drifting walk visits t + m * v_global for every tail point t and m >= 0;
    seen from S those points sweep monotonically from t towards v_global, so
    the recorded points plus the drift direction bound the cone exactly.
    """
    points = c.path.positions[1:]
    if not c.closed:
        points.append(c.v_global)

    return angular_sector(points, c.grid)
