from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, NamedTuple, Optional, Tuple

from .enums import Grid
from .errors import DigitOutOfRange, DigitSourceExhausted, InvalidTurnMap, StepIndexOutOfRange
from .lattice import LatticePoint, ORIGIN, unit_vector

DEFAULT_TURNS = {
    (2, Grid.HEX): (1, -1),
    (3, Grid.SQUARE): (1, 0, -1),
    (5, Grid.HEX): (2, 1, 0, -1, -2)
}


def normalize_turn(turn, count):
    """Map a turn into the half-open range (-D/2, D/2]."""
    turn %= count
    if turn > count // 2:
        turn -= count

    return turn


@dataclass(frozen=True)
class TurnMap:
    base: int
    grid: Grid
    turns: Tuple[int, ...]

    def __post_init__(self):
        turns = tuple(self.turns)
        if len(turns) != self.base:
            raise InvalidTurnMap("base %d needs %d turns, got %d" % (self.base, self.base, len(turns)))

        count = self.grid.direction_count
        for turn in turns:
            if not -count / 2 < turn <= count / 2:
                raise InvalidTurnMap("turn %d is outside (-%d/2, %d/2]" % (turn, count, count))

        object.__setattr__(self, "turns", turns)

    @classmethod
    def default(cls, base=2, grid=None, sign=1):
        grid = grid or Grid.for_base(base)
        try:
            turns = DEFAULT_TURNS[(base, grid)]
        except KeyError:
            raise InvalidTurnMap("no default turn map for base %d on the %s grid" % (base, grid.name.lower()))

        return cls.custom(base, grid, turns, sign)

    @classmethod
    def custom(cls, base, grid, turns, sign=1):
        count = grid.direction_count
        return cls(base, grid, tuple(normalize_turn(sign * t, count) for t in turns))

    @property
    def direction_count(self):
        return self.grid.direction_count

    def turn(self, digit):
        if not 0 <= digit < self.base:
            raise DigitOutOfRange(digit, self.base)

        return self.turns[digit]

    def closure_length(self, digit) -> Optional[int]:
        """Length of the shortest run of ``digit`` that closes a loop, None for a straight digit."""
        turn = self.turn(digit)
        if turn == 0:
            return None

        return self.direction_count // gcd(abs(turn), self.direction_count)


class WalkState(NamedTuple):
    position: LatticePoint
    direction: int
    step_index: int
    turn_sum: int

    @property
    def pose(self):
        return self.position, self.direction


START = WalkState(ORIGIN, 0, 0, 0)


def step(s: WalkState, z, tm: TurnMap) -> WalkState:
    turn = tm.turn(z)
    direction = (s.direction + turn) % tm.direction_count
    return WalkState(
        s.position + unit_vector(direction, tm.grid),
        direction,
        s.step_index + 1,
        s.turn_sum + turn
    )


class Path:
    """The recorded walk: ``states[i]`` is the state after consuming ``z_1 .. z_i``."""

    def __init__(self, turnmap: TurnMap, states: List[WalkState]):
        self.turnmap = turnmap
        self.states = states

    @property
    def grid(self):
        return self.turnmap.grid

    @property
    def last_index(self):
        return len(self.states) - 1

    @property
    def final(self):
        return self.states[-1]

    @property
    def positions(self):
        return [s.position for s in self.states]

    def __len__(self):
        return len(self.states)

    def __getitem__(self, item):
        return self.states[item]

    def __iter__(self):
        return iter(self.states)

    def state(self, i) -> WalkState:
        if not 0 <= i <= self.last_index:
            raise StepIndexOutOfRange(i, self.last_index)

        return self.states[i]


def walk_from(state: WalkState, digits: Iterable[int], tm: TurnMap) -> List[WalkState]:
    """All states reached from ``state`` by consuming ``digits``, ``state`` included."""
    states = [state]
    for z in digits:
        state = step(state, z, tm)
        states.append(state)

    return states


def walk_prefix(d: Iterable[int], n, tm: TurnMap) -> Path:
    if n < 0:
        raise ValueError("n must not be negative")

    states = [START]
    source = iter(d)
    state = START
    for _ in range(n):
        try:
            z = next(source)
        except StopIteration:
            raise DigitSourceExhausted(n, state.step_index)

        state = step(state, z, tm)
        states.append(state)

    return Path(tm, states)


def torsion(p: Path, i) -> Fraction:
    return Fraction(p.state(i).turn_sum, p.turnmap.direction_count)


def torsion_range(p: Path) -> Tuple[Tuple[Fraction, int], Tuple[Fraction, int]]:
    """Smallest and largest torsion along the path, each with the first step that attains it."""
    low = min(p.states, key=lambda s: (s.turn_sum, s.step_index))
    high = min(p.states, key=lambda s: (-s.turn_sum, s.step_index))
    count = p.turnmap.direction_count
    return (Fraction(low.turn_sum, count), low.step_index), (Fraction(high.turn_sum, count), high.step_index)
