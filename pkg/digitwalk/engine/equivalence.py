"""
Digit surgery: inserting or removing a run of equal digits whose walk is a
closed loop (six equal digits in base 2), and the equivalence relation these
operations generate.

Operations act on a chosen expansion. Rationals are expanded with ``expand``,
so dyadic rationals use their terminating expansion; pass an
``EventuallyPeriodicDigits`` to operate on the dual one. Each op's position
indexes the digit string it is applied to, so a witness is replayed
sequentially.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Dict, Iterator, Optional, Tuple
import logging
import re

from .classify import KMembership, classify, in_class_K, iter_states
from .digits import EventuallyPeriodicDigits, digit_at, expand, value_of
from .enums import SurgeryKind
from .errors import InvalidPosition, NonClosingDigit, RunNotFound, SurgeryError, WitnessMismatch
from .walk import TurnMap

log = logging.getLogger(__name__)

_OP_PATTERN = re.compile(r"^(?P<kind>insert|remove)@(?P<position>\d+)(?::(?P<digit>[0-9a-z]))?$")


@dataclass(frozen=True)
class SurgeryOp:
    kind: SurgeryKind
    position: int
    digit: int
    run_length: int

    def __str__(self):
        if self.kind is SurgeryKind.INSERT:
            return "insert@%d:%d" % (self.position, self.digit)

        return "remove@%d" % self.position

    @property
    def sort_key(self):
        return self.kind.value, self.position, self.digit

    def inverse(self):
        kind = SurgeryKind.REMOVE if self.kind is SurgeryKind.INSERT else SurgeryKind.INSERT
        return SurgeryOp(kind, self.position, self.digit, self.run_length)

    def apply(self, d: EventuallyPeriodicDigits, tm: TurnMap) -> EventuallyPeriodicDigits:
        if self.kind is SurgeryKind.INSERT:
            return insert_digits(d, self.position, self.digit, tm)

        if digit_at(d, self.position) != self.digit:
            window = tuple(digit_at(d, i) for i in range(self.position, self.position + self.run_length))
            raise RunNotFound(self.position, window)

        return remove_digits(d, self.position, tm)


def make_op(kind: SurgeryKind, position, digit, tm: TurnMap) -> SurgeryOp:
    if position < 1:
        raise InvalidPosition(position)

    return SurgeryOp(kind, position, digit, _run_length(digit, tm))


def parse_op(text, d: EventuallyPeriodicDigits, tm: TurnMap) -> SurgeryOp:
    """Parse ``insert@n:digit`` or ``remove@n``; removals read their digit from ``d``."""
    match = _OP_PATTERN.match(text.strip())
    if match is None:
        raise SurgeryError("%r is not a surgery op" % text)

    kind = SurgeryKind(match.group("kind"))
    position = int(match.group("position"))
    if kind is SurgeryKind.INSERT:
        if match.group("digit") is None:
            raise SurgeryError("%r needs a digit" % text)

        digit = int(match.group("digit"), 36)

    else:
        if position < 1:
            raise InvalidPosition(position)

        digit = digit_at(d, position)

    return make_op(kind, position, digit, tm)


@dataclass(frozen=True)
class EquivalenceWitness:
    ops: Tuple[SurgeryOp, ...] = ()

    def __str__(self):
        return " ".join(str(op) for op in self.ops)

    def __len__(self):
        return len(self.ops)

    def replay(self, d: EventuallyPeriodicDigits, tm: TurnMap) -> EventuallyPeriodicDigits:
        for op in self.ops:
            d = op.apply(d, tm)

        return d


def parse_witness(text, d: EventuallyPeriodicDigits, tm: TurnMap) -> EquivalenceWitness:
    """Parse space separated ops as printed by ``EquivalenceWitness``.

    Each removal reads its digit from the expansion the earlier ops produced.
    """
    ops = []
    for word in text.split():
        op = parse_op(word, d, tm)
        d = op.apply(d, tm)
        ops.append(op)

    return EquivalenceWitness(tuple(ops))


def _run_length(digit, tm):
    run = tm.closure_length(digit)
    if run is None:
        raise NonClosingDigit(digit)

    return run


def _turnmap(tm, base):
    return tm or TurnMap.default(base)


def _as_digits(r, base):
    if isinstance(r, EventuallyPeriodicDigits):
        return r

    return expand(Fraction(r), base)


def insert_digits(d: EventuallyPeriodicDigits, n, z, tm: TurnMap) -> EventuallyPeriodicDigits:
    if n < 1:
        raise InvalidPosition(n)

    run = _run_length(z, tm)
    pre, period = d.unrolled(n - 1)
    spliced = pre[:n - 1] + [z] * run + pre[n - 1:]
    return EventuallyPeriodicDigits(d.base, tuple(spliced), tuple(period))


def remove_digits(d: EventuallyPeriodicDigits, n, tm: TurnMap) -> EventuallyPeriodicDigits:
    if n < 1:
        raise InvalidPosition(n)

    first = digit_at(d, n)
    run = tm.closure_length(first)
    if run is None:
        raise RunNotFound(n, (first,))

    pre, period = d.unrolled(n - 1 + run)
    window = tuple(pre[n - 1:n - 1 + run])
    if any(z != first for z in window):
        raise RunNotFound(n, window)

    return EventuallyPeriodicDigits(d.base, tuple(pre[:n - 1] + pre[n - 1 + run:]), tuple(period))


def insert_run(r, n, z, base=2, tm: TurnMap = None) -> Fraction:
    tm = _turnmap(tm, base)
    return value_of(insert_digits(_as_digits(r, tm.base), n, z, tm))


def remove_run(r, n, base=2, tm: TurnMap = None) -> Fraction:
    tm = _turnmap(tm, base)
    return value_of(remove_digits(_as_digits(r, tm.base), n, tm))


def _head_value(d, n):
    return sum((Fraction(z, d.base ** i) for i, z in enumerate(d.digits(n - 1), 1)), Fraction(0))


def _run_value(base, n, z, run):
    return sum((Fraction(z, base ** i) for i in range(n, n + run)), Fraction(0))


def closed_form_insert(d: EventuallyPeriodicDigits, n, z, run) -> Fraction:
    """Value after splicing ``run`` copies of ``z`` before digit ``n``, straight from the series.

    The digits before position ``n`` keep their weight, the run contributes
    ``z·Σ_{i=n}^{n+run-1} b^-i`` and everything from ``n`` on is shifted down by
    ``b^-run``.
    """
    head = _head_value(d, n)
    tail = value_of(d) - head
    return head + tail / d.base ** run + _run_value(d.base, n, z, run)


def run_delta(d: EventuallyPeriodicDigits, op: SurgeryOp) -> Fraction:
    """Change of value caused by applying ``op`` to ``d``."""
    value = value_of(d)
    if op.kind is SurgeryKind.INSERT:
        return closed_form_insert(d, op.position, op.digit, op.run_length) - value

    head = _head_value(d, op.position)
    block = _run_value(d.base, op.position, op.digit, op.run_length)
    return head + (value - head - block) * d.base ** op.run_length - value


@dataclass(frozen=True)
class Budget:
    max_ops: int = 4
    max_position: int = 8

    def __str__(self):
        return "%d ops, positions <= %d" % (self.max_ops, self.max_position)


def _neighbours(d, tm, budget) -> Iterator[Tuple[SurgeryOp, EventuallyPeriodicDigits]]:
    closing = [z for z in range(tm.base) if tm.closure_length(z) is not None]
    for n in range(1, budget.max_position + 1):
        for z in closing:
            op = make_op(SurgeryKind.INSERT, n, z, tm)
            yield op, op.apply(d, tm)

    for n in range(1, budget.max_position + 1):
        try:
            result = remove_digits(d, n, tm)
        except RunNotFound:
            continue

        yield make_op(SurgeryKind.REMOVE, n, digit_at(d, n), tm), result


def _expand_level(frontier, paths, tm, budget):
    level = []
    for node in frontier:
        for op, nb in _neighbours(node, tm, budget):
            if nb not in paths:
                paths[nb] = paths[node] + (op,)
                level.append(nb)

    return level


def _witness_key(witness):
    return len(witness.ops), [op.sort_key for op in witness.ops]


def equivalent_witness(r1, r2, tm: TurnMap = None, budget: Budget = Budget()) -> Optional[EquivalenceWitness]:
    """Search for surgery ops turning ``r1`` into ``r2``.

    Bidirectional breadth-first search bounded by ``budget``. None means
    "unknown within budget", never "not equivalent".
    """
    tm = _turnmap(tm, 2)
    start, goal = _as_digits(r1, tm.base), _as_digits(r2, tm.base)
    if start == goal:
        return EquivalenceWitness()

    forward: Dict[EventuallyPeriodicDigits, Tuple[SurgeryOp, ...]] = {start: ()}
    backward: Dict[EventuallyPeriodicDigits, Tuple[SurgeryOp, ...]] = {goal: ()}
    frontier_f, frontier_b = [start], [goal]
    depth = 0
    while depth < budget.max_ops and (frontier_f or frontier_b):
        grow_forward = bool(frontier_f) and (len(frontier_f) <= len(frontier_b) or not frontier_b)
        if grow_forward:
            frontier_f = _expand_level(frontier_f, forward, tm, budget)
            met = [node for node in frontier_f if node in backward]
        else:
            frontier_b = _expand_level(frontier_b, backward, tm, budget)
            met = [node for node in frontier_b if node in forward]

        depth += 1
        log.debug("search depth %d: %d forward, %d backward nodes", depth, len(forward), len(backward))
        if met:
            witnesses = [
                EquivalenceWitness(forward[node] + tuple(op.inverse() for op in reversed(backward[node])))
                for node in met
            ]
            return min(witnesses, key=_witness_key)

    log.debug("no witness between %s and %s within %s", start, goal, budget)
    return None


@dataclass(frozen=True)
class Escape:
    witness: EquivalenceWitness
    digits: EventuallyPeriodicDigits
    membership: KMembership


def escape_search(r, M, tm: TurnMap = None, budget: Budget = Budget()) -> Optional[Escape]:
    """Look for an expansion equivalent to ``r`` whose walk leaves the disc of radius ``M`` around S.

    Breadth-first over surgery ops, so the first hit has a shortest witness.
    None only means nothing was found within ``budget``.
    """
    tm = _turnmap(tm, 2)
    start = _as_digits(r, tm.base)
    paths: Dict[EventuallyPeriodicDigits, Tuple[SurgeryOp, ...]] = {start: ()}
    frontier = [start]
    for depth in range(budget.max_ops + 1):
        for node in frontier:
            verdict = in_class_K(classify(node, tm), M)
            if not verdict.member:
                return Escape(EquivalenceWitness(paths[node]), node, verdict)

        if depth < budget.max_ops:
            frontier = _expand_level(frontier, paths, tm, budget)
            log.debug("escape search depth %d: %d expansions", depth + 1, len(frontier))

    return None


def difference_is_rational(r1, r2, witness: EquivalenceWitness = None, tm: TurnMap = None) -> Fraction:
    """``r1 - r2``; with a witness the op-wise value changes are checked to add up to it."""
    tm = _turnmap(tm, 2)
    d1, d2 = _as_digits(r1, tm.base), _as_digits(r2, tm.base)
    difference = value_of(d1) - value_of(d2)
    if witness is None:
        return difference

    d = d1
    total = Fraction(0)
    for op in witness.ops:
        total += run_delta(d, op)
        d = op.apply(d, tm)

    if value_of(d) != value_of(d2):
        raise WitnessMismatch("witness %s leads to %s, not %s" % (witness, d, d2))

    if total != -difference:
        raise WitnessMismatch("op-wise changes add up to %s, expected %s" % (total, -difference))

    return difference


def tails_agree(r1, r2, tm: TurnMap = None, horizon=256, lag=None) -> Optional[Tuple[int, int]]:
    """Smallest step pair ``(i1, i2)`` from which both walks coincide forever.

    Both walks must stand on the same point facing the same direction with the
    same digits left to read. Pairs are ordered by ``i1``, then ``i2``; with
    ``lag`` only pairs with ``i2 - i1 == lag`` are considered.
    """
    tm = _turnmap(tm, 2)
    d1, d2 = _as_digits(r1, tm.base), _as_digits(r2, tm.base)
    states1 = list(islice(iter_states(d1, tm), horizon + 1))
    states2 = list(islice(iter_states(d2, tm), horizon + 1))

    if lag is not None:
        for i1 in range(max(0, -lag), min(horizon, horizon - lag) + 1):
            i2 = i1 + lag
            if states1[i1].pose == states2[i2].pose and d1.suffix(i1) == d2.suffix(i2):
                return i1, i2

        return None

    index = {}
    for s in states2:
        index.setdefault((s.pose, d2.suffix(s.step_index)), s.step_index)

    for s in states1:
        hit = index.get((s.pose, d1.suffix(s.step_index)))
        if hit is not None:
            return s.step_index, hit

    return None

