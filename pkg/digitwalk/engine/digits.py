"""
Exact base-b expansions of rationals.

An expansion is stored as a preperiod and a nonempty period. Terminating
expansions carry the period ``(0,)``. Text notation is ``"preperiod|period"``,
e.g. ``"|10"`` for 2/3 and ``"1|0"`` for 1/2 in base 2.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, cycle, islice
from typing import Iterable, Iterator, Optional, Tuple

from .errors import InvalidDigits, RationalOutOfRange, DigitOutOfRange, DigitSourceExhausted

_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


def _primitive_root(word):
    n = len(word)
    for size in range(1, n + 1):
        if n % size == 0 and word[:size] * (n // size) == word:
            return word[:size]

    return word


def _canonical(preperiod, period):
    period = _primitive_root(period)
    # Absorb the tail of the preperiod into the period
    while preperiod and preperiod[-1] == period[-1]:
        period = period[-1:] + period[:-1]
        preperiod = preperiod[:-1]

    return preperiod, period


@dataclass(frozen=True)
class EventuallyPeriodicDigits:
    base: int
    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise InvalidDigits("base must be at least 2, got %d" % self.base)

        preperiod = tuple(self.preperiod)
        period = tuple(self.period)
        if len(period) == 0:
            raise InvalidDigits("the period must not be empty")

        for digit in chain(preperiod, period):
            if not 0 <= digit < self.base:
                raise DigitOutOfRange(digit, self.base)

        preperiod, period = _canonical(preperiod, period)
        object.__setattr__(self, "preperiod", preperiod)
        object.__setattr__(self, "period", period)

    @classmethod
    def parse(cls, text, base=2):
        if text.count("|") != 1:
            raise InvalidDigits("expected 'preperiod|period', got %r" % text)

        pre, per = text.strip().split("|")
        try:
            return cls(base, tuple(_parse_digit(c) for c in pre), tuple(_parse_digit(c) for c in per))
        except ValueError:
            raise InvalidDigits("%r is not a digit string" % text)

    def __str__(self):
        return "%s|%s" % (
            "".join(_DIGIT_CHARS[d] for d in self.preperiod),
            "".join(_DIGIT_CHARS[d] for d in self.period)
        )

    def __iter__(self) -> Iterator[int]:
        return chain(self.preperiod, cycle(self.period))

    @property
    def terminates(self):
        return self.period == (0,)

    def digits(self, n):
        """The first ``n`` digits as a tuple."""
        return tuple(islice(self, n))

    def unrolled(self, length):
        """Equivalent (non-canonical) preperiod/period pair with a preperiod of at least ``length`` digits."""
        preperiod = list(self.preperiod)
        period = list(self.period)
        while len(preperiod) < length:
            preperiod.append(period[0])
            period = period[1:] + period[:1]

        return preperiod, period

    def suffix(self, i):
        """The expansion that remains after the first ``i`` digits were consumed."""
        if i <= len(self.preperiod):
            return EventuallyPeriodicDigits(self.base, self.preperiod[i:], self.period)

        shift = (i - len(self.preperiod)) % len(self.period)
        return EventuallyPeriodicDigits(self.base, (), self.period[shift:] + self.period[:shift])


def _parse_digit(char):
    return int(char, 36)


def expand(r, base=2) -> EventuallyPeriodicDigits:
    r = Fraction(r)
    if not 0 <= r < 1:
        raise RationalOutOfRange(r)

    if base < 2:
        raise InvalidDigits("base must be at least 2, got %d" % base)

    q = r.denominator
    remainder = r.numerator
    seen_remainders = {}
    digits = []
    while remainder not in seen_remainders:
        seen_remainders[remainder] = len(digits)
        digit, remainder = divmod(remainder * base, q)
        digits.append(digit)

    start = seen_remainders[remainder]
    return EventuallyPeriodicDigits(base, tuple(digits[:start]), tuple(digits[start:]))


def value_of(d: EventuallyPeriodicDigits) -> Fraction:
    head = 0
    for digit in d.preperiod:
        head = head * d.base + digit

    block = 0
    for digit in d.period:
        block = block * d.base + digit

    scale = d.base ** len(d.preperiod)
    return Fraction(head, scale) + Fraction(block, (d.base ** len(d.period) - 1) * scale)


def alternate_expansion(d: EventuallyPeriodicDigits) -> Optional[EventuallyPeriodicDigits]:
    top = d.base - 1
    if d.period == (0,):
        nonzero = [i for i, digit in enumerate(d.preperiod) if digit != 0]
        if not nonzero:
            return None

        n = nonzero[-1]
        return EventuallyPeriodicDigits(d.base, d.preperiod[:n] + (d.preperiod[n] - 1,), (top,))

    if d.period == (top,) and d.preperiod:
        return EventuallyPeriodicDigits(d.base, d.preperiod[:-1] + (d.preperiod[-1] + 1,), (0,))

    return None


def digit_at(d: EventuallyPeriodicDigits, i) -> int:
    if i < 1:
        raise IndexError("digit positions start at 1")

    if i <= len(d.preperiod):
        return d.preperiod[i - 1]

    return d.period[(i - len(d.preperiod) - 1) % len(d.period)]


def complement(d: EventuallyPeriodicDigits) -> EventuallyPeriodicDigits:
    top = d.base - 1
    return EventuallyPeriodicDigits(
        d.base,
        tuple(top - digit for digit in d.preperiod),
        tuple(top - digit for digit in d.period)
    )


def finite_digits(text, base=2) -> Tuple[int, ...]:
    """Parse a plain digit string such as ``"000000"`` into a finite digit source."""
    try:
        digits = tuple(_parse_digit(c) for c in text.strip())
    except ValueError:
        raise InvalidDigits("%r is not a digit string" % text)

    for digit in digits:
        if digit >= base:
            raise DigitOutOfRange(digit, base)

    return digits


def digits_from_file(fp, base=2) -> Iterator[int]:
    """Pull digits from a binary stream, one ASCII digit per byte.

    Whitespace bytes are skipped so files may be wrapped.
    """
    while True:
        chunk = fp.read(4096)
        if not chunk:
            return

        for byte in chunk:
            char = chr(byte)
            if char.isspace():
                continue

            try:
                digit = _parse_digit(char)
            except ValueError:
                raise InvalidDigits("byte %r is not a digit" % char)

            if digit >= base:
                raise DigitOutOfRange(digit, base)

            yield digit


def take(source: Iterable[int], n) -> Tuple[int, ...]:
    digits = tuple(islice(iter(source), n))
    if len(digits) < n:
        raise DigitSourceExhausted(n, len(digits))

    return digits
