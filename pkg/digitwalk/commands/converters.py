from fractions import Fraction
import re

from .errors import *
from ..engine.digits import EventuallyPeriodicDigits
from ..engine.errors import DigitWalkException
from ..engine.lattice import LatticePoint


class Converter:
    def __init__(self, parameter, arg):
        self.parameter = parameter
        self.arg = arg

    def __call__(self, ctx):
        return self._convert(ctx)

    def _convert(self, ctx):
        return self.arg


class RationalConverter(Converter):
    """``p/q`` (or an integer) as an exact fraction."""

    def _convert(self, ctx):
        match = re.match(r"^\s*(?P<p>-?\d+)\s*(?:/\s*(?P<q>\d+))?\s*$", self.arg)
        if match is None:
            raise ConverterFailed(self.parameter, self.arg, "expected p/q")

        q = int(match.group("q") or 1)
        if q == 0:
            raise ConverterFailed(self.parameter, self.arg, "zero denominator")

        return Fraction(int(match.group("p")), q)


class NumberConverter(Converter):
    """A walk seed: ``p/q`` or digit notation ``preperiod|period`` in the configured base."""

    def _convert(self, ctx):
        if "|" not in self.arg:
            return RationalConverter(self.parameter, self.arg)(ctx)

        try:
            return EventuallyPeriodicDigits.parse(self.arg, ctx.config.base)
        except DigitWalkException as e:
            raise ConverterFailed(self.parameter, self.arg, str(e))


class PointConverter(Converter):
    def _convert(self, ctx):
        match = re.match(r"^\s*(?P<a>-?\d+)\s*,\s*(?P<b>-?\d+)\s*$", self.arg)
        if match is None:
            raise ConverterFailed(self.parameter, self.arg, "expected a,b")

        return LatticePoint(int(match.group("a")), int(match.group("b")))
