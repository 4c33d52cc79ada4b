from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple
import os

from .errors import ConfigError
from ..engine.enums import Grid, OutputFormat
from ..engine.errors import InvalidTurnMap
from ..engine.walk import TurnMap

ALLOWED_PAIRINGS = {
    (2, Grid.HEX),
    (3, Grid.SQUARE),
    (5, Grid.HEX)
}

# Global flags and the RunConfig field each one fills
GLOBAL_OPTIONS = {
    "--base": "base",
    "--grid": "grid",
    "--turn-sign": "turn_sign",
    "--turns": "turns",
    "--format": "format",
    "--digits-file": "digits_file",
    "--jobs": "jobs"
}
GLOBAL_FLAGS = {
    "--verbose": "verbose"
}


def _default_jobs():
    try:
        return int(os.environ.get("DIGITWALK_JOBS", 1))
    except ValueError:
        raise ConfigError("DIGITWALK_JOBS must be an integer")


@dataclass(frozen=True)
class RunConfig:
    base: int = 2
    grid: Optional[Grid] = None
    turn_sign: int = 1
    turns: Optional[Tuple[int, ...]] = None
    format: OutputFormat = OutputFormat.CSV
    digits_file: Optional[Path] = None
    jobs: int = field(default_factory=_default_jobs)
    verbose: bool = False

    def __post_init__(self):
        if self.grid is None:
            try:
                object.__setattr__(self, "grid", Grid.for_base(self.base))
            except ValueError:
                raise ConfigError("base must be 2, 3 or 5, got %d" % self.base)

        if (self.base, self.grid) not in ALLOWED_PAIRINGS:
            raise ConfigError("base %d does not walk on the %s grid" % (self.base, self.grid.name.lower()))

        if self.turn_sign not in (1, -1):
            raise ConfigError("--turn-sign must be +1 or -1")

        if self.jobs < 1:
            raise ConfigError("--jobs must be at least 1")

        if self.turns is not None and len(self.turns) != self.base:
            raise ConfigError("--turns needs %d values for base %d" % (self.base, self.base))

    @property
    def turnmap(self) -> TurnMap:
        try:
            if self.turns is not None:
                return TurnMap.custom(self.base, self.grid, self.turns, self.turn_sign)

            return TurnMap.default(self.base, self.grid, self.turn_sign)
        except InvalidTurnMap as e:
            raise ConfigError(str(e))

    @classmethod
    def from_parts(cls, parts):
        """Strip the global flags out of ``parts`` and build the config from them.

        Returns the config and the remaining parts.
        """
        values = {}
        rest = []
        parts = list(parts)
        while parts:
            part = parts.pop(0)
            option, _, inline = part.partition("=")
            if option in GLOBAL_FLAGS:
                values[GLOBAL_FLAGS[option]] = True
                continue

            if option not in GLOBAL_OPTIONS:
                rest.append(part)
                continue

            if not inline:
                if not parts:
                    raise ConfigError("%s needs a value" % option)

                inline = parts.pop(0)

            values[GLOBAL_OPTIONS[option]] = _convert_option(option, inline)

        return cls(**values), rest


def _convert_option(option, value):
    try:
        if option in ("--base", "--jobs", "--turn-sign"):
            return int(value)

        if option == "--grid":
            return Grid.from_name(value)

        if option == "--turns":
            return tuple(int(t) for t in value.split(","))

        if option == "--format":
            return OutputFormat(value.lower())

        return Path(value)
    except ValueError:
        raise ConfigError("invalid value %r for %s" % (value, option))
