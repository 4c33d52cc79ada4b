from enum import Enum


class Grid(Enum):
    SQUARE = 4
    HEX = 6

    @property
    def direction_count(self):
        return self.value

    @classmethod
    def for_base(cls, base):
        try:
            return DEFAULT_GRIDS[base]
        except KeyError:
            raise ValueError("no default grid for base %d" % base)

    @classmethod
    def from_name(cls, name):
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError("unknown grid %r" % name)


DEFAULT_GRIDS = {
    2: Grid.HEX,
    3: Grid.SQUARE,
    5: Grid.HEX
}


class Kind(Enum):
    CLOSED = "closed"
    DRIFT = "drift"


class SurgeryKind(Enum):
    INSERT = "insert"
    REMOVE = "remove"


class OutputFormat(Enum):
    CSV = "csv"
    JSONL = "jsonl"
    MSGPACK = "msgpack"
    SVG = "svg"


class SectorKind(Enum):
    SECTOR = "sector"
    HALF_PLANE = "half-plane"
    FULL = "full"
