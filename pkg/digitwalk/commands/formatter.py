from dataclasses import dataclass
import csv
import io

import msgpack
import ujson

from .errors import CommandError
from ..engine.enums import OutputFormat


class FormatRaise(CommandError):
    def __init__(self, f, *args, **kwargs):
        self.f = f
        self.args = args
        self.kwargs = kwargs


@dataclass()
class Format:
    prefix: str = ""
    stderr: bool = False
    exit_code: int = 0

    def __call__(self, *args, **kwargs):
        # `raise ctx.f.ERROR(msg)` ends the command; on_command_error prints msg in this format
        return FormatRaise(self, *args, **kwargs)


def to_json(obj):
    return ujson.dumps(obj, ensure_ascii=True)


def _cell(value):
    if value is None:
        return ""

    return str(value)


class Formatter:
    DEFAULT = Format()
    INFO = Format(prefix="# ")
    WARNING = Format(prefix="warning: ", stderr=True)
    ERROR = Format(prefix="error: ", stderr=True, exit_code=1)
    USAGE = Format(prefix="usage: ", stderr=True, exit_code=2)

    def format(self, content="", *, f: Format = DEFAULT):
        lines = str(content).splitlines() or [""]
        return "".join(f.prefix + line + "\n" for line in lines)

    def table(self, fields, rows, fmt: OutputFormat = OutputFormat.CSV) -> bytes:
        """Serialize ``rows`` (dicts keyed by ``fields``) as csv, JSON lines or a msgpack stream."""
        if fmt is OutputFormat.SVG:
            raise self.USAGE("--format svg only applies to walk and render; this command prints a table")

        if fmt is OutputFormat.JSONL:
            return "".join(to_json({k: row.get(k) for k in fields}) + "\n" for row in rows).encode("ascii")

        if fmt is OutputFormat.MSGPACK:
            return b"".join(msgpack.packb({k: row.get(k) for k in fields}, use_bin_type=True) for row in rows)

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_cell(row.get(k)) for k in fields])

        return buffer.getvalue().encode("utf-8")
