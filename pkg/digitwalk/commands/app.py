import asyncio
import logging
import sys
import traceback

from .command import CommandTable
from .config import RunConfig, GLOBAL_OPTIONS, GLOBAL_FLAGS
from .context import Context
from .formatter import Formatter, FormatRaise
from .errors import *
from ..engine.errors import DomainError, SurgeryError, ClosureMismatch

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_DRIFT = 10
EXIT_INTERNAL = 70

GLOBAL_HELP = {
    "--base": "digit base: 2 (hex grid), 3 (square grid) or 5 (hex grid); default 2",
    "--grid": "hex or square; derived from the base when omitted",
    "--turn-sign": "+1 keeps the default turn map, -1 swaps left and right",
    "--turns": "custom turn table, one comma separated turn per digit (units of 2pi/D)",
    "--format": "csv (default), jsonl, msgpack or svg",
    "--digits-file": "read digits (one ASCII digit per byte) instead of a rational",
    "--jobs": "worker processes for survey; default $DIGITWALK_JOBS or 1",
    "--verbose": "debug logging on standard error"
}


class WalkApp(CommandTable):
    def __init__(self, prog="digitwalk"):
        CommandTable.__init__(self)
        self.prog = prog
        self.modules = []
        self.f = Formatter()

        @self.command(name="help")
        def _help(ctx, *names):
            """Show the commands, or the usage of one command."""
            ctx.f_send(self.help_text(list(names)))

    def add_module(self, module):
        self.modules.append(module)
        for cmd in module.commands:
            cmd.module = module
            self.add_command(cmd)

    def help_text(self, names=None):
        if names:
            _, cmd = self.find_command(names)
            lines = ["usage: %s %s" % (self.prog, cmd.usage), ""]
            lines.extend(cmd.description.splitlines())
            return "\n".join(lines)

        lines = ["usage: %s <command> [arguments] [global options]" % self.prog, "", "commands:"]
        for name in sorted(self.commands):
            lines.append("  %-12s %s" % (name, self.commands[name].brief))

        lines.extend(["", "global options:"])
        for option in list(GLOBAL_OPTIONS) + list(GLOBAL_FLAGS):
            lines.append("  %-15s %s" % (option, GLOBAL_HELP[option]))

        return "\n".join(lines)

    async def process_commands(self, argv, out, err):
        cmd = None
        ctx = None
        try:
            config, parts = RunConfig.from_parts(argv)
            if config.verbose:
                logging.getLogger("digitwalk").setLevel(logging.DEBUG)

            if "--help" in parts or "-h" in parts:
                parts = ["help"] + [p for p in parts if p not in ("--help", "-h")]

            if not parts:
                parts = ["help"]

            parts, cmd = self.find_command(parts)
            ctx = Context(self, config, out, err)
            log.debug("running %s with %s", cmd.name, config)
            res = await cmd.execute(ctx, parts)
            return res if isinstance(res, int) else EXIT_OK

        except Exception as e:
            if ctx is None:
                ctx = Context(self, RunConfig(jobs=1), out, err)

            return self.on_command_error(cmd, ctx, e)

        finally:
            if ctx is not None:
                ctx.close()

    def on_command_error(self, cmd, ctx, e):
        if isinstance(e, FormatRaise):
            ctx.f_send(*e.args, **e.kwargs, f=e.f)
            return e.f.exit_code

        elif isinstance(e, CommandNotFound):
            name = e.name or ""
            ctx.f_send(
                "unknown command `%s`. Use `%s help` to list the commands." % (name, self.prog),
                f=self.f.USAGE
            )

        elif isinstance(e, NotEnoughArguments):
            ctx.f_send(
                "`%s` is missing the `%s` argument.\n%s %s" % (cmd.name, e.parameter.name, self.prog, cmd.usage),
                f=self.f.USAGE
            )

        elif isinstance(e, TooManyArguments):
            ctx.f_send(
                "`%s` got unexpected arguments: %s\n%s %s" % (cmd.name, " ".join(e.extra), self.prog, cmd.usage),
                f=self.f.USAGE
            )

        elif isinstance(e, UnknownOption):
            ctx.f_send("`%s` does not take the option %s" % (cmd.name, e.option), f=self.f.USAGE)

        elif isinstance(e, ConverterFailed):
            ctx.f_send(
                "the value `%s` passed to `%s` is not valid: %s" % (e.value, e.parameter.name, e.error),
                f=self.f.USAGE
            )

        elif isinstance(e, ConfigError):
            ctx.f_send(str(e), f=self.f.USAGE)

        elif isinstance(e, NotPositive):
            bound = "non-negative" if e.allow_zero else "positive"
            ctx.f_send("`%s` must be %s, got %s" % (e.name, bound, e.value), f=self.f.USAGE)

        elif isinstance(e, NeedsRational):
            ctx.f_send(
                "`%s` decides things about infinite walks and needs a rational, not --digits-file" % e.command,
                f=self.f.USAGE
            )

        elif isinstance(e, NeedsNumber):
            ctx.f_send("a number (p/q or preperiod|period) or --digits-file is required", f=self.f.USAGE)

        elif isinstance(e, (DomainError, SurgeryError, OSError)):
            ctx.f_send(str(e), f=self.f.ERROR)
            return EXIT_DOMAIN

        else:
            tb = "".join(traceback.format_exception(type(e), e, e.__traceback__))
            ctx.err.write(tb.encode("utf-8"))
            if isinstance(e, ClosureMismatch):
                log.error("internal consistency check failed: %s", e)

            return EXIT_INTERNAL

        return EXIT_USAGE

    def run(self, argv=None, out=None, err=None):
        argv = sys.argv[1:] if argv is None else list(argv)
        out = out or sys.stdout.buffer
        err = err or sys.stderr.buffer
        code = asyncio.run(self.process_commands(argv, out, err))
        out.flush()
        return code
