"""
Signature driven commands.

Positional parameters of a command callback become positional arguments,
keyword-only parameters become ``--options`` (``bool`` ones are flags) and the
annotation picks the converter. Checks wrap the callback and are peeled off
when the command is built.
"""
from inspect import Parameter, cleandoc, getdoc, isawaitable, isclass, signature

from .checks import Check
from .converters import Converter
from .errors import *


def option_name(name):
    return "--" + name.replace("_", "-")


def _flag(value):
    return str(value).lower() in ("y", "yes", "true", "1")


class CommandParameter:
    def __init__(self, name, kind, default=Parameter.empty, converter=None):
        self.name = name
        self.kind = kind
        if default is Parameter.empty and kind is Parameter.VAR_POSITIONAL:
            default = ()

        self.default = default
        self.flag = converter is bool
        self.converter = _flag if self.flag else converter

    @classmethod
    def from_parameter(cls, p):
        return cls(p.name, p.kind, p.default, None if p.annotation is Parameter.empty else p.annotation)

    @property
    def option(self):
        return option_name(self.name)

    @property
    def required(self):
        return self.default is Parameter.empty

    @property
    def variadic(self):
        return self.kind is Parameter.VAR_POSITIONAL

    def convert(self, arg):
        converter = self.converter or str
        if isclass(converter) and issubclass(converter, Converter):
            # Resolved later with the context
            return converter(self, arg)

        try:
            return converter(arg)
        except Exception as e:
            raise ConverterFailed(self, arg, str(e))

    def consume(self, args):
        """Take this parameter's value (all remaining ones if variadic) off the front of ``args``."""
        if self.variadic:
            values = tuple(self.convert(a) for a in args)
            args.clear()
            return values

        if args:
            return self.convert(args.pop(0))

        if self.required:
            raise NotEnoughArguments(self)

        return self.default

    def usage(self):
        if self.variadic:
            return "[*%s]" % self.name

        if self.required:
            return "<%s>" % self.name

        if self.default is None:
            return "[%s]" % self.name

        return "[%s=%s]" % (self.name, self.default)

    def option_usage(self):
        if self.flag:
            return "[%s]" % self.option

        if self.required:
            return "%s <%s>" % (self.option, self.name)

        if self.default is None:
            return "[%s %s]" % (self.option, self.name)

        return "[%s %s=%s]" % (self.option, self.name, self.default)


class Command:
    def __init__(self, callback, name=None, description=None):
        self.checks = []
        self.module = None  # Set by WalkApp.add_module for module commands

        while isinstance(callback, Check):
            self.checks.append(callback)
            callback = callback.next

        self.callback = callback
        self.name = name or callback.__name__
        doc = getdoc(callback)
        self.description = description or (cleandoc(doc) if doc else "")

        parameters = [
            CommandParameter.from_parameter(p)
            for p in signature(callback).parameters.values()
            if p.name not in ("self", "ctx")
        ]
        self.parameters = [p for p in parameters if p.kind is not Parameter.KEYWORD_ONLY]
        self.options = {p.option: p for p in parameters if p.kind is Parameter.KEYWORD_ONLY}

    @property
    def brief(self):
        first = self.description.splitlines()[0] if self.description else ""
        return first if len(first) <= 60 else first[:60] + "..."

    @property
    def usage(self):
        fragments = [self.name]
        fragments.extend(p.usage() for p in self.parameters)
        fragments.extend(p.option_usage() for p in self.options.values())
        return " ".join(fragments)

    def split_options(self, parts):
        """Separate ``--option value``, ``--option=value`` and flags from the positional arguments."""
        positional = []
        values = {}
        parts = list(parts)
        while parts:
            part = parts.pop(0)
            if not part.startswith("--"):
                positional.append(part)
                continue

            option, _, inline = part.partition("=")
            param = self.options.get(option)
            if param is None:
                raise UnknownOption(option)

            if inline:
                values[param.name] = param.convert(inline)

            elif param.flag:
                values[param.name] = True

            elif parts:
                values[param.name] = param.convert(parts.pop(0))

            else:
                raise NotEnoughArguments(param)

        for param in self.options.values():
            if param.name in values:
                continue

            if param.required:
                raise NotEnoughArguments(param)

            values[param.name] = param.default

        return positional, values

    @staticmethod
    async def _resolve(ctx, value):
        if isinstance(value, Converter):
            value = value(ctx)

        if isawaitable(value):
            value = await value

        return value

    async def execute(self, ctx, parts):
        ctx.last_cmd = self
        positional, options = self.split_options(parts)
        args = []
        for parameter in self.parameters:
            value = parameter.consume(positional)
            if parameter.variadic:
                args.extend(value)
            else:
                args.append(value)

        if positional:
            raise TooManyArguments(positional)

        args = [await self._resolve(ctx, a) for a in args]
        kwargs = {name: await self._resolve(ctx, v) for name, v in options.items()}

        for check in self.checks:
            res = check.run(ctx, *args, **kwargs)
            if isawaitable(res):
                await res

        if self.module is None:
            res = self.callback(ctx, *args, **kwargs)
        else:
            res = self.callback(self.module, ctx, *args, **kwargs)

        if isawaitable(res):
            res = await res

        return res


class CommandTable:
    """Flat name → command table the app dispatches on."""

    def __init__(self):
        self.commands = {}

    def add_command(self, command: Command):
        self.commands[command.name] = command

    def command(self, *args, **kwargs):
        def _predicate(callback):
            cmd = Command(callback, *args, **kwargs)
            self.add_command(cmd)
            return cmd

        return _predicate

    def find_command(self, parts):
        """Look up ``parts[0]``; returns the remaining parts and the command."""
        if not parts or parts[0] not in self.commands:
            raise CommandNotFound(parts[0] if parts else None)

        return parts[1:], self.commands[parts[0]]
