from .errors import *


class Check:
    def __init__(self, check, next=None):
        self.next = next
        self.check = check

    def run(self, ctx, *args, **kwargs):
        return self.check(ctx, *args, **kwargs)


def positive(*names, allow_zero=False):
    """Require the named arguments to be positive (or non-negative with ``allow_zero``)."""
    def predicate(callback):
        async def check(ctx, *args, **kwargs):
            values = dict(zip((p.name for p in ctx.last_cmd.parameters), args), **kwargs)
            for name in names:
                value = values.get(name)
                if value is None:
                    continue

                if value < 0 or (value == 0 and not allow_zero):
                    raise NotPositive(name, value, allow_zero)

            return True

        return Check(check, callback)

    return predicate


def periodic_only(callback):
    """The command decides things about the infinite walk, so it needs a rational seed."""
    async def check(ctx, *args, **kwargs):
        if ctx.config.digits_file is not None:
            raise NeedsRational(ctx.last_cmd.name)

        if len(args) == 0 or args[0] is None:
            raise NeedsNumber()

        return True

    return Check(check, callback)


def needs_source(callback):
    """Either a number or ``--digits-file`` has to supply the digits."""
    async def check(ctx, *args, **kwargs):
        if ctx.config.digits_file is None and (len(args) == 0 or args[0] is None):
            raise NeedsNumber()

        return True

    return Check(check, callback)
