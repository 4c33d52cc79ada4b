from ..commands import Module, NumberConverter, periodic_only
from ..engine.digits import alternate_expansion, value_of


class ExpansionModule(Module):
    @Module.command()
    @periodic_only
    async def expand(self, ctx, r: NumberConverter):
        """Print the base-b expansion of r as preperiod|period.

        r is a rational p/q in [0, 1); the base comes from --base.
        """
        ctx.f_send(str(ctx.expansion(r)))

    @Module.command()
    @periodic_only
    async def alternate(self, ctx, r: NumberConverter):
        """Print the dual expansion of a terminating (or (b-1)-tailed) expansion.

        Exits with 1 when r has only one expansion.
        """
        d = ctx.expansion(r)
        dual = alternate_expansion(d)
        if dual is None:
            raise ctx.f.ERROR("%s has no second expansion in base %d" % (value_of(d), d.base))

        ctx.f_send(str(dual))
