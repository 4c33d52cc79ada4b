from ..commands import Module, NumberConverter, RationalConverter, periodic_only, positive
from ..engine.digits import value_of
from ..engine.equivalence import (
    Budget, difference_is_rational, equivalent_witness, escape_search, insert_digits, parse_witness, remove_digits,
    tails_agree
)
from ..engine.errors import SurgeryError


class SurgeryModule(Module):
    @Module.command()
    @periodic_only
    @positive("budget", "positions")
    async def equiv(self, ctx, r1: NumberConverter, r2: NumberConverter, *, budget: int = 4, positions: int = 8,
                    check: str = None):
        """Search a chain of loop insertions and removals turning r1 into r2.

        Prints the witness ops (insert@n:digit, remove@n) and r1 - r2.
        Exits with 1 when nothing is found within --budget ops at positions
        up to --positions; that does not mean the walks are inequivalent.
        --check "ops" replays the given witness instead of searching and exits
        with 1 when it does not lead from r1 to r2.
        """
        d1, d2 = ctx.expansion(r1), ctx.expansion(r2)
        if check is not None:
            witness = parse_witness(check, d1, ctx.turnmap)
        else:
            bound = Budget(max_ops=budget, max_position=positions)
            try:
                witness = equivalent_witness(d1, d2, ctx.turnmap, bound)
            except SurgeryError:
                # Turn maps without a closing digit allow no ops at all
                witness = None

            if witness is None:
                raise ctx.f.ERROR("unknown within budget (%s)" % bound)

        difference = difference_is_rational(d1, d2, witness, ctx.turnmap)
        ctx.f_send(str(witness) or "identical")
        ctx.f_send("difference %s" % difference, f=ctx.f.INFO)

    @Module.command()
    @periodic_only
    @positive("n")
    async def insert(self, ctx, r: NumberConverter, n: int, digit: int):
        """Splice a closing run of `digit` in front of digit n and print the new expansion and value."""
        d = insert_digits(ctx.expansion(r), n, digit, ctx.turnmap)
        ctx.f_send(str(d))
        ctx.f_send(str(value_of(d)), f=ctx.f.INFO)

    @Module.command()
    @periodic_only
    @positive("n")
    async def remove(self, ctx, r: NumberConverter, n: int):
        """Cut the closing run starting at digit n and print the new expansion and value."""
        d = remove_digits(ctx.expansion(r), n, ctx.turnmap)
        ctx.f_send(str(d))
        ctx.f_send(str(value_of(d)), f=ctx.f.INFO)

    @Module.command()
    @periodic_only
    @positive("horizon", allow_zero=True)
    async def tails(self, ctx, r1: NumberConverter, r2: NumberConverter, *, horizon: int = 256, lag: int = None):
        """Find the first steps i1, i2 from which both walks coincide forever.

        --lag restricts the search to i2 - i1 == lag. Exits with 1 when the
        walks do not synchronize within --horizon steps.
        """
        pair = tails_agree(ctx.expansion(r1), ctx.expansion(r2), ctx.turnmap, horizon, lag)
        if pair is None:
            raise ctx.f.ERROR("no common tail within %d steps" % horizon)

        ctx.send_table(("i1", "i2"), [{"i1": pair[0], "i2": pair[1]}])

    @Module.command()
    @periodic_only
    @positive("radius", "positions")
    @positive("budget", allow_zero=True)
    async def escape(self, ctx, r: NumberConverter, *, radius: RationalConverter, budget: int = 2,
                     positions: int = 8):
        """Search the surgeries of r for a walk that reaches distance --radius from S.

        Prints the witness ops, the expansion reached and the first step at
        distance >= radius. Exits with 1 when nothing is found within budget.
        """
        bound = Budget(max_ops=budget, max_position=positions)
        try:
            found = escape_search(ctx.expansion(r), radius, ctx.turnmap, bound)
        except SurgeryError:
            found = None

        if found is None:
            raise ctx.f.ERROR("every walk within %s stays closer than %s" % (bound, radius))

        row = {
            "witness": str(found.witness),
            "digits": str(found.digits),
            "r": str(value_of(found.digits)),
            "witness_step": found.membership.witness_step
        }
        ctx.send_table(("witness", "digits", "r", "witness_step"), [row])
