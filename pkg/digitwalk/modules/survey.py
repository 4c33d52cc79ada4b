from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd
import asyncio
import logging

from ..commands import Module, positive
from ..engine.classify import RECORD_FIELDS, classify
from ..engine.enums import Kind
from ..engine.walk import TurnMap

log = logging.getLogger(__name__)

FOOTER_FIELDS = ("group", "value", "count")


def survey_denominator(q, tm: TurnMap):
    """Classification records of every reduced p/q in [0, 1), p ascending."""
    return [classify(Fraction(p, q), tm).record() for p in range(q) if gcd(p, q) == 1]


def survey_footer(records):
    kinds = {kind.value: 0 for kind in Kind}
    multipliers = {}
    for record in records:
        kinds[record["kind"]] += 1
        if record["k"] is not None:
            multipliers[record["k"]] = multipliers.get(record["k"], 0) + 1

    rows = [{"group": "kind", "value": kind, "count": count} for kind, count in kinds.items()]
    rows.extend({"group": "k", "value": k, "count": multipliers[k]} for k in sorted(multipliers))
    return rows


class SurveyModule(Module):
    @Module.command()
    @positive("min_q", "max_q")
    async def survey(self, ctx, *, max_q: int, min_q: int = 1):
        """Classify every reduced p/q with min_q <= q <= max_q.

        Rows come out ordered by q, then p, followed by a footer counting
        the walks per kind and per closure multiplier k. --jobs spreads the
        denominators over worker processes without changing the output.
        """
        if max_q < 2:
            raise ctx.f.USAGE("--max-q must be at least 2, got %d" % max_q)

        tm = ctx.turnmap
        denominators = range(min_q, max_q + 1)
        jobs = ctx.config.jobs
        if jobs == 1:
            batches = [survey_denominator(q, tm) for q in denominators]

        else:
            log.debug("surveying %d denominators on %d workers", len(denominators), jobs)
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                batches = await asyncio.gather(*[
                    loop.run_in_executor(pool, survey_denominator, q, tm)
                    for q in denominators
                ])

        records = [record for batch in batches for record in batch]
        ctx.send_table(RECORD_FIELDS, records)
        ctx.send_table(FOOTER_FIELDS, survey_footer(records))
