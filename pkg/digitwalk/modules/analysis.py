from ..commands import Module, NumberConverter, RationalConverter, needs_source, periodic_only, positive
from ..commands.app import EXIT_DRIFT, EXIT_OK
from ..engine.classify import (
    RECORD_FIELDS, classify, compare_bases, in_class_K, is_simple, iter_states, recurrence_stats,
    scan_recurrence, visit_census, walk_sector
)
from ..engine.digits import value_of
from ..engine.lattice import ORIGIN


def _rational(d):
    r = value_of(d)
    return "%d/%d" % (r.numerator, r.denominator)


def _vector(p):
    return None if p is None else str(p)


class AnalysisModule(Module):
    @Module.command()
    @periodic_only
    async def classify(self, ctx, r: NumberConverter):
        """Decide whether the infinite walk of r closes or drifts.

        Prints one record: r, base, digits, kind, tau, v, v_global, k,
        cycle_length, distinct_points, max_norm_sq, torsion_rate.
        Exit code 0 means Closed, 10 means Drift.
        """
        c = classify(ctx.expansion(r), ctx.turnmap)
        ctx.send_table(RECORD_FIELDS, [c.record()])
        return EXIT_OK if c.closed else EXIT_DRIFT

    @Module.command()
    @periodic_only
    @positive("radius")
    async def member(self, ctx, r: NumberConverter, *, radius: RationalConverter):
        """Decide whether every point of the walk stays closer than --radius to S.

        Non-members report the first step at distance >= radius.
        """
        c = classify(ctx.expansion(r), ctx.turnmap)
        verdict = in_class_K(c, radius)
        row = {
            "r": _rational(c.digits),
            "radius": str(verdict.radius),
            "member": verdict.member,
            "witness_step": verdict.witness_step
        }
        ctx.send_table(("r", "radius", "member", "witness_step"), [row])

    @Module.command()
    @periodic_only
    async def simple(self, ctx, r: NumberConverter):
        """Decide whether the infinite walk visits any lattice point twice.

        Closed walks are judged over one traversal of their cycle and always
        report recurrent=True.
        """
        c = classify(ctx.expansion(r), ctx.turnmap)
        verdict = is_simple(c)
        i, j = verdict.repeat or (None, None)
        row = {"r": _rational(c.digits), "simple": verdict.simple, "i": i, "j": j, "recurrent": verdict.recurrent}
        ctx.send_table(("r", "simple", "i", "j", "recurrent"), [row])

    @Module.command()
    @periodic_only
    async def sector(self, ctx, r: NumberConverter):
        """Report the smallest cone with apex S that holds the whole walk.

        kind is sector (opening below 180 degrees), half-plane or full;
        right and left are the boundary directions as lattice vectors.
        """
        c = classify(ctx.expansion(r), ctx.turnmap)
        found = walk_sector(c)
        row = {
            "r": _rational(c.digits),
            "kind": found.kind.value,
            "right": _vector(found.right),
            "left": _vector(found.left),
            "aperture": None if found.aperture is None else round(found.aperture, 6)
        }
        ctx.send_table(("r", "kind", "right", "left", "aperture"), [row])

    @Module.command()
    @periodic_only
    @positive("window", allow_zero=True)
    async def census(self, ctx, r: NumberConverter, *, window: int = 64):
        """Count the visits of every lattice point during steps 1..window.

        `eventual` is the number of visits over the whole infinite walk
        (inf for points on a closed cycle); the row flagged start is S,
        which is also occupied at step 0.
        """
        c = classify(ctx.expansion(r), ctx.turnmap)
        census = visit_census(c, window)
        points = sorted(set(census.counts) | {ORIGIN})
        rows = []
        for p in points:
            eventual = census.multiplicity.get(p, 0)
            rows.append({
                "a": p.a,
                "b": p.b,
                "count": census.counts.get(p, 0),
                "eventual": "inf" if eventual is None else eventual,
                "start": p == ORIGIN and census.start_occupied
            })

        ctx.send_table(("a", "b", "count", "eventual", "start"), rows)

    @Module.command()
    @needs_source
    @positive("horizon", allow_zero=True)
    @positive("far", "near")
    async def recurrence(self, ctx, r: NumberConverter = None, *, far: RationalConverter = 5,
                         near: RationalConverter = 1, horizon: int = 10000):
        """Look for a step farther than --far from S followed by a step nearer than --near.

        Scans the first --horizon steps; a report, not a decision.
        """
        if ctx.config.digits_file is None:
            c = classify(ctx.expansion(r), ctx.turnmap)
            report = recurrence_stats(c, far, near, horizon)
        else:
            states = iter_states(ctx.digit_source(r), ctx.turnmap)
            report = scan_recurrence(states, ctx.turnmap.grid, far, near, horizon)

        i, j = report.witness or (None, None)
        row = {
            "far": str(report.far),
            "near": str(report.near),
            "horizon": report.horizon,
            "i": i,
            "j": j,
            "excursions": report.excursions
        }
        ctx.send_table(("far", "near", "horizon", "i", "j", "excursions"), [row])

    @Module.command()
    @periodic_only
    async def bases(self, ctx, r: RationalConverter):
        """Classify r in base 2, 3 and 5, each on its default grid."""
        results = compare_bases(r, sign=ctx.config.turn_sign)
        ctx.send_table(RECORD_FIELDS, [results[base].record() for base in sorted(results)])
