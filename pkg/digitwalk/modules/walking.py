from ..commands import Module, NumberConverter, PointConverter, needs_source, positive
from ..commands.render import render_svg
from ..engine.enums import OutputFormat
from ..engine.lattice import ORIGIN
from ..engine.topology import winding_profile, winding_range
from ..engine.walk import torsion, torsion_range, walk_prefix

DEFAULT_STEPS = 64


class WalkingModule(Module):
    @staticmethod
    def _path(ctx, r, steps):
        return walk_prefix(ctx.digit_source(r), steps, ctx.turnmap)

    @Module.command()
    @needs_source
    @positive("steps", allow_zero=True)
    async def walk(self, ctx, r: NumberConverter = None, *, steps: int = DEFAULT_STEPS):
        """Print the first states of the walk as step,a,b,dir,R rows.

        With --format svg the walk is rendered instead, like `render`.
        """
        path = self._path(ctx, r, steps)
        if ctx.config.format is OutputFormat.SVG:
            ctx.write(render_svg(path))
            return

        rows = [
            {"step": s.step_index, "a": s.position.a, "b": s.position.b, "dir": s.direction, "R": s.turn_sum}
            for s in path
        ]
        ctx.send_table(("step", "a", "b", "dir", "R"), rows)

    @Module.command()
    @needs_source
    @positive("steps")
    async def render(self, ctx, r: NumberConverter = None, *, steps: int = DEFAULT_STEPS):
        """Render the first steps of the walk as an SVG polyline with S marked."""
        ctx.write(render_svg(self._path(ctx, r, steps)))

    @Module.command()
    @needs_source
    @positive("steps", allow_zero=True)
    async def torsion(self, ctx, r: NumberConverter = None, *, steps: int = DEFAULT_STEPS, summary: bool = False):
        """Print the torsion number t = R/D after every step as step,R,t rows.

        --summary prints the smallest and largest torsion instead.
        """
        path = self._path(ctx, r, steps)
        if summary:
            (low, low_step), (high, high_step) = torsion_range(path)
            rows = [{"min_t": str(low), "min_step": low_step, "max_t": str(high), "max_step": high_step}]
            ctx.send_table(("min_t", "min_step", "max_t", "max_step"), rows)
            return

        rows = [{"step": s.step_index, "R": s.turn_sum, "t": str(torsion(path, s.step_index))} for s in path]
        ctx.send_table(("step", "R", "t"), rows)

    @Module.command()
    @needs_source
    @positive("steps", allow_zero=True)
    async def winding(self, ctx, r: NumberConverter = None, *, steps: int = DEFAULT_STEPS,
                      center: PointConverter = ORIGIN, summary: bool = False):
        """Print the winding number around --center after every step as step,winding rows.

        The winding counts signed crossings of the ray from the center towards +x;
        segments through the center are not counted. --summary prints the
        smallest and largest winding instead.
        """
        profile = winding_profile(self._path(ctx, r, steps), center)
        if summary:
            (low, low_step), (high, high_step) = winding_range(profile)
            rows = [{"min_w": low, "min_step": low_step, "max_w": high, "max_step": high_step}]
            ctx.send_table(("min_w", "min_step", "max_w", "max_step"), rows)
            return

        ctx.send_table(("step", "winding"), [{"step": i, "winding": w} for i, w in enumerate(profile)])
