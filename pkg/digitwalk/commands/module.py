from .command import Command


class Module:
    """A group of related commands declared on a subclass with ``Module.command()``."""

    def __init__(self, app):
        self.app = app

    @property
    def commands(self):
        cls = type(self)
        for name in sorted(dir(cls)):
            attr = getattr(cls, name)
            if isinstance(attr, Command):
                yield attr

    @staticmethod
    def command(name=None, description=None):
        def _predicate(callback):
            return Command(callback, name=name, description=description)

        return _predicate
