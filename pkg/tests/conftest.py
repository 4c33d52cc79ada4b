from io import BytesIO

import pytest

from digitwalk.engine import Grid, TurnMap
from digitwalk.modules import create_app


@pytest.fixture
def hex2():
    return TurnMap.default(2)


@pytest.fixture
def square3():
    return TurnMap.default(3)


@pytest.fixture
def hex5():
    return TurnMap.default(5, Grid.HEX)


class CliResult:
    def __init__(self, code, out, err):
        self.code = code
        self.out = out
        self.err = err

    @property
    def text(self):
        return self.out.decode("utf-8")

    @property
    def lines(self):
        return self.text.splitlines()


@pytest.fixture
def cli():
    def _run(*argv):
        out, err = BytesIO(), BytesIO()
        code = create_app().run(list(argv), out=out, err=err)
        return CliResult(code, out.getvalue(), err.getvalue().decode("utf-8"))

    return _run
