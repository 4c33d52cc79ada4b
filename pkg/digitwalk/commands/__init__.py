from .app import WalkApp
from .command import CommandTable, Command
from .config import RunConfig
from .context import Context
from .module import Module
from .checks import *
from .errors import *
from .formatter import Formatter
from .converters import *
