from .engine import *
from .commands import *
from .modules import create_app
