from .enums import *
from .errors import *
from .digits import *
from .lattice import *
from .walk import *
from .classify import *
from .topology import *
from .equivalence import *
