from .base import *
from .reflection import *
from .abacus import *
from .diagram import *
from .block import *
