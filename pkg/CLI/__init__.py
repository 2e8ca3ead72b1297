from .verify import *
from .command_line import *
