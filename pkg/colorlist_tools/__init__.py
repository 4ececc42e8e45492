from importlib.metadata import version
from colorlist_tools.tools import *
from colorlist_tools.graphs import *
from colorlist_tools.assignments import *
from colorlist_tools.solvers import *
from colorlist_tools.reductions import *
from colorlist_tools.choosability import *
from colorlist_tools.importdata import *
from colorlist_tools.export import *
from colorlist_tools.qualitycontrol import *

__version__ = version("colorlist_tools")
