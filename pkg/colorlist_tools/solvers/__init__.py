from .solvers import *