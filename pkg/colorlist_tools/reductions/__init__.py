from .reductions import *