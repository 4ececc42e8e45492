from .choosability import *