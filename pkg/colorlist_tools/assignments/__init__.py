from .assignments import *