from .graphs import *