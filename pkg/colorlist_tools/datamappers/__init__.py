from .mappings import *