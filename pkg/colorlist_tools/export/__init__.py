from .export import *