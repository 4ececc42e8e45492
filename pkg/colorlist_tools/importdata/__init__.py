from .importdata import *