from .qualitycontrol import *