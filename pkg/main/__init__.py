from ppcov.graph import *
from ppcov.paths import *
from ppcov.instrument import *
from ppcov.coverage import *
from ppcov.report import *
from ppcov.contrib import *
from ppcov.data import *

__version__ = '0.1.0'
__author__ = 'ppcov developers'
__name__ = "ppcov"
__doc__ = """Prime path coverage: enumeration, instrumentation and reporting."""

def info():
    print(f"{__name__} (v{__version__}): {__doc__}\nContact: {__author__}")
