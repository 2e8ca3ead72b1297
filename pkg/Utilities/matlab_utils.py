__all__ = [
            "Bundle", "isbundle", "isfield", "bundleUpdate",
            "realmin", "realmax", "eps", "cputime",
            "error", "info", "warn", "debug",
            "onOff", "isOn", "asFloatArray",
]


__author__ 		= "Lekan Molu"
__copyright__ 	= "2021, Hamilton-Jacobi Analysis in Python"
__credits__  	= "There are None."
__license__ 	= "Molux Licence"
__maintainer__ 	= "Lekan Molu"
__email__ 		= "patlekno@icloud.com"
__status__ 		= "Completed"


import sys
import time
import logging
import numpy as np

from .errors import UsageError

logger = logging.getLogger(__name__)

realmin = sys.float_info.min
realmax = sys.float_info.max
eps     = sys.float_info.epsilon


class Bundle(object):
    def __init__(self, dicko=None):
        """
            A matlab-like struct: attribute access over a dictionary of
            fields. Options structures of the integrator and the spectral
            search are Bundles.
        """
        for var, val in (dicko or {}).items():
            object.__setattr__(self, var, val)

    def __len__(self):
        return len(self.__dict__)

    def __repr__(self):
        fields = ", ".join(f"{k}={v!r}" for k, v in self.__dict__.items())
        return f"Bundle({fields})"

    def __eq__(self, other):
        return isinstance(other, Bundle) and self.__dict__ == other.__dict__

    def keys(self):
        return list(self.__dict__.keys())

    def get(self, field, default=None):
        return self.__dict__.get(field, default)

    def copy(self):
        return Bundle(dict(self.__dict__))

def isbundle(bund):
    "Determines if bund is an instance of the class Bundle."
    return isinstance(bund, Bundle)

def isfield(bund, field):
    "Determines if field is an element of the class Bundle."
    return field in bund.__dict__

def bundleUpdate(bund, overrides):
    """
        Returns a copy of bund with the (name, value) pairs of overrides
        applied. Unknown names are a usage error, values of None are
        skipped so that absent command line flags keep the defaults.
    """
    out = bund.copy()
    for name, value in overrides.items():
        if value is None:
            continue
        if not isfield(out, name):
            error(f'Unknown option "{name}"; valid options are {out.keys()}')
        setattr(out, name, value)
    return out

def cputime():
    "Ad-hoc current time function."
    return time.time()

def error(arg, kind=UsageError):
    "Raises arg as an exception of type kind (a HillBandError by default)."
    assert isinstance(arg, str), 'error argument must be a string'
    raise kind(arg)

def info(arg):
    "Pushes std info out to screen."
    assert isinstance(arg, str), 'logger.info argument must be a string'
    logger.info(arg)

def warn(arg):
    "Pushes std warn logs out to screen."
    assert isinstance(arg, str), 'logger.warn argument must be a string'
    logger.warning(arg)

def debug(arg):
    "Pushes std debug logs out to screen."
    assert isinstance(arg, str), 'logger.debug argument must be a string'
    logger.debug(arg)

def onOff(value, name):
    "Validates a matlab-like 'on'/'off' switch; booleans are accepted too."
    if isinstance(value, bool):
        return 'on' if value else 'off'
    if value not in ('on', 'off'):
        error(f'{name} must be one of the strings \'on\' or \'off\'')
    return value

def isOn(value):
    return value is True or value == 'on'

def asFloatArray(x):
    "Returns x as a float64 ndarray together with a flag telling if it was a scalar."
    arr = np.asarray(x, dtype=np.float64)
    return np.atleast_1d(arr), arr.ndim == 0
