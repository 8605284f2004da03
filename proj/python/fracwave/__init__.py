"""N-dimensional fractional Fourier and wavelet transforms."""

from fracwave._core import *  # noqa: F401,F403
from fracwave._core import __doc__  # noqa: F401
