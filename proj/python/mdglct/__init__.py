"""Multi-dimensional graph linear canonical transforms.

Signals are numpy arrays whose shape matches ``ProductSpectrum.shape``;
axis 0 is the first factor graph.
"""

from ._mdglct import *  # noqa: F401,F403
from ._mdglct import __doc__  # noqa: F401

__version__ = "0.1.0"
