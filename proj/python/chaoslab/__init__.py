"""Li-Yorke chaos modulo an ideal for transformation semigroups.

The heavy lifting lives in the _chaoslab extension; this package just
re-exports it.
"""

from ._chaoslab import *  # noqa: F401,F403
from ._chaoslab import __doc__  # noqa: F401

__version__ = "0.1.0"
