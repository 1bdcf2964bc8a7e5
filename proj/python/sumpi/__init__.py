"""Identity laboratory for structure-constant algebras over prime fields.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._sumpi import *  # noqa: F401,F403
from ._sumpi import __doc__  # noqa: F401

__version__ = "1.0.0"
