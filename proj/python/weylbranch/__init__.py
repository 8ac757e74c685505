"""Exact root-system arithmetic, character branching, and table verification."""

from ._weylbranch import *  # noqa: F401,F403
from ._weylbranch import __doc__  # noqa: F401
