"""Equality of canonical arrows in free monoidal monad and comonad categories."""

from . import errors
from .terms import *  # noqa: F401,F403
from .terms import THEORIES, get_theory

__version__ = "0.1.0"
