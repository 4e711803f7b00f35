"""Singular-value step functions, determinants and randomized inequality checks."""

from ._logmaj import *  # noqa: F401,F403
from ._logmaj import LogmajError, StepFunction  # noqa: F401
