"""Hankel and Cesaro operators on the Dirichlet space."""

from ._dhankel import *  # noqa: F401,F403
