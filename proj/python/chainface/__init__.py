"""Faces of maximal chain polytopes.

Crown-structure detection, closures and face lattices, exact rational LP
oracles, and PERT/CPM criticality queries over finite posets.
"""

from chainface._core import *  # noqa: F401,F403
from chainface._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
