"""Finite relations, functions and families, with an exhaustive law checker.

Values form a closed universe: atoms (symbols or integers), ordered pairs,
finite sets and functions. Sets and relations cross the boundary as set
values; functions are a distinct type. Pairs are stored as (input, output).
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
