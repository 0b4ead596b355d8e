"""Exact solvers and certified reductions for deletion to full binary trees."""

try:
    from ._fbtlab import *  # noqa: F401,F403
    from ._fbtlab import __doc__ as _doc
except ImportError:  # development layout: extension next to the package
    from _fbtlab import *  # noqa: F401,F403
    from _fbtlab import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
