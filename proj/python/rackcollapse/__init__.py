"""Rack-theoretic collapse analysis of Suzuki and Ree groups.

Thin python surface over the C++ core: group builders, conjugacy class
and rack utilities, collapse detectors with re-verifiable certificates,
and the abelian-subrack braiding analyses.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from ._core import __version__  # noqa: F401
except ImportError:  # in-tree builds put _core on PYTHONPATH directly
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
