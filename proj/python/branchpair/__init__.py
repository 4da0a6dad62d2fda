"""Arc-disjoint out-/in-branchings and strong arc decompositions in directed
multigraphs: good-pair search, exceptional-graph catalog, and deterministic
verification."""

from ._branchpair import *  # noqa: F401,F403
from ._branchpair import __doc__ as _core_doc  # noqa: F401
