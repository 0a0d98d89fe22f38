"""Backend selection for the vector kernels.

The compiled module is used when it was built; ``ABVASS_PURE_PYTHON=1``
forces the pure-Python fallback (handy for benchmarks and debugging).
"""

import os

if os.environ.get("ABVASS_PURE_PYTHON") == "1":
    from ._kernels_py import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from ._kernels import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import *  # noqa: F401,F403
        BACKEND = "python"

__all__ = [
    "BACKEND",
    "vec_add",
    "vec_sub",
    "vec_meet",
    "vec_join",
    "vec_leq",
    "vec_sqsubseteq",
    "is_nonneg",
    "dominates_some",
    "antichain_insert",
    "count_decompositions",
    "decompositions",
]
