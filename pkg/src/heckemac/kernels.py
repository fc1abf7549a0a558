"""Select the compiled kernels when available, else the pure-Python ones.

Set ``HECKEMAC_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("HECKEMAC_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernels import *  # noqa: F401,F403
    from ._pykernels import IMPLEMENTATION
else:
    try:
        from ._speedups import *  # noqa: F401,F403
        from ._speedups import IMPLEMENTATION
    except ImportError:  # extension not built
        from ._pykernels import *  # noqa: F401,F403
        from ._pykernels import IMPLEMENTATION

__all__ = [
    "IMPLEMENTATION", "p_iadd", "p_add", "p_sub", "p_iadd_mul", "p_mul",
    "g_iadd_term", "g_iadd", "g_scale", "g_shift", "g_mul",
    "dl_apply", "dl_apply_double",
]
