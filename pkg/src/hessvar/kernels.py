"""Select the compiled kernel module when available.

Set ``HESSVAR_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _kernels_py

if os.environ.get("HESSVAR_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
compose = _impl.compose
act = _impl.act
inversion_mask = _impl.inversion_mask
inversion_masks = _impl.inversion_masks
enumerate_actions = _impl.enumerate_actions
bareiss_rank = _impl.bareiss_rank


def backends():
    """All importable kernel modules, pure Python first."""
    mods = [_kernels_py]
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        mods.append(_kernels)
    return mods
