"""Hot numerical kernels with an import-time backend switch.

The compiled extension is preferred when present; the numpy fallback is
functionally identical. Set MOVINGDD_PURE_PYTHON=1 to force the
fallback (used by the kernel benchmark and equivalence tests).
"""

import os

from . import fallback

_FORCE_PURE = os.environ.get("MOVINGDD_PURE_PYTHON", "").lower() in ("1", "true", "yes")

if _FORCE_PURE:
    _impl = fallback
    BACKEND = "fallback"
else:
    try:
        from . import _speedups as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = fallback
        BACKEND = "fallback"

interval_mass = _impl.interval_mass
interval_stiffness = _impl.interval_stiffness
interval_load = _impl.interval_load
triangle_mass = _impl.triangle_mass
triangle_stiffness = _impl.triangle_stiffness
triangle_load = _impl.triangle_load
h_quarter_double_sum = _impl.h_quarter_double_sum
slobodeckij_space_sum = _impl.slobodeckij_space_sum

__all__ = [
    "BACKEND", "fallback",
    "interval_mass", "interval_stiffness", "interval_load",
    "triangle_mass", "triangle_stiffness", "triangle_load",
    "h_quarter_double_sum", "slobodeckij_space_sum",
]
