"""Hot index-array kernels, compiled when available.

The compiled extension is used unless it failed to build or the environment
variable ``ADEQUA_PURE_PYTHON`` is set to a non-empty value other than ``0``.
"""

import os

from . import _kernels_py

_force_pure = os.environ.get("ADEQUA_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"

perm_cycles = _impl.perm_cycles
involution_components = _impl.involution_components
flood = _impl.flood

__all__ = ["BACKEND", "perm_cycles", "involution_components", "flood"]
