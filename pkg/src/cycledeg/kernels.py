"""Backend selection for the brute-force counting kernels.

The compiled extension is used when it imports; setting the environment
variable ``CYCLEDEG_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if os.environ.get("CYCLEDEG_PURE_PYTHON") != "1":
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

count_two_colored_paths = _impl.count_two_colored_paths
count_ssyt_two_row = _impl.count_ssyt_two_row

__all__ = ["BACKEND", "count_two_colored_paths", "count_ssyt_two_row"]
