"""Backend selector for the row-reduction kernels.

Prefers the compiled extension when it imported cleanly, otherwise the
numpy reference implementation.  Both expose identical signatures, so
callers never need to know which one is active.
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _ckernels  # type: ignore[attr-defined]
    _impl = _ckernels
    BACKEND = "compiled"
except ImportError:
    _impl = _kernels_py
    BACKEND = "python"

rref_mod_p = _impl.rref_mod_p
howell_mod_n = _impl.howell_mod_n
gcd_ext = _kernels_py.gcd_ext
unit = _kernels_py.unit
ann = _kernels_py.ann
mat_mul_mod = _kernels_py.mat_mul_mod


def available_backends():
    """Name -> module for every importable backend."""
    out = {"python": _kernels_py}
    if _impl is not _kernels_py:
        out["compiled"] = _impl
    return out
