"""Backend selection for the word kernels.

The compiled extension is used when it was built; otherwise, or when
``PERMREL_PURE_PYTHON`` is set to a non-empty value, the pure-Python
implementation is used.  Both expose ``closure_codes``, ``label_words`` and
``sweep_equal`` with identical results.
"""

from __future__ import annotations

import os

from . import _pykernels
from ._pykernels import decode, encode

if os.environ.get("PERMREL_PURE_PYTHON"):
    backend = _pykernels
else:
    try:
        from . import _kernels as backend
    except ImportError:
        backend = _pykernels

BACKEND = "python" if backend is _pykernels else "cython"

closure_codes = backend.closure_codes
label_words = backend.label_words
sweep_equal = backend.sweep_equal


def available_backends() -> dict:
    """All importable backends by name (used by tests and the benchmark)."""
    out = {"python": _pykernels}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out


__all__ = [
    "BACKEND",
    "available_backends",
    "closure_codes",
    "decode",
    "encode",
    "label_words",
    "sweep_equal",
]
