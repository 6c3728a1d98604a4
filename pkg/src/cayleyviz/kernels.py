"""Kernel backend selection.

The hot traversal kernels exist twice: a Cython extension (``_speedups``)
built at install time and a pure-Python fallback (``_pykernels``).  The
compiled module is preferred when importable; every public entry point that
touches the kernels accepts a ``backend`` argument ("auto", "fast", "pure")
so the two lanes can be benchmarked against each other.
"""

from __future__ import annotations

from types import ModuleType
from typing import Optional

from . import _pykernels

try:
    from . import _speedups  # type: ignore[attr-defined]
except ImportError:
    _speedups = None

HAVE_FAST = _speedups is not None

BACKEND_NAMES = ("auto", "fast", "pure")


def backend(name: Optional[str] = None) -> ModuleType:
    """Resolve a backend name to the kernel module implementing it."""
    if name is None or name == "auto":
        return _speedups if HAVE_FAST else _pykernels
    if name == "fast":
        if not HAVE_FAST:
            raise RuntimeError("compiled kernels are not available in this install")
        return _speedups
    if name == "pure":
        return _pykernels
    raise ValueError(f"unknown backend {name!r}; expected one of {BACKEND_NAMES}")


def backend_name(name: Optional[str] = None) -> str:
    """The effective backend label ("fast" or "pure") for reporting."""
    return backend(name).NAME
