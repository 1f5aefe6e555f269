"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python module.
Set ``TFIK_BACKEND=python`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _py as python_backend

try:
    from . import _core as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

CanonOverflow = python_backend.CanonOverflow


def _pick(name: str | None) -> ModuleType:
    if name == "python" or compiled_backend is None:
        return python_backend
    return compiled_backend


active: ModuleType = _pick(os.environ.get("TFIK_BACKEND"))
BACKEND = "compiled" if active is compiled_backend else "python"


def set_backend(name: str) -> str:
    """Switch to ``"python"`` or ``"compiled"``; returns the backend now in use."""
    global active, BACKEND
    if name not in ("python", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and compiled_backend is None:
        raise ImportError("compiled kernels are not built")
    active = _pick(name)
    BACKEND = name
    return BACKEND


def get() -> ModuleType:
    return active
