"""Kernel backend selection.

The compiled ``_ckernels`` module is used when it imports; otherwise the
numpy implementations in ``_pykernels`` stand in. Setting
``PALIN_KERNELS=python`` forces the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load() -> tuple[ModuleType, str]:
    if os.environ.get("PALIN_KERNELS", "").lower() == "python":
        return _pykernels, "python"
    try:
        from . import _ckernels
    except ImportError:
        return _pykernels, "python"
    return _ckernels, "compiled"


_impl, BACKEND = _load()


def get_backend(name: str | None = None) -> ModuleType:
    """Return the kernel module for ``name`` ('compiled', 'python') or the default."""
    if name is None:
        return _impl
    if name == "python":
        return _pykernels
    if name == "compiled":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


mark_bits = _impl.mark_bits
tally = _impl.tally
merge_histogram = _impl.merge_histogram
