"""Kernel selection: the compiled extension when built, else pure Python."""

from __future__ import annotations

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_active = _compiled if _compiled is not None else _pykernels


def active():
    return _active


def available() -> list[str]:
    return ["python"] + (["compiled"] if _compiled is not None else [])


def name() -> str:
    return _active.NAME


def use(which: str) -> None:
    """Switch kernels (``"compiled"`` or ``"python"``); for tests and benchmarks."""
    global _active
    if which == "python":
        _active = _pykernels
    elif which == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {which!r}")


def get(which: str):
    if which == "python":
        return _pykernels
    if which == "compiled" and _compiled is not None:
        return _compiled
    raise RuntimeError(f"backend {which!r} unavailable")
