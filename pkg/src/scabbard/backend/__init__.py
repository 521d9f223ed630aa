"""Kernel backend selection.

The compiled extension (_core, Cython) is preferred when it imports; the
numpy implementation (pure) is the fallback and the reference. Force a
choice with SCABBARD_BACKEND=cython|python.
"""

import os

from . import pure

_BACKENDS = {"python": pure}

try:
    from . import _core
    _BACKENDS["cython"] = _core
except ImportError:
    _core = None


def available() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get(name: str | None = None):
    """Return a backend module by name, or the best available one."""
    if name in (None, "", "auto"):
        name = os.environ.get("SCABBARD_BACKEND", "").lower() or "auto"
    if name == "auto":
        name = "cython" if "cython" in _BACKENDS else "python"
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available (have {available()})") from None
