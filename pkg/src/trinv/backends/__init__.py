"""Kernel backend selection.

Two interchangeable implementations of the O(n^2) fill kernels exist: a
numba-compiled one (default when numba imports) and a pure numpy one.  Both
share the scalar recurrences in ``trinv._scalar_core``, so they agree bit for
bit; the numpy path exists for environments without a working JIT and as a
cross-check.

Selection: set ``TRINV_BACKEND`` to ``auto`` (default), ``numba`` or ``numpy``
before first use, or call :func:`select` at runtime.
"""

import os

_BACKEND_NAMES = ("numba", "numpy")

_active_name = None
_modules = {}


def numba_available():
    """True when the numba backend can be imported."""
    try:
        from . import numba_backend  # noqa: F401
    except ImportError:
        return False
    return True


def _load(name):
    if name not in _BACKEND_NAMES:
        raise ValueError(
            "unknown backend %r; expected one of %s" % (name, ", ".join(_BACKEND_NAMES))
        )
    if name not in _modules:
        if name == "numba":
            from . import numba_backend as mod
        else:
            from . import numpy_backend as mod
        _modules[name] = mod
    return _modules[name]


def select(name):
    """Make ``name`` the active backend and return its module.

    Raises ImportError if the backend cannot be loaded, leaving the previous
    choice in place.
    """
    global _active_name
    mod = _load(name)
    _active_name = name
    return mod


def active_name():
    """Name of the active backend, resolving ``TRINV_BACKEND`` on first use."""
    global _active_name
    if _active_name is None:
        choice = os.environ.get("TRINV_BACKEND", "auto").strip().lower()
        if choice in ("", "auto"):
            _active_name = "numba" if numba_available() else "numpy"
        elif choice in _BACKEND_NAMES:
            _active_name = choice
        else:
            raise ValueError(
                "TRINV_BACKEND must be auto, numba or numpy, got %r" % choice
            )
    return _active_name


def active():
    """The active backend module."""
    return _load(active_name())
