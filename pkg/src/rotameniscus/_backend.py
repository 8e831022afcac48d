"""Kernel backend selection: numba-compiled loops or plain numpy.

The env var ROTAMENISCUS_BACKEND picks the path:
  auto   use numba when importable (default)
  numba  require numba, warn and fall back if missing
  numpy  force the pure-numpy implementations
"""
import os
import warnings

_requested = os.environ.get("ROTAMENISCUS_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    warnings.warn(
        f"ROTAMENISCUS_BACKEND={_requested!r} not recognized; using 'auto'",
        stacklevel=2,
    )
    _requested = "auto"

_have_numba = False
if _requested != "numpy":
    try:
        from numba import njit as _numba_njit  # noqa: F401
        _have_numba = True
    except ImportError:
        if _requested == "numba":
            warnings.warn(
                "numba requested via ROTAMENISCUS_BACKEND but not importable; "
                "falling back to numpy",
                stacklevel=2,
            )

USE_NUMBA = _have_numba


def _passthrough(*args, **kwargs):
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def wrap(func):
        return func

    return wrap


if USE_NUMBA:
    from numba import njit
else:
    njit = _passthrough


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
