"""Kernel backend selection.

The compiled Cython kernels are preferred when importable; otherwise the
numpy fallback is used. ``SYMBREAK_BACKEND=py`` forces the fallback and
``SYMBREAK_BACKEND=c`` insists on the compiled core (raising if missing),
which the benchmark and the cross-backend tests use.
"""

import os

from . import _pykernels

_requested = os.environ.get("SYMBREAK_BACKEND", "auto").lower()

if _requested == "py":
    _impl = _pykernels
    BACKEND = "py"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        if _requested == "c":
            raise
        _impl = _pykernels
        BACKEND = "py"

config_bond_sums = _impl.config_bond_sums
graph_automorphism_mask = _impl.graph_automorphism_mask


def available_backends():
    """Names of importable backends, compiled first when present."""
    names = []
    try:
        from . import _ckernels  # noqa: F401

        names.append("c")
    except ImportError:
        pass
    names.append("py")
    return names


def get_backend(name: str):
    """Return the backend module by name ('c' or 'py')."""
    if name == "py":
        return _pykernels
    if name == "c":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
