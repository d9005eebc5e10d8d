"""Select the compiled kernels when available, else the pure-Python ones.

Set ``RIKUNA_PURE=1`` to force the Python implementation.  ``BACKEND``
reports which one is active.
"""

import os

from . import _pykernels as python

try:
    if os.environ.get("RIKUNA_PURE") == "1":
        raise ImportError("pure Python kernels requested")
    from . import _ckernels as native
except ImportError:
    native = None

BACKEND = "cython" if native is not None else "python"

_NAMES = (
    "mul",
    "divmod_",
    "rem",
    "mulmod",
    "powmod",
    "monic",
    "gcd",
    "frobenius_matrix",
    "frobenius_apply",
)


def _dispatch(name):
    py = getattr(python, name)
    if native is None:
        return py
    nat = getattr(native, name)

    def call(F, *args):
        if F.mode == "generic":
            return py(F, *args)
        return nat(F, *args)

    call.__name__ = name
    call.__doc__ = py.__doc__
    return call


for _name in _NAMES:
    globals()[_name] = _dispatch(_name)

functional_graph = native.functional_graph if native is not None else python.functional_graph
