"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise, or when
``QMOBIUS_PURE_PYTHON`` is set to a non-empty value, the pure-Python
versions are used.  Both backends return identical results.
"""

import os

from . import _kernels_py

if os.environ.get("QMOBIUS_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

convolve = _impl.convolve
divide = _impl.divide
dirichlet_convolve = _impl.dirichlet_convolve
mobius_sieve = _impl.mobius_sieve
pentagonal_partition_numbers = _impl.pentagonal_partition_numbers
rconvolve = _impl.rconvolve
rdivide = _impl.rdivide
rexp = _impl.rexp

__all__ = [
    "BACKEND",
    "convolve",
    "divide",
    "dirichlet_convolve",
    "mobius_sieve",
    "pentagonal_partition_numbers",
    "rconvolve",
    "rdivide",
    "rexp",
]
