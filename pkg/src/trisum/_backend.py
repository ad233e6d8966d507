"""Select the integer kernel implementation.

The compiled extension is used when it was built; setting
``TRISUM_PURE_PYTHON=1`` forces the fallback (useful for benchmarks and for
checking that both paths agree).
"""

import os

from trisum import _kernel_py

BACKEND = "python"
canon = _kernel_py.canon
cross = _kernel_py.cross
dot = _kernel_py.dot
det3 = _kernel_py.det3

if not os.environ.get("TRISUM_PURE_PYTHON"):
    try:
        from trisum import _kernel
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        canon = _kernel.canon
        cross = _kernel.cross
        dot = _kernel.dot
        det3 = _kernel.det3

ZERO = _kernel_py.ZERO
