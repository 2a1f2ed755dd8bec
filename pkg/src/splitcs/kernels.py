"""Backend selection for the hot numeric kernels.

``SPLITCS_BACKEND=numpy`` forces the pure-numpy fallback; ``numba`` (the
default when importable) uses the jitted kernels.  Both backends satisfy the
same accuracy contracts; see ``benchmarks/bench_kernels.py`` for a speed
comparison.
"""

import os

_requested = os.environ.get("SPLITCS_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ImportError(
        f"SPLITCS_BACKEND={_requested!r} is not recognized (use 'numba' or 'numpy')"
    )

if _requested == "numpy":
    from . import _kernels_numpy as _impl
else:
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        if _requested == "numba":
            raise
        from . import _kernels_numpy as _impl

BACKEND = _impl.BACKEND_NAME
jacobi_eigen = _impl.jacobi_eigen
cholesky_factor = _impl.cholesky_factor
solve_lower = _impl.solve_lower
solve_lower_transpose = _impl.solve_lower_transpose
