"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
twin is the fallback.  Set FROBKIT_PURE_PYTHON=1 to force the fallback
(useful for benchmarking and for debugging the compiled path).
"""

import os

if os.environ.get("FROBKIT_PURE_PYTHON", "").strip() not in ("", "0"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

poly_eval = _impl.poly_eval
poly_eval_many = _impl.poly_eval_many
solve_quadratic = _impl.solve_quadratic
solve_cubic = _impl.solve_cubic
durand_kerner = _impl.durand_kerner
rk4_top = _impl.rk4_top


def backend_name() -> str:
    return BACKEND
