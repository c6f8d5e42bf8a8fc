"""Series arithmetic kernels with a compiled core and a pure fallback.

The compiled extension is preferred when it was built; otherwise the pure
Python implementation is used.  Both expose the same functions over the
same raw vector layout (see _slow).  benchmarks/bench_backends.py compares
the two directly.
"""

try:
    from ._fast import (  # noqa: F401
        ONE_VEC, ZERO_VEC, series_exp, series_mul, vec_add, vec_is_zero,
        vec_mul, vec_reduce,
    )
    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    from ._slow import (  # noqa: F401
        ONE_VEC, ZERO_VEC, series_exp, series_mul, vec_add, vec_is_zero,
        vec_mul, vec_reduce,
    )
    BACKEND = "pure"
