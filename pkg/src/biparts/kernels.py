"""Backend selection for the hot kernels.

The compiled extension is preferred when it was built; otherwise the
pure-Python fallback is used.  Set BIPARTS_PURE_PYTHON=1 to force the
fallback (useful for benchmarking the two against each other).
"""

from __future__ import annotations

import os

if os.environ.get("BIPARTS_PURE_PYTHON"):
    from biparts import _fallback as _impl

    BACKEND = "python"
else:
    try:
        from biparts import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from biparts import _fallback as _impl

        BACKEND = "python"

extend_partition_table = _impl.extend_partition_table
extend_bipartition_table = _impl.extend_bipartition_table
extend_self_convolution = _impl.extend_self_convolution
mul_series = _impl.mul_series
invert_series = _impl.invert_series
fold_binomial = _impl.fold_binomial
