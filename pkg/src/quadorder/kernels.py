"""Backend selection for the hot kernels.

Set QUADORDER_BACKEND=numpy to force the pure-numpy fallback, or
QUADORDER_BACKEND=numba to require the jitted kernels (import error if numba
is missing).  Default: numba when available, else numpy.

`benchmarks/bench_backends.py` compares the two paths.
"""

from __future__ import annotations

import os

_choice = os.environ.get("QUADORDER_BACKEND", "").strip().lower()
if _choice not in ("", "numba", "numpy"):
    raise RuntimeError(f"QUADORDER_BACKEND must be 'numba' or 'numpy', got {_choice!r}")

if _choice == "numpy":
    from . import _impl_numpy as _impl
elif _choice == "numba":
    from . import _impl_numba as _impl
else:
    try:
        from . import _impl_numba as _impl
    except ImportError:
        from . import _impl_numpy as _impl


def backend_name() -> str:
    return _impl.BACKEND_NAME


spf_sieve = _impl.spf_sieve
splitfree_sieve = _impl.splitfree_sieve
omega_sieve = _impl.omega_sieve
psi_valuation_sieve = _impl.psi_valuation_sieve
preclass_units = _impl.preclass_units
coset_orders = _impl.coset_orders
unit_orders = _impl.unit_orders
hooley_count = _impl.hooley_count
small_order_count_kernel = _impl.small_order_count_kernel
scan_segment = _impl.scan_segment
reduced_forms_arrays = _impl.reduced_forms_arrays
unit_grid = _impl.unit_grid
