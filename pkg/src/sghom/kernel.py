"""Search-kernel selection: compiled extension if present, else pure Python.

Both backends expose ``search(...)`` with identical semantics; the compiled
one (``sghom._kernel_c``, built from ``_kernel_c.pyx``) is roughly an order
of magnitude faster on the gadget workloads.  ``benchmarks/bench_solver.py``
compares them.
"""

from __future__ import annotations

try:  # pragma: no cover - exercised implicitly by the chosen install
    from . import _kernel_c as _impl

    BACKEND = "cython"
except (ImportError, AttributeError):  # pragma: no cover
    from . import _kernel_py as _impl

    BACKEND = "python"

search = _impl.search


def backends():
    """All importable backends, for parity tests and benchmarks."""
    from . import _kernel_py

    out = {"python": _kernel_py}
    try:
        from . import _kernel_c

        out["cython"] = _kernel_c
    except ImportError:
        pass
    return out
