"""Kernel backend selection.

Imports the compiled extension when available, otherwise falls back to the
pure-Python implementation.  Set F2HOPF_NO_EXT=1 to force the fallback (the
benchmark and the agreement tests load both backends explicitly).
"""

from __future__ import annotations

import os

if os.environ.get("F2HOPF_NO_EXT") == "1":
    from f2hopf import _kernels as _impl
else:
    try:
        from f2hopf import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from f2hopf import _kernels as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND
solve_quadratic = _impl.solve_quadratic
transform_product = _impl.transform_product
transform_coproduct = _impl.transform_coproduct


def backends() -> dict[str, object]:
    """All importable kernel backends, keyed by name."""
    from f2hopf import _kernels

    found: dict[str, object] = {"python": _kernels}
    try:
        from f2hopf import _kernels_c

        found[_kernels_c.BACKEND] = _kernels_c
    except ImportError:
        pass
    return found
