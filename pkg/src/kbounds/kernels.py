"""Kernel backend selection.

The compiled extension (``kbounds._core``) is used when importable;
otherwise the numpy fallback takes over.  Set ``KBOUNDS_BACKEND`` to
``pure`` or ``compiled`` to force a choice (``compiled`` raises if the
extension is missing).
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

_requested = os.environ.get("KBOUNDS_BACKEND", "auto").lower()

if _requested not in ("auto", "pure", "compiled"):
    raise RuntimeError(f"KBOUNDS_BACKEND must be auto/pure/compiled, not {_requested!r}")

_impl = _kernels_py
BACKEND = "pure"
if _requested in ("auto", "compiled"):
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = _kernels_py


def feasible_point(gen_normals, gen_rhs, test_lhs, test_rel, test_rhs,
                   extra_points, slack):
    return _impl.feasible_point(
        np.ascontiguousarray(gen_normals, dtype=np.float64),
        np.ascontiguousarray(gen_rhs, dtype=np.float64),
        np.ascontiguousarray(test_lhs, dtype=np.float64),
        np.ascontiguousarray(test_rel, dtype=np.int8),
        np.ascontiguousarray(test_rhs, dtype=np.float64),
        np.ascontiguousarray(extra_points, dtype=np.float64),
        float(slack),
    )


def mis_size(neighbor_masks, n, max_nodes=0):
    masks = np.ascontiguousarray(neighbor_masks, dtype=np.uint64)
    return _impl.mis_size(masks, int(n), int(max_nodes))


def chromatic_number(neighbor_masks, n, max_nodes=0):
    masks = np.ascontiguousarray(neighbor_masks, dtype=np.uint64)
    return _impl.chromatic_number(masks, int(n), int(max_nodes))
