"""Kernel selection: compiled extension if importable, else pure Python.

FOREST_BIALG_PURE=1 forces the pure fallback (used by the benchmark and the
backend-equivalence tests). BACKEND names the active implementation.
"""

import os

if os.environ.get("FOREST_BIALG_PURE"):
    from ._splits_py import biideal_splits, postorder_indices, restrict_parents
    BACKEND = "pure"
else:
    try:
        from ._splits import biideal_splits, postorder_indices, restrict_parents
        BACKEND = "compiled"
    except ImportError:
        from ._splits_py import biideal_splits, postorder_indices, restrict_parents
        BACKEND = "pure"

__all__ = ["BACKEND", "biideal_splits", "postorder_indices", "restrict_parents"]
