"""Kernel selection: compiled extension when available, pure Python otherwise.

Set PRIMOVER_PURE=1 in the environment to force the pure backend.
"""

from __future__ import annotations

import os

if os.environ.get("PRIMOVER_PURE"):
    from primover._coset_pure import coset_scan
    BACKEND = "pure"
else:
    try:
        from primover._cosetscan import coset_scan
        BACKEND = "compiled"
    except ImportError:
        from primover._coset_pure import coset_scan
        BACKEND = "pure"

__all__ = ["coset_scan", "BACKEND"]
