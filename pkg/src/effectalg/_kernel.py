"""Select the enumeration kernel: compiled extension when available, pure
Python otherwise.  Set EFFECTALG_PURE=1 to force the fallback."""

from __future__ import annotations

import os

if os.environ.get("EFFECTALG_PURE"):
    from . import _tablesearch_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _tablesearch as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _tablesearch_py as _impl

        BACKEND = "pure"

search_tables = _impl.search_tables
