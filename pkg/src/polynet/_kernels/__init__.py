"""Hot loops, compiled when possible.

The Cython extension ``_ckernels`` is used if it imported cleanly; otherwise
the pure-Python module ``_pykernels`` provides the same functions. Setting
``POLYNET_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels as python

compiled = None
if os.environ.get("POLYNET_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled = None

active = compiled if compiled is not None else python
BACKEND = "cython" if compiled is not None else "python"

rank_mod_p = active.rank_mod_p
rank_table = active.rank_table
axiom_scan = active.axiom_scan
box_members = active.box_members

__all__ = [
    "BACKEND",
    "axiom_scan",
    "box_members",
    "compiled",
    "python",
    "rank_mod_p",
    "rank_table",
]
