"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The compiled extension is used when it imported successfully and the
environment variable ``QGC_PURE_KERNELS`` is unset; both implementations
follow the identical branching order, so results and node counts match
exactly.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pure

_impl = None
if not os.environ.get("QGC_PURE_KERNELS"):
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = None

#: Which implementation serves solve_max_clique: "cython" or "pure".
BACKEND = "cython" if _impl is not None else "pure"


def pack_masks(masks: Sequence[int], n: int) -> bytes:
    """Pack int bitsets into the little-endian word blob the extension takes."""
    words = (n + 63) >> 6
    return b"".join(m.to_bytes(words * 8, "little") for m in masks)


def solve_max_clique(
    masks: Sequence[int],
    upper_bound: int | None = None,
    budget_seconds: float | None = None,
) -> tuple[list[int], bool, int]:
    """First maximum clique in ascending-vertex branch order.

    ``masks[i]`` is the neighbor bitset of vertex i.  Returns
    ``(members, proven, nodes)``; ``proven`` is False only on budget expiry.
    """
    if _impl is None:
        return _pure.solve_max_clique(list(masks), upper_bound, budget_seconds)
    n = len(masks)
    blob = pack_masks(masks, n)
    ub = -1 if upper_bound is None else upper_bound
    budget = 0.0 if budget_seconds is None else float(budget_seconds)
    members, proven, nodes = _impl.solve_max_clique(blob, n, ub, budget)
    return members, bool(proven), nodes
