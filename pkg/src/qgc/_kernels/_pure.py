"""Pure-Python maximum-clique search over int bitsets.

Branch and bound in ascending vertex order: at each step the lowest
remaining candidate is branched on, and a branch is cut when the current
clique plus all remaining candidates cannot beat the incumbent.  The first
maximum clique encountered in this order is returned, which makes results
reproducible across runs and backends.
"""

from __future__ import annotations

import time

#: How many branch nodes between deadline checks.
CHECK_INTERVAL = 8192


def solve_max_clique(
    masks: list[int],
    upper_bound: int | None = None,
    budget_seconds: float | None = None,
) -> tuple[list[int], bool, int]:
    """Search for a maximum clique.

    ``masks[i]`` is the neighbor bitset of vertex i.  Returns
    ``(members, proven, nodes)`` where ``members`` is ascending, ``proven``
    is False only when the time budget expired first, and ``nodes`` counts
    branch steps.  When ``upper_bound`` is given, the search stops and
    reports proven as soon as a clique of that size is found.
    """
    n = len(masks)
    if n == 0 or upper_bound == 0:
        return [], True, 0
    deadline = None
    if budget_seconds is not None and budget_seconds > 0:
        deadline = time.monotonic() + budget_seconds

    best: tuple[int, ...] = ()
    best_size = 0
    nodes = 0
    aborted = False
    cur: list[int] = []
    stack = [(1 << n) - 1]

    while stack:
        cand = stack[-1]
        if cand == 0 or len(cur) + cand.bit_count() <= best_size:
            stack.pop()
            if cur:
                cur.pop()
            continue
        nodes += 1
        if deadline is not None and nodes % CHECK_INTERVAL == 0:
            if time.monotonic() > deadline:
                aborted = True
                break
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        stack[-1] = cand
        child = cand & masks[v]
        cur.append(v)
        if child:
            stack.append(child)
        else:
            if len(cur) > best_size:
                best = tuple(cur)
                best_size = len(cur)
                if upper_bound is not None and best_size >= upper_bound:
                    return list(best), True, nodes
            cur.pop()

    return list(best), not aborted, nodes
