# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled maximum-clique search over packed uint64 bitsets.

Mirrors ``_pure.solve_max_clique`` exactly: same branching order, same
pruning, same node counting, same budget semantics.  Adjacency arrives as
one bytes object of n rows, each ceil(n/64) little-endian 64-bit words.
"""

import time

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

# Deadline checks every 8192 branch nodes, matching _pure.CHECK_INTERVAL.
cdef long long CHECK_MASK = 8191


def solve_max_clique(bytes adj, int n, long long upper_bound=-1,
                     double budget_seconds=0.0):
    """Returns (members, proven, nodes); upper_bound < 0 means unbounded."""
    if n == 0 or upper_bound == 0:
        return [], True, 0
    cdef int W = (n + 63) >> 6
    if len(adj) != n * W * 8:
        raise ValueError(f"adjacency blob must hold {n}*{W} words")

    cdef u64* A = <u64*> malloc(<size_t> n * W * sizeof(u64))
    cdef u64* stackbuf = <u64*> malloc(<size_t> (n + 2) * W * sizeof(u64))
    cdef int* cur = <int*> malloc(<size_t> (n + 1) * sizeof(int))
    cdef int* best = <int*> malloc(<size_t> (n + 1) * sizeof(int))
    if A == NULL or stackbuf == NULL or cur == NULL or best == NULL:
        free(A); free(stackbuf); free(cur); free(best)
        raise MemoryError()

    cdef const unsigned char[::1] raw = adj
    memcpy(A, &raw[0], <size_t> n * W * sizeof(u64))

    cdef double deadline = 0.0
    cdef bint timed = budget_seconds > 0.0
    if timed:
        deadline = time.monotonic() + budget_seconds

    cdef int best_size = 0, cur_len = 0, depth = 0
    cdef long long nodes = 0
    cdef bint aborted = False
    cdef int w, v, pc, base, cbase
    cdef u64 word, low
    cdef bint child_any

    # Root frame: all n vertices.
    for w in range(W):
        stackbuf[w] = <u64> 0xFFFFFFFFFFFFFFFFULL
    if n & 63:
        stackbuf[W - 1] = (<u64> 1 << (n & 63)) - 1

    try:
        while depth >= 0:
            base = depth * W
            pc = 0
            for w in range(W):
                pc += __builtin_popcountll(stackbuf[base + w])
            if pc == 0 or cur_len + pc <= best_size:
                depth -= 1
                if cur_len:
                    cur_len -= 1
                continue
            nodes += 1
            if timed and (nodes & CHECK_MASK) == 0:
                if time.monotonic() > deadline:
                    aborted = True
                    break
            v = -1
            for w in range(W):
                word = stackbuf[base + w]
                if word:
                    v = (w << 6) + __builtin_ctzll(word)
                    stackbuf[base + w] = word & (word - 1)
                    break
            cbase = base + W
            child_any = False
            for w in range(W):
                stackbuf[cbase + w] = stackbuf[base + w] & A[v * W + w]
                if stackbuf[cbase + w]:
                    child_any = True
            cur[cur_len] = v
            cur_len += 1
            if child_any:
                depth += 1
            else:
                if cur_len > best_size:
                    best_size = cur_len
                    memcpy(best, cur, <size_t> cur_len * sizeof(int))
                    if upper_bound >= 0 and best_size >= upper_bound:
                        return (
                            [best[w] for w in range(best_size)],
                            True,
                            nodes,
                        )
                cur_len -= 1
        return [best[w] for w in range(best_size)], not aborted, nodes
    finally:
        free(A)
        free(stackbuf)
        free(cur)
        free(best)
