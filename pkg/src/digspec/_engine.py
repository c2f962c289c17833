"""Bulk kernels for the desk-scale sweeps.

Two batch engines: reachability of a singleton image set under a group
plus one transformation (the synchronisation test), and membership of a
constant map in the full transformation-semigroup closure.  Both are
written as plain array loops and JIT-compiled when numba is importable;
without numba the same functions run in the interpreter with identical
results, just slower.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


@njit(cache=True)
def _sync_kernel(tables, maps):
    """For each map row, BFS over image bitmasks from the map's image set;
    transitions are canonical set-images under each group generator
    (precomputed tables) and under the map itself.  Returns 1 where a
    singleton is reachable."""
    M, n = maps.shape
    k = tables.shape[0]
    size = 1 << n
    visited = np.zeros(size, np.int64)
    stack = np.empty(size, np.int64)
    fimg = np.empty(n, np.int64)
    out = np.zeros(M, np.uint8)
    for idx in range(M):
        epoch = idx + 1
        start = 0
        for i in range(n):
            b = 1 << maps[idx, i]
            fimg[i] = b
            start |= b
        if start & (start - 1) == 0:
            out[idx] = 1
            continue
        visited[start] = epoch
        stack[0] = start
        sp = 1
        found = False
        while sp > 0:
            s = stack[sp - 1]
            sp -= 1
            for t in range(k):
                ns = tables[t, s]
                if visited[ns] != epoch:
                    visited[ns] = epoch
                    if ns & (ns - 1) == 0:
                        found = True
                        break
                    stack[sp] = ns
                    sp += 1
            if found:
                break
            ns = 0
            for i in range(n):
                if (s >> i) & 1:
                    ns |= fimg[i]
            if visited[ns] != epoch:
                visited[ns] = epoch
                if ns & (ns - 1) == 0:
                    found = True
                    break
                stack[sp] = ns
                sp += 1
        if found:
            out[idx] = 1
    return out


@njit(cache=True)
def _closure_kernel(letters, maps, powers, nn):
    """For each map row, enumerate the closure of {group generators, map}
    under composition (words built left to right), stopping early once a
    constant map appears.  Maps are encoded in base n.  Returns 1 where
    the closure contains a constant."""
    M, n = maps.shape
    k = letters.shape[0]
    lets = np.empty((k + 1, n), np.int64)
    for g in range(k):
        for i in range(n):
            lets[g, i] = letters[g, i]
    visited = np.zeros(nn, np.int64)
    stack = np.empty(nn, np.int64)
    buf = np.empty(n, np.int64)
    out = np.zeros(M, np.uint8)
    for idx in range(M):
        for i in range(n):
            lets[k, i] = maps[idx, i]
        epoch = idx + 1
        sp = 0
        found = False
        for g in range(k + 1):
            code = 0
            allsame = True
            first = lets[g, 0]
            for i in range(n):
                v = lets[g, i]
                if v != first:
                    allsame = False
                code += v * powers[i]
            if visited[code] != epoch:
                visited[code] = epoch
                if allsame:
                    found = True
                    break
                stack[sp] = code
                sp += 1
        while sp > 0 and not found:
            code = stack[sp - 1]
            sp -= 1
            c = code
            for i in range(n):
                buf[i] = c % n
                c //= n
            for g in range(k + 1):
                ncode = 0
                allsame = True
                first = lets[g, buf[0]]
                for i in range(n):
                    v = lets[g, buf[i]]
                    if v != first:
                        allsame = False
                    ncode += v * powers[i]
                if visited[ncode] != epoch:
                    visited[ncode] = epoch
                    if allsame:
                        found = True
                        break
                    stack[sp] = ncode
                    sp += 1
        if found:
            out[idx] = 1
    return out


def set_image_tables(gen_images: Sequence[Sequence[int]], n: int) -> np.ndarray:
    """tables[t][S] = bitmask image of the vertex set S under generator t."""
    if n > 20:
        raise ValueError("set-image tables are only built for n <= 20")
    k = len(gen_images)
    tables = np.zeros((k, 1 << n), np.int64)
    for t, g in enumerate(gen_images):
        row = tables[t]
        for s in range(1, 1 << n):
            low = s & -s
            row[s] = row[s ^ low] | (1 << g[low.bit_length() - 1])
    return tables


def batch_synchronises(gen_images: Sequence[Sequence[int]], maps: np.ndarray) -> np.ndarray:
    """Vector of synchronisation flags for many maps against one group."""
    n = maps.shape[1]
    tables = set_image_tables(gen_images, n)
    return _sync_kernel(tables, np.ascontiguousarray(maps, dtype=np.int64))


def batch_closure_contains_constant(
    gen_images: Sequence[Sequence[int]], maps: np.ndarray
) -> np.ndarray:
    """Vector of constant-membership flags for the closures of
    {generators, map}, one per map row."""
    n = maps.shape[1]
    if n > 7:
        raise ValueError("closure enumeration is guarded at n <= 7")
    letters = np.array([list(g) for g in gen_images], dtype=np.int64).reshape(-1, n)
    powers = np.array([n**i for i in range(n)], dtype=np.int64)
    return _closure_kernel(
        letters, np.ascontiguousarray(maps, dtype=np.int64), powers, n**n
    )
