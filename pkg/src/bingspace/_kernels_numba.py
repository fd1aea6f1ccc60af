"""numba-compiled twins of ``_kernels_numpy``; loops with early exit."""
import numpy as np
from numba import njit

NO_WITNESS = -1


@njit(cache=True)
def compose_batch(f, g):
    k, n, _ = f.shape
    out = np.empty_like(f)
    for i in range(k):
        for t in range(n):
            for x in range(n):
                out[i, t, x] = f[i, t, g[i, t, x]]
    return out


@njit(cache=True)
def rows_bijective(tables):
    k, n, _ = tables.shape
    out = np.ones(k, dtype=np.bool_)
    seen = np.zeros(n, dtype=np.bool_)
    for i in range(k):
        for t in range(n):
            seen[:] = False
            for x in range(n):
                v = tables[i, t, x]
                if seen[v]:
                    out[i] = False
                    break
                seen[v] = True
            if not out[i]:
                break
    return out


@njit(cache=True)
def row_product_tables(perms, n):
    p = perms.shape[0]
    total = p ** n
    out = np.empty((total, n, n), dtype=np.int64)
    digits = np.zeros(n, dtype=np.int64)
    for i in range(total):
        for t in range(n):
            row = digits[t]
            for x in range(n):
                out[i, t, x] = perms[row, x]
        # odometer, last row fastest
        t = n - 1
        while t >= 0:
            digits[t] += 1
            if digits[t] < p:
                break
            digits[t] = 0
            t -= 1
    return out


@njit(cache=True)
def all_tables(n):
    size = n * n
    total = n ** size
    out = np.empty((total, n, n), dtype=np.int64)
    digits = np.zeros(size, dtype=np.int64)
    for i in range(total):
        for k in range(size):
            out[i, k // n, k % n] = digits[k]
        k = size - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] < n:
                break
            digits[k] = 0
            k -= 1
    return out


@njit(cache=True)
def inverse_search(tables, pool):
    N, n, _ = tables.shape
    M = pool.shape[0]
    counts = np.zeros(N, dtype=np.int64)
    first = np.full(N, NO_WITNESS, dtype=np.int64)
    for i in range(N):
        for j in range(M):
            ok = True
            for t in range(n):
                for x in range(n):
                    if tables[i, t, pool[j, t, x]] != x or pool[j, t, tables[i, t, x]] != x:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                counts[i] += 1
                if first[i] == NO_WITNESS:
                    first[i] = j
    return counts, first


@njit(cache=True)
def action_witness(act, mul, identity, check_identity=True):
    m, n, _ = act.shape
    out = np.full(5, NO_WITNESS, dtype=np.int64)
    for t in range(n if check_identity else 0):
        for x in range(n):
            if act[identity, t, x] != x:
                out[0] = 0
                out[1] = identity
                out[3] = t
                out[4] = x
                return out
    for g in range(m):
        for h in range(m):
            gh = mul[g, h]
            for t in range(n):
                for x in range(n):
                    if act[gh, t, x] != act[g, t, act[h, t, x]]:
                        out[0] = 1
                        out[1] = g
                        out[2] = h
                        out[3] = t
                        out[4] = x
                        return out
    return out


@njit(cache=True)
def distributive_witness(act):
    m, n, _ = act.shape
    out = np.full(5, NO_WITNESS, dtype=np.int64)
    for g in range(m):
        for h in range(m):
            for x in range(n):
                for x1 in range(n):
                    for x2 in range(n):
                        lhs = act[g, act[h, x, x1], act[h, x, x2]]
                        rhs = act[h, x, act[g, x1, x2]]
                        if lhs != rhs:
                            out[0] = g
                            out[1] = h
                            out[2] = x
                            out[3] = x1
                            out[4] = x2
                            return out
    return out


@njit(cache=True)
def invariant_images(pair_masks):
    n = pair_masks.shape[0]
    img = np.zeros(1 << n, dtype=np.int64)
    cross = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        lo = 1 << b
        cross[0] = 0
        size = 1
        for a in range(b):
            r = pair_masks[a, b] | pair_masks[b, a]
            for s in range(size):
                cross[size + s] = cross[s] | r
            size *= 2
        for s in range(lo):
            img[lo + s] = img[s] | pair_masks[b, b] | cross[s]
    return img
