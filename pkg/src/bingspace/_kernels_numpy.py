"""Pure-numpy implementations of the hot kernels.

Every function here has a twin in ``_kernels_numba`` with the same signature
and the same output, including the order in which witnesses are reported.
All integer arrays are ``int64``.
"""
import numpy as np

NO_WITNESS = -1


def compose_batch(f, g):
    """``out[k, t, x] = f[k, t, g[k, t, x]]`` for stacks of tables."""
    return np.take_along_axis(f, g, axis=2)


def rows_bijective(tables):
    n = tables.shape[-1]
    return np.all(np.sort(tables, axis=2) == np.arange(n), axis=(1, 2))


def row_product_tables(perms, n):
    """All tables whose rows are drawn from ``perms``; row 0 varies slowest."""
    p = perms.shape[0]
    idx = np.indices((p,) * n, dtype=np.int64).reshape(n, -1).T
    return perms[idx]


def all_tables(n):
    """Every n x n table over ``range(n)`` in lexicographic order of the flat entries."""
    size = n * n
    flat = np.indices((n,) * size, dtype=np.int64).reshape(size, -1).T
    return np.ascontiguousarray(flat.reshape(-1, n, n))


def inverse_search(tables, pool):
    """Count two-sided inverses of each table among ``pool`` by exhaustive search.

    Returns ``(counts, first)`` where ``first[i]`` is the pool index of the
    first inverse of ``tables[i]`` or -1.
    """
    N, n, _ = tables.shape
    counts = np.zeros(N, dtype=np.int64)
    first = np.full(N, NO_WITNESS, dtype=np.int64)
    everything = np.arange(pool.shape[0], dtype=np.int64)
    for i in range(N):
        f = tables[i]
        cand = everything
        # f * g == e
        for t in range(n):
            for x in range(n):
                cand = cand[f[t, pool[cand, t, x]] == x]
                if cand.size == 0:
                    break
            if cand.size == 0:
                break
        # g * f == e
        for t in range(n):
            if cand.size == 0:
                break
            for x in range(n):
                cand = cand[pool[cand, t, f[t, x]] == x]
        counts[i] = cand.size
        if cand.size:
            first[i] = cand[0]
    return counts, first


def action_witness(act, mul, identity, check_identity=True):
    """First violation of the binary-action axioms, as ``[kind, g, h, t, x]``.

    kind 0 is the identity axiom (``h`` unused, set to -1), kind 1 the
    composition axiom; kind -1 means no violation.
    """
    m, n, _ = act.shape
    out = np.full(5, NO_WITNESS, dtype=np.int64)
    bad = np.argwhere(act[identity] != np.arange(n)) if check_identity else np.empty((0, 2))
    if bad.size:
        out[0], out[1] = 0, identity
        out[3], out[4] = bad[0]
        return out
    rows = np.arange(n)[None, :, None]
    for g in range(m):
        lhs = act[mul[g]]
        rhs = act[g][rows, act]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            out[0], out[1] = 1, g
            out[2:] = bad[0]
            return out
    return out


def distributive_witness(act):
    """First ``(g, h, x, x1, x2)`` breaking g(h(x,x1), h(x,x2)) = h(x, g(x1,x2))."""
    m, n, _ = act.shape
    out = np.full(5, NO_WITNESS, dtype=np.int64)
    xs = np.arange(n)[:, None, None]
    for g in range(m):
        G = act[g]
        for h in range(m):
            H = act[h]
            lhs = G[H[:, :, None], H[:, None, :]]
            rhs = H[xs, G[None, :, :]]
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                out[0], out[1] = g, h
                out[2:] = bad[0]
                return out
    return out


def invariant_images(pair_masks):
    """Image bitmask G·S for every subset bitmask S of an n-point carrier.

    ``pair_masks[a, b]`` is the bitmask of ``{g(a, b) : g in G}``.
    """
    n = pair_masks.shape[0]
    img = np.zeros(1 << n, dtype=np.int64)
    both = pair_masks | pair_masks.T
    for b in range(n):
        lo = 1 << b
        cross = np.zeros(lo, dtype=np.int64)
        size = 1
        for a in range(b):
            cross[size:2 * size] = cross[:size] | both[a, b]
            size *= 2
        img[lo:2 * lo] = img[:lo] | pair_masks[b, b] | cross
    return img
