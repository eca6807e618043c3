"""Hot inner loops: modular matrix rank and chordality by maximum cardinality search.

Each kernel exists twice, a numba ``@njit`` version and a pure-numpy version.
The compiled path is used when numba imports and ``FERRERS_DISABLE_NUMBA`` is unset
(or "0"); the two paths must agree bit for bit, which the test suite checks.
"""
from __future__ import annotations

import os

import numpy as np

# Mersenne prime 2**31 - 1: products of two residues fit in int64.
PRIME = 2147483647

DISABLE_NUMBA = os.environ.get("FERRERS_DISABLE_NUMBA", "0").strip() not in ("", "0")

try:
    if DISABLE_NUMBA:
        raise ImportError("numba disabled by FERRERS_DISABLE_NUMBA")
    import numba
    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------

def _rank_mod_p_np(mat, p=PRIME):
    a = np.array(mat, dtype=np.int64) % p
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        rest = a[rank + 1:]
        f = rest[:, c].copy()
        hit = np.nonzero(f)[0]
        if hit.size:
            rest[hit] = (rest[hit] - (f[hit, None] * a[rank]) % p) % p
        rank += 1
    return rank


def _mcs_np(adj):
    """Maximum cardinality search; returns the elimination order (reverse visit order)."""
    nv = adj.shape[0]
    weight = np.zeros(nv, dtype=np.int64)
    done = np.zeros(nv, dtype=np.bool_)
    visit = np.empty(nv, dtype=np.int64)
    for step in range(nv):
        w = np.where(done, -1, weight)
        v = int(np.argmax(w))
        visit[step] = v
        done[v] = True
        weight += adj[v]
    return visit[::-1].copy()


def _peo_violation_np(adj, order):
    """First position whose later neighbours fail the clique test, or -1."""
    nv = adj.shape[0]
    pos = np.empty(nv, dtype=np.int64)
    pos[order] = np.arange(nv)
    for k in range(nv):
        v = order[k]
        later = np.nonzero((adj[v] != 0) & (pos > k))[0]
        if later.size < 2:
            continue
        u = later[np.argmin(pos[later])]
        rest = later[later != u]
        if not np.all(adj[u, rest] != 0):
            return k
    return -1


def _complement_adjacency_np(mask, nx, ny):
    nv = nx + ny
    adj = np.zeros((nv, nv), dtype=np.int64)
    adj[:nx, :nx] = 1
    adj[nx:, nx:] = 1
    bits = (int(mask) >> np.arange(nx * ny)) & 1
    cross = 1 - bits.reshape(nx, ny)
    adj[:nx, nx:] = cross
    adj[nx:, :nx] = cross.T
    np.fill_diagonal(adj, 0)
    return adj


def _complement_chordal_batch_np(masks, nx, ny):
    out = np.empty(len(masks), dtype=np.bool_)
    for g, mask in enumerate(masks):
        adj = _complement_adjacency_np(mask, nx, ny)
        out[g] = _peo_violation_np(adj, _mcs_np(adj)) < 0
    return out


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _rank_mod_p_nb(a, p):
        rows, cols = a.shape
        rank = 0
        for c in range(cols):
            if rank == rows:
                break
            piv = -1
            for r in range(rank, rows):
                if a[r, c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for cc in range(cols):
                    tmp = a[rank, cc]
                    a[rank, cc] = a[piv, cc]
                    a[piv, cc] = tmp
            # modular inverse via Fermat
            base = a[rank, c]
            e = p - 2
            inv = 1
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for cc in range(c, cols):
                a[rank, cc] = (a[rank, cc] * inv) % p
            for r in range(rank + 1, rows):
                f = a[r, c]
                if f != 0:
                    for cc in range(c, cols):
                        a[r, cc] = (a[r, cc] - (f * a[rank, cc]) % p) % p
            rank += 1
        return rank

    @numba.njit(cache=True)
    def _mcs_nb(adj):
        nv = adj.shape[0]
        weight = np.zeros(nv, dtype=np.int64)
        done = np.zeros(nv, dtype=np.bool_)
        order = np.empty(nv, dtype=np.int64)
        for step in range(nv):
            best = -1
            bw = -1
            for v in range(nv):
                if not done[v] and weight[v] > bw:
                    bw = weight[v]
                    best = v
            order[nv - 1 - step] = best
            done[best] = True
            for v in range(nv):
                if adj[best, v] != 0:
                    weight[v] += 1
        return order

    @numba.njit(cache=True)
    def _peo_violation_nb(adj, order):
        nv = adj.shape[0]
        pos = np.empty(nv, dtype=np.int64)
        for k in range(nv):
            pos[order[k]] = k
        for k in range(nv):
            v = order[k]
            u = -1
            upos = nv
            for w in range(nv):
                if adj[v, w] != 0 and pos[w] > k and pos[w] < upos:
                    upos = pos[w]
                    u = w
            if u < 0:
                continue
            for w in range(nv):
                if w != u and adj[v, w] != 0 and pos[w] > k and adj[u, w] == 0:
                    return k
        return -1

    @numba.njit(cache=True)
    def _complement_chordal_batch_nb(masks, nx, ny):
        nv = nx + ny
        out = np.empty(masks.shape[0], dtype=np.bool_)
        adj = np.zeros((nv, nv), dtype=np.int64)
        for g in range(masks.shape[0]):
            mask = masks[g]
            for u in range(nv):
                for v in range(nv):
                    adj[u, v] = 0
            for u in range(nx):
                for v in range(nx):
                    if u != v:
                        adj[u, v] = 1
            for u in range(ny):
                for v in range(ny):
                    if u != v:
                        adj[nx + u, nx + v] = 1
            for i in range(nx):
                for j in range(ny):
                    if (mask >> (i * ny + j)) & 1 == 0:
                        adj[i, nx + j] = 1
                        adj[nx + j, i] = 1
            out[g] = _peo_violation_nb(adj, _mcs_nb(adj)) < 0
        return out


# ---------------------------------------------------------------------------
# public dispatch
# ---------------------------------------------------------------------------

def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def rank_mod_p(mat, p: int = PRIME, use_numba: bool | None = None) -> int:
    """Rank of an integer matrix over GF(p)."""
    a = np.array(mat, dtype=np.int64)
    if a.ndim != 2 or a.size == 0:
        return 0
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba:
        return int(_rank_mod_p_nb(np.ascontiguousarray(a % p), np.int64(p)))
    return _rank_mod_p_np(a, p)


def elimination_order(adj, use_numba: bool | None = None):
    """(order, violation) for a 0/1 adjacency matrix; violation < 0 means chordal."""
    a = np.ascontiguousarray(np.asarray(adj, dtype=np.int64))
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if a.shape[0] == 0:
        return np.empty(0, dtype=np.int64), -1
    if use_numba:
        order = _mcs_nb(a)
        return order, int(_peo_violation_nb(a, order))
    order = _mcs_np(a)
    return order, _peo_violation_np(a, order)


def complement_chordal_batch(masks, nx: int, ny: int, use_numba: bool | None = None):
    """Chordality of the complement of each bipartite graph given as an edge bitmask.

    Bit ``i*ny + j`` (0-based) of a mask is the edge x_{i+1} y_{j+1}.
    """
    m = np.ascontiguousarray(np.asarray(masks, dtype=np.int64))
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba:
        return _complement_chordal_batch_nb(m, nx, ny)
    return _complement_chordal_batch_np(m, nx, ny)
