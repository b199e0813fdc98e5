"""Subset-enumeration kernels.

Both backends return an int64 array ``out[block, cls, b, s]`` counting subsets ``S``
with ``|B(S)| = b`` and ``|S| = s``, split by membership prefix block and by a class
code for up to two marked vertices ``u`` and ``v`` (unused marks are -1):

    bit0  u in S
    bit1  v in S
    bit2  N(u) & (S - {v}) nonempty
    bit3  N(v) & (S - {u}) nonempty

* ``numba``: reflected Gray code inside each block; a flip of vertex ``w`` updates
  the per-vertex neighbour-in-S counters and the boundary size in O(d(w)).
* ``numpy``: vectorised recomputation of ``B(S)`` from bitmasks, chunk by chunk.

The backend defaults to ``numba`` when importable; set ``BOUNDPOLY_BACKEND=numpy``
to force the fallback.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

try:
    import numba
    from numba import njit, prange

    HAVE_NUMBA = True
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # skip the TBB probe, which warns on old TBB installs
        numba.config.THREADING_LAYER = "workqueue"
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

N_CLASSES = 16
_CHUNK = 1 << 16


def default_backend() -> str:
    env = os.environ.get("BOUNDPOLY_BACKEND", "").strip().lower()
    if env in ("numpy", "numba"):
        if env == "numba" and not HAVE_NUMBA:
            raise RuntimeError("BOUNDPOLY_BACKEND=numba but numba is not installed")
        return env
    if env:
        raise RuntimeError(f"BOUNDPOLY_BACKEND must be 'numba' or 'numpy', got {env!r}")
    return "numba" if HAVE_NUMBA else "numpy"


def available_backends() -> list[str]:
    return ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]


def prefix_bits(n: int, workers: int) -> int:
    """Number of top vertex-membership bits fixed per block."""
    return min(n, math.ceil(math.log2(4 * max(1, workers))))


# -- numba backend --------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _class_code(S, cnt, adj, u, v):
        code = 0
        if u >= 0:
            code |= (S >> u) & 1
        if v >= 0:
            code |= ((S >> v) & 1) << 1
        if u >= 0:
            c = cnt[u]
            if v >= 0 and (adj[u] >> v) & 1 and (S >> v) & 1:
                c -= 1
            if c > 0:
                code |= 4
        if v >= 0:
            c = cnt[v]
            if u >= 0 and (adj[v] >> u) & 1 and (S >> u) & 1:
                c -= 1
            if c > 0:
                code |= 8
        return code

    @njit(cache=True)
    def _gray_block(adj, ptr, idx, n, low, block, u, v, out):
        """Enumerate the 2**low subsets whose top bits equal ``block``."""
        S = np.int64(block) << low
        cnt = np.zeros(n, np.int64)
        size = 0
        for w in range(n):
            if (S >> w) & 1:
                size += 1
                for k in range(ptr[w], ptr[w + 1]):
                    cnt[idx[k]] += 1
        b = 0
        for w in range(n):
            if not (S >> w) & 1 and cnt[w] > 0:
                b += 1
        marked = u >= 0 or v >= 0
        cls = _class_code(S, cnt, adj, u, v) if marked else 0
        out[cls, b, size] += 1
        for step in range(1, np.int64(1) << low):
            w = 0
            t = step
            while not t & 1:
                t >>= 1
                w += 1
            bit = np.int64(1) << w
            if S & bit:
                S ^= bit
                size -= 1
                for k in range(ptr[w], ptr[w + 1]):
                    z = idx[k]
                    cnt[z] -= 1
                    if cnt[z] == 0 and not (S >> z) & 1:
                        b -= 1
                if cnt[w] > 0:
                    b += 1
            else:
                if cnt[w] > 0:
                    b -= 1
                S |= bit
                size += 1
                for k in range(ptr[w], ptr[w + 1]):
                    z = idx[k]
                    cnt[z] += 1
                    if cnt[z] == 1 and not (S >> z) & 1:
                        b += 1
            cls = _class_code(S, cnt, adj, u, v) if marked else 0
            out[cls, b, size] += 1

    @njit(cache=True)
    def _enumerate_serial(adj, ptr, idx, n, t, u, v, ncls):
        nblocks = 1 << t
        out = np.zeros((nblocks, ncls, n + 1, n + 1), np.int64)
        for blk in range(nblocks):
            _gray_block(adj, ptr, idx, n, n - t, blk, u, v, out[blk])
        return out

    @njit(cache=True, parallel=True)
    def _enumerate_parallel(adj, ptr, idx, n, t, u, v, ncls):
        nblocks = 1 << t
        out = np.zeros((nblocks, ncls, n + 1, n + 1), np.int64)
        for blk in prange(nblocks):
            _gray_block(adj, ptr, idx, n, n - t, blk, u, v, out[blk])
        return out


def _csr(adj: np.ndarray, n: int):
    ptr = np.zeros(n + 1, np.int64)
    nbrs = []
    for w in range(n):
        row = [z for z in range(n) if (int(adj[w]) >> z) & 1]
        nbrs.extend(row)
        ptr[w + 1] = ptr[w] + len(row)
    return ptr, np.asarray(nbrs, dtype=np.int64)


def _run_numba(adj, n, t, u, v, ncls, workers):
    ptr, idx = _csr(adj, n)
    if workers > 1:
        prev = numba.get_num_threads()
        numba.set_num_threads(min(workers, numba.config.NUMBA_NUM_THREADS))
        try:
            return _enumerate_parallel(adj, ptr, idx, n, t, u, v, ncls)
        finally:
            numba.set_num_threads(prev)
    return _enumerate_serial(adj, ptr, idx, n, t, u, v, ncls)


# -- numpy backend --------------------------------------------------------------


def _numpy_block(adj, n, low, blk, u, v, ncls):
    out = np.zeros(ncls * (n + 1) * (n + 1), np.int64)
    prefix = np.int64(blk) << low
    total = 1 << low
    for start in range(0, total, _CHUNK):
        S = prefix | np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        reach = np.zeros_like(S)
        for w in range(n):
            reach |= np.where((S >> w) & 1 == 1, adj[w], 0)
        b = np.bitwise_count(reach & ~S).astype(np.int64)
        s = np.bitwise_count(S).astype(np.int64)
        cls = np.zeros_like(S)
        if u >= 0:
            cls |= (S >> u) & 1
            other = ~(np.int64(1) << v) if v >= 0 else np.int64(-1)
            cls |= np.where(adj[u] & S & other != 0, 4, 0)
        if v >= 0:
            cls |= ((S >> v) & 1) << 1
            other = ~(np.int64(1) << u) if u >= 0 else np.int64(-1)
            cls |= np.where(adj[v] & S & other != 0, 8, 0)
        flat = (cls * (n + 1) + b) * (n + 1) + s
        out += np.bincount(flat, minlength=out.size)
    return out.reshape(ncls, n + 1, n + 1)


def _run_numpy(adj, n, t, u, v, ncls, workers):
    low = n - t
    blocks = range(1 << t)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda k: _numpy_block(adj, n, low, k, u, v, ncls), blocks))
    else:
        parts = [_numpy_block(adj, n, low, k, u, v, ncls) for k in blocks]
    return np.stack(parts)


def enumerate_counts(
    adj: tuple[int, ...],
    u: int = -1,
    v: int = -1,
    *,
    workers: int = 1,
    backend: str | None = None,
) -> np.ndarray:
    """Class-split counts summed over blocks: ``out[cls, b, s]``.

    With no marks the result has a single class.
    """
    n = len(adj)
    if n > 62:
        raise ValueError("subset enumeration limited to 62 vertices")
    backend = backend or default_backend()
    ncls = N_CLASSES if (u >= 0 or v >= 0) else 1
    arr = np.asarray(adj, dtype=np.int64)
    t = prefix_bits(n, workers)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        blocks = _run_numba(arr, n, t, u, v, ncls, workers)
    elif backend == "numpy":
        blocks = _run_numpy(arr, n, t, u, v, ncls, workers)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return blocks.sum(axis=0)
