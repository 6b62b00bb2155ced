"""Hot inner loops over Cayley tables: subgroup closure and the pair sweep of
the iterated-commutator word.

Each kernel has a numba ``@njit`` build and a vectorized pure-numpy build.
``FORMATIONLAB_NO_JIT=1`` (or numba being unavailable) selects the numpy path;
both are importable by name so tests and benchmarks can compare them directly.

Conventions: ``mul`` is an (n, n) int32 table with ``mul[i, j]`` the index of
"element i then element j"; index 0 is the identity; ``inv[i]`` is the index
of the inverse.  Masks are boolean arrays of length n.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "JIT_ENABLED",
    "close_mask",
    "close_mask_np",
    "brandl_sweep",
    "brandl_sweep_np",
    "negative_power_table",
]

_WANT_JIT = os.environ.get("FORMATIONLAB_NO_JIT", "").strip().lower() not in {
    "1",
    "true",
    "yes",
}

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

JIT_ENABLED = _WANT_JIT and _HAVE_NUMBA


def close_mask_np(mul: np.ndarray, base: np.ndarray, extra: np.ndarray) -> np.ndarray:
    """Close ``base | extra`` under the table product.

    ``base`` must already be product-closed (it may be all-False); only
    products touching the new elements are expanded.  In a finite group,
    closure under the product alone also yields inverses and the identity.
    """
    mask = base | extra
    frontier = np.flatnonzero(extra & ~base)
    while frontier.size:
        members = np.flatnonzero(mask)
        prods = np.concatenate(
            (
                mul[np.ix_(frontier, members)].ravel(),
                mul[np.ix_(members, frontier)].ravel(),
            )
        )
        new = np.zeros_like(mask)
        new[prods] = True
        new &= ~mask
        mask |= new
        frontier = np.flatnonzero(new)
    return mask


def _close_mask_loop(mul, base, extra):
    n = mul.shape[0]
    mask = np.empty(n, np.bool_)
    order = np.empty(n, np.int64)
    m = 0
    for i in range(n):
        mask[i] = base[i]
        if base[i]:
            order[m] = i
            m += 1
    head = m  # members of base are mutually closed; start the worklist after them
    for i in range(n):
        if extra[i] and not mask[i]:
            mask[i] = True
            order[m] = i
            m += 1
    while head < m:
        x = order[head]
        head += 1
        t = 0
        snapshot = m
        while t < snapshot:
            y = order[t]
            t += 1
            p = mul[x, y]
            if not mask[p]:
                mask[p] = True
                order[m] = p
                m += 1
            p = mul[y, x]
            if not mask[p]:
                mask[p] = True
                order[m] = p
                m += 1
        # pairs with elements appended after the snapshot are handled when
        # those elements reach the head of the worklist
    return mask


def negative_power_table(mul: np.ndarray, inv: np.ndarray, e: int) -> np.ndarray:
    """Table P with P[v, j] = v^(-j) for 0 <= j < e, where e is a multiple of
    every element order (the group exponent)."""
    n = mul.shape[0]
    table = np.empty((n, e), dtype=np.int32)
    table[:, 0] = 0  # v^0 is the identity
    for j in range(1, e):
        table[:, j] = mul[table[:, j - 1], inv]
    return table


def _brandl_sweep_loop(mul, inv, pow_neg, e):
    """Scan ordered pairs (x, y) in index order; for each, iterate
    u_{k+1} = u_k^(-k) * (u_k^-1 y^-1 u_k y) from u_1 = [x, y].

    Returns (status, x, y): status 1 = every pair reaches the identity,
    0 = (x, y) is the first pair whose (value, k mod e) state repeats,
    -2 = iteration cap breached without a repeat (an invariant violation).
    """
    n = mul.shape[0]
    cap = n * e + 1
    visited = np.zeros(n * e, np.bool_)
    touched = np.empty(n * e, np.int64)
    for x in range(n):
        ix = inv[x]
        for y in range(n):
            v = mul[mul[mul[ix, inv[y]], x], y]
            k = 1
            nt = 0
            ok = False
            overflow = False
            while True:
                if v == 0:
                    ok = True
                    break
                s = v * e + (k % e)
                if visited[s]:
                    break
                visited[s] = True
                touched[nt] = s
                nt += 1
                c = mul[mul[mul[inv[v], inv[y]], v], y]
                v = mul[pow_neg[v, k % e], c]
                k += 1
                if k > cap:
                    overflow = True
                    break
            for t in range(nt):
                visited[touched[t]] = False
            if overflow:
                return -2, x, y
            if not ok:
                return 0, x, y
    return 1, -1, -1


def brandl_sweep_np(mul, inv, pow_neg, e, chunk: int = 8192):
    """Numpy twin of the pair sweep: pairs advance in lockstep, chunked in
    index order so the reported witness is still the least failing pair.

    A pair still unterminated after n*e + 1 values has revisited a
    (value, k mod e) state by pigeonhole, hence never terminates.
    """
    n = mul.shape[0]
    cap = n * e + 1
    for start in range(0, n * n, chunk):
        ids = np.arange(start, min(start + chunk, n * n), dtype=np.int64)
        x = ids // n
        y = ids % n
        v = mul[mul[mul[inv[x], inv[y]], x], y]
        alive = v != 0
        ids, y, v = ids[alive], y[alive], v[alive]
        k = 1
        while ids.size and k <= cap:
            c = mul[mul[mul[inv[v], inv[y]], v], y]
            v = mul[pow_neg[v, k % e], c]
            k += 1
            keep = v != 0
            if not keep.all():
                ids, y, v = ids[keep], y[keep], v[keep]
        if ids.size:
            bad = int(ids[0])
            return 0, bad // n, bad % n
    return 1, -1, -1


if _HAVE_NUMBA:
    _close_mask_jit = njit(cache=True)(_close_mask_loop)
    _brandl_sweep_jit = njit(cache=True)(_brandl_sweep_loop)

if JIT_ENABLED:
    close_mask = _close_mask_jit
    brandl_sweep = _brandl_sweep_jit
else:
    close_mask = close_mask_np
    brandl_sweep = brandl_sweep_np
