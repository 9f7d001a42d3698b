"""Row reduction over F_p in plain numpy.

Used when the compiled ``_gfcore`` extension is unavailable, or when
``NAKALAB_PURE=1`` is set in the environment.
"""

from __future__ import annotations

import numpy as np


def rref(a, p):
    """Reduced row echelon form of ``a`` over F_p.

    Returns ``(rows, pivots)`` where ``rows`` holds only the nonzero rows
    (shape ``rank x ncols``) and ``pivots`` is a tuple of pivot columns.
    """
    m = np.array(a, dtype=np.int64, copy=True) % p
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        if inv != 1:
            m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


def rank(a, p):
    return rref(a, p)[0].shape[0]
