"""Exact linear algebra over the prime field F_p.

Vectors are rows; a matrix ``A`` of shape ``(m, n)`` is the linear map
``x -> x @ A`` from F_p^m to F_p^n.  Subspaces are stored as row bases in
reduced row echelon form.

The row-reduction kernel comes from the compiled ``_gfcore`` extension when
it is importable; otherwise the numpy fallback is used.  ``NAKALAB_PURE=1``
forces the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _gf_fallback

if os.environ.get("NAKALAB_PURE") == "1":
    _core = _gf_fallback
else:
    try:
        from . import _gfcore as _core
    except ImportError:  # pragma: no cover - depends on build
        _core = _gf_fallback

BACKEND = "compiled" if _core is not _gf_fallback else "python"


def use_backend(name):
    """Switch the row-reduction kernel ('compiled' or 'python'); returns the old name."""
    global _core, BACKEND
    old = BACKEND
    if name == "python":
        _core = _gf_fallback
    elif name == "compiled":
        from . import _gfcore

        _core = _gfcore
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
    return old


def zeros(m, n):
    return np.zeros((m, n), dtype=np.int64)


def eye(n):
    return np.eye(n, dtype=np.int64)


def mul(a, b, p):
    """Matrix product mod p, tolerant of empty shapes."""
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return (a @ b) % p


def rref(a, p):
    """Return ``(rows, pivots)``: the nonzero rref rows of ``a`` and its pivot columns."""
    a = np.asarray(a, dtype=np.int64)
    if a.shape[0] == 0 or a.shape[1] == 0:
        return zeros(0, a.shape[1]), ()
    return _core.rref(a, p)


def rank(a, p):
    a = np.asarray(a, dtype=np.int64)
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    return _core.rank(a, p)


def row_space(a, p):
    """Canonical (rref) basis of the row space of ``a``."""
    return rref(a, p)[0]


def right_kernel(a, p):
    """Basis (as rows) of ``{x : a @ x = 0}``, i.e. column vectors killed by ``a``."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[1]
    if n == 0:
        return zeros(0, 0)
    r, pivots = rref(a, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = zeros(len(free), n)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, fc]) % p
    return basis


def left_kernel(a, p):
    """Basis of ``{x : x @ a = 0}`` (row vectors)."""
    a = np.asarray(a, dtype=np.int64)
    return right_kernel(a.T, p)


def annihilator(basis, n, p):
    """Matrix ``Q`` (n x (n - k)) with ``{y : y @ Q = 0}`` equal to the row space of ``basis``.

    ``y -> y @ Q`` is a quotient map F_p^n -> F_p^n / span(basis).
    """
    if basis.shape[0] == 0:
        return eye(n)
    return right_kernel(basis, p).T.copy()


def sum_spaces(spaces, n, p):
    """Row-space sum of several row bases living in F_p^n."""
    blocks = [s for s in spaces if s.shape[0]]
    if not blocks:
        return zeros(0, n)
    return row_space(np.vstack(blocks), p)


def intersect(a, b, p):
    """Intersection of the row spaces of ``a`` and ``b``."""
    n = a.shape[1]
    if a.shape[0] == 0 or b.shape[0] == 0:
        return zeros(0, n)
    # x a = y b  <=>  (x, -y) kills [a; b]
    k = left_kernel(np.vstack([a, b]), p)
    if k.shape[0] == 0:
        return zeros(0, n)
    return row_space(mul(k[:, : a.shape[0]], a, p), p)


def contains(space, vecs, p):
    """True iff every row of ``vecs`` lies in the row space of ``space``."""
    if vecs.shape[0] == 0:
        return True
    if space.shape[0] == 0:
        return not np.any(vecs % p)
    return rank(np.vstack([space, vecs]), p) == rank(space, p)


def coordinates(basis, pivots, vecs, p):
    """Coordinates of ``vecs`` (rows) w.r.t. an rref ``basis`` with given pivots.

    Assumes membership; read off the pivot columns.
    """
    if len(pivots) == 0:
        return zeros(vecs.shape[0], 0)
    return np.asarray(vecs, dtype=np.int64)[:, list(pivots)] % p


def quotient_projection(basis, pivots, n, p):
    """Projection F_p^n -> F_p^n / span(basis) in complement coordinates.

    The complement is spanned by the standard vectors at the non-pivot
    columns of the rref ``basis``; returns ``(P, free)`` with ``P`` of shape
    ``n x len(free)``.
    """
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    proj = zeros(n, len(free))
    col_of = {c: j for j, c in enumerate(free)}
    for c in free:
        proj[c, col_of[c]] = 1
    for i, pc in enumerate(pivots):
        for c in free:
            proj[pc, col_of[c]] = (-basis[i, c]) % p
    return proj, free


def inverse(a, p):
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return zeros(0, 0)
    r, pivots = rref(np.hstack([a, eye(n)]), p)
    if pivots[n - 1] != n - 1:
        raise ValueError("matrix is singular mod p")
    return r[:, n:].copy()


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def all_subspaces(n, p):
    """Every subspace of F_p^n as an rref row basis (including 0 and the whole space)."""
    import itertools

    out = []
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            # free entries: (i, c) with c > pivots[i], c not a pivot
            slots = [
                (i, c)
                for i in range(k)
                for c in range(pivots[i] + 1, n)
                if c not in pivots
            ]
            for values in itertools.product(range(p), repeat=len(slots)):
                m = zeros(k, n)
                for i, pc in enumerate(pivots):
                    m[i, pc] = 1
                for (i, c), v in zip(slots, values):
                    m[i, c] = v
                out.append(m)
    return out


def count_subspaces(n, p):
    """Number of subspaces of F_p^n (sum of Gaussian binomials)."""
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total
