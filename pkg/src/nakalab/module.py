"""Modules over bound quiver algebras as matrix representations over F_p.

An arrow ``a: u -> v`` is stored as a ``dims[u] x dims[v]`` matrix acting on
row vectors, so a path acts by the product of its arrow matrices in path
order.  All simple modules are one-dimensional, so composition length equals
total dimension.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import gf
from .algebra import opposite_algebra
from .errors import BudgetExceeded, InvalidModule


class SubspaceFamily:
    """One subspace per vertex, each an rref row basis inside the fibre of ``module``."""

    def __init__(self, module, bases, reduce=True):
        self.module = module
        p = module.p
        self.bases = {}
        self.pivots = {}
        for v in module.algebra.vertices:
            b = bases.get(v)
            if b is None or b.shape[0] == 0:
                self.bases[v] = gf.zeros(0, module.dims[v])
                self.pivots[v] = ()
            elif reduce:
                self.bases[v], self.pivots[v] = gf.rref(b, p)
            else:
                self.bases[v] = b
                self.pivots[v] = tuple(int(np.nonzero(row)[0][0]) for row in b)

    @property
    def dims(self):
        return {v: b.shape[0] for v, b in self.bases.items()}

    @property
    def dim_vector(self):
        return tuple(self.bases[v].shape[0] for v in self.module.algebra.vertices)

    def __len__(self):
        return sum(b.shape[0] for b in self.bases.values())

    @property
    def is_zero(self):
        return len(self) == 0

    def contains(self, other):
        p = self.module.p
        return all(_in_span(self.bases[v], self.pivots[v], other.bases[v], p) for v in self.bases)

    def __eq__(self, other):
        if not isinstance(other, SubspaceFamily):
            return NotImplemented
        return all(
            self.bases[v].shape == other.bases[v].shape and np.array_equal(self.bases[v], other.bases[v])
            for v in self.bases
        )

    __hash__ = None

    def key(self):
        return tuple(self.bases[v].tobytes() + bytes([self.bases[v].shape[0]]) for v in self.module.algebra.vertices)

    def is_submodule(self):
        m = self.module
        p = m.p
        for a in m.algebra.arrows:
            img = gf.mul(self.bases[a.source], m.mats[a.name], p)
            if not _in_span(self.bases[a.target], self.pivots[a.target], img, p):
                return False
        return True

    def __repr__(self):
        return f"SubspaceFamily(dims={self.dim_vector})"


def _in_span(basis, pivots, vecs, p):
    """Membership test against an rref basis by elimination on the pivot columns."""
    if vecs.shape[0] == 0:
        return True
    if basis.shape[0] == 0:
        return not np.any(vecs % p)
    res = (vecs - vecs[:, list(pivots)] @ basis) % p
    return not np.any(res)


class Representation:
    """A finite-dimensional right module, given by fibre dimensions and arrow matrices."""

    def __init__(self, algebra, dims, mats=None, check=True, name=None):
        self.algebra = algebra
        self.p = algebra.p
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        extra = set(dims) - set(self.dims)
        if extra:
            raise InvalidModule(f"unknown vertices {sorted(extra)}")
        mats = mats or {}
        self.mats = {}
        for a in algebra.arrows:
            shape = (self.dims[a.source], self.dims[a.target])
            m = mats.get(a.name)
            if m is None:
                m = gf.zeros(*shape)
            else:
                m = np.asarray(m, dtype=np.int64) % self.p
                if m.shape != shape:
                    if m.size == 0 and 0 in shape:
                        m = gf.zeros(*shape)
                    else:
                        raise InvalidModule(f"arrow {a.name!r}: matrix shape {m.shape}, expected {shape}")
            self.mats[a.name] = m
        unknown = set(mats) - set(self.mats)
        if unknown:
            raise InvalidModule(f"unknown arrows {sorted(unknown)}")
        self.name = name
        if check:
            bad = self.violated_relation()
            if bad is not None:
                raise InvalidModule(f"relation {' '.join(bad)!r} does not act as zero")

    def violated_relation(self):
        for r in self.algebra.relations:
            if np.any(self.path_matrix(r)):
                return r
        return None

    def path_matrix(self, names):
        first = self.algebra.quiver.arrow(names[0])
        m = gf.eye(self.dims[first.source])
        for n in names:
            m = gf.mul(m, self.mats[n], self.p)
        return m

    @property
    def length(self):
        return sum(self.dims.values())

    def __len__(self):
        return self.length

    @property
    def dim_vector(self):
        return tuple(self.dims[v] for v in self.algebra.vertices)

    @property
    def is_zero(self):
        return self.length == 0

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.dims == other.dims
            and all(np.array_equal(self.mats[k], other.mats[k]) for k in self.mats)
        )

    __hash__ = None

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Representation{label} dim={self.dim_vector}>"

    def whole(self):
        return SubspaceFamily(self, {v: gf.eye(d) for v, d in self.dims.items()}, reduce=False)

    def zero(self):
        return SubspaceFamily(self, {})

    @cached_property
    def radical_series(self):
        return _radical_series(self)

    @cached_property
    def socle_series(self):
        return _socle_series(self)

    @cached_property
    def radical_layer_dims(self):
        s = [len(x) for x in self.radical_series]
        return [a - b for a, b in zip(s, s[1:])]

    @cached_property
    def socle_layer_dims(self):
        s = [0] + [len(x) for x in self.socle_series]
        return [b - a for a, b in zip(s, s[1:])]


# --- constructions -------------------------------------------------------


def simple_module(alg, v):
    return Representation(alg, {v: 1}, name=f"S{v}")


def projective_module(alg, a):
    """``P(a)``: basis the nonzero paths starting at ``a``, arrows act by extension."""
    paths = alg.paths_from(a)
    by_end = {v: [] for v in alg.vertices}
    for path in paths:
        by_end[path.end].append(path)
    index = {path: i for v in by_end for i, path in enumerate(by_end[v])}
    dims = {v: len(x) for v, x in by_end.items()}
    mats = {}
    for arr in alg.arrows:
        m = gf.zeros(dims[arr.source], dims[arr.target])
        for path in by_end[arr.source]:
            ext = alg.extend(path, arr.name)
            if ext is not None:
                m[index[path], index[ext]] = 1
        mats[arr.name] = m
    rep = Representation(alg, dims, mats, check=False, name=f"P{a}")
    rep.basis_paths = by_end
    return rep


def injective_module(alg, a):
    """``I(a)`` as the dual of the projective at ``a`` over the opposite algebra."""
    inj = dualize(projective_module(opposite_algebra(alg), a))
    inj.name = f"I{a}"
    return inj


def dualize(m):
    """Standard duality: same dimensions, transposed matrices on the reversed arrows."""
    op = opposite_algebra(m.algebra)
    return Representation(op, m.dims, {k: x.T.copy() for k, x in m.mats.items()}, check=False,
                          name=f"D({m.name})" if m.name else None)


def direct_sum(modules):
    """Return ``(S, inclusions, projections)`` for the direct sum of ``modules``."""
    if not modules:
        raise ValueError("empty direct sum")
    alg = modules[0].algebra
    dims = {v: sum(m.dims[v] for m in modules) for v in alg.vertices}
    mats = {}
    for a in alg.arrows:
        big = gf.zeros(dims[a.source], dims[a.target])
        r = c = 0
        for m in modules:
            blk = m.mats[a.name]
            big[r : r + blk.shape[0], c : c + blk.shape[1]] = blk
            r += blk.shape[0]
            c += blk.shape[1]
        mats[a.name] = big
    s = Representation(alg, dims, mats, check=False)
    incs, projs = [], []
    offset = {v: 0 for v in alg.vertices}
    for m in modules:
        inc, prj = {}, {}
        for v in alg.vertices:
            d = m.dims[v]
            i = gf.zeros(d, dims[v])
            i[:, offset[v] : offset[v] + d] = gf.eye(d)
            inc[v] = i
            prj[v] = i.T.copy()
            offset[v] += d
        incs.append(inc)
        projs.append(prj)
    return s, incs, projs


def subfamily_image(m, fam, arrow_name):
    a = m.algebra.quiver.arrow(arrow_name)
    return gf.mul(fam.bases[a.source], m.mats[arrow_name], m.p)


def radical(m, fam=None):
    """``rad(N)`` for a submodule ``N`` of ``m`` (default ``N = m``)."""
    fam = fam or m.whole()
    p = m.p
    imgs = {v: [] for v in m.algebra.vertices}
    for a in m.algebra.arrows:
        imgs[a.target].append(gf.mul(fam.bases[a.source], m.mats[a.name], p))
    return SubspaceFamily(m, {v: gf.sum_spaces(x, m.dims[v], p) for v, x in imgs.items()})


def _radical_series(m):
    series = [m.whole()]
    while not series[-1].is_zero:
        nxt = radical(m, series[-1])
        if len(nxt) == len(series[-1]):
            raise InvalidModule("radical series does not terminate (relations not nilpotent)")
        series.append(nxt)
    return series


def _socle_series(m):
    """``[soc^1, soc^2, ..., m]``; ``soc^{k+1}`` is the preimage of the socle of ``m/soc^k``."""
    p = m.p
    q = m.algebra.quiver
    series = []
    prev = m.zero()
    while len(prev) < m.length:
        ann = {v: gf.annihilator(prev.bases[v], m.dims[v], p) for v in m.algebra.vertices}
        bases = {}
        for v in m.algebra.vertices:
            outs = q.out_arrows(v)
            d = m.dims[v]
            blocks = [gf.mul(m.mats[a.name], ann[a.target], p) for a in outs]
            blocks = [b for b in blocks if b.shape[1]]
            if not blocks:
                bases[v] = gf.eye(d)
            else:
                bases[v] = gf.left_kernel(np.hstack(blocks), p)
        cur = SubspaceFamily(m, bases)
        if len(cur) == len(prev):
            raise InvalidModule("socle series does not terminate")
        series.append(cur)
        prev = cur
    return series


def radical_series(m):
    return list(m.radical_series)


def socle_series(m):
    return list(m.socle_series)


def socle(m):
    return m.socle_series[0] if m.socle_series else m.zero()


def length(m):
    return m.length


def loewy_length(m):
    return len(m.radical_series) - 1


def is_local(m):
    """Top is simple; the zero module is not local."""
    return bool(m.radical_layer_dims) and m.radical_layer_dims[0] == 1


def is_uniserial(m):
    return all(d <= 1 for d in m.radical_layer_dims)


def is_colocal(m):
    return bool(m.socle_layer_dims) and m.socle_layer_dims[0] == 1


@dataclass(frozen=True)
class SerialIndexReport:
    index: int
    length: int
    loewy_length: int
    layer_dims: tuple
    witness: int | None
    side: str

    def as_dict(self):
        return {
            "side": self.side,
            "index": self.index,
            "length": self.length,
            "loewyLength": self.loewy_length,
            "layerDims": list(self.layer_dims),
            "witness": self.witness,
        }


def factor_serial_index(m):
    """Factor-serial index from the first non-local radical power.

    ``n = 1`` for uniserial modules, otherwise ``n = l - i`` where ``i`` is
    the least index with ``rad^i(m)`` nonzero and not local.
    """
    if m.is_zero:
        raise ValueError("the zero module has no factor-serial index")
    layers = m.radical_layer_dims
    witness = next((i for i, d in enumerate(layers) if d >= 2), None)
    n = 1 if witness is None else m.length - witness
    return SerialIndexReport(n, m.length, len(layers), tuple(layers), witness, "factor")


def cofactor_serial_index(m):
    """Cofactor-serial index from the socle series: ``n = l - j`` with ``soc^j`` the last uniserial term."""
    if m.is_zero:
        raise ValueError("the zero module has no cofactor-serial index")
    layers = m.socle_layer_dims
    first_wide = next((j for j, d in enumerate(layers, 1) if d >= 2), None)
    if first_wide is None:
        n, witness = 1, None
    else:
        witness = first_wide - 1
        n = m.length - witness
    return SerialIndexReport(n, m.length, len(layers), tuple(layers), witness, "cofactor")


# --- sub- and quotient modules -------------------------------------------


def check_subrepresentation(fam):
    if not fam.is_submodule():
        raise InvalidModule("subspace family is not closed under the arrow actions")


def quotient_with_map(m, fam):
    """``(m / fam, projection)`` with the quotient in complement coordinates."""
    check_subrepresentation(fam)
    p = m.p
    proj, free = {}, {}
    for v in m.algebra.vertices:
        proj[v], free[v] = gf.quotient_projection(fam.bases[v], fam.pivots[v], m.dims[v], p)
    dims = {v: len(free[v]) for v in m.algebra.vertices}
    mats = {}
    for a in m.algebra.arrows:
        rows = m.mats[a.name][free[a.source], :]
        mats[a.name] = gf.mul(rows, proj[a.target], p)
    return Representation(m.algebra, dims, mats, check=False), proj


def quotient_by(m, fam):
    return quotient_with_map(m, fam)[0]


def submodule_with_map(m, fam):
    """``(fam as a module, inclusion into m)``."""
    check_subrepresentation(fam)
    p = m.p
    mats = {}
    for a in m.algebra.arrows:
        img = gf.mul(fam.bases[a.source], m.mats[a.name], p)
        mats[a.name] = gf.coordinates(fam.bases[a.target], fam.pivots[a.target], img, p)
    sub = Representation(m.algebra, fam.dims, mats, check=False)
    return sub, {v: fam.bases[v].copy() for v in m.algebra.vertices}


def submodule(m, fam):
    return submodule_with_map(m, fam)[0]


def generated_submodule(m, vectors):
    """Smallest submodule containing the given vectors (``vertex -> rows``)."""
    p = m.p
    cur = SubspaceFamily(m, {v: np.asarray(x, dtype=np.int64) for v, x in vectors.items()})
    while True:
        nxt = {v: [cur.bases[v]] for v in m.algebra.vertices}
        for a in m.algebra.arrows:
            nxt[a.target].append(gf.mul(cur.bases[a.source], m.mats[a.name], p))
        new = SubspaceFamily(m, {v: gf.sum_spaces(x, m.dims[v], p) for v, x in nxt.items()})
        if len(new) == len(cur):
            return new
        cur = new


def simple_submodules(m):
    """Every one-dimensional submodule (each lies in some socle fibre)."""
    p = m.p
    soc = socle(m)
    out = []
    for v in m.algebra.vertices:
        b = soc.bases[v]
        k = b.shape[0]
        for coeffs in itertools.product(range(p), repeat=k):
            c = np.array(coeffs, dtype=np.int64)
            nz = np.nonzero(c)[0]
            if nz.size == 0 or c[nz[0]] != 1:
                continue
            vec = (c @ b) % p
            out.append(SubspaceFamily(m, {v: vec.reshape(1, -1)}))
    return out


# --- homomorphisms -------------------------------------------------------


def hom_basis(m, n):
    """Basis of ``Hom(m, n)``; each element maps vertex -> ``dims_m(v) x dims_n(v)`` matrix.

    Solves ``f_{s(a)} n_a = m_a f_{t(a)}`` for every arrow over F_p.
    """
    alg = m.algebra
    if n.algebra != alg:
        raise ValueError("modules over different algebras")
    p = m.p
    offsets, total = {}, 0
    for v in alg.vertices:
        offsets[v] = total
        total += m.dims[v] * n.dims[v]
    if total == 0:
        return []
    rows = []
    for a in alg.arrows:
        u, w = a.source, a.target
        du, dw = m.dims[u], n.dims[w]
        if du == 0 or dw == 0:
            continue
        eq = gf.zeros(du * dw, total)
        if m.dims[w]:
            eq[:, offsets[w] : offsets[w] + m.dims[w] * dw] += np.kron(m.mats[a.name], gf.eye(dw))
        if n.dims[u]:
            eq[:, offsets[u] : offsets[u] + du * n.dims[u]] -= np.kron(gf.eye(du), n.mats[a.name].T)
        rows.append(eq % p)
    if rows:
        kernel = gf.right_kernel(np.vstack(rows), p)
    else:
        kernel = gf.eye(total)
    basis = []
    for vec in kernel:
        f = {}
        for v in alg.vertices:
            dm, dn = m.dims[v], n.dims[v]
            f[v] = vec[offsets[v] : offsets[v] + dm * dn].reshape(dm, dn).copy()
        basis.append(f)
    return basis


def compose(f, g, p):
    """``g after f`` for row-vector maps: ``x -> (x f) g``."""
    return {v: gf.mul(f[v], g[v], p) for v in f}


def hom_combination(basis, coeffs, p, template=None):
    out = {}
    keys = basis[0].keys() if basis else template.keys()
    for v in keys:
        acc = None
        for c, f in zip(coeffs, basis):
            if c:
                acc = (c * f[v]) if acc is None else acc + c * f[v]
        out[v] = (acc % p) if acc is not None else np.zeros_like(basis[0][v] if basis else template[v])
    return out


def identity_map(m):
    return {v: gf.eye(d) for v, d in m.dims.items()}


def is_homomorphism(f, m, n):
    p = m.p
    for a in m.algebra.arrows:
        lhs = gf.mul(f[a.source], n.mats[a.name], p)
        rhs = gf.mul(m.mats[a.name], f[a.target], p)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def map_rank(f, p):
    return sum(gf.rank(x, p) for x in f.values())


def map_power(f, k, p):
    out = {v: gf.eye(x.shape[0]) for v, x in f.items()}
    base = f
    while k:
        if k & 1:
            out = compose(out, base, p)
        base = compose(base, base, p)
        k >>= 1
    return out


def is_nilpotent(f, length, p):
    return map_rank(map_power(f, length, p), p) == 0


def flatten_map(f, vertices):
    return np.concatenate([f[v].reshape(-1) for v in vertices]) if vertices else np.zeros(0, np.int64)


# --- indecomposability ---------------------------------------------------


@dataclass(frozen=True)
class Indecomposability:
    value: bool
    certainty: str  # "proved" or "heuristic"
    witness: dict | None = None

    def __bool__(self):
        return self.value


def _rng():
    seed = os.environ.get("NAKALAB_SEED", "0")
    return random.Random(int(seed) if seed.lstrip("-").isdigit() else seed)


def _splitting_endomorphism(m, basis, budget, exhaustive_budget):
    """An endomorphism whose ``length``-th power has rank strictly between 0 and dim m.

    Returns ``(f, exhausted)``; ``exhausted`` means every element of End(m) was tried.
    """
    p = m.p
    l = m.length

    def splits(f):
        r = map_rank(map_power(f, l, p), p)
        return 0 < r < l

    for f in basis:
        if splits(f):
            return f, False
    k = len(basis)
    if p ** k <= exhaustive_budget:
        for coeffs in itertools.product(range(p), repeat=k):
            if sum(1 for c in coeffs if c) < 2:
                continue
            f = hom_combination(basis, coeffs, p)
            if splits(f):
                return f, False
        return None, True
    rng = _rng()
    for _ in range(budget):
        coeffs = [rng.randrange(p) for _ in range(k)]
        f = hom_combination(basis, coeffs, p)
        if splits(f):
            return f, False
    return None, False


def is_indecomposable(m, budget=256, exhaustive_budget=4096):
    """Fitting-lemma test.

    Proved when End(m) is one-dimensional or was searched exhaustively;
    otherwise a negative search result is reported as ``heuristic``.
    """
    if m.is_zero:
        return Indecomposability(False, "proved")
    basis = hom_basis(m, m)
    if len(basis) == 1:
        return Indecomposability(True, "proved")
    f, exhausted = _splitting_endomorphism(m, basis, budget, exhaustive_budget)
    if f is not None:
        return Indecomposability(False, "proved", f)
    return Indecomposability(True, "proved" if exhausted else "heuristic")


def decompose(m, budget=256, exhaustive_budget=4096):
    """Split ``m`` into summands by Fitting decomposition ``ker(g) + im(g)``, recursively."""
    if m.is_zero:
        return []
    res = is_indecomposable(m, budget, exhaustive_budget)
    if res.value:
        return [m]
    p = m.p
    g = map_power(res.witness, m.length, p)
    ker = SubspaceFamily(m, {v: gf.left_kernel(g[v], p) for v in m.algebra.vertices})
    img = SubspaceFamily(m, {v: gf.row_space(g[v], p) for v in m.algebra.vertices})
    return decompose(submodule(m, ker), budget, exhaustive_budget) + decompose(
        submodule(m, img), budget, exhaustive_budget
    )


def is_isomorphic(m, n):
    """Isomorphism test for an indecomposable ``m`` (End(m) local).

    ``m ~ n`` iff some ``g f`` (``f: m -> n``, ``g: n -> m`` from hom bases)
    is not nilpotent: non-nilpotent elements of a local ring are invertible,
    and the non-invertible ones form a subspace.
    """
    if m.dims != n.dims or m.algebra != n.algebra:
        return False
    if m.is_zero:
        return True
    p = m.p
    fs = hom_basis(m, n)
    if not fs:
        return False
    gs = hom_basis(n, m)
    for f in fs:
        for g in gs:
            if not is_nilpotent(compose(f, g, p), m.length, p):
                return True
    return False


def _stack(vecs, width):
    if not vecs:
        return np.zeros((0, width), dtype=np.int64)
    return np.array(vecs, dtype=np.int64)


def endomorphism_radical(m, exhaustive_budget=1 << 14):
    """Basis (flattened) of the non-invertible endomorphisms of an indecomposable ``m``.

    Enumerates End(m) when small enough and checks the non-invertible
    elements form a subspace; for local modules it falls back to the kernel
    of the action on the simple top.  Returns ``(basis_matrix, end_basis)``.
    """
    p = m.p
    verts = m.algebra.vertices
    basis = hom_basis(m, m)
    k = len(basis)
    if p ** k <= exhaustive_budget:
        non_inv = []
        for coeffs in itertools.product(range(p), repeat=k):
            f = hom_combination(basis, coeffs, p)
            if map_rank(f, p) < m.length:
                non_inv.append(np.array(coeffs, dtype=np.int64))
        span = gf.row_space(np.array(non_inv), p)
        if p ** span.shape[0] != len(non_inv):
            raise ValueError("non-invertible endomorphisms do not form a subspace: End is not local")
        vecs = [flatten_map(hom_combination(basis, c, p), verts) for c in span]
        return _stack(vecs, sum(m.dims[v] ** 2 for v in verts)), basis
    if not is_local(m):
        raise BudgetExceeded("End(m) too large to enumerate and m is not local")
    # f is invertible iff it is nonzero on the one-dimensional top
    radv = m.radical_series[1]
    top = next(v for v in verts if radv.bases[v].shape[0] < m.dims[v])
    proj, free = gf.quotient_projection(radv.bases[top], radv.pivots[top], m.dims[top], p)
    x = gf.zeros(1, m.dims[top])
    x[0, free[0]] = 1
    chi = np.array([int(gf.mul(gf.mul(x, f[top], p), proj, p)[0, 0]) for f in basis], dtype=np.int64)
    coeff_ker = gf.right_kernel(chi.reshape(1, -1), p)
    vecs = [flatten_map(hom_combination(basis, c, p), verts) for c in coeff_ker]
    return _stack(vecs, sum(m.dims[v] ** 2 for v in verts)), basis


# --- exhaustive submodule oracle -----------------------------------------

_SUBSPACES = {}


def _subspaces(n, p):
    key = (n, p)
    if key not in _SUBSPACES:
        out = []
        for b in gf.all_subspaces(n, p):
            piv = tuple(int(np.nonzero(row)[0][0]) for row in b)
            out.append((b, piv))
        _SUBSPACES[key] = out
    return _SUBSPACES[key]


def enumerate_submodules(m, budget=1 << 12):
    """Every submodule of ``m`` (brute force; requires ``p ** dim m <= budget``)."""
    if m.p ** m.length > budget:
        raise BudgetExceeded(f"{m.p}^{m.length} exceeds the submodule budget {budget}")
    p = m.p
    alg = m.algebra
    order = list(alg.vertices)
    pos = {v: i for i, v in enumerate(order)}
    checks = {v: [] for v in order}
    for a in alg.arrows:
        later = order[max(pos[a.source], pos[a.target])]
        checks[later].append(a)
    out = []
    chosen = {}

    def rec(i):
        if i == len(order):
            out.append(SubspaceFamily(m, {v: b for v, (b, _) in chosen.items()}, reduce=False))
            return
        v = order[i]
        for b, piv in _subspaces(m.dims[v], p):
            chosen[v] = (b, piv)
            ok = True
            for a in checks[v]:
                sb, _ = chosen[a.source]
                tb, tpiv = chosen[a.target]
                if not _in_span(tb, tpiv, gf.mul(sb, m.mats[a.name], p), p):
                    ok = False
                    break
            if ok:
                rec(i + 1)
        del chosen[v]

    rec(0)
    return out


def module_report(m):
    """Summary used by the CLI ``module`` command (JSON-ready)."""
    return {
        "dimVector": list(m.dim_vector),
        "length": m.length,
        "loewyLength": loewy_length(m),
        "local": is_local(m),
        "uniserial": is_uniserial(m),
        "factorIndex": factor_serial_index(m).index,
        "cofactorIndex": cofactor_serial_index(m).index,
        "radicalLayerDims": list(m.radical_layer_dims),
        "socleLayerDims": list(m.socle_layer_dims),
        "radicalSeries": [list(f.dim_vector) for f in m.radical_series],
        "socleSeries": [list(f.dim_vector) for f in m.socle_series],
    }
