"""Almost split sequences over right 2-Nakayama algebras and their AR quiver.

Every term is built as a subquotient ``X/Y`` of one indecomposable projective
``P``, so all maps in a sequence are the canonical maps ``X/Y -> X'/Y'``
(``X`` in ``X'``, ``Y`` in ``Y'``) written in explicit coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import gf
from .classify import require_index_at_most_two, two_nakayama_indecomposables
from .module import (
    Representation,
    SubspaceFamily,
    compose,
    decompose,
    endomorphism_radical,
    flatten_map,
    hom_basis,
    is_homomorphism,
    is_indecomposable,
    is_isomorphic,
    is_uniserial,
    projective_module,
    submodule,
)


class Subquotient:
    """``X/Y`` for submodules ``Y <= X`` of ``P``, with lifts of its basis into ``X``."""

    def __init__(self, P, X, Y, name=None):
        p = P.p
        self.P, self.X, self.Y = P, X, Y
        self.proj, self.piv, self.lift = {}, {}, {}
        dims = {}
        for v in P.algebra.vertices:
            proj, _ = gf.quotient_projection(Y.bases[v], Y.pivots[v], P.dims[v], p)
            k = gf.mul(X.bases[v], proj, p)
            nx = X.bases[v].shape[0]
            if nx:
                r, piv = gf.rref(np.hstack([k, gf.eye(nx)]), p)
                keep = [i for i, c in enumerate(piv) if c < k.shape[1]]
                t = r[keep, k.shape[1] :]
                piv = tuple(piv[i] for i in keep)
                lift = gf.mul(t, X.bases[v], p)
            else:
                piv, lift = (), gf.zeros(0, P.dims[v])
            self.proj[v], self.piv[v], self.lift[v] = proj, piv, lift
            dims[v] = len(piv)
        mats = {}
        for a in P.algebra.arrows:
            img = gf.mul(gf.mul(self.lift[a.source], P.mats[a.name], p), self.proj[a.target], p)
            mats[a.name] = self.coords(a.target, img)
        self.module = Representation(P.algebra, dims, mats, check=False, name=name)

    def coords(self, v, rows_in_quotient):
        if not self.piv[v]:
            return gf.zeros(rows_in_quotient.shape[0], 0)
        return rows_in_quotient[:, list(self.piv[v])] % self.P.p

    def map_to(self, other):
        """The canonical map ``self -> other`` (requires X <= X', Y <= Y')."""
        p = self.P.p
        return {
            v: other.coords(v, gf.mul(self.lift[v], other.proj[v], p)) for v in self.P.algebra.vertices
        }


def _negate(f, p):
    return {v: (-x) % p for v, x in f.items()}


def _hcat(f1, f2):
    return {v: np.hstack([f1[v], f2[v]]) for v in f1}


def _vcat(g1, g2):
    return {v: np.vstack([g1[v], g2[v]]) for v in g1}


@dataclass
class ARSequence:
    left: Representation
    middle: Representation
    right: Representation
    f: dict
    g: dict
    summands: list
    case: str
    projective: Representation | None = None

    def describe(self):
        mid = " + ".join(m.name or str(m.dim_vector) for m in self.summands if not m.is_zero) or "0"
        return f"0 -> {self.left.name} -> {mid} -> {self.right.name} -> 0   (case {self.case})"


def _direct(P, terms):
    """Direct sum of subquotient terms as a module with block maps."""
    from .module import direct_sum

    mods = [t.module for t in terms]
    s, _, _ = direct_sum(mods)
    return s


def _top_vertex(m):
    rad = m.radical_series[1]
    tops = [v for v in m.algebra.vertices if rad.bases[v].shape[0] < m.dims[v]]
    if len(tops) != 1:
        raise ValueError("module is not local")
    return tops[0]


def almost_split_sequence(alg, M, require_2nakayama=True):
    """The almost split sequence ending at the non-projective indecomposable ``M``.

    ``require_2nakayama=False`` skips the quiver test, which still gives the
    right sequence whenever every projective is uniserial or 2-factor serial.
    """
    if require_2nakayama:
        require_index_at_most_two(alg)
    p = alg.p
    a = _top_vertex(M)
    P = projective_module(alg, a)
    if M.length == P.length:
        if is_isomorphic(M, P):
            raise ValueError(f"{M.name or M.dim_vector} is projective: no almost split sequence ends there")
    whole, zero = P.whole(), P.zero()
    rad = P.radical_series
    if is_uniserial(P):
        t = M.length
        if not 1 <= t < P.length:
            raise ValueError("module is not a quotient of its projective cover")
        nm = M.name or f"P{a}/rad{t}"
        A = Subquotient(P, rad[1], rad[t + 1], name=f"rad P{a}/rad{t + 1}")
        E1 = Subquotient(P, rad[1], rad[t], name=f"rad P{a}/rad{t}")
        E2 = Subquotient(P, whole, rad[t + 1], name=f"P{a}/rad{t + 1}" if t + 1 < P.length else f"P{a}")
        Mq = Subquotient(P, whole, rad[t], name=nm)
        f = _hcat(A.map_to(E1), A.map_to(E2))
        g = _vcat(_negate(E1.map_to(Mq), p), E2.map_to(Mq))
        terms, case = [E1, E2], "a"
    else:
        pieces = [SubspaceFamily(P, {v: row.reshape(1, -1)})
                  for v in alg.vertices for row in P.socle_series[0].bases[v]]
        if M.length == 1:
            A = Subquotient(P, whole, zero, name=f"P{a}")
            E1 = Subquotient(P, whole, pieces[0], name=f"P{a}/S{_support(pieces[0])}")
            E2 = Subquotient(P, whole, pieces[1], name=f"P{a}/S{_support(pieces[1])}")
            Mq = Subquotient(P, whole, rad[1], name=M.name or f"S{a}")
            f = _hcat(A.map_to(E1), A.map_to(E2))
            g = _vcat(E1.map_to(Mq), _negate(E2.map_to(Mq), p))
            terms, case = [E1, E2], "c"
        elif M.length == P.length - 1:
            match = [s for s in pieces if s.dim_vector == tuple(P.dims[v] - M.dims[v] for v in alg.vertices)]
            if not match:
                raise ValueError("module is not on the indecomposable list")
            s = match[0]
            t = _support(s)
            A = Subquotient(P, s, zero, name=f"S{t}")
            E = Subquotient(P, whole, zero, name=f"P{a}")
            Mq = Subquotient(P, whole, s, name=M.name or f"P{a}/S{t}")
            f = A.map_to(E)
            g = E.map_to(Mq)
            terms, case = [E], "b"
        else:
            raise ValueError("module is not on the indecomposable list")
    middle = _direct(P, terms)
    summands = [t.module for t in terms]
    return ARSequence(A.module, middle, Mq.module, f, g, summands, case, P)


def _support(fam):
    return next(v for v, d in fam.dims.items() if d)


# --- verification --------------------------------------------------------


@dataclass
class Verification:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def describe(self):
        if self.ok:
            return "almost split: all checks pass"
        name, msg, _ = self.failures[0]
        return f"{name}: {msg}"


def _rows(vecs, width):
    if not vecs:
        return np.zeros((0, width), dtype=np.int64)
    return np.array(vecs, dtype=np.int64)


def _span_contains(rows, targets, p):
    if targets.shape[0] == 0:
        return True, None
    basis = gf.row_space(rows, p) if rows.shape[0] else rows
    for i, t in enumerate(targets):
        if not gf.contains(basis, t.reshape(1, -1), p):
            return False, i
    return True, None


def verify_almost_split(seq, indecomposables=None, budget=256):
    """Check exactness, non-splitness, indecomposable ends and right almost splitness.

    ``indecomposables`` defaults to the full list for the sequence's algebra.
    """
    A, E, M, f, g = seq.left, seq.middle, seq.right, seq.f, seq.g
    alg = M.algebra
    p = alg.p
    verts = alg.vertices
    fails = []
    if not is_homomorphism(f, A, E) or not is_homomorphism(g, E, M):
        fails.append(("homomorphism", "f or g does not commute with the arrow actions", None))
    gf_ = compose(f, g, p)
    if any(np.any(x) for x in gf_.values()):
        fails.append(("exactness", "g f is not zero", gf_))
    for v in verts:
        if gf.rank(f[v], p) != A.dims[v]:
            fails.append(("exactness", f"f is not injective at vertex {v}", f[v]))
        if gf.rank(g[v], p) != M.dims[v]:
            fails.append(("exactness", f"g is not surjective at vertex {v}", g[v]))
        if A.dims[v] + M.dims[v] != E.dims[v]:
            fails.append(("exactness", f"dimensions do not add up at vertex {v}", None))
    for name, X in (("left term", A), ("right term", M)):
        if not is_indecomposable(X, budget):
            fails.append(("indecomposable", f"{name} decomposes", X))
    # split iff id_M = g s for some s: M -> E
    ident = flatten_map({v: gf.eye(M.dims[v]) for v in verts}, verts)
    rows = _rows([flatten_map(compose(s, g, p), verts) for s in hom_basis(M, E)], len(ident))
    if _span_contains(rows, ident.reshape(1, -1), p)[0]:
        fails.append(("non-split", "g has a section", None))
    if indecomposables is None:
        indecomposables = two_nakayama_indecomposables(alg)
    for V in indecomposables:
        iso = is_isomorphic(M, V)
        W = M if iso else V
        width = sum(W.dims[v] * M.dims[v] for v in verts)
        if iso:
            targets, _ = endomorphism_radical(M)
        else:
            targets = _rows([flatten_map(h, verts) for h in hom_basis(W, M)], width)
        rows = _rows([flatten_map(compose(h, g, p), verts) for h in hom_basis(W, E)], width)
        ok, bad = _span_contains(rows, targets, p)
        if not ok:
            fails.append(("right almost split",
                          f"a non-isomorphism from {V.name or V.dim_vector} does not factor through g",
                          targets[bad]))
    return Verification(not fails, fails)


# --- AR quiver -----------------------------------------------------------


@dataclass
class ARQuiverGraph:
    vertices: tuple
    nodes: list                      # (name, dim vector)
    edges: list                      # (i, j) irreducible maps between node indices
    tau: list                        # (i, j): node j = tau(node i)
    sequences: list = field(repr=False, default_factory=list)
    modules: list = field(repr=False, default_factory=list)

    def label(self, i):
        return "|".join(map(str, self.nodes[i][1]))

    def to_dot(self):
        lines = ["digraph ARQuiver {", "  rankdir=LR;"]
        legend = "|".join(f"v{v}" for v in self.vertices)
        lines.append(f'  legend [shape=note, label="dim vector order: {legend}"];')
        for i, (name, _) in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{self.label(i)}", tooltip="{name}"];')
        for i, j in self.edges:
            lines.append(f"  n{i} -> n{j};")
        for i, j in self.tau:
            lines.append(f"  n{i} -> n{j} [style=dashed, constraint=false];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def as_dict(self):
        return {
            "vertices": list(self.vertices),
            "nodes": [{"name": n, "dimVector": list(d)} for n, d in self.nodes],
            "edges": [[self.nodes[i][0], self.nodes[j][0]] for i, j in self.edges],
            "tau": [[self.nodes[i][0], self.nodes[j][0]] for i, j in self.tau],
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def labelled_edges(self):
        return {(self.label(i), self.label(j)) for i, j in self.edges}


def build_ar_quiver(alg, verify=False):
    """Nodes: the indecomposables; edges from the middle terms of every almost split
    sequence and from the radical summands of each projective."""
    mods = two_nakayama_indecomposables(alg)

    def find(m):
        for i, n in enumerate(mods):
            if n.dim_vector == m.dim_vector and is_isomorphic(n, m):
                return i
        raise ValueError(f"module {m.dim_vector} is not on the indecomposable list")

    edges, tau, seqs = set(), [], []
    for idx, m in enumerate(mods):
        P = projective_module(alg, _top_vertex(m))
        if m.length == P.length:
            rad = submodule(P, P.radical_series[1])
            for piece in decompose(rad):
                edges.add((find(piece), idx))
            continue
        seq = almost_split_sequence(alg, m)
        if verify:
            res = verify_almost_split(seq, mods)
            if not res:
                raise AssertionError(res.describe())
        seqs.append(seq)
        left = find(seq.left)
        tau.append((idx, left))
        for s in seq.summands:
            if s.is_zero:
                continue
            j = find(s)
            edges.add((j, idx))
            edges.add((left, j))
    nodes = [(m.name or "".join(map(str, m.dim_vector)), m.dim_vector) for m in mods]
    return ARQuiverGraph(tuple(alg.vertices), nodes, sorted(edges), sorted(tau), seqs, mods)
