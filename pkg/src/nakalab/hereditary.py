"""Hereditary algebras of Dynkin type: roots, BGP reflections, indecomposables.

Indecomposables are the preprojectives: each ``P(a)`` is pushed through
repeated Coxeter steps (reflections at every vertex, sources first) until it
vanishes.  Gabriel's theorem makes the dimension vector a complete invariant,
so the orbits are merged by dimension vector.
"""

from __future__ import annotations

import numpy as np

from . import gf
from .algebra import Arrow, BoundQuiverAlgebra, DynkinType, Quiver, dynkin_type
from .errors import BudgetExceeded, InvalidAlgebra, RepresentationInfinite
from .module import Representation, projective_module

E_INDEX = {6: 11, 7: 17, 8: 29}
DEFAULT_MAX_RANK = {"A": 12, "D": 12, "E": 8}


def dynkin_edges(kind):
    """Vertices ``1..n`` and the undirected edges of the standard labelling."""
    if isinstance(kind, str):
        kind = DynkinType.parse(kind)
    n = kind.rank
    path = [(i, i + 1) for i in range(1, n)]
    if kind.family == "A":
        edges = path
    elif kind.family == "D":
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    else:
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    return tuple(range(1, n + 1)), edges


def orientation(kind, mask, p=2):
    """Hereditary algebra on ``kind``; bit ``i`` of ``mask`` flips edge ``i``."""
    vertices, edges = dynkin_edges(kind)
    arrows = []
    for i, (u, v) in enumerate(edges):
        s, t = (v, u) if mask >> i & 1 else (u, v)
        arrows.append(Arrow(f"a{i + 1}", s, t))
    return BoundQuiverAlgebra(Quiver(vertices, tuple(arrows)), (), p)


def all_orientations(kind, p=2):
    _, edges = dynkin_edges(kind)
    return [orientation(kind, m, p) for m in range(1 << len(edges))]


def _graph(graph):
    if isinstance(graph, (str, DynkinType)):
        vertices, edges = dynkin_edges(graph)
        return list(vertices), edges
    q = graph.quiver if hasattr(graph, "quiver") else graph
    return list(q.vertices), [(a.source, a.target) for a in q.arrows]


def positive_roots(graph):
    """Positive roots as tuples in vertex order, by closure of the simple roots
    under ``s_i(v) = v - (2 v_i - sum_{j ~ i} v_j) e_i``."""
    if not isinstance(graph, (str, DynkinType)):
        q = graph.quiver if hasattr(graph, "quiver") else graph
        if dynkin_type(q) is None:
            raise RepresentationInfinite("underlying graph is not Dynkin")
    vertices, edges = _graph(graph)
    n = len(vertices)
    pos = {v: i for i, v in enumerate(vertices)}
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[pos[u]].append(pos[v])
        nbrs[pos[v]].append(pos[u])
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        r = queue.pop()
        for i in range(n):
            pairing = 2 * r[i] - sum(r[j] for j in nbrs[i])
            if pairing == 0:
                continue
            s = list(r)
            s[i] -= pairing
            s = tuple(s)
            if min(s) >= 0 and any(s) and s not in seen:
                if len(seen) > 10_000:
                    raise RepresentationInfinite("reflection closure does not terminate (not Dynkin)")
                seen.add(s)
                queue.append(s)
    return sorted(seen, key=lambda r: (sum(r), tuple(-x for x in r)))


def _reversed_at(alg, k):
    arrows = tuple(
        Arrow(a.name, a.target, a.source) if k in (a.source, a.target) else a for a in alg.quiver.arrows
    )
    return BoundQuiverAlgebra(Quiver(alg.quiver.vertices, arrows), (), alg.p)


def reflect_at(m, k, direction):
    """BGP reflection at a sink (``plus``) or a source (``minus``)."""
    alg = m.algebra
    if alg.relations:
        raise InvalidAlgebra("reflection functors need a hereditary algebra")
    q = alg.quiver
    p = m.p
    new_alg = _reversed_at(alg, k)
    dims = dict(m.dims)
    mats = dict(m.mats)
    if direction == "plus":
        if q.out_arrows(k):
            raise ValueError(f"vertex {k} is not a sink")
        ins = q.in_arrows(k)
        if any(a.source == k for a in ins):
            raise ValueError("loop at reflection vertex")
        widths = [m.dims[a.source] for a in ins]
        total = sum(widths)
        stack = np.vstack([m.mats[a.name] for a in ins]) if ins else gf.zeros(0, m.dims[k])
        kern = gf.left_kernel(stack, p) if total else gf.zeros(0, 0)
        dims[k] = kern.shape[0]
        off = 0
        for a, w in zip(ins, widths):
            mats[a.name] = kern[:, off : off + w].copy() if kern.shape[0] else gf.zeros(0, w)
            off += w
    elif direction == "minus":
        if q.in_arrows(k):
            raise ValueError(f"vertex {k} is not a source")
        outs = q.out_arrows(k)
        widths = [m.dims[a.target] for a in outs]
        total = sum(widths)
        if total:
            h = np.hstack([m.mats[a.name] for a in outs])
            quot = gf.annihilator(gf.row_space(h, p), total, p)
        else:
            quot = gf.zeros(0, 0)
        dims[k] = quot.shape[1]
        off = 0
        for a, w in zip(outs, widths):
            mats[a.name] = quot[off : off + w, :].copy()
            off += w
    else:
        raise ValueError("direction must be 'plus' or 'minus'")
    return Representation(new_alg, dims, mats, check=False)


def coxeter_minus(m, order=None):
    """One inverse Coxeter step: reflect at each vertex in topological order (sources first)."""
    alg = m.algebra
    order = order or alg.quiver.topological_order()
    cur = m
    for k in order:
        cur = reflect_at(cur, k, "minus")
    return Representation(alg, cur.dims, cur.mats, check=False)


def _check_dynkin(alg, max_rank=None):
    if alg.relations:
        raise InvalidAlgebra("algebra is not hereditary")
    kind = dynkin_type(alg.quiver)
    if kind is None:
        raise RepresentationInfinite("hereditary algebra of non-Dynkin type", "non-Dynkin graph")
    cap = max_rank if max_rank is not None else DEFAULT_MAX_RANK[kind.family]
    if kind.rank > cap:
        raise BudgetExceeded(f"{kind} exceeds the rank cap {cap}")
    return kind


def indecomposables_hereditary(alg, max_rank=None):
    """One module per positive root, ordered by the preprojective orbits of ``P(a)``."""
    _check_dynkin(alg, max_rank)
    order = alg.quiver.topological_order()
    found = {}
    bound = len(positive_roots(alg))
    for a in alg.vertices:
        m = projective_module(alg, a)
        steps = 0
        while not m.is_zero:
            key = m.dim_vector
            if key not in found:
                m.name = "".join(map(str, key)) if max(key) < 10 else "|".join(map(str, key))
                found[key] = m
            m = coxeter_minus(m, order)
            steps += 1
            if steps > bound:
                raise RuntimeError("Coxeter iteration did not terminate")
    return list(found.values())


def _a_index(quiver):
    deg = quiver.degrees()
    n = len(quiver.vertices)
    if any(i >= 2 for _, i in deg.values()):
        return n
    if any(o >= 2 for o, _ in deg.values()):
        return n - 1
    return 1


def predicted_index(alg):
    """Closed-form right and left Nakayama indices of a hereditary Dynkin algebra."""
    kind = _check_dynkin(alg, max_rank=10**6)
    if kind.family == "A":
        return {"right": _a_index(alg.quiver), "left": _a_index(alg.quiver.opposite())}
    n = 2 * kind.rank - 3 if kind.family == "D" else E_INDEX[kind.rank]
    return {"right": n, "left": n}
