"""Family constructors and exhaustive generation of small string algebras."""

from __future__ import annotations

import itertools
from importlib import resources

from .algebra import Arrow, BoundQuiverAlgebra, Quiver, classify_shape
from .errors import InvalidAlgebra


def lambda_t(t, p=2):
    """The algebra ``Lambda_t`` (``t >= 2``): two branches from ``2t`` to ``1``.

    Upper branch ``b1: 2t -> 2t-1``, then ``b_i`` down the odd vertices to
    ``b_t: 3 -> 1``; lower branch ``a_i`` down the even vertices to
    ``a_t: 2 -> 1``; relations ``b_{t-1} b_t`` and ``a1 a2``.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    upper = [2 * t] + [2 * t - 1 - 2 * i for i in range(t - 1)] + [1]
    lower = [2 * t] + [2 * t - 2 - 2 * i for i in range(t - 1)] + [1]
    arrows = [Arrow(f"b{i + 1}", upper[i], upper[i + 1]) for i in range(t)]
    arrows += [Arrow(f"a{i + 1}", lower[i], lower[i + 1]) for i in range(t)]
    vertices = tuple(range(1, 2 * t + 1))
    rels = ((f"b{t - 1}", f"b{t}"), ("a1", "a2"))
    return BoundQuiverAlgebra(Quiver(vertices, tuple(arrows)), rels, p)


def fixture_path(name):
    return resources.files("nakalab") / "data" / name


def load_fixture(name, p=None):
    from .dsl import load_algebra, load_module

    path = fixture_path(name)
    if name.endswith(".module"):
        return load_module(path, p=p)
    return load_algebra(path, p=p)


# --- exhaustive generation -----------------------------------------------


def _connected(n, arrows):
    adj = {i: set() for i in range(n)}
    for u, v in arrows:
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for y in adj[x] - seen:
            seen.add(y)
            stack.append(y)
    return len(seen) == n


def quivers_up_to_iso(max_vertices=5, max_arrows=5, max_degree=2):
    """Connected quivers (loops and parallel arrows allowed) with bounded in/out degree,
    one per isomorphism class, as ``(n, sorted arrow pairs)`` with vertices ``0..n-1``."""
    out = []
    for n in range(1, max_vertices + 1):
        perms = list(itertools.permutations(range(n)))
        pairs = [(u, v) for u in range(n) for v in range(n)]
        for k in range(n - 1, max_arrows + 1):
            seen = set()
            for combo in itertools.combinations_with_replacement(pairs, k):
                outd = [0] * n
                ind = [0] * n
                for u, v in combo:
                    outd[u] += 1
                    ind[v] += 1
                if max(outd) > max_degree or max(ind) > max_degree:
                    continue
                if not _connected(n, combo):
                    continue
                key = min(tuple(sorted((pi[u], pi[v]) for u, v in combo)) for pi in perms)
                if key not in seen:
                    seen.add(key)
                    out.append((n, key))
    return out


def _automorphisms(n, arrows):
    """Arrow permutations induced by quiver automorphisms (parallel arrows may be swapped)."""
    target = list(arrows)
    groups = {}
    for i, a in enumerate(target):
        groups.setdefault(a, []).append(i)
    autos = set()
    for pi in itertools.permutations(range(n)):
        mapped = [(pi[u], pi[v]) for u, v in target]
        if sorted(mapped) != target:
            continue
        # assign arrows to distinct targets within each parallel class
        slots = {}
        for i, a in enumerate(mapped):
            slots.setdefault(a, []).append(i)
        per_class = []
        for a, srcs in slots.items():
            per_class.append([(srcs, perm) for perm in itertools.permutations(groups[a])])
        for combo in itertools.product(*per_class):
            sigma = [0] * len(target)
            for srcs, perm in combo:
                for s, t in zip(srcs, perm):
                    sigma[s] = t
            autos.add(tuple(sigma))
    return sorted(autos)


def _special_biserial(arrows, rels):
    for a, (_, t) in enumerate(arrows):
        if sum(1 for b, (s2, _) in enumerate(arrows) if s2 == t and (a, b) not in rels) > 1:
            return False
        s = arrows[a][0]
        if sum(1 for c, (_, t2) in enumerate(arrows) if t2 == s and (c, a) not in rels) > 1:
            return False
    return True


def _build(n, arrows, rels, p):
    q = Quiver(tuple(range(1, n + 1)),
               tuple(Arrow(f"x{i + 1}", u + 1, v + 1) for i, (u, v) in enumerate(arrows)))
    return BoundQuiverAlgebra(q, tuple((f"x{a + 1}", f"x{b + 1}") for a, b in sorted(rels)), p)


def string_algebras(max_vertices=5, max_arrows=5, p=2):
    """Connected finite-dimensional string algebras with length-2 zero relations,
    one per isomorphism class of (quiver, relations)."""
    for n, arrows in quivers_up_to_iso(max_vertices, max_arrows):
        autos = _automorphisms(n, arrows)
        comp = [(a, b) for a in range(len(arrows)) for b in range(len(arrows)) if arrows[a][1] == arrows[b][0]]
        seen = set()
        for mask in range(1 << len(comp)):
            rels = frozenset(comp[i] for i in range(len(comp)) if mask >> i & 1)
            if not _special_biserial(arrows, rels):
                continue
            key = min(tuple(sorted((s[a], s[b]) for a, b in rels)) for s in autos)
            if key in seen:
                continue
            seen.add(key)
            try:
                alg = _build(n, arrows, rels, p)
            except InvalidAlgebra:
                continue
            if classify_shape(alg).is_string_algebra:
                yield alg
