"""Quivers, paths, monomial relations and bound quiver algebras.

Paths compose left to right: ``a1 a2`` means first ``a1`` then ``a2``,
so ``target(a1) == source(a2)``.  Relations are zero relations (monomial),
and an algebra is the path algebra ``F_p Q`` modulo the ideal they generate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidAlgebra
from .gf import is_prime


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int

    @property
    def is_loop(self):
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "arrows", tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidAlgebra("duplicate vertex id")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            dup = next(n for n, c in Counter(names).items() if c > 1)
            raise InvalidAlgebra(f"duplicate arrow name {dup!r}")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise InvalidAlgebra(f"arrow {a.name!r} uses an undeclared vertex")

    @cached_property
    def _by_name(self):
        return {a.name: a for a in self.arrows}

    @cached_property
    def arrow_index(self):
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise InvalidAlgebra(f"unknown arrow {name!r}") from None

    @cached_property
    def _out(self):
        d = {v: [] for v in self.vertices}
        for a in self.arrows:
            d[a.source].append(a)
        return {v: tuple(x) for v, x in d.items()}

    @cached_property
    def _in(self):
        d = {v: [] for v in self.vertices}
        for a in self.arrows:
            d[a.target].append(a)
        return {v: tuple(x) for v, x in d.items()}

    def out_arrows(self, v):
        return self._out[v]

    def in_arrows(self, v):
        return self._in[v]

    def degrees(self):
        """Map vertex -> (|v+|, |v-|): numbers of arrows starting / ending at v."""
        return {v: (len(self._out[v]), len(self._in[v])) for v in self.vertices}

    def is_connected(self):
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        return len(seen) == len(self.vertices)

    def parallel_arrows(self):
        """Groups of two or more arrows sharing the same (source, target)."""
        groups = {}
        for a in self.arrows:
            groups.setdefault((a.source, a.target), []).append(a.name)
        return [tuple(g) for g in groups.values() if len(g) > 1]

    def opposite(self):
        return Quiver(self.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))

    def is_acyclic(self):
        return self.topological_order() is not None

    def topological_order(self):
        """Vertices ordered so every arrow goes forward; None if there is an oriented cycle."""
        indeg = {v: len(self._in[v]) for v in self.vertices}
        ready = [v for v in self.vertices if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self._out[v]:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
        return order if len(order) == len(self.vertices) else None

    def composable(self, names):
        arrs = [self.arrow(n) for n in names]
        return all(x.target == y.source for x, y in zip(arrs, arrs[1:]))


@dataclass(frozen=True)
class Path:
    """A path ``arrows[0] arrows[1] ...`` from ``start`` to ``end``; empty means trivial."""

    start: int
    end: int
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    def __str__(self):
        return " ".join(self.arrows) if self.arrows else f"e{self.start}"


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown Dynkin family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise ValueError("A_n needs n >= 1")
        if self.family == "D" and self.rank < 4:
            raise ValueError("D_n needs n >= 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text):
        text = text.strip().upper()
        return cls(text[0], int(text[1:]))


def dynkin_type(quiver):
    """Dynkin type of the underlying graph of ``quiver``, or None."""
    n = len(quiver.vertices)
    if n == 0 or not quiver.is_connected():
        return None
    if any(a.is_loop for a in quiver.arrows):
        return None
    edges = {frozenset((a.source, a.target)) for a in quiver.arrows}
    if len(edges) != len(quiver.arrows) or len(edges) != n - 1:
        return None
    adj = {v: [] for v in quiver.vertices}
    for e in edges:
        x, y = tuple(e)
        adj[x].append(y)
        adj[y].append(x)
    branch = [v for v in quiver.vertices if len(adj[v]) >= 3]
    if not branch:
        return DynkinType("A", n)
    if len(branch) > 1 or len(adj[branch[0]]) > 3:
        return None
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while len(adj[cur]) == 2:
            prev, cur = cur, next(x for x in adj[cur] if x != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return DynkinType("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return DynkinType("E", n)
    return None


@dataclass(frozen=True)
class BoundQuiverAlgebra:
    """``F_p Q / I`` with ``I`` generated by the given zero relations.

    Relations are tuples of arrow names read left to right.  Construction
    validates composability, admissibility (length >= 2), primality of ``p``
    and finite dimensionality.
    """

    quiver: Quiver
    relations: tuple = ()
    p: int = 2
    warnings: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        rels = tuple(tuple(r) for r in self.relations)
        object.__setattr__(self, "relations", rels)
        if not is_prime(self.p):
            raise InvalidAlgebra(f"field characteristic {self.p} is not prime")
        if self.p >= 1 << 20:
            raise InvalidAlgebra("field characteristic too large (limit 2^20)")
        for r in rels:
            if len(r) < 2:
                raise InvalidAlgebra(f"relation {' '.join(r)!r} has length < 2")
            for name in r:
                self.quiver.arrow(name)
            if not self.quiver.composable(r):
                raise InvalidAlgebra(f"relation {' '.join(r)!r} is not a composable path")
        cycle = self._relation_free_cycle()
        if cycle is not None:
            raise InvalidAlgebra(
                "infinite-dimensional quotient: the cycle "
                f"{' '.join(cycle)!r} avoids every relation"
            )
        notes = list(self.warnings)
        for g in self.quiver.parallel_arrows():
            notes.append(f"parallel arrows {', '.join(g)}")
        if not self.quiver.is_connected():
            notes.append("quiver is not connected")
        object.__setattr__(self, "warnings", tuple(notes))

    # --- relation automaton ------------------------------------------------

    @cached_property
    def _max_rel(self):
        return max((len(r) for r in self.relations), default=1)

    @cached_property
    def _rel_set(self):
        return frozenset(self.relations)

    def _step(self, suffix, name):
        """Extend a relation-free path whose last arrows are ``suffix`` by ``name``.

        Returns the new automaton suffix, or None if a relation is created.
        """
        s = suffix + (name,)
        for r in self.relations:
            if len(r) <= len(s) and s[len(s) - len(r):] == r:
                return None
        keep = self._max_rel - 1
        return s[len(s) - keep:] if keep else ()

    def _relation_free_cycle(self):
        q = self.quiver
        color = {}
        for v0 in q.vertices:
            root = (v0, ())
            if root in color:
                continue
            stack = [(root, iter(q.out_arrows(v0)), None)]
            color[root] = 1
            trail = []
            while stack:
                state, it, via = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    color[state] = 2
                    stack.pop()
                    if trail:
                        trail.pop()
                    continue
                suf = self._step(state[1], nxt.name)
                if suf is None:
                    continue
                child = (nxt.target, suf)
                c = color.get(child)
                if c == 1:
                    # back edge: arrows along the grey stack from child to here
                    names = trail + [nxt.name]
                    idx = [s for s, _, _ in stack].index(child)
                    return tuple(names[idx:])
                if c is None:
                    color[child] = 1
                    trail.append(nxt.name)
                    stack.append((child, iter(q.out_arrows(nxt.target)), nxt.name))
        return None

    # --- paths ---------------------------------------------------------------

    def is_zero_path(self, names):
        names = tuple(names)
        for r in self.relations:
            k = len(r)
            for i in range(len(names) - k + 1):
                if names[i : i + k] == r:
                    return True
        return False

    @cached_property
    def path_basis(self):
        """All nonzero paths, grouped by start vertex, then by length, then arrow order."""
        q = self.quiver
        out = []
        for v in q.vertices:
            layer = [(Path(v, v, ()), ())]
            while layer:
                out.extend(path for path, _ in layer)
                nxt = []
                for path, suf in layer:
                    for a in q.out_arrows(path.end):
                        s = self._step(suf, a.name)
                        if s is not None:
                            nxt.append((Path(path.start, a.target, path.arrows + (a.name,)), s))
                layer = nxt
        return tuple(out)

    @property
    def dimension(self):
        return len(self.path_basis)

    @property
    def loewy_length(self):
        return 1 + max(len(x) for x in self.path_basis)

    def paths_from(self, v):
        return tuple(x for x in self.path_basis if x.start == v)

    def paths_to(self, v):
        return tuple(x for x in self.path_basis if x.end == v)

    def extend(self, path, name):
        """``path * arrow`` in the algebra: the longer Path, or None when it is zero."""
        a = self.quiver.arrow(name)
        if a.source != path.end:
            return None
        names = path.arrows + (name,)
        if self.is_zero_path(names[-self._max_rel:]):
            return None
        return Path(path.start, a.target, names)

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    def opposite(self):
        return opposite_algebra(self)

    def with_field(self, p):
        return BoundQuiverAlgebra(self.quiver, self.relations, p)

    def to_dsl(self):
        lines = []
        if self.p != 2:
            lines.append(f"field {self.p}")
        lines.append("vertex " + " ".join(str(v) for v in self.vertices))
        for a in self.arrows:
            lines.append(f"arrow {a.name} {a.source} {a.target}")
        for r in self.relations:
            lines.append("rel " + " ".join(r))
        return "\n".join(lines) + "\n"


def opposite_algebra(alg):
    """Reverse every arrow (keeping names) and every relation path."""
    return _opposite_cached(alg)


_OPPOSITES = {}


def _opposite_cached(alg):
    key = (alg.quiver, alg.relations, alg.p)
    op = _OPPOSITES.get(key)
    if op is None:
        op = BoundQuiverAlgebra(
            alg.quiver.opposite(), tuple(tuple(reversed(r)) for r in alg.relations), alg.p
        )
        if len(_OPPOSITES) > 4096:
            _OPPOSITES.clear()
        _OPPOSITES[key] = op
    return op


@dataclass(frozen=True)
class ShapeReport:
    is_special_biserial: bool
    is_string_algebra: bool
    is_hereditary: bool
    dynkin_type: DynkinType | None
    degrees: dict
    connected: bool

    def as_dict(self):
        return {
            "specialBiserial": self.is_special_biserial,
            "stringAlgebra": self.is_string_algebra,
            "hereditary": self.is_hereditary,
            "dynkinType": str(self.dynkin_type) if self.dynkin_type else None,
            "connected": self.connected,
            "degrees": {str(v): {"out": o, "in": i} for v, (o, i) in self.degrees.items()},
        }


def _continuations(alg, a):
    """Arrows b with ``a b`` nonzero, and arrows c with ``c a`` nonzero."""
    q = alg.quiver
    after = [b for b in q.out_arrows(a.target) if (a.name, b.name) not in alg._rel_set]
    before = [c for c in q.in_arrows(a.source) if (c.name, a.name) not in alg._rel_set]
    return after, before


def classify_shape(alg):
    q = alg.quiver
    deg = q.degrees()
    sb = all(o <= 2 and i <= 2 for o, i in deg.values())
    if sb:
        for a in q.arrows:
            after, before = _continuations(alg, a)
            if len(after) > 1 or len(before) > 1:
                sb = False
                break
    hereditary = not alg.relations
    return ShapeReport(
        is_special_biserial=sb,
        # every ideal here is monomial, so special biserial already means string algebra
        is_string_algebra=sb,
        is_hereditary=hereditary,
        dynkin_type=dynkin_type(q) if hereditary else None,
        degrees=deg,
        connected=q.is_connected(),
    )


def make_algebra(vertices, arrows, relations=(), p=2):
    """Convenience constructor: ``arrows`` as ``(name, source, target)`` triples."""
    return BoundQuiverAlgebra(Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows)), tuple(relations), p)
