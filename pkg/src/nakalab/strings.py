"""Strings, bands and string modules for string algebras.

A word is a tuple of :class:`Letter`.  Whether a letter may follow a word
depends only on the last ``k - 1`` letters, ``k`` the longest relation
(at least 2), so valid words are the paths of a finite automaton whose
states are windows of ``k - 1`` letters.  There are finitely many strings
exactly when that automaton is acyclic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf
from .errors import BudgetExceeded, InvalidModule, RepresentationInfinite
from .module import Representation


@dataclass(frozen=True, order=True)
class Letter:
    arrow: str
    inverse: bool = False

    def source(self, alg):
        a = alg.quiver.arrow(self.arrow)
        return a.target if self.inverse else a.source

    def target(self, alg):
        a = alg.quiver.arrow(self.arrow)
        return a.source if self.inverse else a.target

    def inv(self):
        return Letter(self.arrow, not self.inverse)

    def __str__(self):
        return self.arrow + ("^-" if self.inverse else "")


@dataclass(frozen=True)
class StringWord:
    """A string; ``letters == ()`` means the trivial string at ``vertex``."""

    letters: tuple
    vertex: int | None = None

    @property
    def is_trivial(self):
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def start(self, alg):
        return self.vertex if self.is_trivial else self.letters[0].source(alg)

    def end(self, alg):
        return self.vertex if self.is_trivial else self.letters[-1].target(alg)

    def inverse(self):
        if self.is_trivial:
            return self
        return StringWord(tuple(c.inv() for c in reversed(self.letters)))

    def __str__(self):
        if self.is_trivial:
            return f"e{self.vertex}"
        return " ".join(str(c) for c in self.letters)

    @classmethod
    def parse(cls, text, alg):
        text = text.strip()
        if text.startswith("e") and text[1:].isdigit() and int(text[1:]) in alg.quiver.vertex_index:
            return cls((), int(text[1:]))
        letters = []
        for tok in text.split():
            inv = tok.endswith("^-")
            name = tok[:-2] if inv else tok
            if name not in alg.quiver.arrow_index:
                raise InvalidModule(f"unknown arrow {name!r} in string {text!r}")
            letters.append(Letter(name, inv))
        w = cls(tuple(letters))
        if not is_string(alg, w):
            raise InvalidModule(f"{text!r} is not a string")
        return w


@dataclass(frozen=True)
class Band:
    word: StringWord

    def __str__(self):
        return str(self.word)


def letter_key(alg, c):
    return (alg.quiver.arrow_index[c.arrow], c.inverse)


def word_key(alg, letters):
    return tuple(letter_key(alg, c) for c in letters)


def canonical(alg, w):
    """The smaller of ``w`` and ``w^{-1}`` under the letter order."""
    if w.is_trivial:
        return w
    v = w.inverse()
    return w if word_key(alg, w.letters) <= word_key(alg, v.letters) else v


def _window(alg):
    return max([len(r) for r in alg.relations] + [2])


def _relations_by_length(alg):
    out = {}
    for r in alg.relations:
        out.setdefault(len(r), set()).add(r)
    return out


def extends(alg, word, c, rels=None):
    """Can letter ``c`` be appended to the (valid, nonempty) tuple ``word``?"""
    last = word[-1]
    if last.target(alg) != c.source(alg) or c == last.inv():
        return False
    rels = _relations_by_length(alg) if rels is None else rels
    full = word + (c,)
    for length, rs in rels.items():
        if length > len(full):
            continue
        tail = full[-length:]
        if all(x.inverse == c.inverse for x in tail):
            names = tuple(x.arrow for x in tail)
            if c.inverse:
                names = names[::-1]
            if names in rs:
                return False
    return True


def is_string(alg, w):
    if w.is_trivial:
        return w.vertex in alg.quiver.vertex_index
    rels = _relations_by_length(alg)
    for i in range(1, len(w.letters)):
        if not extends(alg, w.letters[:i], w.letters[i], rels):
            return False
    return True


def all_letters(alg):
    return [Letter(a.name, inv) for a in alg.arrows for inv in (False, True)]


def _automaton(alg):
    """States: valid words of length ``k - 1``; edges labelled by letters."""
    k = _window(alg)
    rels = _relations_by_length(alg)
    letters = all_letters(alg)
    states = [(c,) for c in letters]
    for _ in range(k - 2):
        states = [s + (c,) for s in states for c in letters if extends(alg, s, c, rels)]
    edges = {}
    for s in states:
        edges[s] = [(c, (s + (c,))[1:]) for c in letters if extends(alg, s, c, rels)]
    return states, edges


def _has_cycle(states, edges):
    color = {s: 0 for s in states}
    for root in states:
        if color[root]:
            continue
        stack = [(root, iter(edges[root]))]
        color[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = 2
                stack.pop()
                continue
            t = nxt[1]
            if color[t] == 1:
                return True
            if color[t] == 0:
                color[t] = 1
                stack.append((t, iter(edges[t])))
    return False


def _is_primitive(letters):
    n = len(letters)
    return all(letters[: n // d] * d != letters for d in range(2, n + 1) if n % d == 0)


def _band_form(alg, letters):
    """Canonical representative of a cyclic word under rotation and inversion."""
    inv = tuple(c.inv() for c in reversed(letters))
    cands = [w[i:] + w[:i] for w in (letters, inv) for i in range(len(w))]
    return min(cands, key=lambda w: word_key(alg, w))


def detect_bands(alg, max_length=None):
    """Bands (up to rotation and inversion) of length at most the number of automaton states.

    Every cycle of the automaton yields a band, and a shortest cycle has at
    most that many letters, so an empty result certifies finitely many strings.
    """
    states, edges = _automaton(alg)
    if not _has_cycle(states, edges):
        return []
    limit = max_length or len(states)
    found = {}
    for s0 in states:
        # closed walks s0 -> s0 of length <= limit
        stack = [(s0, ())]
        while stack:
            s, word = stack.pop()
            if len(word) >= limit:
                continue
            for c, t in edges[s]:
                w = word + (c,)
                if t == s0 and _is_primitive(w) and w[-1].target(alg) == w[0].source(alg):
                    form = _band_form(alg, w)
                    found[word_key(alg, form)] = form
                stack.append((t, w))
    return [Band(StringWord(found[k])) for k in sorted(found, key=lambda k: (len(k), k))]


def enumerate_strings(alg, cap=10_000):
    """All strings up to inversion, trivial ones first, then by length and letter order."""
    states, edges = _automaton(alg)
    if _has_cycle(states, edges):
        bands = detect_bands(alg)
        band = bands[0] if bands else None
        raise RepresentationInfinite(f"band {band}" if band else "infinitely many strings", band)
    rels = _relations_by_length(alg)
    out = [StringWord((), v) for v in alg.vertices]
    frontier = [(c,) for c in all_letters(alg)]
    seen = set()
    while frontier:
        nxt = []
        for w in frontier:
            if len(w) > cap:
                raise BudgetExceeded(f"string length exceeded the cap {cap}")
            cw = canonical(alg, StringWord(w))
            key = word_key(alg, cw.letters)
            if key not in seen:
                seen.add(key)
                out.append(cw)
            for c in all_letters(alg):
                if extends(alg, w, c, rels):
                    nxt.append(w + (c,))
        frontier = nxt
    trivial = out[: len(alg.vertices)]
    rest = sorted(out[len(alg.vertices) :], key=lambda w: (len(w), word_key(alg, w.letters)))
    return trivial + rest


def walk_points(alg, w):
    """Vertices visited by the walk, one per basis vector of ``M(w)``."""
    if w.is_trivial:
        return [w.vertex]
    pts = [w.letters[0].source(alg)]
    pts.extend(c.target(alg) for c in w.letters)
    return pts


def string_module(alg, w):
    """``M(w)``: basis ``x_0..x_n`` along the walk; ``a`` sends ``x_{i-1}`` to ``x_i``
    for a forward letter ``a`` and ``x_i`` to ``x_{i-1}`` for ``a^-``."""
    if not is_string(alg, w):
        raise InvalidModule(f"{w} is not a string")
    pts = walk_points(alg, w)
    dims = {v: 0 for v in alg.vertices}
    idx = []
    for v in pts:
        idx.append(dims[v])
        dims[v] += 1
    mats = {a.name: gf.zeros(dims[a.source], dims[a.target]) for a in alg.arrows}
    for i, c in enumerate(w.letters, 1):
        if c.inverse:
            mats[c.arrow][idx[i], idx[i - 1]] = 1
        else:
            mats[c.arrow][idx[i - 1], idx[i]] = 1
    return Representation(alg, dims, mats, name=str(w))
