"""Right/left Nakayama indices and the syntactic right 2-Nakayama test."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra import classify_shape, opposite_algebra
from .errors import NotTwoNakayama, RepresentationInfinite, UnsupportedAlgebra
from .hereditary import indecomposables_hereditary
from .module import (
    SubspaceFamily,
    cofactor_serial_index,
    factor_serial_index,
    is_isomorphic,
    is_uniserial,
    loewy_length,
    projective_module,
    quotient_by,
)
from .strings import enumerate_strings, string_module


@dataclass(frozen=True)
class ModuleRow:
    name: str
    dim_vector: tuple
    length: int
    loewy_length: int
    factor_index: int

    def as_dict(self):
        return {
            "name": self.name,
            "dimVector": list(self.dim_vector),
            "length": self.length,
            "loewyLength": self.loewy_length,
            "factorIndex": self.factor_index,
        }


@dataclass
class NakayamaReport:
    backend: str
    right_index: int
    left_index: int | None
    table: list
    left_table: list | None
    modules: list = field(repr=False, default_factory=list)
    representation_finite: bool = True
    vertices: tuple = ()

    @property
    def right_witness(self):
        return next(r for r in self.table if r.factor_index == self.right_index)

    @property
    def left_witness(self):
        if self.left_table is None:
            return None
        return next(r for r in self.left_table if r.factor_index == self.left_index)

    def index_multiset(self):
        return dict(sorted(Counter(r.factor_index for r in self.table).items()))

    def summary(self):
        if self.left_index is None:
            return f"right {self.right_index}-Nakayama"
        if self.right_index == 1 and self.left_index == 1:
            return "Nakayama (index 1)"
        return f"right {self.right_index}-Nakayama, left {self.left_index}-Nakayama"

    def as_dict(self):
        out = {
            "backend": self.backend,
            "representationFinite": self.representation_finite,
            "vertices": list(self.vertices),
            "rightIndex": self.right_index,
            "leftIndex": self.left_index,
            "indexMultiset": {str(k): v for k, v in self.index_multiset().items()},
            "rightWitness": self.right_witness.name,
            "table": [r.as_dict() for r in self.table],
        }
        if self.left_table is not None:
            out["leftWitness"] = self.left_witness.name
            out["leftTable"] = [r.as_dict() for r in self.left_table]
        return out

    def render_table(self, left=False):
        rows = self.left_table if left else self.table
        head = ("module", "dim", "length", "loewy", "index")
        body = [(r.name, "".join(map(str, r.dim_vector)) if max(r.dim_vector) < 10 else
                 "|".join(map(str, r.dim_vector)), str(r.length), str(r.loewy_length), str(r.factor_index))
                for r in rows]
        widths = [max(len(x) for x in col) for col in zip(head, *body)]
        lines = ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() for line in [head, *body]]
        return "\n".join(lines)


def _row(m):
    return ModuleRow(m.name or "".join(map(str, m.dim_vector)), m.dim_vector, m.length,
                     loewy_length(m), factor_serial_index(m).index)


def indecomposables(alg, max_rank=None):
    """``(backend, modules)``: every indecomposable up to isomorphism."""
    shape = classify_shape(alg)
    string_ok = shape.is_string_algebra
    hered_ok = shape.is_hereditary and shape.dynkin_type is not None
    if hered_ok:
        mods = indecomposables_hereditary(alg, max_rank)
        if string_ok:
            smods = [string_module(alg, w) for w in enumerate_strings(alg)]
            a = Counter(m.dim_vector for m in mods)
            b = Counter(m.dim_vector for m in smods)
            if a != b:
                raise AssertionError(f"string and hereditary backends disagree: {a} vs {b}")
            return "both", smods
        return "hereditary", mods
    if string_ok:
        return "string", [string_module(alg, w) for w in enumerate_strings(alg)]
    if shape.is_hereditary:
        raise RepresentationInfinite("hereditary algebra of non-Dynkin type", "non-Dynkin graph")
    raise UnsupportedAlgebra("algebra is neither a string algebra nor hereditary of Dynkin type")


def classify(alg, compute_left=True, max_rank=None):
    """Enumerate indecomposables and take the maximal factor-serial index on each side."""
    backend, mods = indecomposables(alg, max_rank)
    table = [_row(m) for m in mods]
    right = max(r.factor_index for r in table)
    left = left_table = None
    if compute_left:
        _, left_mods = indecomposables(opposite_algebra(alg), max_rank)
        left_table = [_row(m) for m in left_mods]
        left = max(r.factor_index for r in left_table)
    return NakayamaReport(backend, right, left, table, left_table, mods, True, tuple(alg.vertices))


# --- syntactic right 2-Nakayama test -------------------------------------


@dataclass
class SyntacticReport:
    value: bool
    conditions: dict
    witnesses: dict

    def __bool__(self):
        return self.value

    @property
    def first_failure(self):
        return next((c for c, ok in self.conditions.items() if not ok), None)

    def describe(self):
        if self.value:
            return "right 2-Nakayama: conditions (i)-(iv) hold"
        c = self.first_failure
        return f"condition ({c}) fails: {self.witnesses[c]}"

    def as_dict(self):
        return {
            "right2Nakayama": self.value,
            "conditions": dict(self.conditions),
            "firstFailure": self.first_failure,
            "witnesses": {k: str(v) for k, v in self.witnesses.items()},
        }


def _path_text(path):
    return " ".join(path.arrows)


def is_right_2_nakayama_syntactic(alg):
    """The four quiver conditions characterising right 2-Nakayama algebras."""
    q = alg.quiver
    deg = q.degrees()
    conds, wit = {}, {}
    bad = [v for v, (o, i) in deg.items() if o > 2 or i > 1]
    conds["i"] = not bad
    if bad:
        o, i = deg[bad[0]]
        wit["i"] = f"vertex {bad[0]} has out-degree {o}, in-degree {i}"
    bad = []
    for a in q.arrows:
        conts = [b.name for b in q.out_arrows(a.target) if (a.name, b.name) not in alg._rel_set]
        if len(conts) > 1:
            bad.append((a.name, conts))
    conds["ii"] = not bad
    if bad:
        wit["ii"] = f"arrow {bad[0][0]} continues by {', '.join(bad[0][1])}"
    branch = [v for v, (o, _) in deg.items() if o == 2]
    conds["iii"] = bool(branch)
    if not branch:
        wit["iii"] = "no vertex has out-degree 2"
    bad = None
    for v in alg.vertices:
        paths = [x for x in alg.paths_from(v) if x.arrows]
        for i, s in enumerate(paths):
            for g in paths[i + 1 :]:
                k = min(len(s), len(g))
                if s.arrows[:k] == g.arrows[:k]:
                    continue
                if len(s) + len(g) != 2:
                    bad = (s, g)
                    break
            if bad:
                break
        if bad:
            break
    conds["iv"] = bad is None
    if bad:
        wit["iv"] = f"paths ({_path_text(bad[0])}) and ({_path_text(bad[1])}) have total length {len(bad[0]) + len(bad[1])}"
    return SyntacticReport(all(conds.values()), conds, wit)


# --- direct construction of the indecomposables --------------------------


def require_index_at_most_two(alg):
    """Raise unless conditions (i), (ii) and (iv) hold.

    Dropping (iii) also admits the Nakayama algebras among the connected
    quivers (every projective uniserial), where the same constructions apply.
    """
    rep = is_right_2_nakayama_syntactic(alg)
    bad = next((c for c in ("i", "ii", "iv") if not rep.conditions[c]), None)
    if bad is not None:
        raise NotTwoNakayama(f"condition ({bad}) fails: {rep.witnesses[bad]}", rep)
    return rep


def _socle_pieces(m):
    """The simple summands of a socle supported at distinct vertices."""
    soc = m.socle_series[0]
    out = []
    for v in m.algebra.vertices:
        b = soc.bases[v]
        for row in b:
            out.append((v, SubspaceFamily(m, {v: row.reshape(1, -1)})))
    return out


def two_nakayama_indecomposables(alg):
    """Indecomposables of a right 2-Nakayama (or Nakayama) algebra: ``P/rad^i P`` for uniserial ``P``;
    ``P``, ``P/S1``, ``P/S2``, ``P/rad P`` for the 2-factor-serial projectives."""
    require_index_at_most_two(alg)
    cands = []
    for a in alg.vertices:
        P = projective_module(alg, a)
        if is_uniserial(P):
            series = P.radical_series
            for i in range(1, len(series)):
                m = quotient_by(P, series[i])
                m.name = f"P{a}/rad{i}" if i < len(series) - 1 else f"P{a}"
                if m.length == 1:
                    m.name = f"S{a}"
                cands.append(m)
        else:
            cands.append(P)
            for v, s in _socle_pieces(P):
                m = quotient_by(P, s)
                m.name = f"P{a}/S{v}"
                cands.append(m)
            top = quotient_by(P, P.radical_series[1])
            top.name = f"S{a}"
            cands.append(top)
    out = []
    for m in cands:
        if not any(is_isomorphic(m, n) for n in out):
            out.append(m)
    return out
