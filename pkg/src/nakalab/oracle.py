"""Independent recomputations of the factor-serial index and the invariant suite.

Three index computations are compared: the first non-local radical power
(the production rule), the definition applied to the quotients ``M/rad^i``,
and the submodule characterisation (every submodule longer than ``n`` is
local, every submodule of length ``n`` is not).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .module import (
    cofactor_serial_index,
    dualize,
    enumerate_submodules,
    factor_serial_index,
    is_indecomposable,
    is_local,
    is_uniserial,
    loewy_length,
    quotient_by,
    radical_series,
    simple_submodules,
    socle_series,
    submodule,
)


def index_radical_rule(m):
    return factor_serial_index(m).index


def _fresh_uniserial(m):
    # recompute from scratch on a copy so no cached series is reused
    from .module import Representation

    return is_uniserial(Representation(m.algebra, m.dims, m.mats, check=False))


def index_by_definition(m):
    """``n`` with ``M/rad^{l-n}`` uniserial and ``M/rad^{l-n+1}`` not (``n = 1`` if uniserial)."""
    if _fresh_uniserial(m):
        return 1
    l = m.length
    series = radical_series(m)

    def rad(i):
        return series[i] if i < len(series) else series[-1]

    hits = [n for n in range(2, l + 1)
            if _fresh_uniserial(quotient_by(m, rad(l - n))) and not _fresh_uniserial(quotient_by(m, rad(l - n + 1)))]
    if len(hits) != 1:
        raise AssertionError(f"definition yields {hits} for {m}")
    return hits[0]


def index_by_submodules(m, subs=None, budget=1 << 12):
    """The unique ``n`` satisfying the submodule characterisation."""
    if is_uniserial(m):
        return 1
    subs = subs if subs is not None else enumerate_submodules(m, budget)
    info = []
    for s in subs:
        if s.is_zero:
            continue
        info.append((len(s), is_local(submodule(m, s))))
    hits = []
    for n in range(2, m.length + 1):
        if all((ln <= n or loc) and (ln != n or not loc) for ln, loc in info):
            hits.append(n)
    if len(hits) != 1:
        raise AssertionError(f"submodule characterisation yields {hits} for {m}")
    return hits[0]


@dataclass
class InvariantResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        out = f"{status}  {self.name} ({self.checked} checked)"
        if self.failures:
            out += f"\n      counterexample: {self.failures[0]}"
        return out


def _name(m):
    return m.name or str(m.dim_vector)


def run_invariants(modules, budget=1 << 12, index=index_radical_rule):
    """Run every module invariant over ``modules``; ``index`` is the function under test."""
    names = ["definition", "submodule characterisation", "socle recursion", "quotient monotonicity",
             "submodule property", "bounds", "duality", "radical square zero", "quotients uniserial"]
    res = {n: InvariantResult(n) for n in names}

    def check(name, ok, witness):
        res[name].checked += 1
        if not ok:
            res[name].failures.append(witness)

    for m in modules:
        if m.is_zero:
            continue
        if m.p ** m.length > budget:
            raise BudgetExceeded(f"module {_name(m)} of length {m.length} exceeds the oracle budget")
        n = index(m)
        l = m.length
        ll = loewy_length(m)
        check("definition", n == index_by_definition(m), (_name(m), n, index_by_definition(m)))
        subs = enumerate_submodules(m, budget)
        ns = index_by_submodules(m, subs)
        check("submodule characterisation", n == ns, (_name(m), n, ns))
        uni = is_uniserial(m)
        if not uni:
            best, arg = 0, None
            for s in simple_submodules(m):
                k = index(quotient_by(m, s))
                if k > best:
                    best, arg = k, s.dim_vector
            check("socle recursion", n == best + 1, (_name(m), n, best, arg))
        for s in subs:
            if s.is_zero or len(s) == l:
                continue
            q = quotient_by(m, s)
            if not is_uniserial(q):
                check("quotient monotonicity", n > index(q), (_name(m), s.dim_vector, n, index(q)))
            if not uni:
                k = index(submodule(m, s))
                ok = k == n if len(s) >= n else k < n
                check("submodule property", ok, (_name(m), s.dim_vector, len(s), k, n))
        c = cofactor_serial_index(m).index
        sl = len(socle_series(m))
        check("bounds", max(1, l - ll) <= n <= l <= n + ll - 1 and max(1, l - sl) <= c <= l <= c + sl - 1,
              (_name(m), l, ll, n, c))
        d = index(dualize(m))
        check("duality", c == d, (_name(m), c, d))
        if ll <= 2 and l > 2 and is_indecomposable(m):
            check("radical square zero", n == (l - 1 if is_local(m) else l), (_name(m), n, l))
        for i in range(0, l - n + 1):
            series = radical_series(m)
            if i < len(series):
                check("quotients uniserial", is_uniserial(quotient_by(m, series[i])), (_name(m), i))
    return [res[n] for n in names]


def run_oracle(alg, budget=1 << 12, index=index_radical_rule, modules=None):
    """Invariant suite over every indecomposable of ``alg`` (or the given modules)."""
    if modules is None:
        from .classify import indecomposables

        _, modules = indecomposables(alg)
    return run_invariants(modules, budget, index), len(modules)
