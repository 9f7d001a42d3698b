import numpy as np
import pytest

from nakalab import gf
from nakalab.algebra import make_algebra, opposite_algebra
from nakalab.dsl import format_module, parse_module
from nakalab.errors import BudgetExceeded, InvalidModule, ParseError
from nakalab.generate import lambda_t, load_fixture
from nakalab.module import (
    Representation,
    SubspaceFamily,
    cofactor_serial_index,
    decompose,
    direct_sum,
    dualize,
    endomorphism_radical,
    enumerate_submodules,
    factor_serial_index,
    generated_submodule,
    hom_basis,
    injective_module,
    is_homomorphism,
    is_indecomposable,
    is_isomorphic,
    is_local,
    is_uniserial,
    length,
    loewy_length,
    module_report,
    projective_module,
    quotient_by,
    quotient_with_map,
    radical_series,
    simple_module,
    simple_submodules,
    socle,
    socle_series,
    submodule,
)


def dims_at(m, vertices):
    return tuple(m.dims[v] for v in vertices)


@pytest.fixture(scope="module")
def d4_121():
    return load_fixture("d4_121.module")


# --- projective and injective modules -----------------------------------


def test_projective_ex24(ex24):
    P = projective_module(ex24, 3)
    assert dims_at(P, (1, 2, 3)) == (1, 1, 1)
    assert is_local(P) and not is_uniserial(P)


def test_projective_at_sink_is_simple(ex24):
    P = projective_module(ex24, 1)
    assert P.length == 1 and P.dim_vector == (1, 0, 0)


def test_projective_lambda2(lam2):
    P = projective_module(lam2, 4)
    assert dims_at(P, (4, 3, 2, 1)) == (1, 1, 1, 0)
    assert P.length == 3
    assert sorted(str(p) for v in P.basis_paths for p in P.basis_paths[v]) == sorted(["e4", "b1", "a1"])


def test_injective_lambda2(lam2):
    inj = injective_module(lam2, 1)
    assert inj.length == 3
    assert dims_at(inj, (3, 2, 1)) == (1, 1, 1)
    assert not is_local(inj)


def test_injective_a2_source():
    alg = make_algebra([1, 2], [("a", 2, 1)])
    inj = injective_module(alg, 2)
    assert inj.dim_vector == (0, 1)


def test_injective_ex24(ex24):
    inj = injective_module(ex24, 1)
    assert dims_at(inj, (3, 1)) == (1, 1) and inj.dims[2] == 0
    assert is_uniserial(inj)


def test_injectives_have_simple_socle():
    for alg in [lambda_t(3), load_fixture("d4.quiver")]:
        for v in alg.vertices:
            soc = socle(injective_module(alg, v))
            assert soc.dim_vector == tuple(int(u == v) for u in alg.vertices)


# --- radical and socle series -------------------------------------------


def test_radical_series_semisimple(ex24):
    m = direct_sum([simple_module(ex24, 1), simple_module(ex24, 2)])[0]
    series = radical_series(m)
    assert [len(x) for x in series] == [2, 0]


def test_radical_series_ex24(ex24):
    P = projective_module(ex24, 3)
    series = radical_series(P)
    assert [len(x) for x in series] == [3, 2, 0]
    assert loewy_length(P) == 2
    assert series[1] == socle(P)


def test_radical_series_injective_lambda2(lam2):
    assert [len(x) for x in radical_series(injective_module(lam2, 1))] == [3, 1, 0]


def test_socle_series_simple(ex24):
    s = simple_module(ex24, 2)
    assert [len(x) for x in socle_series(s)] == [1]


def test_socle_ex24(ex24):
    soc = socle(projective_module(ex24, 3))
    assert soc.dim_vector == (1, 1, 0)


def test_socle_lambda2_p4(lam2):
    soc = socle(projective_module(lam2, 4))
    assert dims_at(soc, (4, 3, 2, 1)) == (0, 1, 1, 0)


def test_local_uniserial_flags(ex24):
    m = direct_sum([simple_module(ex24, 1), simple_module(ex24, 2)])[0]
    assert not is_local(m) and not is_uniserial(m) and length(m) == 2


# --- indices -------------------------------------------------------------


def test_factor_index_d4_121(d4_121):
    rep = factor_serial_index(d4_121)
    assert rep.index == 5
    assert rep.witness == 0
    assert rep.layer_dims == (2, 1, 2)


def test_factor_index_simple(ex24):
    rep = factor_serial_index(simple_module(ex24, 3))
    assert rep.index == 1 and rep.witness is None


def test_factor_index_lambda2_p4(lam2):
    rep = factor_serial_index(projective_module(lam2, 4))
    assert rep.index == 2 and rep.witness == 1 and rep.length == 3


def test_cofactor_index_examples(ex24, lam2):
    assert cofactor_serial_index(projective_module(lam2, 4)).index == 3
    assert cofactor_serial_index(simple_module(lam2, 2)).index == 1
    assert cofactor_serial_index(projective_module(ex24, 3)).index == 3


def test_zero_module_rejected(ex24):
    z = Representation(ex24, {})
    with pytest.raises(ValueError):
        factor_serial_index(z)
    with pytest.raises(ValueError):
        cofactor_serial_index(z)
    assert not is_local(z)


def test_report_dict(lam2):
    d = factor_serial_index(projective_module(lam2, 4)).as_dict()
    assert d["side"] == "factor" and d["index"] == 2 and d["layerDims"] == [1, 2]


# --- duality, quotients, submodules -------------------------------------


def test_dualize_ex24(ex24):
    D = dualize(projective_module(ex24, 3))
    assert D.algebra == opposite_algebra(ex24)
    assert D.dim_vector == (1, 1, 1)
    assert factor_serial_index(D).index == 3
    assert dualize(D) == projective_module(ex24, 3)


def test_dualize_simple(ex24):
    D = dualize(simple_module(ex24, 2))
    assert D.dim_vector == (0, 1, 0)


def test_quotient_by_whole(ex24):
    P = projective_module(ex24, 3)
    assert quotient_by(P, P.whole()).is_zero


def test_quotient_by_simple(ex24):
    P = projective_module(ex24, 3)
    s1 = SubspaceFamily(P, {1: np.array([[1]])})
    q = quotient_by(P, s1)
    assert q.length == 2 and is_uniserial(q)


def test_quotient_d4_by_socle(d4_121):
    q, proj = quotient_with_map(d4_121, socle(d4_121))
    assert q.length == d4_121.length - len(socle(d4_121))
    assert is_homomorphism(proj, d4_121, q)
    assert [len(x) for x in radical_series(q)][:1] == [3]


def test_quotient_rejects_non_submodule(ex24):
    P = projective_module(ex24, 3)
    top = SubspaceFamily(P, {3: np.array([[1]])})
    with pytest.raises(InvalidModule):
        quotient_by(P, top)


def test_submodule_inclusion_is_hom(d4_121):
    for fam in enumerate_submodules(d4_121):
        sub = submodule(d4_121, fam)
        inc = {v: fam.bases[v] for v in fam.bases}
        assert is_homomorphism(inc, sub, d4_121)


def test_generated_submodule(ex24):
    P = projective_module(ex24, 3)
    g = generated_submodule(P, {3: np.array([[1]])})
    assert len(g) == 3


# --- hom spaces ----------------------------------------------------------


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_hom_from_projective(lam2, a):
    P = projective_module(lam2, a)
    for v in lam2.vertices:
        for M in (projective_module(lam2, v), injective_module(lam2, v), simple_module(lam2, v)):
            assert len(hom_basis(P, M)) == M.dims[a]


def test_end_ex24(ex24):
    P = projective_module(ex24, 3)
    assert len(hom_basis(P, P)) == 1
    assert len(hom_basis(simple_module(ex24, 1), P)) == 1
    for f in hom_basis(P, P):
        assert is_homomorphism(f, P, P)


# --- indecomposability and isomorphism ----------------------------------


def test_decomposable_s1_s1(ex24):
    m = direct_sum([simple_module(ex24, 1), simple_module(ex24, 1)])[0]
    res = is_indecomposable(m)
    assert not res and res.certainty == "proved"
    parts = decompose(m)
    assert sorted(x.dim_vector for x in parts) == [(1, 0, 0), (1, 0, 0)]


def test_indecomposable_examples(ex24, lam2):
    res = is_indecomposable(projective_module(ex24, 3))
    assert res and res.certainty == "proved"
    inj = injective_module(lam2, 1)
    assert len(hom_basis(inj, inj)) == 1
    assert is_indecomposable(inj)


def test_decompose_mixed(d4_121):
    alg = d4_121.algebra
    m, _, _ = direct_sum([d4_121, projective_module(alg, 4), simple_module(alg, 3)])
    parts = decompose(m)
    assert sorted(p.dim_vector for p in parts) == sorted([d4_121.dim_vector, (1, 1, 1, 1), (0, 0, 1, 0)])
    assert all(is_indecomposable(p) for p in parts)


def test_isomorphism(ex24):
    P = projective_module(ex24, 3)
    # the same module in a different basis is isomorphic
    Q = Representation(ex24, P.dims, {k: v.copy() for k, v in P.mats.items()})
    assert is_isomorphic(P, Q)
    assert not is_isomorphic(P, simple_module(ex24, 3))


def test_endomorphism_radical(d4_121, ex24):
    rad, basis = endomorphism_radical(d4_121)
    assert rad.shape[0] == len(basis) - 1
    # local fallback matches enumeration
    P = projective_module(ex24, 3)
    r1, _ = endomorphism_radical(P)
    r2, _ = endomorphism_radical(P, exhaustive_budget=0)
    assert r1.shape == r2.shape


# --- submodule oracle ----------------------------------------------------


def test_submodules_simple(ex24):
    subs = enumerate_submodules(simple_module(ex24, 1))
    assert sorted(len(s) for s in subs) == [0, 1]


def test_submodules_ex24(ex24):
    subs = enumerate_submodules(projective_module(ex24, 3))
    assert sorted(s.dim_vector for s in subs) == sorted([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1)])


def test_submodules_d4_121(d4_121):
    subs = enumerate_submodules(d4_121)
    assert all(s.is_submodule() for s in subs)
    top = [s for s in subs if len(s) == 5]
    assert len(top) == 1 and not is_local(submodule(d4_121, top[0]))


def test_submodule_budget(d4_121):
    with pytest.raises(BudgetExceeded):
        enumerate_submodules(d4_121, budget=16)


def test_simple_submodules_count(ex24):
    P = projective_module(ex24, 3)
    assert sorted(s.dim_vector for s in simple_submodules(P)) == [(0, 1, 0), (1, 0, 0)]


def test_simple_submodules_over_f3():
    alg = make_algebra([1, 2], [("a", 1, 2)], p=3)
    m = direct_sum([simple_module(alg, 2), simple_module(alg, 2)])[0]
    # projective lines of F_3^2
    assert len(simple_submodules(m)) == 4


# --- validation and file format -----------------------------------------


def test_relation_violation(lam2):
    mats = {"b1": np.array([[1]]), "b2": np.array([[1]])}
    with pytest.raises(InvalidModule, match="relation"):
        Representation(lam2, {4: 1, 3: 1, 1: 1}, mats)


def test_shape_mismatch(lam2):
    with pytest.raises(InvalidModule, match="shape"):
        Representation(lam2, {4: 1, 3: 1}, {"b1": np.array([[1, 0]])})


def test_module_file_roundtrip(lam2):
    P = projective_module(lam2, 4)
    text = format_module(P)
    Q = parse_module(text, algebra=lam2)
    assert Q == P


def test_module_file_errors(lam2):
    with pytest.raises(ParseError) as info:
        parse_module("dim 9 1\n", algebra=lam2)
    assert info.value.line == 1
    with pytest.raises(ParseError, match="shape"):
        parse_module("dim 4 1\ndim 3 1\nmap b1 [[1, 1]]\n", algebra=lam2)
    with pytest.raises(ParseError, match="relation"):
        parse_module("dim 4 1\ndim 3 1\ndim 1 1\nmap b1 [[1]]\nmap b2 [[1]]\n", algebra=lam2)
    with pytest.raises(ParseError, match="unknown arrow"):
        parse_module("dim 4 1\nmap zz [[1]]\n", algebra=lam2)


def test_entries_reduced_mod_p(lam2):
    m = parse_module("dim 4 1\ndim 3 1\nmap b1 [[3]]\n", algebra=lam2)
    assert m.mats["b1"][0, 0] == 1


def test_module_report(d4_121):
    rep = module_report(d4_121)
    assert rep["factorIndex"] == 5 and rep["length"] == 5 and rep["local"] is False
    assert set(rep) >= {"length", "loewyLength", "local", "uniserial", "factorIndex", "cofactorIndex",
                        "radicalLayerDims", "socleLayerDims"}


def test_field_three(ex24):
    alg = ex24.with_field(3)
    P = projective_module(alg, 3)
    assert factor_serial_index(P).index == 2
    # the socle S1 + S2 sits at distinct vertices, so the lattice does not grow with p
    assert len(enumerate_submodules(P)) == 5
