import pytest

from nakalab.classify import indecomposables
from nakalab.errors import BudgetExceeded
from nakalab.generate import load_fixture
from nakalab.module import factor_serial_index, is_uniserial, projective_module
from nakalab.oracle import (
    index_by_definition,
    index_by_submodules,
    index_radical_rule,
    run_invariants,
    run_oracle,
)


@pytest.mark.parametrize("name", ["ex2_4.quiver", "lambda2.quiver", "d4.quiver"])
def test_three_computations_agree(name):
    _, mods = indecomposables(load_fixture(name))
    for m in mods:
        n = index_radical_rule(m)
        assert index_by_definition(m) == n
        assert index_by_submodules(m) == n


def test_oracle_lambda2():
    results, n = run_oracle(load_fixture("lambda2.quiver"))
    assert n == 10
    assert all(r.passed for r in results), [r.line() for r in results]
    assert {r.name for r in results if r.checked} >= {"definition", "socle recursion", "bounds", "duality"}


def test_oracle_ex24():
    results, _ = run_oracle(load_fixture("ex2_4.quiver"))
    assert all(r.passed for r in results)


def test_d4_radical_square_zero_checked(d4):
    results, _ = run_oracle(d4)
    by = {r.name: r for r in results}
    assert all(r.passed for r in results)
    assert by["radical square zero"].checked >= 1


def test_corrupted_index_breaks_socle_recursion(ex24):
    # off by one on every non-uniserial module
    def corrupted(m):
        return factor_serial_index(m).index + (0 if is_uniserial(m) else 1)

    _, mods = indecomposables(ex24)
    results = run_invariants(mods, index=corrupted)
    by = {r.name: r for r in results}
    assert not by["socle recursion"].passed
    name, n, best, arg = by["socle recursion"].failures[0]
    assert name == "b^- g" and n == 3 and best == 1 and arg is not None
    assert "counterexample" in by["socle recursion"].line()
    assert not by["definition"].passed


def test_budget_enforced():
    with pytest.raises(BudgetExceeded):
        run_invariants([projective_module(load_fixture("lambda3.quiver"), 6)], budget=4)
