"""Shared, cached small-algebra population for the slow suites."""

from functools import lru_cache

from nakalab.classify import classify, is_right_2_nakayama_syntactic
from nakalab.errors import RepresentationInfinite
from nakalab.generate import string_algebras


@lru_cache(maxsize=None)
def population():
    return tuple(string_algebras(5, 5))


@lru_cache(maxsize=None)
def classified():
    """``(alg, syntactic report, right index or None)`` for the whole population."""
    out = []
    for alg in population():
        syn = is_right_2_nakayama_syntactic(alg)
        try:
            right = classify(alg, compute_left=False).right_index
        except RepresentationInfinite:
            right = None
        out.append((alg, syn, right))
    return tuple(out)


@lru_cache(maxsize=None)
def right_two():
    return tuple(alg for alg, syn, _ in classified() if syn)
