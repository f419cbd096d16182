import random

import pytest
import sympy

from extnilhecke.exactpoly import Monomial, Polynomial, x_monomial


@pytest.fixture
def rng():
    return random.Random(0)


def random_polynomial(rng, n, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(n))
        terms[exps] = rng.randint(-5, 5)
    out = Polynomial.zero()
    for exps, c in terms.items():
        out = out + x_monomial(exps, c)
    return out


_SYMS = sympy.symbols("x1:20")


def to_sympy(f: Polynomial):
    expr = sympy.Integer(0)
    for m, c in f.terms.items():
        t = sympy.Integer(c)
        for i, e in enumerate(m.x):
            t *= _SYMS[i] ** e
        for i, e in m.r:
            t *= sympy.Symbol(f"r{i}") ** e
        expr += t
    return sympy.expand(expr)


def sympy_divided_difference(f: Polynomial, i: int):
    """Independent oracle: (f - s_i f)/(x_i - x_{i+1}) via sympy division."""
    expr = to_sympy(f)
    xi, xj = _SYMS[i - 1], _SYMS[i]
    swapped = expr.subs({xi: xj, xj: xi}, simultaneous=True)
    q, r = sympy.div(sympy.expand(expr - swapped), xi - xj, xi)
    assert r == 0
    return sympy.expand(q)
