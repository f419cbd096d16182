import random

import numpy as np
import pytest
import sympy

from extnilhecke.intlinalg import (
    IntMatrix,
    hermite_form,
    kernel_basis,
    modular_rank,
    rank,
    solve_integral,
)


def test_hermite_identity():
    h, u = hermite_form(IntMatrix.identity(3))
    assert h == IntMatrix.identity(3)
    assert u == IntMatrix.identity(3)


def test_hermite_rank_one_example():
    # row-reduce [[2,4],[1,2]] over the integers by hand: pivot row (1,2)
    h, u = hermite_form([[2, 4], [1, 2]])
    assert h.entries[0].tolist() == [1, 2]
    assert h.entries[1].tolist() == [0, 0]
    assert rank([[2, 4], [1, 2]]) == 1


def test_hermite_zero():
    h, u = hermite_form([[0, 0], [0, 0]])
    assert h == IntMatrix.zeros(2, 2)
    assert u == IntMatrix.identity(2)


def test_hermite_transform_is_unimodular():
    rng = random.Random(0)
    for _ in range(25):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        h, u = hermite_form(m)
        assert (u.entries @ np.array(m, dtype=object) == h.entries).all()
        det = sympy.Matrix(u.entries.tolist()).det()
        assert abs(det) == 1


def test_solve_identity():
    res = solve_integral(IntMatrix.identity(3), [4, -1, 7])
    assert res.solution == [4, -1, 7]


def test_solve_parity_obstruction():
    res = solve_integral([[2]], [1])
    assert res.solution is None
    assert res.rational is not None
    assert res.rational[0] * 2 == 1


def test_solve_underdetermined():
    res = solve_integral([[1, 1]], [3])
    x = res.solution
    assert x is not None and x[0] + x[1] == 3


def test_solve_inconsistent():
    res = solve_integral([[1, 1], [1, 1]], [0, 1])
    assert res.solution is None
    assert res.rational is None
    assert not res.consistent_over_rationals


def test_solve_random_verified_by_substitution():
    rng = random.Random(1)
    for _ in range(25):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = np.array([[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)], dtype=object)
        x0 = np.array([rng.randint(-4, 4) for _ in range(c)], dtype=object)
        b = m @ x0
        res = solve_integral(m, b)
        assert res.solution is not None
        assert (m @ np.array(res.solution, dtype=object) == b).all()


def test_kernel_examples():
    assert kernel_basis(IntMatrix.identity(2)) == []
    ker = kernel_basis([[1, 1]])
    assert len(ker) == 1 and ker[0] in ([1, -1], [-1, 1])
    assert kernel_basis([[0]]) == [[1]] or kernel_basis([[0]]) == [[-1]]


def test_kernel_spans_lattice():
    rng = random.Random(2)
    for _ in range(20):
        r, c = rng.randint(1, 4), rng.randint(2, 5)
        m = np.array([[rng.randint(-4, 4) for _ in range(c)] for _ in range(r)], dtype=object)
        ker = kernel_basis(m)
        for v in ker:
            assert (m @ np.array(v, dtype=object) == 0).all()
        assert len(ker) == c - rank(m)
        # sympy cross-check of the kernel dimension
        assert len(ker) == len(sympy.Matrix(m.tolist()).nullspace())


def test_modular_rank_agrees_on_small_random():
    rng = random.Random(3)
    for _ in range(20):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        assert modular_rank(m) == rank(m)
