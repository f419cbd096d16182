import pytest

from conftest import random_polynomial

from extnilhecke.exactpoly import Polynomial, x_var
from extnilhecke.nilhecke import (
    NHElement,
    centralizer_rank,
    nh_act,
    nh_basis_of_degree,
    nh_d,
    nh_d_w,
    nh_e,
    nh_e_tilde,
    nh_from_poly,
    nh_graded_rank,
    nh_hconcat,
    nh_mul,
    nh_one,
    nh_pad,
    nh_perm,
    nh_s,
    nh_x,
)
from extnilhecke.permutations import (
    all_reduced_words,
    length,
    longest_element,
    symmetric_group,
    transposition,
)


def is_zero(e):
    return e.is_zero()


# -- defining relations, idempotent and nilHecke groups, as exact identities --


@pytest.mark.parametrize("n", range(6))
def test_unit_relations(n):
    one = nh_one(n)
    assert nh_mul(one, one) == one
    for i in range(1, n + 1):
        assert nh_mul(one, nh_x(i, n)) == nh_x(i, n) == nh_mul(nh_x(i, n), one)
    for i in range(1, n):
        assert nh_mul(one, nh_d(i, n)) == nh_d(i, n) == nh_mul(nh_d(i, n), one)


def test_mismatched_strand_counts_multiply_to_zero():
    assert nh_mul(nh_one(2), nh_one(3)).is_zero()


@pytest.mark.parametrize("n", range(2, 6))
def test_nilhecke_relations(n):
    x = lambda i: nh_x(i, n)
    d = lambda i: nh_d(i, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert nh_mul(x(i), x(j)) == nh_mul(x(j), x(i))
    for i in range(1, n + 1):
        for j in range(1, n):
            if abs(i - j) > 1:
                assert nh_mul(x(i), d(j)) == nh_mul(d(j), x(i))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                assert nh_mul(d(i), d(j)) == nh_mul(d(j), d(i))
    for i in range(1, n):
        assert nh_mul(d(i), d(i)).is_zero()
    for i in range(1, n - 1):
        lhs = nh_mul(d(i), nh_mul(d(i + 1), d(i)))
        rhs = nh_mul(d(i + 1), nh_mul(d(i), d(i + 1)))
        assert lhs == rhs
    for i in range(1, n):
        assert nh_mul(x(i), d(i)) - nh_mul(d(i), x(i + 1)) == nh_one(n)
        assert nh_mul(d(i), x(i)) - nh_mul(x(i + 1), d(i)) == nh_one(n)


def test_matsumoto_consistency_s4():
    for w in symmetric_group(4):
        words = all_reduced_words(w)
        eles = []
        for word in words:
            acc = nh_one(4)
            for i in word:
                acc = nh_mul(acc, nh_d(i, 4))
            eles.append(acc)
        for e in eles[1:]:
            assert e == eles[0]
        assert eles[0] == nh_d_w(w)


def test_dw_products_vanish_or_compose():
    w0 = longest_element(3)
    assert nh_mul(nh_d_w(w0), nh_d(1, 3)).is_zero()
    assert nh_mul(nh_d(1, 3), nh_d(2, 3)) == nh_d_w((2, 3, 1))


# -- circle crossings ---------------------------------------------------------


def test_s_element_two_presentations():
    n = 2
    lhs = nh_mul(nh_d(1, n), nh_x(1, n)) - nh_mul(nh_x(1, n), nh_d(1, n))
    rhs = nh_mul(nh_x(2, n), nh_d(1, n)) - nh_mul(nh_d(1, n), nh_x(2, n))
    assert lhs == rhs == nh_s(1, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_s_elements_satisfy_symmetric_group_relations(n):
    s = lambda i: nh_s(i, n)
    for i in range(1, n):
        assert nh_mul(s(i), s(i)) == nh_one(n)
    for i in range(1, n - 1):
        assert nh_mul(s(i), nh_mul(s(i + 1), s(i))) == nh_mul(s(i + 1), nh_mul(s(i), s(i + 1)))
    for i in range(1, n):
        for j in range(i + 2, n):
            assert nh_mul(s(i), s(j)) == nh_mul(s(j), s(i))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_s_and_d_signs(n):
    for i in range(1, n):
        assert nh_mul(nh_s(i, n), nh_d(i, n)) == nh_d(i, n)
        assert nh_mul(nh_d(i, n), nh_s(i, n)) == -nh_d(i, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dot_slides_through_circle_crossing(n):
    for i in range(1, n):
        assert nh_mul(nh_x(i, n), nh_s(i, n)) == nh_mul(nh_s(i, n), nh_x(i + 1, n))


@pytest.mark.parametrize("n", [3, 4])
def test_crossing_braids_with_two_circle_crossings(n):
    for i in range(1, n - 1):
        s, d = nh_s, nh_d
        lhs = nh_mul(nh_mul(d(i, n), s(i + 1, n)), s(i, n))
        rhs = nh_mul(nh_mul(s(i + 1, n), s(i, n)), d(i + 1, n))
        assert lhs == rhs
        lhs2 = nh_mul(nh_mul(d(i + 1, n), s(i, n)), s(i + 1, n))
        rhs2 = nh_mul(nh_mul(s(i, n), s(i + 1, n)), d(i, n))
        assert lhs2 == rhs2


def test_nh_perm_realizes_transposition_action():
    w = (2, 3, 1)
    e = nh_perm(w)
    from extnilhecke.exactpoly import permute_vars

    f = x_var(1) * x_var(2) ** 2
    assert nh_act(e, f) == permute_vars(w, f)


# -- distinguished idempotents ------------------------------------------------


def test_e1_is_unit():
    assert nh_e(1) == nh_one(1)
    assert nh_e(0) == nh_one(0)


def test_dw_longest_of_two():
    assert nh_d_w(longest_element(2)) == nh_d(1, 2)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_e_k_idempotent(k):
    assert nh_mul(nh_e(k), nh_e(k)) == nh_e(k)
    assert nh_mul(nh_e_tilde(k), nh_e_tilde(k)) == nh_e_tilde(k)


def test_e2_equals_one_plus_dx():
    assert nh_e(2) == nh_one(2) + nh_mul(nh_d(1, 2), nh_x(2, 2))


def test_e_k_from_building_blocks():
    # e_k is a product of padded copies of e_2 along a reduced word of w0
    for k in [2, 3, 4]:
        word = all_reduced_words(longest_element(k))[0]
        acc = nh_one(k)
        for i in word:
            acc = nh_mul(acc, nh_pad(nh_e(2), i - 1, k - i - 1))
        assert acc == nh_e(k)


# -- the polynomial action ----------------------------------------------------


def test_action_examples():
    assert nh_act(nh_d(1, 2), x_var(1)) == Polynomial.const(1)
    f = x_var(1) * x_var(2) ** 2
    assert nh_act(nh_s(1, 2), f) == x_var(1) ** 2 * x_var(2)
    assert nh_act(nh_one(2), f) == f


def test_e2_idempotent_against_action_oracle(rng):
    e2 = nh_e(2)
    for _ in range(20):
        f = random_polynomial(rng, 2)
        assert nh_act(e2, nh_act(e2, f)) == nh_act(nh_mul(e2, e2), f)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_multiplication_matches_operator_composition(rng, n):
    # faithfulness consistency: products agree with composition of actions
    basis_gens = [nh_x(i, n) for i in range(1, n + 1)] + [nh_d(i, n) for i in range(1, n)]
    for _ in range(50):
        a = basis_gens[rng.randrange(len(basis_gens))]
        b = basis_gens[rng.randrange(len(basis_gens))]
        a = a + nh_from_poly(random_polynomial(rng, n, max_terms=2, max_exp=2), n)
        f = random_polynomial(rng, n, max_terms=3, max_exp=3)
        assert nh_act(nh_mul(a, b), f) == nh_act(a, nh_act(b, f))


def test_hconcat_of_units_and_generators():
    assert nh_hconcat(nh_one(2), nh_one(1)) == nh_one(3)
    assert nh_hconcat(nh_x(1, 1), nh_one(2)) == nh_x(1, 3)
    assert nh_hconcat(nh_one(2), nh_x(1, 1)) == nh_x(3, 3)
    assert nh_hconcat(nh_one(1), nh_d(1, 2)) == nh_d(2, 3)


# -- graded pieces and the centralizer ---------------------------------------


def test_graded_rank_counts():
    assert nh_graded_rank(1, 0) == 1
    assert nh_graded_rank(2, 0) == 3  # 1, x1*d1, x2*d1
    assert nh_graded_rank(2, -2) == 1
    assert len(nh_basis_of_degree(2, 0)) == 3


def partitions_at_most(parts: int, total: int) -> int:
    # independent counting oracle for the centralizer prediction
    if total == 0:
        return 1
    if parts == 0 or total < 0:
        return 0
    return partitions_at_most(parts - 1, total) + partitions_at_most(parts, total - parts)


def centralizer_prediction(n: int, degree: int) -> int:
    if degree % 2 or degree < 0:
        return 0
    return sum(partitions_at_most(n, j) for j in range(degree // 2 + 1))


def test_centralizer_degree_zero():
    assert centralizer_rank(1, 0) == 1
    assert centralizer_rank(2, 0) == 1


def test_centralizer_one_strand_matches_m_plus_one():
    for m in range(4):
        assert centralizer_rank(1, 2 * m) == m + 1 == centralizer_prediction(1, 2 * m)


def test_centralizer_two_strands_small_degrees():
    for d in [0, 2, 4]:
        assert centralizer_rank(2, d) == centralizer_prediction(2, d)


def test_centralizer_negative_degree_empty():
    assert centralizer_rank(2, -2) == 0
