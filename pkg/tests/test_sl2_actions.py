from fractions import Fraction

import pytest

from sl2sym.combinatorics import count_lw_solutions, partitions, sylvester_cayley
from sl2sym.polyring import rho1_apply, rho2_apply
from sl2sym.sl2_actions import (
    act_rho1,
    act_rho1_named,
    act_rho2,
    character_finite,
    decompose_finite,
    decompose_lambda_n,
    lowest_weight_basis_rho1,
    lowest_weight_space_rho2,
    rational_nullspace,
    rational_rref,
    vd_realization,
    weight_of_alpha,
)
from sl2sym.symfunc import (
    SchurVector,
    elementary_schur,
    poly_to_schur,
    power_sum_schur,
    schur_to_poly,
    z_generator_schur,
)


def basis(n, lam):
    return SchurVector.basis(n, lam)


def test_act_rho1_examples():
    assert act_rho1("lower", basis(3, (2, 1))) == SchurVector(
        3, {(1, 1): -4, (2,): -2}
    )
    assert act_rho1("raise", SchurVector.unit(3)) == SchurVector.zero(3)
    assert act_rho1("cartan", basis(3, (2, 1))) == 6 * basis(3, (2, 1))


def test_act_rho1_matches_poly_route():
    for n in (1, 2, 3):
        for size in range(5):
            for lam in partitions(size, n):
                fp = schur_to_poly(lam, n)
                for op in ("lower", "cartan", "raise"):
                    assert act_rho1(op, basis(n, lam)) == poly_to_schur(
                        rho1_apply(op, fp)
                    )


def test_act_rho2_examples():
    assert act_rho2("cartan", SchurVector.unit(3), 6) == -18 * SchurVector.unit(3)
    assert act_rho2("raise", basis(1, (4,)), 4) == SchurVector.zero(1)
    assert act_rho2("raise", SchurVector.unit(2), 2) == 2 * basis(2, (1,))
    with pytest.raises(ValueError):
        act_rho2("lower", basis(2, (3,)), 2)


def test_act_rho2_matches_poly_route():
    for n in (1, 2, 3):
        for d in (1, 2, 4):
            for size in range(5):
                for lam in partitions(size, n, d):
                    fp = schur_to_poly(lam, n)
                    for op in ("lower", "cartan", "raise"):
                        assert act_rho2(op, basis(n, lam), d) == poly_to_schur(
                            rho2_apply(op, fp, d)
                        )


def test_act_rho1_named():
    assert act_rho1_named("lower", "e", 2, 3) == -2 * elementary_schur(1, 3)
    assert act_rho1_named("raise", "e", 3, 3) == SchurVector(3, {(2, 1, 1): 1})
    assert act_rho1_named("lower", "p", 2, 4) == -2 * power_sum_schur(1, 4)
    assert act_rho1_named("lower", "p", 1, 3) == -3 * SchurVector.unit(3)
    assert act_rho1_named("lower", "h", 3, 2) == -4 * SchurVector(2, {(2,): 1})
    with pytest.raises(ValueError):
        act_rho1_named("lower", "e", 4, 3)
    with pytest.raises(ValueError):
        act_rho1_named("lower", "q", 1, 3)


def test_act_rho1_named_matches_direct_action():
    for n in (1, 2, 3, 4):
        for i in range(1, n + 1):
            for op in ("lower", "cartan", "raise"):
                assert act_rho1_named(op, "e", i, n) == act_rho1(
                    op, elementary_schur(i, n)
                )
        for i in range(1, 6):
            for op in ("lower", "cartan", "raise"):
                assert act_rho1_named(op, "h", i, n) == act_rho1(op, basis(n, (i,)))
                assert act_rho1_named(op, "p", i, n) == act_rho1(
                    op, power_sum_schur(i, n)
                )


def test_weight_of_alpha():
    assert weight_of_alpha((1, 1)) == 10
    assert weight_of_alpha(()) == 0
    assert weight_of_alpha((0,)) == 0
    # cartan eigenvalue of z_3 in three variables
    z3 = z_generator_schur(3, 3)
    assert act_rho1("cartan", z3) == Fraction(weight_of_alpha((0, 1))) * z3


def test_lowest_weight_basis_rho1():
    vectors = lowest_weight_basis_rho1(3, 6)
    assert len(vectors) == 7
    assert vectors[0].vector == SchurVector.unit(3)
    assert [v.weight for v in vectors] == [0, 4, 6, 8, 10, 12, 12]
    for vec, weight in vectors:
        assert act_rho1("lower", vec) == SchurVector.zero(3)
        assert act_rho1("cartan", vec) == Fraction(weight) * vec

    two_var = lowest_weight_basis_rho1(2, 4)
    assert [v.weight for v in two_var] == [0, 4, 8]
    assert two_var[1].vector == z_generator_schur(2, 2)

    assert len(lowest_weight_basis_rho1(4, 1)) == 1

    for n in (2, 3, 4):
        per_degree = {}
        for _, weight in lowest_weight_basis_rho1(n, 6):
            per_degree[weight // 2] = per_degree.get(weight // 2, 0) + 1
        for m in range(7):
            assert per_degree.get(m, 0) == count_lw_solutions(n, m)


def test_decompose_lambda_n():
    table = decompose_lambda_n(3, 10)
    assert table == {0: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 2, 7: 1, 8: 2, 9: 2, 10: 2}
    assert decompose_lambda_n(2, 7) == {0: 1, 2: 1, 4: 1, 6: 1}
    for n in (2, 3, 4, 5):
        assert decompose_lambda_n(n, 0) == {0: 1}


def test_character_finite():
    assert character_finite(2, 2) == {-4: 1, -2: 1, 0: 2, 2: 1, 4: 1}
    assert character_finite(1, 1) == {-1: 1, 1: 1}
    for n in range(6):
        for d in range(6):
            char = character_finite(n, d)
            assert char == {-w: m for w, m in char.items()}


def test_decompose_finite():
    assert decompose_finite(3, 2) == {6: 1, 2: 1}
    assert decompose_finite(3, 6) == {2: 1, 6: 2, 8: 1, 10: 1, 12: 1, 14: 1, 18: 1}
    assert decompose_finite(2, 2) == {4: 1, 0: 1}
    for n in range(6):
        for d in range(6):
            decomp = decompose_finite(n, d)
            for i in range(n * d + 1):
                assert decomp.get(i, 0) == sylvester_cayley(n, d, i)


def test_lowest_weight_space_rho2():
    lw = lowest_weight_space_rho2(3, 6)
    assert sorted(v.weight for v in lw) == [-18, -14, -12, -10, -8, -6, -6, -2]
    for vec, weight in lw:
        assert act_rho2("lower", vec, 6) == SchurVector.zero(3)
        assert act_rho2("cartan", vec, 6) == Fraction(weight) * vec

    for d in (1, 3, 5):
        lw1 = lowest_weight_space_rho2(1, d)
        assert len(lw1) == 1
        assert lw1[0].vector == SchurVector.unit(1)
        assert lw1[0].weight == -d

    assert sorted(v.weight for v in lowest_weight_space_rho2(2, 2)) == [-4, 0]


def test_vd_realization():
    w = vd_realization(2)
    assert w[0] == SchurVector.unit(2)
    assert w[1] == Fraction(1, 2) * elementary_schur(1, 2)
    assert w[2] == elementary_schur(2, 2)

    for d in range(1, 9):
        w = vd_realization(d)
        assert len(w) == d + 1
        assert act_rho2("raise", w[d], 1) == SchurVector.zero(d)
        for i in range(d + 1):
            assert act_rho2("cartan", w[i], 1) == Fraction(2 * i - d) * w[i]
            if i:
                assert act_rho2("lower", w[i], 1) == Fraction(i) * w[i - 1]
            if i < d:
                assert act_rho2("raise", w[i], 1) == Fraction(d - i) * w[i + 1]


def test_standard_module_relations():
    # raised kernel vectors behave like the abstract lowest-weight basis
    for n in (2, 3):
        for alpha in [(0,) * (n - 1), (1,) + (0,) * (n - 2)]:
            from sl2sym.symfunc import z_monomial_schur

            v0 = z_monomial_schur(alpha, n)
            w = weight_of_alpha(alpha)
            v = v0
            for k in range(1, 4):
                prev = v
                v = act_rho1("raise", prev)
                assert act_rho1("lower", v) == Fraction(-k * (w + k - 1)) * prev
                assert act_rho1("cartan", v) == Fraction(w + 2 * k) * v


def test_rational_linear_algebra():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    reduced, pivots = rational_rref(rows)
    assert pivots == [0]
    assert reduced[0] == [Fraction(1), Fraction(2)]
    null = rational_nullspace(rows, 2)
    assert null == [[Fraction(-2), Fraction(1)]]
    assert rational_nullspace([], 3) == [
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1)],
    ]
