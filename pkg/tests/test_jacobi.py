from fractions import Fraction

import pytest

from lorentzkm.jacobi import (
    GENERATORS, eisenstein_jacobi, evaluate_expression, evaluate_numeric, generator,
    index_rescale, norm_class, theta, theta_product, theta_quotient, theta_sum,
    transformation_check,
)
from lorentzkm.series import SeriesError


def sym(*pairs):
    out = {}
    for l, c in pairs:
        out[l] = out[-l] = c
    return out


@pytest.mark.parametrize("name,middle", [("phi_0_1", 10), ("phi_0_2", 4), ("phi_0_3", 2),
                                         ("phi_0_4", 1), ("phi_m2_1", -2)])
def test_q0_slices(name, middle):
    assert generator(name, 2).q_slice(0) == {-1: 1, 0: middle, 1: 1}


def test_classical_q1_slices():
    # Eichler-Zagier expansions of the two index-1 generators
    assert generator("phi_0_1", 3).q_slice(1) == sym((2, 10), (1, -64), (0, 108))
    assert generator("phi_m2_1", 3).q_slice(1) == sym((2, -2), (1, 8), (0, -12))


def test_relation_residual():
    g = {n: generator(n, 10) for n in ("phi_0_1", "phi_0_2", "phi_0_3", "phi_0_4")}
    res = g["phi_0_1"] * g["phi_0_3"] - g["phi_0_2"] ** 2 - g["phi_0_4"] * 4
    assert res.is_zero() and res.prec >= 10


def test_d06_slice():
    row = generator("D_0_6", 2).q_slice(1)
    assert [row[6], row[5], row[4]] == [1, -12, 66]
    assert generator("D_0_6", 2).index == 6


@pytest.mark.parametrize("name", GENERATORS)
def test_generator_symmetry(name):
    f = generator(name, 4)
    for (n, l), c in f.coeffs.items():
        assert f.coeffs.get((n, -l), 0) == f.parity * c


@pytest.mark.parametrize("name,t", [("phi_0_1", 1), ("phi_0_2", 2), ("phi_0_3", 3), ("phi_0_4", 4)])
def test_weight0_coefficients_depend_on_norm_class(name, t):
    f = generator(name, 6)
    seen = {}
    for n, l, c in f.natural_terms():
        key = norm_class(n, l, t)
        assert seen.setdefault(key, c) == c


def test_l_in_half_index_coset():
    th = theta(5)
    assert all(l % 2 == 1 for _, l in th.coeffs)  # l in 1/2 + Z
    assert all(l % 2 == 0 for _, l in generator("phi_0_2", 5).coeffs)


def test_theta_coefficients():
    th = theta(3)
    assert th.coeff(Fraction(1, 8), Fraction(1, 2)) == 1
    assert th.coeff(Fraction(1, 8), Fraction(-1, 2)) == -1
    assert th.coeff(Fraction(9, 8), Fraction(3, 2)) == -1


def test_theta_sum_equals_product():
    for prec in (1, 3, 7):
        assert theta_sum(prec) == theta_product(prec)


def test_index_rescale():
    f = index_rescale(generator("phi_0_2", 2), 2)
    assert f.q_slice(0) == {-2: 1, 0: 4, 2: 1}
    g = generator("phi_0_3", 2)
    assert index_rescale(g, 1) == g
    assert index_rescale(generator("phi_0_4", 2), 2).index == 16


def test_theta_quotient_slice():
    f = theta_quotient([10, 1], [5, 2], 2)
    assert f.q_slice(0) == {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}


def test_meromorphic_basis_form():
    f = evaluate_expression("E4**2*E42/Delta - 14*p1**2 + 216*p2", 2)
    assert f.q_slice(-1) == {0: 1}
    assert f.q_slice(0) == {0: 24}


def test_theta_quotient_rejects_non_divisible():
    with pytest.raises(SeriesError):
        theta_quotient([1], [2], 2)


def test_norm_class():
    assert norm_class(0, 1, 1)[0] == -1
    assert norm_class(-1, 0, 2)[0] == -8
    assert norm_class(2, 18, 36)[0] == -36


@pytest.mark.parametrize("k,m", [(4, 1), (4, 2), (4, 3), (6, 1), (6, 2)])
def test_eisenstein_jacobi_integral_with_constant_one(k, m):
    e = eisenstein_jacobi(k, m, 4)
    assert e.coeff(0, 0) == 1
    assert e.q_slice(0) == {0: 1}
    assert all(isinstance(c, int) for c in e.coeffs.values())
    assert e.weight == k and e.index == m


def test_eisenstein_jacobi_index1_values():
    assert eisenstein_jacobi(4, 1, 3).q_slice(1) == sym((2, 1), (1, 56), (0, 126))
    assert eisenstein_jacobi(6, 1, 3).q_slice(1) == sym((2, 1), (1, -88), (0, -330))


@pytest.mark.parametrize("k", [4, 6])
def test_eisenstein_jacobi_norm_invariance(k):
    e = eisenstein_jacobi(k, 1, 5)
    seen = {}
    for n, l, c in e.natural_terms():
        assert seen.setdefault(norm_class(n, l, 1), c) == c


def test_eisenstein_jacobi_relation():
    from lorentzkm.jacobi import from_qseries
    from lorentzkm.series import eisenstein
    p = 5
    E4 = from_qseries(eisenstein(4, p), 8)
    E6 = from_qseries(eisenstein(6, p), 12)
    res = E4 * generator("phi_0_1", p) - E6 * generator("phi_m2_1", p) \
        - eisenstein_jacobi(4, 1, p) * 12
    assert res.truncate(p).is_zero()


def test_e63_correction_is_not_integral():
    with pytest.raises(SeriesError) as exc:
        eisenstein_jacobi(6, 3, 3)
    assert exc.value.code == "EXACTNESS"
    assert eisenstein_jacobi(6, 3, 3, primed=True).coeff(0, 0) == 1


def test_unknown_inputs():
    with pytest.raises(ValueError):
        generator("phi_9_9", 2)
    with pytest.raises(ValueError):
        eisenstein_jacobi(8, 1, 2)


def test_numeric_shift_laws():
    f = generator("phi_0_1", 8)
    assert transformation_check(f, ("mu", 1)) < 1e-8
    assert transformation_check(f, ("lambda", 1)) < 1e-6
    assert transformation_check(f, "S", tau=1.1j) < 1e-8


def test_numeric_tail_guard():
    with pytest.raises(SeriesError):
        evaluate_numeric(generator("phi_0_1", 2), 0.05j, 0.1)
