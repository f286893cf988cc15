import math

import pytest

from lorentzkm.data import RANKS, SUPPORTED_T, TABLE1
from lorentzkm.jacobi import generator, norm_class
from lorentzkm.reflective import (
    RootClass, basis_form, combination, divisor_multiplicities, enumerate_root_classes,
    is_reflective, reduced_coeff, rj_basis, search_unit_multiplicity, table1_mismatches,
)

COUNTS = dict(zip(SUPPORTED_T, (3, 7, 7, 7, 1, 1, 1, 1, 1)))


@pytest.mark.parametrize("t", SUPPORTED_T)
def test_table1_reproduced(t):
    assert table1_mismatches(t) == []


@pytest.mark.parametrize("t", SUPPORTED_T)
def test_basis_forms_reflective(t):
    for f in rj_basis(t).forms:
        assert is_reflective(f, t) == (True, None)
        assert f.weight == 0 and f.index == t


def test_counterexample_cube():
    ok, witness = is_reflective(generator("phi_0_1", 2) ** 3, 3)
    assert not ok and witness == (0, 3)
    # independent: D = -9 does not divide gcd(12, 6) = 6
    D, _ = norm_class(0, 3, 3)
    assert D == -9 and math.gcd(12, 6) % 9


def test_total_basis_size():
    # ranks 2, 3, 3, 3, 3, 3, 4, 2, 3
    assert sum(RANKS[t] for t in SUPPORTED_T) == 26


@pytest.mark.parametrize("t", SUPPORTED_T)
def test_root_classes_cover_printed(t):
    classes = set(enumerate_root_classes(t))
    labels = TABLE1[t]["R"] or TABLE1[t]["P0_classes"]
    for D, l in labels:
        r = l % (2 * t)
        assert RootClass(D, min(r, 2 * t - r)) in classes


@pytest.mark.parametrize("t", [1, 2, 3, 4, 8, 9])
def test_multiplicities_against_direct_sum(t):
    # oracle: no reduction mod 2t, just a deep expansion
    deep = 12
    for j in range(1, RANKS[t] + 1):
        f = basis_form(t, j, deep)
        got = divisor_multiplicities(basis_form(t, j), t)
        for cls in enumerate_root_classes(t):
            a, b = cls.divisor_data(t)
            total = 0
            for n in range(1, 20):
                if n * n * a >= deep:
                    break
                total += f.coeff(n * n * a, n * b)
            assert got[cls] == total


@pytest.mark.parametrize("t", [2, 4, 9])
def test_reduced_coeff_matches_deep_lookup(t):
    f = basis_form(t, 1, 5)
    for k in range(-1, 4):
        for l in range(-3 * t, 3 * t + 1):
            if 4 * t * k - l * l < -4 * t:
                continue
            want = f.coeff(k, l) if k < 5 else None
            assert reduced_coeff(f, t, k, l) == want


@pytest.mark.parametrize("t", SUPPORTED_T)
def test_unit_multiplicity_counts(t):
    sols = search_unit_multiplicity(t)
    assert len(sols) == COUNTS[t]
    assert search_unit_multiplicity(t, 40) == sols
    basis = rj_basis(t)
    for c in sols:
        m = divisor_multiplicities(combination(basis, c), t)
        assert set(m.values()) <= {0, 1}


def test_search_agrees_with_brute_force_box():
    M = rj_basis(2).mul
    box = [(a, b, c) for a in range(-6, 7) for b in range(-6, 7) for c in range(-6, 7)
           if (a, b, c) != (0, 0, 0)
           and all(sum(x * y for x, y in zip(row, (a, b, c))) in (0, 1) for row in M)]
    assert search_unit_multiplicity(2, 6) == sorted(box)


def test_bad_inputs():
    with pytest.raises(ValueError):
        rj_basis(5)
    with pytest.raises(ValueError):
        basis_form(1, 3)
    with pytest.raises(ValueError):
        combination(rj_basis(1), (1, 0, 0))
    with pytest.raises(ValueError):
        search_unit_multiplicity(1, 0)
