import itertools
import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from lorentzkm.cli import _row_chamber, scaled_cartan_holds
from lorentzkm.data import D_INF_SCALE, RANK3_CARTAN, SUPPORTED_T, TABLE1, TABLE2
from lorentzkm.hyperbolic import (
    angles, angles_of_matrix, cartan_matrix, chamber_orbit, disc, inner,
    is_finite_volume, is_root, narrow_part_check, norm, polygon_angles, reflect,
    t_n_non2reflective, verify_cartan_rank3, vinberg_chamber, weyl_orbit, weyl_vector,
)
from lorentzkm.series import SeriesError

A1, A2, A3 = (1, 2, 0), (0, -1, 0), (-1, 0, 1)


def test_inner_and_disc():
    assert 2 * inner(1, A1, A2) == -2
    assert disc(1, A2) == 1
    for t in (1, 4, 36):
        for a in [(1, 3, -2), (0, 5, 1), (-2, 7, 3)]:
            assert disc(t, a) == disc(t, tuple(-c for c in a)) == -4 * t * a[0] * a[2] + a[1] ** 2


def test_reflect_examples():
    assert reflect(1, A1, A2) == (1, 1, 0)
    assert reflect(1, A3, (1, 1, 0)) == (0, 1, 1)
    x = (3, -5, 2)
    assert reflect(1, A1, reflect(1, A1, x)) == x


vec = st.tuples(st.integers(-6, 6), st.integers(-12, 12), st.integers(-6, 6))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SUPPORTED_T), vec, vec)
def test_reflection_is_an_isometry(t, x, y):
    for a in TABLE1[t]["P0"]:
        assert inner(t, reflect(t, a, x), reflect(t, a, y)) == inner(t, x, y)


@pytest.mark.parametrize("t", SUPPORTED_T)
def test_reflections_preserve_the_dual_lattice(t):
    rng = random.Random(t)
    for a in TABLE1[t]["P0"]:
        assert is_root(t, a)
        for _ in range(20):
            x = tuple(rng.randint(-9, 9) for _ in range(3))
            assert all(F(c).denominator == 1 for c in reflect(t, a, x))


def test_non_roots():
    assert not is_root(1, (1, 0, 1))      # negative square
    assert not is_root(2, (1, 1, -1))     # 2(f, a)/a^2 = 8/9 for f = (1, 0, 0)
    assert is_root(2, (0, 3, 0))          # non-primitive, same reflection as (0, 1, 0)


def permutation_gram(t, roots):
    """Gram of ``roots`` reordered to the printed P0 order."""
    P0 = [tuple(x) for x in TABLE1[t]["P0"]]
    index = [roots.index(a) for a in P0]
    G = [[int(2 * t * inner(t, a, b)) for b in roots] for a in roots]
    return [[G[i][j] for j in index] for i in index]


@pytest.mark.parametrize("t", SUPPORTED_T)
def test_vinberg_matches_table1(t):
    ch = vinberg_chamber(t)
    assert set(ch.roots) == {tuple(x) for x in TABLE1[t]["P0"]}
    assert permutation_gram(t, ch.roots) == TABLE1[t]["gram"]
    assert is_finite_volume(t, ch.roots)


def test_vinberg_row_counts_and_classes():
    assert len(vinberg_chamber(9).roots) == 4
    assert len(vinberg_chamber(16).roots) == 5
    assert len(vinberg_chamber(36).roots) == 6
    classes = sorted((disc(9, a), abs(a[1]) % 18) for a in vinberg_chamber(9).roots)
    assert classes == sorted([(4, 2), (1, 1), (36, 0), (9, 9)])


def test_vinberg_not_terminated():
    with pytest.raises(SeriesError) as exc:
        vinberg_chamber(36, max_height=1)
    assert exc.value.code == "NOT_TERMINATED"


def test_chamber_orbit_examples():
    ch = chamber_orbit(1, [A1, A3], [A2])
    assert set(ch.roots) == {(0, -1, 0), (1, 1, 0), (0, 1, 1)}
    ch = chamber_orbit(2, [A3], [A1, A2])
    assert (0, 2, 1) in ch.roots and len(ch.roots) == 3
    assert chamber_orbit(1, [], [A2]).roots == [A2]


def test_orbit_unbounded():
    P0 = TABLE1[4]["P0"]
    with pytest.raises(SeriesError) as exc:
        chamber_orbit(4, [P0[0], P0[2]], [P0[1]], cap=30)
    assert exc.value.code == "ORBIT_UNBOUNDED"
    win = chamber_orbit(4, [P0[0], P0[2]], [P0[1]], cap=30, window=True)
    assert win.infinite and len(win.roots) > 30


def test_weyl_vector_examples():
    assert weyl_vector(1, [(0, -1, 0), (1, 1, 0), (0, 1, 1)]) == (F(1, 2), F(1, 2), F(1, 2))
    assert weyl_vector(1, [A1, (0, -2, 0), A3]) == (3, 1, 2)
    assert weyl_vector(1, [A1, A2, A3, (0, 1, 1), (5, 1, 0)]) is None


def test_weyl_vector_defining_property():
    for row in TABLE2:
        if row["P"] and not row["infinite"]:
            t = row["t"]
            rho = weyl_vector(t, row["P"])
            assert rho == tuple(F(x) for x in row["rho"])
            assert all(inner(t, rho, a) == -norm(t, a) / 2 for a in row["P"])


@pytest.mark.parametrize("row", TABLE2, ids=lambda r: f"t{r['t']}-{''.join(map(str, r['combo']))}")
def test_table2_row(row):
    t = row["t"]
    ch = _row_chamber(row, 40)
    assert ch.weyl == tuple(F(x) for x in row["rho"])
    want = row["cartan"]
    if isinstance(want, str) and want in RANK3_CARTAN:
        want = RANK3_CARTAN[want][0]
    if isinstance(want, list):
        assert cartan_matrix(t, ch.roots) == want
    elif want == "scaled":
        assert scaled_cartan_holds(row, ch)
    if row["angles"] and not ch.infinite:
        got = polygon_angles(t, ch.roots)
        k = len(got)
        assert any(got[i:] + got[:i] == row["angles"] for i in range(k))


def same_up_to_relabelling(A, B):
    k = len(A)
    return len(B) == k and any(all(A[p[i]][p[j]] == B[i][j] for i in range(k) for j in range(k))
                               for p in itertools.permutations(range(k)))


@pytest.mark.parametrize("t,combo,name", [
    (1, (1, 0), "A1,II"), (2, (1, 0, 0), "A2,II"), (3, (1, 0, 0), "A3,II"),
    (1, (1, 1), "A1,0"), (2, (1, 1, 0), "A2,0"), (3, (1, 1, 0), "A3,0"),
])
def test_table2_named_matrices(t, combo, name):
    row = next(r for r in TABLE2 if r["t"] == t and tuple(r["combo"]) == combo)
    ch = _row_chamber(row, 40)
    assert same_up_to_relabelling(RANK3_CARTAN[name][0], cartan_matrix(t, ch.roots))


def test_scaled_rows():
    names = {r["cartan"] for r in TABLE2 if isinstance(r["cartan"], str)}
    assert "scaled" in names
    assert len(D_INF_SCALE) == sum(r["cartan"] == "scaled" for r in TABLE2)


def test_cartan_examples():
    ch = _row_chamber(TABLE2[0], 40)
    assert cartan_matrix(1, ch.roots) == RANK3_CARTAN["A1,II"][0]
    assert angles_of_matrix(RANK3_CARTAN["A1,0"][0]) == ["pi/2", "0", "pi/3"]
    assert angles(1, ch.roots) == ["0", "0", "0"]


@pytest.mark.parametrize("name", sorted(RANK3_CARTAN))
def test_sixteen_matrices(name):
    A, printed = RANK3_CARTAN[name]
    rep = verify_cartan_rank3(A)
    assert rep.ok and rep.rank == 3 and rep.signature[:2] == (2, 1)
    assert rep.weyl_exists and rep.weyl_type in ("elliptic", "parabolic")
    assert rep.angles == printed


def test_sixteen_count_and_b3():
    assert len(RANK3_CARTAN) == 16
    rep = verify_cartan_rank3(RANK3_CARTAN["B3"][0])
    assert len(rep.angles) == 6 and set(rep.angles) == {"pi/2"}
    assert verify_cartan_rank3(RANK3_CARTAN["A1,II"][0]).weyl_type == "elliptic"


def test_non_hyperbolic_rejected():
    rep = verify_cartan_rank3([[2, 0, 0], [0, 2, 0], [0, 0, 2]])
    assert not rep.ok and rep.signature == (3, 0, 0)
    with pytest.raises(ValueError):
        verify_cartan_rank3([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        verify_cartan_rank3([[2, 1], [1, 2]])


@pytest.mark.parametrize("t", SUPPORTED_T)
def test_narrow_part(t):
    trip = narrow_part_check(t, TABLE1[t]["P0"])
    assert trip is not None
    a = [TABLE1[t]["P0"][i] for i in trip]
    for x in a:
        for y in a:
            assert 4 * inner(t, x, y) ** 2 < 100 ** 2 * norm(t, x) * norm(t, y)


def test_narrow_part_disconnected():
    # pairwise orthogonal roots: no connected Gram graph
    assert narrow_part_check(1, [(0, 1, 0), (1, 0, 1), (1, 0, -1)]) is None


def test_weyl_orbit_signs():
    ch = _row_chamber(TABLE2[0], 40)
    rho = ch.weyl
    orb = weyl_orbit(1, ch.roots, rho, 6)
    assert orb[tuple(rho)] == 1
    for a in ch.roots:
        assert orb[reflect(1, a, rho)] == -1
    assert all(inner(1, y, y) == norm(1, rho) for y in orb)


# -- non-2-reflectivity -----------------------------------------------------

def independent_witness_check(n, x, u, v):
    """Recheck every condition of the certificate from scratch."""
    for y in (u, v):
        if len(y) != 8 or any(b <= a for a, b in zip(y, y[1:])) or y[0] <= 0:
            return False
        if sum(y) % 2:
            return False
    U, V = sum(a * a for a in u), sum(a * a for a in v)
    if 4 * x * x <= 9 * (U + V):
        return False
    if 2 * n != 4 * x * x - U - V:
        return False
    full = (x,) + tuple(u) + tuple(v)
    g = math.gcd(*full)
    # primitive in the even-sum sublattice
    return not any(g % k == 0 and (sum(u) // k) % 2 == 0 and (sum(v) // k) % 2 == 0
                   for k in range(2, g + 1))


def test_smallest_octuple():
    y = tuple(range(1, 9))
    assert sum(a * a for a in y) == 204 and sum(y) % 2 == 0


def test_non2reflective_1718():
    found = t_n_non2reflective(2000)
    first = found[0]
    assert first[0] == 1718 and first[1] == 31
    assert first[2] == first[3] == tuple(range(1, 9))
    assert all(independent_witness_check(*w) for w in found)
    assert t_n_non2reflective(1) == []
