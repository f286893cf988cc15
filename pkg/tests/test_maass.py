from fractions import Fraction as F

import pytest

import lorentzkm.maass as maass
from lorentzkm.maass import (
    IDENTITIES, SPECS, box_steps, get_spec, maass_expand, rescale_z2, verify_identity,
)
from lorentzkm.series import SeriesError, TriSeries, kronecker


def natural(s):
    dq, dr, ds = s.denoms
    return {(F(a, dq), F(b, dr), F(c, ds)): v for (a, b, c), v in s.coeffs.items()}


def leading(name, k=2):
    s = natural(maass_expand(name, 13, 13))
    keys = sorted(s, key=lambda x: (x[2], x[0], -x[1]))[:k]
    return [(x, s[x]) for x in keys]


@pytest.mark.parametrize("name,rho", [
    ("delta5", F(1, 2)), ("delta2", F(1, 4)), ("delta1", F(1, 6)), ("delta_half", F(1, 8)),
])
def test_leading_pair(name, rho):
    h = F(1, 2)
    assert leading(name) == [((rho, h, rho), 1), ((rho, -h, rho), -1)]


def test_even_forms_leading():
    assert leading("d2") == [((F(1, 6), F(1, 2), F(1, 6)), 1), ((F(1, 6), F(-1, 2), F(1, 6)), 1)]
    assert leading("d_half") == [((F(1, 24), F(1, 2), F(1, 24)), 1),
                                 ((F(1, 24), F(-1, 2), F(1, 24)), 1)]


@pytest.mark.parametrize("name", sorted(SPECS))
def test_symmetries(name):
    s = natural(maass_expand(name, 13, 13))
    sign = 1 if SPECS[name].base in ("d2", "d_half") or name in ("d2", "d_half") else -1
    for (n, l, m), c in s.items():
        assert s.get((n, -l, m), 0) == sign * c
        assert s.get((m, l, n), 0) == c
        assert isinstance(c, int)


def test_theta_pair_by_direct_sum():
    # (1/2) sum chi(m) chi(n) q^(m^2/8) r^(mn/2) s^(n^2/8)
    for name, char, den in (("delta_half", lambda x: kronecker(-4, x), 8),
                            ("d_half", lambda x: kronecker(12, x), 24)):
        prec = 3 * den
        want = {}
        for a in range(-12, 13):
            for b in range(-12, 13):
                if a * a < prec and b * b < prec and char(a) * char(b):
                    k = (F(a * a, den), F(a * b, 2), F(b * b, den))
                    want[k] = want.get(k, 0) + F(char(a) * char(b), 2)
        want = {k: int(v) for k, v in want.items() if v}
        assert natural(maass_expand(name, prec, prec)) == want


def test_delta5_against_naive_eta9():
    N = 40
    euler = [1] + [0] * N
    for n in range(1, N + 1):
        for _ in range(9):
            for e in range(N, n - 1, -1):
                euler[e] -= euler[e - n]
    # eta^9 = sum tau9(k) q^(k/8), nonzero only for k = 3 mod 8
    tau9 = lambda k: euler[(k - 3) // 8] if k % 8 == 3 else 0
    want = {}
    for n in range(1, 9, 2):
        for m in range(1, 9, 2):
            for l in range(-17, 18, 2):
                if 4 * n * m - l * l <= 0:
                    continue
                c = 0
                for a in range(1, 10):
                    if n % a == 0 and m % a == 0 and l % a == 0:
                        c += (-1) ** ((l + a) // 2 + 1) * a ** 4 * tau9((4 * n * m - l * l) // (a * a))
                if c:
                    want[(F(n, 2), F(l, 2), F(m, 2))] = c
    assert natural(maass_expand("delta5", 9, 9)) == want


def test_rescale_z2():
    s = maass_expand("delta2", 9, 9)
    assert rescale_z2(s, 1) is s
    d = rescale_z2(s, 2)
    assert natural(d) == {(n, 2 * l, m): c for (n, l, m), c in natural(s).items()}
    assert natural(maass_expand("delta2_8", 9, 9)) == natural(d)
    with pytest.raises(ValueError):
        rescale_z2(s, 0)


def test_spec_lookup():
    assert get_spec("delta5").weight == 5
    assert get_spec("d_half").natural_denominator == 24
    with pytest.raises(ValueError):
        get_spec("delta7")
    assert box_steps(get_spec("d_half"), 96) == 4
    assert box_steps(get_spec("delta5"), 12) == 6


def test_ten_identities_listed():
    assert len(IDENTITIES) == 10


@pytest.mark.parametrize("name", ["delta5", "delta2", "delta1", "delta_half", "delta5_4",
                                  "delta2_8", "d2", "delta1_12", "delta_half_16"])
def test_identity_small_box(name):
    rep = verify_identity(name, 3 * SPECS[IDENTITIES[name][2]].dq)
    assert rep.ok, rep.summary()
    assert rep.terms > 0 and rep.box == (3, 3)


def test_d_half_small_box():
    rep = verify_identity("d_half", 48)
    assert rep.ok, rep.summary()


def test_mismatch_reported(monkeypatch):
    monkeypatch.setitem(maass.IDENTITIES, "wrong", (1, (1, 0), "delta2"))
    rep = verify_identity("wrong", 6)
    assert not rep.ok and "MISMATCH" in rep.summary()
    with pytest.raises(SeriesError) as exc:
        verify_identity("wrong", 6, strict=True)
    assert exc.value.code == "MISMATCH"


def test_unknown_identity():
    with pytest.raises(ValueError):
        verify_identity("nothing", 4)


def test_odd_theta_prefactor(monkeypatch):
    with pytest.raises(SeriesError) as exc:
        maass._theta_pair(9, 9, lambda n: 1 if n == 1 else 0)
    assert exc.value.code == "EXACTNESS"
