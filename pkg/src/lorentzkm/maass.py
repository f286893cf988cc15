"""Sum sides of the denominator identities and their comparison with lifts.

Each form is an exact finite sum over (n, l, m); exponents are stored scaled
by the form's own denominators (q^(n/dq) r^(l/2) s^(m/ds)).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .borcherds import R_DEN, lift_combo
from .series import SeriesError, TriSeries, eta_power_coeffs, kronecker


@dataclass(frozen=True)
class MaassSpec:
    name: str
    t: int
    weight: Fraction
    dq: int
    ds: int
    r_scale: int = 1  # z2 -> r_scale * z2
    base: str = ""

    @property
    def natural_denominator(self):
        return self.dq


def _divisors_of_gcd(*xs):
    g = math.gcd(*(abs(x) for x in xs))
    return [a for a in range(1, g + 1) if g % a == 0]


def _tau9(kmax):
    """tau_9(k) for k <= kmax, with eta^9 = sum tau_9(k) q^(k/8)."""
    c = eta_power_coeffs(9, 3 * kmax + 1)
    return [c[3 * k] for k in range(kmax + 1)]


def _odd_range(stop):
    return range(1, stop, 2)


def _delta5(pq, ps):
    out = {}
    tau = _tau9(max(0, 4 * pq * ps))
    for n in _odd_range(pq):
        for m in _odd_range(ps):
            L = math.isqrt(4 * n * m - 1)
            for l in range(-L, L + 1):
                if l % 2 == 0:
                    continue
                c = 0
                for a in _divisors_of_gcd(n, l, m):
                    k = (4 * n * m - l * l) // (a * a)
                    c += (-1) ** ((l + a + 2) // 2) * a ** 4 * tau[k]
                if c:
                    out[(n, l, m)] = c
    return out


def _residue_range(stop, mod):
    return range(1, stop, mod)


def _square_sum(pq, ps, mod, form, weight):
    """Terms over n, m = 1 mod ``mod`` with form(n, l, m) = N^2 > 0."""
    out = {}
    for n in _residue_range(pq, mod):
        for m in _residue_range(ps, mod):
            L = math.isqrt(4 * n * m)
            for l in range(-L, L + 1):
                sq = form(n, l, m)
                if sq <= 0:
                    continue
                N = math.isqrt(sq)
                if N * N != sq:
                    continue
                c = weight(N, l) * sum(_inner_char(mod, a) for a in _divisors_of_gcd(n, l, m))
                if c:
                    out[(n, l, m)] = c
    return out


def _inner_char(mod, a):
    # mod 6: printed as (6/a); the identities hold with (-3/a), see the ledger
    return kronecker(-4, a) if mod == 4 else kronecker(-3, a)


def _delta2(pq, ps):
    return _square_sum(pq, ps, 4, lambda n, l, m: 2 * n * m - l * l,
                       lambda N, l: N * kronecker(-4, N * l))


def _delta1(pq, ps):
    return _square_sum(pq, ps, 6, lambda n, l, m: 4 * n * m - 3 * l * l,
                       lambda M, l: kronecker(-4, l) * kronecker(12, M))


def _d2_square(n, l, m):
    # printed as 4nm - l^2 = N^2; the identity needs 4nm - l^2 = 3N^2
    d = 4 * n * m - l * l
    return d // 3 if d % 3 == 0 else -1


def _d2(pq, ps):
    return _square_sum(pq, ps, 6, _d2_square,
                       lambda N, l: N * kronecker(-4, N) * kronecker(12, l))


def _theta_pair(pq, ps, char):
    acc = {}
    A, B = math.isqrt(max(pq - 1, 0)), math.isqrt(max(ps - 1, 0))
    for n in range(-A, A + 1):
        for m in range(-B, B + 1):
            c = char(n) * char(m)
            if c:
                k = (n * n, n * m, m * m)
                acc[k] = acc.get(k, 0) + c
    out = {}
    for k, c in acc.items():
        if c % 2:
            raise SeriesError("EXACTNESS", f"odd coefficient {c} under the 1/2 prefactor", k)
        if c:
            out[k] = c // 2
    return out


def _delta_half(pq, ps):
    return _theta_pair(pq, ps, lambda n: kronecker(-4, n))


def _d_half(pq, ps):
    return _theta_pair(pq, ps, lambda n: kronecker(12, n))


_BUILDERS = {
    "delta5": _delta5, "delta2": _delta2, "delta1": _delta1,
    "d2": _d2, "delta_half": _delta_half, "d_half": _d_half,
}

SPECS = {
    "delta5": MaassSpec("delta5", 1, Fraction(5), 2, 2),
    "delta2": MaassSpec("delta2", 2, Fraction(2), 4, 4),
    "delta1": MaassSpec("delta1", 3, Fraction(1), 6, 6),
    "d2": MaassSpec("d2", 9, Fraction(2), 6, 6),
    "delta_half": MaassSpec("delta_half", 4, Fraction(1, 2), 8, 8),
    "d_half": MaassSpec("d_half", 36, Fraction(1, 2), 24, 24),
    "delta5_4": MaassSpec("delta5_4", 4, Fraction(5), 2, 2, 2, "delta5"),
    "delta2_8": MaassSpec("delta2_8", 8, Fraction(2), 4, 4, 2, "delta2"),
    "delta1_12": MaassSpec("delta1_12", 12, Fraction(1), 6, 6, 2, "delta1"),
    "delta_half_16": MaassSpec("delta_half_16", 16, Fraction(1, 2), 8, 8, 2, "delta_half"),
}

# identity id -> (t, combo, sum-side form)
IDENTITIES = {
    "delta5": (1, (1, 0), "delta5"),
    "delta2": (2, (1, 0, 0), "delta2"),
    "delta1": (3, (1, 0, 0), "delta1"),
    "delta_half": (4, (1, 0, 0), "delta_half"),
    "d2": (9, (0, 1, 0), "d2"),
    "d_half": (36, (0, 1, 0), "d_half"),
    "delta2_8": (8, (0, 1, 0), "delta2_8"),
    "delta1_12": (12, (0, 1, 1, 0), "delta1_12"),
    "delta_half_16": (16, (1, 0), "delta_half_16"),
    "delta5_4": (4, (1, 1, 0), "delta5_4"),
}


def get_spec(name) -> MaassSpec:
    try:
        return SPECS[name]
    except KeyError:
        raise ValueError(f"unknown form {name!r}; known: {', '.join(SPECS)}") from None


def rescale_z2(phi: TriSeries, d: int) -> TriSeries:
    """Phi(z1, d z2, z3): r exponents multiplied by d."""
    if d < 1:
        raise ValueError("d must be positive")
    return phi if d == 1 else phi.rescale_r(d)


def maass_expand(spec, prec_q, prec_s) -> TriSeries:
    """All terms with scaled q exponent < prec_q and s exponent < prec_s."""
    spec = get_spec(spec) if isinstance(spec, str) else spec
    base = spec.base or spec.name
    coeffs = _BUILDERS[base](int(prec_q), int(prec_s))
    out = TriSeries(coeffs, spec.dq, R_DEN, spec.ds, int(prec_q), int(prec_s))
    return rescale_z2(out, spec.r_scale)


@dataclass
class IdentityReport:
    name: str
    t: int
    combo: tuple
    ok: bool
    terms: int
    box: tuple
    mismatch: tuple | None
    seconds: float

    def summary(self):
        if self.ok:
            return f"{self.name}: OK ({self.terms} terms, box {self.box}, {self.seconds:.2f}s)"
        q, r, s, got, want = self.mismatch
        return (f"{self.name}: MISMATCH at q^{q} r^{r} s^{s}: product {got}, sum {want} "
                f"({self.seconds:.2f}s)")


def box_steps(spec, prec) -> int:
    """Integer lift steps covering ``prec`` units of the form's q denominator."""
    return max(1, -(-int(prec) // spec.natural_denominator))


def verify_identity(name, prec, strict=False) -> IdentityReport:
    """Compare B_combo with the sum side on the whole lift box."""
    if name not in IDENTITIES:
        raise ValueError(f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}")
    t, combo, form = IDENTITIES[name]
    spec = SPECS[form]
    P = box_steps(spec, prec)
    t0 = time.perf_counter()
    res = lift_combo(t, combo, P, P, pure_r="split")
    lift = res.expansion
    D, _, Ds = lift.denoms
    fq, fs = D // spec.dq, Ds // spec.ds
    side = maass_expand(spec, -(-lift.trunc_q // fq), -(-lift.trunc_s // fs))
    side = side.rescale(D, R_DEN, Ds).truncate(lift.trunc_q, lift.trunc_s)
    # pure r factors with negative exponent move to the sum side as polynomials
    for l, e in res.moved.items():
        poly = {(0, 2 * l * k, 0): (-1) ** k * math.comb(-e, k) for k in range(-e + 1)}
        side = side * TriSeries(poly, D, R_DEN, Ds, None, None)
    keys = sorted(set(lift.coeffs) | set(side.coeffs), key=lambda k: (k[2], k[0], -k[1]))
    bad = None
    for k in keys:
        a, b = lift.coeffs.get(k, 0), side.coeffs.get(k, 0)
        if a != b:
            bad = (Fraction(k[0], D), Fraction(k[1], R_DEN), Fraction(k[2], Ds), a, b)
            break
    rep = IdentityReport(name, t, combo, bad is None, len(side.coeffs), (P, P), bad,
                         time.perf_counter() - t0)
    if strict and bad is not None:
        raise SeriesError("MISMATCH", rep.summary(), bad[:3])
    return rep
