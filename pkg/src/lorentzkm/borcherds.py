"""Borcherds exponential lift of weight-0 Jacobi forms of integral index.

B_phi = q^A r^B s^C prod_{(n,l,m) > 0} (1 - q^n r^l s^m)^{f(nm, l)}, with
(n,l,m) > 0 meaning m > 0, or m = 0 < n, or m = n = 0 > l.

A lift box (Q, S) covers q^(A+a) s^(C+c) for integers a < Q, 0 <= c < S.
Factors with n < 0 shift q downwards, so a may be negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .jacobi import JacobiForm
from .reflective import divisor_multiplicities, is_reflective, min_norm, reduced_coeff
from .series import SeriesError, TriSeries, poly_mul

R_DEN = 2


@dataclass
class LiftResult:
    t: int
    weyl: tuple
    weight: Fraction
    expansion: TriSeries
    divisor: dict = field(default_factory=dict)
    pure_r: bool | str = True
    moved: dict = field(default_factory=dict)

    def leading(self, k):
        """First k monomials ordered by s, then q, then decreasing r."""
        dq, dr, ds = self.expansion.denoms
        keys = sorted(self.expansion.coeffs, key=lambda x: (x[2], x[0], -x[1]))[:k]
        return [(Fraction(a, dq), Fraction(b, dr), Fraction(c, ds), self.expansion.coeffs[(a, b, c)])
                for a, b, c in keys]


def _check_form(phi: JacobiForm, t):
    if phi.weight_x2 != 0:
        raise ValueError(f"lift needs weight 0, got {phi.weight}")
    if phi.index_x2 != 2 * t:
        raise ValueError(f"form has index {phi.index}, expected {t}")
    if any(n % 24 or l % 2 for n, l in phi.coeffs):
        raise ValueError("lift needs integral exponents")


def lift_exponents(phi: JacobiForm, t) -> tuple:
    """(A, B, C) from the q^0 slice."""
    sl = phi.q_slice(0)
    A = Fraction(sum(sl.values()), 24)
    B = Fraction(sum(l * c for l, c in sl.items() if l > 0), 2)
    C = Fraction(sum(l * l * c for l, c in sl.items()), 4 * t)
    return A, B, C


def lift_weight(phi: JacobiForm) -> Fraction:
    return Fraction(phi.coeff(0, 0), 2)


def weyl_type(rho, t) -> str:
    A, B, C = (Fraction(x) for x in rho)
    if A == B == C == 0:
        return "zero"
    sq = -2 * A * C + B * B / (2 * t)
    if sq < 0:
        return "elliptic"
    if sq == 0:
        return "parabolic"
    return "hyperbolic"


def _binomial_poly(l, e):
    """(1 - r^l)^e for e >= 0 as {l2: c} with doubled exponents."""
    return {2 * l * k: (-1) ** k * math.comb(e, k) for k in range(e + 1)}


def _group_series(exps, K):
    """Coefficients p_0..p_K of prod_l (1 - y r^l)^{e_l} as Laurent dicts.

    Uses j p_j = -sum_{k=1}^j psi_k p_{j-k} with psi_k = sum_l e_l r^{lk}.
    """
    psi = [None] + [{2 * l * k: e for l, e in exps.items()} for k in range(1, K + 1)]
    p = [{0: 1}]
    for j in range(1, K + 1):
        acc = {}
        for k in range(1, j + 1):
            for er, c in poly_mul(psi[k], p[j - k]).items():
                acc[er] = acc.get(er, 0) + c
        row = {}
        for er, c in acc.items():
            if c % j:
                raise SeriesError("EXACTNESS", f"non-integral group coefficient at y^{j}")
            if c:
                row[er] = -c // j
        p.append(row)
    return p


def _exponents(phi, t, k, dmin):
    """{l: f(k, l)} over the finite l-window allowed by the minimal norm."""
    top = 4 * t * k - dmin
    if top < 0:
        return {}
    L = math.isqrt(top)
    out = {}
    for l in range(-L, L + 1):
        c = reduced_coeff(phi, t, k, l)
        if c:
            out[l] = c
    return out


def borcherds_product(phi: JacobiForm, t, prec_q, prec_s, pure_r=True) -> LiftResult:
    """Truncated expansion of B_phi on the box (prec_q, prec_s) of integer steps.

    ``pure_r=False`` omits the factors (1 - r^l)^{f(0,l)}, l < 0; those with a
    negative exponent have an infinite r-tail and otherwise raise UNSUPPORTED.
    ``pure_r="split"`` keeps the polynomial ones and lists the others in
    ``moved`` as {l: f(0, l)}.
    """
    _check_form(phi, t)
    Q, S = int(prec_q), int(prec_s)
    if Q < 1 or S < 1:
        raise ValueError("box sizes must be positive")
    A, B, C = lift_exponents(phi, t)
    dmin = min_norm(phi, t)

    # groups (n, m): all l with f(nm, l) != 0
    neg = []
    for m in range(1, S):
        n = -1
        while 4 * t * n * m >= dmin:
            neg.append((n, m))
            n -= 1
    N = max((-n for n, _ in neg), default=0)
    Qx = Q + N * (S - 1)

    body = {(0, int(2 * B), 0): 1}
    moved = {}
    if pure_r:
        poly = {int(2 * B): 1}
        for l, e in sorted(_exponents(phi, t, 0, dmin).items()):
            if l >= 0:
                continue
            if e < 0 and pure_r == "split":
                moved[l] = e
                continue
            if e < 0:
                raise SeriesError("UNSUPPORTED",
                                  f"pure r factor (1 - r^{l})^{e} has an infinite r-tail", (0, l, 0))
            poly = poly_mul(poly, _binomial_poly(l, e))
        body = {(0, er, 0): c for er, c in poly.items()}
    out = TriSeries(body, 1, R_DEN, 1, Qx, S)

    groups = [(n, 0) for n in range(1, Qx)] + [(n, m) for m in range(1, S) for n in range(0, Qx)]
    for n, m in groups:
        exps = _exponents(phi, t, n * m, dmin)
        if not exps:
            continue
        K = min((Qx - 1) // n if n else S, (S - 1) // m if m else Qx)
        if K < 1:
            continue
        p = _group_series(exps, K)
        g = {(j * n, er, j * m): c for j, row in enumerate(p) for er, c in row.items()}
        out = out * TriSeries(g, 1, R_DEN, 1, None, S)
    for n, m in neg:
        exps = _exponents(phi, t, n * m, dmin)
        if not exps:
            continue
        K = (S - 1) // m
        p = _group_series(exps, K)
        g = {(j * n, er, j * m): c for j, row in enumerate(p) for er, c in row.items()}
        out = out * TriSeries(g, 1, R_DEN, 1, None, S)
    out = out.truncate(Q, S)

    D = math.lcm(24, 4 * t)
    exp = out.rescale(D, R_DEN, D).shift(int(A * D), 0, int(C * D))
    ok, _ = is_reflective(phi, t)
    div = divisor_multiplicities(phi, t) if ok else {}
    return LiftResult(t, (A, B, C), lift_weight(phi), exp, div, pure_r, moved)


def lift_additivity_check(phi, psi, t, prec) -> bool:
    """B_{phi+psi} == B_phi B_psi on the box (prec, prec).

    When a pure-r factor has a negative exponent the check runs without the
    pure-r factors; their exponents f(0, l) are additive, so the full identity
    is equivalent.
    """
    total = phi + psi
    try:
        lhs = borcherds_product(total, t, prec, prec)
        a = borcherds_product(phi, t, prec, prec)
        b = borcherds_product(psi, t, prec, prec)
    except SeriesError as exc:
        if exc.code != "UNSUPPORTED":
            raise
        lhs = borcherds_product(total, t, prec, prec, pure_r=False)
        a = borcherds_product(phi, t, prec, prec, pure_r=False)
        b = borcherds_product(psi, t, prec, prec, pure_r=False)
    return _product_agrees(lhs.expansion, a.expansion, b.expansion)


def _product_agrees(total, a, b):
    prod = a * b
    # the two sides certify different boxes; compare on the common one
    tq = min(prod.trunc_q, total.trunc_q)
    ts = min(prod.trunc_s, total.trunc_s)
    return prod.truncate(tq, ts).coeffs == total.truncate(tq, ts).coeffs


def basis_additivity(t, prec, pairs=None) -> dict:
    """{(i, j): B_{xi_i + xi_j} == B_{xi_i} B_{xi_j}} over basis pairs i <= j.

    Each lift is computed once; pure-r factors are left out (see
    ``lift_additivity_check``).
    """
    from .reflective import rj_basis
    basis = rj_basis(t, required_prec(t, prec, prec))
    k = basis.rank
    pairs = pairs or [(i, j) for i in range(k) for j in range(i, k)]
    lift = lambda f: borcherds_product(f, t, prec, prec, pure_r=False).expansion
    single = {i: lift(basis.forms[i]) for i in {x for p in pairs for x in p}}
    return {(i, j): _product_agrees(lift(basis.forms[i] + basis.forms[j]), single[i], single[j])
            for i, j in pairs}


# -- Kac-Moody multiplicities -------------------------------------------------

def _mobius(n):
    res, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    return -res if n > 1 else res


def tau_from_m(m) -> list:
    """tau(1..K) with 1 - sum_k m(k) x^k = prod_n (1 - x^n)^{tau(n)}.

    ``m`` lists m(1), ..., m(K).
    """
    K = len(m)
    F = [1] + [-Fraction(v) for v in m]
    # c_N from -x F'/F = sum c_N x^N
    logd = [Fraction(0)] * (K + 1)
    for N in range(1, K + 1):
        acc = -N * F[N]
        for j in range(1, N):
            acc -= logd[j] * F[N - j]
        logd[N] = acc
    # c_N = sum_{n | N} n tau(n)
    out = []
    for n in range(1, K + 1):
        v = sum(_mobius(n // d) * logd[d] for d in range(1, n + 1) if n % d == 0)
        if v % n:
            raise SeriesError("EXACTNESS", f"tau({n}) is not integral")
        out.append(int(v / n))
    return out


def _natural_terms(phi: TriSeries):
    dq, dr, ds = phi.denoms
    for (a, b, c), v in phi.coeffs.items():
        yield (Fraction(a, dq), Fraction(b, dr), Fraction(c, ds)), v


def _chamber_data(chamber, rho):
    from .hyperbolic import weyl_vector
    if chamber.infinite:
        raise SeriesError("BOX_TOO_SMALL", "chamber is an orbit window; its interior cannot be certified")
    rho = rho if rho is not None else chamber.weyl or weyl_vector(chamber.t, chamber.roots)
    if rho is None:
        raise ValueError("chamber has no Weyl vector")
    odd = [chamber.roots[i] for i in chamber.odd]
    return tuple(Fraction(x) for x in rho), odd


def _box_check(phi: TriSeries, rho, bound):
    dq, _, ds = phi.denoms
    if (phi.trunc_q is not None and Fraction(phi.trunc_q, dq) < rho[0] + bound) or \
            (phi.trunc_s is not None and Fraction(phi.trunc_s, ds) < rho[2] + bound):
        raise SeriesError("BOX_TOO_SMALL", f"expansion does not reach rho + {bound} in q and s")


def extract_simple_multiplicities(phi: TriSeries, chamber, bound, rho=None) -> dict:
    """m(a) for a in the closed chamber cone with rho + a inside the box.

    ``bound`` limits a = (n, l, m) to n, m < bound.  For w != 1 the points
    w(rho + a) lie outside the chamber, so inside it the coefficient of Phi
    at rho + a is exactly -m(a).  Nonzero coefficients inside the chamber
    but off rho + cone raise MISMATCH.
    """
    from .hyperbolic import inner, norm
    t = chamber.t
    rho, _ = _chamber_data(chamber, rho)
    _box_check(phi, rho, bound)
    P = chamber.roots
    out = {}
    seen_rho = 0
    for x, c in _natural_terms(phi):
        a = tuple(xc - rc for xc, rc in zip(x, rho))
        if not (a[0] < bound and a[2] < bound) or any(inner(t, x, r) >= 0 for r in P):
            continue
        if not any(a):
            seen_rho = c
            continue
        in_cone = norm(t, a) <= 0 and a[0] + a[2] >= 0 and all(inner(t, a, r) <= 0 for r in P)
        if not in_cone:
            raise SeriesError("MISMATCH", f"coefficient {c} at rho + {a} off the chamber cone", x)
        out[a] = -c
    if seen_rho != 1:
        raise SeriesError("MISMATCH", f"coefficient at rho is {seen_rho}, expected 1", rho)
    return out


def denominator_sum(chamber, m, bound, rho=None, qmin=0) -> dict:
    """Sum side sum_w eps(w) (e^{w rho} - sum_a m(a) e^{w(rho + a)}) on the box.

    Keys are natural (n, l, m) with rho_n + qmin <= n < rho_n + bound and
    rho_m <= m < rho_m + bound.
    """
    from .hyperbolic import weyl_orbit
    rho, odd = _chamber_data(chamber, rho)
    top = rho[0] + rho[2] + 2 * bound
    acc = {}
    terms = [(rho, 1)] + [(tuple(r + c for r, c in zip(rho, a)), -v) for a, v in m.items() if v]
    for x, coeff in terms:
        for y, sign in weyl_orbit(chamber.t, chamber.roots, x, top, odd).items():
            if rho[0] + qmin <= y[0] < rho[0] + bound and rho[2] <= y[2] < rho[2] + bound:
                acc[y] = acc.get(y, 0) + sign * coeff
    return {k: v for k, v in acc.items() if v}


def required_prec(t, prec_q, prec_s, pole_order=1) -> int:
    """q-depth of the Jacobi form needed for a (prec_q, prec_s) lift box."""
    Qx = prec_q + pole_order * (prec_s - 1)
    return (Qx - 1) * (prec_s - 1) + t // 4 + 2


def lift_combo(t, combo, prec_q, prec_s, pure_r=True) -> LiftResult:
    """Lift of sum c_j xi^(j) from the reflective basis of index t."""
    from .reflective import combination, rj_basis
    basis = rj_basis(t, required_prec(t, prec_q, prec_s))
    return borcherds_product(combination(basis, combo), t, prec_q, prec_s, pure_r)
