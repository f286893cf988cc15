"""Jacobi forms with integral Fourier coefficients.

A ``JacobiForm`` stores f(n, l) with n scaled by 24 and l scaled by 2, so
theta-type exponents (n in Z/8, l in Z/2) and eta factors (n in Z/24) are
all integers.  Weight and index are stored doubled.
"""

from __future__ import annotations

import ast
import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .series import (QSeries, SeriesError, delta12, delta12_inverse, eisenstein, eta_sum,
                     kron_mul, kronecker, poly_divexact, poly_mul)

QDEN = 24
LDEN = 2


def _frac(x):
    return int(x) if Fraction(x).denominator == 1 else Fraction(x)


class JacobiForm:
    """Truncated Fourier expansion sum f(n, l) q^n r^l.

    ``coeffs`` maps scaled pairs (24 n, 2 l) to integers; every tracked n is
    below ``trunc_q`` (scaled).  ``trunc_q=None`` means exact.
    """

    __slots__ = ("weight_x2", "index_x2", "parity", "pole_order", "coeffs", "trunc_q")

    def __init__(self, coeffs, weight_x2=0, index_x2=0, parity=1, pole_order=0, trunc_q=None):
        items = {}
        for (n, l), c in coeffs.items():
            if c and (trunc_q is None or n < trunc_q):
                items[(int(n), int(l))] = int(c)
        self.coeffs = {k: items[k] for k in sorted(items)}
        self.weight_x2 = weight_x2
        self.index_x2 = index_x2
        self.parity = parity
        self.pole_order = pole_order
        self.trunc_q = trunc_q

    # -- bookkeeping -------------------------------------------------------

    @property
    def weight(self):
        return Fraction(self.weight_x2, 2)

    @property
    def index(self):
        return Fraction(self.index_x2, 2)

    @property
    def prec(self):
        """Truncation in natural q units."""
        return None if self.trunc_q is None else Fraction(self.trunc_q, QDEN)

    def __repr__(self):
        return (f"JacobiForm(weight={self.weight}, index={self.index}, parity={self.parity}, "
                f"pole={self.pole_order}, prec={self.prec}, terms={len(self.coeffs)})")

    def _like(self, coeffs, trunc_q=None, **kw):
        attrs = dict(weight_x2=self.weight_x2, index_x2=self.index_x2, parity=self.parity,
                     pole_order=self.pole_order)
        attrs.update(kw)
        return JacobiForm(coeffs, trunc_q=trunc_q, **attrs)

    def coeff(self, n, l) -> int:
        """f(n, l) in natural units; raises past the truncation."""
        kn, kl = Fraction(n) * QDEN, Fraction(l) * LDEN
        if kn.denominator != 1 or kl.denominator != 1:
            return 0
        kn, kl = int(kn), int(kl)
        if self.trunc_q is not None and kn >= self.trunc_q:
            raise SeriesError("INSUFFICIENT_PRECISION", f"q^{n} beyond precision {self.prec}", (n, l))
        return self.coeffs.get((kn, kl), 0)

    def q_slice(self, n) -> dict:
        """{l: f(n, l)} in natural units for a single q-power."""
        kn = Fraction(n) * QDEN
        if self.trunc_q is not None and kn >= self.trunc_q:
            raise SeriesError("INSUFFICIENT_PRECISION", f"q^{n} beyond precision {self.prec}", n)
        return {_frac(Fraction(l, LDEN)): c for (a, l), c in self.coeffs.items() if a == kn}

    def rows(self) -> dict:
        out = {}
        for (n, l), c in self.coeffs.items():
            out.setdefault(n, {})[l] = c
        return out

    def natural_terms(self):
        """Iterate (n, l, f(n, l)) with n, l as int or Fraction."""
        for (n, l), c in self.coeffs.items():
            yield _frac(Fraction(n, QDEN)), _frac(Fraction(l, LDEN)), c

    def valuation(self):
        if self.coeffs:
            return min(k[0] for k in self.coeffs)
        return self.trunc_q

    def truncate(self, prec):
        t = int(Fraction(prec) * QDEN)
        if self.trunc_q is not None:
            t = min(t, self.trunc_q)
        return self._like(self.coeffs, t)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, JacobiForm):
            return NotImplemented
        return (self.coeffs == other.coeffs and self.trunc_q == other.trunc_q
                and self.weight_x2 == other.weight_x2 and self.index_x2 == other.index_x2
                and self.parity == other.parity and self.pole_order == other.pole_order)

    def agrees(self, other) -> bool:
        """Coefficientwise equality below the common truncation."""
        t = _tmin(self.trunc_q, other.trunc_q)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0)
                   for k in keys if t is None or k[0] < t)

    # -- ring operations ---------------------------------------------------

    def __neg__(self):
        return self._like({k: -c for k, c in self.coeffs.items()}, self.trunc_q)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if (self.weight_x2, self.index_x2) != (other.weight_x2, other.index_x2):
            raise ValueError(f"cannot add weight/index {self.weight}/{self.index} "
                             f"and {other.weight}/{other.index}")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        parity = self.parity if self.parity == other.parity else 0
        return self._like(out, _tmin(self.trunc_q, other.trunc_q), parity=parity,
                          pole_order=max(self.pole_order, other.pole_order))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._like({k: c * other for k, c in self.coeffs.items()}, self.trunc_q)
        if isinstance(other, QSeries):
            other = from_qseries(other)
        va, vb = self.valuation(), other.valuation()
        t = _tmin(None if self.trunc_q is None else self.trunc_q + (vb or 0),
                  None if other.trunc_q is None else other.trunc_q + (va or 0))
        prod = kron_mul(self.coeffs, other.coeffs, t) if self.coeffs and other.coeffs else {}
        return JacobiForm(prod, self.weight_x2 + other.weight_x2, self.index_x2 + other.index_x2,
                          self.parity * other.parity, self.pole_order + other.pole_order, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = one_form()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divexact_int(self, d: int):
        out = {}
        for k, c in self.coeffs.items():
            q, r = divmod(c, d)
            if r:
                raise SeriesError("EXACTNESS", f"coefficient {c} at {k} not divisible by {d}", k)
            out[k] = q
        return self._like(out, self.trunc_q)

    def div_by_delta(self, N: int = 1):
        """Multiply by Delta^-N; the pole order grows by N."""
        if N == 0:
            return self
        if self.trunc_q is None:
            raise SeriesError("DIVISION_FAILED", "exact input; truncate first")
        top = -(-self.trunc_q // QDEN) + N + 1
        inv = delta12_inverse(top + N).pow_int(N)
        out = self * from_qseries(inv, weight_x2=-24 * N)
        out.pole_order = self.pole_order + N
        return out

    def exact_div(self, other):
        """self / other by q-row-wise exact Laurent division in r."""
        if other.is_zero():
            raise SeriesError("DIVISION_FAILED", "division by zero form")
        va, vb = self.valuation(), other.valuation()
        t = _tmin(self.trunc_q, None if other.trunc_q is None else other.trunc_q + (va or 0) - vb)
        if t is None:
            raise SeriesError("DIVISION_FAILED", "exact division needs a truncation")
        brows = {}
        for (n, l), c in other.coeffs.items():
            brows.setdefault(n - vb, {})[l] = c
        lead = brows.pop(0)
        rest = self.rows()
        quo = {}
        qt = t - vb
        while True:
            live = [n for n, row in rest.items() if row and n - vb < qt]
            if not live:
                break
            n = min(live)
            num = rest.pop(n)
            q = poly_divexact(num, lead)
            if q is None:
                raise SeriesError("DIVISION_FAILED",
                                  f"remainder at q-order {Fraction(n, QDEN)}", Fraction(n, QDEN))
            for l, c in q.items():
                quo[(n - vb, l)] = c
            for dn, bp in brows.items():
                m = n + dn
                if m - vb >= qt:
                    continue
                row = rest.setdefault(m, {})
                for l, c in poly_mul(q, bp).items():
                    v = row.get(l, 0) - c
                    if v:
                        row[l] = v
                    else:
                        row.pop(l, None)
        return JacobiForm(quo, self.weight_x2 - other.weight_x2, self.index_x2 - other.index_x2,
                          self.parity * other.parity, self.pole_order, qt)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {"weight_x2": self.weight_x2, "index_x2": self.index_x2, "parity": self.parity,
                "pole_order": self.pole_order, "trunc_q": self.trunc_q, "qden": QDEN, "lden": LDEN,
                "terms": [[n, l, str(c)] for (n, l), c in self.coeffs.items()]}

    @classmethod
    def from_json(cls, obj):
        return cls({(n, l): int(c) for n, l, c in obj["terms"]}, obj["weight_x2"], obj["index_x2"],
                   obj["parity"], obj["pole_order"], obj.get("trunc_q"))


def _tmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def one_form():
    return JacobiForm({(0, 0): 1}, 0, 0, 1, 0, None)


def from_qseries(s: QSeries, weight_x2: int = 0) -> JacobiForm:
    """View a q-series as an index-0 Jacobi form."""
    if QDEN % s.denom:
        raise ValueError(f"q-denominator {s.denom} does not divide {QDEN}")
    f = QDEN // s.denom
    return JacobiForm({(e * f, 0): c for e, c in s.coeffs.items()}, weight_x2, 0, 1, 0,
                      None if s.trunc is None else s.trunc * f)


def index_rescale(phi: JacobiForm, d: int) -> JacobiForm:
    """phi(tau, d z)."""
    if d < 1:
        raise ValueError("d must be positive")
    return phi._like({(n, l * d): c for (n, l), c in phi.coeffs.items()}, phi.trunc_q,
                     index_x2=phi.index_x2 * d * d)


def norm_class(n, l, t):
    """(4tn - l^2, representative of +-l mod 2t in [0, t])."""
    D = 4 * t * n - l * l
    r = l % (2 * t)
    return D, min(r, 2 * t - r)


# -- theta and the generator catalogue ----------------------------------------

def _binomial_factor(coeffs, shift, trunc, sign=-1):
    """coeffs * (1 + sign * x) where x is the monomial with scaled key ``shift``."""
    out = dict(coeffs)
    for (n, l), c in coeffs.items():
        k = (n + shift[0], l + shift[1])
        if trunc is not None and k[0] >= trunc:
            continue
        out[k] = out.get(k, 0) + sign * c
    return {k: v for k, v in out.items() if v}


def theta_sum(prec) -> JacobiForm:
    """theta(tau, z) = sum (-4/m) q^(m^2/8) r^(m/2)."""
    t = int(Fraction(prec) * QDEN)
    out = {}
    m = 1
    while 3 * m * m < t:
        for mm in (m, -m):
            c = kronecker(-4, mm)
            if c:
                out[(3 * m * m, mm)] = c
        m += 1
    return JacobiForm(out, 1, 1, -1, 0, t)


def theta_product(prec) -> JacobiForm:
    """theta from the triple product."""
    t = int(Fraction(prec) * QDEN)
    body_t = t - 3
    cur = {(0, 0): 1}
    cur = _binomial_factor(cur, (0, 2), body_t)          # (1 - r)
    n = 1
    while QDEN * n < body_t:
        cur = _binomial_factor(cur, (QDEN * n, 2), body_t)
        cur = _binomial_factor(cur, (QDEN * n, -2), body_t)
        cur = _binomial_factor(cur, (QDEN * n, 0), body_t)
        n += 1
    return JacobiForm({(a + 3, b - 1): -c for (a, b), c in cur.items()}, 1, 1, -1, 0, t)


def theta(prec) -> JacobiForm:
    return theta_sum(prec)


def theta_quotient(numer, denom, prec) -> JacobiForm:
    """prod theta(tau, a z) / prod theta(tau, b z), checked exact row by row."""
    extra = Fraction(len(denom), 8)
    p = Fraction(prec) + extra + 1
    th = theta(p)
    num = one_form()
    for a in numer:
        num = num * index_rescale(th, a)
    den = one_form()
    for b in denom:
        den = den * index_rescale(th, b)
    return num.exact_div(den).truncate(prec)


def _eta_form(power, prec):
    return from_qseries(eta_sum(int(Fraction(prec) * QDEN) + 1).pow_int(power), weight_x2=power)


def phi_0_2_sum(prec) -> JacobiForm:
    """phi_{0,2} from its eta^-4 character sum."""
    t = int(Fraction(prec) * QDEN)
    big = t + 4          # eta^-4 starts at q^(-4/24)
    acc = {}
    mmax = math.isqrt(big // 3) + 1
    nmax = math.isqrt(big) + 1
    for m in range(-mmax, mmax + 1):
        cm = kronecker(-4, m)
        if not cm:
            continue
        for n in range(-nmax, nmax + 1):
            cn = kronecker(12, n)
            e = 3 * m * m + n * n
            if cn and e < big:
                k = (e, m + n)
                acc[k] = acc.get(k, 0) + (3 * m - n) * cm * cn
    s = JacobiForm(acc, 4, 4, 1, 0, big)
    inv = from_qseries(eta_sum(big).invert_unit().pow_int(4), weight_x2=-4)
    return (s * inv).divexact_int(2).truncate(prec)


def phi_0_4_product(prec) -> JacobiForm:
    t = int(Fraction(prec) * QDEN)
    cur = {(0, 0): 1}
    m = 1
    while QDEN * (m - 1) < t:
        a = QDEN * (m - 1)
        # (1 + q^(m-1) r + q^(2m-2) r^2)
        nxt = dict(cur)
        for (n, l), c in cur.items():
            for k in ((n + a, l + 2), (n + 2 * a, l + 4)):
                if k[0] < t:
                    nxt[k] = nxt.get(k, 0) + c
        cur = nxt
        b = QDEN * m
        nxt = dict(cur)
        for (n, l), c in cur.items():
            for k in ((n + b, l - 2), (n + 2 * b, l - 4)):
                if k[0] < t:
                    nxt[k] = nxt.get(k, 0) + c
        cur = nxt
        m += 1
    n = 1
    while QDEN * n < t:
        if n % 3:
            cur = _binomial_factor(cur, (QDEN * n, 6), t)
            cur = _binomial_factor(cur, (QDEN * n, -6), t)
        n += 1
    return JacobiForm({(a, b - 2): c for (a, b), c in cur.items() if c}, 0, 8, 1, 0, t)


def phi_0_3half_product(prec) -> JacobiForm:
    t = int(Fraction(prec) * QDEN)
    cur = {(0, 0): 1}
    n = 1
    while QDEN * (n - 1) < t:
        cur = _binomial_factor(cur, (QDEN * (n - 1), 2), t, +1)
        cur = _binomial_factor(cur, (QDEN * n, -2), t, +1)
        cur = _binomial_factor(cur, (QDEN * (2 * n - 1), 4), t)
        cur = _binomial_factor(cur, (QDEN * (2 * n - 1), -4), t)
        n += 1
    return JacobiForm({(a, b - 1): c for (a, b), c in cur.items()}, 0, 3, 1, 0, t)


GENERATORS = ("phi_0_1", "phi_0_2", "phi_0_3", "phi_0_4", "phi_m2_1", "phi_0_3half",
              "phi_m1_half", "D_0_6")

def generator(name: str, prec) -> JacobiForm:
    """One of the catalogue forms, truncated below q^prec."""
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}; expected one of {', '.join(GENERATORS)}")
    return _generator(name, Fraction(prec))


@lru_cache(maxsize=256)
def _generator(name, prec):
    p = prec
    if name == "phi_0_3half":
        return theta_quotient([2], [1], p)
    if name == "phi_m1_half":
        th = theta(p + 1)
        out = th.exact_div(_eta_form(3, p + 1))
        return out.truncate(p)
    if name == "phi_0_3":
        return _generator("phi_0_3half", p) ** 2
    if name == "phi_m2_1":
        return _generator("phi_m1_half", p) ** 2
    if name == "phi_0_2":
        return phi_0_2_sum(p)
    if name == "phi_0_4":
        return theta_quotient([3], [1], p)
    if name == "phi_0_1":
        p2 = _generator("phi_0_2", p)
        num = _generator("phi_0_4", p) * 4 + p2 * p2
        try:
            return num.exact_div(_generator("phi_0_3", p)).truncate(p)
        except SeriesError as exc:
            raise SeriesError("DIVISION_FAILED", f"4 phi04 + phi02^2 not divisible by phi03: {exc}",
                              exc.position) from exc
    if name == "D_0_6":
        th = theta(p + 1) ** 12
        return th.exact_div(_eta_form(12, p + 1)).truncate(p)
    raise AssertionError(name)


# -- Eisenstein-Jacobi series -------------------------------------------------

def _E(k, prec):
    return from_qseries(eisenstein(k, int(Fraction(prec)) + 1), weight_x2=2 * k)


def eisenstein_jacobi(k: int, m: int, prec, primed: bool = False) -> JacobiForm:
    """E_{k,m} from the generator relations; ``primed`` selects E'_{6,3}."""
    if (k, m) not in {(4, 1), (4, 2), (4, 3), (6, 1), (6, 2), (6, 3)}:
        raise ValueError(f"unsupported Eisenstein-Jacobi series E_{k},{m}")
    return _ej(k, m, Fraction(prec), primed and (k, m) == (6, 3))


@lru_cache(maxsize=128)
def _ej(k, m, p, primed):
    g = lambda name: generator(name, p)
    E4, E6 = _E(4, p), _E(6, p)
    if (k, m) == (4, 1):
        out = (E4 * g("phi_0_1") - E6 * g("phi_m2_1")).divexact_int(12)
    elif (k, m) == (6, 1):
        out = (E6 * g("phi_0_1") - E4 * E4 * g("phi_m2_1")).divexact_int(12)
    elif (k, m) == (4, 2):
        out = (_ej(4, 1, p, False) * g("phi_0_1") - _ej(6, 1, p, False) * g("phi_m2_1")).divexact_int(12)
    elif (k, m) == (6, 2):
        out = (_ej(6, 1, p, False) * g("phi_0_1")
               - E4 * _ej(4, 1, p, False) * g("phi_m2_1")).divexact_int(12)
    elif (k, m) == (4, 3):
        out = (_ej(4, 1, p, False) * g("phi_0_2") - E4 * g("phi_0_3")).divexact_int(2)
    else:
        prime = (_ej(6, 1, p, False) * g("phi_0_2") - E6 * g("phi_0_3")).divexact_int(2)
        if primed:
            out = prime
        else:
            corr = from_qseries(delta12(int(p) + 1), 24) * g("phi_m2_1") ** 3
            out = (prime * 61 - corr * 22).divexact_int(61)
    out = out.truncate(p)
    out.pole_order = 0
    return out


# -- expression evaluation ---------------------------------------------------

class ExpressionEvaluator:
    """Evaluate polynomial expressions in named Jacobi forms.

    Supported names: E4 E6 Delta E41 E42 E43 E61 E62 E63p p1 p2 p3 p4 pm21
    D06, and calls ``R(expr, d)`` (index rescale), ``TQ(a, b, ..., '/', c, ...)``
    written as ``TQ([a, b], [c, d])`` and ``XI(t, j)`` (a Table 1 form via
    ``resolver``).  Division is only allowed by ``Delta``.
    """

    NAMES = {
        "p1": "phi_0_1", "p2": "phi_0_2", "p3": "phi_0_3", "p4": "phi_0_4",
        "pm21": "phi_m2_1", "D06": "D_0_6",
    }

    def __init__(self, prec, resolver=None):
        self.prec = Fraction(prec)
        self.resolver = resolver
        self._powers = {}

    def leaf(self, name):
        p = self.prec
        if name in self.NAMES:
            return generator(self.NAMES[name], p)
        if name in ("E4", "E6"):
            return _E(int(name[1]), p)
        if name == "Delta":
            return from_qseries(delta12(int(p) + 1), 24)
        if name in ("E41", "E42", "E43", "E61", "E62"):
            return eisenstein_jacobi(int(name[1]), int(name[2]), p)
        if name == "E63p":
            return eisenstein_jacobi(6, 3, p, primed=True)
        raise ValueError(f"unknown symbol {name!r}")

    def power(self, name, e):
        key = (name, e)
        if key not in self._powers:
            if e == 1:
                self._powers[key] = self.leaf(name)
            elif e % 2 == 0:
                h = self.power(name, e // 2)
                self._powers[key] = h * h
            else:
                self._powers[key] = self.power(name, e - 1) * self.power(name, 1)
        return self._powers[key]

    def evaluate(self, text):
        tree = ast.parse(text, mode="eval").body
        return self._eval(tree)

    def _eval(self, node):
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if isinstance(node.left, ast.Name) and isinstance(node.right, ast.Constant):
                    return self.power(node.left.id, node.right.value)
                return self._eval(node.left) ** self._eval(node.right)
            if isinstance(node.op, ast.Div):
                if isinstance(node.right, ast.Name) and node.right.id == "Delta":
                    return self._eval(node.left).div_by_delta(1)
                raise ValueError("only division by Delta is supported")
            left, right = self._eval(node.left), self._eval(node.right)
            if isinstance(node.op, ast.Add):
                return _add_any(left, right)
            if isinstance(node.op, ast.Sub):
                return _add_any(left, _neg_any(right))
            if isinstance(node.op, ast.Mult):
                if isinstance(left, int) and isinstance(right, int):
                    return left * right
                return left * right if not isinstance(left, int) else right * left
            raise ValueError(f"operator {type(node.op).__name__} not supported")
        if isinstance(node, ast.UnaryOp):
            v = self._eval(node.operand)
            if isinstance(node.op, ast.USub):
                return _neg_any(v)
            if isinstance(node.op, ast.UAdd):
                return v
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            return self.power(node.id, 1)
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
            fn = node.func.id
            if fn == "R":
                return index_rescale(self._eval(node.args[0]), node.args[1].value)
            if fn == "TQ":
                num = [e.value for e in node.args[0].elts]
                den = [e.value for e in node.args[1].elts]
                return theta_quotient(num, den, self.prec)
            if fn == "XI":
                if self.resolver is None:
                    raise ValueError("XI(...) needs a resolver")
                return self.resolver(node.args[0].value, node.args[1].value, self.prec)
        raise ValueError(f"unsupported expression node {ast.dump(node)}")


def _neg_any(v):
    return -v


def _add_any(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return a + b
    if isinstance(a, int):
        a, b = b, a
    if isinstance(b, int):
        if b == 0:
            return a
        return a + JacobiForm({(0, 0): b}, a.weight_x2, a.index_x2, a.parity, 0, None)
    return a + b


def delta_depth(text) -> int:
    """Number of nested divisions by Delta (the extra q-precision needed)."""
    tree = ast.parse(text, mode="eval").body

    def depth(node):
        if isinstance(node, ast.BinOp):
            d = max(depth(node.left), depth(node.right))
            if isinstance(node.op, ast.Div):
                d = depth(node.left) + 1
            return d
        if isinstance(node, ast.UnaryOp):
            return depth(node.operand)
        if isinstance(node, ast.Call):
            return max([depth(a) for a in node.args] or [0])
        return 0

    return depth(tree)


def evaluate_expression(text, prec, resolver=None) -> JacobiForm:
    """Evaluate ``text`` with enough headroom for its Delta divisions."""
    extra = delta_depth(text)
    ev = ExpressionEvaluator(Fraction(prec) + extra, resolver)
    out = ev.evaluate(text)
    return out.truncate(prec)


# -- numerics ------------------------------------------------------------------

def evaluate_numeric(phi: JacobiForm, tau: complex, z: complex, tol: float = 1e-6) -> complex:
    """Sum the truncated expansion at (tau, z), refusing if the tail is too big."""
    if tau.imag <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    rows = phi.rows()
    total = 0j
    row_abs = {}
    for n, row in rows.items():
        s = 0j
        a = 0.0
        for l, c in row.items():
            term = c * cmath.exp(2j * math.pi * ((n / QDEN) * tau + (l / LDEN) * z))
            s += term
            a += abs(term)
        total += s
        row_abs[n] = a
    if phi.trunc_q is not None and row_abs:
        top = sorted(row_abs)[-2:]
        qabs = math.exp(-2 * math.pi * tau.imag)
        est = max(row_abs[n] for n in top)
        step = qabs ** (1 / 1)
        tail = est * step / (1 - step) if step < 1 else math.inf
        if tail > tol:
            raise SeriesError("TAIL_TOO_LARGE", f"tail estimate {tail:.3g} exceeds {tol:g}")
    return total


def transformation_check(phi: JacobiForm, element, tau: complex = 2j, z: complex = 0.3,
                         tol: float = 1e-6) -> float:
    """|LHS - RHS| of one transformation law at a sample point.

    ``element`` is one of ``("mu", k)``, ``("lambda", k)``, ``"T"``, ``"S"``.
    Only forms with trivial character are meaningful for T and S.
    """
    t = float(phi.index)
    k = float(phi.weight)
    f = lambda tt, zz: evaluate_numeric(phi, tt, zz, tol)
    if element == "T":
        return abs(f(tau + 1, z) - f(tau, z))
    if element == "S":
        lhs = f(-1 / tau, z / tau)
        rhs = tau ** k * cmath.exp(2j * math.pi * t * z * z / tau) * f(tau, z)
        return abs(lhs - rhs)
    kind, amount = element
    if kind == "mu":
        lhs = f(tau, z + amount)
        rhs = (-1) ** round(2 * t * amount) * f(tau, z)
        return abs(lhs - rhs)
    if kind == "lambda":
        lam = amount
        lhs = f(tau, z + lam * tau)
        rhs = (-1) ** round(2 * t * lam) * cmath.exp(-2j * math.pi * t * (lam * lam * tau + 2 * lam * z)) * f(tau, z)
        return abs(lhs - rhs)
    raise ValueError(f"unknown group element {element!r}")
