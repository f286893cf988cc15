"""Exact truncated Laurent series over the integers.

Two carriers live here: ``QSeries`` (one variable) and ``TriSeries`` (q, r, s
with r untruncated).  Exponents are stored as integers over a fixed
per-series denominator.  Multiplication goes through Kronecker substitution:
both operands are packed into one Python integer, multiplied once and
unpacked, which is far faster than a Python-level convolution.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from typing import Iterable

import numpy as np


class SeriesError(ArithmeticError):
    """Arithmetic failure with a machine-readable ``code``.

    ``position`` holds the first offending exponent (scaled units) when the
    failure is local to one coefficient.
    """

    def __init__(self, code, message="", position=None):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.position = position


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sigma(k: int, n: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def _ceil_div(a, b):
    return -(-a // b)


def _min_trunc(*ts):
    vals = [t for t in ts if t is not None]
    return min(vals) if vals else None


# -- Kronecker-substitution kernel ------------------------------------------

def kron_mul(a: dict, b: dict, cut=None) -> dict:
    """Multiply two sparse multivariate Laurent polynomials.

    Keys are equal-length integer tuples.  If ``cut`` is given, only product
    terms whose first key component is ``< cut`` are returned (and the inputs
    are pre-trimmed accordingly).
    """
    if not a or not b:
        return {}
    ka = list(a)
    kb = list(b)
    dim = len(ka[0])
    oa = [min(k[d] for k in ka) for d in range(dim)]
    ob = [min(k[d] for k in kb) for d in range(dim)]
    if cut is not None:
        room = cut - oa[0] - ob[0]
        if room <= 0:
            return {}
        ka = [k for k in ka if k[0] - oa[0] < room]
        kb = [k for k in kb if k[0] - ob[0] < room]
    step = []
    for d in range(dim):
        g = 0
        for k in ka:
            g = gcd(g, k[d] - oa[d])
        for k in kb:
            g = gcd(g, k[d] - ob[d])
        step.append(g or 1)
    ea = [max((k[d] - oa[d]) // step[d] for k in ka) + 1 for d in range(dim)]
    eb = [max((k[d] - ob[d]) // step[d] for k in kb) + 1 for d in range(dim)]
    ext = [ea[d] + eb[d] - 1 for d in range(dim)]
    stride = [1] * dim
    for d in range(dim - 2, -1, -1):
        stride[d] = stride[d + 1] * ext[d + 1]
    nslots = stride[0] * ext[0]
    if cut is not None:
        rows = min(ext[0], _ceil_div(cut - oa[0] - ob[0], step[0]))
        nslots = rows * stride[0]

    bound = sum(abs(a[k]) for k in ka) * sum(abs(b[k]) for k in kb)
    nbytes = (bound.bit_length() + 2 + 7) // 8
    if nbytes <= 8:
        nbytes = 8
    half = 1 << (8 * nbytes - 1)

    def pack(src, keys, orig):
        idx = {}
        for k in keys:
            s = 0
            for d in range(dim):
                s += ((k[d] - orig[d]) // step[d]) * stride[d]
            idx[s] = src[k]
        top = max(idx) + 1
        pos = bytearray(top * nbytes)
        neg = bytearray(top * nbytes)
        for s, c in idx.items():
            if c > 0:
                pos[s * nbytes:(s + 1) * nbytes] = c.to_bytes(nbytes, "little")
            else:
                neg[s * nbytes:(s + 1) * nbytes] = (-c).to_bytes(nbytes, "little")
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    z = pack(a, ka, oa) * pack(b, kb, ob)
    width = 8 * nbytes * nslots
    z &= (1 << width) - 1
    if z >> (width - 1):
        z -= 1 << width
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * nslots, "little")
    buf = (z + bias).to_bytes(nbytes * nslots, "little")

    origin = [oa[d] + ob[d] for d in range(dim)]
    out = {}
    if nbytes == 8:
        raw = np.frombuffer(buf, dtype="<u8")
        vals = (raw ^ np.uint64(half)).view(np.int64)
        nz = np.nonzero(vals)[0]
        coeffs = vals[nz].tolist()
        slots = nz.tolist()
    else:
        slots, coeffs = [], []
        for s in range(nslots):
            v = int.from_bytes(buf[s * nbytes:(s + 1) * nbytes], "little") - half
            if v:
                slots.append(s)
                coeffs.append(v)
    for s, c in zip(slots, coeffs):
        key = []
        for d in range(dim):
            q, s = divmod(s, stride[d])
            key.append(origin[d] + q * step[d])
        out[tuple(key)] = int(c)
    return out


def poly_mul(a: dict, b: dict) -> dict:
    """Product of Laurent polynomials given as {exponent: coeff}."""
    if not a or not b:
        return {}
    if len(a) * len(b) <= 64:
        out = {}
        for i, x in a.items():
            for j, y in b.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return {k: v for k, v in out.items() if v}
    res = kron_mul({(k,): v for k, v in a.items()}, {(k,): v for k, v in b.items()})
    return {k[0]: v for k, v in res.items()}


def poly_divexact(num: dict, den: dict) -> dict | None:
    """Exact quotient of Laurent polynomials, or None if it does not exist."""
    if not num:
        return {}
    if not den:
        raise SeriesError("NON_DIVISIBLE", "division by zero polynomial")
    g = 0
    dlo = min(den)
    for e in den:
        g = gcd(g, e - dlo)
    nlo = min(num)
    for e in num:
        g = gcd(g, e - nlo)
    g = g or 1
    dn = [0] * ((max(den) - dlo) // g + 1)
    for e, c in den.items():
        dn[(e - dlo) // g] = c
    nn = [0] * ((max(num) - nlo) // g + 1)
    for e, c in num.items():
        nn[(e - nlo) // g] = c
    if len(nn) < len(dn):
        return None
    lead = dn[0]
    qlen = len(nn) - len(dn) + 1
    quo = [0] * qlen
    for i in range(qlen):
        c = nn[i]
        if c:
            qc, rem = divmod(c, lead)
            if rem:
                return None
            quo[i] = qc
            for j in range(1, len(dn)):
                nn[i + j] -= qc * dn[j]
    if any(nn[qlen:]):
        return None
    base = nlo - dlo
    return {base + i * g: c for i, c in enumerate(quo) if c}


# -- one variable -----------------------------------------------------------

class QSeries:
    """Truncated Laurent series sum c_e q^(e/denom) with e < trunc.

    ``trunc=None`` marks an exact (finite) Laurent polynomial.
    """

    __slots__ = ("denom", "coeffs", "trunc")

    def __init__(self, coeffs=None, denom: int = 1, trunc=None):
        if denom < 1:
            raise ValueError("denom must be positive")
        items = {}
        for e, c in (coeffs or {}).items():
            e = int(e)
            if c and (trunc is None or e < trunc):
                items[e] = items.get(e, 0) + int(c)
        self.denom = denom
        self.coeffs = {e: items[e] for e in sorted(items) if items[e]}
        self.trunc = trunc

    @classmethod
    def monomial(cls, e, coeff=1, denom=1, trunc=None):
        return cls({e: coeff}, denom, trunc)

    def __repr__(self):
        return f"QSeries(denom={self.denom}, trunc={self.trunc}, terms={len(self.coeffs)})"

    def __getitem__(self, e):
        if self.trunc is not None and e >= self.trunc:
            raise SeriesError("INSUFFICIENT_PRECISION", f"exponent {e} beyond trunc {self.trunc}", e)
        return self.coeffs.get(e, 0)

    def coefficient(self, exponent) -> int:
        """Coefficient at a rational exponent (natural units)."""
        e = Fraction(exponent) * self.denom
        if e.denominator != 1:
            return 0
        return self[int(e)]

    def valuation(self):
        if self.coeffs:
            return next(iter(self.coeffs))
        return self.trunc

    def _align(self, other):
        if isinstance(other, int):
            other = QSeries({0: other}, self.denom)
        if other.denom == self.denom:
            return self, other
        d = self.denom * other.denom // gcd(self.denom, other.denom)
        return self.rescale(d), other.rescale(d)

    def rescale(self, denom):
        """Re-express exponents over a multiple of the current denominator."""
        if denom % self.denom:
            raise ValueError("new denominator must be a multiple")
        f = denom // self.denom
        return QSeries({e * f: c for e, c in self.coeffs.items()}, denom,
                       None if self.trunc is None else self.trunc * f)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs and a.trunc == b.trunc

    def agrees(self, other) -> bool:
        """Equal on the common range of knowledge."""
        a, b = self._align(other)
        t = _min_trunc(a.trunc, b.trunc)
        keys = set(a.coeffs) | set(b.coeffs)
        return all(a.coeffs.get(k, 0) == b.coeffs.get(k, 0) for k in keys if t is None or k < t)

    def __neg__(self):
        return QSeries({e: -c for e, c in self.coeffs.items()}, self.denom, self.trunc)

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries({0: other}, self.denom)
        a, b = self._align(other)
        out = dict(a.coeffs)
        for e, c in b.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries(out, a.denom, _min_trunc(a.trunc, b.trunc))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries({e: c * other for e, c in self.coeffs.items()}, self.denom, self.trunc)
        a, b = self._align(other)
        va, vb = a.valuation(), b.valuation()
        t = None
        if a.trunc is not None:
            t = a.trunc + (vb if vb is not None else 0)
        if b.trunc is not None:
            tb = b.trunc + (va if va is not None else 0)
            t = tb if t is None else min(t, tb)
        if not a.coeffs or not b.coeffs:
            return QSeries({}, a.denom, t)
        prod = kron_mul({(e,): c for e, c in a.coeffs.items()},
                        {(e,): c for e, c in b.coeffs.items()}, t)
        return QSeries({k[0]: c for k, c in prod.items()}, a.denom, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        return self.pow_int(n)

    def pow_int(self, n: int, prec=None):
        if n < 0:
            return self.invert_unit(prec).pow_int(-n)
        result = QSeries({0: 1}, self.denom)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def truncate(self, trunc):
        t = trunc if self.trunc is None else min(trunc, self.trunc)
        return QSeries(self.coeffs, self.denom, t)

    def shift(self, e):
        """Multiply by q^(e/denom)."""
        return QSeries({k + e: c for k, c in self.coeffs.items()}, self.denom,
                       None if self.trunc is None else self.trunc + e)

    def invert_unit(self, prec=None):
        """1/self for a series whose lowest coefficient is +-1.

        ``prec`` bounds the result trunc and is required when self is exact.
        """
        if not self.coeffs:
            raise SeriesError("NOT_A_UNIT", "zero series")
        v = self.valuation()
        c0 = self.coeffs[v]
        if c0 not in (1, -1):
            raise SeriesError("NOT_A_UNIT", f"leading coefficient {c0}", v)
        if self.trunc is None:
            if prec is None:
                raise SeriesError("NOT_A_UNIT", "exact input needs prec for its inverse")
            target = prec + v
        else:
            target = self.trunc - v
            if prec is not None:
                target = min(target, prec + v)
        # u = c0 * q^-v * self = 1 + h
        rel = target
        u = {e - v: c * c0 for e, c in self.coeffs.items() if e - v < rel}
        inv = {0: 1}
        higher = [e for e in u if e > 0]
        if higher:
            p = min(higher)
            while True:
                p = min(2 * p, rel)
                ub = kron_mul({(e,): c for e, c in u.items()}, {(e,): c for e, c in inv.items()}, p)
                err = {k[0]: -c for k, c in ub.items()}
                err[0] = err.get(0, 0) + 1
                err = {e: c for e, c in err.items() if c}
                if err:
                    corr = kron_mul({(e,): c for e, c in inv.items()}, {(e,): c for e, c in err.items()}, p)
                    for k, c in corr.items():
                        inv[k[0]] = inv.get(k[0], 0) + c
                    inv = {e: c for e, c in inv.items() if c and e < p}
                if p >= rel:
                    break
        return QSeries({e - v: c * c0 for e, c in inv.items()}, self.denom, rel - v)

    def exact_div(self, other):
        """Quotient self/other, verified exact at every tracked exponent."""
        a, b = self._align(other)
        if not b.coeffs:
            raise SeriesError("NON_DIVISIBLE", "division by zero series")
        vb = b.valuation()
        lead = b.coeffs[vb]
        if a.trunc is None and b.trunc is None:
            q = poly_divexact(a.coeffs, b.coeffs)
            if q is None:
                raise SeriesError("NON_DIVISIBLE", "polynomial remainder is nonzero")
            return QSeries(q, a.denom)
        t = _min_trunc(a.trunc, None if b.trunc is None else b.trunc + (a.valuation() - vb))
        # long division from the bottom; O(len(quotient) * len(b))
        rest = dict(a.coeffs)
        quo = {}
        btail = [(e - vb, c) for e, c in b.coeffs.items() if e != vb]
        heap = sorted(rest)
        seen = set(heap)
        qt = t - vb if t is not None else None
        while heap:
            e = heapq.heappop(heap)
            seen.discard(e)
            c = rest.pop(e, 0)
            if not c:
                continue
            k = e - vb
            if qt is not None and k >= qt:
                continue
            qc, rem = divmod(c, lead)
            if rem:
                raise SeriesError("NON_DIVISIBLE", f"remainder at exponent {e}", e)
            quo[k] = qc
            for de, bc in btail:
                f = e + de
                if t is not None and f >= t:
                    continue
                rest[f] = rest.get(f, 0) - qc * bc
                if f not in seen:
                    seen.add(f)
                    heapq.heappush(heap, f)
        return QSeries(quo, a.denom, qt)

    def to_json(self):
        return {"denom": self.denom, "trunc": self.trunc,
                "terms": [[e, str(c)] for e, c in self.coeffs.items()]}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): int(c) for e, c in obj["terms"]}, obj["denom"], obj["trunc"])


# -- three variables ---------------------------------------------------------

class TriSeries:
    """Truncated series in q, r, s.

    Keys are scaled integer triples (eq, er, es) meaning
    q^(eq/denom_q) r^(er/denom_r) s^(es/denom_s).  Truncation applies to q and
    s only; every tracked (q, s) bidegree carries an exact Laurent polynomial
    in r.
    """

    __slots__ = ("denom_q", "denom_r", "denom_s", "coeffs", "trunc_q", "trunc_s")

    def __init__(self, coeffs=None, denom_q=1, denom_r=1, denom_s=1, trunc_q=None, trunc_s=None):
        items = {}
        for k, c in (coeffs or {}).items():
            if not c:
                continue
            if trunc_q is not None and k[0] >= trunc_q:
                continue
            if trunc_s is not None and k[2] >= trunc_s:
                continue
            k = (int(k[0]), int(k[1]), int(k[2]))
            items[k] = items.get(k, 0) + int(c)
        self.coeffs = {k: items[k] for k in sorted(items) if items[k]}
        self.denom_q, self.denom_r, self.denom_s = denom_q, denom_r, denom_s
        self.trunc_q, self.trunc_s = trunc_q, trunc_s

    def __repr__(self):
        return (f"TriSeries(denoms=({self.denom_q},{self.denom_r},{self.denom_s}), "
                f"truncs=({self.trunc_q},{self.trunc_s}), terms={len(self.coeffs)})")

    @property
    def denoms(self):
        return (self.denom_q, self.denom_r, self.denom_s)

    def _like(self, coeffs, trunc_q=None, trunc_s=None):
        return TriSeries(coeffs, self.denom_q, self.denom_r, self.denom_s, trunc_q, trunc_s)

    def _check(self, other):
        if self.denoms != other.denoms:
            raise ValueError(f"denominator mismatch {self.denoms} vs {other.denoms}")

    def rescale(self, denom_q=None, denom_r=None, denom_s=None):
        dq = denom_q or self.denom_q
        dr = denom_r or self.denom_r
        ds = denom_s or self.denom_s
        if dq % self.denom_q or dr % self.denom_r or ds % self.denom_s:
            raise ValueError("new denominators must be multiples")
        fq, fr, fs = dq // self.denom_q, dr // self.denom_r, ds // self.denom_s
        return TriSeries({(a * fq, b * fr, c * fs): v for (a, b, c), v in self.coeffs.items()},
                         dq, dr, ds,
                         None if self.trunc_q is None else self.trunc_q * fq,
                         None if self.trunc_s is None else self.trunc_s * fs)

    def coefficient(self, eq, er, es) -> int:
        """Coefficient of q^eq r^er s^es, exponents in natural (rational) units."""
        k = (Fraction(eq) * self.denom_q, Fraction(er) * self.denom_r, Fraction(es) * self.denom_s)
        if any(x.denominator != 1 for x in k):
            return 0
        k = tuple(int(x) for x in k)
        if (self.trunc_q is not None and k[0] >= self.trunc_q) or \
                (self.trunc_s is not None and k[2] >= self.trunc_s):
            raise SeriesError("INSUFFICIENT_PRECISION", f"{k} outside the box", k)
        return self.coeffs.get(k, 0)

    def __eq__(self, other):
        if not isinstance(other, TriSeries):
            return NotImplemented
        return (self.denoms == other.denoms and self.coeffs == other.coeffs
                and self.trunc_q == other.trunc_q and self.trunc_s == other.trunc_s)

    def truncate(self, trunc_q=None, trunc_s=None):
        tq = _min_trunc(trunc_q, self.trunc_q)
        ts = _min_trunc(trunc_s, self.trunc_s)
        return self._like(self.coeffs, tq, ts)

    def __neg__(self):
        return self._like({k: -c for k, c in self.coeffs.items()}, self.trunc_q, self.trunc_s)

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return self._like(out, _min_trunc(self.trunc_q, other.trunc_q),
                          _min_trunc(self.trunc_s, other.trunc_s))

    def __sub__(self, other):
        return self + (-other)

    def _vals(self):
        if not self.coeffs:
            return self.trunc_q, self.trunc_s
        return min(k[0] for k in self.coeffs), min(k[2] for k in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._like({k: c * other for k, c in self.coeffs.items()}, self.trunc_q, self.trunc_s)
        self._check(other)
        (vaq, vas), (vbq, vbs) = self._vals(), other._vals()
        tq = _min_trunc(None if self.trunc_q is None else self.trunc_q + (vbq or 0),
                        None if other.trunc_q is None else other.trunc_q + (vaq or 0))
        ts = _min_trunc(None if self.trunc_s is None else self.trunc_s + (vbs or 0),
                        None if other.trunc_s is None else other.trunc_s + (vas or 0))
        if not self.coeffs or not other.coeffs:
            return self._like({}, tq, ts)
        # order dims (q, s, r) so that r varies fastest
        a = {(k[0], k[2], k[1]): c for k, c in self.coeffs.items()}
        b = {(k[0], k[2], k[1]): c for k, c in other.coeffs.items()}
        if ts is not None:
            a = {k: c for k, c in a.items() if k[1] - vas < ts - vas - vbs}
            b = {k: c for k, c in b.items() if k[1] - vbs < ts - vas - vbs}
        prod = kron_mul(a, b, tq)
        return self._like({(k[0], k[2], k[1]): c for k, c in prod.items()}, tq, ts)

    __rmul__ = __mul__

    def pow_int(self, n: int):
        if n < 0:
            return self.invert_unit().pow_int(-n)
        result = self._like({(0, 0, 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    __pow__ = pow_int

    def _lead(self):
        """Lowest (q, s) bidegree, requiring every term to dominate it."""
        vq, vs = self._vals()
        slice_ = {k[1]: c for k, c in self.coeffs.items() if k[0] == vq and k[2] == vs}
        if not slice_:
            raise SeriesError("NOT_A_UNIT", "no componentwise-minimal (q, s) bidegree")
        return vq, vs, slice_

    def invert_unit(self):
        """Inverse when the minimal (q, s) slice is a monomial +-r^k."""
        if not self.coeffs:
            raise SeriesError("NOT_A_UNIT", "zero series")
        vq, vs, lead = self._lead()
        if len(lead) != 1 or next(iter(lead.values())) not in (1, -1):
            raise SeriesError("NOT_A_UNIT", f"leading slice {lead}")
        one = self._like({(0, 0, 0): 1})
        return one.exact_div(self)

    def exact_div(self, other):
        """Quotient self/other by slice-wise division in r.

        ``other`` must have a componentwise-minimal (q, s) bidegree; each
        quotient slice is an exact Laurent-polynomial division by that
        leading slice.  Raises NON_DIVISIBLE at the first failing bidegree.
        """
        self._check(other)
        if not other.coeffs:
            raise SeriesError("NON_DIVISIBLE", "division by zero series")
        bq, bs, lead = other._lead()
        if self.trunc_q is None and other.trunc_q is None or \
                self.trunc_s is None and other.trunc_s is None:
            raise SeriesError("NON_DIVISIBLE", "exact division needs truncation in q and s")
        vaq, vas = self._vals()
        tq = _min_trunc(self.trunc_q, None if other.trunc_q is None else other.trunc_q + vaq - bq) - bq
        ts = _min_trunc(self.trunc_s, None if other.trunc_s is None else other.trunc_s + vas - bs) - bs
        rows = {}
        for (eq, er, es), c in self.coeffs.items():
            rows.setdefault((eq, es), {})[er] = c
        brows = {}
        for (eq, er, es), c in other.coeffs.items():
            brows.setdefault((eq - bq, es - bs), {})[er] = c
        del brows[(0, 0)]
        quo = {}
        done = set()
        while True:
            live = [k for k, v in rows.items() if v and k not in done
                    and k[0] - bq < tq and k[1] - bs < ts]
            if not live:
                break
            key = min(live)
            num = rows.pop(key)
            q = poly_divexact(num, lead)
            if q is None:
                raise SeriesError("NON_DIVISIBLE", f"slice at (q,s)={key} not divisible", key)
            qk = (key[0] - bq, key[1] - bs)
            done.add(key)
            for er, c in q.items():
                quo[(qk[0], er, qk[1])] = c
            for (dq, ds), bp in brows.items():
                tgt = (key[0] + dq, key[1] + ds)
                if tgt[0] - bq >= tq or tgt[1] - bs >= ts:
                    continue
                row = rows.setdefault(tgt, {})
                for er, c in poly_mul(q, bp).items():
                    v = row.get(er, 0) - c
                    if v:
                        row[er] = v
                    else:
                        row.pop(er, None)
        return self._like(quo, tq, ts)

    def rescale_r(self, d: int):
        """Substitute r -> r^d."""
        return self._like({(a, b * d, c): v for (a, b, c), v in self.coeffs.items()},
                          self.trunc_q, self.trunc_s)

    def shift(self, eq=0, er=0, es=0):
        """Multiply by a monomial (scaled exponents)."""
        return self._like({(a + eq, b + er, c + es): v for (a, b, c), v in self.coeffs.items()},
                          None if self.trunc_q is None else self.trunc_q + eq,
                          None if self.trunc_s is None else self.trunc_s + es)

    def terms(self) -> Iterable:
        return self.coeffs.items()

    def to_json(self):
        return {"denoms": [self.denom_q, self.denom_r, self.denom_s],
                "truncs": [self.trunc_q, self.trunc_s],
                "terms": [[a, b, c, str(v)] for (a, b, c), v in self.coeffs.items()]}

    @classmethod
    def from_json(cls, obj):
        dq, dr, ds = obj["denoms"]
        tq, ts = obj["truncs"]
        return cls({(a, b, c): int(v) for a, b, c, v in obj["terms"]}, dq, dr, ds, tq, ts)


# -- scalar modular series ---------------------------------------------------

def eta_sum(prec: int) -> QSeries:
    """eta from the character sum; exponents over 24, trunc = prec."""
    out = {}
    n = 1
    while n * n < prec:
        c = kronecker(12, n)
        if c:
            out[n * n] = c
        n += 1
    return QSeries(out, 24, prec)


def eta_product(prec: int) -> QSeries:
    """eta as q^(1/24) prod (1 - q^n); exponents over 24."""
    body = euler_product(max(0, _ceil_div(prec - 1, 24)), 1)
    return body.rescale(24).shift(1).truncate(prec)


def eta(prec: int) -> QSeries:
    if prec < 1:
        raise ValueError("prec must be >= 1")
    return eta_sum(prec)


def euler_product(prec: int, power: int = 1) -> QSeries:
    """prod_{n>=1} (1 - q^n)^power to trunc ``prec`` (denominator 1).

    The power-1 case uses the pentagonal-number theorem.
    """
    base = {}
    k = 0
    while True:
        hit = False
        for j in ((k * (3 * k - 1)) // 2, (k * (3 * k + 1)) // 2) if k else (0,):
            if j < prec:
                base[j] = (-1) ** k
                hit = True
        if not hit:
            break
        k += 1
    return QSeries(base, 1, prec).pow_int(power) if power >= 0 else \
        QSeries(base, 1, prec).invert_unit().pow_int(-power)


def delta12(prec: int) -> QSeries:
    """Delta = q prod (1-q^n)^24, trunc ``prec`` in q units."""
    return euler_product(max(prec - 1, 0), 24).shift(1).truncate(prec)


def delta12_inverse(prec: int) -> QSeries:
    """1/Delta = sum p24(n) q^(n-1), trunc ``prec``."""
    return euler_product(prec + 1, -24).shift(-1).truncate(prec)


def eisenstein(k: int, prec: int) -> QSeries:
    if k == 4:
        c, p = 240, 3
    elif k == 6:
        c, p = -504, 5
    else:
        raise ValueError(f"eisenstein: weight {k} not supported (4 or 6)")
    sig = [0] * prec
    for d in range(1, prec):
        dp = d ** p
        for m in range(d, prec, d):
            sig[m] += dp
    coeffs = {n: c * sig[n] for n in range(1, prec)}
    coeffs[0] = 1
    return QSeries(coeffs, 1, prec)


def eta_power_coeffs(k: int, nmax: int) -> list:
    """tau_k(n) for n < nmax where eta^k = sum tau_k(n) q^(n/24)."""
    s = eta_sum(nmax).pow_int(k).truncate(nmax)
    return [s.coeffs.get(n, 0) for n in range(nmax)]
