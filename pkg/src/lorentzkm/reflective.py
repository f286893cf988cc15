"""Reflective Jacobi forms of weight 0: bases, the reflectivity criterion,
root classes, divisor multiplicities and the unit-multiplicity search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .data import RANKS, SUPPORTED_T, TABLE1
from .jacobi import QDEN, LDEN, JacobiForm, evaluate_expression, norm_class
from .series import SeriesError


@dataclass(frozen=True, order=True)
class RootClass:
    """Norm D and the residue +-l mod 2t (stored as its representative in [0, t])."""

    D: int
    l: int

    def __str__(self):
        return f"[{self.D},{self.l}]"

    def divisor_data(self, t):
        """(a, b) with D = b^2 - 4ta and b in [0, t]."""
        a, rem = divmod(self.l * self.l - self.D, 4 * t)
        if rem:
            raise ValueError(f"{self} is not a class of index {t}")
        return a, self.l


@dataclass
class ReflectiveBasis:
    t: int
    forms: list
    expressions: list
    classes: list
    mul: list = field(default_factory=list)

    @property
    def rank(self):
        return len(self.forms)


def check_t(t):
    if t not in SUPPORTED_T:
        raise ValueError(f"t={t} unsupported; supported values are {', '.join(map(str, SUPPORTED_T))}")


def default_prec(t) -> int:
    """Enough q-depth for every reduced coefficient of negative norm."""
    return max(2, t // 4 + 1)


@lru_cache(maxsize=64)
def _basis_form(t, j, prec):
    text = TABLE1[t]["forms"][j - 1]
    form = evaluate_expression(text, prec, resolver=_resolve)
    form.pole_order = max(0, -(form.valuation() or 0) // QDEN)
    return form


def _resolve(t, j, prec):
    return basis_form(t, j, prec)


def basis_form(t, j, prec=None) -> JacobiForm:
    """The j-th (1-based) basis form of RJ_t, truncated below q^prec."""
    check_t(t)
    if not 1 <= j <= RANKS[t]:
        raise ValueError(f"RJ_{t} has rank {RANKS[t]}")
    return _basis_form(t, j, Fraction(default_prec(t) if prec is None else prec))


def rj_basis(t, prec=None) -> ReflectiveBasis:
    check_t(t)
    forms = [basis_form(t, j, prec) for j in range(1, RANKS[t] + 1)]
    classes = enumerate_root_classes(t)
    mul = [[0] * len(forms) for _ in classes]
    for j, f in enumerate(forms):
        m = divisor_multiplicities(f, t)
        for i, c in enumerate(classes):
            mul[i][j] = m[c]
    return ReflectiveBasis(t, forms, list(TABLE1[t]["forms"]), classes, mul)


def combination(basis: ReflectiveBasis, combo) -> JacobiForm:
    if len(combo) != basis.rank:
        raise ValueError(f"combo has {len(combo)} entries, RJ_{basis.t} has rank {basis.rank}")
    out = None
    for c, f in zip(combo, basis.forms):
        if c:
            out = f * c if out is None else out + f * c
    if out is None:
        out = basis.forms[0] * 0
    return out


# -- criterion and classes -------------------------------------------------

def _integral_terms(phi):
    for (n, l), c in phi.coeffs.items():
        if n % QDEN or l % LDEN:
            continue
        yield n // QDEN, l // LDEN, c


def is_reflective(phi: JacobiForm, t) -> tuple:
    """(True, None) or (False, (k, l)) for the first offending coefficient.

    Every negative-norm coefficient is equivalent to one with k <= t/4, so an
    expansion past that depth is checked completely.
    """
    bad = []
    for k, l, c in _integral_terms(phi):
        N = 4 * t * k - l * l
        if N < 0 and gcd(4 * t, 2 * l) % (-N):
            bad.append((k, -l))
    if any(n % QDEN or l % LDEN for n, l in phi.coeffs):
        k = next((n, l) for n, l in phi.coeffs if n % QDEN or l % LDEN)
        return False, (Fraction(k[0], QDEN), Fraction(k[1], LDEN))
    if bad:
        k, ml = min(bad)
        return False, (k, -ml)
    return True, None


def enumerate_root_classes(t) -> list:
    out = []
    for l in range(t + 1):
        g = gcd(4 * t, 2 * l)
        for D in range(1, g + 1):
            if g % D == 0 and (D - l * l) % (4 * t) == 0:
                out.append(RootClass(D, l))
    return sorted(out)


def reduced_coeff(phi: JacobiForm, t, k, l) -> int:
    """f(k, l) via invariance under l -> l + 2t and l -> -l at fixed norm."""
    N = 4 * t * k - l * l
    r = l % (2 * t)
    lr = min(r, 2 * t - r)
    kr = (N + lr * lr) // (4 * t)
    return phi.coeff(kr, lr)


def min_norm(phi: JacobiForm, t) -> int:
    return min((4 * t * k - l * l for k, l, _ in _integral_terms(phi)), default=0)


def divisor_multiplicities(phi: JacobiForm, t) -> dict:
    """Class -> sum over n > 0 of f(n^2 a, n b)."""
    dmin = min_norm(phi, t)
    out = {}
    for cls in enumerate_root_classes(t):
        a, b = cls.divisor_data(t)
        total, n = 0, 1
        while n * n * cls.D <= -dmin:
            total += reduced_coeff(phi, t, n * n * a, n * b)
            n += 1
        out[cls] = total
    return out


def table_mul(t) -> tuple:
    """The printed Mul matrix re-indexed to the sorted class order.

    Returns (matrix, row map) and raises if the printed rows disagree on a
    repeated class.
    """
    entry = TABLE1[t]
    labels = entry["R"] or entry["P0_classes"]
    classes = enumerate_root_classes(t)
    rows = {}
    for (D, l), row in zip(labels, entry["mul"]):
        c = RootClass(D, min(l % (2 * t), 2 * t - l % (2 * t)))
        if c in rows and rows[c] != row:
            raise ValueError(f"printed Mul rows disagree for class {c}")
        rows[c] = row
    return [rows.get(c) for c in classes], labels


# -- Table 1 comparison ----------------------------------------------------

def table1_mismatches(t, basis: ReflectiveBasis | None = None) -> list:
    """Every disagreement between computed forms and the printed Table 1 data."""
    basis = basis or rj_basis(t)
    entry = TABLE1[t]
    issues = []
    for j, (form, printed) in enumerate(zip(basis.forms, entry["leading"]), start=1):
        seen = {}
        for item in printed:
            n, l, c = item[:3]
            seen.setdefault(n, set()).add(l)
            got = form.coeff(n, l)
            if got != c:
                issues.append(f"xi{j}: f({n},{l}) = {got}, printed {c}")
            if len(item) == 4 and norm_class(n, l, t)[0] != item[3]:
                issues.append(f"xi{j}: norm of ({n},{l}) is {norm_class(n, l, t)[0]}, printed {item[3]}")
        for n in entry["complete"][j - 1]:
            extra = {l: c for l, c in form.q_slice(n).items() if l not in seen.get(n, set())}
            if extra:
                issues.append(f"xi{j}: q^{n} slice has unprinted terms {extra}")
    want, _ = table_mul(t)
    for cls, row_got, row_want in zip(basis.classes, basis.mul, want):
        if row_want is not None and row_got != row_want:
            issues.append(f"Mul row {cls}: computed {row_got}, printed {row_want}")
    return issues


# -- unit multiplicity search ---------------------------------------------

def _solve(M, v):
    """Unique rational solution of M c = v or None (assumes full column rank)."""
    k = len(M[0])
    rows = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(M, v)]
    piv = []
    r0 = 0
    for col in range(k):
        p = next((i for i in range(r0, len(rows)) if rows[i][col]), None)
        if p is None:
            return None
        rows[r0], rows[p] = rows[p], rows[r0]
        inv = 1 / rows[r0][col]
        rows[r0] = [x * inv for x in rows[r0]]
        for i in range(len(rows)):
            if i != r0 and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r0])]
        piv.append(col)
        r0 += 1
    if any(r[-1] for r in rows[r0:]):
        return None
    return [rows[i][-1] for i in range(k)]


def _rank(M):
    rows = [[Fraction(x) for x in r] for r in M]
    rank = 0
    for col in range(len(M[0])):
        p = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def search_unit_multiplicity(t, coeff_bound=20, mul=None) -> list:
    """All nonzero integer c, |c_j| <= bound, giving multiplicities in {0, 1}."""
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    M = mul if mul is not None else rj_basis(t).mul
    k = len(M[0])
    found = set()
    if _rank(M) == k:
        for v in itertools.product((0, 1), repeat=len(M)):
            c = _solve(M, v)
            if c is None or any(x.denominator != 1 for x in c):
                continue
            c = tuple(int(x) for x in c)
            if any(c) and max(map(abs, c)) <= coeff_bound:
                found.add(c)
    else:
        rng = range(-coeff_bound, coeff_bound + 1)
        for c in itertools.product(rng, repeat=k):
            if any(c) and all(sum(a * b for a, b in zip(row, c)) in (0, 1) for row in M):
                found.add(c)
    return sorted(found)
