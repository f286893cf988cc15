"""Rank-3 hyperbolic geometry of S_t = H + <2t>.

Vectors are triples (n, l, m) for n f2 - l f3^ + m f-2 with
(x, y) = -(n_x m_y + m_x n_y) + l_x l_y / 2t, so S_t* is Z^3 and S_t is the
sublattice l = 0 mod 2t.  All geometry is exact; the only floating point use
is in sizing enumeration boxes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .series import SeriesError

ANGLE_BY_PRODUCT = {0: "pi/2", 1: "pi/3", 2: "pi/4", 3: "pi/6", 4: "0"}


def _vec(x):
    return tuple(Fraction(c) for c in x)


def inner(t, x, y) -> Fraction:
    return -(Fraction(x[0]) * y[2] + Fraction(x[2]) * y[0]) + Fraction(x[1]) * y[1] / (2 * t)


def norm(t, x) -> Fraction:
    return inner(t, x, x)


def disc(t, a) -> int:
    """D(a) = 2t a^2 = -4t n m + l^2."""
    d = 2 * t * norm(t, a)
    if d.denominator != 1:
        raise ValueError(f"{a} is not in S_t*")
    return int(d)


def _lattice_gens(t):
    return [(1, 0, 0), (0, 2 * t, 0), (0, 0, 1)]


def _in_st(t, x):
    return all(Fraction(c).denominator == 1 for c in x) and Fraction(x[1]) % (2 * t) == 0


def is_root(t, a) -> bool:
    """a^2 > 0 and the reflection in a preserves S_t."""
    a2 = norm(t, a)
    if a2 <= 0:
        return False
    for g in _lattice_gens(t):
        k = 2 * inner(t, g, a) / a2
        if not _in_st(t, [k * c for c in a]):
            return False
    return True


def reflect(t, a, x) -> tuple:
    a2 = norm(t, a)
    if a2 <= 0:
        raise ValueError(f"{a} has non-positive square")
    k = 2 * inner(t, x, a) / a2
    return tuple(_simplify(Fraction(xc) - k * ac) for xc, ac in zip(x, a))


def _simplify(q):
    q = Fraction(q)
    return int(q) if q.denominator == 1 else q


def _clean(x):
    return tuple(_simplify(c) for c in x)


def _primitive(x):
    return math.gcd(*(int(c) for c in x)) == 1


# -- cones ----------------------------------------------------------------

def _dual(t, a):
    """B a, so that (x, a) = x . B a."""
    return (-Fraction(a[2]), Fraction(a[1]) / (2 * t), -Fraction(a[0]))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _det3(a, b, c):
    return sum(x * y for x, y in zip(a, _cross(b, c)))


def extreme_rays(t, P) -> list:
    """Extreme rays of {x : (x, a) <= 0 for a in P} as (ray, tight index set)."""
    out = {}
    for i, j in itertools.combinations(range(len(P)), 2):
        r = _cross(_dual(t, P[i]), _dual(t, P[j]))
        if not any(r):
            continue
        for s in (1, -1):
            rs = tuple(s * c for c in r)
            vals = [inner(t, rs, a) for a in P]
            if all(v <= 0 for v in vals):
                g = _ray_key(rs)
                tight = frozenset(k for k, v in enumerate(vals) if v == 0)
                out[g] = (rs, tight)
    return list(out.values())


def _ray_key(r):
    den = math.lcm(*(Fraction(c).denominator for c in r))
    ints = [int(c * den) for c in r]
    g = math.gcd(*ints)
    return tuple(c // g for c in ints)


def is_finite_volume(t, P) -> bool:
    """Every extreme ray of the chamber cone lies in the closed light cone."""
    if len(P) < 3 or _rank3(P) < 3:
        return False
    rays = extreme_rays(t, P)
    return bool(rays) and all(norm(t, r) <= 0 for r, _ in rays)


def _rank3(P):
    for a, b, c in itertools.combinations(P, 3):
        if _det3(_vec(a), _vec(b), _vec(c)):
            return 3
    return 2 if any(any(_cross(_vec(a), _vec(b))) for a, b in itertools.combinations(P, 2)) else 1


def essential(t, P) -> list:
    """Indices of the walls that carry an edge of the chamber."""
    used = set()
    for _, tight in extreme_rays(t, P):
        used |= tight
    return sorted(used)


def cyclic_order(t, P) -> list:
    """Indices of P in boundary order, starting at 0, or None if not a cycle."""
    adj = {i: set() for i in range(len(P))}
    for _, tight in extreme_rays(t, P):
        if len(tight) == 2:
            i, j = sorted(tight)
            adj[i].add(j)
            adj[j].add(i)
    if any(len(v) != 2 for v in adj.values()):
        return None
    order = [0]
    prev, cur = None, 0
    while True:
        nxt = min(x for x in adj[cur] if x != prev) if prev is None else next(
            x for x in adj[cur] if x != prev)
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == len(P) else None


# -- chambers -------------------------------------------------------------

@dataclass
class Chamber:
    t: int
    roots: list
    odd: list = field(default_factory=list)
    symmetry: list = field(default_factory=list)
    weyl: tuple | None = None
    infinite: bool = False
    seeds: list = field(default_factory=list)

    def gram_x2t(self):
        return [[int(2 * self.t * inner(self.t, a, b)) for b in self.roots] for a in self.roots]

    def cartan(self):
        return cartan_matrix(self.t, self.roots)

    def to_json(self):
        fmt = lambda v: [str(Fraction(c)) for c in v]
        out = {
            "t": self.t,
            "roots": [fmt(a) for a in self.roots],
            "odd": self.odd,
            "gram_x2t": self.gram_x2t(),
            "cartan": [[str(x) for x in row] for row in self.cartan()],
            "weyl": fmt(self.weyl) if self.weyl is not None else None,
            "angles": None if self.infinite else polygon_angles(self.t, self.roots),
            "symmetry": [fmt(a) for a in self.symmetry],
        }
        if self.infinite:
            out["seeds"] = [fmt(a) for a in self.seeds]
            out["window"] = True
        return out


def _candidates(t, v0, max_disc, H):
    """Roots a with (a, v0) < 0 and distance (a, v0)^2 / a^2 <= H."""
    v0 = _vec(v0)
    v2 = norm(t, v0)
    out = []
    kmax2 = Fraction(H) * max_disc / (2 * t)
    rmax2 = Fraction(max_disc, 2 * t) + kmax2 / (-v2)
    box = []
    for e in ((0, 0, 1), (1, 0, 0)):
        ev = inner(t, e, v0)
        ep2 = norm(t, e) - ev * ev / v2
        lam = math.sqrt(kmax2) / float(-v2)
        box.append(int(abs(lam * float(ev)) + math.sqrt(float(rmax2 * ep2)) + 2))
    N, M = box
    for n in range(-N, N + 1):
        for m in range(-M, M + 1):
            base = 4 * t * n * m
            lo, hi = base + 1, base + max_disc
            if hi < 0:
                continue
            l0 = math.isqrt(max(lo, 0))
            if l0 * l0 < lo:
                l0 += 1
            l1 = math.isqrt(hi)
            for la in range(l0, l1 + 1):
                for l in ({la, -la} if la else {0}):
                    a = (n, l, m)
                    k = inner(t, a, v0)
                    if k >= 0 or not _primitive(a):
                        continue
                    dist = k * k / norm(t, a)
                    if dist > H or not is_root(t, a):
                        continue
                    D = l * l - base
                    out.append((dist, D, l % (2 * t), n, a))
    out.sort()
    return out


def _stabilizer_roots(t, v0, max_disc, h):
    """Simple roots of the finite group fixing v0, negative on h."""
    v0 = _vec(v0)
    phi = []
    for a in _orthogonal_roots(t, v0, max_disc):
        s = inner(t, a, h)
        if s == 0:
            raise ValueError(f"perturbation {h} is not generic for root {a}")
        if s < 0:
            phi.append(a)
    simple = []
    for a in phi:
        others = [b for b in phi if b != a]
        if not any(_in_cone(a, b, c) for b, c in itertools.combinations(others, 2)):
            simple.append(a)
    return sorted(simple, key=lambda a: (disc(t, a), a[1] % (2 * t), a[0]))


def _in_cone(a, b, c):
    """a = x b + y c with x, y >= 0 (b, c independent)."""
    a, b, c = _vec(a), _vec(b), _vec(c)
    for i, j in itertools.combinations(range(3), 2):
        det = b[i] * c[j] - b[j] * c[i]
        if det:
            x = (a[i] * c[j] - a[j] * c[i]) / det
            y = (b[i] * a[j] - b[j] * a[i]) / det
            if all(x * bb + y * cc == aa for aa, bb, cc in zip(a, b, c)):
                return x >= 0 and y >= 0
            return False
    return False


def _orthogonal_roots(t, v0, max_disc):
    out = []
    v2 = norm(t, v0)
    rmax2 = Fraction(max_disc, 2 * t)
    bounds = []
    for e in ((0, 0, 1), (1, 0, 0)):
        ev = inner(t, e, v0)
        bounds.append(int(math.sqrt(float(rmax2 * (norm(t, e) - ev * ev / v2)))) + 2)
    N, M = bounds
    for n in range(-N, N + 1):
        for m in range(-M, M + 1):
            base = 4 * t * n * m
            for la in range(math.isqrt(max(base + 1, 0)), math.isqrt(max(base + max_disc, 0)) + 1):
                for l in {la, -la}:
                    a = (n, l, m)
                    D = l * l - base
                    if 1 <= D <= max_disc and inner(t, a, v0) == 0 and _primitive(a) and is_root(t, a):
                        out.append(a)
    return sorted(set(out))


def vinberg_chamber(t, max_disc=None, control=(1, 0, 1), perturb=(1, 1, -1),
                    max_height=4096) -> Chamber:
    """Fundamental chamber of the full reflection group of S_t.

    Roots are accepted in order of (distance from the controlling ray, D,
    l mod 2t, n); the search stops when the polygon has finite area.
    """
    max_disc = 4 * t if max_disc is None else max_disc
    if norm(t, control) >= 0:
        raise ValueError("controlling vector must have negative square")
    base = _stabilizer_roots(t, control, max_disc, _vec(perturb))
    H = Fraction(1)
    while H <= max_height:
        acc = list(base)
        for _, _, _, _, a in _candidates(t, control, max_disc, H):
            if all(inner(t, a, b) <= 0 for b in acc):
                acc.append(a)
                if is_finite_volume(t, acc):
                    return Chamber(t, [_clean(a) for a in acc])
        H *= 2
    raise SeriesError("NOT_TERMINATED",
                      f"chamber for t={t} did not close within distance {max_height}")


def chamber_orbit(t, generators, seeds, cap=200, window=False) -> Chamber:
    """Closure of the seed roots under the reflections in ``generators``.

    With ``window=True`` an unbounded orbit is returned as the breadth-first
    ball of ``cap`` elements (an infinite chamber); otherwise it raises
    ORBIT_UNBOUNDED.
    """
    for g in generators:
        if not is_root(t, g):
            raise ValueError(f"{g} is not a root of S_{t}")
    seen = [_clean(s) for s in seeds]
    known = set(seen)
    frontier = list(seen)
    infinite = False
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = reflect(t, g, x)
                if y not in known:
                    known.add(y)
                    seen.append(y)
                    nxt.append(y)
        frontier = nxt
        if len(seen) > cap:
            if not window:
                raise SeriesError("ORBIT_UNBOUNDED", f"orbit exceeds {cap} roots")
            infinite = True
            break
    ch = Chamber(t, seen, symmetry=[_clean(g) for g in generators], infinite=infinite,
                 seeds=[_clean(s) for s in seeds])
    if not infinite and len(seen) >= 3 and _rank3(seen) == 3:
        keep = essential(t, seen)
        ch.roots = [seen[i] for i in keep]
        order = cyclic_order(t, ch.roots)
        if order:
            ch.roots = [ch.roots[i] for i in order]
    return ch


# -- Weyl vector, Cartan data -------------------------------------------------

def _solve(rows, rhs):
    """Unique solution of an overdetermined rational system, or None."""
    k = len(rows[0])
    aug = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    r0 = 0
    for col in range(k):
        p = next((i for i in range(r0, len(aug)) if aug[i][col]), None)
        if p is None:
            return None
        aug[r0], aug[p] = aug[p], aug[r0]
        piv = aug[r0][col]
        aug[r0] = [x / piv for x in aug[r0]]
        for i in range(len(aug)):
            if i != r0 and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r0])]
        r0 += 1
    if any(r[-1] for r in aug[r0:]):
        return None
    return [aug[i][-1] for i in range(k)]


def weyl_vector(t, P):
    """The rho with (rho, a) = -a^2/2 for all a in P, or None."""
    rows = [_dual(t, a) for a in P]
    rhs = [-norm(t, a) / 2 for a in P]
    sol = _solve(rows, rhs)
    return None if sol is None else tuple(sol)


def cartan_matrix(t, P) -> list:
    return [[_simplify(2 * inner(t, a, b) / norm(t, a)) for b in P] for a in P]


def angle(aij, aji) -> str:
    p = Fraction(aij) * Fraction(aji)
    if p > 4:
        return "divergent"
    if p.denominator != 1 or int(p) not in ANGLE_BY_PRODUCT:
        raise ValueError(f"a_ij a_ji = {p} is not a Coxeter value")
    return ANGLE_BY_PRODUCT[int(p)]


def angles_of_matrix(A) -> list:
    k = len(A)
    return [angle(A[i][(i + 1) % k], A[(i + 1) % k][i]) for i in range(k)]


def angles(t, P) -> list:
    """Angles between cyclically adjacent walls, in the given order."""
    return angles_of_matrix(cartan_matrix(t, P))


def polygon_angles(t, P) -> list:
    """Angles at the vertices, walking the boundary from P[0]; falls back to
    the given order when the walls do not close up."""
    order = cyclic_order(t, P) or list(range(len(P)))
    return angles(t, [P[i] for i in order])


def weyl_orbit(t, P, x, height, odd=()) -> dict:
    """{w(x): eps(w)} over the Weyl group of P with n + m <= height.

    ``x`` must lie strictly inside the chamber.  The walk only goes up
    (s_a y = y + c a with c > 0), so every root needs n + m >= 0 for the
    height cut to be exhaustive.  Reflections in the ``odd`` roots have
    eps = +1, the others -1.
    """
    P = [_vec(a) for a in P]
    odd = {_vec(a) for a in odd}
    if any(a[0] + a[2] < 0 for a in P):
        raise SeriesError("BOX_TOO_SMALL", "a wall has n + m < 0; the height cut is not exhaustive")
    x = _vec(x)
    if any(inner(t, x, a) >= 0 for a in P):
        raise ValueError(f"{x} is not inside the chamber")
    out = {_clean(x): 1}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            sign = out[_clean(y)]
            for a in P:
                ip = inner(t, y, a)
                if ip >= 0:
                    continue
                z = tuple(yc - 2 * ip / norm(t, a) * ac for yc, ac in zip(y, a))
                if z[0] + z[2] > height:
                    continue
                key = _clean(z)
                if key not in out:
                    out[key] = sign if a in odd else -sign
                    nxt.append(z)
        frontier = nxt
    return out


def _symmetrizer(A):
    """Positive d with d_i a_ij = d_j a_ji, or None."""
    k = len(A)
    d = [None] * k
    for start in range(k):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(k):
                if (A[i][j] == 0) != (A[j][i] == 0):
                    return None
                if i == j or A[i][j] == 0:
                    continue
                v = d[i] * Fraction(A[i][j]) / Fraction(A[j][i])
                if v <= 0:
                    return None
                if d[j] is None:
                    d[j] = v
                    stack.append(j)
                elif d[j] != v:
                    return None
    return d


def inertia(S) -> tuple:
    """(positive, negative, zero) counts of a rational symmetric matrix."""
    M = [[Fraction(x) for x in row] for row in S]
    k = len(M)
    pos = neg = 0
    idx = list(range(k))
    while idx:
        p = next((i for i in idx if M[i][i]), None)
        if p is None:
            pair = next(((i, j) for i in idx for j in idx if i != j and M[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # replace e_i by e_i + e_j, making the diagonal 2 M_ij + M_jj != 0 or M_ij
            for r in range(k):
                M[i][r] += M[j][r]
            for r in range(k):
                M[r][i] += M[r][j]
            if not M[i][i]:
                for r in range(k):
                    M[i][r] -= 2 * M[j][r]
                for r in range(k):
                    M[r][i] -= 2 * M[r][j]
            p = i
        piv = M[p][p]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        idx.remove(p)
        for i in idx:
            f = M[i][p] / piv
            if f:
                for j in idx:
                    M[i][j] -= f * M[p][j]
        for i in idx:
            M[i][p] = M[p][i] = Fraction(0)
    return pos, neg, k - pos - neg


@dataclass
class CartanReport:
    symmetrizable: bool
    rank: int
    signature: tuple
    hyperbolic: bool
    weyl_exists: bool
    weyl_square: Fraction | None
    weyl_type: str | None
    angles: list
    ok: bool


def verify_cartan_rank3(A) -> CartanReport:
    """Rank-3 hyperbolic checks for a generalized Cartan matrix."""
    k = len(A)
    if any(len(r) != k for r in A) or any(A[i][i] != 2 for i in range(k)):
        raise ValueError("need a square matrix with 2 on the diagonal")
    if any(A[i][j] > 0 for i in range(k) for j in range(k) if i != j):
        raise ValueError("off-diagonal entries must be non-positive")
    d = _symmetrizer(A)
    if d is None:
        return CartanReport(False, 0, (0, 0, 0), False, False, None, None, [], False)
    S = [[d[i] * A[i][j] for j in range(k)] for i in range(k)]
    p, n, z = inertia(S)
    rank = p + n
    hyper = rank == 3 and (p, n) == (2, 1)
    sq, wtype, exists = None, None, False
    if hyper:
        basis = next(c for c in itertools.combinations(range(k), 3)
                     if inertia([[S[i][j] for j in c] for i in c])[2] == 0)
        G = [[S[i][j] for j in basis] for i in basis]
        # rho is fixed by its products y_j with the basis roots
        y = [-d[i] for i in basis]
        Ginv_y = _solve(G, y)
        exists = all(sum(S[kk][b] * c for b, c in zip(basis, Ginv_y)) == -d[kk] for kk in range(k))
        if exists:
            sq = sum(a * b for a, b in zip(y, Ginv_y))
            wtype = "elliptic" if sq < 0 else "parabolic" if sq == 0 else "hyperbolic"
    try:
        ang = angles_of_matrix(A)
    except ValueError:
        ang = []
    return CartanReport(True, rank, (p, n, z), hyper, exists, sq, wtype, ang, hyper)


# -- Lemma-type checks --------------------------------------------------------

def narrow_part_check(t, P):
    """Indices (i, j, k) of spanning roots with bounded mutual angles and a
    connected Gram graph, or None."""
    for trip in itertools.combinations(range(len(P)), 3):
        a = [_vec(P[i]) for i in trip]
        if not _det3(*a):
            continue
        edges = 0
        ok = True
        for x, y in itertools.combinations(a, 2):
            ip = inner(t, x, y)
            if 4 * ip * ip >= 100 ** 2 * norm(t, x) * norm(t, y):
                ok = False
                break
            edges += ip != 0
        if ok and edges >= 2:
            return trip
    return None


def _octuples(limit):
    """value -> list of strictly increasing positive 8-tuples with even sum."""
    out = {}

    def rec(prefix, start, total):
        if len(prefix) == 8:
            if sum(prefix) % 2 == 0:
                out.setdefault(total, []).append(tuple(prefix))
            return
        left = 8 - len(prefix)
        y = start
        while total + sum((y + i) ** 2 for i in range(left)) <= limit:
            rec(prefix + [y], y + 1, total + y * y)
            y += 1

    rec([], 1, 0)
    return out


def _primitive_in_sublattice(vec):
    x, u, v = vec[0], vec[1:9], vec[9:]
    g = math.gcd(*vec)
    for k in range(2, g + 1):
        if g % k == 0 and (sum(u) // k) % 2 == 0 and (sum(v) // k) % 2 == 0:
            return False
    return True


def t_n_non2reflective(n_bound) -> list:
    """All n <= n_bound with a witness 2n = 4x^2 - u - v, x^2 > 9(u + v)/4.

    Returns (n, x, u-tuple, v-tuple) with the smallest x for each n.
    """
    # 2n = 4x^2 - s > 8s, so s < n_bound / 4
    ys = _octuples(max(0, n_bound // 4))
    vals = sorted(ys)
    found = {}
    # n > 16 x^2 / 9 since 0 < s < 4x^2/9
    for x in range(1, math.isqrt(9 * n_bound // 16) + 2):
        for u in vals:
            if 9 * (u + vals[0]) >= 4 * x * x:
                break
            for v in vals:
                s = u + v
                if 9 * s >= 4 * x * x:
                    break
                n = (4 * x * x - s) // 2
                if n > n_bound or n in found:
                    continue
                w = next(((a, b) for a in ys[u] for b in ys[v]
                          if _primitive_in_sublattice((x,) + a + b)), None)
                if w:
                    found[n] = (n, x, w[0], w[1])
    return [found[n] for n in sorted(found)]
