"""Exact algebra of pencils of degree-k binary forms on Sym^2(P^1).

Conventions.  A binary form of degree bound n is a coefficient vector
(c_0, ..., c_n) for sum_i c_i x0^(n-i) x1^i; the affine picture sets x0 = 1,
z = x1, so c is also the affine coefficient list and a drop of the top
coefficients records roots at infinity.  Sym^2(P^1) is the projective plane
with coordinates (e0 : e1 : e2), the unordered pair {x, y} sitting at
(1 : x+y : x*y), read off the monic quadratic
e0 z^2 - e1 z + e2 vanishing on it.  The diagonal is the smooth conic
e1^2 = 4 e0 e2, parametrized by (x0^2 : 2 x0 x1 : x1^2).

A pencil spanned by independent forms f, g cuts out the plane curve of
degree k-1 whose points are the pairs {x, y} contained in a member of the
pencil; concretely the symmetric form

    B(x, y) = (f(x) g(y) - f(y) g(x)) / (x - y)

rewritten in the elementary-symmetric coordinates.  Restricting that curve
to the diagonal recovers the Wronskian f g' - f' g (up to a nonzero scalar),
whose 2(k-1) projective roots are the ramification points of the degree-k
map; all of this is verified exactly, with squarefreeness decided by gcd
computations and degree-drop bookkeeping, never by root finding.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation

__all__ = [
    "BinaryForm",
    "Pencil",
    "SymPlaneCurve",
    "INFINITY",
    "DIAGONAL",
    "DIAGONAL_POINT",
    "wedge_curve",
    "wronskian",
    "diagonal_restriction",
    "simple_ramification",
    "contains_divisor",
    "conic_intersection",
    "divisor_point",
    "is_squarefree",
    "distinct_root_count",
    "proportional",
    "random_pencil",
    "random_coprime_pencil",
    "random_smooth_conic",
    "verification_suite",
]


class _Infinity:
    """Marker for the point at infinity of P^1."""

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

_Q = Fraction
_ZERO = _Q(0)
_ONE = _Q(1)


# -- dense univariate helpers over Fraction (index = power, no trailing zeros)

def _trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _add(a, b):
    n = max(len(a), len(b))
    return _trim([
        (a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO)
        for i in range(n)
    ])


def _scale(a, c):
    if c == 0:
        return []
    return [x * c for x in a]


def _mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _divmod(a, b):
    """Exact polynomial division with remainder over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(rem) >= len(b):
        c = rem[-1] * inv_lead
        d = len(rem) - len(b)
        quot[d] = c
        for i, y in enumerate(b):
            rem[d + i] -= c * y
        rem = _trim(rem)
        if not rem:
            break
    return _trim(quot), rem


def _gcd(a, b):
    """Monic gcd over the rationals."""
    a, b = list(a), list(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def _deriv(a):
    return _trim([i * a[i] for i in range(1, len(a))])


@dataclass(frozen=True)
class BinaryForm:
    """A binary form at a declared degree bound.

    coeffs[i] multiplies x0^(bound-i) x1^i; leading (high-i) coefficients may
    vanish only in the sense that low-i ones do; a zero tail means roots at
    infinity with multiplicity bound - affine_degree.
    """

    bound: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, bound: int, coeffs):
        if bound < 0:
            raise ValueError(f"need bound >= 0, got {bound}")
        cs = tuple(_Q(c) for c in coeffs)
        if len(cs) != bound + 1:
            raise ValueError(
                f"degree bound {bound} needs {bound + 1} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_affine(cls, coeffs, bound: int) -> "BinaryForm":
        """Homogenize an affine coefficient list at the given bound."""
        cs = list(coeffs)
        if len(cs) > bound + 1:
            raise ValueError(f"affine degree {len(cs) - 1} exceeds bound {bound}")
        cs += [_ZERO] * (bound + 1 - len(cs))
        return cls(bound, cs)

    @classmethod
    def zero(cls, bound: int) -> "BinaryForm":
        return cls(bound, [_ZERO] * (bound + 1))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def affine(self) -> list[Fraction]:
        """Affine coefficient list (trailing zeros stripped)."""
        return _trim(list(self.coeffs))

    @property
    def affine_degree(self) -> int:
        """Degree of the affine part; -1 for the zero form."""
        return len(self.affine) - 1

    @property
    def infinity_multiplicity(self) -> int:
        """Root multiplicity at (0:1); undefined (error) for the zero form."""
        if self.is_zero:
            raise ValueError("the zero form has no root multiplicities")
        return self.bound - self.affine_degree

    def eval_proj(self, x0, x1) -> Fraction:
        """Evaluate at the projective point (x0 : x1), exactly."""
        x0, x1 = _Q(x0), _Q(x1)
        acc = _ZERO
        p0 = _ONE
        pows1 = [_ONE]
        for _ in range(self.bound):
            pows1.append(pows1[-1] * x1)
        for i in range(self.bound, -1, -1):
            c = self.coeffs[i]
            if c:
                acc += c * p0 * pows1[i]
            p0 *= x0
        return acc

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        out = [_ZERO] * (self.bound + other.bound + 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return BinaryForm(self.bound + other.bound, out)

    def power(self, n: int) -> "BinaryForm":
        out = BinaryForm(0, [_ONE])
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, a, b, c, d) -> "BinaryForm":
        """Apply (x0, x1) -> (a x0 + b x1, c x0 + d x1); needs ad - bc != 0."""
        a, b, c, d = _Q(a), _Q(b), _Q(c), _Q(d)
        if a * d - b * c == 0:
            raise ValueError("substitution matrix is singular")
        u = BinaryForm(1, (a, b))
        v = BinaryForm(1, (c, d))
        out = BinaryForm.zero(self.bound)
        for i, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            term = u.power(self.bound - i) * v.power(i)
            out = BinaryForm(
                self.bound,
                [x + coeff * y for x, y in zip(out.coeffs, term.coeffs)],
            )
        return out

    def to_payload(self) -> dict:
        """Serialize as numerator/denominator string pairs at the bound."""
        return {
            "bound": self.bound,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "BinaryForm":
        coeffs = [Fraction(int(n), int(d)) for n, d in payload["coeffs"]]
        return cls(payload["bound"], coeffs)


def proportional(u: BinaryForm, v: BinaryForm) -> bool:
    """True iff u = c*v for a nonzero scalar c (zero ~ zero only)."""
    if u.bound != v.bound:
        raise ValueError("cannot compare forms at different bounds")
    if u.is_zero or v.is_zero:
        return u.is_zero and v.is_zero
    n = u.bound
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            if u.coeffs[i] * v.coeffs[j] != u.coeffs[j] * v.coeffs[i]:
                return False
    return True


def is_squarefree(form: BinaryForm) -> bool:
    """Squarefree as a projective divisor, infinity multiplicity included."""
    if form.is_zero:
        return False
    if form.infinity_multiplicity >= 2:
        return False
    a = form.affine
    if len(a) <= 1:
        return True
    return len(_gcd(a, _deriv(a))) <= 1


def distinct_root_count(form: BinaryForm) -> int:
    """Number of distinct projective roots (degree of the squarefree part)."""
    if form.is_zero:
        raise ValueError("the zero form has no root divisor")
    a = form.affine
    at_infinity = 1 if form.infinity_multiplicity >= 1 else 0
    if len(a) <= 1:
        return at_infinity
    g = _gcd(a, _deriv(a))
    return (len(a) - 1) - (len(g) - 1) + at_infinity


@dataclass(frozen=True)
class Pencil:
    """Two independent binary forms of the same degree bound (a g^1_k)."""

    f: BinaryForm
    g: BinaryForm

    def __post_init__(self):
        if self.f.bound != self.g.bound:
            raise ValueError("pencil members must share the degree bound")
        if self.f.bound < 1:
            raise ValueError("need degree bound >= 1")
        if proportional(self.f, self.g):
            raise ValueError("degenerate pencil: the two forms are proportional")

    @property
    def k(self) -> int:
        return self.f.bound

    def substitute(self, a, b, c, d) -> "Pencil":
        return Pencil(self.f.substitute(a, b, c, d), self.g.substitute(a, b, c, d))


@dataclass(frozen=True)
class SymPlaneCurve:
    """A plane curve of declared degree in the coordinates (e0 : e1 : e2).

    Coefficients are stored sparsely as {(a, b, c): value} with a+b+c equal
    to the degree; zero entries are dropped.
    """

    degree: int
    coeffs: tuple[tuple[tuple[int, int, int], Fraction], ...]

    def __init__(self, degree: int, coeffs):
        if degree < 0:
            raise ValueError(f"need degree >= 0, got {degree}")
        if isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            items = tuple(coeffs)
        store: dict[tuple[int, int, int], Fraction] = {}
        for expo, value in items:
            a, b, c = expo
            if a < 0 or b < 0 or c < 0 or a + b + c != degree:
                raise ValueError(f"exponent {expo} is not of total degree {degree}")
            v = _Q(value)
            if v:
                store[(a, b, c)] = store.get((a, b, c), _ZERO) + v
        object.__setattr__(self, "degree", degree)
        object.__setattr__(
            self, "coeffs", tuple(sorted((e, v) for e, v in store.items() if v))
        )

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, a: int, b: int, c: int) -> Fraction:
        return dict(self.coeffs).get((a, b, c), _ZERO)

    def evaluate(self, e0, e1, e2) -> Fraction:
        e0, e1, e2 = _Q(e0), _Q(e1), _Q(e2)
        acc = _ZERO
        for (a, b, c), v in self.coeffs:
            acc += v * e0**a * e1**b * e2**c
        return acc

    def pullback(self, f0: BinaryForm, f1: BinaryForm, f2: BinaryForm) -> BinaryForm:
        """Substitute binary forms of a common bound for (e0, e1, e2)."""
        if not f0.bound == f1.bound == f2.bound:
            raise ValueError("pullback forms must share a degree bound")
        pows = []
        for form in (f0, f1, f2):
            table = [BinaryForm(0, (_ONE,))]
            for _ in range(self.degree):
                table.append(table[-1] * form)
            pows.append(table)
        acc = [_ZERO] * (self.degree * f0.bound + 1)
        for (a, b, c), v in self.coeffs:
            term = pows[0][a] * pows[1][b] * pows[2][c]
            for i, x in enumerate(term.coeffs):
                if x:
                    acc[i] += v * x
        return BinaryForm(self.degree * f0.bound, acc)


def _symmetric_to_ternary(sym: dict[tuple[int, int], Fraction], degree: int) -> SymPlaneCurve:
    """Rewrite a symmetric affine polynomial in (x, y) as a ternary form.

    Repeatedly strips the lexicographically largest monomial x^i y^j (i >= j
    by symmetry), emitting e0^(d-i) e1^(i-j) e2^j and subtracting
    (x+y)^(i-j) (xy)^j; termination is by strict lex descent.
    """
    work = {e: v for e, v in sym.items() if v}
    out: dict[tuple[int, int, int], Fraction] = {}
    binom = [[1]]
    while work:
        i, j = max(work)
        if i < j or work.get((j, i)) != work[(i, j)]:
            raise InvariantViolation("symmetric reduction fed an asymmetric input")
        if i > degree:
            raise InvariantViolation(
                f"monomial degree {i} exceeds declared form degree {degree}"
            )
        c = work[(i, j)]
        out[(degree - i, i - j, j)] = c
        while len(binom) <= i - j:
            prev = binom[-1]
            binom.append(
                [1] + [prev[u] + prev[u + 1] for u in range(len(prev) - 1)] + [1]
            )
        row = binom[i - j]
        for u in range(i - j + 1):
            key = (u + j, i - u)
            work[key] = work.get(key, _ZERO) - c * row[u]
            if work[key] == 0:
                del work[key]
    return SymPlaneCurve(degree, out)


def wedge_curve(pencil: Pencil) -> SymPlaneCurve:
    """The degree k-1 plane curve of pairs lying in a member of the pencil.

    Expands B(x, y) = (f(x) g(y) - f(y) g(x)) / (x - y) (division is exact)
    and rewrites it in elementary-symmetric coordinates.
    """
    k = pencil.k
    a, b = pencil.f.coeffs, pencil.g.coeffs
    sym: dict[tuple[int, int], Fraction] = {}
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            w = a[i] * b[j] - a[j] * b[i]
            if w == 0:
                continue
            # (x^i y^j - x^j y^i)/(x - y) = -sum_{u+v=j-i-1} x^(i+u) y^(i+v)
            for u in range(j - i):
                key = (i + u, j - 1 - u)
                sym[key] = sym.get(key, _ZERO) - w
    curve = _symmetric_to_ternary(sym, k - 1)
    if curve.is_zero:
        raise InvariantViolation("wedge curve vanished for a valid pencil")
    return curve


def wronskian(pencil: Pencil) -> BinaryForm:
    """f g' - f' g at degree bound 2k-2; roots are the ramification points."""
    f, g = pencil.f.affine, pencil.g.affine
    w = _add(_mul(f, _deriv(g)), _scale(_mul(_deriv(f), g), _Q(-1)))
    return BinaryForm.from_affine(w, 2 * pencil.k - 2)


def diagonal_restriction(curve: SymPlaneCurve, k: int) -> BinaryForm:
    """Restrict to the diagonal via (e0, e1, e2) = (x0^2, 2 x0 x1, x1^2)."""
    if curve.degree != k - 1:
        raise ValueError(
            f"curve has degree {curve.degree}, expected k-1 = {k - 1}"
        )
    e0 = BinaryForm(2, (_ONE, _ZERO, _ZERO))
    e1 = BinaryForm(2, (_ZERO, _Q(2), _ZERO))
    e2 = BinaryForm(2, (_ZERO, _ZERO, _ONE))
    return curve.pullback(e0, e1, e2)


def simple_ramification(pencil: Pencil) -> bool:
    """True iff the ramification divisor is reduced (Wronskian squarefree)."""
    return is_squarefree(wronskian(pencil))


def _as_point(x) -> tuple[Fraction, Fraction]:
    if x is INFINITY:
        return _ZERO, _ONE
    return _ONE, _Q(x)


def divisor_point(x, y) -> tuple[Fraction, Fraction, Fraction]:
    """Sym^2 coordinates of the unordered pair {x, y}; INFINITY allowed."""
    a0, a1 = _as_point(x)
    b0, b1 = _as_point(y)
    return a0 * b0, a0 * b1 + a1 * b0, a1 * b1


def contains_divisor(pencil: Pencil, x, y) -> bool:
    """Determinant membership oracle: does some member vanish on {x, y}?

    Evaluates det [[f(x), g(x)], [f(y), g(y)]] projectively; each argument is
    a rational number or INFINITY.  On the diagonal x == y the determinant
    vanishes identically, so the oracle is informative only for x != y.
    """
    p0, p1 = _as_point(x)
    q0, q1 = _as_point(y)
    det = pencil.f.eval_proj(p0, p1) * pencil.g.eval_proj(q0, q1) - pencil.g.eval_proj(
        p0, p1
    ) * pencil.f.eval_proj(q0, q1)
    return det == 0


def _conic_matrix(conic: SymPlaneCurve) -> list[list[Fraction]]:
    if conic.degree != 2:
        raise ValueError(f"need a conic, got degree {conic.degree}")
    c = conic.coefficient
    return [
        [c(2, 0, 0), c(1, 1, 0) / 2, c(1, 0, 1) / 2],
        [c(1, 1, 0) / 2, c(0, 2, 0), c(0, 1, 1) / 2],
        [c(1, 0, 1) / 2, c(0, 1, 1) / 2, c(0, 0, 2)],
    ]


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


#: the diagonal conic e1^2 - 4 e0 e2 and a rational point on it
DIAGONAL = SymPlaneCurve(2, {(0, 2, 0): 1, (1, 0, 1): -4})
DIAGONAL_POINT = (_ONE, _ZERO, _ZERO)


def _conic_parametrization(
    conic: SymPlaneCurve, point
) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
    """Degree-2 parametrization of a smooth conic by lines through `point`.

    The line through `point` in direction V = s*v1 + t*v2 meets the conic
    again at Q(V) * point - 2 B(point, V) * V, quadratic in (s, t); v1, v2
    span a complement of `point`, so the map is everywhere defined and hits
    every point of the conic exactly once.
    """
    m = _conic_matrix(conic)
    if _det3(m) == 0:
        raise ValueError("conic is singular")
    pt = [_Q(v) for v in point]
    if not any(pt):
        raise ValueError("point must be a nonzero projective triple")
    if conic.evaluate(*pt) != 0:
        raise ValueError(f"point {point} does not lie on the conic")

    def bil(u, v):
        return sum(u[i] * m[i][j] * v[j] for i in range(3) for j in range(3))

    pivot = next(i for i in range(3) if pt[i] != 0)
    basis = [[_ONE if i == j else _ZERO for j in range(3)] for i in range(3)]
    v1, v2 = (basis[i] for i in range(3) if i != pivot)
    qv = BinaryForm(2, (bil(v1, v1), 2 * bil(v1, v2), bil(v2, v2)))
    bpv = BinaryForm(1, (bil(pt, v1), bil(pt, v2)))
    coords = []
    for i in range(3):
        vi = BinaryForm(1, (v1[i], v2[i]))
        first = BinaryForm(2, tuple(pt[i] * c for c in qv.coeffs))
        second = bpv * vi
        coords.append(
            BinaryForm(2, [x - 2 * y for x, y in zip(first.coeffs, second.coeffs)])
        )
    return tuple(coords)


def conic_intersection(
    curve: SymPlaneCurve, conic: SymPlaneCurve, point
) -> tuple[int, int]:
    """Intersect a plane curve with a smooth conic through a rational point.

    Parametrizes the conic by lines through `point` (which must lie on it),
    pulls the curve back to a binary form of degree 2*deg(curve) and returns
    (total, distinct) intersection counts: total by Bezout, distinct as the
    degree of the squarefree part.  A curve containing the conic (identically
    vanishing pullback) is an error.
    """
    pull = curve.pullback(*_conic_parametrization(conic, point))
    if pull.is_zero:
        raise ValueError("curve contains the conic")
    total = 2 * curve.degree
    if pull.bound != total:
        raise InvariantViolation("pullback bound disagrees with Bezout degree")
    return total, distinct_root_count(pull)


# -- seeded sampling and the randomized verification suite


def _random_form(k: int, rng: random.Random, lo: int = -9, hi: int = 9) -> BinaryForm:
    while True:
        cs = [Fraction(rng.randint(lo, hi)) for _ in range(k + 1)]
        if any(cs):
            return BinaryForm(k, cs)


def random_pencil(k: int, rng: random.Random) -> Pencil:
    """A random pencil with small integer coefficients."""
    while True:
        f, g = _random_form(k, rng), _random_form(k, rng)
        if not proportional(f, g):
            return Pencil(f, g)


def _forms_coprime(f: BinaryForm, g: BinaryForm) -> bool:
    if f.affine_degree < f.bound and g.affine_degree < g.bound:
        return False  # common root at infinity
    return len(_gcd(f.affine, g.affine)) <= 1


def random_coprime_pencil(k: int, rng: random.Random) -> Pencil:
    """A random pencil whose members share no projective root."""
    while True:
        pencil = random_pencil(k, rng)
        if _forms_coprime(pencil.f, pencil.g):
            return pencil


_DIAGONAL_MATRIX = ((0, 0, -2), (0, 1, 0), (-2, 0, 0))  # e1^2 - 4 e0 e2


def _adjugate3(a):
    def minor(r, s):
        rows = [i for i in range(3) if i != r]
        cols = [j for j in range(3) if j != s]
        return (
            a[rows[0]][cols[0]] * a[rows[1]][cols[1]]
            - a[rows[0]][cols[1]] * a[rows[1]][cols[0]]
        )

    return [[(-1) ** (r + s) * minor(s, r) for s in range(3)] for r in range(3)]


def random_smooth_conic(
    rng: random.Random,
) -> tuple[SymPlaneCurve, tuple[Fraction, Fraction, Fraction]]:
    """A random smooth conic together with a rational point on it.

    Produced as a random projective image of the diagonal conic, so the point
    (the image of (1 : 0 : 0)) lies on it by construction.
    """
    while True:
        a = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        det = _det3(a)
        if det != 0:
            break
    adj = _adjugate3(a)
    m0 = _DIAGONAL_MATRIX
    # matrix of the image conic, up to scale: adj(A)^T M0 adj(A)
    mt = [
        [
            sum(adj[r][i] * m0[r][s] * adj[s][j] for r in range(3) for s in range(3))
            for j in range(3)
        ]
        for i in range(3)
    ]
    conic = SymPlaneCurve(
        2,
        {
            (2, 0, 0): mt[0][0],
            (0, 2, 0): mt[1][1],
            (0, 0, 2): mt[2][2],
            (1, 1, 0): 2 * mt[0][1],
            (1, 0, 1): 2 * mt[0][2],
            (0, 1, 1): 2 * mt[1][2],
        },
    )
    point = tuple(_Q(a[i][0]) for i in range(3))
    return conic, point


def _int_coeffs(coeffs) -> list[int]:
    """Integer coefficient list; requires every denominator to be 1."""
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise InvariantViolation("expected integer coefficients in fast path")
        out.append(c.numerator)
    return out


def _ieval(cs: list[int], x0: int, x1: int) -> int:
    """Homogeneous Horner evaluation of an integer binary form."""
    acc = cs[-1]
    x0p = 1
    for i in range(len(cs) - 2, -1, -1):
        x0p *= x0
        acc = acc * x1 + cs[i] * x0p
    return acc


def verification_suite(
    k: int,
    samples: int = 200,
    seed: int = 0,
    membership_points: int = 100,
) -> dict:
    """Run the randomized pencil checks at degree k and report counts.

    Per sampled coprime pencil: the wedge curve must be nonzero of exact
    total degree k-1; its diagonal restriction must be proportional to the
    Wronskian; the determinant oracle must agree with curve evaluation at
    `membership_points` random distinct pairs; the pullback to a random
    smooth conic must have Bezout total 2(k-1), with the distinct-point count
    recorded (transversality statistic) and every non-transversal case
    re-checked to be genuinely non-squarefree.  Exact identity failures are
    collected in `failures`; only the transversality rate is statistical.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    rng = random.Random(f"k3gonal:{seed}:{k}")
    failures: list[str] = []
    transversal = 0
    for index in range(samples):
        pencil = random_coprime_pencil(k, rng)
        curve = wedge_curve(pencil)
        if curve.degree != k - 1 or not any(a == 0 for (a, _, _), _ in curve.coeffs):
            failures.append(f"sample {index}: wedge degree law")
        diag = diagonal_restriction(curve, k)
        if not proportional(diag, wronskian(pencil)):
            failures.append(f"sample {index}: diagonal/Wronskian identity")
        # membership at random rational pairs x = nx/dx, y = ny/dy; clearing
        # the (positive) denominators keeps both zero-tests exact in integers
        fa = _int_coeffs(pencil.f.coeffs)
        ga = _int_coeffs(pencil.g.coeffs)
        tvals = _int_coeffs(v for _, v in curve.coeffs)
        tmon = [(e, v) for (e, _), v in zip(curve.coeffs, tvals)]
        for _ in range(membership_points):
            nx, dx = rng.randint(-12, 12), rng.randint(1, 4)
            ny, dy = rng.randint(-12, 12), rng.randint(1, 4)
            while ny * dx == nx * dy:
                ny, dy = rng.randint(-12, 12), rng.randint(1, 4)
            det = _ieval(fa, dx, nx) * _ieval(ga, dy, ny) - _ieval(ga, dx, nx) * _ieval(
                fa, dy, ny
            )
            e0, e1, e2 = dx * dy, nx * dy + ny * dx, nx * ny
            on_curve = (
                sum(v * e0**a * e1**b * e2**c for (a, b, c), v in tmon) == 0
            )
            if on_curve != (det == 0):
                x, y = Fraction(nx, dx), Fraction(ny, dy)
                failures.append(f"sample {index}: membership oracle at ({x}, {y})")
                break
        conic, point = random_smooth_conic(rng)
        total, distinct = conic_intersection(curve, conic, point)
        if total != 2 * (k - 1):
            failures.append(f"sample {index}: Bezout total {total}")
        if distinct == total:
            transversal += 1
        else:
            pull = curve.pullback(*_conic_parametrization(conic, point))
            if is_squarefree(pull):
                failures.append(
                    f"sample {index}: non-transversal report with squarefree pullback"
                )
    return {
        "k": k,
        "samples": samples,
        "seed": seed,
        "membership_points": membership_points,
        "failures": failures,
        "transversal": transversal,
        "transversal_rate": Fraction(transversal, samples) if samples else _ONE,
    }
