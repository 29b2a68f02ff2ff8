"""Beauville-Bogomolov arithmetic on the Hilbert scheme of k points.

Curve classes live in the rank-two lattice spanned by the polarization H
(with H^2 = 2p-2) and the exceptional fiber class r_k; divisor classes in the
span of H and the half-exceptional divisor e_k.  The form and pairing data:

    q(e_k) = -2(k-1),     q(r_k) = -1/(2(k-1)),     e_k . r_k = -1,
    q(aH - y r_k) = a^2 (2p-2) - y^2 / (2(k-1)),
    q(aH - c e_k) = a^2 (2p-2) - 2(k-1) c^2,
    (aH - c e_k) . (a'H - y r_k) = a a' (2p-2) - c y.

A gonality case (p, k, delta) contributes the curve class
H - (g+k-1) r_k with g = p - delta; at delta = delta0 this is the *optimal*
class H - ((m+1)(k-1) + floor(p/(m+1))) r_k, the effective class nearest the
cone boundary, and its self-intersection has the two closed forms

    q = 2(p-1) - (g+k-1)^2 / (2(k-1)) = 2(rho-1) - beta^2 / (2(k-1)),

bounded below by -(k+3)/2 with equality exactly when p = s(s+1)(k-1) at the
minimal delta.  Every such identity is computed both ways and cross-checked
at runtime; disagreement raises InvariantViolation.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .exactmath import exact_sqrt, floor_div
from .gonality import GonalityCase, decompose, delta0

__all__ = [
    "CurveClass",
    "DivisorClass",
    "q_curve",
    "q_divisor",
    "pairing",
    "gonality_class",
    "optimal_class",
    "q_case",
    "q_optimal_form",
    "tau",
    "nef_range_contains",
    "ample_range_contains",
    "MinimalQClass",
    "minimal_q_family",
    "IsotropicClass",
    "isotropic_case",
    "LagrangianReport",
    "lagrangian_report",
    "RayReport",
    "extremal_ray_status",
    "genus_for_invariants",
    "attained_q_values",
    "HTConeReport",
    "ht_violation_check",
    "rat_str",
]


def rat_str(q: Fraction | int) -> str:
    """num/den rendering used in JSON and CSV output; integers stay bare."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _check_pk(p: int, k: int) -> None:
    if p < 2:
        raise ValueError(f"need p >= 2, got p={p}")
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")


@dataclass(frozen=True)
class CurveClass:
    """The 1-cycle class a*H - y*r_k on the Hilbert scheme of k points.

    Gonality constructors always produce a = 1, y = g+k-1 >= 0; the fiber
    class r_k itself is (a, y) = (0, -1), see :meth:`fiber`.
    """

    p: int
    k: int
    a: int
    y: int

    def __post_init__(self):
        _check_pk(self.p, self.k)

    @classmethod
    def fiber(cls, p: int, k: int) -> "CurveClass":
        """The Hilbert-Chow fiber class r_k (so a = 0, y = -1)."""
        return cls(p, k, 0, -1)

    @property
    def q(self) -> Fraction:
        return self.a * self.a * (2 * self.p - 2) - Fraction(
            self.y * self.y, 2 * (self.k - 1)
        )

    def display(self) -> str:
        if self.a == 0:
            if self.y == -1:
                return "r_k"
            if self.y == 1:
                return "-r_k"
            return f"{-self.y}*r_k"
        h = "H" if self.a == 1 else f"{self.a}*H"
        if self.y == 0:
            return h
        sign, y = ("-", self.y) if self.y >= 0 else ("+", -self.y)
        return f"{h} {sign} {y}*r_k"

    def to_payload(self) -> dict:
        return {"a": self.a, "y": self.y}


@dataclass(frozen=True)
class DivisorClass:
    """The divisor class a*H - c*e_k; rational c allowed (Q-divisors)."""

    p: int
    k: int
    a: int
    c: Fraction

    def __init__(self, p: int, k: int, a: int, c):
        _check_pk(p, k)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", Fraction(c))

    @property
    def q(self) -> Fraction:
        return self.a * self.a * (2 * self.p - 2) - 2 * (self.k - 1) * self.c * self.c


def q_curve(cls: CurveClass) -> Fraction:
    """Beauville-Bogomolov square a^2 (2p-2) - y^2/(2(k-1))."""
    return cls.q


def q_divisor(cls: DivisorClass) -> Fraction:
    """Beauville-Bogomolov square a^2 (2p-2) - 2(k-1) c^2."""
    return cls.q


def pairing(d: DivisorClass, r: CurveClass) -> Fraction:
    """Intersection number (aH - c e_k).(a'H - y r_k) = a a'(2p-2) - c y."""
    if (d.p, d.k) != (r.p, r.k):
        raise ValueError(
            f"mismatched ambient spaces: divisor on (p={d.p}, k={d.k}), "
            f"curve on (p={r.p}, k={r.k})"
        )
    return d.a * r.a * (2 * d.p - 2) - d.c * r.y


def gonality_class(p: int, k: int, delta: int) -> CurveClass:
    """The class H - (g+k-1) r_k of the rational curve from a g^1_k.

    Requires (p, k, delta) admissible; the locus is empty otherwise.
    """
    case = GonalityCase(p, k, delta)
    if not case.admissible:
        raise ValueError(f"(p={p}, k={k}, delta={delta}) is inadmissible")
    return CurveClass(p, k, 1, case.g + k - 1)


def optimal_class(p: int, k: int) -> CurveClass:
    """The gonality class at minimal delta, in closed form.

    y = (m+1)(k-1) + floor(p/(m+1)) above the delta0 = 0 regime, y = p+k-1
    inside it; cross-checked against gonality_class(p, k, delta0(p, k)).
    """
    _check_pk(p, k)
    if p <= 2 * (k - 1):
        y = p + k - 1
    else:
        m = decompose(p, k).m
        y = (m + 1) * (k - 1) + floor_div(p, m + 1)
    cls = CurveClass(p, k, 1, y)
    direct = gonality_class(p, k, delta0(p, k))
    if cls != direct:
        raise InvariantViolation(
            f"optimal class closed form {cls} != gonality class at delta0 {direct}"
        )
    return cls


def q_case(p: int, k: int, delta: int) -> Fraction:
    """q of the gonality class, by both closed forms, bound-checked.

    Evaluates 2(p-1) - (g+k-1)^2/(2(k-1)) and 2(rho-1) - beta^2/(2(k-1)),
    requires them equal, and asserts the lower bound -(k+3)/2.
    """
    case = GonalityCase(p, k, delta)
    if not case.admissible:
        raise ValueError(f"(p={p}, k={k}, delta={delta}) is inadmissible")
    g = case.g
    first = 2 * (p - 1) - Fraction((g + k - 1) ** 2, 2 * (k - 1))
    second = 2 * (case.rho - 1) - Fraction(case.beta**2, 2 * (k - 1))
    if first != second:
        raise InvariantViolation(
            f"q closed forms disagree: {first} != {second} at "
            f"(p={p}, k={k}, delta={delta})"
        )
    if first < Fraction(-(k + 3), 2):
        raise InvariantViolation(
            f"q={first} below -(k+3)/2 on an admissible case "
            f"(p={p}, k={k}, delta={delta})"
        )
    return first


def q_optimal_form(p: int, k: int) -> Fraction:
    """q at minimal delta straight from the decomposition: 2(lam-1) - (k-1-t)^2/(2(k-1))."""
    _check_pk(p, k)
    if p <= 2 * (k - 1):
        raise ValueError(
            f"p={p} <= 2(k-1)={2 * (k - 1)}: no decomposition; use q_case at delta=0"
        )
    dec = decompose(p, k)
    value = 2 * (dec.lam - 1) - Fraction((k - 1 - dec.t) ** 2, 2 * (k - 1))
    direct = q_case(p, k, delta0(p, k))
    if value != direct:
        raise InvariantViolation(
            f"optimal-form q {value} != q_case at delta0 {direct} for (p={p}, k={k})"
        )
    return value


def tau(p: int, k: int) -> Fraction:
    """Cone bound 2(p-1) / y_opt: H - t*e_k can be ample only for 0 < t < tau
    and nef only for 0 <= t <= tau."""
    _check_pk(p, k)
    return Fraction(2 * (p - 1), optimal_class(p, k).y)


def ample_range_contains(p: int, k: int, t) -> bool:
    """Necessary condition for H - t*e_k ample: 0 < t < tau(p, k)."""
    t = Fraction(t)
    return 0 < t < tau(p, k)


def nef_range_contains(p: int, k: int, t) -> bool:
    """Necessary condition for H - t*e_k nef: 0 <= t <= tau(p, k)."""
    t = Fraction(t)
    return 0 <= t <= tau(p, k)


@dataclass(frozen=True)
class MinimalQClass:
    """Witness for the minimal self-intersection -(k+3)/2."""

    s: int
    delta: int
    curve: CurveClass


def minimal_q_family(p: int, k: int) -> MinimalQClass | None:
    """Detect p = s(s+1)(k-1) and return the q = -(k+3)/2 optimal class.

    Solved exactly: when (k-1) | p, s is read off the square root of
    4p/(k-1) + 1.  Returns None when p is not of this shape.
    """
    _check_pk(p, k)
    if p % (k - 1) != 0:
        return None
    root = exact_sqrt(4 * (p // (k - 1)) + 1)
    if root is None:
        return None
    s = (root - 1) // 2
    if s < 1 or s * (s + 1) * (k - 1) != p:
        return None
    delta = p - 2 * s * (k - 1)
    curve = CurveClass(p, k, 1, (2 * s + 1) * (k - 1))
    if curve != optimal_class(p, k) or delta != delta0(p, k):
        raise InvariantViolation(
            f"minimal-q family class mismatch at (p={p}, k={k})"
        )
    if curve.q != Fraction(-(k + 3), 2):
        raise InvariantViolation(
            f"minimal-q family q={curve.q} != -(k+3)/2 at (p={p}, k={k})"
        )
    return MinimalQClass(s=s, delta=delta, curve=curve)


@dataclass(frozen=True)
class IsotropicClass:
    """Witness for a gonality curve class with q = 0."""

    s: int
    delta: int
    curve: CurveClass


def isotropic_case(p: int, k: int) -> IsotropicClass | None:
    """The q = 0 gonality class, existing iff (k-1)(p-1) is a perfect square.

    With s the positive root, the class sits at delta = p - 2s + k - 1; that
    delta only stays within [0, p] when 2s >= k-1 (equivalently g >= 0), so
    the degenerate square cases below that line also return None.
    """
    _check_pk(p, k)
    s = exact_sqrt((k - 1) * (p - 1))
    if s is None or s < 1 or 2 * s < k - 1:
        return None
    delta = p - 2 * s + k - 1
    curve = gonality_class(p, k, delta)
    if curve.q != 0:
        raise InvariantViolation(
            f"isotropic class has q={curve.q} != 0 at (p={p}, k={k})"
        )
    return IsotropicClass(s=s, delta=delta, curve=curve)


@dataclass(frozen=True)
class LagrangianReport:
    """Necessary-condition report for a Lagrangian fibration structure.

    `value` is (k-1)(alpha+1)^2 - (2s+1)(alpha+1) + p with
    alpha = floor((2s-k+1)/(2(k-1))); nonnegative value means the isotropic
    divisor is not nef, negative means the necessary condition holds.
    `primitive` flags p = n^2 (k-1) + 1.
    """

    p: int
    k: int
    has_isotropic: bool
    s: int | None = None
    alpha: int | None = None
    value: int | None = None
    not_nef: bool | None = None
    necessary_condition_holds: bool | None = None
    primitive: bool = False
    n: int | None = None

    def to_payload(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "has_isotropic": self.has_isotropic,
            "s": self.s,
            "alpha": self.alpha,
            "value": self.value,
            "not_nef": self.not_nef,
            "necessary_condition_holds": self.necessary_condition_holds,
            "primitive": self.primitive,
            "n": self.n,
        }


def _primitive_isotropic_n(p: int, k: int) -> int | None:
    """n >= 1 with p = n^2 (k-1) + 1, if any."""
    if (p - 1) % (k - 1) != 0:
        return None
    n = exact_sqrt((p - 1) // (k - 1))
    return n if n is not None and n >= 1 else None


def lagrangian_report(p: int, k: int) -> LagrangianReport:
    """Evaluate the isotropy detection and the fibration necessary condition."""
    _check_pk(p, k)
    s = exact_sqrt((k - 1) * (p - 1))
    if s is None or s < 1:
        return LagrangianReport(p=p, k=k, has_isotropic=False)
    alpha = floor_div(2 * s - k + 1, 2 * (k - 1))
    value = (k - 1) * (alpha + 1) ** 2 - (2 * s + 1) * (alpha + 1) + p
    n = _primitive_isotropic_n(p, k)
    return LagrangianReport(
        p=p,
        k=k,
        has_isotropic=True,
        s=s,
        alpha=alpha,
        value=value,
        not_nef=value >= 0,
        necessary_condition_holds=value < 0,
        primitive=n is not None,
        n=n,
    )


@dataclass(frozen=True)
class RayReport:
    """Mori-cone extremal-ray classification for (p, k)."""

    p: int
    k: int
    status: str  # PROVEN_BM | PROVEN_MINQ | PROVEN_ISOPRIM | OPEN
    rays: tuple[CurveClass, ...]
    q: Fraction
    notes: tuple[str, ...] = ()

    def to_payload(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "status": self.status,
            "rays": [r.to_payload() for r in self.rays],
            "q": rat_str(self.q),
            "notes": list(self.notes),
        }


def extremal_ray_status(p: int, k: int) -> RayReport:
    """Classify whether r_k and the optimal class are proven extremal.

    Proven families: p <= 2(k-1); p = s(s+1)(k-1); p = n^2(k-1)+1 with
    n >= 2.  Everything else is reported OPEN with the optimal class as the
    conjectural second ray; (p, k) = (8, 2) additionally carries the known
    counterexample note.
    """
    _check_pk(p, k)
    opt = optimal_class(p, k)
    rays = (CurveClass.fiber(p, k), opt)
    q = opt.q
    if p <= 2 * (k - 1):
        return RayReport(p, k, "PROVEN_BM", rays, q)
    if minimal_q_family(p, k) is not None:
        return RayReport(p, k, "PROVEN_MINQ", rays, q)
    n = _primitive_isotropic_n(p, k)
    if n is not None and n >= 2:
        return RayReport(p, k, "PROVEN_ISOPRIM", rays, q)
    notes = [
        "extremality of the optimal class is unresolved for this (p, k); "
        "it is reported as the conjectural second ray"
    ]
    if (p, k) == (8, 2):
        notes.append(
            "known counterexample: effective rational curves of class "
            "3*H - 16*r_k lie outside the cone spanned by r_k and H - 5*r_k"
        )
    return RayReport(p, k, "OPEN", rays, q, tuple(notes))


def genus_for_invariants(k: int, rho: int, beta: int, m: int) -> int:
    """The genus p realizing prescribed (rho, beta) at a chosen scale m.

    p = (k-1)m(m+1) + (k-1-beta)(m+1) + rho; the decomposition of p then is
    exactly (m, k-1-beta, rho) and the optimal q equals
    2(rho-1) - beta^2/(2(k-1)).  Requires k >= 2, rho >= 0, 0 <= beta <= k-1
    and m >= max(1, rho).
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    if rho < 0:
        raise ValueError(f"need rho >= 0, got rho={rho}")
    if not 0 <= beta <= k - 1:
        raise ValueError(f"need 0 <= beta <= k-1, got beta={beta}")
    if m < max(1, rho):
        raise ValueError(f"need m >= max(1, rho) = {max(1, rho)}, got m={m}")
    t = k - 1 - beta
    p = (k - 1) * m * (m + 1) + t * (m + 1) + rho
    dec = decompose(p, k)
    if (dec.m, dec.t, dec.lam) != (m, t, rho):
        raise InvariantViolation(
            f"decomposition of p={p} is {dec}, expected (m={m}, t={t}, lam={rho})"
        )
    predicted = 2 * (rho - 1) - Fraction(beta * beta, 2 * (k - 1))
    # the boundary p = 2(k-1) (only at rho=0, beta=k-1, m=1) has no
    # optimal-form reading; q_case at delta0 covers it
    actual = (
        q_optimal_form(p, k) if p > 2 * (k - 1) else q_case(p, k, delta0(p, k))
    )
    if actual != predicted:
        raise InvariantViolation(
            f"optimal q at (p={p}, k={k}) is {actual}, predicted {predicted}"
        )
    return p


def attained_q_values(k: int, p_max: int) -> list[Fraction]:
    """Sorted negative self-intersections of optimal classes for p <= p_max."""
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    if p_max < 2:
        raise ValueError(f"need p_max >= 2, got p_max={p_max}")
    values = set()
    for p in range(2, p_max + 1):
        q = q_case(p, k, delta0(p, k))
        if q < 0:
            values.add(q)
    return sorted(values)


@dataclass(frozen=True)
class HTConeReport:
    """Check of the cone prediction at p = n^2(k-1)+1 via R-bar = R - r_k.

    q(R-bar) = -2n - 1/(2(k-1)); when that is >= -(k+3)/2 (iff 4n <= k+2)
    the class would be effective under the general cone prediction but is
    not, i.e. the prediction over-counts; `violation` flags this.
    """

    p: int
    k: int
    applicable: bool
    n: int | None = None
    rbar: CurveClass | None = None
    q_rbar: Fraction | None = None
    violation: bool | None = None

    def to_payload(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "applicable": self.applicable,
            "n": self.n,
            "rbar": self.rbar.to_payload() if self.rbar else None,
            "q_rbar": rat_str(self.q_rbar) if self.q_rbar is not None else None,
            "violation": self.violation,
        }


def ht_violation_check(p: int, k: int) -> HTConeReport:
    """Evaluate the R-bar self-intersection test; not-applicable off the family."""
    _check_pk(p, k)
    n = _primitive_isotropic_n(p, k)
    if n is None or n < 2:
        return HTConeReport(p=p, k=k, applicable=False)
    opt = optimal_class(p, k)
    rbar = CurveClass(p, k, opt.a, opt.y + 1)
    expected = Fraction(-2 * n) - Fraction(1, 2 * (k - 1))
    if rbar.q != expected:
        raise InvariantViolation(
            f"q(R-bar) = {rbar.q} != -2n - 1/(2(k-1)) = {expected} at (p={p}, k={k})"
        )
    violation = rbar.q >= Fraction(-(k + 3), 2)
    if violation != (4 * n <= k + 2):
        raise InvariantViolation(
            f"bound reading disagrees with 4n <= k+2 at (p={p}, k={k})"
        )
    return HTConeReport(
        p=p, k=k, applicable=True, n=n, rbar=rbar, q_rbar=rbar.q, violation=violation
    )
