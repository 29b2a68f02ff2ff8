"""The gonality specialization r=1, d=k and the minimal node number.

A triple (p, k, delta) of arithmetic genus, gonality and marked node
count is *admissible* when

    delta >= alpha * (p - delta - (k-1)(alpha+1)),
    alpha = floor( (p-delta) / (2(k-1)) ),

the r=1, d=k case of the general necessary condition.  For fixed p, k the
minimal admissible delta has a closed form driven by the unique writing

    p = (k-1) m (m+1) + t (m+1) + lambda,
    m = max{ n : (k-1) n (n+1) <= p },   0 <= t < 2(k-1),   0 <= lambda <= m,

namely  delta0 = (k-1) m (m-1) + t m + lambda = ceil(m p / (m+1)) - m (k-1)
whenever p > 2(k-1), and delta0 = 0 otherwise.  Both closed forms are
evaluated on every call and checked against each other; the independent
brute-force scan `delta0_bruteforce` is the test oracle.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import brillnoether
from .errors import InvariantViolation
from .exactmath import ceil_div, floor_div

__all__ = [
    "GonalityCase",
    "Decomposition",
    "admissible",
    "decompose",
    "delta0",
    "delta0_bruteforce",
    "expected_dims",
    "is_optimal",
]


def _check_pk(p: int, k: int) -> None:
    if p < 2:
        raise ValueError(f"need p >= 2, got p={p}")
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")


def _check_pkdelta(p: int, k: int, delta: int) -> None:
    _check_pk(p, k)
    if not 0 <= delta <= p:
        raise ValueError(f"need 0 <= delta <= p, got delta={delta}, p={p}")


@dataclass(frozen=True)
class GonalityCase:
    """A triple (p, k, delta) with every derived invariant precomputed.

    g = p - delta, alpha = floor(g / (2(k-1))), beta = (k-1)(2 alpha + 1) - g,
    rho = rho(p, alpha, k alpha + delta).  Construction verifies the beta
    range -(k-1) < beta <= k-1 and the equivalence of the three admissibility
    readings (rho sign, integer threshold, quadratic-in-beta form).
    """

    p: int
    k: int
    delta: int
    g: int = field(init=False)
    alpha: int = field(init=False)
    beta: int = field(init=False)
    rho: int = field(init=False)
    admissible: bool = field(init=False)

    def __post_init__(self):
        _check_pkdelta(self.p, self.k, self.delta)
        p, k, delta = self.p, self.k, self.delta
        g = p - delta
        report = brillnoether.necessary_condition(p, delta, 1, k)
        alpha = report.alpha
        beta = (k - 1) * (2 * alpha + 1) - g
        if not -(k - 1) < beta <= k - 1:
            raise InvariantViolation(
                f"beta={beta} outside (-(k-1), k-1] at (p={p}, k={k}, delta={delta})"
            )
        # third reading of admissibility: delta >= ((g-k+1)^2 - beta^2) / (4(k-1))
        by_quadratic = delta >= Fraction((g - k + 1) ** 2 - beta * beta, 4 * (k - 1))
        if by_quadratic != report.satisfied:
            raise InvariantViolation(
                f"quadratic admissibility reading disagrees at "
                f"(p={p}, k={k}, delta={delta})"
            )
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "rho", report.rho_at_alpha)
        object.__setattr__(self, "admissible", report.satisfied)


@dataclass(frozen=True)
class Decomposition:
    """The triple (m, t, lam) with p = (k-1)m(m+1) + t(m+1) + lam."""

    m: int
    t: int
    lam: int


def admissible(p: int, k: int, delta: int) -> bool:
    """True iff (p, k, delta) satisfies the existence bound.

    >>> admissible(8, 2, 4), admissible(8, 2, 3)
    (True, False)
    """
    return GonalityCase(p, k, delta).admissible


def decompose(p: int, k: int) -> Decomposition:
    """Decompose p as (k-1)m(m+1) + t(m+1) + lam with m maximal.

    Requires p >= 2(k-1) so that m >= 1; below that the delta0 = 0 regime
    applies and there is nothing to decompose.
    """
    _check_pk(p, k)
    if p < 2 * (k - 1):
        raise ValueError(
            f"p={p} < 2(k-1)={2 * (k - 1)}: m would be 0; "
            "this is the delta0 = 0 regime"
        )
    m = 1
    while (k - 1) * (m + 1) * (m + 2) <= p:
        m += 1
    t = floor_div(p, m + 1) - m * (k - 1)
    lam = p - (k - 1) * m * (m + 1) - t * (m + 1)
    dec = Decomposition(m, t, lam)
    if not (0 <= t < 2 * (k - 1) and 0 <= lam <= m):
        raise InvariantViolation(f"decomposition {dec} out of range for p={p}, k={k}")
    if (k - 1) * m * (m + 1) + t * (m + 1) + lam != p:
        raise InvariantViolation(f"decomposition {dec} does not reconstruct p={p}")
    return dec


def delta0(p: int, k: int) -> int:
    """Minimal delta satisfying the existence bound, in closed form.

    Both closed forms ((k-1)m(m-1) + tm + lam and ceil(mp/(m+1)) - m(k-1))
    are computed and must agree.

    >>> delta0(8, 2), delta0(9, 4)
    (4, 2)
    """
    _check_pk(p, k)
    if p <= 2 * (k - 1):
        return 0
    dec = decompose(p, k)
    m, t, lam = dec.m, dec.t, dec.lam
    value = (k - 1) * m * (m - 1) + t * m + lam
    other = ceil_div(m * p, m + 1) - m * (k - 1)
    if value != other:
        raise InvariantViolation(
            f"delta0 closed forms disagree: {value} != {other} at (p={p}, k={k})"
        )
    return value


def delta0_bruteforce(p: int, k: int) -> int:
    """Minimal admissible delta by linear scan; independent oracle for delta0.

    Terminates because delta = p is always admissible (g = 0 forces alpha = 0).
    """
    _check_pk(p, k)
    for delta in range(p + 1):
        if admissible(p, k, delta):
            return delta
    raise InvariantViolation(f"no admissible delta found for p={p}, k={k}")


def expected_dims(p: int, k: int, delta: int) -> tuple[int, int]:
    """(dim of the k-gonal locus, dim of W^1_k on the normalization).

    Returns (min{2(k-1), g}, max{0, 2(k-1) - g}); the second entry equals
    max{0, rho(g, 1, k)}.  Inadmissible triples are rejected: the locus is
    empty there.
    """
    case = GonalityCase(p, k, delta)
    if not case.admissible:
        raise ValueError(
            f"(p={p}, k={k}, delta={delta}) is inadmissible: the locus is empty"
        )
    g = case.g
    dim_vk = min(2 * (k - 1), g)
    dim_w1k = max(0, 2 * (k - 1) - g)
    return dim_vk, dim_w1k


def is_optimal(p: int, k: int, delta: int) -> bool:
    """True iff the case is admissible with rho <= alpha.

    Equivalent to delta == delta0(p, k); the equivalence is exercised on a
    grid in the test suite.
    """
    case = GonalityCase(p, k, delta)
    return case.admissible and case.rho <= case.alpha
