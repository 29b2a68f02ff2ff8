"""Brill-Noether existence bound for linear series on normalizations.

For a curve of arithmetic genus p with delta marked nodes (geometric genus
g = p - delta) whose normalization carries a g^r_d, the necessary condition
implemented here is

    rho(p, alpha*r, alpha*d + delta) >= 0,
    alpha = floor( (g*r + (d-r)(r-1)) / (2r(d-r)) ),

equivalently  delta >= alpha * (r*g - (d-r)(alpha*r + 1)),  where
rho(g, r, d) = g - (r+1)(r + g - d) is the classical Brill-Noether number.
Both formulations are evaluated on every call and must agree; a mismatch
aborts with :class:`InvariantViolation` rather than silently trusting one
transcription of the inequality.
"""

from dataclasses import dataclass

from .errors import InvariantViolation
from .exactmath import floor_div

__all__ = [
    "rho",
    "alpha_general",
    "rho_quadratic",
    "NecessityReport",
    "necessary_condition",
]


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number g - (r+1)(r + g - d)."""
    return g - (r + 1) * (r + g - d)


def alpha_general(g: int, r: int, d: int) -> int:
    """The minimizing integer floor((g*r + (d-r)(r-1)) / (2r(d-r))).

    Requires d > r >= 1 and g >= 0 (the denominator must be positive).
    """
    if r < 1 or d <= r:
        raise ValueError(f"need d > r >= 1, got r={r}, d={d}")
    if g < 0:
        raise ValueError(f"need g >= 0, got g={g}")
    return floor_div(g * r + (d - r) * (r - 1), 2 * r * (d - r))


def _check_case(p: int, delta: int, r: int, d: int) -> None:
    if r < 1 or d <= r:
        raise ValueError(f"need d > r >= 1, got r={r}, d={d}")
    if not 0 <= delta <= p:
        raise ValueError(f"need 0 <= delta <= p, got delta={delta}, p={p}")


def rho_quadratic(p: int, delta: int, r: int, d: int, l: int) -> int:
    """Evaluate rho(p, l*r, l*d + delta) in its quadratic-in-l closed form.

    Returns l^2 r(d-r) - l(g*r + r - d) + delta with g = p - delta, and
    cross-checks the value against a direct rho() evaluation.
    """
    _check_case(p, delta, r, d)
    if l < 1:
        raise ValueError(f"need l >= 1, got l={l}")
    g = p - delta
    value = l * l * r * (d - r) - l * (g * r + r - d) + delta
    direct = rho(p, l * r, l * d + delta)
    if value != direct:
        raise InvariantViolation(
            f"quadratic form {value} != rho(p, lr, ld+delta) = {direct} "
            f"at (p={p}, delta={delta}, r={r}, d={d}, l={l})"
        )
    return value


@dataclass(frozen=True)
class NecessityReport:
    """Outcome of the existence bound at the minimizing integer alpha."""

    alpha: int
    rho_at_alpha: int
    satisfied: bool
    threshold_delta: int


def necessary_condition(p: int, delta: int, r: int, d: int) -> NecessityReport:
    """Evaluate the necessary condition for a g^r_d on the normalization.

    Computes alpha, rho(p, alpha*r, alpha*d + delta) and the threshold
    alpha*(r*g - (d-r)(alpha*r + 1)); `satisfied` holds iff delta reaches the
    threshold, iff rho_at_alpha >= 0.  The two readings must agree.
    """
    if p < 2:
        raise ValueError(f"need p >= 2, got p={p}")
    _check_case(p, delta, r, d)
    g = p - delta
    alpha = alpha_general(g, r, d)
    threshold = alpha * (r * g - (d - r) * (alpha * r + 1))
    by_threshold = delta >= threshold
    if alpha >= 1:
        rho_at_alpha = rho_quadratic(p, delta, r, d, alpha)
    else:
        rho_at_alpha = rho(p, 0, delta)  # alpha = 0: rho(p, 0, delta) = delta
    by_rho = rho_at_alpha >= 0
    if by_threshold != by_rho:
        raise InvariantViolation(
            f"threshold reading ({by_threshold}) disagrees with rho reading "
            f"({by_rho}) at (p={p}, delta={delta}, r={r}, d={d})"
        )
    return NecessityReport(
        alpha=alpha,
        rho_at_alpha=rho_at_alpha,
        satisfied=by_rho,
        threshold_delta=threshold,
    )
