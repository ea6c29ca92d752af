"""Piecewise-linear unimodal birth functions and their structural checks.

A birth function here has three affine segments: a rising one of slope
``k1 > 1`` up to the maximum point ``theta``, followed by two falling
segments of slopes ``k2 < k3 < 0``.  The intercepts ``q2, q3``, the second
breakpoint ``theta1`` and the values ``g(theta)``, ``g(g(theta))`` are all
derived from continuity and from the fixed-point condition ``g(kappa) =
kappa``, so a model is fully determined by ``(k1, k2, k3, theta, kappa)``.

All checks exploit piecewise linearity: affine pieces are verified exactly
at segment endpoints, never by grid sampling.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import InvalidGeometry, NegativeInput

_REL_TOL = 1e-12


@dataclass(frozen=True)
class PiecewiseLinearBirth:
    """Three-segment unimodal birth function.

    Beyond ``g_theta`` the third segment is continued and clamped at zero
    from below, so evaluation is total on [0, inf).  Correct profile
    solvers never exercise that region (profile maxima stay <= g(theta)),
    the extension only keeps iterative solvers well defined.
    """

    k1: float
    k2: float
    k3: float
    theta: float
    theta1: float
    kappa: float
    q2: float
    q3: float
    g_theta: float
    g2_theta: float

    def __call__(self, x):
        """Evaluate g at a scalar or array of nonnegative states."""
        arr = np.asarray(x, dtype=float)
        if np.any(arr < 0.0):
            raise NegativeInput(f"birth function undefined for x < 0 (got min {arr.min()})")
        out = np.where(
            arr <= self.theta,
            self.k1 * arr,
            np.where(arr <= self.theta1, self.k2 * arr + self.q2,
                     np.maximum(self.k3 * arr + self.q3, 0.0)),
        )
        if np.isscalar(x) or arr.ndim == 0:
            return float(out)
        return out

    @property
    def clamp_x(self) -> float:
        """State where the continued third segment reaches zero."""
        return -self.q3 / self.k3

    @property
    def slope_breakpoints(self) -> np.ndarray:
        """States where the slope of the (extended) graph changes."""
        return np.array([self.theta, self.theta1, self.clamp_x])

    def segments(self) -> list[tuple[float, float, float, float]]:
        """Affine pieces of the extended graph as (lo, hi, slope, intercept)."""
        return [
            (0.0, self.theta, self.k1, 0.0),
            (self.theta, self.theta1, self.k2, self.q2),
            (self.theta1, self.clamp_x, self.k3, self.q3),
            (self.clamp_x, np.inf, 0.0, 0.0),
        ]

    def slope_intercept_at(self, x: float) -> tuple[float, float]:
        """Slope and intercept of the piece active at x (>= 0)."""
        if x < 0.0:
            raise NegativeInput(f"birth function undefined for x < 0 (got {x})")
        for lo, hi, s, b in self.segments():
            if x <= hi:
                return s, b
        return 0.0, 0.0

    def to_dict(self) -> dict[str, float]:
        return {"k1": self.k1, "k2": self.k2, "k3": self.k3,
                "theta": self.theta, "kappa": self.kappa}

    def derived_dict(self) -> dict[str, float]:
        """The derived block emitted into reports."""
        return {"q2": self.q2, "q3": self.q3, "theta1": self.theta1,
                "g_theta": self.g_theta}


def construct(k1: float, k2: float, k3: float, theta: float, kappa: float) -> PiecewiseLinearBirth:
    """Solve intercepts and the second breakpoint, validating the geometry.

    Raises InvalidGeometry unless 0 < theta < theta1 < kappa < g(theta),
    the slopes are ordered k2 < k3 < 0 < 1 < k1 and the graph stays
    nonnegative on [0, g(theta)].
    """
    if not k1 > 1.0:
        raise InvalidGeometry(f"need k1 > 1, got {k1}")
    if not (k2 < k3 < 0.0):
        raise InvalidGeometry(f"need k2 < k3 < 0, got k2={k2}, k3={k3}")
    if not (0.0 < theta < kappa):
        raise InvalidGeometry(f"need 0 < theta < kappa, got theta={theta}, kappa={kappa}")

    q2 = (k1 - k2) * theta            # continuity at theta
    q3 = kappa * (1.0 - k3)           # g(kappa) = kappa on segment 3
    theta1 = (q3 - q2) / (k2 - k3)    # continuity at theta1
    g_theta = k1 * theta

    if not (theta < theta1 < kappa):
        raise InvalidGeometry(
            f"kappa must sit strictly inside segment 3: solved theta1={theta1:.6g} "
            f"not in (theta={theta:.6g}, kappa={kappa:.6g})")
    if not kappa < g_theta:
        raise InvalidGeometry(f"fixed point kappa={kappa} must lie below the maximum g(theta)={g_theta}")
    g2_theta = k3 * g_theta + q3
    if g2_theta < 0.0:
        raise InvalidGeometry(f"graph goes negative on [0, g(theta)]: g(g(theta))={g2_theta:.6g}")

    return PiecewiseLinearBirth(k1=float(k1), k2=float(k2), k3=float(k3),
                                theta=float(theta), theta1=float(theta1),
                                kappa=float(kappa), q2=float(q2), q3=float(q3),
                                g_theta=float(g_theta), g2_theta=float(g2_theta))


def from_dict(d: dict[str, Any]) -> PiecewiseLinearBirth:
    """Build a model from the JSON block {k1, k2, k3, theta, kappa}."""
    try:
        return construct(float(d["k1"]), float(d["k2"]), float(d["k3"]),
                         float(d["theta"]), float(d["kappa"]))
    except KeyError as exc:
        raise InvalidGeometry(f"model block missing field {exc}") from exc


@dataclass
class HypothesisReport:
    """Outcome of one structural hypothesis check.

    Every failed condition carries a concrete witness point in
    ``details``; ``witness`` is the first such point.
    """

    condition: str
    holds: bool
    witness: float | None = None
    details: dict[str, Any] = field(default_factory=dict)


def check_um(g: PiecewiseLinearBirth) -> HypothesisReport:
    """Unimodality and monostability: one interior maximum, g above the
    diagonal on (0, kappa) and below it on (kappa, g(theta)]."""
    checks: dict[str, tuple[bool, float]] = {}
    checks["slope_at_origin"] = (g.k1 > 1.0, 0.0)
    checks["slope_at_kappa"] = (g.k3 < 1.0, g.kappa)
    checks["single_maximum"] = (g.k1 > 0.0 > g.k2 and g.k3 < 0.0 and g.theta < g.theta1, g.theta)
    checks["kappa_below_maximum"] = (g.kappa <= g.g_theta, g.kappa)
    checks["fixed_point"] = (abs(float(g(g.kappa)) - g.kappa) <= _REL_TOL * max(1.0, g.kappa), g.kappa)
    # g(x) > x on (0, kappa): affine per piece, endpoint checks are exact.
    for x in (g.theta, g.theta1):
        if 0.0 < x < g.kappa:
            checks[f"above_diagonal_at_{x:.6g}"] = (float(g(x)) > x, x)
    # g(x) < x on (kappa, g(theta)]: slope k3 - 1 < 0 past the fixed point,
    # the endpoint value is the only thing left to verify.
    if g.kappa < g.g_theta:
        checks["below_diagonal_at_max"] = (g.g2_theta < g.g_theta, g.g_theta)

    failed = [(name, x) for name, (ok, x) in checks.items() if not ok]
    return HypothesisReport(
        condition="UM",
        holds=not failed,
        witness=failed[0][1] if failed else None,
        details={name: {"holds": ok, "point": x} for name, (ok, x) in checks.items()},
    )


def check_fc(g: PiecewiseLinearBirth) -> HypothesisReport:
    """Strict negative feedback about kappa on [g(g(theta)), g(theta)]:
    (g(x) - kappa)(x - kappa) < 0 for every x != kappa in the interval."""
    lo, hi = g.g2_theta, g.g_theta
    details: dict[str, Any] = {"interval": [lo, hi]}
    if not (lo < g.kappa < hi):
        return HypothesisReport("FC", False, g.kappa,
                                {**details, "reason": "kappa not interior to the interval"})
    pts = sorted({lo, hi, *(b for b in (g.theta, g.theta1) if lo < b < hi)})
    failed: list[float] = []
    for x in pts:
        gx = float(g(x))
        ok = gx > g.kappa if x < g.kappa else gx < g.kappa
        details[f"x={x:.6g}"] = {"g": gx, "holds": ok}
        if not ok:
            failed.append(x)
    return HypothesisReport("FC", not failed, failed[0] if failed else None, details)


def check_subtangency(g: PiecewiseLinearBirth) -> HypothesisReport:
    """Whether g stays below its tangent line at kappa on [0, kappa].

    Three-segment models built to carry a proper eventually monotone
    front must violate this, so callers usually expect ``holds=False``.
    """
    def excess(x: float) -> float:
        return float(g(x)) - (g.kappa + g.k3 * (x - g.kappa))

    pts = sorted({0.0, g.theta, g.theta1, g.kappa})
    pts = [x for x in pts if 0.0 <= x <= g.kappa]
    worst = max(pts, key=excess)
    holds = excess(worst) <= _REL_TOL * max(1.0, g.kappa)
    return HypothesisReport(
        condition="subtangency", holds=holds,
        witness=None if holds else worst,
        details={f"x={x:.6g}": {"excess": excess(x)} for x in pts},
    )


def critical_secant_slope(g: PiecewiseLinearBirth) -> float:
    """Infimum over x in (0, kappa) of the secant slope (g(x) - kappa)/(x - kappa).

    The slope is a Moebius function of x on each affine piece, hence
    monotone there; the infimum is attained at a breakpoint or as a limit
    at an endpoint, so evaluating candidates is exact.
    """
    candidates = [1.0 if g.kappa != 0 else np.inf]   # x -> 0+ with g(0) = 0
    for x in (g.theta, g.theta1):
        if 0.0 < x < g.kappa:
            candidates.append((float(g(x)) - g.kappa) / (x - g.kappa))
    candidates.append(g.k3)                          # x -> kappa-
    return min(candidates)


def lipschitz_constant(g: PiecewiseLinearBirth, interval: tuple[float, float]) -> float:
    """Max |slope| over pieces meeting the interval with positive length."""
    a, b = interval
    if not b > a:
        raise ValueError(f"need a nondegenerate interval, got {interval}")
    best = 0.0
    for lo, hi, s, _ in g.segments():
        if min(hi, b) > max(lo, a):
            best = max(best, abs(s))
    return best
