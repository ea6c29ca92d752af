"""One-dimensional piecewise-linear interval maps and global attractivity.

The convergence of semi-wavefronts onto the positive equilibrium reduces
to a global-attractivity property of either the birth function restricted
to [g(g(theta)), g(theta)] or the auxiliary delay-weighted map sigma built
from the inverse of the decreasing branch.  Both are piecewise linear, so
compositions and slope bounds are computed exactly and the attractivity
check is a proof whenever the second iterate is a contraction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .birth import PiecewiseLinearBirth
from .errors import NotInvariant, OutOfRange
from .spectrum import xi

_TOL = 1e-12


@dataclass(frozen=True)
class IntervalMap:
    """Continuous piecewise-affine map on [xs[0], xs[-1]].

    Piece i is slopes[i] * x + intercepts[i] on [xs[i], xs[i+1]].
    """

    xs: np.ndarray
    slopes: np.ndarray
    intercepts: np.ndarray
    fixed_point: float | None = None

    def __post_init__(self):
        xs, s, b = self.xs, self.slopes, self.intercepts
        if len(xs) != len(s) + 1 or len(s) != len(b):
            raise ValueError("inconsistent piece arrays")
        if np.any(np.diff(xs) <= 0):
            raise ValueError("breakpoints must be strictly increasing")
        left = s[:-1] * xs[1:-1] + b[:-1]
        right = s[1:] * xs[1:-1] + b[1:]
        scale = max(1.0, float(np.abs(left).max(initial=0.0)))
        if np.any(np.abs(left - right) > 1e-9 * scale):
            raise ValueError("pieces are discontinuous across a breakpoint")

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.xs[0]), float(self.xs[-1])

    def __call__(self, x):
        arr = np.asarray(x, dtype=float)
        a, b = self.domain
        pad = _TOL * max(1.0, abs(a), abs(b))
        if np.any(arr < a - pad) or np.any(arr > b + pad):
            raise OutOfRange(f"point outside the map domain [{a}, {b}]")
        idx = np.clip(np.searchsorted(self.xs, arr, side="right") - 1,
                      0, len(self.slopes) - 1)
        out = self.slopes[idx] * arr + self.intercepts[idx]
        return float(out) if out.ndim == 0 else out

    def image(self) -> tuple[float, float]:
        """Exact range: extremes of a continuous PL map sit at breakpoints."""
        vals = self.slopes * self.xs[:-1] + self.intercepts
        last = self.slopes[-1] * self.xs[-1] + self.intercepts[-1]
        vals = np.append(vals, last)
        return float(vals.min()), float(vals.max())

    def max_abs_slope(self) -> float:
        return float(np.abs(self.slopes).max())

    def scaled(self, factor: float) -> "IntervalMap":
        return IntervalMap(self.xs.copy(), self.slopes * factor,
                           self.intercepts * factor, self.fixed_point)

    def inverse(self) -> "IntervalMap":
        """Inverse of a strictly monotone map."""
        s = self.slopes
        if np.any(s == 0) or (np.any(s > 0) and np.any(s < 0)):
            raise OutOfRange("map is not strictly monotone, cannot invert")
        vals = np.append(s * self.xs[:-1] + self.intercepts,
                         s[-1] * self.xs[-1] + self.intercepts[-1])
        inv_s = 1.0 / s
        inv_b = -self.intercepts / s
        if s[0] > 0:
            return IntervalMap(vals, inv_s, inv_b, self.fixed_point)
        return IntervalMap(vals[::-1], inv_s[::-1], inv_b[::-1], self.fixed_point)

    def fixed_points(self) -> list[float]:
        """Solutions of map(x) = x, one affine piece at a time."""
        out: list[float] = []
        for i, (s, b) in enumerate(zip(self.slopes, self.intercepts)):
            lo, hi = self.xs[i], self.xs[i + 1]
            if s == 1.0:
                if abs(b) < _TOL:
                    out.extend([float(lo), float(hi)])
                continue
            x = b / (1.0 - s)
            if lo - _TOL <= x <= hi + _TOL:
                out.append(float(x))
        dedup: list[float] = []
        for x in sorted(out):
            if not dedup or x - dedup[-1] > 1e-10:
                dedup.append(x)
        return dedup

    def compose_self(self) -> "IntervalMap":
        return compose_maps(self, self)


def from_birth(g: PiecewiseLinearBirth, lo: float, hi: float,
               fixed_point: float | None = None) -> IntervalMap:
    """The birth function as an IntervalMap on [lo, hi] (within [0, inf))."""
    if lo < 0:
        raise OutOfRange("birth functions live on [0, inf)")
    if not hi > lo:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    cuts = [lo] + [float(b) for b in g.slope_breakpoints if lo < b < hi] + [hi]
    xs = np.array(cuts)
    slopes, intercepts = [], []
    for a, b in zip(xs[:-1], xs[1:]):
        s, c = g.slope_intercept_at(0.5 * (a + b))
        slopes.append(s)
        intercepts.append(c)
    return IntervalMap(xs, np.array(slopes), np.array(intercepts), fixed_point)


def compose_maps(outer: IntervalMap, inner: IntervalMap) -> IntervalMap:
    """Exact x -> outer(inner(x)); inner's image must sit in outer's domain."""
    img = inner.image()
    dom = outer.domain
    pad = _TOL * max(1.0, abs(dom[0]), abs(dom[1]))
    if img[0] < dom[0] - pad or img[1] > dom[1] + pad:
        raise OutOfRange(
            f"inner image [{img[0]:.6g}, {img[1]:.6g}] leaves outer domain "
            f"[{dom[0]:.6g}, {dom[1]:.6g}]")

    cuts = set(float(x) for x in inner.xs)
    for i, (s, b) in enumerate(zip(inner.slopes, inner.intercepts)):
        lo, hi = inner.xs[i], inner.xs[i + 1]
        if s == 0.0:
            continue
        for X in outer.xs[1:-1]:
            x = (X - b) / s
            if lo < x < hi:
                cuts.add(float(x))
    xs = np.array(sorted(cuts))
    keep = np.concatenate(([True], np.diff(xs) > 1e-14 * max(1.0, abs(xs[-1]))))
    xs = xs[keep]

    mids = 0.5 * (xs[:-1] + xs[1:])
    s_in = np.empty(len(mids))
    b_in = np.empty(len(mids))
    idx = np.clip(np.searchsorted(inner.xs, mids, side="right") - 1,
                  0, len(inner.slopes) - 1)
    s_in, b_in = inner.slopes[idx], inner.intercepts[idx]
    v = np.clip(s_in * mids + b_in, dom[0], dom[1])
    odx = np.clip(np.searchsorted(outer.xs, v, side="right") - 1,
                  0, len(outer.slopes) - 1)
    s_out, b_out = outer.slopes[odx], outer.intercepts[odx]
    return IntervalMap(xs, s_out * s_in, s_out * b_in + b_out, inner.fixed_point)


def compose(g: PiecewiseLinearBirth, interval: tuple[float, float]) -> IntervalMap:
    """Exact piecewise-linear representation of g∘g on the interval."""
    lo, hi = interval
    if lo < 0:
        raise NotInvariant("g maps [0, inf) only; interval has negative points")
    inner = from_birth(g, lo, hi, fixed_point=g.kappa)
    img = inner.image()
    outer = from_birth(g, max(img[0], 0.0), img[1])
    return compose_maps(outer, inner)


def restrict_g(g: PiecewiseLinearBirth) -> IntervalMap:
    """g on [g(g(theta)), g(theta)], invariance verified exactly."""
    lo, hi = g.g2_theta, g.g_theta
    if not lo <= g.kappa <= hi:
        raise NotInvariant(f"kappa={g.kappa} outside [{lo}, {hi}]")
    m = from_birth(g, lo, hi, fixed_point=g.kappa)
    img = m.image()
    pad = 1e-12 * max(1.0, hi)
    if img[0] < lo - pad or img[1] > hi + pad:
        raise NotInvariant(
            f"image [{img[0]:.6g}, {img[1]:.6g}] escapes [{lo:.6g}, {hi:.6g}]")
    return m


def build_sigma(g: PiecewiseLinearBirth, h: float, c: float) -> IntervalMap:
    """The delay-weighted auxiliary map sigma(x) = zeta^-1((1 - xi) g(x)).

    psi inverts g on its full decreasing branch [theta, g(theta)] (the
    branch reading that actually covers [g(g(theta)), g(theta)]), and
    zeta(x) = x - psi(x) is strictly increasing, hence exactly invertible.
    A value (1 - xi) g(x) outside the range of zeta is reported, never
    clamped.
    """
    lo, hi = g.g2_theta, g.g_theta
    branch = from_birth(g, g.theta, g.g_theta)
    psi = branch.inverse()                      # [g2(theta), g(theta)] -> branch
    zeta = IntervalMap(psi.xs.copy(), 1.0 - psi.slopes, -psi.intercepts)
    inner = from_birth(g, lo, hi).scaled(1.0 - xi(h, c))
    img = inner.image()
    zr = zeta.image()
    if img[0] < zr[0] - _TOL or img[1] > zr[1] + _TOL:
        vals = inner(inner.xs)
        bad = inner.xs[(vals < zr[0]) | (vals > zr[1])]
        raise OutOfRange(
            f"(1 - xi) g(x) leaves the range of zeta at x = {bad[:3]}")
    return compose_maps(zeta.inverse(), inner)


@dataclass
class GAReport:
    """Outcome of the global-attractivity check."""

    verdict: str                       # PROVED | SAMPLED-ONLY | FAILED
    max_slope_second_iterate: float
    witness: np.ndarray | None = None
    details: dict[str, Any] = field(default_factory=dict)


def iterate_orbit(m: IntervalMap, x0: float, n: int) -> np.ndarray:
    """x0 and its n forward iterates."""
    out = np.empty(n + 1)
    out[0] = x0
    for i in range(n):
        out[i + 1] = m(out[i])
    return out


def check_ga(m: IntervalMap, *, n_orbits: int = 10_000, n_steps: int = 1_000,
             eps: float = 1e-9, seed: int = 0) -> GAReport:
    """Global attractivity of the fixed point.

    PROVED when the domain is invariant and the exact second iterate is a
    contraction (then the second iterate has a unique fixed point, no
    2-cycle can exist, and every orbit converges to the fixed point).
    Otherwise falls back to orbit sampling: SAMPLED-ONLY when all sampled
    orbits enter an eps-ball around the fixed point, FAILED with a
    witness orbit if one never does.
    """
    if m.fixed_point is None:
        raise ValueError("map has no designated fixed point")
    a, b = m.domain
    img = m.image()
    second = m.compose_self()
    slope2 = second.max_abs_slope()
    details = {"image": img, "domain": (a, b)}
    pad = _TOL * max(1.0, abs(a), abs(b))
    if img[0] < a - pad or img[1] > b + pad:
        x_bad = _escape_witness(m)
        return GAReport("FAILED", slope2, witness=iterate_orbit(m, x_bad, 3),
                        details={**details, "reason": "domain not invariant"})
    if slope2 < 1.0:
        return GAReport("PROVED", slope2, details=details)

    rng = np.random.default_rng(seed)
    x = rng.uniform(a, b, size=n_orbits)
    starts = x.copy()
    entered = np.abs(x - m.fixed_point) < eps
    for _ in range(n_steps):
        x = m(x)
        entered |= np.abs(x - m.fixed_point) < eps
        if entered.all():
            break
    if entered.all():
        return GAReport("SAMPLED-ONLY", slope2, details=details)
    bad = float(starts[np.argmin(entered)])
    return GAReport("FAILED", slope2, witness=iterate_orbit(m, bad, 50),
                    details={**details, "reason": "orbit never entered eps-ball"})


def _escape_witness(m: IntervalMap) -> float:
    a, b = m.domain
    vals = np.append(m.slopes * m.xs[:-1] + m.intercepts,
                     m.slopes[-1] * m.xs[-1] + m.intercepts[-1])
    bad = np.nonzero((vals < a) | (vals > b))[0]
    return float(m.xs[bad[0]]) if len(bad) else float(m.xs[0])


def dump_csv(m: IntervalMap, path, n: int = 512) -> None:
    """(x, map(x)) rows for cobweb plots; includes exact breakpoints."""
    a, b = m.domain
    x = np.unique(np.concatenate([np.linspace(a, b, n), m.xs]))
    np.savetxt(path, np.column_stack([x, m(x)]), delimiter=",",
               header="x,map_x", comments="")
