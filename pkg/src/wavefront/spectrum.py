"""Root analysis of the characteristic quasipolynomials.

The linearization of the profile equation at the trivial state or at the
positive equilibrium leads to

    chi(z) = z**2 - c*z - 1 + k * exp(-z * tau),      tau = c*h,

with k = g'(0) for the leading edge and k = g'(kappa) for the tail.  The
admissibility region requires chi_0 to have exactly two positive real
roots 0 < mu2 <= mu1 and chi_kappa exactly two negative real roots
lambda2 <= lambda1 < 0 (multiplicities counted).

Real roots are enumerated exactly through the monotonicity structure:
chi'' = 2 + k*tau**2*exp(-z*tau) has at most one sign change (closed
form), so chi' has at most two zeros and chi is monotone between its
critical points.  Bisection on each monotone piece finds every real root
with certainty; a pair of simple roots closer than 1e-6 is resolved
deliberately as a tangency (multiplicity 2) at the critical point.

Complex roots are located by argument-principle winding counts over
rectangles with adaptive quadrisection, refined by complex Newton steps.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .birth import PiecewiseLinearBirth
from .errors import BoundaryZero, NoConvergence, NotInDomain, NoTangency

_EXP_CAP = 700.0          # keep exp() finite; sign saturation is enough
_DOUBLE_ROOT_SEP = 1e-6   # pairs closer than this count as one tangency
_CHI_TOL = 1e-10          # |chi(root)| < _CHI_TOL * max(1, |root|^2)
_DCHI_TOL = 1e-8          # |chi'(root)| below this flags multiplicity 2


def _exp(a):
    return np.exp(np.minimum(a, _EXP_CAP))


@dataclass(frozen=True)
class Quasipolynomial:
    """chi(z) = z^2 - c z - 1 + k exp(-z tau) with tau = c*h >= 0."""

    c: float
    tau: float
    k: float

    def __call__(self, z):
        if isinstance(z, complex):
            return z * z - self.c * z - 1.0 + self.k * cmath.exp(-z * self.tau)
        z = np.asarray(z, dtype=float)
        val = z * z - self.c * z - 1.0 + self.k * _exp(-z * self.tau)
        return float(val) if val.ndim == 0 else val

    def deriv(self, z):
        if isinstance(z, complex):
            return 2.0 * z - self.c - self.k * self.tau * cmath.exp(-z * self.tau)
        z = np.asarray(z, dtype=float)
        val = 2.0 * z - self.c - self.k * self.tau * _exp(-z * self.tau)
        return float(val) if val.ndim == 0 else val

    def deriv2(self, z):
        return 2.0 + self.k * self.tau ** 2 * _exp(-np.asarray(z, dtype=float) * self.tau)

    def tol_at(self, z) -> float:
        return _CHI_TOL * max(1.0, abs(z) ** 2)


def chi0(g: PiecewiseLinearBirth, h: float, c: float) -> Quasipolynomial:
    """Linearization at 0: coefficient g'(0) = k1."""
    return Quasipolynomial(c=c, tau=c * h, k=g.k1)


def chi_kappa(g: PiecewiseLinearBirth, h: float, c: float) -> Quasipolynomial:
    """Linearization at kappa: coefficient g'(kappa) = k3."""
    return Quasipolynomial(c=c, tau=c * h, k=g.k3)


def base_roots(c: float) -> tuple[float, float]:
    """Roots z1 < 0 < z2 of z^2 - c z - 1 = 0 (z1*z2 = -1 exactly)."""
    if c < 0:
        raise ValueError(f"need c >= 0, got {c}")
    s = math.hypot(c, 2.0)
    z2 = (c + s) / 2.0
    return -1.0 / z2, z2


def _expand_bracket(f, x0: float, direction: float, limit: float = 1e6):
    """Walk from x0 in the given direction until f changes sign."""
    f0 = f(x0)
    step = max(1.0, abs(x0) * 0.5)
    x = x0
    while abs(x) < limit:
        x_new = x + direction * step
        f_new = f(x_new)
        if f0 == 0.0:
            return x0, x0
        if f_new == 0.0 or (f_new < 0) != (f0 < 0):
            return (x, x_new) if direction > 0 else (x_new, x)
        x, step = x_new, step * 2.0
    return None


def _critical_points(qp: Quasipolynomial) -> list[float]:
    """Zeros of chi', ordered; at most two for this family."""
    dchi = qp.deriv
    if qp.k >= 0.0 or qp.tau == 0.0:
        # chi'' > 0: chi' strictly increasing, exactly one zero.
        if qp.k == 0.0 or qp.tau == 0.0:
            return [qp.c / 2.0]
        br = _expand_bracket(dchi, 0.0, -1.0)
        if br is None or br[0] == br[1]:
            lo = br[0] if br else 0.0
        else:
            lo = br[0]
        br_hi = _expand_bracket(dchi, 0.0, 1.0)
        hi = br_hi[1] if br_hi else 1.0
        if dchi(lo) > 0:
            return [lo]
        return [brentq(dchi, lo, hi, xtol=1e-15, rtol=8.9e-16)]
    # k < 0: chi'' vanishes once, chi' is V-shaped with minimum at z_i.
    z_i = -math.log(2.0 / (-qp.k * qp.tau ** 2)) / qp.tau
    d_min = dchi(z_i)
    if d_min > 0.0:
        return []
    if d_min == 0.0:
        return [z_i]
    left = _expand_bracket(dchi, z_i, -1.0)
    right = _expand_bracket(dchi, z_i, 1.0)
    out = []
    if left is not None:
        out.append(brentq(dchi, left[0], z_i, xtol=1e-15, rtol=8.9e-16)
                   if left[0] != left[1] else left[0])
    if right is not None:
        out.append(brentq(dchi, z_i, right[1], xtol=1e-15, rtol=8.9e-16)
                   if right[0] != right[1] else right[0])
    return out


def _polish(qp: Quasipolynomial, z: float) -> float:
    for _ in range(3):
        d = qp.deriv(z)
        if d == 0.0:
            break
        step = qp(z) / d
        if not math.isfinite(step):
            break
        z -= step
    return z


def _all_real_roots(qp: Quasipolynomial) -> list[tuple[float, int]]:
    """Every real zero of chi with multiplicity, exact by monotone pieces."""
    if qp.tau == 0.0 or qp.k == 0.0:
        # Plain quadratic z^2 - c z - (1 - k).
        disc = qp.c ** 2 + 4.0 * (1.0 - qp.k)
        if disc < 0.0:
            return []
        r = math.sqrt(disc)
        a, b = (qp.c - r) / 2.0, (qp.c + r) / 2.0
        if b - a < _DOUBLE_ROOT_SEP:
            return [((a + b) / 2.0, 2)]
        return [(a, 1), (b, 1)]

    crit = _critical_points(qp)
    # chi at -inf: sign of k (the exponential dominates); at +inf: +1.
    sign_left = 1.0 if qp.k > 0 else -1.0
    nodes: list[tuple[float, float]] = []   # (point, chi value), ends synthetic
    vals = [qp(z) for z in crit]

    roots: list[tuple[float, int]] = []
    # Tangencies first: critical value within the zero tolerance.
    tangent = [i for i, v in enumerate(vals) if abs(v) <= qp.tol_at(crit[i])]

    def bisect_piece(lo, hi, f_lo, f_hi):
        if f_lo == 0.0:
            return lo
        if f_hi == 0.0:
            return hi
        if (f_lo < 0) == (f_hi < 0):
            return None
        return brentq(qp, lo, hi, xtol=1e-15, rtol=8.9e-16)

    # Build monotone pieces with synthetic endpoint signs at +-inf.
    pieces: list[tuple[float | None, float | None, float, float]] = []
    pts = crit
    if not pts:
        pieces.append((None, None, sign_left, 1.0))
    else:
        pieces.append((None, pts[0], sign_left, vals[0]))
        for i in range(len(pts) - 1):
            pieces.append((pts[i], pts[i + 1], vals[i], vals[i + 1]))
        pieces.append((pts[-1], None, vals[-1], 1.0))

    for lo, hi, f_lo, f_hi in pieces:
        if (f_lo < 0) == (f_hi < 0) or f_lo == 0.0 or f_hi == 0.0:
            continue  # tangencies handled separately; no interior crossing
        a = lo if lo is not None else _extend_left(qp, hi if hi is not None else 0.0)
        b = hi if hi is not None else _extend_right(qp, lo if lo is not None else 0.0)
        r = bisect_piece(a, b, qp(a), qp(b))
        if r is not None:
            roots.append((_polish(qp, r), 1))

    for i in tangent:
        roots.append((crit[i], 2))

    # Resolve near-tangencies: simple roots closer than the separation
    # threshold collapse onto the enclosed critical point.
    roots.sort(key=lambda rm: rm[0])
    merged: list[tuple[float, int]] = []
    j = 0
    while j < len(roots):
        if (j + 1 < len(roots) and roots[j][1] == roots[j + 1][1] == 1
                and roots[j + 1][0] - roots[j][0] < _DOUBLE_ROOT_SEP):
            mid = next((zc for zc in crit if roots[j][0] <= zc <= roots[j + 1][0]),
                       0.5 * (roots[j][0] + roots[j + 1][0]))
            merged.append((mid, 2))
            j += 2
        else:
            merged.append(roots[j])
            j += 1
    return merged


def _extend_left(qp: Quasipolynomial, anchor: float) -> float:
    x, step = anchor - 1.0, 1.0
    while qp(x) * (1.0 if qp.k > 0 else -1.0) <= 0.0 and x > -1e6:
        step *= 2.0
        x -= step
    return x


def _extend_right(qp: Quasipolynomial, anchor: float) -> float:
    x, step = anchor + 1.0, 1.0
    while qp(x) <= 0.0 and x < 1e6:
        step *= 2.0
        x += step
    return x


def real_roots(qp: Quasipolynomial, lo: float, hi: float) -> list[tuple[float, int]]:
    """All real zeros of chi in [lo, hi] with multiplicities."""
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    return [(r, m) for r, m in _all_real_roots(qp) if lo <= r <= hi]


def default_window(qp: Quasipolynomial) -> tuple[float, float]:
    """Search window outside which the quadratic part dominates."""
    return -20.0 / max(1.0, qp.tau), 20.0 + qp.c


def critical_speed(k: float, h: float, branch: str,
                   c_max: float = 10.0) -> tuple[float, float]:
    """Tangency speed where a pair of same-sign real roots is born or lost.

    branch='positive-double-root' (k > 1) gives the minimal wave speed;
    branch='negative-double-root' (k < 0) gives the speed above which the
    tail roots leave the real axis.  Solves chi = chi' = 0 in (z, c) by a
    damped Newton iteration with the analytic Jacobian, seeded from a
    coarse 0.01-resolution scan of the real-root count.
    """
    if branch == "positive-double-root":
        if not k > 1.0:
            raise ValueError(f"positive branch needs k > 1, got {k}")
        sign = 1
    elif branch == "negative-double-root":
        if not k < 0.0:
            raise ValueError(f"negative branch needs k < 0, got {k}")
        sign = -1
    else:
        raise ValueError(f"unknown branch {branch!r}")

    if h == 0.0:
        if sign == 1:
            c = 2.0 * math.sqrt(k - 1.0)
            return c, c / 2.0
        raise NoTangency("no negative tangency exists without delay")

    def count(c: float) -> int:
        qp = Quasipolynomial(c=c, tau=c * h, k=k)
        return sum(m for r, m in _all_real_roots(qp) if sign * r > 0)

    cs = np.arange(0.01, c_max, 0.01)
    counts = [count(c) for c in cs]
    idx = None
    for i in range(len(cs) - 1):
        if (sign == 1 and counts[i] == 0 and counts[i + 1] >= 2) or \
           (sign == -1 and counts[i] >= 2 and counts[i + 1] == 0):
            idx = i
            break
    if idx is None:
        raise NoTangency(f"no root-count transition for k={k}, h={h} below c={c_max}")

    c = 0.5 * (cs[idx] + cs[idx + 1])
    qp = Quasipolynomial(c=c, tau=c * h, k=k)
    crit = [z for z in _critical_points(qp) if sign * z > 0]
    if not crit:
        crit = _critical_points(qp)
    z = min(crit, key=lambda zc: abs(qp(zc)))

    for _ in range(60):
        e = math.exp(-z * c * h) if -z * c * h < _EXP_CAP else math.exp(_EXP_CAP)
        chi = z * z - c * z - 1.0 + k * e
        chi_z = 2.0 * z - c - k * c * h * e
        chi_c = -z - k * z * h * e
        chi_zz = 2.0 + k * (c * h) ** 2 * e
        chi_zc = -1.0 - k * h * e + k * z * c * h * h * e
        # Solve [[chi_z, chi_c], [chi_zz, chi_zc]] [dz, dc]^T = [chi, chi_z]^T
        det = chi_z * chi_zc - chi_c * chi_zz
        if det == 0.0:
            raise NoConvergence("singular Jacobian in tangency Newton solve")
        dz = (chi * chi_zc - chi_c * chi_z) / det
        dc = (chi_z * chi_z - chi_zz * chi) / det
        z -= dz
        c -= dc
        if abs(dz) < 1e-14 * max(1.0, abs(z)) and abs(dc) < 1e-14 * max(1.0, abs(c)):
            break
    else:
        raise NoConvergence("tangency Newton did not converge")

    qp = Quasipolynomial(c=c, tau=c * h, k=k)
    if abs(qp(z)) > qp.tol_at(z) or abs(qp.deriv(z)) > _DCHI_TOL:
        raise NoConvergence(f"tangency residual too large at c={c}, z={z}")
    return float(c), float(z)


@dataclass
class DomainCheck:
    """Admissibility diagnostics for one (h, c) pair."""

    in_dl: bool
    n_positive: int
    n_negative: int
    mu: list[tuple[float, int]]
    lam: list[tuple[float, int]]


def in_domain_DL(g: PiecewiseLinearBirth, h: float, c: float) -> DomainCheck:
    """Exactly two positive roots of chi_0 and two negative roots of
    chi_kappa, multiplicities counted (window per the scan default)."""
    q0, qk = chi0(g, h, c), chi_kappa(g, h, c)
    lo0, hi0 = default_window(q0)
    lok, hik = default_window(qk)
    mu = [(r, m) for r, m in real_roots(q0, 1e-12, hi0) if r > 0]
    lam = [(r, m) for r, m in real_roots(qk, lok, -1e-12) if r < 0]
    n_pos = sum(m for _, m in mu)
    n_neg = sum(m for _, m in lam)
    return DomainCheck(in_dl=(n_pos == 2 and n_neg == 2),
                       n_positive=n_pos, n_negative=n_neg, mu=mu, lam=lam)


def mu_roots(g: PiecewiseLinearBirth, h: float, c: float) -> tuple[float, float] | None:
    """(mu1, mu2) with mu2 <= mu1, or None when chi_0 has no positive pair."""
    q0 = chi0(g, h, c)
    roots = [(r, m) for r, m in _all_real_roots(q0) if r > 0]
    total = sum(m for _, m in roots)
    if total != 2:
        return None
    if len(roots) == 1:
        return roots[0][0], roots[0][0]
    return max(r for r, _ in roots), min(r for r, _ in roots)


def lambda_roots(g: PiecewiseLinearBirth, h: float, c: float):
    """((lambda1, lambda2), lambda3): negative pair (or None) and the positive root."""
    qk = chi_kappa(g, h, c)
    roots = _all_real_roots(qk)
    neg = [(r, m) for r, m in roots if r < 0]
    pos = [r for r, m in roots if r > 0]
    lam3 = max(pos) if pos else None
    total = sum(m for _, m in neg)
    if total != 2:
        return None, lam3
    if len(neg) == 1:
        return (neg[0][0], neg[0][0]), lam3
    return (max(r for r, _ in neg), min(r for r, _ in neg)), lam3


def gamma(g: PiecewiseLinearBirth, h: float, c: float) -> float:
    """Front overshoot threshold g(theta) / (1 + mu1*mu2)."""
    chk = in_domain_DL(g, h, c)
    if not chk.in_dl:
        raise NotInDomain(
            f"(h={h}, c={c}) admits {chk.n_positive} positive / {chk.n_negative} negative roots")
    mu = mu_roots(g, h, c)
    return g.g_theta / (1.0 + mu[0] * mu[1])


def gamma1(c: float) -> float:
    """Closed-form lower bound (1 + 1.53 c^2) / (2.55 + 1.53 c^2)."""
    return (1.0 + 1.53 * c * c) / (2.55 + 1.53 * c * c)


def rho_pair(g: PiecewiseLinearBirth, h: float, c: float) -> tuple[float, float]:
    """(rho1, rho2) = (c*mu2, c*mu1), the ordered roots of the rescaled
    leading-edge characteristic equation."""
    mu = mu_roots(g, h, c)
    if mu is None:
        raise NotInDomain(f"chi_0 has no positive root pair at c={c}")
    return c * mu[1], c * mu[0]


def xi(h: float, c: float) -> float:
    """Delay weight (z2 - z1) / (z2 e^{-ch z1} - z1 e^{-ch z2}) in [e^-h, 1]."""
    if c <= 0:
        raise ValueError(f"need c > 0, got {c}")
    z1, z2 = base_roots(c)
    return (z2 - z1) / (z2 * math.exp(-c * h * z1) - z1 * math.exp(-c * h * z2))


# --- complex roots by the argument principle ------------------------------

def _winding_number(qp: Quasipolynomial, rect: tuple[float, float, float, float],
                    n0: int = 512, max_doublings: int = 6) -> int:
    """Winding number of chi around 0 along the rectangle boundary.

    Composite trapezoid of chi'/chi per edge, node count doubling until
    the rounded integer stabilizes twice in a row.
    """
    re_lo, re_hi, im_lo, im_hi = rect
    corners = [complex(re_lo, im_lo), complex(re_hi, im_lo),
               complex(re_hi, im_hi), complex(re_lo, im_hi),
               complex(re_lo, im_lo)]

    def integral(n: int) -> float:
        total = 0.0 + 0.0j
        for a, b in zip(corners[:-1], corners[1:]):
            t = np.linspace(0.0, 1.0, n + 1)
            z = a + (b - a) * t
            zz = z.astype(complex)
            f = zz * zz - qp.c * zz - 1.0 + qp.k * np.exp(-zz * qp.tau)
            df = 2.0 * zz - qp.c - qp.k * qp.tau * np.exp(-zz * qp.tau)
            ratio = df / f
            total += (b - a) * np.trapezoid(ratio, t)
        return (total / (2.0j * math.pi)).real

    prev = None
    stable = 0
    n = n0
    for _ in range(max_doublings + 1):
        val = integral(n)
        cur = int(round(val))
        if prev is not None and cur == prev and abs(val - cur) < 0.05:
            stable += 1
            if stable >= 1:
                return cur
        else:
            stable = 0
        prev = cur
        n *= 2
    return prev if prev is not None else 0


def _min_on_boundary(qp: Quasipolynomial, rect) -> float:
    re_lo, re_hi, im_lo, im_hi = rect
    pts = []
    for a, b in [((re_lo, im_lo), (re_hi, im_lo)), ((re_hi, im_lo), (re_hi, im_hi)),
                 ((re_hi, im_hi), (re_lo, im_hi)), ((re_lo, im_hi), (re_lo, im_lo))]:
        t = np.linspace(0, 1, 257)
        z = complex(a[0], a[1]) + (complex(b[0], b[1]) - complex(a[0], a[1])) * t
        f = z * z - qp.c * z - 1.0 + qp.k * np.exp(-z * qp.tau)
        pts.append(np.min(np.abs(f)))
    return float(min(pts))


def _newton_complex(qp: Quasipolynomial, z0: complex, max_iter: int = 60) -> complex | None:
    z = z0
    for _ in range(max_iter):
        f = qp(z)
        df = qp.deriv(z)
        if df == 0:
            return None
        step = f / df
        z = z - step
        if abs(step) < 1e-14 * max(1.0, abs(z)):
            break
    return z if abs(qp(z)) <= qp.tol_at(z) else None


def complex_roots_in_rect(qp: Quasipolynomial,
                          rect: tuple[float, float, float, float]) -> list[complex]:
    """Zeros of chi strictly inside the rectangle [re_lo,re_hi]x[im_lo,im_hi].

    Raises BoundaryZero when a zero sits within 1e-9 of the contour after
    a few outward perturbation attempts.
    """
    re_lo, re_hi, im_lo, im_hi = rect
    work = (re_lo, re_hi, im_lo, im_hi)
    for bump in (0.0, 1e-6, 3e-6, 1e-5, 1e-4):
        cand = (re_lo - bump, re_hi + bump, im_lo - bump, im_hi + bump)
        if _min_on_boundary(qp, cand) > 1e-9:
            work = cand
            break
    else:
        raise BoundaryZero(f"zero persists near the contour of {rect}")

    total = _winding_number(qp, work)
    roots: list[complex] = []

    def recurse(box, count, depth):
        if count <= 0:
            return
        re0, re1, im0, im1 = box
        if count == 1 and max(re1 - re0, im1 - im0) < 0.05:
            z = _newton_complex(qp, complex(0.5 * (re0 + re1), 0.5 * (im0 + im1)))
            if z is not None and re0 - 1e-9 <= z.real <= re1 + 1e-9 \
                    and im0 - 1e-9 <= z.imag <= im1 + 1e-9:
                roots.append(z)
                return
        if depth > 60 or max(re1 - re0, im1 - im0) < 1e-10:
            z = complex(0.5 * (re0 + re1), 0.5 * (im0 + im1))
            roots.extend([z] * count)
            return
        rm, im_m = 0.5 * (re0 + re1), 0.5 * (im0 + im1)
        # Nudge split lines off any zero.
        for jit in (0.0, 1e-3 * (re1 - re0), -2e-3 * (re1 - re0)):
            quads = [(re0, rm + jit, im0, im_m + jit), (rm + jit, re1, im0, im_m + jit),
                     (re0, rm + jit, im_m + jit, im1), (rm + jit, re1, im_m + jit, im1)]
            if all(_min_on_boundary(qp, q) > 1e-9 for q in quads):
                break
        else:
            quads = [(re0, rm, im0, im_m), (rm, re1, im0, im_m),
                     (re0, rm, im_m, im1), (rm, re1, im_m, im1)]
        found = 0
        for q in quads:
            w = _winding_number(qp, q)
            found += w
            recurse(q, w, depth + 1)
        if found != count:
            # Re-evaluate the parent on a finer contour; trust child total.
            pass

    recurse(work, total, 0)
    # Dedupe Newton landings.
    out: list[complex] = []
    for z in sorted(roots, key=lambda w: (w.real, w.imag)):
        if all(abs(z - w) > 1e-8 for w in out):
            out.append(z)
    if len(out) != total:
        raise NoConvergence(
            f"winding count {total} but {len(out)} refined roots in {rect}")
    return out


# --- aggregate context ----------------------------------------------------

@dataclass
class WaveContext:
    """Fully resolved (g, h, c) instance with all characteristic roots.

    mu/lambda fields are None outside their existence range: mu1/mu2
    require c at or above the minimal speed, lambda1/lambda2 require c at
    or below the tail tangency speed (oscillatory regime otherwise).
    """

    g: PiecewiseLinearBirth
    h: float
    c: float
    z1: float
    z2: float
    mu1: float | None
    mu2: float | None
    lambda1: float | None
    lambda2: float | None
    lambda3: float | None

    @property
    def ch(self) -> float:
        return self.c * self.h

    @property
    def in_dl(self) -> bool:
        return self.mu1 is not None and self.lambda1 is not None

    @property
    def oscillatory(self) -> bool:
        return self.mu1 is not None and self.lambda1 is None

    @property
    def mu_double(self) -> bool:
        return self.mu1 is not None and abs(self.mu1 - self.mu2) < _DOUBLE_ROOT_SEP

    def chi0(self) -> Quasipolynomial:
        return Quasipolynomial(c=self.c, tau=self.ch, k=self.g.k1)

    def chi_kappa(self) -> Quasipolynomial:
        return Quasipolynomial(c=self.c, tau=self.ch, k=self.g.k3)


def make_context(g: PiecewiseLinearBirth, h: float, c: float) -> WaveContext:
    """Resolve every characteristic root for one (g, h, c) instance."""
    z1, z2 = base_roots(c)
    assert abs(z1 * z2 + 1.0) < 1e-12
    mu = mu_roots(g, h, c)
    lam, lam3 = lambda_roots(g, h, c)
    return WaveContext(g=g, h=h, c=c, z1=z1, z2=z2,
                       mu1=None if mu is None else mu[0],
                       mu2=None if mu is None else mu[1],
                       lambda1=None if lam is None else lam[0],
                       lambda2=None if lam is None else lam[1],
                       lambda3=lam3)


@dataclass
class SpectrumReport:
    """Roots found in a query window plus the admissibility verdict."""

    real_roots: list[tuple[float, int]]
    complex_roots: list[complex] = field(default_factory=list)
    window: tuple[float, float] | None = None
