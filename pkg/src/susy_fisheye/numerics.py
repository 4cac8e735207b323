"""Independent numerical oracles used to validate every closed form.

The four routines here (adaptive Gauss-Kronrod quadrature, Richardson
finite differences, a Numerov zero-energy march and a two-sided shooting
eigensolver) are deliberately self-contained: they never call into the
analytic evaluators they are meant to check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .do_core import Profile

__all__ = [
    "ConvergenceError",
    "StepUnderflowError",
    "BracketError",
    "QuadratureResult",
    "ShootingConfig",
    "integrate_adaptive",
    "derivative",
    "numerov_zero_energy",
    "shooting_bound_states",
]


class ConvergenceError(RuntimeError):
    """Adaptive quadrature exhausted its subdivision budget."""


class StepUnderflowError(RuntimeError):
    """Finite-difference step below the resolvable floor."""


class BracketError(RuntimeError):
    """Energy bracket provably contains no bound state although one was requested."""


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    subdivisions: int


@dataclass(frozen=True)
class ShootingConfig:
    """Domain, grid and bracket for the two-sided shooting eigensolver.

    The defaults ([-12, 12], 4001 points, bisection to 1e-8) keep the
    tails of unit-width sech^2 wells below 1e-10 at the boundaries.
    """

    domain: tuple = (-12.0, 12.0)
    points: int = 4001
    energy_bracket: tuple = (-25.0, -1e-6)
    tol: float = 1e-8

    def __post_init__(self):
        x_min, x_max = self.domain
        if not x_min < x_max:
            raise ValueError("domain must satisfy x_min < x_max")
        if self.points < 3 or self.points % 2 == 0:
            raise ValueError("points must be an odd integer >= 3")
        e_lo, e_hi = self.energy_bracket
        if not e_lo < e_hi < 0:
            raise ValueError("energy bracket must satisfy e_lo < e_hi < 0")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


# --------------------------------------------------------------------------
# Adaptive quadrature: 7-point Gauss / 15-point Kronrod pair with bisection
# of the worst panel until the summed error estimate meets the tolerance.
# --------------------------------------------------------------------------

_XGK_HALF = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
)
_WGK_HALF = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
)
_WGK_CENTER = 0.209482141084728
_WG_HALF = (0.129484966168870, 0.279705391489277, 0.381830050505119)
_WG_CENTER = 0.417959183673469

_NODES = np.concatenate(
    [-np.array(_XGK_HALF), [0.0], np.array(_XGK_HALF)[::-1]]
)
_WEIGHTS_K = np.concatenate(
    [np.array(_WGK_HALF), [_WGK_CENTER], np.array(_WGK_HALF)[::-1]]
)
_WEIGHTS_G = np.zeros(15)
_WEIGHTS_G[[1, 3, 5]] = _WG_HALF
_WEIGHTS_G[7] = _WG_CENTER
_WEIGHTS_G[[9, 11, 13]] = _WG_HALF[::-1]


def _eval_vectorized(f, x):
    """Call f on an array, falling back to an elementwise loop."""
    try:
        y = np.asarray(f(x), dtype=float)
        if y.shape == x.shape:
            return y
    except (TypeError, ValueError):
        pass
    return np.array([float(f(xi)) for xi in x])


def _gk15(f, a, b):
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    y = _eval_vectorized(f, center + half * _NODES)
    if not np.all(np.isfinite(y)):
        raise ValueError(f"non-finite integrand value on [{a}, {b}]")
    k15 = half * float(_WEIGHTS_K @ y)
    g7 = half * float(_WEIGHTS_G @ y)
    # scaled error estimate in the classic Kronrod style: sharp for smooth
    # integrands, with a round-off floor tied to the absolute integral
    resabs = half * float(_WEIGHTS_K @ np.abs(y))
    resasc = half * float(_WEIGHTS_K @ np.abs(y - k15 / (b - a)))
    err = abs(k15 - g7)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    err = max(err, 50.0 * np.finfo(float).eps * resabs)
    return k15, err


def integrate_adaptive(f, a, b, tol=1e-10, max_subdivisions=2000) -> QuadratureResult:
    """Integrate f over [a, b] to the requested absolute tolerance.

    The worst panel (largest |K15 - G7| discrepancy) is bisected until the
    summed error estimate drops below tol; a ConvergenceError reports the
    running estimate if the subdivision budget runs out first.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if b < a:
        raise ValueError("integration requires a <= b")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0)
    panels = [(_gk15(f, a, b) + (a, b))]
    while True:
        total_err = math.fsum(p[1] for p in panels)
        if total_err <= tol:
            value = math.fsum(p[0] for p in panels)
            return QuadratureResult(value, total_err, len(panels))
        if len(panels) >= max_subdivisions:
            raise ConvergenceError(
                f"quadrature error {total_err:.3e} above tol {tol:.3e} "
                f"after {len(panels)} panels"
            )
        worst = max(range(len(panels)), key=lambda i: panels[i][1])
        _, _, pa, pb = panels.pop(worst)
        mid = 0.5 * (pa + pb)
        panels.append(_gk15(f, pa, mid) + (pa, mid))
        panels.append(_gk15(f, mid, pb) + (mid, pb))


# --------------------------------------------------------------------------
# Derivatives: central differences refined by Richardson extrapolation.
# --------------------------------------------------------------------------


def derivative(f, x, order=1, h0=None) -> float:
    """First or second derivative of f at x, expected accuracy O(h^4) or better.

    Central-difference stencils are evaluated on the step ladder h0, h0/2,
    ... and combined in a Richardson (Neville) tableau; the diagonal entry
    with the smallest error estimate is returned.  Steps are never allowed
    to collapse below 1e-10 max(1, |x|).
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    scale = max(1.0, abs(x))
    h_min = 1e-10 * scale
    if h0 is None:
        h0 = 0.05 * scale
    if h0 <= 0:
        raise ValueError("h0 must be positive")
    if h0 < h_min:
        raise StepUnderflowError(f"step {h0} below floor {h_min}")

    def stencil(h):
        if order == 1:
            return (f(x + h) - f(x - h)) / (2.0 * h)
        return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)

    best = math.nan
    best_err = math.inf
    rows = []
    h = h0
    worse = 0
    for _ in range(12):
        if h < h_min:
            break
        row = [stencil(h)]
        if rows:
            prev = rows[-1]
            fac = 1.0
            for j in range(len(prev)):
                fac *= 4.0
                row.append((fac * row[j] - prev[j]) / (fac - 1.0))
            err = abs(row[-1] - prev[-1]) + abs(row[-1] - row[-2])
            if err < best_err:
                best, best_err = row[-1], err
                worse = 0
            else:
                worse += 1
                if worse >= 2:
                    break
        rows.append(row)
        h *= 0.5
    if math.isnan(best):
        # single row: no extrapolation possible, return the bare stencil
        best = rows[0][0]
    return best


# --------------------------------------------------------------------------
# Numerov march for -u'' + U u = 0 (zero energy).
# --------------------------------------------------------------------------


def numerov_zero_energy(potential, grid, u0, u1) -> Profile:
    """March -u'' + U(rho) u = 0 across a uniform grid from two seed values.

    Uses the standard Numerov update (O(h^6) local accuracy); raises
    OverflowError once |u| exceeds 1e300, which signals that the
    non-normalizable branch has taken over.
    """
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size < 3:
        raise ValueError("grid must be one-dimensional with at least 3 points")
    steps = np.diff(g)
    h = steps[0]
    if h <= 0 or not np.allclose(steps, h, rtol=1e-8, atol=0.0):
        raise ValueError("grid must be uniform and increasing")
    u_pot = _eval_vectorized(potential, g)
    c = (1.0 - (h * h / 12.0) * u_pot).tolist()
    u = [0.0] * g.size
    u[0], u[1] = float(u0), float(u1)
    for i in range(1, g.size - 1):
        u[i + 1] = ((12.0 - 10.0 * c[i]) * u[i] - c[i - 1] * u[i - 1]) / c[i + 1]
        if abs(u[i + 1]) > 1e300:
            raise OverflowError(
                f"Numerov solution exceeded 1e300 at rho = {g[i + 1]}"
            )
    return Profile(g, np.array(u))


# --------------------------------------------------------------------------
# Two-sided shooting with node-count bisection and log-derivative matching.
# --------------------------------------------------------------------------


def _march_left_full(c, g_edge, h, n, m):
    """Full left-to-right Numerov march counting every sign change.

    By the Sturm oscillation argument the node count of the left-decaying
    solution over the whole domain equals the number of eigenvalues below
    the march energy.  The values at indices m-1, m, m+1 are captured for
    the log-derivative match; the running pair is renormalized whenever it
    grows past 1e250 (captured values inside the window are rescaled too,
    so all ratios stay exact).
    """
    ratio = math.exp(min(math.sqrt(max(g_edge, 0.0)) * h, 50.0))
    u_prev, u_cur = 1e-120, 1e-120 * ratio
    nodes = 0
    trio = [0.0, 0.0, 0.0]
    if m - 1 <= 1:
        trio[0] = u_cur if m - 1 == 1 else u_prev
    for i in range(2, n):
        u_next = ((12.0 - 10.0 * c[i - 1]) * u_cur - c[i - 2] * u_prev) / c[i]
        if (u_next < 0.0 < u_cur) or (u_cur < 0.0 < u_next):
            nodes += 1
        u_prev, u_cur = u_cur, u_next
        if i == m - 1:
            trio[0] = u_cur
        elif i == m:
            trio[1] = u_cur
        elif i == m + 1:
            trio[2] = u_cur
        if abs(u_cur) > 1e250:
            u_prev *= 1e-200
            u_cur *= 1e-200
            if i < m + 1:
                trio = [t * 1e-200 for t in trio]
    return nodes, trio[0], trio[1], trio[2]


def _march_right(c, g_edge, h, n, m):
    """Right-to-left Numerov march down to index m-1; returns that trio."""
    ratio = math.exp(min(math.sqrt(max(g_edge, 0.0)) * h, 50.0))
    u_prev, u_cur = 1e-120, 1e-120 * ratio  # values at n-1, n-2
    trio = [0.0, 0.0, 0.0]  # indices m+1, m, m-1
    if m + 1 >= n - 2:
        trio[0] = u_cur if m + 1 == n - 2 else u_prev
    for i in range(n - 3, m - 2, -1):
        u_next = ((12.0 - 10.0 * c[i + 1]) * u_cur - c[i + 2] * u_prev) / c[i]
        u_prev, u_cur = u_cur, u_next
        if i == m + 1:
            trio[0] = u_cur
        elif i == m:
            trio[1] = u_cur
        elif i == m - 1:
            trio[2] = u_cur
        if abs(u_cur) > 1e250:
            u_prev *= 1e-200
            u_cur *= 1e-200
            if i > m - 1:
                trio = [t * 1e-200 for t in trio]
    return trio[0], trio[1], trio[2]


def _solve_at_energy(v_arr, h, m, n, energy):
    """Node count below `energy` and the log-derivative mismatch at index m."""
    c = (1.0 - (h * h / 12.0) * (v_arr - energy)).tolist()
    nodes, ul_mm, ul_m, ul_mp = _march_left_full(c, float(v_arr[0]) - energy, h, n, m)
    ur_mp, ur_m, ur_mm = _march_right(c, float(v_arr[-1]) - energy, h, n, m)
    if ul_m == 0.0 or ur_m == 0.0:
        mismatch = math.inf
    else:
        d_left = (ul_mp - ul_mm) / (2.0 * h * ul_m)
        d_right = (ur_mp - ur_mm) / (2.0 * h * ur_m)
        mismatch = d_left - d_right
    return nodes, mismatch


def shooting_bound_states(potential, config=None, max_states=8):
    """All bound-state energies inside the configured bracket, ascending.

    Each eigenvalue is located by bisection on the matched-solution node
    count, then polished by bisecting the log-derivative mismatch of the
    two one-sided Numerov solutions at the potential minimum.  Raises
    BracketError when the node counts at the bracket ends coincide (no
    state in the bracket) but at least one state was requested.
    """
    cfg = config if config is not None else ShootingConfig()
    if max_states < 0:
        raise ValueError("max_states must be non-negative")
    x = np.linspace(cfg.domain[0], cfg.domain[1], cfg.points)
    h = float(x[1] - x[0])
    v = _eval_vectorized(potential, x)
    n = cfg.points
    m = int(np.argmin(v))
    m = min(max(m, 2), n - 3)
    e_lo, e_hi = cfg.energy_bracket

    def solve(energy):
        return _solve_at_energy(v, h, m, n, energy)

    nodes_lo = solve(e_lo)[0]
    nodes_hi = solve(e_hi)[0]
    available = nodes_hi - nodes_lo
    if available <= 0:
        if max_states > 0:
            raise BracketError(
                f"node count {nodes_lo} at both bracket ends: no bound state "
                f"in ({e_lo}, {e_hi})"
            )
        return []

    found = []
    for k in range(min(available, max_states)):
        target = nodes_lo + k + 1
        a, b = e_lo, e_hi
        # node-count bisection down to a narrow window around the jump
        while (b - a) > 64.0 * cfg.tol:
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            if solve(mid)[0] >= target:
                b = mid
            else:
                a = mid
        # polish on the log-derivative mismatch when it brackets a sign change
        fa, fb = solve(a)[1], solve(b)[1]
        if math.isfinite(fa) and math.isfinite(fb) and fa * fb < 0.0:
            while (b - a) > cfg.tol:
                mid = 0.5 * (a + b)
                if mid <= a or mid >= b:
                    break
                fm = solve(mid)[1]
                if not math.isfinite(fm):
                    break
                if fa * fm <= 0.0:
                    b, fb = mid, fm
                else:
                    a, fa = mid, fm
        else:
            while (b - a) > cfg.tol:
                mid = 0.5 * (a + b)
                if mid <= a or mid >= b:
                    break
                if solve(mid)[0] >= target:
                    b = mid
                else:
                    a = mid
        found.append(0.5 * (a + b))
    return found
