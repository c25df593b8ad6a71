"""Asymptotic minimax MSE curves of optimally tuned singular-value thresholding.

Two matrix classes are covered: general real matrices ("mat", aspect ratio
beta = M/N <= 1) and symmetric positive-semidefinite matrices ("sym").
The curve value at rank fraction rho is

    mat:  inf_L  proxy(alpha=1,   rho, rho_tilde = beta * rho; L)
    sym:  inf_L  proxy(alpha=1/2, rho, rho_tilde = rho;        L)

where the proxy assembles Marchenko-Pastur incomplete moments at the
squared threshold.  The minimiser is the unique root of a scalar equation
and is found by bisection.  For the square case the proxy has an exact
trigonometric form, the minimising threshold is 2 sin(theta) for the root
theta of a transcendental equation, and the whole curve admits a
parametric representation; all three routes agree to rounding error and
are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mp_moments import MpShape, mp_incomplete_moment, quarter_circle_moment

__all__ = [
    "MAT",
    "SYM",
    "CurveQuery",
    "ProxyParams",
    "proxy",
    "proxy_square",
    "argmin_lambda",
    "minimax_mse",
    "lambda_star",
    "solve_theta",
    "parametric_curve",
    "small_rho_slope",
]

MAT = "mat"
SYM = "sym"


@dataclass(frozen=True)
class CurveQuery:
    """A point on a minimax curve: rank fraction, aspect ratio, matrix class."""

    rho: float
    beta: float = 1.0
    ensemble: str = MAT

    def __post_init__(self):
        if self.ensemble not in (MAT, SYM):
            raise ValueError(f"ensemble must be '{MAT}' or '{SYM}', got {self.ensemble!r}")
        if not 0.0 <= self.rho <= 1.0:
            raise ValueError(f"rho must be in [0, 1], got {self.rho}")
        if not 0.0 < self.beta <= 1.0:
            raise ValueError(f"beta must be in (0, 1], got {self.beta}")
        if self.ensemble == SYM and self.beta != 1.0:
            raise ValueError("sym ensemble requires beta = 1")

    def params(self) -> "ProxyParams":
        if self.ensemble == SYM:
            return ProxyParams(alpha=0.5, rho=self.rho, rho_tilde=self.rho)
        return ProxyParams(alpha=1.0, rho=self.rho, rho_tilde=self.beta * self.rho)


@dataclass(frozen=True)
class ProxyParams:
    """Arguments of the threshold-MSE proxy.

    alpha is 1 for general matrices (rho_tilde = beta * rho) and 1/2 for the
    symmetric PSD class (rho_tilde = rho).  The induced Marchenko-Pastur
    aspect is gamma = (rho_tilde - rho*rho_tilde) / (rho - rho*rho_tilde),
    which lies in (0, 1] whenever 0 < rho < 1 and rho_tilde <= rho.
    """

    alpha: float
    rho: float
    rho_tilde: float

    def __post_init__(self):
        if self.alpha not in (1.0, 0.5):
            raise ValueError(f"alpha must be 1 or 1/2, got {self.alpha}")
        if not 0.0 < self.rho <= 1.0:
            raise ValueError(f"rho must be in (0, 1], got {self.rho}")
        if not 0.0 < self.rho_tilde <= self.rho:
            raise ValueError(
                f"rho_tilde must be in (0, rho], got {self.rho_tilde} with rho={self.rho}"
            )

    @property
    def gamma(self) -> float:
        r, rt = self.rho, self.rho_tilde
        return (rt - r * rt) / (r - r * rt)

    @property
    def shape(self) -> MpShape:
        return MpShape(self.gamma)


def _moment_bracket(shape: MpShape, lam: float) -> float:
    """P(L^2;1) - 2 L P(L^2;1/2) + L^2 P(L^2;0), the bulk-noise MSE term."""
    l2 = lam * lam
    return (
        mp_incomplete_moment(shape, l2, 1.0)
        - 2.0 * lam * mp_incomplete_moment(shape, l2, 0.5)
        + l2 * mp_incomplete_moment(shape, l2, 0.0)
    )


def proxy(params: ProxyParams, lambda_thresh: float) -> float:
    """Asymptotic MSE of singular-value thresholding at a fixed threshold.

    Returns

        rho + rho_tilde - rho*rho_tilde
        + (1 - rho_tilde) * [ rho * L^2
                              + alpha (1 - rho) * (P(L^2;1) - 2 L P(L^2;1/2)
                                                   + L^2 P(L^2;0)) ]

    with the moments taken at the gamma induced by (rho, rho_tilde).  At
    rho = 1 the moment bracket has coefficient zero and the value is exact
    without quadrature.
    """
    if lambda_thresh < 0:
        raise ValueError(f"threshold must be nonnegative, got {lambda_thresh}")
    r, rt, lam = params.rho, params.rho_tilde, lambda_thresh
    head = r + rt - r * rt
    if r == 1.0:
        return head + (1.0 - rt) * r * lam * lam
    bulk = _moment_bracket(params.shape, lam)
    return head + (1.0 - rt) * (r * lam * lam + params.alpha * (1.0 - r) * bulk)


def proxy_square(alpha: float, rho: float, lambda_thresh: float) -> float:
    """Square-case (rho_tilde = rho) proxy via quarter-circle closed forms.

    Algebraically identical to ``proxy`` at gamma = 1; used as an
    independent cross-check since it involves no quadrature.
    """
    lam = lambda_thresh
    bulk = (
        quarter_circle_moment(lam, 2)
        - 2.0 * lam * quarter_circle_moment(lam, 1)
        + lam * lam * quarter_circle_moment(lam, 0)
    )
    return rho * (2.0 - rho) + (1.0 - rho) * (
        rho * lam * lam + alpha * (1.0 - rho) * bulk
    )


def argmin_lambda(params: ProxyParams, iters: int = 60) -> float:
    """Minimising threshold of the proxy, by bisection.

    The minimiser is the unique root in (0, sqrt(gamma_plus)) of

        P(L^2; 1/2) / L  -  P(L^2; 0)  =  rho / (alpha (1 - rho)),

    whose left side decreases from +inf to 0.  60 bisection steps shrink
    the bracket below 1e-12.
    """
    if not 0.0 < params.rho < 1.0:
        raise ValueError(f"argmin_lambda requires 0 < rho < 1, got {params.rho}")
    shape = params.shape
    rhs = params.rho / (params.alpha * (1.0 - params.rho))

    def excess(lam: float) -> float:
        l2 = lam * lam
        return (
            mp_incomplete_moment(shape, l2, 0.5) / lam
            - mp_incomplete_moment(shape, l2, 0.0)
            - rhs
        )

    lo = 1e-9
    hi = np.sqrt(shape.gamma_plus) - 1e-9
    if excess(lo) <= 0.0 or excess(hi) >= 0.0:
        raise ValueError(f"no sign change on the bracket for params {params}")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def minimax_mse(rho, beta: float = 1.0, ensemble: str = MAT) -> float:
    """Value of the asymptotic minimax MSE curve.

    Accepts either a ``CurveQuery`` or scalar arguments.  Returns exactly 0
    at rho = 0 and exactly 1 at rho = 1 (the scalar equation degenerates at
    the endpoints).
    """
    query = rho if isinstance(rho, CurveQuery) else CurveQuery(rho, beta, ensemble)
    if query.rho == 0.0:
        return 0.0
    if query.rho == 1.0:
        return 1.0
    params = query.params()
    return proxy(params, argmin_lambda(params))


def lambda_star(rho, beta: float = 1.0, ensemble: str = MAT) -> float:
    """Minimising threshold for a curve point, with its endpoint limits.

    rho = 0 returns the bulk edge sqrt(gamma_plus) of the limiting law
    (gamma -> beta for mat, 1 for sym); rho = 1 returns 0.
    """
    query = rho if isinstance(rho, CurveQuery) else CurveQuery(rho, beta, ensemble)
    if query.rho == 0.0:
        gamma = query.beta if query.ensemble == MAT else 1.0
        return 1.0 + np.sqrt(gamma)
    if query.rho == 1.0:
        return 0.0
    return argmin_lambda(query.params())


def _schedule(theta: float) -> float:
    """theta + cot(theta) (1 - cos^2(theta)/3); strictly decreasing on (0, pi/2)."""
    c, s = np.cos(theta), np.sin(theta)
    return theta + (c / s) * (1.0 - c * c / 3.0)


def solve_theta(alpha: float, rho: float, iters: int = 90) -> float:
    """Square-case minimiser angle: the root of the transcendental equation

        theta + cot(theta) (1 - cos^2(theta)/3)
            = pi (1 + rho/alpha - rho) / (2 (1 - rho)),

    with 2 sin(theta) equal to ``argmin_lambda`` at rho_tilde = rho.  The
    left side decreases from +inf at 0+ to pi/2 at pi/2, so bisection on
    (0, pi/2] applies.
    """
    if alpha not in (1.0, 0.5):
        raise ValueError(f"alpha must be 1 or 1/2, got {alpha}")
    if not 0.0 < rho < 1.0:
        raise ValueError(f"solve_theta requires 0 < rho < 1, got {rho}")
    rhs = np.pi * (1.0 + rho / alpha - rho) / (2.0 * (1.0 - rho))
    lo, hi = 1e-12, np.pi / 2
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if _schedule(mid) > rhs:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _parametric_point(ensemble: str, theta: float) -> tuple[float, float]:
    f = _schedule(theta)
    if ensemble == MAT:
        alpha = 1.0
        rho = 1.0 - (np.pi / 2.0) / f
    else:
        alpha = 0.5
        rho = (f - np.pi / 2.0) / (f + np.pi / 2.0)
    bulk = (np.pi - 2.0 * theta) * (1.25 - np.cos(theta) ** 2) + (
        np.sin(2.0 * theta) / 12.0
    ) * (np.cos(2.0 * theta) - 14.0)
    mse = (
        2.0 * rho
        - rho * rho
        + 4.0 * rho * (1.0 - rho) * np.sin(theta) ** 2
        + alpha * (4.0 / np.pi) * (1.0 - rho) ** 2 * bulk
    )
    return rho, mse


def parametric_curve(ensemble: str, theta_grid) -> list[tuple[float, float]]:
    """Square-case minimax curve as (rho, mse) pairs swept by the angle.

    As theta runs over (0, pi/2) the pair traces the whole curve, with
    theta -> pi/2 giving (0, 0) and theta -> 0 giving (1, 1).  Each pair
    agrees with ``minimax_mse`` at the same rho to rounding error.
    """
    if ensemble not in (MAT, SYM):
        raise ValueError(f"ensemble must be '{MAT}' or '{SYM}', got {ensemble!r}")
    thetas = np.asarray(theta_grid, dtype=float)
    if np.any((thetas <= 0.0) | (thetas >= np.pi / 2)):
        raise ValueError("theta grid must lie strictly inside (0, pi/2)")
    return [_parametric_point(ensemble, float(t)) for t in thetas]


def small_rho_slope(beta: float) -> float:
    """Leading small-rho slope 2 (1 + beta + sqrt(beta)) of the mat curve;
    equals 6 in the square case."""
    if not 0.0 < beta <= 1.0:
        raise ValueError(f"beta must be in (0, 1], got {beta}")
    return 2.0 * (1.0 + beta + np.sqrt(beta))
