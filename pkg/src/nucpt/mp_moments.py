"""Complementary incomplete moments of the Marchenko-Pastur and quarter-circle laws.

Every minimax-MSE formula in this package is assembled from the integrals

    P_gamma(x; k) = (1 / (2 pi gamma)) * integral_{max(x, gamma_-)}^{gamma_+}
                    t^(k-1) sqrt((gamma_+ - t)(t - gamma_-)) dt,

with edges gamma_+- = (1 +- sqrt(gamma))^2, and their quarter-circle
specialisation Q_k(x) (the gamma = 1 case after the change of variables
t = s^2).  P is evaluated by Gauss-Legendre quadrature after the
trigonometric substitution t = gamma_- + (gamma_+ - gamma_-) sin^2(phi),
which removes both square-root endpoint singularities (and, for gamma = 1,
the t^(-1/2) singularity at the origin), leaving a smooth integrand.
Q_k has closed forms and is exact to machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["MpShape", "mp_incomplete_moment", "quarter_circle_moment"]

_SUPPORTED_ORDERS = (0.0, 0.5, 1.0)

# 200-node rule on a smooth integrand is far beyond the 1e-10 target.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(200)


@dataclass(frozen=True)
class MpShape:
    """Aspect parameter gamma of a Marchenko-Pastur law, with its bulk edges.

    Only 0 < gamma <= 1 arises from the curves in this package (the rank
    fractions map into that range whenever the aspect ratio is <= 1).
    """

    gamma: float
    gamma_minus: float = field(init=False)
    gamma_plus: float = field(init=False)

    def __post_init__(self):
        if not 0.0 < self.gamma <= 1.0:
            raise ValueError(f"gamma must be in (0, 1], got {self.gamma}")
        root = np.sqrt(self.gamma)
        object.__setattr__(self, "gamma_minus", (1.0 - root) ** 2)
        object.__setattr__(self, "gamma_plus", (1.0 + root) ** 2)


def mp_incomplete_moment(shape: MpShape, x: float, k: float) -> float:
    """Complementary incomplete moment P_gamma(x; k) of order k in {0, 1/2, 1}.

    Parameters
    ----------
    shape : MpShape
        Law parameter gamma with its edges.
    x : float
        Lower truncation point, x >= 0.
    k : float
        Moment order; only 0, 1/2 and 1 are used by the minimax formulas.

    Returns
    -------
    float
        The integral above; 0 when x >= gamma_plus.
    """
    if k not in _SUPPORTED_ORDERS:
        raise ValueError(f"moment order must be one of {_SUPPORTED_ORDERS}, got {k}")
    if x < 0:
        raise ValueError(f"truncation point must be nonnegative, got {x}")
    gm, gp = shape.gamma_minus, shape.gamma_plus
    if x >= gp:
        return 0.0
    lo = max(x, gm)
    phi0 = np.arcsin(np.sqrt((lo - gm) / (gp - gm)))
    half = 0.5 * (np.pi / 2 - phi0)
    phi = (phi0 + half) + half * _GL_NODES
    s2 = np.sin(phi) ** 2
    t = gm + (gp - gm) * s2
    # dt = 2 (gp-gm) sin cos dphi and sqrt((gp-t)(t-gm)) = (gp-gm) sin cos
    integrand = t ** (k - 1.0) * 2.0 * (gp - gm) ** 2 * s2 * np.cos(phi) ** 2
    value = half * float(np.dot(_GL_WEIGHTS, integrand))
    return value / (2.0 * np.pi * shape.gamma)


def quarter_circle_moment(x: float, k: int) -> float:
    """Complementary incomplete moment Q_k(x) of the quarter-circle law.

    The law has density sqrt(4 - t^2) / pi on [0, 2]; Q_k truncates the
    k-th moment integral below at x.  Closed forms, exact to rounding:

        Q_0(x) = 1 - x sqrt(4-x^2) / (2 pi) - (2/pi) asin(x/2)
        Q_1(x) = (4 - x^2)^(3/2) / (3 pi)
        Q_2(x) = 1 - x sqrt(4-x^2) (x^2 - 2) / (4 pi) - (2/pi) asin(x/2)
    """
    if not 0.0 <= x <= 2.0:
        raise ValueError(f"x must be in [0, 2], got {x}")
    if k not in (0, 1, 2):
        raise ValueError(f"k must be 0, 1 or 2, got {k}")
    s = np.sqrt(max(4.0 - x * x, 0.0))
    if k == 0:
        return 1.0 - x * s / (2.0 * np.pi) - (2.0 / np.pi) * np.arcsin(x / 2.0)
    if k == 1:
        return (4.0 - x * x) ** 1.5 / (3.0 * np.pi)
    return 1.0 - x * s * (x * x - 2.0) / (4.0 * np.pi) - (2.0 / np.pi) * np.arcsin(x / 2.0)
