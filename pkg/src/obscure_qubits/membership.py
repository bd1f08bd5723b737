"""Membership-function models.

A model maps the real membership amplitudes of a state to membership
functions (degrees of truth) in ``[0, 1]``.  Three models ship:

``born``
    mu_i = alpha_i ** 2, valid for any dimension.
``arc``
    arcs on the membership ellipse, mu_0 = (2/pi) atan(alpha_1/alpha_0).
``circle-square``
    the circle-to-square homeomorphism applied to the amplitudes.

New models can be added by extending :class:`MembershipModel` and the
dispatch table in :func:`evaluate`.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import DomainError, UnknownNameError

DEFAULT_TOL = 1e-9


class MembershipModel(enum.Enum):
    BORN = "born"
    ARC = "arc"
    CIRCLE_SQUARE = "circle-square"

    @classmethod
    def from_name(cls, name: "str | MembershipModel") -> "MembershipModel":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise UnknownNameError(
                f"unknown membership model {name!r}; expected one of "
                + ", ".join(m.value for m in cls)
            ) from None


def born_membership(alpha) -> np.ndarray:
    """Born-like membership: the squares of the amplitudes."""
    alpha = np.asarray(alpha, dtype=float)
    return alpha**2


def arc_membership(alpha0: float, alpha1: float, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Arc model for a two-level state.

    Uses the two-argument arctangent so that a zero denominator gives pi/2.
    Note the labeling: full amplitude on ``|0>`` gives ``mu_0 = 0``.
    """
    if alpha0 < -tol or alpha1 < -tol:
        raise DomainError(f"arc model needs non-negative amplitudes, got ({alpha0}, {alpha1})")
    alpha0 = max(alpha0, 0.0)
    alpha1 = max(alpha1, 0.0)
    if alpha0 == 0.0 and alpha1 == 0.0:
        raise DomainError("arc model is undefined for (0, 0)")
    mu0 = 2.0 / math.pi * math.atan2(alpha1, alpha0)
    mu1 = 2.0 / math.pi * math.atan2(alpha0, alpha1)
    return mu0, mu1


def _signed_square(x: float) -> float:
    return x * x * float(np.sign(x))


def _arcsin_sqrt(arg: float, tol: float) -> float:
    if arg < -tol or arg > 1.0 + tol:
        raise DomainError(f"circle-square model: arcsin argument {arg!r} outside [0, 1]")
    arg = min(max(arg, 0.0), 1.0)
    return 2.0 / math.pi * math.asin(math.sqrt(arg))


def circle_square_membership(
    alpha0: float, alpha1: float, tol: float = DEFAULT_TOL
) -> tuple[float, float]:
    """Circle-to-square model; accepts signed amplitudes with sign(0) = 0."""
    s0 = _signed_square(alpha0)
    s1 = _signed_square(alpha1)
    mu0 = _arcsin_sqrt((s0 - s1 + 1.0) / 2.0, tol)
    mu1 = _arcsin_sqrt((s0 + s1 + 1.0) / 2.0, tol)
    return mu0, mu1


def outcome_bounds(mu0: float, mu1: float) -> tuple[float, float]:
    """Lower and upper membership of the outcome.

    upper = max(min(mu0, 1-mu1), min(1-mu0, mu1))
    lower = min(max(mu0, 1-mu1), max(1-mu0, mu1))
    """
    for mu in (mu0, mu1):
        if not 0.0 <= mu <= 1.0:
            raise DomainError(f"membership value {mu!r} outside [0, 1]")
    upper = max(min(mu0, 1.0 - mu1), min(1.0 - mu0, mu1))
    lower = min(max(mu0, 1.0 - mu1), max(1.0 - mu0, mu1))
    return lower, upper


def evaluate(model, alpha, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Membership vector of ``alpha`` under ``model`` (name or enum)."""
    model = MembershipModel.from_name(model)
    alpha = np.asarray(alpha, dtype=float)
    if model is MembershipModel.BORN:
        return born_membership(alpha)
    if alpha.shape != (2,):
        raise DomainError(f"{model.value} model is defined for two amplitudes only, got {alpha.shape}")
    if model is MembershipModel.ARC:
        return np.array(arc_membership(alpha[0], alpha[1], tol))
    return np.array(circle_square_membership(alpha[0], alpha[1], tol))
