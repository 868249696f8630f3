"""Joe-Clayton (BB7) and symmetrized Joe-Clayton copulas.

The Joe-Clayton copula with upper/lower tail-dependence coefficients
(lambda_u, lambda_l) in (0,1)^2 is

    C(u, v) = 1 - (1 - [ (1-(1-u)^k)^-r + (1-(1-v)^k)^-r - 1 ]^(-1/r))^(1/k)

with k = 1/log2(2 - lambda_u) and r = -1/log2(lambda_l).  The symmetrized
variant mixes the copula with its own survival copula so that lambda_u and
lambda_l are exactly the upper and lower tail-dependence coefficients:

    C_s(u, v) = 0.5 * ( C(u, v | lu, ll) + C(1-u, 1-v | ll, lu) + u + v - 1 )

Note the parameter swap in the reflected term.  Some published statements of
the symmetrized form omit the swap; with the unswapped version both tail
coefficients collapse to 0.5*(lambda_u + lambda_l).  The unswapped variant
remains available through ``paper_literal=True`` on every operation so the
two behaviours can be compared directly.

All functions are pure, accept scalars or arrays, and clamp unit-interval
inputs to [1e-12, 1 - 1e-12] so intermediates stay finite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "TailParams",
    "ShapeParams",
    "UnitPair",
    "UNIT_EPS",
    "LAMBDA_MIN",
    "LAMBDA_MAX",
    "DENSITY_FLOOR",
    "shape_from_tail",
    "tail_from_shape",
    "jc_cdf",
    "jc_pdf",
    "jc_logpdf",
    "jc_conditional",
    "sjc_cdf",
    "sjc_pdf",
    "sjc_logpdf",
    "sjc_conditional",
    "tail_coefficient_diagnostic",
]

# Unit-interval clamp applied to every (u, v) input.
UNIT_EPS = 1e-12
# Evaluation domain for the tail coefficients; the k/r transforms blow up at
# the boundary and the likelihood surface is flat there.
LAMBDA_MIN = 1e-6
LAMBDA_MAX = 1.0 - 1e-6
# Densities are floored here so log-likelihoods stay finite.
DENSITY_FLOOR = 1e-300

_LOG_DENSITY_FLOOR = np.log(DENSITY_FLOOR)


@dataclass(frozen=True)
class TailParams:
    """Upper and lower tail-dependence coefficients, each in open (0,1)."""

    lambda_u: float
    lambda_l: float

    def __post_init__(self) -> None:
        lu, ll = float(self.lambda_u), float(self.lambda_l)
        if not (np.isfinite(lu) and np.isfinite(ll)):
            raise ValueError("tail coefficients must be finite")
        if not (0.0 < lu < 1.0 and 0.0 < ll < 1.0):
            raise ValueError(
                f"tail coefficients must lie strictly in (0,1), got ({lu}, {ll})"
            )
        object.__setattr__(self, "lambda_u", lu)
        object.__setattr__(self, "lambda_l", ll)

    def swapped(self) -> "TailParams":
        return TailParams(self.lambda_l, self.lambda_u)


@dataclass(frozen=True)
class ShapeParams:
    """Joe parameter k >= 1 and Clayton parameter r > 0."""

    k: float
    r: float

    def __post_init__(self) -> None:
        if not (self.k >= 1.0 and self.r > 0.0):
            raise ValueError(f"require k >= 1 and r > 0, got ({self.k}, {self.r})")


@dataclass(frozen=True)
class UnitPair:
    """A point of the unit square, clamped into the open interior."""

    u: float
    v: float

    def __post_init__(self) -> None:
        u, v = float(self.u), float(self.v)
        if not (np.isfinite(u) and np.isfinite(v)):
            raise ValueError("coordinates must be finite")
        if not (0.0 <= u <= 1.0 and 0.0 <= v <= 1.0):
            raise ValueError(f"coordinates must lie in [0,1], got ({u}, {v})")
        object.__setattr__(self, "u", float(np.clip(u, UNIT_EPS, 1.0 - UNIT_EPS)))
        object.__setattr__(self, "v", float(np.clip(v, UNIT_EPS, 1.0 - UNIT_EPS)))


def _clip_lambda(value: float) -> float:
    return float(min(max(value, LAMBDA_MIN), LAMBDA_MAX))


def shape_from_tail(params: TailParams) -> ShapeParams:
    """Map (lambda_u, lambda_l) to the Joe-Clayton shape parameters (k, r)."""
    lu = _clip_lambda(params.lambda_u)
    ll = _clip_lambda(params.lambda_l)
    k = 1.0 / np.log2(2.0 - lu)
    r = -1.0 / np.log2(ll)
    return ShapeParams(float(k), float(r))


def tail_from_shape(shape: ShapeParams) -> TailParams:
    """Inverse of :func:`shape_from_tail`: lambda_u = 2 - 2^(1/k), lambda_l = 2^(-1/r)."""
    return TailParams(2.0 - 2.0 ** (1.0 / shape.k), 2.0 ** (-1.0 / shape.r))


def _coerce_uv(u, v):
    u = np.clip(np.asarray(u, dtype=float), UNIT_EPS, 1.0 - UNIT_EPS)
    v = np.clip(np.asarray(v, dtype=float), UNIT_EPS, 1.0 - UNIT_EPS)
    return u, v


def _maybe_scalar(x: np.ndarray):
    return float(x) if np.ndim(x) == 0 else x


# ---------------------------------------------------------------------------
# Joe-Clayton core.  Everything is evaluated in log space from
#   A = -r*log(T_u),  B = -r*log(T_v),  T_x = 1 - (1-x)^k,
#   log S = log(e^A + e^B - 1)  (S >= 1),  W = S^(-1/r).

_LN2 = float(np.log(2.0))


def _log1mexp(w: np.ndarray) -> np.ndarray:
    """log(1 - e^w) for w <= 0, branch-stable for both w -> 0- and w -> -inf."""
    w = np.asarray(w, dtype=float)
    shape = w.shape
    w = np.atleast_1d(w)
    small = w > -_LN2  # 1 - e^w < 0.5: expm1 keeps the residual exact
    out = np.empty_like(w)
    out[small] = np.log(np.maximum(-np.expm1(w[small]), 1e-300))
    out[~small] = np.log1p(-np.exp(w[~small]))
    return out.reshape(shape)


def _jc_pieces(u: np.ndarray, v: np.ndarray, k: float, r: float):
    """Shared intermediates: log(1-u), log(1-v), log T_u, log T_v, log S."""
    log1mu = np.log1p(-u)
    log1mv = np.log1p(-v)
    log_tu = _log1mexp(k * log1mu)
    log_tv = _log1mexp(k * log1mv)
    a = -r * log_tu
    b = -r * log_tv
    m = np.maximum(a, b)
    # e^A + e^B - 1 = e^M * (1 + [expm1(A-M) + expm1(B-M) - expm1(-M)])
    rest = np.expm1(a - m) + np.expm1(b - m) - np.expm1(-m)
    log_s = m + np.log1p(rest)
    return log1mu, log1mv, log_tu, log_tv, log_s


def _jc_cdf_kr(u: np.ndarray, v: np.ndarray, k: float, r: float) -> np.ndarray:
    _, _, _, _, log_s = _jc_pieces(u, v, k, r)
    return np.clip(-np.expm1(_log1mexp(-log_s / r) / k), 0.0, 1.0)


def _jc_logpdf_kr(u: np.ndarray, v: np.ndarray, k: float, r: float) -> np.ndarray:
    log1mu, log1mv, log_tu, log_tv, log_s = _jc_pieces(u, v, k, r)
    log_w = -log_s / r
    w = np.exp(log_w)
    bracket = np.maximum(k * (1.0 + r) - w * (1.0 + k * r), 1e-300)
    return (
        -(r + 1.0) * (log_tu + log_tv)
        + (k - 1.0) * (log1mu + log1mv)
        + (1.0 / k - 2.0) * _log1mexp(log_w)
        + log_w
        - 2.0 * log_s
        + np.log(bracket)
    )


def _jc_conditional_kr(u: np.ndarray, v: np.ndarray, k: float, r: float) -> np.ndarray:
    """h(v|u) = dC/du for the Joe-Clayton copula, a conditional CDF in v."""
    log1mu, _, log_tu, _, log_s = _jc_pieces(u, v, k, r)
    log_w = -log_s / r
    log_h = (
        (1.0 / k - 1.0) * _log1mexp(log_w)
        + (-1.0 / r - 1.0) * log_s
        + (-r - 1.0) * log_tu
        + (k - 1.0) * log1mu
    )
    return np.clip(np.exp(log_h), 0.0, 1.0)


def _shapes(params: TailParams) -> tuple[float, float]:
    s = shape_from_tail(params)
    return s.k, s.r


# ---------------------------------------------------------------------------
# Public surface.


def jc_cdf(u, v, params: TailParams):
    """Joe-Clayton copula CDF at (u, v)."""
    u, v = _coerce_uv(u, v)
    k, r = _shapes(params)
    return _maybe_scalar(_jc_cdf_kr(u, v, k, r))


def jc_logpdf(u, v, params: TailParams):
    """Log of the Joe-Clayton copula density (analytic second mixed partial)."""
    u, v = _coerce_uv(u, v)
    k, r = _shapes(params)
    return _maybe_scalar(np.maximum(_jc_logpdf_kr(u, v, k, r), _LOG_DENSITY_FLOOR))


def jc_pdf(u, v, params: TailParams):
    """Joe-Clayton copula density, floored at ``DENSITY_FLOOR``."""
    u, v = _coerce_uv(u, v)
    k, r = _shapes(params)
    return _maybe_scalar(np.maximum(np.exp(_jc_logpdf_kr(u, v, k, r)), DENSITY_FLOOR))


def jc_conditional(u, v, params: TailParams):
    """Conditional CDF h(v|u) = dC_JC/du."""
    u, v = _coerce_uv(u, v)
    k, r = _shapes(params)
    return _maybe_scalar(_jc_conditional_kr(u, v, k, r))


def _reflected_params(params: TailParams, paper_literal: bool) -> TailParams:
    return params if paper_literal else params.swapped()


def sjc_cdf(u, v, params: TailParams, *, paper_literal: bool = False):
    """Symmetrized Joe-Clayton copula CDF.

    ``paper_literal=True`` passes (lambda_u, lambda_l) unswapped to the
    reflected term, which equalizes the two tail coefficients at
    0.5*(lambda_u + lambda_l).
    """
    u, v = _coerce_uv(u, v)
    k1, r1 = _shapes(params)
    k2, r2 = _shapes(_reflected_params(params, paper_literal))
    direct = _jc_cdf_kr(u, v, k1, r1)
    reflected = _jc_cdf_kr(1.0 - u, 1.0 - v, k2, r2)
    return _maybe_scalar(0.5 * (direct + reflected + u + v - 1.0))


def sjc_logpdf(u, v, params: TailParams, *, paper_literal: bool = False):
    """Log density of the symmetrized Joe-Clayton copula."""
    u, v = _coerce_uv(u, v)
    k1, r1 = _shapes(params)
    k2, r2 = _shapes(_reflected_params(params, paper_literal))
    log_direct = _jc_logpdf_kr(u, v, k1, r1)
    log_reflected = _jc_logpdf_kr(1.0 - u, 1.0 - v, k2, r2)
    out = np.log(0.5) + np.logaddexp(log_direct, log_reflected)
    return _maybe_scalar(np.maximum(out, _LOG_DENSITY_FLOOR))


def sjc_pdf(u, v, params: TailParams, *, paper_literal: bool = False):
    """Density of the symmetrized Joe-Clayton copula, floored at ``DENSITY_FLOOR``."""
    out = np.exp(sjc_logpdf(u, v, params, paper_literal=paper_literal))
    return _maybe_scalar(np.maximum(out, DENSITY_FLOOR))


def sjc_conditional(u, v, params: TailParams, *, paper_literal: bool = False):
    """Conditional CDF h(v|u) = dC_SJC/du, nondecreasing in v with range (0,1)."""
    u, v = _coerce_uv(u, v)
    k1, r1 = _shapes(params)
    k2, r2 = _shapes(_reflected_params(params, paper_literal))
    h_direct = _jc_conditional_kr(u, v, k1, r1)
    h_reflected = _jc_conditional_kr(1.0 - u, 1.0 - v, k2, r2)
    return _maybe_scalar(np.clip(0.5 * (h_direct + 1.0 - h_reflected), 0.0, 1.0))


def tail_coefficient_diagnostic(
    params: TailParams,
    eps_grid,
    *,
    paper_literal: bool = False,
) -> tuple[np.ndarray, np.ndarray]:
    """Finite-eps approximations of the tail-dependence limits.

    For each eps, the lower sequence is C(eps, eps)/eps and the upper one is
    (1 - 2(1-eps) + C(1-eps, 1-eps))/eps; they converge to lambda_l and
    lambda_u as eps -> 0.

    Parameters
    ----------
    params : TailParams
    eps_grid : array_like
        Strictly decreasing positive grid, e.g. [1e-2, 1e-3, 1e-4, 1e-5].

    Returns
    -------
    (upper_seq, lower_seq) : tuple of ndarray
    """
    eps = np.asarray(eps_grid, dtype=float)
    if eps.ndim != 1 or eps.size == 0:
        raise ValueError("eps_grid must be a nonempty 1-D sequence")
    if np.any(eps <= 0.0) or np.any(np.diff(eps) >= 0.0):
        raise ValueError("eps_grid must be strictly decreasing toward 0")
    lower = sjc_cdf(eps, eps, params, paper_literal=paper_literal) / eps
    c_hi = sjc_cdf(1.0 - eps, 1.0 - eps, params, paper_literal=paper_literal)
    upper = (1.0 - 2.0 * (1.0 - eps) + c_hi) / eps
    return np.asarray(upper), np.asarray(lower)
