"""Certified extrema of polynomial moduli on circles |z| = r.

The scheme is sample-and-refine: the target is evaluated at a uniform
angular grid, every local extremum of the sampled sequence is bracketed,
and the best K brackets are polished by golden-section search.  For
polynomials the grid vastly oversamples (|P|^2 restricted to a circle is a
trigonometric polynomial of twice the degree), so the winning bracket is
expected to contain the true extremum; the reported certificate is the
Lipschitz bound over that final bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .poly import Polynomial

__all__ = [
    "CircleProbe",
    "ProbeConfig",
    "UnboundedRatioError",
    "extremum_on_circle",
    "max_modulus",
    "min_modulus",
    "ratio_max",
]

_TWO_PI = 2.0 * math.pi
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


class UnboundedRatioError(ValueError):
    """Raised when a ratio's denominator vanishes on the search circle."""


@dataclass(frozen=True)
class ProbeConfig:
    """Knobs for the sample-and-refine extremum search.

    samples must be a power of two >= 8 so that successively refined grids
    nest; refine_top is the number of bracketed local extrema polished by
    golden-section search; theta_rel_tol is the stopping width of the
    search bracket relative to the full circle.
    """

    samples: int = 4096
    refine_top: int = 8
    theta_rel_tol: float = 1e-13

    def __post_init__(self):
        if self.samples < 8 or (self.samples & (self.samples - 1)) != 0:
            raise ValueError("samples must be a power of two >= 8")
        if self.refine_top < 1:
            raise ValueError("refine_top must be >= 1")
        if not 0 < self.theta_rel_tol < 1e-3:
            raise ValueError("theta_rel_tol out of range")


@dataclass(frozen=True)
class CircleProbe:
    """One certified extremum on the circle of the given radius.

    ``certified_error`` bounds |true extremum - value| under the assumption
    that the winning refinement bracket captured the global extremum;
    ``samples_used`` counts every function evaluation spent.
    """

    radius: float
    value: float
    witness_angle: float
    certified_error: float
    samples_used: int

    @property
    def witness(self) -> complex:
        return self.radius * complex(math.cos(self.witness_angle), math.sin(self.witness_angle))


def _golden_refine(f: Callable[[float], float], a: float, b: float, tol: float,
                   seed_t: float, seed_v: float):
    """Golden-section maximization of f on [a, b].

    Returns (best angle, best value, final bracket width, evaluations).
    The best pair tracks every point actually evaluated, so the result
    never falls below the seed sample.
    """
    best = [seed_t, seed_v]
    evals = 0

    def probe(t: float) -> float:
        nonlocal evals
        evals += 1
        v = f(t)
        if v > best[1]:
            best[0], best[1] = t, v
        return v

    h = b - a
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc, fd = probe(c), probe(d)
    while h > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = probe(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = probe(d)
    return best[0], best[1], h, evals


def extremum_on_circle(f_vec: Callable[[np.ndarray], np.ndarray],
                       cfg: ProbeConfig | None = None,
                       maximize: bool = True):
    """Locate an extremum of a periodic function of the angle.

    ``f_vec`` maps an array of angles to an array of values.  Returns
    (value, witness_angle, final bracket width, evaluations).  Ties between
    equal extrema resolve to the smallest witness angle so reruns are
    reproducible.
    """
    cfg = cfg or ProbeConfig()
    n = cfg.samples
    grid = _TWO_PI * np.arange(n) / n
    vals = np.asarray(f_vec(grid), dtype=np.float64)
    if vals.shape != grid.shape:
        raise ValueError("f_vec must return one value per angle")
    evals = n

    sign = 1.0 if maximize else -1.0
    w = sign * vals

    # local maxima of the sampled sequence, with wraparound; non-strict
    # comparisons keep plateaus (e.g. constant modulus) eligible
    left = np.roll(w, 1)
    right = np.roll(w, -1)
    cand = np.nonzero((w >= left) & (w >= right))[0]
    if len(cand) == 0:
        cand = np.array([int(np.argmax(w))])
    order = np.argsort(w[cand])[::-1]
    top = cand[order[: cfg.refine_top]]

    def f_scalar(t: float) -> float:
        return sign * float(f_vec(np.array([t]))[0])

    h = _TWO_PI / n
    tol = cfg.theta_rel_tol * _TWO_PI
    results = []
    for idx in top:
        t0 = grid[idx]
        bt, bv, width, used = _golden_refine(f_scalar, t0 - h, t0 + h, tol, t0, w[idx])
        evals += used
        results.append((bv, bt % _TWO_PI, width))

    best_v = max(r[0] for r in results)
    winners = [r for r in results if r[0] == best_v]
    _, best_t, best_w = min(winners, key=lambda r: r[1])
    return sign * best_v, best_t, best_w, evals


def _modulus_probe(p: Polynomial, r: float, cfg: ProbeConfig, maximize: bool) -> CircleProbe:
    r = float(r)
    if not np.isfinite(r) or r <= 0.0:
        raise ValueError("radius must be finite and > 0")
    cfg = cfg or ProbeConfig()

    # search on |P|^2 to keep square roots out of the refinement loop
    def sq(thetas: np.ndarray) -> np.ndarray:
        vals = p.eval(r * np.exp(1j * thetas))
        return np.abs(np.atleast_1d(vals)) ** 2

    best_sq, theta, width, evals = extremum_on_circle(sq, cfg, maximize=maximize)
    value = math.sqrt(max(best_sq, 0.0))

    # Lipschitz certificate: the angular derivative of |P| on the circle is
    # at most degree * max|P|, so the extremum inside the final bracket
    # cannot beat the reported value by more than that slope times the
    # bracket radius.  The max search can use its own value as the scale;
    # the min search needs the circle-wide maximum.
    n = p.nominal_degree
    if maximize:
        scale = value
    else:
        coarse = np.sqrt(sq(_TWO_PI * np.arange(cfg.samples) / cfg.samples))
        evals += cfg.samples
        scale = float(coarse.max())
    certified = n * scale * width / 2.0
    return CircleProbe(radius=r, value=value, witness_angle=theta,
                       certified_error=certified, samples_used=evals)


def max_modulus(p: Polynomial, r: float, cfg: ProbeConfig | None = None) -> CircleProbe:
    """Certified maximum of |P(z)| over the circle |z| = r."""
    return _modulus_probe(p, r, cfg or ProbeConfig(), maximize=True)


def min_modulus(p: Polynomial, r: float, cfg: ProbeConfig | None = None) -> CircleProbe:
    """Certified minimum of |P(z)| over the circle |z| = r."""
    return _modulus_probe(p, r, cfg or ProbeConfig(), maximize=False)


def ratio_max(p_num: Polynomial, p_den: Polynomial, r: float,
              cfg: ProbeConfig | None = None) -> CircleProbe:
    """Maximum of |Pnum(z)| / |Pden(z)| over the circle |z| = r.

    Refuses denominators that vanish on the circle (within a small relative
    floor) since the ratio is then unbounded.
    """
    cfg = cfg or ProbeConfig()
    r = float(r)
    if not np.isfinite(r) or r <= 0.0:
        raise ValueError("radius must be finite and > 0")
    den_min = min_modulus(p_den, r, cfg)
    den_scale = 1.0 + float(np.abs(p_den.coeffs).max()) * max(r, 1.0) ** p_den.nominal_degree
    if den_min.value <= 1e-12 * den_scale:
        raise UnboundedRatioError(
            f"denominator modulus {den_min.value:.3e} vanishes on |z| = {r}"
        )

    def ratio(thetas: np.ndarray) -> np.ndarray:
        z = r * np.exp(1j * thetas)
        num = np.abs(np.atleast_1d(p_num.eval(z)))
        den = np.abs(np.atleast_1d(p_den.eval(z)))
        return num / den

    value, theta, width, evals = extremum_on_circle(ratio, cfg, maximize=True)
    n_tot = p_num.nominal_degree + p_den.nominal_degree
    certified = n_tot * value * width / 2.0
    return CircleProbe(radius=r, value=value, witness_angle=theta,
                       certified_error=certified,
                       samples_used=evals + den_min.samples_used)
