"""Dense complex polynomials with an explicit nominal degree.

Coefficients are stored in ascending powers; index k holds the coefficient
of z**k.  The nominal degree may exceed the index of the last nonzero
coefficient (trailing zeros are stored explicitly), because the conjugate
reciprocal of a polynomial depends on the degree it is *declared* to have,
not on where its coefficients happen to stop.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

__all__ = ["Polynomial", "from_roots", "axpy"]


def _as_finite_complex(values, what: str) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(values, dtype=np.complex128))
    if arr.ndim != 1:
        raise ValueError(f"{what} must be one-dimensional")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError(f"{what} must be finite (no NaN or infinity)")
    return arr


class Polynomial:
    """Immutable polynomial over the complex numbers.

    ``coeffs`` always has length ``nominal_degree + 1``.  Every operation
    returns a new instance; instances are safe to share across threads.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[complex] | np.ndarray, n: int | None = None):
        arr = _as_finite_complex(coeffs, "coefficients")
        if n is not None:
            if n < 0:
                raise ValueError("nominal degree must be >= 0")
            if len(arr) > n + 1:
                raise ValueError(
                    f"{len(arr)} coefficients exceed nominal degree {n}"
                )
            if len(arr) < n + 1:
                arr = np.concatenate([arr, np.zeros(n + 1 - len(arr), np.complex128)])
        arr.flags.writeable = False
        self._coeffs = arr

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def nominal_degree(self) -> int:
        return len(self._coeffs) - 1

    def effective_degree(self, rel_tol: float = 1e-14) -> int:
        """Index of the last coefficient that is not negligibly small.

        A coefficient counts as zero when its modulus is at most ``rel_tol``
        times the largest coefficient modulus.  Returns 0 for the zero
        polynomial.
        """
        mags = np.abs(self._coeffs)
        top = mags.max()
        if top == 0.0:
            return 0
        alive = np.nonzero(mags > rel_tol * top)[0]
        return int(alive[-1]) if len(alive) else 0

    def eval(self, z) -> complex | np.ndarray:
        """Evaluate by nested multiplication at a point or array of points."""
        zw = np.asarray(z, dtype=np.complex128)
        if not np.all(np.isfinite(zw.real)) or not np.all(np.isfinite(zw.imag)):
            raise ValueError("evaluation point must be finite")
        acc = np.full_like(zw, self._coeffs[-1])
        for c in self._coeffs[-2::-1]:
            acc = acc * zw + c
        if zw.ndim == 0:
            return complex(acc)
        return acc

    __call__ = eval

    def derivative(self) -> "Polynomial":
        """Formal derivative; degree drops by one (constants map to 0)."""
        if self.nominal_degree == 0:
            return Polynomial([0.0])
        k = np.arange(1, self.nominal_degree + 1)
        return Polynomial(self._coeffs[1:] * k)

    def dilate(self, R: float) -> "Polynomial":
        """The polynomial z -> P(R*z); coefficient k picks up a factor R**k."""
        R = float(R)
        if not np.isfinite(R) or R <= 0.0:
            raise ValueError("dilation factor must be finite and > 0")
        powers = R ** np.arange(self.nominal_degree + 1, dtype=np.float64)
        return Polynomial(self._coeffs * powers)

    def reciprocal(self) -> "Polynomial":
        """Conjugate reciprocal: coefficient k becomes conj(coeffs[n-k]).

        On the unit circle the reciprocal has the same modulus as the
        original, and applying the operation twice restores it exactly.
        """
        return Polynomial(np.conj(self._coeffs[::-1]))

    def to_json_dict(self) -> dict:
        return {
            "n": self.nominal_degree,
            "coeffs": [[float(c.real), float(c.imag)] for c in self._coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polynomial":
        try:
            n = int(data["n"])
            coeffs = [complex(re, im) for re, im in data["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed polynomial document: {exc}") from exc
        if len(coeffs) != n + 1:
            raise ValueError("coefficient count must equal n + 1")
        return cls(coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"


def from_roots(roots: Sequence[complex], leading: complex) -> Polynomial:
    """Build ``leading * prod(z - root)`` with one factor per listed root.

    The product is accumulated in the order the roots are given.  Each
    listed root evaluates to a numerical zero of the result.
    """
    leading = complex(leading)
    if leading == 0:
        raise ValueError("leading coefficient must be nonzero")
    if not np.isfinite(leading.real) or not np.isfinite(leading.imag):
        raise ValueError("leading coefficient must be finite")
    acc = np.array([leading], dtype=np.complex128)
    for root in roots:
        root = complex(root)
        if not np.isfinite(root.real) or not np.isfinite(root.imag):
            raise ValueError("roots must be finite")
        nxt = np.zeros(len(acc) + 1, dtype=np.complex128)
        nxt[1:] += acc
        nxt[:-1] -= root * acc
        acc = nxt
    return Polynomial(acc)


def axpy(a: complex, p: Polynomial, b: complex, s: Polynomial) -> Polynomial:
    """Pointwise linear combination ``a*P + b*S``.

    The shorter polynomial is zero-padded; the result keeps the larger
    nominal degree.
    """
    n = max(p.nominal_degree, s.nominal_degree)
    out = np.zeros(n + 1, dtype=np.complex128)
    out[: p.nominal_degree + 1] = complex(a) * p.coeffs
    out[: s.nominal_degree + 1] += complex(b) * s.coeffs
    return Polynomial(out)
