"""Numerical location of complex roots and limit-circle analytics.

Roots are found by simultaneous Aberth-Ehrlich iteration: every approximation
is updated with a Newton step corrected by the repulsion of its siblings.
The iteration state lives in complex doubles, but the Newton step p/p' is
computed adaptively: plain vectorized Horner while its running error bound
shows the double value is trustworthy, and exact fixed-point integer Horner
(on the original big-integer coefficients) once cancellation eats the double
significand.  That matters here: the larger family polynomials have binomial
coefficients beyond 10^100, and near their roots the coefficient-form value
is many orders of magnitude smaller than the terms being summed, so no fixed
floating-point precision can locate the roots -- the exact path can.

Multiple roots are not certified; they converge linearly and are reported as
tight clusters.  All iterations are deterministic: fixed initial guesses,
no randomness, and the exact path returns identical bits with or without
gmpy2 installed (gmpy2 only makes it faster).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import CapacityError, NonConvergenceError
from .polynomials import Poly, binomial_power

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # exactness is unaffected, only speed
    _mpz = int

#: Roots with |re| at or below this band are treated as imaginary-axis cases.
REAL_PART_GUARD = 1e-9

#: Nearly-real roots (|im| below this) count as real when matching Sturm counts.
NEAR_REAL_IM = 1e-9

#: Radius used to merge root clusters stemming from multiple roots.
CLUSTER_RADIUS = 1e-6

_MIN_TOL = 1e-14

#: Margin factor on the running error bound of the double-precision Horner.
_NOISE_MARGIN = 64.0


@dataclass(frozen=True)
class RootSet:
    """Nonzero roots of a polynomial, with the exactly-deflated zero root.

    Each root is (re, im, residual) where residual = |p(z)| / (||p||_1 *
    max(1, |z|)^deg), a scale-free backward-error measure evaluated with the
    exact coefficients; every residual is at most `tolerance`.  For real
    input the list is conjugate-symmetric.
    """

    zero_multiplicity: int
    roots: tuple[tuple[float, float, float], ...]
    tolerance: float
    coeff_scale_log2: int = 0

    def complex_roots(self) -> list[complex]:
        return [complex(re, im) for re, im, _ in self.roots]


@dataclass(frozen=True)
class CircleDeviation:
    max_dev: float
    mean_dev: float


# -- big-integer <-> float plumbing ------------------------------------------------


def _log2_abs(c: int) -> float:
    a = abs(c)
    bl = a.bit_length()
    if bl <= 53:
        return math.log2(a)
    return math.log2(a >> (bl - 53)) + (bl - 53)


def _scaled_float(c: int, down: int) -> float:
    """c / 2**down as a float, safe for integers beyond the double range."""
    if c == 0:
        return 0.0
    sign = -1.0 if c < 0 else 1.0
    a = abs(c)
    bl = a.bit_length()
    if bl > 64:
        a >>= bl - 64
        down -= bl - 64
    return sign * math.ldexp(float(a), -down)


def _float_to_fixed(x: float, fbits: int):
    """x * 2**fbits as an integer; exact whenever the shift is nonnegative."""
    if x == 0.0:
        return _mpz(0)
    m, e = math.frexp(x)
    v = _mpz(int(m * (1 << 53)))
    shift = fbits + e - 53
    return v << shift if shift >= 0 else v >> (-shift)


def _int_ratio_to_float(num, den) -> float:
    """num / den as a float for big integers (den > 0)."""
    if num == 0:
        return 0.0
    sign = -1.0 if num < 0 else 1.0
    num = abs(num)
    shift = 64 - (num.bit_length() - den.bit_length())
    if shift >= 0:
        q = (num << shift) // den
    else:
        q = num // (den << (-shift))
    try:
        return sign * math.ldexp(float(q), -shift)
    except OverflowError:
        return sign * math.inf


class _ExactEvaluator:
    """Newton steps and values of an integer polynomial in fixed point.

    Scale 2**fbits is chosen per point so that the truncation of each Horner
    step (one unit in the last place) stays below 2**-90 after amplification
    by the remaining multiplications: fbits = 96 + deg*log2|z| for |z| > 1.
    Shifted coefficient tables are cached per quantized fbits level.
    """

    def __init__(self, coeffs: tuple[int, ...]):
        self._coeffs = [_mpz(c) for c in coeffs]
        self._deg = len(coeffs) - 1
        self._tables: dict[int, list] = {}

    def fbits_for(self, z: complex) -> int:
        az = abs(z)
        extra = 0 if az <= 1.0 else int(self._deg * math.log2(az)) + 1
        return 96 + 64 * ((extra + 63) // 64)

    def _table(self, fbits: int) -> list:
        t = self._tables.get(fbits)
        if t is None:
            t = [c << fbits for c in self._coeffs]
            self._tables[fbits] = t
        return t

    def _horner_pair(self, z: complex, fbits: int):
        cf = self._table(fbits)
        zr = _float_to_fixed(z.real, fbits)
        zi = _float_to_fixed(z.imag, fbits)
        pr, pi = cf[-1], _mpz(0)
        dr, di = _mpz(0), _mpz(0)
        for c in reversed(cf[:-1]):
            nr, ni = (dr * zr - di * zi) >> fbits, (dr * zi + di * zr) >> fbits
            dr, di = nr + pr, ni + pi
            nr, ni = (pr * zr - pi * zi) >> fbits, (pr * zi + pi * zr) >> fbits
            pr, pi = nr + c, ni
        return pr, pi, dr, di

    def newton_step(self, z: complex) -> complex:
        """p(z)/p'(z) rounded to a complex double."""
        fbits = self.fbits_for(z)
        pr, pi, dr, di = self._horner_pair(z, fbits)
        den = dr * dr + di * di
        if den == 0:
            # exactly at a critical point: take a deterministic small step
            return complex(2.0**-20 * (1.0 + abs(z)), 0.0)
        return complex(
            _int_ratio_to_float(pr * dr + pi * di, den),
            _int_ratio_to_float(pi * dr - pr * di, den),
        )

    def abs_value_scaled(self, z: complex, down: int) -> float:
        """|p(z)| / 2**down as a float."""
        fbits = self.fbits_for(z)
        pr, pi, _, _ = self._horner_pair(z, fbits)
        return math.hypot(
            _scaled_float(int(pr), fbits + down), _scaled_float(int(pi), fbits + down)
        )


# -- double-precision helpers ---------------------------------------------------


def _scaled_coefficients(p: Poly) -> tuple[int, np.ndarray]:
    """Divide all coefficients by 2**k so the largest lands in [1, 2)."""
    bits = [c.bit_length() for c in p.coeffs]
    k = max(bits) - 1
    smallest = min(b for b, c in zip(bits, p.coeffs) if c != 0)
    if k - (smallest - 1) > 1000:
        raise CapacityError(
            "coefficient dynamic range exceeds double precision; scale the"
            " family index down"
        )
    return k, np.array([_scaled_float(c, k) for c in p.coeffs], dtype=np.float64)


def _initial_guesses(p: Poly) -> np.ndarray:
    """Deterministic start: points on the circle of the geometric-mean root
    modulus |c0/cd|^(1/d), at a fixed 0.4 rad angular offset.

    The geometric mean always lies between the smallest and largest root
    modulus, so the start circle threads the root cloud even when classical
    upper root bounds are astronomically loose (binomial-heavy coefficients).
    """
    d = p.degree
    radius = 2.0 ** ((_log2_abs(p.coeffs[0]) - _log2_abs(p.coeffs[-1])) / d)
    angles = 2.0 * np.pi * np.arange(d) / d + 0.4
    return radius * np.exp(1j * angles)


def _horner_pair(c: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = np.full_like(z, complex(c[-1]))
    dp = np.zeros_like(z)
    for k in range(len(c) - 2, -1, -1):
        dp = dp * z + p
        p = p * z + c[k]
    return p, dp


def _abs_eval(c_abs: np.ndarray, r: np.ndarray) -> np.ndarray:
    acc = np.full_like(r, c_abs[-1])
    for k in range(len(c_abs) - 2, -1, -1):
        acc = acc * r + c_abs[k]
    return acc


def _aberth_iterate(
    exact: _ExactEvaluator, c: np.ndarray, z: np.ndarray, tol: float, max_iter: int
) -> tuple[np.ndarray, bool, float]:
    d = len(c) - 1
    c_abs = np.abs(c)
    cd_abs = c_abs[1:] * np.arange(1, d + 1)
    noise_factor = _NOISE_MARGIN * 4.0 * d * 2.0**-53
    max_corr = math.inf
    # Points whose correction has dropped well below tol are frozen: they sit
    # on their root and only contribute repulsion, saving exact evaluations.
    active = np.ones(d, dtype=bool)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        for _ in range(max_iter):
            pv, dv = _horner_pair(c, z)
            az = np.abs(z)
            noise_p = noise_factor * _abs_eval(c_abs, az)
            noise_d = noise_factor * _abs_eval(cd_abs, az)
            finite = np.isfinite(pv) & np.isfinite(dv) & np.isfinite(noise_p)
            reliable = finite & (np.abs(pv) > noise_p) & (np.abs(dv) > noise_d)
            w = np.where(
                active & reliable, pv / np.where(dv == 0, 1.0, dv), 0.0
            )
            # far-out points: Newton degenerates to z/d, no evaluation needed
            far = ~finite | (az > 1e6)
            w[far & active] = z[far & active] / d
            for i in np.flatnonzero(active & ~reliable & ~far):
                w[i] = exact.newton_step(complex(z[i]))
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            recip = 1.0 / diff
            np.fill_diagonal(recip, 0.0)
            denom = 1.0 - w * recip.sum(axis=1)
            denom = np.where(denom == 0, 1.0, denom)
            corr = w / denom
            corr = np.where(np.isfinite(corr), corr, 1.0)
            # Near-collisions make the denominator tiny and would fling the
            # iterate far out; damp each step to the scale of its iterate.
            mag = np.abs(corr)
            cap = np.maximum(1.0, az)
            corr = np.where(mag > cap, corr * (cap / mag), corr)
            z = z - corr
            mag = np.abs(corr)
            active &= mag >= 0.25 * tol
            max_corr = float(mag.max())
            if max_corr < tol or not active.any():
                return z, True, max_corr
    return z, False, max_corr


def _pair_conjugates(z: np.ndarray) -> np.ndarray:
    """Symmetrize the root multiset under conjugation.

    Roots within the near-real band snap to the axis; the rest are greedily
    matched with the nearest candidate for their conjugate and the pair is
    replaced by its symmetrized mean.  Anything left unmatched is kept as-is.
    """
    out = z.copy()
    pos = sorted(
        (i for i in range(len(z)) if z[i].imag > NEAR_REAL_IM),
        key=lambda i: (z[i].real, z[i].imag),
    )
    neg = [i for i in range(len(z)) if z[i].imag < -NEAR_REAL_IM]
    for i in set(range(len(z))) - set(pos) - set(neg):
        out[i] = z[i].real
    unused = set(neg)
    for i in pos:
        if not unused:
            break
        target = z[i].conjugate()
        j = min(unused, key=lambda j: (abs(z[j] - target), j))
        if abs(z[j] - target) <= CLUSTER_RADIUS * max(1.0, abs(z[i])):
            re = 0.5 * (z[i].real + z[j].real)
            im = 0.5 * (z[i].imag - z[j].imag)
            out[i] = complex(re, im)
            out[j] = complex(re, -im)
            unused.discard(j)
    return out


def _final_residuals(
    exact: _ExactEvaluator, z: np.ndarray, k: int, c: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """(sharp, reported) backward errors from exact evaluation.

    sharp = |p(z)| / sum_i |c_i| |z|^i is the acceptance test; reported =
    |p(z)| / (||c||_1 * max(1,|z|)^deg) is recorded on the RootSet.  The
    reported denominator majorizes the sharp one, so sharp <= tol implies
    the recorded residuals meet the tolerance as well.
    """
    d = len(c) - 1
    az = np.abs(z)
    with np.errstate(over="ignore"):
        aev = _abs_eval(np.abs(c), az)
        rep_den = float(np.abs(c).sum()) * np.maximum(1.0, az) ** d
    mags = np.array([exact.abs_value_scaled(complex(zi), k) for zi in z])
    sharp = np.where(np.isfinite(aev), mags / aev, np.inf)
    reported = np.where(np.isfinite(rep_den), mags / rep_den, np.inf)
    return sharp, reported


def find_roots(p: Poly, tol: float = 1e-12, max_iter: int = 500) -> RootSet:
    """Locate all complex roots of p.

    The zero root is removed exactly (its multiplicity is the lowest nonzero
    coefficient index); the remaining roots are iterated simultaneously until
    the largest correction drops below tol.  Non-convergence raises, carrying
    the best iterate; it is never returned silently as converged.
    """
    if tol < _MIN_TOL:
        raise ValueError(f"tolerance below {_MIN_TOL} is not achievable in doubles")
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    if p.is_zero or p.degree < 1:
        raise ValueError("need a polynomial of degree at least 1")
    zero_mult = p.zero_root_multiplicity()
    q = p.deflate_zero()
    if q.degree == 0:
        return RootSet(zero_mult, (), tol, 0)
    scale, c = _scaled_coefficients(q)
    exact = _ExactEvaluator(q.coeffs)
    if q.degree == 1:
        z = np.array([complex(-c[0] / c[1])])
    else:
        z, converged, max_corr = _aberth_iterate(
            exact, c, _initial_guesses(q), tol, max_iter
        )
        if not converged:
            raise NonConvergenceError(
                f"no convergence within {max_iter} iterations"
                f" (max correction {max_corr:.3e})",
                roots=z.tolist(),
                max_correction=max_corr,
            )
    z = _pair_conjugates(z)
    sharp, reported = _final_residuals(exact, z, scale, c)
    worst = float(sharp.max())
    if worst > tol:
        raise NonConvergenceError(
            f"residual {worst:.3e} exceeds tolerance {tol:.3e}",
            roots=z.tolist(),
            max_correction=worst,
        )
    order = np.lexsort((z.imag, z.real))
    roots = tuple((float(z[i].real), float(z[i].imag), float(reported[i])) for i in order)
    return RootSet(zero_mult, roots, tol, scale)


def distinct_real_roots(rs: RootSet) -> list[float]:
    """Representatives of near-real root clusters (zero root excluded).

    Roots with |im| <= NEAR_REAL_IM are projected to the axis and merged when
    closer than CLUSTER_RADIUS, so a numerically split multiple root counts
    once.
    """
    reals = sorted(re for re, im, _ in rs.roots if abs(im) <= NEAR_REAL_IM)
    out: list[float] = []
    for r in reals:
        if out and r - out[-1] <= CLUSTER_RADIUS:
            continue
        out.append(r)
    return out


def circle_deviation(rs: RootSet, center: complex, radius: float) -> CircleDeviation:
    """Max and mean of | |z - center| - radius | over the nonzero roots."""
    if not rs.roots:
        raise ValueError("root set has no nonzero roots")
    if radius <= 0:
        raise ValueError("radius must be positive")
    devs = [abs(abs(z - center) - radius) for z in rs.complex_roots()]
    return CircleDeviation(max(devs), sum(devs) / len(devs))


def has_positive_real_part(rs: RootSet) -> bool:
    """True iff some nonzero root lies strictly right of the imaginary axis.

    Strictness uses the REAL_PART_GUARD band; roots inside the band are not
    counted here (see boundary_real_part_roots).
    """
    return any(re > REAL_PART_GUARD for re, _, _ in rs.roots)


def boundary_real_part_roots(rs: RootSet) -> tuple[tuple[float, float, float], ...]:
    """Roots whose real part sits within the guard band around zero."""
    return tuple(r for r in rs.roots if abs(r[0]) <= REAL_PART_GUARD)


@dataclass(frozen=True)
class PowerForm:
    """Exponential-family decomposition f_n = a1 * l1**n + a2 * l2**n.

    Families of this shape have computable limit curves for their root sets,
    which is how the limit circle of the complement-of-friendship family is
    analyzed.
    """

    alpha1: Poly
    lambda1: Poly
    alpha2: Poly
    lambda2: Poly
    n: int

    def reconstruct(self) -> Poly:
        return self.alpha1 * self.lambda1**self.n + self.alpha2 * self.lambda2**self.n


def complement_friendship_power_form(n: int) -> PowerForm:
    """The complement-of-friendship polynomial as x*((x+1)^2)^n - (x + 2n x^2).

    reconstruct() equals the closed form exactly for every n >= 1.
    """
    if n < 1:
        raise ValueError("index must be at least 1")
    return PowerForm(
        alpha1=Poly.X,
        lambda1=binomial_power(2),
        alpha2=Poly((0, -1, -2 * n)),
        lambda2=Poly.ONE,
        n=n,
    )


CSV_HEADER = "family,n,re,im,residual"


def roots_csv(entries: Iterable[tuple[str, int, RootSet]]) -> str:
    """Render (family, n, RootSet) entries as CSV, one row per nonzero root."""
    lines = [CSV_HEADER]
    for family, n, rs in entries:
        for re, im, residual in rs.roots:
            lines.append(f"{family},{n},{re!r},{im!r},{residual!r}")
    return "\n".join(lines) + "\n"
