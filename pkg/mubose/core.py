# -*- coding: utf-8 -*-
#
# Copyright © 2016 The mu-bose authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.

"""μ-brackets, μ-factorials and the μ-deformed exponential, logarithm and
Bose functions."""

import fractions
import math
import numbers

import numpy as np
from scipy import integrate, special

from . import LOGGER
from .errors import ConvergenceError, DivergenceError, DomainError

__all__ = ["DeformationParameter", "SummationControl", "BoseOrder",
           "mu_bracket", "mu_shift_product", "mu_factorial",
           "mu_exp", "mu_ln", "mu_polylog", "polylog_coefficients",
           "mu_exp_closed_form", "mu_ln_closed_form"]

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 10 ** 7

# terms summed per numpy block
BLOCK = 4096
# explicit terms summed before the exact tail at z = 1
HEAD_TERMS = 32
MAX_TAIL_TERMS = 256
# beyond this many terms the Euler-Maclaurin tail takes over near z = 1
NEAR_UNITY_TERMS = 16 * BLOCK
EM_HEAD = 64
EM_CORRECTIONS = 8


class DeformationParameter(object):
    """The deformation strength μ, 0 ≤ μ < 1.

    Rational values (int, fractions.Fraction) are kept as they are so that
    brackets and factorials stay exact.
    """

    def __init__(self, mu):
        if isinstance(mu, DeformationParameter):
            mu = mu.mu
        if isinstance(mu, bool) or not isinstance(mu, numbers.Real):
            raise DomainError("μ must be a real number, got {!r}".format(mu))
        if not 0 <= mu < 1:
            raise DomainError("μ must lie in [0, 1), got {!r}".format(mu))
        self.mu = mu

    def __repr__(self): # pragma: no cover
        return "<DeformationParameter μ={!r}>".format(self.mu)

    def __float__(self):
        return float(self.mu)

    def __eq__(self, other):
        if isinstance(other, DeformationParameter):
            return self.mu == other.mu
        return NotImplemented

    def __hash__(self):
        return hash(self.mu)

    @property
    def exact(self):
        return isinstance(self.mu, numbers.Rational)


def as_mu(mu):
    """Validate μ and return its raw numeric value."""
    return DeformationParameter(mu).mu


class SummationControl(object):
    def __init__(self, tol=DEFAULT_TOL, max_terms=DEFAULT_MAX_TERMS):
        """
        :param float tol: Absolute bound the series tail must reach
        :param int max_terms: Term budget
        """
        if not tol > 0:
            raise DomainError("tol must be positive, got {!r}".format(tol))
        if isinstance(max_terms, bool) or not isinstance(max_terms, numbers.Integral) or max_terms < 1:
            raise DomainError("max_terms must be a positive integer, got {!r}".format(max_terms))
        self.tol = float(tol)
        self.max_terms = int(max_terms)

    def __repr__(self): # pragma: no cover
        return "<SummationControl tol={0.tol!r} max_terms={0.max_terms!r}>".format(self)


class BoseOrder(object):
    """Half-integer order l of a Bose function, stored as numerator/denominator."""

    def __init__(self, numerator, denominator=1):
        if denominator not in (1, 2):
            raise DomainError("Bose order denominator must be 1 or 2, got {!r}".format(denominator))
        if isinstance(numerator, bool) or not isinstance(numerator, numbers.Integral) or numerator < 0:
            raise DomainError("Bose order must be nonnegative, got {!r}/{!r}".format(numerator, denominator))
        if denominator == 2 and numerator % 2 == 0:
            numerator, denominator = numerator // 2, 1
        self.numerator = int(numerator)
        self.denominator = denominator

    @classmethod
    def parse(cls, value):
        """Build an order from an int, a float, a Fraction or a string like "3/2"."""
        if isinstance(value, BoseOrder):
            return value
        try:
            frac = fractions.Fraction(value)
        except (TypeError, ValueError, ZeroDivisionError):
            raise DomainError("Invalid Bose order: {!r}".format(value))
        if frac.denominator not in (1, 2):
            raise DomainError("Bose order must be a half-integer, got {!r}".format(value))
        return cls(frac.numerator, frac.denominator)

    def __repr__(self): # pragma: no cover
        return "<BoseOrder {!s}>".format(self)

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        return "{!s}/{!s}".format(self.numerator, self.denominator)

    def __eq__(self, other):
        if isinstance(other, BoseOrder):
            return self.fraction == other.fraction
        return NotImplemented

    def __hash__(self):
        return hash(self.fraction)

    @property
    def fraction(self):
        return fractions.Fraction(self.numerator, self.denominator)

    @property
    def value(self):
        return self.numerator / self.denominator

    def power(self, n, shift=0):
        """n ** (l + shift) with the half-integer part taken as an exact square root.

        :param numpy.ndarray n: Positive integers (as floats)
        :param int shift: Integer added to the order
        """
        whole, half = divmod(self.numerator, self.denominator)
        out = np.power(n, whole + shift)
        if half:
            out = out * np.sqrt(n)
        return out


def _check_count(n, minimum):
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise DomainError("Expected an integer, got {!r}".format(n))
    if n < minimum:
        raise DomainError("Expected an integer >= {:d}, got {!r}".format(minimum, n))


def mu_bracket(n, mu):
    """μ-number [n]_μ = n/(1+μn).

    :param int n: Positive integer
    :param mu: μ (real or DeformationParameter)
    :return: Exact Fraction for rational μ, float otherwise
    """
    mu = as_mu(mu)
    _check_count(n, 1)
    if isinstance(mu, numbers.Rational):
        return fractions.Fraction(n) / (1 + mu * n)
    return n / (1 + mu * n)


def mu_shift_product(n, mu):
    """[n; μ] = (1+μ)(1+2μ)...(1+nμ); the empty product is 1."""
    mu = as_mu(mu)
    _check_count(n, 0)
    return math.prod((1 + k * mu for k in range(1, n + 1)), start=1)


def mu_factorial(n, mu):
    """[n]_μ! = n!/[n; μ]."""
    mu = as_mu(mu)
    _check_count(n, 0)
    if isinstance(mu, numbers.Rational):
        return fractions.Fraction(math.factorial(n)) / mu_shift_product(n, mu)
    # exact in the binary value of μ, rounded once
    exact = fractions.Fraction(math.factorial(n)) / mu_shift_product(n, fractions.Fraction(mu))
    return float(exact)


def _control(ctl):
    return ctl if ctl is not None else SummationControl()


def mu_exp(x, mu, ctl=None):
    """μ-exponential Σ x^n/[n]_μ!.

    The ratio of consecutive terms |x|(1/(n+1) + μ) decreases towards μ|x|,
    which gives a geometric bound on the remainder.
    """
    mu = float(as_mu(mu))
    ctl = _control(ctl)
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("x must be finite, got {!r}".format(x))
    if mu > 0 and abs(x) >= 1 / mu:
        raise DivergenceError("exp_μ diverges for |x| >= 1/μ (x={!r}, μ={!r})".format(x, mu))

    term = 1.0
    total = 1.0
    n = 0
    while True:
        if n >= ctl.max_terms:
            raise ConvergenceError("exp_μ({!r}) did not reach tol={!r} in {:d} terms".format(
                x, ctl.tol, ctl.max_terms))
        n += 1
        term *= x * (1 + n * mu) / n
        total += term
        ratio = abs(x) * (1 / (n + 1) + mu)
        if ratio < 1 and abs(term) * ratio / (1 - ratio) <= ctl.tol:
            break
    LOGGER.debug("exp_μ(%r), μ=%r: %d terms", x, mu, n)
    return total


def mu_ln(x, mu, ctl=None):
    """μ-logarithm −Σ (1−x)^n/[n]_μ, defined for |1−x| < 1."""
    mu = float(as_mu(mu))
    ctl = _control(ctl)
    u = 1 - float(x)
    if not abs(u) < 1:
        raise DomainError("ln_μ needs |1 - x| < 1, got x={!r}".format(x))
    if u == 0:
        return 0.0

    total = 0.0
    power = 1.0
    n = 0
    while True:
        if n >= ctl.max_terms:
            raise ConvergenceError("ln_μ({!r}) did not reach tol={!r} in {:d} terms".format(
                x, ctl.tol, ctl.max_terms))
        n += 1
        power *= u
        total -= power * (1 / n + mu)
        # terms shrink at least by |u| each step
        bound = abs(power * u) * (1 / (n + 1) + mu) / (1 - abs(u))
        if bound <= ctl.tol:
            break
    LOGGER.debug("ln_μ(%r), μ=%r: %d terms", x, mu, n)
    return total


def mu_exp_closed_form(x, mu):
    """exp_μ(x) = (1 − μx)^−(1+1/μ), the binomial sum of the defining series."""
    mu = float(as_mu(mu))
    if mu == 0:
        return math.exp(x)
    if abs(x) >= 1 / mu:
        raise DivergenceError("exp_μ diverges for |x| >= 1/μ")
    return (1 - mu * x) ** (-(1 + 1 / mu))


def mu_ln_closed_form(x, mu):
    """ln_μ(x) = ln x − μ(1−x)/x."""
    mu = float(as_mu(mu))
    if not abs(1 - x) < 1:
        raise DomainError("ln_μ needs |1 - x| < 1, got x={!r}".format(x))
    return math.log(x) - mu * (1 - x) / x


def polylog_coefficients(l, mu, n):
    """Coefficients [k]_μ/k^(l+1) for k = 1..n as a numpy array."""
    order = BoseOrder.parse(l)
    mu = float(as_mu(mu))
    k = np.arange(1, n + 1, dtype=float)
    return _coefficients(order, mu, k)


def _coefficients(order, mu, k):
    # [k]_μ / k^(l+1) = 1 / ((1 + μk) k^l)
    return 1.0 / ((1.0 + mu * k) * order.power(k))


def _block_sum(order, z, mu, start, stop):
    k = np.arange(start, stop, dtype=float)
    terms = _coefficients(order, mu, k)
    if z != 1:
        terms = terms * np.power(z, k)
    return math.fsum(terms)


def _polylog_inside(order, z, mu, ctl):
    total = 0.0
    start = 1
    while True:
        stop = min(start + BLOCK, ctl.max_terms + 1)
        total += _block_sum(order, z, mu, start, stop)
        last = stop - 1
        # coefficients are nonincreasing in k
        nxt = float(_coefficients(order, mu, np.array([float(last + 1)]))[0])
        bound = nxt * z ** (last + 1) / (1 - z)
        if bound <= ctl.tol:
            LOGGER.debug("g_%s^(%r)(%r): %d terms, tail bound %.3e", order, mu, z, last, bound)
            return total
        if last >= ctl.max_terms:
            raise ConvergenceError("g_{!s}^({!r})({!r}) tail bound {:.3e} above tol={!r} after {:d} terms".format(
                order, mu, z, bound, ctl.tol, ctl.max_terms))
        start = stop


def _polylog_unity(order, mu, ctl):
    if mu == 0:
        if order.fraction <= 1:
            raise DivergenceError("g_{!s}^(0)(1) diverges (needs l > 1 at μ = 0)".format(order))
        head = HEAD_TERMS
        total = _block_sum(order, 1, mu, 1, head + 1)
        # Σ_{n>N} n^-l is a Hurwitz zeta value
        tail = float(special.zeta(order.value, head + 1))
        LOGGER.debug("g_%s^(0)(1): %d terms + Hurwitz tail %.3e", order, head, tail)
        return total + tail

    if order.fraction == 0:
        raise DivergenceError("g_0^(μ)(1) diverges for every μ")
    head = max(HEAD_TERMS, math.ceil(2 / mu))
    if head > NEAR_UNITY_TERMS:
        return _polylog_near_unity(order, 1.0, mu, ctl)
    if head > ctl.max_terms:
        raise ConvergenceError("g_{!s}^({!r})(1) needs {:d} explicit terms, budget is {:d}".format(
            order, mu, head, ctl.max_terms))
    total = 0.0
    for start in range(1, head + 1, 16 * BLOCK):
        total += _block_sum(order, 1, mu, start, min(start + 16 * BLOCK, head + 1))

    # Σ_{n>N} n^-l / (1 + μn) = Σ_k (-1)^k μ^-(k+1) ζ(l+1+k, N+1); since μ(N+1) > 2
    # the series alternates with shrinking terms and the error is below the next term
    tail = 0.0
    for k in range(MAX_TAIL_TERMS):
        term = float(special.zeta(order.value + 1 + k, head + 1)) / mu ** (k + 1)
        tail += term if k % 2 == 0 else -term
        if term <= ctl.tol:
            LOGGER.debug("g_%s^(%r)(1): %d terms + %d tail terms", order, mu, head, k + 1)
            return total + tail
    raise ConvergenceError("g_{!s}^({!r})(1) tail expansion did not converge".format(order, mu))


def _geometric_terms(z, tol):
    # terms the geometric bound z^N / (1 - z) <= tol asks for
    return math.log(tol * (1 - z)) / math.log(z)


def _tail_integral(order, alpha, mu, a, ctl):
    """∫_a^∞ e^(-αx) x^-l / (1 + μx) dx, integrated over s = ln(x/a)."""
    l = order.value
    scale = a ** (1 - l)
    cuts = []
    stops = []
    if alpha > 0:
        # e^(-αx) is negligible a few e-folds past x = 1/α
        cuts.append(-math.log(alpha * a))
        stops.append(max(0.0, cuts[-1]) + 5)
    if mu > 0 and l > 0:
        cuts.append(-math.log(mu * a))
        stops.append(max(0.0, cuts[-1]) + 40 / l)
    if l > 1:
        stops.append(40 / (l - 1))
    if not stops:
        raise DivergenceError("g_{!s}^({!r}) tail integral diverges".format(order, mu))
    upper = min(stops)
    if upper > 700:
        raise ConvergenceError("g_{!s}^({!r}) tail integral needs s up to {:.1f}".format(order, mu, upper))

    def integrand(s):
        x = a * math.exp(s)
        return math.exp((1 - l) * s - alpha * x) / (1 + mu * x)

    points = sorted(c for c in cuts if 0 < c < upper) or None
    value, error = integrate.quad(integrand, 0.0, upper, points=points, limit=200,
                                  epsabs=0.1 * ctl.tol / scale, epsrel=1e-13)
    value *= scale
    error *= scale
    if error > max(ctl.tol, 1e-12 * abs(value)):
        raise ConvergenceError("g_{!s}^({!r}) tail integral error {:.3e} above tol={!r}".format(
            order, mu, error, ctl.tol))
    return value


def _polylog_near_unity(order, z, mu, ctl):
    """Σ_{n≤N} terms plus an Euler-Maclaurin tail for Σ_{n>N} z^n n^-l / (1 + μn).

    The tail is the integral of f(x) = e^(-αx) x^-l / (1 + μx), α = -ln z,
    from N + 1 plus f(N + 1)/2 and the Bernoulli corrections. The derivatives
    of f come from the product of the Taylor series of its three factors.
    """
    if ctl.max_terms < EM_HEAD:
        raise ConvergenceError("g_{!s}^({!r})({!r}) needs {:d} explicit terms, budget is {:d}".format(
            order, mu, z, EM_HEAD, ctl.max_terms))
    l = order.value
    alpha = -math.log(z)
    a = float(EM_HEAD + 1)
    total = _block_sum(order, z, mu, 1, EM_HEAD + 1)

    size = 2 * EM_CORRECTIONS
    j = np.arange(size, dtype=float)
    exponential = np.cumprod(np.concatenate(([1.0], -alpha / j[1:])))
    power = np.cumprod(np.concatenate(([1.0], (-l - j[1:] + 1) / (j[1:] * a))))
    ratio = (-mu / (1 + mu * a)) ** j
    f_a = math.exp(-alpha * a) / (a ** l * (1 + mu * a))
    taylor = f_a * np.convolve(np.convolve(exponential, power)[:size], ratio)[:size]

    bernoulli = special.bernoulli(size)
    k = np.arange(1, EM_CORRECTIONS + 1)
    corrections = bernoulli[2 * k] / (2 * k) * taylor[2 * k - 1]
    remainder = abs(corrections[-1])
    if remainder > ctl.tol:
        raise ConvergenceError("g_{!s}^({!r})({!r}) Euler-Maclaurin remainder {:.3e} above tol={!r}".format(
            order, mu, z, remainder, ctl.tol))

    tail = _tail_integral(order, alpha, mu, a, ctl) + f_a / 2 - math.fsum(corrections)
    LOGGER.debug("g_%s^(%r)(%r): %d terms + Euler-Maclaurin tail %.3e", order, mu, z, EM_HEAD, tail)
    return total + tail


def mu_polylog(l, z, mu, ctl=None):
    """μ-deformed Bose function g_l^(μ)(z) = Σ_{n≥1} [n]_μ z^n / n^(l+1).

    :param l: Order (BoseOrder, int, Fraction or "3/2")
    :param float z: Fugacity in [0, 1]
    :param mu: μ (real or DeformationParameter)
    :param SummationControl ctl: Tolerance and term budget
    :raises DomainError: z outside [0, 1]
    :raises DivergenceError: z = 1 where the series diverges
    :raises ConvergenceError: term budget exhausted
    :rtype: float
    """
    order = BoseOrder.parse(l)
    mu = float(as_mu(mu))
    ctl = _control(ctl)
    z = float(z)
    if not 0 <= z <= 1:
        raise DomainError("g_l^(μ)(z) is defined for z in [0, 1], got z={!r}".format(z))
    if z == 0:
        return 0.0
    if z == 1:
        return _polylog_unity(order, mu, ctl)
    if _geometric_terms(z, ctl.tol) > NEAR_UNITY_TERMS:
        return _polylog_near_unity(order, z, mu, ctl)
    return _polylog_inside(order, z, mu, ctl)
