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

"""Deformed derivatives: Jackson (q), two-parameter (p, q) and μ."""

import fractions
import math
import numbers

import numpy as np

from . import LOGGER
from .core import as_mu, mu_bracket, mu_factorial
from .errors import DomainError, NumericError

__all__ = ["DensePolynomial", "QuadratureRule",
           "q_bracket", "pq_bracket",
           "jackson_derivative", "pq_derivative", "pq_tilde_derivative",
           "mu_derivative", "mu_derivative_iterated", "mu_antiderivative",
           "mu_average", "mu_leibniz", "mu_derivative_numeric"]

DEFAULT_NODES = 64
DEFAULT_GRADING = 6


def _ratio(num, den):
    """num/den, exact when both are rational."""
    if isinstance(num, numbers.Rational) and isinstance(den, numbers.Rational):
        return fractions.Fraction(num) / den
    return num / den


class DensePolynomial(object):
    def __init__(self, coeffs=()):
        """
        :param coeffs: Coefficients, coeffs[k] multiplies x^k
        """
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, n, coefficient=1):
        return cls([0] * n + [coefficient])

    def __repr__(self): # pragma: no cover
        return "<DensePolynomial {!r}>".format(list(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, DensePolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def degree(self):
        """Index of the last nonzero coefficient, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other):
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        size = max(len(self), len(other))
        return DensePolynomial(self[k] + other[k] for k in range(size))

    def __neg__(self):
        return DensePolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DensePolynomial):
            if not self.coeffs or not other.coeffs:
                return DensePolynomial()
            out = [0] * (len(self) + len(other) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return DensePolynomial(out)
        if isinstance(other, numbers.Number):
            return DensePolynomial(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x):
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def lower(self, weight):
        """Apply x^k -> weight(k) x^(k-1) term by term (k >= 1)."""
        return DensePolynomial(weight(k) * self.coeffs[k] for k in range(1, len(self.coeffs)))

    def derivative(self):
        return self.lower(lambda k: k)


def q_bracket(n, q):
    """Jackson number [n]_q = (q^n − 1)/(q − 1), with [n]_1 = n."""
    if q == 1:
        return n
    return _ratio(q ** n - 1, q - 1)


def pq_bracket(n, p, q):
    """[n]_{p,q} = (p^n − q^n)/(p − q), with [n]_{q,q} = n q^(n−1)."""
    if p == q:
        return n * q ** (n - 1)
    return _ratio(p ** n - q ** n, p - q)


def jackson_derivative(p, q):
    """Jackson q-derivative; q = 1 gives the ordinary derivative.

    :param DensePolynomial p: Polynomial
    :param q: Positive deformation parameter
    :rtype: DensePolynomial
    """
    if not q > 0:
        raise DomainError("Jackson derivative needs q > 0, got {!r}".format(q))
    return p.lower(lambda k: q_bracket(k, q))


def pq_derivative(p, pp, q):
    """Two-parameter derivative x^n -> [n]_{p,q} x^(n-1)."""
    if not (pp > 0 and q > 0):
        raise DomainError("p,q-derivative needs p > 0 and q > 0, got p={!r}, q={!r}".format(pp, q))
    return p.lower(lambda k: pq_bracket(k, pp, q))


def pq_tilde_derivative(p, pp, q):
    """Variant x^k -> (p^k − q^k)/(ln p − ln q) x^(k−1)."""
    if not (pp > 0 and q > 0):
        raise DomainError("p,q-derivative needs p > 0 and q > 0, got p={!r}, q={!r}".format(pp, q))
    if pp == q:
        factor = q
    else:
        factor = (pp - q) / (math.log(pp) - math.log(q))
    return pq_derivative(p, pp, q) * factor


def mu_derivative(p, mu):
    """μ-derivative x^n -> [n]_μ x^(n−1)."""
    mu = as_mu(mu)
    return p.lower(lambda k: mu_bracket(k, mu))


def mu_derivative_iterated(p, mu, k):
    """k-th power of the μ-derivative, x^n -> ([n]_μ!/[n−k]_μ!) x^(n−k)."""
    mu = as_mu(mu)
    if isinstance(k, bool) or not isinstance(k, numbers.Integral) or k < 1:
        raise DomainError("Derivative order must be a positive integer, got {!r}".format(k))
    return DensePolynomial(
        _ratio(mu_factorial(n, mu), mu_factorial(n - k, mu)) * p.coeffs[n]
        for n in range(k, len(p.coeffs)))


def mu_antiderivative(p, mu):
    """Inverse μ-derivative x^n -> x^(n+1)/[n+1]_μ (zero constant of integration)."""
    mu = as_mu(mu)
    return DensePolynomial([0] + [_ratio(c, mu_bracket(n + 1, mu)) for n, c in enumerate(p.coeffs)])


def mu_average(p, mu):
    """h -> ∫₀¹ t^μ h(t^μ x) dt, i.e. x^k -> x^k/(1+μ(k+1))."""
    mu = as_mu(mu)
    return DensePolynomial(_ratio(c, 1 + mu * (k + 1)) for k, c in enumerate(p.coeffs))


def mu_leibniz(f, g, mu):
    """μ-derivative of f·g from the product rule under the integral.

    D(fg)(x) = ∫₀¹ t^μ (f'g + fg')(t^μ x) dt, evaluated exactly on polynomials.
    """
    return mu_average(f.derivative() * g, mu) + mu_average(f * g.derivative(), mu)


class QuadratureRule(object):
    """Positive-weight rule on [0, 1]: ∫₀¹ h(t) dt ≈ Σ w_i h(t_i)."""

    def __init__(self, nodes, weights):
        nodes = np.asarray(nodes, dtype=float)
        weights = np.asarray(weights, dtype=float)
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size == 0:
            raise DomainError("Nodes and weights must be nonempty 1-D arrays of equal length")
        if not np.all((nodes > 0) & (nodes < 1)):
            raise DomainError("Quadrature nodes must lie strictly inside (0, 1)")
        if not np.all(weights > 0) or abs(math.fsum(weights) - 1) > 1e-14:
            raise DomainError("Quadrature weights must be positive and sum to 1")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        self.nodes = nodes
        self.weights = weights

    @classmethod
    def gauss_legendre(cls, node_count=DEFAULT_NODES, grading=DEFAULT_GRADING):
        """Gauss–Legendre rule in u mapped to t = u^grading.

        The weight becomes grading·u^(grading−1)·w, which still sums to one;
        the grading flattens t^(kμ) type behaviour at t = 0.
        """
        if node_count < 1 or grading < 1:
            raise DomainError("node_count and grading must be positive")
        x, w = np.polynomial.legendre.leggauss(node_count)
        u = (x + 1) / 2
        w = w / 2
        return cls(u ** grading, grading * u ** (grading - 1) * w)

    def __repr__(self): # pragma: no cover
        return "<QuadratureRule {:d} nodes>".format(self.node_count)

    @property
    def node_count(self):
        return self.nodes.size

    def integrate(self, fn):
        values = np.array([fn(t) for t in self.nodes], dtype=float)
        if not np.all(np.isfinite(values)):
            raise NumericError("Non-finite integrand value in quadrature")
        return float(np.dot(self.weights, values))


def _five_point(f, x, h):
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)


def central_difference(f):
    """Central difference approximation of f', Richardson-extrapolated to sixth order."""
    def fprime(x):
        h = np.finfo(float).eps ** 0.2 * max(1.0, abs(x))
        coarse = _five_point(f, x, h)
        fine = _five_point(f, x, h / 2)
        # the five-point error is O(h^4)
        return fine + (fine - coarse) / 15
    return fprime


def mu_derivative_numeric(f, x, mu, rule=None, fprime=None):
    """μ-derivative of a smooth function through its integral representation.

    D f(x) = ∫₀¹ d f(t^μ x)/dx dt = ∫₀¹ t^μ f'(t^μ x) dt

    :param callable f: Function of one real variable
    :param float x: Evaluation point
    :param mu: μ (real or DeformationParameter)
    :param QuadratureRule rule: Defaults to the 64-node graded Gauss–Legendre rule
    :param callable fprime: Exact derivative of f, if known
    :rtype: float
    """
    mu = float(as_mu(mu))
    if rule is None:
        rule = QuadratureRule.gauss_legendre()
    if fprime is None:
        fprime = central_difference(f)

    def integrand(t):
        scale = t ** mu
        return scale * fprime(scale * x)

    try:
        value = rule.integrate(integrand)
    except (OverflowError, ValueError) as err:
        raise NumericError("μ-derivative integrand failed at x={!r}: {!s}".format(x, err))
    LOGGER.debug("D^(μ=%r) f(%r) = %r with %d nodes", mu, x, value, rule.node_count)
    return value
