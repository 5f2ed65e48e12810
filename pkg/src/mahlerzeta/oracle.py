"""Independent numerical verification of the closed-form Mahler measures.

Everything in this module runs in plain ``float64`` with a hand-rolled
double-exponential quadrature engine, series/Gauss-Legendre kernels for the
trilogarithm and the inverse-tangent integral, and (quasi-)Monte Carlo torus
averages.  The exact side of the package never feeds numbers into these
routines, so agreement between the two is evidence rather than tautology.

Three kinds of oracles are provided:

* pointwise base measures of the one-parameter polynomials that the
  multi-variable families reduce to;
* adaptive quadrature of the reduced one-dimensional integral representation
  (:func:`reduced_integral`) and of the kernel/log-moment integrals behind
  the closed forms;
* direct quasi-Monte Carlo integration of ``log |P|`` over the torus
  (:func:`torus_qmc`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Tuple

import mpmath as mp
import numpy as np
from scipy.stats import qmc

from .exact import bernoulli, log_moment_poly
from .formulas import Family, FamilySpec, coeff_a, coeff_b, mahler_measure
from .reduce import (
    arctangent_moment_closed,
    log1p_moment_closed,
    log_square_moment_closed,
    unit_log_moment_closed,
)
from .values import combination_value

__all__ = [
    "IntegralEstimate",
    "CheckResult",
    "base_measure_one",
    "base_measure_two",
    "base_measure_three",
    "kernel_integral_check",
    "power_kernel_check",
    "unit_log_moment_check",
    "log1p_moment_check",
    "log_square_moment_check",
    "arctangent_moment_check",
    "reduced_integral",
    "closed_form_measure",
    "torus_qmc",
    "imaginary_measure_qmc",
]

_PI_SQUARED = math.pi * math.pi
_ZETA2 = 1.6449340668482264365
_ZETA3 = 1.2020569031595942854


@dataclass(frozen=True)
class IntegralEstimate:
    """A numerical integral value with provenance.

    Attributes
    ----------
    value : float
        The estimate.
    error_estimate : float
        Statistical standard error for ``qmc``; heuristic refinement
        difference for ``adaptive_quadrature``; truncation bound for
        ``series``.
    method : {"adaptive_quadrature", "qmc", "series"}
        How the value was obtained.
    evaluations : int
        Number of integrand (or sample) evaluations consumed.
    """

    value: float
    error_estimate: float
    method: str
    evaluations: int

    def __post_init__(self) -> None:
        if self.method not in ("adaptive_quadrature", "qmc", "series"):
            raise ValueError("unknown method %r" % (self.method,))
        if self.error_estimate < 0:
            raise ValueError("error_estimate must be nonnegative")
        if self.method == "qmc" and not self.error_estimate > 0:
            raise ValueError("qmc estimates carry a positive statistical error")


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a quadrature-versus-closed-form comparison."""

    quadrature: float
    closed_form: float
    agree: bool


# ---------------------------------------------------------------------------
# double-exponential quadrature on (0, 1)
# ---------------------------------------------------------------------------

_T_MAX = 6.0


def _tanh_sinh_unit(
    f: Callable[[float, float], float],
    *,
    target: float = 1e-13,
    max_level: int = 11,
) -> Tuple[float, float, int]:
    """Integrate ``f`` over ``(0, 1)`` with a tanh-sinh transform.

    The integrand receives ``(x, cx)`` where ``cx = 1 - x`` is computed
    without cancellation, so endpoint behavior at both ends can be resolved
    to full precision.  Returns ``(value, error, evaluations)``; the error is
    the difference between the last two refinement levels (heuristic).
    Raises ``ValueError`` if the integrand produces a non-finite sample.
    """
    half_pi = 0.5 * math.pi
    previous = None
    value = 0.0
    error = math.inf
    evaluations = 0
    for level in range(4, max_level + 1):
        step = 2.0 ** (2 - level)
        midpoint = f(0.5, 0.5)
        if not math.isfinite(midpoint):
            raise ValueError("integrand returned a non-finite value at x=0.5")
        total = 0.25 * math.pi * midpoint
        evaluations += 1
        j = 1
        tiny_run = 0
        while True:
            t = j * step
            if t > _T_MAX:
                break
            u = half_pi * math.sinh(t)
            eu = math.exp(-2.0 * u)
            x = 1.0 / (1.0 + eu)
            cx = eu / (1.0 + eu)
            weight = math.pi * math.cosh(t) * x * cx
            pair = f(x, cx) + f(cx, x)
            evaluations += 2
            if not math.isfinite(pair):
                raise ValueError("integrand returned a non-finite value near x=%r" % (x,))
            contribution = weight * pair
            total += contribution
            if abs(contribution) <= 1e-280 or abs(contribution) <= abs(total) * 1e-18:
                tiny_run += 1
                if tiny_run >= 3 and t >= 3.0:
                    break
            else:
                tiny_run = 0
            j += 1
        estimate = step * total
        if previous is not None:
            error = abs(estimate - previous)
            value = estimate
            if error <= target * max(1.0, abs(estimate)):
                return estimate, error, evaluations
        previous = estimate
        value = estimate
    return value, error, evaluations


def _stable_log(x: float, cx: float) -> float:
    """``log x`` computed from the complement when ``x`` is near 1."""
    return math.log1p(-cx) if cx < 0.5 else math.log(x)


def _log_ratio_minus(x: float, cx: float) -> float:
    """``log(x) / (x**2 - 1)`` with the removable singularity at 1 filled in.

    ``x**2 - 1 = -cx * (2 - cx)`` exactly; within ``|cx| < 1e-3`` the ratio
    is evaluated by the series ``(1 + c/2 + c^2/3 + ...) / (2 - c)`` to avoid
    0/0 cancellation at machine precision.
    """
    c = cx
    if abs(c) < 1e-3:
        series = 1.0 + c * (
            1.0 / 2.0 + c * (1.0 / 3.0 + c * (1.0 / 4.0 + c * (1.0 / 5.0 + c / 6.0)))
        )
        return series / (2.0 - c)
    return _stable_log(x, cx) / (-c * (2.0 - c))


# ---------------------------------------------------------------------------
# fast float64 special-function kernels
# ---------------------------------------------------------------------------

def _zeta_nonpositive(m: int) -> float:
    """``zeta(-m)`` for integer ``m >= 0`` (vanishes at even ``m >= 2``)."""
    if m == 0:
        return -0.5
    return float(-bernoulli(m + 1) / (m + 1))


_LI3_TAIL_ZETA = tuple(_zeta_nonpositive(k - 3) for k in range(3, 17))


def _li3(t: float) -> float:
    """``Li_3(t)`` for ``t`` in ``[0, 1]``.

    Direct power series up to ``t = 1/2``; beyond that, the expansion of
    ``Li_3(exp(-u))`` around ``u = 0`` whose ``u^k`` coefficients are zeta
    values at non-positive integers.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError("argument must lie in [0, 1]")
    if t <= 0.5:
        total = 0.0
        power = 1.0
        for k in range(1, 60):
            power *= t
            term = power / (k * k * k)
            total += term
            if term <= 1e-18 * (abs(total) + 1e-30):
                break
        return total
    u = -math.log(t)
    if u <= 0.0:
        return _ZETA3
    total = _ZETA3 - _ZETA2 * u + (0.75 - 0.5 * math.log(u)) * u * u
    upow = u * u
    fact = 2.0
    for k in range(3, 17):
        upow *= -u
        fact *= k
        total += _LI3_TAIL_ZETA[k - 3] * upow / fact
    return total


def _script_l3(t: float) -> float:
    """``Li_3(t) - Li_3(-t)`` for ``t`` in ``[0, 1]`` via the square trick."""
    return 2.0 * _li3(t) - 0.25 * _li3(t * t)


_GL_POINTS: List[Tuple[float, float]] = [
    (float(node), float(weight))
    for node, weight in zip(*np.polynomial.legendre.leggauss(20))
]


def _inverse_tangent_integral(x: float) -> float:
    """``Ti_2(x) = integral of arctan(t)/t over (0, x)`` for ``x >= 0``.

    Gauss-Legendre on ``(0, x)`` for ``x <= 1`` (the integrand is analytic
    there); the standard inversion relation maps larger arguments back.
    """
    if x < 0:
        raise ValueError("argument must be nonnegative")
    if x == 0.0:
        return 0.0
    if x > 1.0:
        return _inverse_tangent_integral(1.0 / x) + 0.5 * math.pi * math.log(x)
    half = 0.5 * x
    total = 0.0
    for node, weight in _GL_POINTS:
        t = half * (node + 1.0)
        total += weight * (math.atan(t) / t if t > 0.0 else 1.0)
    return half * total


# ---------------------------------------------------------------------------
# base measures
# ---------------------------------------------------------------------------

def base_measure_one(alpha_abs: float) -> float:
    """Measure of ``1 + alpha z`` as a function of ``|alpha|``.

    Parameters
    ----------
    alpha_abs : float
        ``|alpha| >= 0``.

    Returns
    -------
    float
        ``max(log |alpha|, 0)``.
    """
    if alpha_abs < 0:
        raise ValueError("alpha_abs must be nonnegative")
    return math.log(alpha_abs) if alpha_abs > 1.0 else 0.0


def base_measure_two(alpha_abs: float) -> float:
    """``pi**2`` times the measure of ``(1 + x) + alpha (1 + y) z``.

    Inside the unit interval the value is ``2 (Li_3(a) - Li_3(-a))``; beyond
    it, ``pi^2 log a`` plus the same combination at ``1/a``.

    Parameters
    ----------
    alpha_abs : float
        ``|alpha| >= 0``.

    Returns
    -------
    float
        ``pi**2 * m``.
    """
    if alpha_abs < 0:
        raise ValueError("alpha_abs must be nonnegative")
    if alpha_abs == 0.0:
        return 0.0
    if alpha_abs <= 1.0:
        return 2.0 * _script_l3(alpha_abs)
    return _PI_SQUARED * math.log(alpha_abs) + 2.0 * _script_l3(1.0 / alpha_abs)


def base_measure_three(alpha: float, mode: str = "real") -> float:
    """Measure of the two-parameter linear form, by parameter mode.

    Parameters
    ----------
    alpha : float
        The parameter.  Real mode uses its sign; imaginary mode only ``|alpha|``.
    mode : {"real", "imaginary"}
        ``"real"`` returns ``m(1 + alpha x + (1 - alpha) y)``: ``log^+ alpha``
        for positive ``alpha`` and ``log(1 - alpha)`` for negative.
        ``"imaginary"`` returns ``pi * m(1 + i alpha x + (1 - i alpha) y)``,
        which is ``(pi/4) log(alpha^2 + 1) + Ti_2(|alpha|)``.

    Returns
    -------
    float
        The (possibly pi-scaled) measure.
    """
    if mode == "real":
        if alpha > 0:
            return max(math.log(alpha), 0.0)
        if alpha < 0:
            return math.log1p(-alpha)
        return 0.0
    if mode == "imaginary":
        magnitude = abs(alpha)
        return (
            0.25 * math.pi * math.log1p(magnitude * magnitude)
            + _inverse_tangent_integral(magnitude)
        )
    raise ValueError("mode must be 'real' or 'imaginary'")


# ---------------------------------------------------------------------------
# kernel and log-moment integral checks
# ---------------------------------------------------------------------------

def kernel_integral_check(
    a: float, b: float, k: int, *, tolerance: float = 1e-9, refinement: int = 11
) -> CheckResult:
    """Compare the two-pole log-moment kernel integral with its closed form.

    The integral is ``int_0^inf x log^k x / ((x^2+a^2)(x^2+b^2)) dx``; the
    closed form is ``(pi/2)^(k+1) (P_k(2 log a / pi) - P_k(2 log b / pi)) /
    (a^2 - b^2)`` with ``P_k`` the log-moment polynomials.

    Parameters
    ----------
    a, b : float
        Positive pole parameters, ``a != b`` (the confluent case is rejected
        because the closed form divides by ``a^2 - b^2``).
    k : int
        Log power, ``0 <= k <= 10``.
    tolerance : float
        Absolute agreement threshold.
    refinement : int
        Maximum quadrature halving level.

    Returns
    -------
    CheckResult
        Quadrature value, closed form, and the agreement flag.
    """
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    if a == b:
        raise ValueError("a = b is rejected: the closed form divides by a^2 - b^2")
    if not 0 <= k <= 10:
        raise ValueError("k must lie in [0, 10]")
    poly = log_moment_poly(k)
    closed = (
        (0.5 * math.pi) ** (k + 1)
        * (poly(2.0 * math.log(a) / math.pi) - poly(2.0 * math.log(b) / math.pi))
        / (a * a - b * b)
    )

    def lower(x: float, cx: float) -> float:
        logx = _stable_log(x, cx)
        return x * logx**k / ((x * x + a * a) * (x * x + b * b))

    def upper(y: float, cy: float) -> float:
        logy = _stable_log(y, cy)
        return y * (-logy) ** k / ((1.0 + a * a * y * y) * (1.0 + b * b * y * y))

    v_lower, _, _ = _tanh_sinh_unit(lower, max_level=refinement)
    v_upper, _, _ = _tanh_sinh_unit(upper, max_level=refinement)
    quadrature = v_lower + v_upper
    return CheckResult(quadrature, closed, abs(quadrature - closed) <= tolerance)


def power_kernel_check(
    a: float, b: float, alpha: float, *, tolerance: float = 1e-9, refinement: int = 11
) -> CheckResult:
    """Compare the fractional-power kernel integral with its closed form.

    The integral is ``int_0^inf x^alpha / ((x^2+a^2)(x^2+b^2)) dx`` and the
    closed form ``pi (a^(alpha-1) - b^(alpha-1)) / (2 cos(pi alpha / 2)
    (b^2 - a^2))``, valid for ``0 < alpha < 1``.

    Parameters
    ----------
    a, b : float
        Positive pole parameters, ``a != b``.
    alpha : float
        Exponent strictly between 0 and 1.
    tolerance : float
        Absolute agreement threshold.
    refinement : int
        Maximum quadrature halving level.

    Returns
    -------
    CheckResult
        Quadrature value, closed form, and the agreement flag.
    """
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    if a == b:
        raise ValueError("a = b is rejected: the closed form divides by b^2 - a^2")
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie strictly between 0 and 1")
    closed = (
        math.pi
        * (a ** (alpha - 1.0) - b ** (alpha - 1.0))
        / (2.0 * math.cos(0.5 * math.pi * alpha) * (b * b - a * a))
    )

    def lower(x: float, cx: float) -> float:
        return x**alpha / ((x * x + a * a) * (x * x + b * b))

    def upper(y: float, cy: float) -> float:
        return y ** (2.0 - alpha) / ((1.0 + a * a * y * y) * (1.0 + b * b * y * y))

    v_lower, _, _ = _tanh_sinh_unit(lower, max_level=refinement)
    v_upper, _, _ = _tanh_sinh_unit(upper, max_level=refinement)
    quadrature = v_lower + v_upper
    return CheckResult(quadrature, closed, abs(quadrature - closed) <= tolerance)


def unit_log_moment_check(
    j: int,
    kernel: str = "minus",
    *,
    tolerance: float = 1e-10,
    refinement: int = 11,
    digits: int = 25,
) -> CheckResult:
    """Quadrature check of ``int_0^1 log^j x / (x^2 -+ 1) dx`` closed forms.

    Parameters
    ----------
    j : int
        Log power, at most 8 here.  The ``minus`` kernel needs ``j >= 1``
        (the ``j = 0`` integral diverges and is rejected by the closed form).
    kernel : {"minus", "plus"}
        Denominator ``x^2 - 1`` or ``x^2 + 1``.
    tolerance : float
        Absolute agreement threshold.
    refinement : int
        Maximum quadrature halving level.
    digits : int
        Working precision for evaluating the exact closed form.

    Returns
    -------
    CheckResult
        Quadrature value, closed form, and the agreement flag.
    """
    if j > 8:
        raise ValueError("j must be at most 8 for the quadrature check")
    combo = unit_log_moment_closed(j, kernel=kernel)
    closed = float(combination_value(combo, digits=digits))
    if kernel == "minus":

        def integrand(x: float, cx: float) -> float:
            ratio = _log_ratio_minus(x, cx)
            if j == 1:
                return ratio
            return ratio * _stable_log(x, cx) ** (j - 1)

    else:

        def integrand(x: float, cx: float) -> float:
            return _stable_log(x, cx) ** j / (x * x + 1.0)

    value, _, _ = _tanh_sinh_unit(integrand, max_level=refinement)
    return CheckResult(value, closed, abs(value - closed) <= tolerance)


def log1p_moment_check(
    h: int, *, tolerance: float = 1e-8, refinement: int = 11, digits: int = 25
) -> CheckResult:
    """Quadrature check of ``int_0^1 log(1+x) log^(2h-1) x / (x^2-1) dx``.

    Parameters
    ----------
    h : int
        Half log power, ``h >= 1``.
    tolerance : float
        Absolute agreement threshold.
    refinement : int
        Maximum quadrature halving level.
    digits : int
        Working precision for the exact closed form.

    Returns
    -------
    CheckResult
        Quadrature value, closed form, and the agreement flag.
    """
    combo = log1p_moment_closed(h)
    closed = float(combination_value(combo, digits=digits))

    def integrand(x: float, cx: float) -> float:
        ratio = _log_ratio_minus(x, cx)
        if h == 1:
            return math.log1p(x) * ratio
        return math.log1p(x) * ratio * _stable_log(x, cx) ** (2 * h - 2)

    value, _, _ = _tanh_sinh_unit(integrand, max_level=refinement)
    return CheckResult(value, closed, abs(value - closed) <= tolerance)


def log_square_moment_check(
    h: int, *, tolerance: float = 1e-8, refinement: int = 11, digits: int = 25
) -> CheckResult:
    """Quadrature check of ``int_0^inf log(1+x^2) log^(2h) x / (x^2+1) dx``.

    Parameters
    ----------
    h : int
        Half log power, ``h >= 0``.
    tolerance : float
        Absolute agreement threshold.
    refinement : int
        Maximum quadrature halving level.
    digits : int
        Working precision for the exact closed form.

    Returns
    -------
    CheckResult
        Quadrature value, closed form, and the agreement flag.
    """
    combo = log_square_moment_closed(h)
    closed = float(combination_value(combo, digits=digits))

    def lower(x: float, cx: float) -> float:
        logx = _stable_log(x, cx)
        return math.log1p(x * x) * logx ** (2 * h) / (x * x + 1.0)

    def upper(y: float, cy: float) -> float:
        logy = _stable_log(y, cy)
        return (math.log1p(y * y) - 2.0 * logy) * logy ** (2 * h) / (1.0 + y * y)

    v_lower, _, _ = _tanh_sinh_unit(lower, max_level=refinement)
    v_upper, _, _ = _tanh_sinh_unit(upper, max_level=refinement)
    quadrature = v_lower + v_upper
    return CheckResult(quadrature, closed, abs(quadrature - closed) <= tolerance)


def arctangent_moment_check(
    h: int, *, tolerance: float = 1e-8, refinement: int = 11, digits: int = 25
) -> CheckResult:
    """Quadrature check of ``int_0^inf Ti_2(x) log^(2h) x / (x^2+1) dx``.

    Parameters
    ----------
    h : int
        Half log power, ``h >= 0``.
    tolerance : float
        Absolute agreement threshold.
    refinement : int
        Maximum quadrature halving level.
    digits : int
        Working precision for the exact closed form.

    Returns
    -------
    CheckResult
        Quadrature value, closed form, and the agreement flag.
    """
    combo = arctangent_moment_closed(h)
    closed = float(combination_value(combo, digits=digits))

    def lower(x: float, cx: float) -> float:
        logx = _stable_log(x, cx)
        return _inverse_tangent_integral(x) * logx ** (2 * h) / (x * x + 1.0)

    def upper(y: float, cy: float) -> float:
        logy = _stable_log(y, cy)
        inverted = _inverse_tangent_integral(y) - 0.5 * math.pi * logy
        return inverted * logy ** (2 * h) / (1.0 + y * y)

    v_lower, _, _ = _tanh_sinh_unit(lower, max_level=refinement)
    v_upper, _, _ = _tanh_sinh_unit(upper, max_level=refinement)
    quadrature = v_lower + v_upper
    return CheckResult(quadrature, closed, abs(quadrature - closed) <= tolerance)


# ---------------------------------------------------------------------------
# reduced one-dimensional representation
# ---------------------------------------------------------------------------

def _symmetrized_measure(spec: FamilySpec) -> Callable[[float, float, float], float]:
    """Return ``S(x) = M(x) + M(1/x)`` on ``(0, 1)`` for the family's base measure.

    ``M`` is the (pi-scaled) base measure of the one-parameter polynomial the
    family reduces to; folding the tail through ``x -> 1/x`` turns the
    half-line log moments into single unit-interval integrals.  The closed
    combinations below avoid forming ``1/x`` so they stay finite for tiny
    ``x``; tests assert they equal ``M(x) + M(1/x)`` built directly from the
    ``base_measure_*`` functions.
    """
    family = spec.family
    if family is Family.ONE:

        def symmetrized(x: float, cx: float, logx: float) -> float:
            return -logx

    elif family is Family.TWO:

        def symmetrized(x: float, cx: float, logx: float) -> float:
            return 4.0 * _script_l3(x) - _PI_SQUARED * logx

    elif spec.parity == 0:
        # even transform count: the parameter is real and takes both signs
        # symmetrically, so the effective measure is the sign average

        def symmetrized(x: float, cx: float, logx: float) -> float:
            return math.log1p(x) - logx

    else:
        # odd transform count: purely imaginary parameter mode

        def symmetrized(x: float, cx: float, logx: float) -> float:
            return (
                0.5 * math.pi * math.log1p(x * x)
                + 2.0 * _inverse_tangent_integral(x)
                - math.pi * logx
            )

    return symmetrized


def _measure_pi_scale(spec: FamilySpec) -> int:
    """Power of pi carried by the family's base measure."""
    if spec.family is Family.ONE:
        return 0
    if spec.family is Family.TWO:
        return 2
    return 1 if spec.parity else 0


def reduced_integral(spec: FamilySpec, *, refinement: int = 11) -> IntegralEstimate:
    """Mahler measure via the reduced one-dimensional integral representation.

    The multi-variable torus integral collapses to rational combinations of
    ``int_0^inf S(x) log^j x / (x^2 -+ 1) dx`` with weights ``coeff_a`` /
    ``coeff_b`` (even/odd transform counts) and ``S`` the symmetrized base
    measure; each integral is folded onto ``(0, 1)`` and evaluated by
    adaptive tanh-sinh quadrature.

    Parameters
    ----------
    spec : FamilySpec
        Family member with at most 6 transforms.
    refinement : int
        Maximum quadrature halving level; raising it by one doubles the
        finest refinement (used by the convergence invariance check).

    Returns
    -------
    IntegralEstimate
        An estimate of the measure ``m`` itself (no pi normalization).
    """
    if spec.n_transforms > 6:
        raise ValueError("reduced_integral supports at most 6 transforms")
    if spec.family is Family.TWO and spec.n_transforms == 0:
        # transform-free base case: evaluate the pi^2-scaled base measure at 1
        return IntegralEstimate(
            base_measure_two(1.0) / _PI_SQUARED, 5e-15, "series", 1
        )
    symmetrized = _symmetrized_measure(spec)
    scale = math.pi ** _measure_pi_scale(spec)
    transforms = spec.n_transforms
    total = 0.0
    error = 0.0
    evaluations = 0
    if transforms % 2 == 0:
        n = transforms // 2
        for h in range(1, n + 1):

            def integrand(x: float, cx: float, h: int = h) -> float:
                logx = _stable_log(x, cx)
                ratio = _log_ratio_minus(x, cx)
                power = logx ** (2 * h - 2) if h > 1 else 1.0
                return symmetrized(x, cx, logx) * ratio * power

            value, err, count = _tanh_sinh_unit(integrand, max_level=refinement)
            weight = float(coeff_a(n, h - 1)) * (2.0 / math.pi) ** (2 * h)
            total += weight * value
            error += abs(weight) * err
            evaluations += count
    else:
        n = (transforms - 1) // 2
        for h in range(n + 1):

            def integrand(x: float, cx: float, h: int = h) -> float:
                logx = _stable_log(x, cx)
                power = logx ** (2 * h) if h > 0 else 1.0
                return symmetrized(x, cx, logx) * power / (x * x + 1.0)

            value, err, count = _tanh_sinh_unit(integrand, max_level=refinement)
            weight = float(coeff_b(n, h)) * (2.0 / math.pi) ** (2 * h + 1)
            total += weight * value
            error += abs(weight) * err
            evaluations += count
    return IntegralEstimate(
        total / scale, error / scale, "adaptive_quadrature", evaluations
    )


def closed_form_measure(spec: FamilySpec, digits: int = 25) -> float:
    """Float value of the closed-form measure ``m`` for comparison purposes.

    Evaluates the exact combination at ``digits`` working digits, divides by
    ``pi**pi_normalization`` and rounds to float64.

    Parameters
    ----------
    spec : FamilySpec
        Family member.
    digits : int
        Working precision for the exact side.

    Returns
    -------
    float
        The measure ``m``.
    """
    result = mahler_measure(spec)
    with mp.workdps(digits + 10):
        value = combination_value(result.combination, digits=digits)
        return float(value / mp.pi**result.pi_normalization)


# ---------------------------------------------------------------------------
# direct torus integration
# ---------------------------------------------------------------------------

def _torus_polynomial_values(spec: FamilySpec, points: np.ndarray) -> np.ndarray:
    """``|P|`` at torus points parameterized by uniform ``[0, 1)`` rows.

    The rational families are cleared of denominators first (multiplying by
    ``prod (1 + x_i)`` changes the measure by ``m(prod (1 + x_i)) = 0``), so
    the integrand is a genuine polynomial with no poles on the torus.
    """
    angles = (2.0 * math.pi) * points
    n = spec.n_transforms
    count = points.shape[0]
    if n:
        roots = np.exp(1j * angles[:, :n])
        plus = np.prod(1.0 + roots, axis=1)
        minus = np.prod(1.0 - roots, axis=1)
    else:
        plus = np.ones(count, dtype=complex)
        minus = np.ones(count, dtype=complex)
    if spec.family is Family.ONE:
        z = np.exp(1j * angles[:, n])
        return np.abs(plus + minus * z)
    if spec.family is Family.TWO:
        x = np.exp(1j * angles[:, n])
        y = np.exp(1j * angles[:, n + 1])
        z = np.exp(1j * angles[:, n + 2])
        return np.abs((1.0 + x) * plus + (1.0 + y) * z * minus)
    x = np.exp(1j * angles[:, n])
    y = np.exp(1j * angles[:, n + 1])
    return np.abs(plus + minus * x + (plus - minus) * y)


def _replicate_mean_log(values: np.ndarray) -> Tuple[float, int]:
    """Mean of ``log`` over the finite samples (zeros of ``P`` are skipped)."""
    with np.errstate(divide="ignore"):
        logs = np.log(values)
    finite = np.isfinite(logs)
    used = int(np.count_nonzero(finite))
    if used == 0:
        raise ValueError("all samples fell on zeros of the polynomial")
    return float(np.mean(logs[finite])), used


def torus_qmc(
    spec: FamilySpec,
    samples: int = 10_000_000,
    seed: int = 0,
    *,
    replicates: int = 10,
    mode: str = "sobol",
) -> IntegralEstimate:
    """Direct (quasi-)Monte Carlo average of ``log |P|`` over the torus.

    ``sobol`` mode uses a fixed Sobol point set per replicate with
    seed-controlled random shifts, so results are reproducible bit-for-bit
    given ``(seed, samples)``; ``pseudo`` mode uses plain pseudo-random
    points (useful for checking the ``O(N^{-1/2})`` error law).  The error
    estimate is the standard error of the replicate means.

    Parameters
    ----------
    spec : FamilySpec
        Family member with torus dimension at most 4.
    samples : int
        Total sample budget across replicates (at most 1e9).  In ``sobol``
        mode the per-replicate count is rounded up to a power of two.
    seed : int
        Seed for the shift (or sampling) generator.
    replicates : int
        Number of independent randomizations (at least 2).
    mode : {"sobol", "pseudo"}
        Point-set construction.

    Returns
    -------
    IntegralEstimate
        An estimate of the measure ``m`` with a statistical error bar.
    """
    dim = spec.torus_dimension
    if dim > 4:
        raise ValueError(
            "torus dimension %d exceeds the supported maximum of 4" % (dim,)
        )
    if samples > 10**9:
        raise ValueError("at most 1e9 samples are supported")
    if samples < 1:
        raise ValueError("samples must be positive")
    if replicates < 2:
        raise ValueError("at least 2 replicates are needed for an error estimate")
    if mode not in ("sobol", "pseudo"):
        raise ValueError("mode must be 'sobol' or 'pseudo'")
    per_replicate = max(1, -(-samples // replicates))
    rng = np.random.default_rng(seed)
    means = []
    total_used = 0
    if mode == "sobol":
        exponent = max(1, (per_replicate - 1).bit_length())
        base = qmc.Sobol(d=dim, scramble=False).random_base2(exponent)
        for _ in range(replicates):
            shifted = (base + rng.random(dim)) % 1.0
            mean, used = _replicate_mean_log(_torus_polynomial_values(spec, shifted))
            means.append(mean)
            total_used += used
    else:
        for _ in range(replicates):
            points = rng.random((per_replicate, dim))
            mean, used = _replicate_mean_log(_torus_polynomial_values(spec, points))
            means.append(mean)
            total_used += used
    value = float(np.mean(means))
    sigma = float(np.std(means, ddof=1) / math.sqrt(replicates))
    return IntegralEstimate(value, max(sigma, 5e-17), "qmc", total_used)


def imaginary_measure_qmc(
    alpha: float,
    samples: int = 1 << 21,
    seed: int = 0,
    *,
    replicates: int = 8,
) -> IntegralEstimate:
    """QMC estimate of ``m(1 + i alpha x + (1 - i alpha) y)`` on the 2-torus.

    This is the polynomial behind the imaginary mode of
    :func:`base_measure_three`; comparing estimates at ``alpha`` and
    ``-alpha`` checks numerically that the measure depends only on
    ``|alpha|`` (the sign-absorption property the odd reduced representation
    relies on).

    Parameters
    ----------
    alpha : float
        Real parameter (either sign).
    samples : int
        Total sample budget across replicates.
    seed : int
        Seed for the shift generator.
    replicates : int
        Number of shifted replicates (at least 2).

    Returns
    -------
    IntegralEstimate
        An estimate of the measure with a statistical error bar.
    """
    if replicates < 2:
        raise ValueError("at least 2 replicates are needed for an error estimate")
    per_replicate = max(2, -(-samples // replicates))
    exponent = max(1, (per_replicate - 1).bit_length())
    base = qmc.Sobol(d=2, scramble=False).random_base2(exponent)
    rng = np.random.default_rng(seed)
    means = []
    total_used = 0
    for _ in range(replicates):
        shifted = (base + rng.random(2)) % 1.0
        angles = (2.0 * math.pi) * shifted
        x = np.exp(1j * angles[:, 0])
        y = np.exp(1j * angles[:, 1])
        values = np.abs(1.0 + 1j * alpha * x + (1.0 - 1j * alpha) * y)
        mean, used = _replicate_mean_log(values)
        means.append(mean)
        total_used += used
    value = float(np.mean(means))
    sigma = float(np.std(means, ddof=1) / math.sqrt(replicates))
    return IntegralEstimate(value, max(sigma, 5e-17), "qmc", total_used)
