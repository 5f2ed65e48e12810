"""Arbitrary-precision numerical values of the constants in closed forms.

Two evaluation routes are deliberately kept independent wherever a constant
matters to a closed form:

* assembled routes (:func:`li_single`, :func:`combination_value`) fold exact
  Bernoulli/Euler rationals computed in :mod:`mahlerzeta.exact`;
* series routes (:func:`li_single_series`, :func:`multiple_polylog`) sum the
  defining series directly, with convergence acceleration.

All functions take a ``digits`` argument (decimal digits of target accuracy)
and run internally with guard digits; returned values are mpmath numbers.

The alternating single series use the Cohen-Rodriguez Villegas-Zagier
Chebyshev acceleration, whose error decays like (3 + sqrt(8))^(-n) for n
terms.  The double series are evaluated by taking outer partial sums at
equally spaced checkpoints (a multiple of 4 apart, so that fourth-root-of-
unity oscillation is sampled coherently) and extrapolating the checkpoint
sequence to its limit with Neville's scheme in the reciprocal checkpoint
index; the stride between checkpoints doubles until the extrapolation
stabilizes below the requested tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, List, Optional, Tuple

import mpmath as mp

from .combinations import ZetaCombination
from .exact import bernoulli, euler_number
from .store import ConstantStore

__all__ = [
    "alternating_sum",
    "zeta",
    "dirichlet_l_chi4",
    "li_single",
    "li_single_series",
    "multiple_polylog",
    "script_l_single",
    "script_l_double",
    "l3_ii_value",
    "combination_value",
]


def _require_digits(digits: int) -> None:
    if digits < 1:
        raise ValueError("digits must be a positive integer")


def _as_unit(x) -> complex:
    """Validate that ``x`` is a fourth root of unity; return it as complex."""
    try:
        key = complex(x)
    except (TypeError, ValueError):
        raise ValueError(f"argument must be one of 1, -1, i, -i (got {x!r})")
    for unit in (1 + 0j, -1 + 0j, 1j, -1j):
        if key == unit:
            return unit
    raise ValueError(f"argument must be one of 1, -1, i, -i (got {x!r})")


def alternating_sum(term: Callable[[int], "mp.mpf"], digits: int) -> "mp.mpf":
    """Accelerated value of ``sum_{j>=0} (-1)^j term(j)``.

    ``term`` must be the restriction of a totally monotone function to the
    nonnegative integers (true for all the series used here), which is the
    convergence condition of the Chebyshev acceleration.
    """
    _require_digits(digits)
    with mp.workdps(digits + 10):
        n = int(1.31 * (digits + 10)) + 8
        d = ((3 + mp.sqrt(8)) ** n + (3 - mp.sqrt(8)) ** n) / 2
        b = mp.mpf(-1)
        c = -d
        s = mp.mpf(0)
        for k in range(n):
            c = b - c
            s += c * term(k)
            b = (k + n) * (k - n) * b / ((k + mp.mpf(1) / 2) * (k + 1))
        return +(s / d)


def zeta(s: int, digits: int = 30) -> "mp.mpf":
    """Riemann zeta at an integer ``s >= 2``.

    Even arguments are exact rational multiples of pi^s (via Bernoulli
    numbers); odd arguments are computed from the accelerated alternating
    series eta(s) = sum (-1)^{j-1}/j^s through zeta = eta/(1 - 2^{1-s}).
    """
    if s < 2:
        raise ValueError("zeta argument must be an integer >= 2 (pole at 1)")
    _require_digits(digits)
    with mp.workdps(digits + 10):
        if s % 2 == 0:
            k = s // 2
            c = Fraction((-1) ** (k + 1) * 2**s, 2 * factorial(s)) * bernoulli(s)
            return +(mp.mpf(c.numerator) / c.denominator * mp.pi**s)
        eta = alternating_sum(lambda j: mp.mpf(1) / mp.mpf((j + 1) ** s), digits)
        return +(eta / (1 - mp.mpf(2) ** (1 - s)))


def dirichlet_l_chi4(s: int, digits: int = 30) -> "mp.mpf":
    """Dirichlet L-value L(chi_-4, s) = sum_{j>=0} (-1)^j/(2j+1)^s for s >= 1.

    Odd arguments are exact rational multiples of pi^s (via Euler numbers);
    even arguments are computed from the accelerated defining series.
    ``s = 2`` is Catalan's constant.
    """
    if s < 1:
        raise ValueError("L-function argument must be an integer >= 1")
    _require_digits(digits)
    with mp.workdps(digits + 10):
        if s % 2 == 1:
            k = (s - 1) // 2
            c = Fraction(
                (-1) ** k * euler_number(2 * k), 2 ** (2 * k + 2) * factorial(2 * k)
            )
            return +(mp.mpf(c.numerator) / c.denominator * mp.pi**s)
        return +alternating_sum(lambda j: mp.mpf(1) / mp.mpf((2 * j + 1) ** s), digits)


def li_single(s: int, base, digits: int = 30):
    """Polylogarithm Li_s at a fourth root of unity, assembled exactly.

    Uses Li_s(-1) = -(1 - 2^{1-s}) zeta(s) (with the s = 1 limit -log 2) and
    Li_s(+-i) = 2^{-s} Li_s(-1) +- i L(chi_-4, s).  ``Li_1(1)`` diverges.
    Returns an mpf for real base, an mpc for imaginary base.
    """
    if s < 1:
        raise ValueError("polylogarithm index must be an integer >= 1")
    _require_digits(digits)
    u = _as_unit(base)
    with mp.workdps(digits + 10):
        if u == 1:
            if s == 1:
                raise ValueError("Li_1(1) diverges")
            return zeta(s, digits)
        if s == 1:
            at_minus_one = -mp.log(2)
        else:
            at_minus_one = -(1 - mp.mpf(2) ** (1 - s)) * zeta(s, digits)
        if u == -1:
            return +at_minus_one
        imag = dirichlet_l_chi4(s, digits)
        sign = 1 if u == 1j else -1
        return +mp.mpc(at_minus_one * mp.mpf(2) ** (-s), sign * imag)


def li_single_series(s: int, base, digits: int = 30):
    """Polylogarithm Li_s at a fourth root of unity, from the series only.

    An independent cross-check of :func:`li_single`: the defining series is
    rearranged into alternating series and accelerated directly, with no
    Bernoulli/Euler folding anywhere.
    """
    if s < 1:
        raise ValueError("polylogarithm index must be an integer >= 1")
    _require_digits(digits)
    u = _as_unit(base)
    with mp.workdps(digits + 10):
        if u == 1:
            if s == 1:
                raise ValueError("Li_1(1) diverges")
            eta = alternating_sum(lambda j: mp.mpf(1) / mp.mpf((j + 1) ** s), digits)
            return +(eta / (1 - mp.mpf(2) ** (1 - s)))
        if u == -1:
            return +(
                -alternating_sum(lambda j: mp.mpf(1) / mp.mpf((j + 1) ** s), digits)
            )
        # Even-index terms carry (+-i)^{2m} = (-1)^m; odd-index ones the i part.
        re = -alternating_sum(lambda j: mp.mpf(1) / mp.mpf((2 * (j + 1)) ** s), digits)
        im = alternating_sum(lambda j: mp.mpf(1) / mp.mpf((2 * j + 1) ** s), digits)
        sign = 1 if u == 1j else -1
        return +mp.mpc(re, sign * im)


def _checkpoint_partial_sums(
    r: int, s: int, u1: complex, u2: complex, stride: int, grid: int
) -> List["mp.mpc"]:
    """Outer partial sums of the double series at ``grid`` checkpoints.

    Checkpoints sit at multiples of ``4 * stride`` terms so that powers of
    fourth roots of unity are sampled at a fixed phase.
    """
    x1 = mp.mpc(u1)
    x2 = mp.mpc(u2)
    step = 4 * stride
    prefix = mp.mpc(0)  # sum_{k1 <= k} x1^{k1}/k1^r
    total = mp.mpc(0)
    p1 = mp.mpc(1)
    p2 = mp.mpc(1)
    out: List[mp.mpc] = []
    k = 0
    for _ in range(grid):
        for _ in range(step):
            k += 1
            p1 *= x1
            p2 *= x2
            total += p2 / mp.mpf(k**s) * prefix
            prefix += p1 / mp.mpf(k**r)
        out.append(total)
    return out


def _extrapolate_to_zero(values: List["mp.mpc"]) -> Tuple["mp.mpc", "mp.mpf"]:
    """Neville extrapolation of checkpoint values to infinite index.

    Nodes are the reciprocals 1/m of the checkpoint numbers; the returned
    error estimate compares the full-order extrapolant against both
    one-point-fewer extrapolants.
    """
    n = len(values)
    xs = [mp.mpf(1) / (m + 1) for m in range(n)]
    tab = list(values)
    penultimate: Optional[List[mp.mpc]] = None
    for lev in range(1, n):
        tab = [
            (tab[i + 1] * xs[i] - tab[i] * xs[i + lev]) / (xs[i] - xs[i + lev])
            for i in range(n - lev)
        ]
        if lev == n - 2:
            penultimate = list(tab)
    est = tab[0]
    if penultimate is None:
        err = abs(est - values[-1])
    else:
        err = max(abs(est - penultimate[0]), abs(est - penultimate[1]))
    return est, err


def multiple_polylog(r: int, s: int, x1, x2, digits: int = 30):
    """Double polylogarithm Li_{r,s}(x1, x2) = sum_{0<k1<k2} x1^{k1} x2^{k2} / (k1^r k2^s).

    Arguments must be fourth roots of unity.  The divergent case ``s = 1``
    with ``x2 = 1`` is rejected.  Returns an mpf when both arguments are
    real, an mpc otherwise.
    """
    if r < 1 or s < 1:
        raise ValueError("polylogarithm indices must be integers >= 1")
    _require_digits(digits)
    u1 = _as_unit(x1)
    u2 = _as_unit(x2)
    if s == 1 and u2 == 1:
        raise ValueError("Li_{r,1}(x1, 1) diverges")
    with mp.workdps(digits + 15):
        target = mp.mpf(10) ** (-(digits + 2))
        stride = 64 if digits <= 12 else 400
        for _ in range(8):
            sums = _checkpoint_partial_sums(r, s, u1, u2, stride, 12)
            est, err = _extrapolate_to_zero(sums)
            if err <= target:
                if u1.imag == 0 and u2.imag == 0:
                    return +est.real
                return +est
            stride *= 2
        raise RuntimeError(
            f"double-series extrapolation failed to reach {digits} digits "
            f"for Li_{{{r},{s}}}({x1}, {x2})"
        )


def script_l_single(r: int, alpha, digits: int = 30):
    """The signed combination scriptL_r(alpha) = Li_r(alpha) - Li_r(-alpha)."""
    u = _as_unit(alpha)
    with mp.workdps(digits + 10):
        return +(li_single(r, u, digits) - li_single(r, -u, digits))


def script_l_double(r: int, s: int, alpha, beta, digits: int = 30):
    """The four-term signed combination

        scriptL_{r,s}(alpha, beta) = 2 ( Li_{r,s}(alpha, beta)
                                       - Li_{r,s}(-alpha, beta)
                                       + Li_{r,s}(alpha, -beta)
                                       - Li_{r,s}(-alpha, -beta) ).

    Every constituent must converge individually (so ``s = 1`` requires
    ``beta != +-1``).
    """
    u1 = _as_unit(alpha)
    u2 = _as_unit(beta)
    with mp.workdps(digits + 10):
        total = (
            multiple_polylog(r, s, u1, u2, digits)
            - multiple_polylog(r, s, -u1, u2, digits)
            + multiple_polylog(r, s, u1, -u2, digits)
            - multiple_polylog(r, s, -u1, -u2, digits)
        )
        return +(2 * total)


def l3_ii_value(b: int, digits: int = 30) -> "mp.mpf":
    """The real constant i * scriptL_{3,b}(i, i) for odd ``b >= 1``.

    The imaginary part of i * scriptL_{3,b}(i, i) cancels identically; a
    residual beyond series tolerance indicates an evaluation bug and raises.
    """
    if b < 1 or b % 2 == 0:
        raise ValueError(f"requires an odd index >= 1 (got {b})")
    _require_digits(digits)
    with mp.workdps(digits + 10):
        value = mp.mpc(0, 1) * script_l_double(3, b, 1j, 1j, digits + 2)
        if abs(value.imag) > mp.mpf(10) ** (-(digits - 3)):
            raise RuntimeError(
                "imaginary part failed to cancel in i*scriptL_{3,%d}(i,i)" % b
            )
        return +value.real


def combination_value(
    combo: ZetaCombination, digits: int = 30, store: Optional[ConstantStore] = None
) -> "mp.mpf":
    """Numerical value of a symbolic combination at ``digits`` digits.

    If ``store`` is given, base constants are looked up there first (a hit
    requires at least the requested precision) and newly computed ones are
    written back immediately.
    """
    _require_digits(digits)
    with mp.workdps(digits + 10):
        total = mp.mpf(0)
        for elem, coeff in combo.terms():
            value = _base_constant(elem.kind, elem.arg, digits, store)
            term = mp.mpf(coeff.numerator) / coeff.denominator
            if elem.pi_power:
                term *= mp.pi**elem.pi_power
            total += term * value
        return +total


def _base_constant(
    kind: str, arg: int, digits: int, store: Optional[ConstantStore]
) -> "mp.mpf":
    if kind == "one":
        return mp.mpf(1)
    if store is not None:
        cached = store.get(kind, arg, digits)
        if cached is not None:
            return mp.mpf(cached)
    if kind == "log2":
        value = +mp.log(2)
    elif kind == "zeta":
        value = zeta(arg, digits + 5)
    elif kind == "lchi4":
        value = dirichlet_l_chi4(arg, digits + 5)
    elif kind == "l3_ii":
        value = l3_ii_value(arg, digits + 5)
    else:
        raise ValueError(f"unknown constant kind {kind!r}")
    if store is not None:
        store.put(kind, arg, digits, mp.nstr(value, digits + 5))
        store.save()
    return value
