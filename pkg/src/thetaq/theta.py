"""Two-parameter theta functions specialized to signed powers of q.

A :class:`ThetaArg` with sign ``eps`` and half-exponents ``a``, ``b``
denotes the bilateral series

    f(eps*q^(a/2), eps*q^(b/2)) = sum over n in Z of
        eps^n * q^((a*n(n+1)/2 + b*n(n-1)/2) / 2)

which converges formally whenever a + b > 0.  The classical special
cases phi, psi, f(-q), X and Y are fixed specializations whose
expansions generate squares, triangular, signed-pentagonal, generalized
pentagonal and generalized octagonal numbers respectively.

The module provides two independent expansion routes (the bilateral sum
and the Jacobi triple product), a normalization that clears a negative
exponent, and the n-term dissection of a theta function into shifted
theta terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .series import COEFF_LIMIT, CoefficientOverflowError, HalfPowerSeries

_SAFE_FACTOR = 2**62 - 1


class ExpansionError(ValueError):
    """The requested specialization diverges as a formal series."""


@dataclass(frozen=True)
class ThetaArg:
    """f(eps*q^(a/2), eps*q^(b/2)); symmetric in a and b."""

    eps: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")

    def swapped(self) -> "ThetaArg":
        return ThetaArg(self.eps, self.b, self.a)

    def is_zero_function(self) -> bool:
        """True when one argument is eps*q^0 = -1, which kills the series."""
        return self.eps == -1 and (self.a == 0 or self.b == 0)

    def is_expandable(self) -> bool:
        if self.is_zero_function():
            return True
        if self.a + self.b > 0:
            return True
        return False

    def min_exponent(self) -> int:
        """Least exponent carrying a term of the bilateral sum (always <= 0)."""
        if self.is_zero_function():
            return 0
        s, d = self.a + self.b, self.a - self.b
        if s <= 0:
            raise ExpansionError(f"divergent specialization {self}")
        # vertex of the exponent quadratic ((s*n + d)*n)/2
        n_star = -d / (2 * s)
        best = 0
        for n in (math.floor(n_star), math.ceil(n_star)):
            best = min(best, _term_exponent(self.a, self.b, n))
        return best


def _term_exponent(a: int, b: int, n: int) -> int:
    return (a * n * (n + 1) + b * n * (n - 1)) // 2


def theta_expand(arg: ThetaArg, hi: int) -> HalfPowerSeries:
    """Bilateral-sum expansion, exact through ``hi`` half-units."""
    if arg.is_zero_function():
        return HalfPowerSeries.zero(max(hi, 0), min(0, hi))
    a, b, eps = arg.a, arg.b, arg.eps
    s = a + b
    if s <= 0:
        raise ExpansionError(f"divergent specialization {arg}")
    # All n with ((a+b)n^2 + (a-b)n)/2 <= hi lie within the quadratic roots;
    # two extra indices of slack absorb the integer rounding.
    d = a - b
    disc = d * d + 8 * s * max(hi, 0)
    root = math.isqrt(disc) if disc >= 0 else 0
    n_lo = (-d - root) // (2 * s) - 2
    n_hi = (-d + root) // (2 * s) + 2
    items = []
    for n in range(n_lo, n_hi + 1):
        e = _term_exponent(a, b, n)
        if e <= hi:
            items.append((e, 1 if eps == 1 or n % 2 == 0 else -1))
    return HalfPowerSeries.from_items(items, hi)


def jacobi_triple_product(arg: ThetaArg, hi: int) -> HalfPowerSeries:
    """Product-form expansion, exact through ``hi`` half-units.

    Multiplies out (1 + eps*q^((a+sn)/2)) (1 + eps*q^((b+sn)/2)) for n >= 0
    and (1 - q^(sn/2)) for n >= 1, s = a + b, dropping factors beyond the
    bound.  Serves as an independent oracle for :func:`theta_expand`.
    """
    a, b, eps = arg.a, arg.b, arg.eps
    if a < 0 or b < 0 or a + b <= 0:
        raise ExpansionError(
            f"triple product needs nonnegative exponents with a+b > 0, got {arg}"
        )
    if hi < 0:
        return HalfPowerSeries.zero(0, hi)
    s = a + b
    state = _ProductState(hi)
    n = 0
    while True:
        e1, e2, e3 = a + s * n, b + s * n, s * (n + 1)
        if min(e1, e2, e3) > hi:
            break
        state.apply(e1, eps)
        state.apply(e2, eps)
        state.apply(e3, -1)
        n += 1
    return state.finish()


class _ProductState:
    """Running truncated product of binomial factors (1 + sign*q^(e/2)).

    Stays on int64 while a doubling bound proves the next factor cannot
    wrap; past that it recomputes the true maximum and, if genuinely too
    large, finishes exactly in Python integers so overflow of the stored
    width is always a raised error, never a wrapped value.
    """

    def __init__(self, hi: int) -> None:
        self.hi = hi
        self.arr = np.zeros(hi + 1, dtype=np.int64)
        self.arr[0] = 1
        self.bound = 1  # proven upper bound on coefficient magnitudes
        self.exact: list[int] | None = None  # Python-int fallback

    def apply(self, e: int, sign: int) -> None:
        if e > self.hi:
            return
        if self.exact is not None:
            if e == 0:
                self.exact = [(1 + sign) * c for c in self.exact]
            else:
                for i in range(self.hi, e - 1, -1):
                    self.exact[i] += sign * self.exact[i - e]
            return
        if 2 * self.bound > _SAFE_FACTOR:
            self.bound = int(np.abs(self.arr).max())
            if 2 * self.bound > _SAFE_FACTOR:
                self.exact = [int(c) for c in self.arr]
                self.apply(e, sign)
                return
        if e == 0:
            self.arr = self.arr * (1 + sign)
        else:
            self.arr[e:] = self.arr[e:] + sign * self.arr[:-e]
        self.bound *= 2

    def finish(self) -> HalfPowerSeries:
        if self.exact is None:
            return HalfPowerSeries(0, self.hi, self.arr)
        for c in self.exact:
            if abs(c) > COEFF_LIMIT:
                raise CoefficientOverflowError(
                    "triple product coefficient exceeds the 64-bit width"
                )
        return HalfPowerSeries(0, self.hi, self.exact)


@dataclass(frozen=True)
class NormalizedTheta:
    """sign * q^(shift/2) * f(arg), with arg exponents 0 <= a <= b."""

    sign: int
    shift: int
    arg: ThetaArg

    def expand(self, hi: int) -> HalfPowerSeries:
        series = theta_expand(self.arg, hi - self.shift).shift(self.shift)
        return series if self.sign == 1 else -series


def theta_normalize(arg: ThetaArg) -> NormalizedTheta:
    """Clear a negative exponent via the standard index shift.

    For f(+-q^(-r/2), +-q^(s/2)) with 0 <= r < s the function equals
    (+-1)^m q^(-h/2) f(+-q^(l/2), +-q^(k/2)) where m = floor(s/(s-r)),
    l = m(s-r) - r, k = s - m(s-r) and h = m*r - m(m-1)(s-r)/2; the sign
    twist applies only in the negative-sign case.
    """
    a, b = arg.a, arg.b
    if a >= 0 and b >= 0:
        lo, hi_ = sorted((a, b))
        return NormalizedTheta(1, 0, ThetaArg(arg.eps, lo, hi_))
    if a < 0 and b < 0:
        raise ExpansionError(f"both exponents negative in {arg}")
    r, s = -min(a, b), max(a, b)
    if r >= s:
        raise ExpansionError(f"divergent specialization {arg}")
    m = s // (s - r)
    l = m * (s - r) - r
    k = s - m * (s - r)
    h = m * r - (m * (m - 1) // 2) * (s - r)
    sign = -1 if (arg.eps == -1 and m % 2 == 1) else 1
    lo, hi_ = sorted((l, k))
    return NormalizedTheta(sign, -h, ThetaArg(arg.eps, lo, hi_))


_SPECIALS = {
    "phi": (1, 2, 2),  # f(q, q): squares
    "psi": (1, 2, 6),  # f(q, q^3): triangular numbers
    "fneg": (-1, 2, 4),  # f(-q, -q^2): signed pentagonal numbers
    "X": (1, 2, 4),  # f(q, q^2): generalized pentagonal numbers
    "Y": (1, 2, 10),  # f(q, q^5): generalized octagonal numbers
}


def theta_special(name: str, scale: int = 1) -> ThetaArg:
    """Classical specialization evaluated at q^scale."""
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    if name not in _SPECIALS:
        raise KeyError(f"unknown special function {name!r}")
    eps, a, b = _SPECIALS[name]
    return ThetaArg(eps, a * scale, b * scale)


def f_delta(delta: int, arg: ThetaArg) -> ThetaArg:
    """Flip the shared sign when ``delta`` is odd."""
    if delta % 2 == 0:
        return arg
    return ThetaArg(-arg.eps, arg.a, arg.b)


def theta_dissection(arg: ThetaArg, n: int) -> list[tuple[int, int, ThetaArg]]:
    """Split f into n shifted theta terms by index residue.

    Returns (sign, shift, arg) triples whose expansions sum back to the
    original function: term r carries the monomial of the r-th series
    term and a theta function collecting indices congruent to r mod n.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    a, b, eps = arg.a, arg.b, arg.eps

    def u(m: int) -> int:
        return (a * m * (m + 1) + b * m * (m - 1)) // 2

    def v(m: int) -> int:
        return (a * m * (m - 1) + b * m * (m + 1)) // 2

    terms = []
    new_eps = 1 if eps == 1 or n % 2 == 0 else -1
    for r in range(n):
        sign = 1 if eps == 1 or r % 2 == 0 else -1
        terms.append(
            (sign, u(r), ThetaArg(new_eps, u(n + r) - u(r), v(n - r) - u(r)))
        )
    return terms
