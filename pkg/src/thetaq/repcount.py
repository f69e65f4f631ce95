"""Representation counts for weighted ternary sums of figurate numbers.

A :class:`MixedSumSpec` fixes an ordered triple of (coefficient, kind)
slots; ``count_enumerate`` counts ordered index tuples representing N,
``count_series`` produces the same numbers as coefficients of a product
of theta expansions, and ``count_table`` computes the whole count
vector at scale.  The three routes are independent enough to check one
another.

Index domains follow the classical conventions: squares, generalized
pentagonal and generalized octagonal indices run over all integers,
triangular indices over the nonnegative integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .series import HalfPowerSeries
from .theta import theta_expand, theta_special


class FigurateKind(enum.Enum):
    SQUARE = "square"
    TRIANGULAR = "triangular"
    GEN_PENTAGONAL = "gen_pentagonal"
    GEN_OCTAGONAL = "gen_octagonal"

    @property
    def generating_special(self) -> str:
        return _GENERATING[self]


_GENERATING = {
    FigurateKind.SQUARE: "phi",
    FigurateKind.TRIANGULAR: "psi",
    FigurateKind.GEN_PENTAGONAL: "X",
    FigurateKind.GEN_OCTAGONAL: "Y",
}


def figurate_value(kind: FigurateKind, n: int) -> int:
    if kind is FigurateKind.SQUARE:
        return n * n
    if kind is FigurateKind.TRIANGULAR:
        return n * (n + 1) // 2
    if kind is FigurateKind.GEN_PENTAGONAL:
        return n * (3 * n + 1) // 2
    return n * (3 * n + 2)


def figurate_values(kind: FigurateKind, limit: int) -> list[tuple[int, int]]:
    """All (index, value) pairs with value <= limit, ascending by value.

    Generalized kinds include both signs of the index; triangular
    indices stay nonnegative.
    """
    if limit < 0:
        return []
    pairs = []
    n = 0
    while True:
        if kind is FigurateKind.TRIANGULAR or n == 0:
            candidates = [n]
        else:
            candidates = [-n, n]
        vals = [(m, figurate_value(kind, m)) for m in candidates]
        pairs.extend((m, v) for m, v in vals if v <= limit)
        # per-sign values grow monotonically, so one all-over step ends it
        if n > 0 and all(v > limit for _, v in vals):
            break
        n += 1
    pairs.sort(key=lambda p: (p[1], p[0]))
    return pairs


@lru_cache(maxsize=None)
def _value_multiplicities(kind: FigurateKind, limit: int) -> tuple[np.ndarray, np.ndarray]:
    """(values, multiplicities): attainable values <= limit with index counts."""
    mult: dict[int, int] = {}
    for _, v in figurate_values(kind, limit):
        mult[v] = mult.get(v, 0) + 1
    values = np.array(sorted(mult), dtype=np.int64)
    counts = np.array([mult[v] for v in sorted(mult)], dtype=np.int64)
    return values, counts


@lru_cache(maxsize=None)
def _membership(kind: FigurateKind, limit: int) -> np.ndarray:
    """mult[x] = number of domain indices whose figurate value equals x."""
    table = np.zeros(limit + 1, dtype=np.int64)
    values, counts = _value_multiplicities(kind, limit)
    if values.size:
        table[values] = counts
    return table


@dataclass(frozen=True)
class MixedSumSpec:
    """Ordered triple (a_i, kind_i) describing one count function."""

    terms: tuple[tuple[int, FigurateKind], ...]

    def __post_init__(self) -> None:
        if len(self.terms) != 3:
            raise ValueError("a mixed sum has exactly three slots")
        if any(a < 1 for a, _ in self.terms):
            raise ValueError("coefficients must be positive integers")

    @staticmethod
    def of(name: str, coeffs: tuple[int, int, int]) -> "MixedSumSpec":
        kinds = registry_lookup(name)
        return MixedSumSpec(tuple(zip(coeffs, kinds)))

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return tuple(a for a, _ in self.terms)  # type: ignore[return-value]

    @property
    def kinds(self) -> tuple[FigurateKind, FigurateKind, FigurateKind]:
        return tuple(k for _, k in self.terms)  # type: ignore[return-value]


# the 20 count-function signatures, keyed by their conventional names
_SQ = FigurateKind.SQUARE
_TR = FigurateKind.TRIANGULAR
_PE = FigurateKind.GEN_PENTAGONAL
_OC = FigurateKind.GEN_OCTAGONAL

REGISTRY: dict[str, tuple[FigurateKind, FigurateKind, FigurateKind]] = {
    "r": (_SQ, _SQ, _SQ),
    "T": (_TR, _TR, _TR),
    "P": (_PE, _PE, _PE),
    "G": (_OC, _OC, _OC),
    "Rt": (_SQ, _SQ, _TR),
    "Rp": (_SQ, _SQ, _PE),
    "Rg": (_SQ, _SQ, _OC),
    "Tp": (_TR, _TR, _PE),
    "Tg": (_TR, _TR, _OC),
    "rT": (_SQ, _TR, _TR),
    "rP": (_SQ, _PE, _PE),
    "rG": (_SQ, _OC, _OC),
    "pG": (_PE, _OC, _OC),
    "tP": (_TR, _PE, _PE),
    "tG": (_TR, _OC, _OC),
    "Pg": (_PE, _PE, _OC),
    "rtp": (_SQ, _TR, _PE),
    "rtg": (_SQ, _TR, _OC),
    "rpg": (_SQ, _PE, _OC),
    "tpg": (_TR, _PE, _OC),
}


def registry_lookup(name: str) -> tuple[FigurateKind, FigurateKind, FigurateKind]:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown count function {name!r}") from None


def count_enumerate(spec: MixedSumSpec, n: int) -> int:
    """Number of ordered index tuples with a1*F1 + a2*F2 + a3*F3 = n.

    Loops over the two slots with the fewest attainable values and
    resolves the third through a precomputed multiplicity table.
    """
    if n < 0:
        return 0
    slots = []
    for a, kind in spec.terms:
        values, counts = _value_multiplicities(kind, n // a)
        slots.append((a, kind, values, counts))
    slots_sorted = sorted(range(3), key=lambda idx: slots[idx][2].size)
    i1, i2, i3 = slots_sorted
    a1, _, v1, c1 = slots[i1]
    a2, _, v2, c2 = slots[i2]
    a3, kind3, _, _ = slots[i3]
    table = _membership(kind3, n // a3)
    total = 0
    for x, cx in zip(v1.tolist(), c1.tolist()):
        rest = n - a1 * x
        if rest < 0:
            break
        for y, cy in zip(v2.tolist(), c2.tolist()):
            rem = rest - a2 * y
            if rem < 0:
                break
            if rem % a3 == 0:
                total += cx * cy * int(table[rem // a3])
    return total


def count_series(spec: MixedSumSpec, order: int) -> HalfPowerSeries:
    """Generating series of the counts, exact through q^order.

    The product of the three kinds' theta expansions, each at scale a_i;
    the coefficient at q^N equals ``count_enumerate(spec, N)``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    hi = 2 * order
    series = None
    for a, kind in spec.terms:
        part = theta_expand(theta_special(kind.generating_special, a), hi)
        series = part if series is None else series * part
    assert series is not None
    return series


def count_table(spec: MixedSumSpec, limit: int) -> np.ndarray:
    """counts[N] for all 0 <= N <= limit, via value-list convolution."""
    if limit < 0:
        return np.zeros(0, dtype=np.int64)
    (a1, k1), (a2, k2), (a3, k3) = spec.terms
    v1, c1 = _value_multiplicities(k1, limit // a1)
    v2, c2 = _value_multiplicities(k2, limit // a2)
    sums = (a1 * v1)[:, None] + (a2 * v2)[None, :]
    weights = c1[:, None] * c2[None, :]
    keep = sums.ravel() <= limit
    pair = np.bincount(
        sums.ravel()[keep], weights=weights.ravel()[keep], minlength=limit + 1
    ).astype(np.int64)
    out = np.zeros(limit + 1, dtype=np.int64)
    v3, c3 = _value_multiplicities(k3, limit // a3)
    for val, cnt in zip(v3.tolist(), c3.tolist()):
        off = a3 * val
        out[off:] += cnt * pair[: limit + 1 - off]
    return out


class _TableCache:
    """Grow-on-demand cache of count tables keyed by the sum signature."""

    def __init__(self) -> None:
        self._tables: dict[tuple, np.ndarray] = {}

    def get(self, spec: MixedSumSpec, limit: int) -> np.ndarray:
        key = spec.terms
        existing = self._tables.get(key)
        if existing is None or existing.size <= limit:
            grown = max(limit, 2 * (existing.size if existing is not None else 0), 64)
            existing = count_table(spec, grown)
        self._tables[key] = existing
        return existing

    def count(self, spec: MixedSumSpec, n: int) -> int:
        if n < 0:
            return 0
        return int(self.get(spec, n)[n])


TABLE_CACHE = _TableCache()


def nonrep_scan(
    spec: MixedSumSpec, modulus: int, residue: int, n_max: int
) -> list[int]:
    """All represented N <= n_max in the residue class; empty confirms
    the non-representability statement up to the bound."""
    if not 0 <= residue < modulus:
        raise ValueError("need 0 <= residue < modulus")
    table = TABLE_CACHE.get(spec, n_max)
    hits = np.flatnonzero(table[: n_max + 1])
    return [int(n) for n in hits if n % modulus == residue]
