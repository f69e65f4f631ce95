"""Decompositions of products of two and three theta functions.

The central result expands a product of three theta functions
f(e1*q^g, e1*q^h) f(e2*q^u, e2*q^v) f(e3*q^i, e3*q^j), subject to the
parameter constraints of :func:`validate_triple`, into an explicit sum
of 2k products of three theta functions.  A companion result does the
same for a product of two theta functions (k terms of two factors).

Everything is verified coefficientwise: both sides are expanded as
:class:`~thetaq.series.HalfPowerSeries` to a requested order and
compared exactly, with truncation bounds tracked rather than assumed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Sequence

from .series import HalfPowerSeries, TruncationError
from .theta import ThetaArg, theta_expand

_EXPANSION_SLACK = 4  # extra half-units so factor products keep their bound


@dataclass(frozen=True)
class ThetaProduct:
    """sign * q^(shift/2) * product of up to three theta factors."""

    sign: int
    shift: int
    factors: tuple[ThetaArg, ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not 1 <= len(self.factors) <= 3:
            raise ValueError("a theta product carries one to three factors")

    def expand(self, hi: int) -> HalfPowerSeries:
        """Expansion exact through ``hi`` half-units.

        Each factor is expanded far enough that the product's validity
        bound, derived from the factors' minimal exponents, still covers
        the target; an identically-zero factor zeroes the whole term.
        """
        if any(f.is_zero_function() for f in self.factors):
            return HalfPowerSeries.zero(max(hi, 0), min(0, hi))
        mins = [f.min_exponent() for f in self.factors]
        total_min = sum(mins)
        series: Optional[HalfPowerSeries] = None
        for f, m in zip(self.factors, mins):
            bound = hi - self.shift - (total_min - m) + _EXPANSION_SLACK
            part = theta_expand(f, bound)
            series = part if series is None else series * part
        assert series is not None
        out = series.shift(self.shift)
        if self.sign == -1:
            out = -out
        if out.hi < hi:
            raise TruncationError(
                f"product only valid through {out.hi}, needed {hi}"
            )
        return out


def expand_sum(terms: Sequence[ThetaProduct], hi: int) -> HalfPowerSeries:
    """Expand and add a list of theta products, exact through ``hi``."""
    total = HalfPowerSeries.zero(hi)
    for term in terms:
        total = total + term.expand(hi)
    if total.hi < hi:
        raise TruncationError("sum lost validity below the requested bound")
    return total


@dataclass(frozen=True)
class IdentityReport:
    """Result of one coefficientwise identity verification."""

    equal: bool
    checked_through: int
    mismatch: Optional[tuple[int, int, int]]  # (exponent, lhs, rhs)
    rhs_term_count: int
    negative_violation: Optional[tuple[str, int, int]] = None  # side, exp, coeff

    @property
    def ok(self) -> bool:
        return self.equal and self.negative_violation is None


def _negative_violation(side: str, s: HalfPowerSeries):
    for e, c in s.items():
        if e < 0:
            return (side, e, c)
        break
    return None


def _verify_terms(
    lhs_terms: Sequence[ThetaProduct],
    rhs_terms: Sequence[ThetaProduct],
    through: int,
) -> IdentityReport:
    lhs = expand_sum(lhs_terms, through)
    rhs = expand_sum(rhs_terms, through)
    cmp = lhs.compare(rhs, through)
    violation = _negative_violation("lhs", lhs) or _negative_violation("rhs", rhs)
    return IdentityReport(
        equal=cmp.equal,
        checked_through=through,
        mismatch=cmp.mismatch,
        rhs_term_count=len(rhs_terms),
        negative_violation=violation,
    )


# ----------------------------------------------------------------------
# product of three theta functions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class TripleParams:
    """Parameters of the three-theta-product decomposition.

    Whole-q exponents g, h, u, v, i, j with sums/differences
    S1 = g+h = S2 = u+v, S3 = i+j, D1 = g-h, D2 = u-v, D3 = i-j,
    and the coupling 2*S1 = r(k-r)*S3.
    """

    k: int
    r: int
    g: int
    h: int
    u: int
    v: int
    i: int
    j: int
    eps1: int = 1
    eps2: int = 1
    eps3: int = 1

    @property
    def s1(self) -> int:
        return self.g + self.h

    @property
    def d1(self) -> int:
        return self.g - self.h

    @property
    def s2(self) -> int:
        return self.u + self.v

    @property
    def d2(self) -> int:
        return self.u - self.v

    @property
    def s3(self) -> int:
        return self.i + self.j

    @property
    def d3(self) -> int:
        return self.i - self.j

    @property
    def deltas(self) -> tuple[int, int, int]:
        return ((1 - self.eps1) // 2, (1 - self.eps2) // 2, (1 - self.eps3) // 2)


def validate_triple(p: TripleParams) -> list[str]:
    """Names of violated constraints; empty means admissible."""
    bad = []
    if not (p.k > p.r > 0):
        bad.append("k > r > 0")
    else:
        if math.gcd(2 * p.k, p.r) not in (1, 2):
            bad.append("gcd(2k, r) in {1, 2}")
        if math.gcd(2 * p.k, p.k - p.r) != 1:
            bad.append("gcd(2k, k-r) = 1")
    for es in (p.eps1, p.eps2, p.eps3):
        if es not in (1, -1):
            bad.append("signs must be +1 or -1")
            break
    if p.s1 <= 0:
        bad.append("S1 > 0")
    if p.s2 <= 0:
        bad.append("S2 > 0")
    if p.s3 <= 0:
        bad.append("S3 > 0")
    if p.s1 != p.s2:
        bad.append("S1 = S2")
    if p.k > p.r > 0 and 2 * p.s1 != p.r * (p.k - p.r) * p.s3:
        bad.append("2*S1 = r(k-r)*S3")
    return bad


def _require_valid(p: TripleParams) -> None:
    bad = validate_triple(p)
    if bad:
        raise ValueError("constraint violations: " + "; ".join(bad))


def triple_lhs(p: TripleParams) -> ThetaProduct:
    """The product f(e1 q^g, e1 q^h) f(e2 q^u, e2 q^v) f(e3 q^i, e3 q^j)."""
    _require_valid(p)
    return ThetaProduct(
        1,
        0,
        (
            ThetaArg(p.eps1, 2 * p.g, 2 * p.h),
            ThetaArg(p.eps2, 2 * p.u, 2 * p.v),
            ThetaArg(p.eps3, 2 * p.i, 2 * p.j),
        ),
    )


def triple_rhs(p: TripleParams) -> list[ThetaProduct]:
    """The 2k decomposition terms, first-block terms first.

    Each term is one alpha instance of one of the three blocks; the
    block's outer theta factor is distributed into every term so each
    entry is a full product of three factors with an explicit monomial.
    All exponents below are in half-units (= the whole-q formulas).
    """
    _require_valid(p)
    k, r = p.k, p.r
    s1, d1, s2, d2, s3, d3 = p.s1, p.d1, p.s2, p.d2, p.s3, p.d3
    dl1, dl2, dl3 = p.deltas
    w = r * (k - r)

    def sgn(parity: int) -> int:
        return -1 if parity % 2 else 1

    eps_outer = sgn(dl1 + dl2)
    eps_mid = sgn(dl1 + dl2 + r * dl3)
    eps_last = sgn(dl1 + dl2 + dl3)  # k-r odd keeps the parity honest

    terms: list[ThetaProduct] = []

    # block 1: alpha from floor((2-k)/2) to floor(k/2), k terms
    outer1 = ThetaArg(eps_outer, w * s3 + d1 - d2, w * s3 - d1 + d2)
    for alpha in range((2 - k) // 2, k // 2 + 1):
        sign = sgn(alpha * dl3)
        shift = alpha * (alpha * s3 + d3)
        mid = ThetaArg(
            eps_mid,
            r * (s3 * (k + 2 * alpha) + d3) + d1 + d2,
            r * (s3 * (k - 2 * alpha) - d3) - d1 - d2,
        )
        last = ThetaArg(
            eps_last,
            (k - r) * (s3 * (k - 2 * alpha) - d3) + d1 + d2,
            (k - r) * (s3 * (k + 2 * alpha) + d3) - d1 - d2,
        )
        terms.append(ThetaProduct(sign, shift, (outer1, mid, last)))

    # blocks 2 and 3 share this outer factor and global sign
    outer23 = ThetaArg(eps_outer, 2 * w * s3 + d1 - d2, -d1 + d2)
    block_sign = dl3 * (k - r + 1) // 2

    # block 2: alpha from 1 to floor((k+1)/2)
    for alpha in range(1, (k + 1) // 2 + 1):
        c = -k + r + 2 * alpha - 1  # even since k-r is odd
        sign = sgn(alpha * dl3 + dl1 + block_sign)
        shift = s1 + d1 + s3 * c * c // 4 + d3 * c // 2
        mid = ThetaArg(
            eps_mid,
            r * (s3 * (k + 2 * alpha - 1) + d3) + d1 + d2,
            r * (s3 * (k - 2 * alpha + 1) - d3) - d1 - d2,
        )
        last = ThetaArg(
            eps_last,
            (k - r) * (s3 * (2 * k - 2 * alpha + 1) - d3) + d1 + d2,
            (k - r) * (s3 * (2 * alpha - 1) + d3) - d1 - d2,
        )
        terms.append(ThetaProduct(sign, shift, (outer23, mid, last)))

    # block 3: alpha from 1 to floor(k/2)
    for alpha in range(1, k // 2 + 1):
        c = k - r - 2 * alpha + 1  # even since k-r is odd
        sign = sgn(alpha * dl3 + dl2 + block_sign)
        shift = s2 - d2 + s3 * c * c // 4 + d3 * c // 2
        mid = ThetaArg(
            eps_mid,
            r * (s3 * (k - 2 * alpha + 1) + d3) + d1 + d2,
            r * (s3 * (k + 2 * alpha - 1) - d3) - d1 - d2,
        )
        last = ThetaArg(
            eps_last,
            (k - r) * (s3 * (2 * alpha - 1) - d3) + d1 + d2,
            (k - r) * (s3 * (2 * k - 2 * alpha + 1) + d3) - d1 - d2,
        )
        terms.append(ThetaProduct(sign, shift, (outer23, mid, last)))

    assert len(terms) == 2 * k
    return terms


def verify_triple(p: TripleParams, through: int) -> IdentityReport:
    """Expand both sides through ``through`` half-units and compare."""
    return _verify_terms([triple_lhs(p)], triple_rhs(p), through)


# ----------------------------------------------------------------------
# product of two theta functions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class PairParams:
    """Parameters of the two-theta-product decomposition.

    Whole-q exponents s, t, i, j with S = s+t = r(k-r)*S3, S3 = i+j,
    D = s-t, D3 = i-j; the second factor carries the sign eps.
    """

    k: int
    r: int
    s: int
    t: int
    i: int
    j: int
    eps: int = 1


def validate_pair(p: PairParams) -> list[str]:
    bad = []
    if not (p.k > p.r > 0):
        bad.append("k > r > 0")
    else:
        if math.gcd(2 * p.k, p.r) not in (1, 2):
            bad.append("gcd(2k, r) in {1, 2}")
        if math.gcd(2 * p.k, p.k - p.r) != 1:
            bad.append("gcd(2k, k-r) = 1")
    if p.eps not in (1, -1):
        bad.append("eps must be +1 or -1")
    if p.s + p.t <= 0:
        bad.append("S > 0")
    if p.i + p.j <= 0:
        bad.append("S3 > 0")
    if p.k > p.r > 0 and p.s + p.t != p.r * (p.k - p.r) * (p.i + p.j):
        bad.append("S = r(k-r)*S3")
    return bad


def pair_lhs(p: PairParams) -> ThetaProduct:
    bad = validate_pair(p)
    if bad:
        raise ValueError("constraint violations: " + "; ".join(bad))
    return ThetaProduct(
        1,
        0,
        (ThetaArg(1, 2 * p.s, 2 * p.t), ThetaArg(p.eps, 2 * p.i, 2 * p.j)),
    )


def pair_rhs(p: PairParams) -> list[ThetaProduct]:
    """The k decomposition terms of the two-theta product."""
    bad = validate_pair(p)
    if bad:
        raise ValueError("constraint violations: " + "; ".join(bad))
    k, r = p.k, p.r
    s3, d3 = p.i + p.j, p.i - p.j
    d = p.s - p.t
    delta = (1 - p.eps) // 2

    def sgn(parity: int) -> int:
        return -1 if parity % 2 else 1

    eps_mid = sgn(r * delta)
    eps_last = sgn(delta)
    terms = []
    for alpha in range((2 - k) // 2, k // 2 + 1):
        sign = sgn(alpha * delta)
        shift = alpha * (alpha * s3 + d3)
        mid = ThetaArg(
            eps_mid,
            r * (s3 * (k + 2 * alpha) + d3) + d,
            r * (s3 * (k - 2 * alpha) - d3) - d,
        )
        last = ThetaArg(
            eps_last,
            (k - r) * (s3 * (k - 2 * alpha) - d3) + d,
            (k - r) * (s3 * (k + 2 * alpha) + d3) - d,
        )
        terms.append(ThetaProduct(sign, shift, (mid, last)))
    assert len(terms) == k
    return terms


def verify_pair(p: PairParams, through: int) -> IdentityReport:
    return _verify_terms([pair_lhs(p)], pair_rhs(p), through)


# ----------------------------------------------------------------------
# named corollaries
# ----------------------------------------------------------------------

# Specializations g=h-style rows for the signed two-theta identities:
# (g, h, u, v, i, j) coefficients of m plus constants, signs fixed at
# (-1, +1, eps3).  Row key is the catalog identifier.
_SIGNED_PAIR_ROWS: dict[str, tuple[tuple[int, int], ...]] = {
    # ((gm, gc), (hm, hc), (um, uc), (vm, vc), (im, ic), (jm, jc), (eps3, 0))
    "clp2.1": ((1, 0), (1, 0), (1, 0), (1, 0), (0, 2), (0, 2), (1, 0)),
    "clp2.2": ((3, 0), (1, 0), (3, 0), (1, 0), (0, 6), (0, 2), (1, 0)),
    "clp2.3": ((2, 0), (1, 0), (2, 0), (1, 0), (0, 4), (0, 2), (-1, 0)),
    "clp2.4": ((1, 0), (1, 0), (1, 0), (1, 0), (0, 4), (0, 0), (1, 0)),
    "clp2.5": ((1, 0), (1, 0), (1, 0), (1, 0), (0, 3), (0, 1), (1, 0)),
    "clp2.6": ((2, 0), (1, 0), (2, 0), (1, 0), (0, 3), (0, 3), (1, 0)),
    "clp2.7": ((3, 0), (1, 0), (3, 0), (1, 0), (0, 4), (0, 4), (1, 0)),
    "clp2.8": ((3, 0), (1, 0), (3, 0), (1, 0), (0, 8), (0, 0), (1, 0)),
}

_COROLLARY_IDS = ("cor1", "cor2", "cor3", "cor4")


def signed_pair_params(cid: str, m: int) -> TripleParams:
    """Triple-product parameters behind a signed two-theta identity."""
    if cid not in _SIGNED_PAIR_ROWS:
        raise KeyError(f"unknown identity {cid!r}")
    if m < 1:
        raise ValueError("m must be a positive integer")
    row = _SIGNED_PAIR_ROWS[cid]
    (gm, gc), (hm, hc), (um, uc), (vm, vc), (im, ic), (jm, jc), (e3, _) = row
    return TripleParams(
        k=m + 1,
        r=m,
        g=gm * m + gc,
        h=hm * m + hc,
        u=um * m + uc,
        v=vm * m + vc,
        i=im * m + ic,
        j=jm * m + jc,
        eps1=-1,
        eps2=1,
        eps3=e3,
    )


def corollary_params(cid: str, k: int, r: int) -> TripleParams:
    """Triple-product parameters of the four direct specializations."""
    w = r * (k - r)
    if cid == "cor1":  # 8 psi^2(q^w) psi(q^2)
        return TripleParams(k, r, g=w, h=0, u=w, v=0, i=2, j=0)
    if cid == "cor2":  # 4 psi^2(q^w) phi(q)
        return TripleParams(k, r, g=w, h=0, u=w, v=0, i=1, j=1)
    if cid == "cor3":  # phi^2(q^w) phi(q^2)
        return TripleParams(k, r, g=w, h=w, u=w, v=w, i=2, j=2)
    if cid == "cor4":  # phi^2(q^w) psi(q)
        return TripleParams(k, r, g=w, h=w, u=w, v=w, i=3, j=1)
    raise KeyError(f"unknown corollary {cid!r}")


@dataclass(frozen=True)
class SignedPairReport:
    """Verification trace of one signed two-theta identity."""

    identity: IdentityReport  # reduced identity on the source grid
    substituted: bool  # whether exponents were halved (q^2 -> q)
    odd_part_clear: bool  # no odd-q coefficients before halving
    final: IdentityReport  # the identity as printed

    @property
    def ok(self) -> bool:
        return self.identity.ok and self.odd_part_clear and self.final.ok


def _halve_product(t: ThetaProduct) -> ThetaProduct:
    return ThetaProduct(
        t.sign,
        t.shift // 2,
        tuple(ThetaArg(f.eps, f.a // 2, f.b // 2) for f in t.factors),
    )


def _all_even(terms: Sequence[ThetaProduct]) -> bool:
    for t in terms:
        if t.shift % 4:
            return False
        for f in t.factors:
            if f.a % 4 or f.b % 4:
                return False
    return True


def instantiate_signed_pair(
    cid: str, m: int
) -> tuple[list[ThetaProduct], list[ThetaProduct]]:
    """Both sides of a signed two-theta identity as printed.

    Derivation from the triple-product decomposition: the second and
    third blocks vanish because their outer factor has a -q^0 argument;
    the surviving block shares the factor f(-q^S1, -q^S1) with the left
    side rewritten via f(a,b) f(-a,-b) = f(-a^2,-b^2) phi(-ab), so that
    factor cancels structurally; finally exponents are halved when the
    whole identity lives on even powers of q.
    """
    p = signed_pair_params(cid, m)
    rhs_full = triple_rhs(p)
    k = p.k
    head, tail = rhs_full[:k], rhs_full[k:]
    for term in tail:
        if not any(f.is_zero_function() for f in term.factors):
            raise AssertionError("expected vanishing outer factor in tail blocks")
    # shared factor: each head term's first factor is f(-q^S1, -q^S1)
    shared = ThetaArg(-1, 2 * p.s1, 2 * p.s1)
    rhs = []
    for term in head:
        if term.factors[0] != shared:
            raise AssertionError("unexpected head-block outer factor")
        rhs.append(ThetaProduct(term.sign, term.shift, term.factors[1:]))
    lhs = [
        ThetaProduct(
            1,
            0,
            (
                ThetaArg(-1, 4 * p.g, 4 * p.h),
                ThetaArg(p.eps3, 2 * p.i, 2 * p.j),
            ),
        )
    ]
    if _all_even(lhs + rhs):
        lhs = [_halve_product(t) for t in lhs]
        rhs = [_halve_product(t) for t in rhs]
    return lhs, rhs


def verify_signed_pair(cid: str, m: int, through: int) -> SignedPairReport:
    """Full verification of one signed two-theta identity.

    Checks the reduced identity on its source grid, asserts that odd-q
    coefficients vanish when the final form halves exponents, and then
    checks the identity as printed through ``through`` half-units.
    """
    p = signed_pair_params(cid, m)
    rhs_full = triple_rhs(p)
    head = rhs_full[:p.k]
    reduced_rhs = [
        ThetaProduct(t.sign, t.shift, t.factors[1:]) for t in head
    ]
    reduced_lhs = [
        ThetaProduct(
            1,
            0,
            (ThetaArg(-1, 4 * p.g, 4 * p.h), ThetaArg(p.eps3, 2 * p.i, 2 * p.j)),
        )
    ]
    substituted = _all_even(reduced_lhs + reduced_rhs)
    source_bound = 2 * through if substituted else through
    identity = _verify_terms(reduced_lhs, reduced_rhs, source_bound)

    odd_clear = True
    if substituted:
        lhs_series = expand_sum(reduced_lhs, source_bound)
        rhs_series = expand_sum(reduced_rhs, source_bound)
        for s in (lhs_series, rhs_series):
            for e, _ in s.items():
                if e % 4 != 0:  # an odd power of q or off the q^2 grid
                    odd_clear = False
        final_lhs = lhs_series.dissect(2, 0, divide=True)
        final_rhs = rhs_series.dissect(2, 0, divide=True)
        cmp = final_lhs.compare(final_rhs, through)
        final = IdentityReport(
            cmp.equal, through, cmp.mismatch, len(reduced_rhs),
            _negative_violation("lhs", final_lhs)
            or _negative_violation("rhs", final_rhs),
        )
    else:
        final = identity
    # the printed form must agree with the structural construction
    printed_lhs, printed_rhs = instantiate_signed_pair(cid, m)
    printed = _verify_terms(printed_lhs, printed_rhs, through)
    if printed.ok != final.ok:
        raise AssertionError("printed and dissected routes disagree")
    return SignedPairReport(identity, substituted, odd_clear, final)


def instantiate_corollary(
    cid: str, *, k: int | None = None, r: int | None = None, m: int | None = None
) -> tuple[list[ThetaProduct], list[ThetaProduct]]:
    """Both sides of a named corollary as lists of theta products."""
    if cid in _COROLLARY_IDS:
        if k is None or r is None:
            raise ValueError(f"{cid} needs k and r")
        p = corollary_params(cid, k, r)
        return [triple_lhs(p)], triple_rhs(p)
    if cid in _SIGNED_PAIR_ROWS:
        if m is None:
            raise ValueError(f"{cid} needs m")
        return instantiate_signed_pair(cid, m)
    raise KeyError(f"unknown corollary {cid!r}")


def verify_corollary(
    cid: str,
    *,
    k: int | None = None,
    r: int | None = None,
    m: int | None = None,
    through: int,
) -> IdentityReport:
    if cid in _COROLLARY_IDS:
        if k is None or r is None:
            raise ValueError(f"{cid} needs k and r")
        return verify_triple(corollary_params(cid, k, r), through)
    if cid in _SIGNED_PAIR_ROWS:
        if m is None:
            raise ValueError(f"{cid} needs m")
        report = verify_signed_pair(cid, m, through)
        if not report.odd_part_clear:
            return IdentityReport(
                False, through, None, report.final.rhs_term_count
            )
        return report.final
    raise KeyError(f"unknown corollary {cid!r}")


# ----------------------------------------------------------------------
# embedded identity catalog
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityEntry:
    """One named, machine-verifiable identity instance."""

    id: str
    kind: str  # thm1 | thm2 | corollary
    params: dict
    citation: str = ""
    prose_scale: int = 1  # LHS-as-built = prose_scale * prose identity

    def verify(self, through: int) -> IdentityReport:
        if self.kind == "thm1":
            return verify_triple(TripleParams(**self.params), through)
        if self.kind == "thm2":
            return verify_pair(PairParams(**self.params), through)
        if self.kind == "corollary":
            return verify_corollary(self.params["id"], through=through, **{
                key: self.params[key]
                for key in ("k", "r", "m")
                if key in self.params
            })
        raise ValueError(f"unknown identity kind {self.kind!r}")


def load_identity_catalog() -> list[IdentityEntry]:
    raw = json.loads(
        resources.files("thetaq.data").joinpath("identities.json").read_text()
    )
    entries = []
    for item in raw["identities"]:
        entries.append(
            IdentityEntry(
                id=item["id"],
                kind=item["kind"],
                params=item["params"],
                citation=item.get("citation", ""),
                prose_scale=item.get("prose_scale", 1),
            )
        )
    return entries
