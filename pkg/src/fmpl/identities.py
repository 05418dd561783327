"""The explicit identities, as executable objects.

The central operation is expand_triple: it turns the three-block sum
li(lam, mu, nu; T) into an exact finite combination of generators

    coef * zeta(k) * (T^p)^n * li(k')

by recursing on the last parts of lam and mu.  One recursion step splits
the sum by whether the combined value L_a + M_b is divisible by p; the
coprime branch is rewritten with the partial-fraction decomposition
verified by pfd_check, and the divisible branches produce variant zeta
values that are immediately expanded into ordinary zeta values.  The
recursion terminates because dep(lam) + dep(mu) drops at every step.

Each generator carries the bigrade (a, b) with a = wt(zeta) + wt(li) and
b = wt(li); the shuffle congruence says the product li_k * li_k' equals
the shuffle sum plus generators of sublevel b <= a - 1, and
shuffle_correction returns exactly that decomposition.

The verify_* functions compare two independently computed F_p (or
F_p[T]) values and report the first difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Optional

import numpy as np

from .evaluate import eval_fmp, eval_fmp_triple, eval_zeta, eval_zeta_variant
from .modular import ModPoly, ensure_prime, inverse_table, mod_inverse
from .surjections import variant_expansion
from .words import EMPTY, FormalSum, Index, Rational, concat, shuffle, star, stuffle


class ExceptionalPrimeError(ValueError):
    """A rational coefficient has no meaning mod p (denominator hits p)."""

    def __init__(self, p: int, coef: Fraction):
        self.p = p
        self.coef = coef
        super().__init__(f"coefficient {coef} has denominator divisible by {p}")


@dataclass(frozen=True)
class CorrectionTerm:
    """One generator coef * zeta(zeta_index) * (T^p)^tpow * li(li_index)."""

    coef: Fraction
    zeta_index: Index
    tpow: int
    li_index: Index

    @property
    def bigrade(self) -> tuple[int, int]:
        """(a, b) = (wt(zeta) + wt(li), wt(li))."""
        b = self.li_index.weight
        return self.zeta_index.weight + b, b

    @property
    def is_pure(self) -> bool:
        return self.zeta_index == EMPTY and self.tpow == 0

    def key(self) -> tuple:
        return (self.zeta_index, self.tpow, self.li_index)

    def __str__(self) -> str:
        return (
            f"{self.coef}*zeta({self.zeta_index.text().replace('-', '')})"
            f"*Tp^{self.tpow}*li({self.li_index.text().replace('-', '')})"
        )


class CorrectionExpression:
    """A canonical finite sum of generators (sorted, merged, zero-free)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[CorrectionTerm] = ()):
        merged: dict[tuple, CorrectionTerm] = {}
        for t in terms:
            key = t.key()
            prev = merged.get(key)
            coef = t.coef + prev.coef if prev else t.coef
            if coef:
                merged[key] = CorrectionTerm(coef, t.zeta_index, t.tpow, t.li_index)
            else:
                merged.pop(key, None)
        object.__setattr__(self, "_terms", tuple(merged[k] for k in sorted(merged)))

    def __setattr__(self, name, value):
        raise AttributeError("CorrectionExpression is immutable")

    @property
    def terms(self) -> tuple[CorrectionTerm, ...]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CorrectionExpression):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other: "CorrectionExpression") -> "CorrectionExpression":
        return CorrectionExpression(self._terms + other._terms)

    def __mul__(self, c: Rational) -> "CorrectionExpression":
        c = Fraction(c)
        return CorrectionExpression(
            CorrectionTerm(t.coef * c, t.zeta_index, t.tpow, t.li_index) for t in self._terms
        )

    __rmul__ = __mul__

    def pure_part(self) -> FormalSum:
        """The zeta-free, shift-free generators, as a formal sum of li indices."""
        return FormalSum([(t.li_index, t.coef) for t in self._terms if t.is_pure])

    def impure_terms(self) -> tuple[CorrectionTerm, ...]:
        return tuple(t for t in self._terms if not t.is_pure)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self._terms) if self._terms else "0"

    def __repr__(self) -> str:
        return f"CorrectionExpression({self})"


def _pure(coef: Rational, li_index: Index) -> CorrectionTerm:
    return CorrectionTerm(Fraction(coef), EMPTY, 0, li_index)


def _zeta_block(sign: int, fs: FormalSum, tpow: int, li_index: Index) -> list[CorrectionTerm]:
    return [CorrectionTerm(sign * c, zi, tpow, li_index) for zi, c in fs]


@lru_cache(maxsize=None)
def expand_triple(lam: Index, mu: Index, nu: Index) -> CorrectionExpression:
    """Exact generator decomposition of the three-block sum.

    All terms share level a = wt(lam) + wt(mu) + wt(nu); the impure terms
    sit at sublevel b <= a - 1.
    """
    if lam == EMPTY:
        return CorrectionExpression([_pure(1, concat(mu, nu))])
    if mu == EMPTY:
        return CorrectionExpression([_pure(1, concat(lam, nu))])
    a, b = lam.depth, mu.depth
    la, mb = lam[-1], mu[-1]
    terms: list[CorrectionTerm] = []
    for tau in range(mb):
        sub = expand_triple(lam.head(), Index(mu.parts[:-1] + (mb - tau,)), Index((la + tau,) + nu.parts))
        terms.extend((comb(la - 1 + tau, tau) * sub).terms)
    for tau in range(la):
        sub = expand_triple(Index(lam.parts[:-1] + (la - tau,)), mu.head(), Index((mb + tau,) + nu.parts))
        terms.extend((comb(mb - 1 + tau, tau) * sub).terms)
    sign = -1 if mu.weight % 2 else 1
    merged = star(lam, mu)
    for i in range(1, a + b):
        terms.extend(_zeta_block(sign, variant_expansion(i, merged), i, nu))
    if a >= 2:
        c4 = comb(la + mb - 1, la)
        li4 = Index(mu.parts[:-1] + (la + mb,) + nu.parts)
        for j in range(1, a):
            terms.extend(_zeta_block(-c4, variant_expansion(j, lam.head()), j, li4))
    if b >= 2:
        c5 = comb(la + mb - 1, mb)
        li5 = Index(lam.parts[:-1] + (la + mb,) + nu.parts)
        for j in range(1, b):
            terms.extend(_zeta_block(-c5, variant_expansion(j, mu.head()), j, li5))
    return CorrectionExpression(terms)


def shuffle_correction(k: Index, kp: Index) -> CorrectionExpression:
    """Decomposition of li_k * li_kp; its pure part is the shuffle sum."""
    return expand_triple(k, kp, EMPTY)


def term_product(t1: CorrectionTerm, t2: CorrectionTerm) -> CorrectionExpression:
    """Product of two generators, rewritten over the generator set.

    The zeta factors multiply by the stuffle rule and the li factors by the
    shuffle decomposition; the result stays at level a1 + a2 with sublevel
    at most b1 + b2.
    """
    out: list[CorrectionTerm] = []
    li_prod = shuffle_correction(t1.li_index, t2.li_index)
    for zi, zc in stuffle(t1.zeta_index, t2.zeta_index):
        for t in li_prod.terms:
            for zzi, zzc in stuffle(zi, t.zeta_index):
                out.append(
                    CorrectionTerm(
                        t1.coef * t2.coef * zc * t.coef * zzc,
                        zzi,
                        t1.tpow + t2.tpow + t.tpow,
                        t.li_index,
                    )
                )
    return CorrectionExpression(out)


def _coef_mod(coef: Fraction, p: int) -> int:
    if coef.denominator % p == 0:
        raise ExceptionalPrimeError(p, coef)
    return coef.numerator * mod_inverse(coef.denominator, p) % p


def eval_expression(expr: CorrectionExpression, p: int) -> ModPoly:
    """Evaluate a generator sum in F_p[T]."""
    ensure_prime(p)
    out = ModPoly.zero(p)
    for t in expr.terms:
        scalar = _coef_mod(t.coef, p) * eval_zeta(t.zeta_index, p) % p
        if scalar:
            out = out + eval_fmp(t.li_index, p).scaled(scalar).shifted(p * t.tpow)
    return out


def eval_formal_sum_zeta(fs: FormalSum, p: int) -> int:
    """Evaluate a formal sum of indices through zeta."""
    total = 0
    for k, c in fs:
        total = (total + _coef_mod(c, p) * eval_zeta(k, p)) % p
    return total


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one per-prime check: ok plus a human-readable detail."""

    ok: bool
    detail: Optional[str] = None


def _poly_diff(lhs: ModPoly, rhs: ModPoly) -> CheckResult:
    if lhs == rhs:
        return CheckResult(True)
    n = max(len(lhs.coeffs), len(rhs.coeffs))
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[: len(lhs.coeffs)] = lhs.coeffs
    b[: len(rhs.coeffs)] = rhs.coeffs
    e = int(np.nonzero(a != b)[0][0])
    return CheckResult(False, f"first diff at T^{e}: lhs={a[e]} rhs={b[e]}")


def _scalar_diff(lhs: int, rhs: int) -> CheckResult:
    if lhs == rhs:
        return CheckResult(True)
    return CheckResult(False, f"lhs={lhs} rhs={rhs}")


def pfd_check(alpha: int, beta: int, p: int) -> CheckResult:
    """Exhaustively verify the two-variable partial fraction decomposition.

    For all X, Y in F_p^x with X + Y nonzero mod p:
        1/(X^alpha Y^beta)
          = sum_{tau < beta} C(alpha-1+tau, tau) / ((X+Y)^(alpha+tau) Y^(beta-tau))
          + sum_{tau < alpha} C(beta-1+tau, tau) / ((X+Y)^(beta+tau) X^(alpha-tau)).
    """
    ensure_prime(p)
    if alpha < 1 or beta < 1:
        raise ValueError("exponents must be positive")
    inv = inverse_table(p).tolist()
    ca = [comb(alpha - 1 + t, t) % p for t in range(beta)]
    cb = [comb(beta - 1 + t, t) % p for t in range(alpha)]
    for x in range(1, p):
        ix = inv[x]
        for y in range(1, p):
            z = (x + y) % p
            if z == 0:
                continue
            iy, iz = inv[y], inv[z]
            lhs = pow(ix, alpha, p) * pow(iy, beta, p) % p
            rhs = 0
            for t in range(beta):
                rhs += ca[t] * pow(iz, alpha + t, p) % p * pow(iy, beta - t, p) % p
            for t in range(alpha):
                rhs += cb[t] * pow(iz, beta + t, p) % p * pow(ix, alpha - t, p) % p
            if lhs != rhs % p:
                return CheckResult(False, f"X={x} Y={y}: lhs={lhs} rhs={rhs % p}")
    return CheckResult(True)


def verify_eq7(lam: Index, mu: Index, nu: Index, p: int) -> CheckResult:
    """Check one step of the recursion numerically, term by term.

    The right side evaluates the variant zeta values directly from their
    defining sums, independently of the surjection expansion, so this
    check and the expansion check fail independently.
    """
    if lam == EMPTY or mu == EMPTY:
        raise ValueError("recursion step requires nonempty first and second blocks")
    ensure_prime(p)
    lhs = eval_fmp_triple(lam, mu, nu, p)
    a, b = lam.depth, mu.depth
    la, mb = lam[-1], mu[-1]
    rhs = ModPoly.zero(p)
    for tau in range(mb):
        c = comb(la - 1 + tau, tau) % p
        sub = eval_fmp_triple(lam.head(), Index(mu.parts[:-1] + (mb - tau,)), Index((la + tau,) + nu.parts), p)
        rhs = rhs + sub.scaled(c)
    for tau in range(la):
        c = comb(mb - 1 + tau, tau) % p
        sub = eval_fmp_triple(Index(lam.parts[:-1] + (la - tau,)), mu.head(), Index((mb + tau,) + nu.parts), p)
        rhs = rhs + sub.scaled(c)
    sign = p - 1 if mu.weight % 2 else 1
    merged = star(lam, mu)
    li_nu = eval_fmp(nu, p)
    for i in range(1, a + b):
        scalar = sign * eval_zeta_variant(i, merged, p) % p
        if scalar:
            rhs = rhs + li_nu.scaled(scalar).shifted(p * i)
    if a >= 2:
        c4 = comb(la + mb - 1, la) % p
        li4 = eval_fmp(Index(mu.parts[:-1] + (la + mb,) + nu.parts), p)
        for j in range(1, a):
            scalar = (p - c4) * eval_zeta_variant(j, lam.head(), p) % p
            if scalar:
                rhs = rhs + li4.scaled(scalar).shifted(p * j)
    if b >= 2:
        c5 = comb(la + mb - 1, mb) % p
        li5 = eval_fmp(Index(lam.parts[:-1] + (la + mb,) + nu.parts), p)
        for j in range(1, b):
            scalar = (p - c5) * eval_zeta_variant(j, mu.head(), p) % p
            if scalar:
                rhs = rhs + li5.scaled(scalar).shifted(p * j)
    return _poly_diff(lhs, rhs)


def verify_main(k: Index, kp: Index, p: int) -> CheckResult:
    """li_k * li_kp against the evaluated correction expression, in F_p[T]."""
    lhs = eval_fmp(k, p) * eval_fmp(kp, p)
    rhs = eval_expression(shuffle_correction(k, kp), p)
    return _poly_diff(lhs, rhs)


def verify_prop24(i: int, k: Index, p: int) -> CheckResult:
    """Variant zeta value against its surjection expansion."""
    lhs = eval_zeta_variant(i, k, p)
    rhs = eval_formal_sum_zeta(variant_expansion(i, k), p)
    return _scalar_diff(lhs, rhs)


def verify_stuffle(k: Index, kp: Index, p: int) -> CheckResult:
    """zeta(k) * zeta(kp) against the stuffle sum; exact per prime."""
    lhs = eval_zeta(k, p) * eval_zeta(kp, p) % p
    rhs = eval_formal_sum_zeta(stuffle(k, kp), p)
    return _scalar_diff(lhs, rhs)


def verify_reversal(k: Index, p: int) -> CheckResult:
    """Last-band variant against (-1)^wt times the plain zeta value."""
    if k.depth < 1:
        raise ValueError("reversal check needs a nonempty index")
    lhs = eval_zeta_variant(k.depth, k, p)
    rhs = (-1) ** k.weight * eval_zeta(k, p) % p
    return _scalar_diff(lhs, rhs)


def verify_li_at_one(k: Index, p: int) -> CheckResult:
    """Evaluate the polynomial at T = 1 and compare with zero."""
    value = eval_fmp(k, p).evaluate(1)
    if value == 0:
        return CheckResult(True)
    return CheckResult(False, f"li(1) = {value}")
