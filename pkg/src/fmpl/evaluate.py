"""Per-prime evaluation of the truncated sum families.

Three families are evaluated exactly in F_p:

* zeta(k):   sum over l_i >= 1 with l_1 + ... + l_r < p of 1 / prod L_i^{k_i},
  computed over the strictly increasing partial sums in O(dep * p).
* the i-th variant and li_k(T): sums over 0 < l_i < p with every partial
  sum coprime to p.  Both come from one stage-by-stage table f_j indexed by
  the exact integer value n of the j-th partial sum (n ranges over
  [j, j(p-1)]), with the window transition
      f_j(n) = inv(n)^{k_j} * sum_{0 < n - n' < p} f_{j-1}(n'),
  realized as a sliding prefix sum, O(dep^2 * p) per prime.
* the triple-block li(lam, mu, nu; T): the lam- and mu-tables are convolved
  into weights w(s) over the exact value s of the combined sum; the third
  block's denominators depend on s only through s mod p while the exponent
  of T needs exact s, so per-residue tables are built for all residues at
  once and attached shift-by-shift.

All arithmetic is exact int64 modular arithmetic; the naive brute-force
oracles at the bottom recompute small cases by literal nested loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .modular import ModPoly, ensure_prime, inverse_table
from .words import Index

BRUTE_FORCE_MAX_DEPTH = 4
BRUTE_FORCE_MAX_PRIME = 31


@lru_cache(maxsize=1024)
def _inv_powers(p: int, k: int) -> np.ndarray:
    """Table t -> inv(t)^k mod p for residues t, with entry 0 at t = 0."""
    inv = inverse_table(p)
    out = np.ones(p, dtype=np.int64)
    out[0] = 0
    base = inv.copy()
    e = k
    while e:
        if e & 1:
            out = out * base % p
        e >>= 1
        if e:
            base = base * base % p
    out[0] = 0
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class PartialSumTable:
    """Distribution of a stage's exact partial-sum value over F_p.

    values[n] holds the stage-j table entry f_j(n); entries at n divisible
    by p are zero (excluded denominators) and the support lies in
    [stage, stage*(p-1)].
    """

    p: int
    stage: int
    values: np.ndarray

    def advanced(self, k_next: int) -> "PartialSumTable":
        """Append one summand 0 < l < p and divide by the new sum's power."""
        p, prev = self.p, self.values
        new_len = (self.stage + 1) * (p - 1) + 1
        pref = np.zeros(len(prev) + 1, dtype=np.int64)
        np.cumsum(prev, out=pref[1:])
        n = np.arange(new_len)
        win = pref[np.minimum(n, len(prev))] - pref[np.clip(n - p + 1, 0, len(prev))]
        vals = win % p * _inv_powers(p, k_next)[n % p] % p
        vals.flags.writeable = False
        return PartialSumTable(p, self.stage + 1, vals)


def partial_sum_table(k: Index, p: int) -> PartialSumTable:
    """The depth-dep(k) table for index k (k nonempty)."""
    ensure_prime(p)
    if k.depth < 1:
        raise ValueError("partial-sum table needs a nonempty index")
    vals = _inv_powers(p, k[0]).copy()
    vals.flags.writeable = False
    table = PartialSumTable(p, 1, vals)
    for kj in k[1:]:
        table = table.advanced(kj)
    return table


@lru_cache(maxsize=None)
def eval_zeta(k: Index, p: int) -> int:
    """The truncated multiple harmonic sum mod p; 1 for the empty index."""
    ensure_prime(p)
    if k.depth == 0:
        return 1
    vals = _inv_powers(p, k[0])
    for kj in k[1:]:
        pref = np.zeros(p, dtype=np.int64)
        np.cumsum(vals[:-1], out=pref[1:])
        vals = pref % p * _inv_powers(p, kj) % p
    return int(vals.sum() % p)


@lru_cache(maxsize=4096)
def _final_table(k: Index, p: int) -> np.ndarray:
    return partial_sum_table(k, p).values


@lru_cache(maxsize=4096)
def eval_fmp(k: Index, p: int) -> ModPoly:
    """The polynomial sum of T^(last partial sum) / prod L_i^{k_i} in F_p[T]."""
    ensure_prime(p)
    if k.depth == 0:
        return ModPoly.one(p)
    return ModPoly(p, _final_table(k, p))


def eval_zeta_variant(i: int, k: Index, p: int) -> int:
    """The variant with last partial sum restricted to ((i-1)p, ip)."""
    ensure_prime(p)
    r = k.depth
    if r < 1:
        raise ValueError("variant evaluation needs a nonempty index")
    if not 1 <= i <= r:
        raise ValueError(f"variant selector i={i} outside [1, {r}]")
    vals = _final_table(k, p)
    return int(vals[(i - 1) * p + 1 : i * p].sum() % p)


def _psi_tables(nu: Index, p: int) -> np.ndarray:
    """Third-block tables for all residues at once.

    Row rho gives, indexed by the exact value u of the block's last partial
    sum, the sum of 1 / prod((rho + N_z) mod p)^{nu_z} over tuples with all
    those denominators nonzero mod p.
    """
    c = nu.depth
    rho = np.arange(p)[:, None]
    psi = _inv_powers(p, nu[0])[(rho + np.arange(p)[None, :]) % p].copy()
    psi[:, 0] = 0
    for z in range(1, c):
        new_len = (z + 1) * (p - 1) + 1
        pref = np.zeros((p, psi.shape[1] + 1), dtype=np.int64)
        np.cumsum(psi, axis=1, out=pref[:, 1:])
        n = np.arange(new_len)
        win = pref[:, np.minimum(n, psi.shape[1])] - pref[:, np.clip(n - p + 1, 0, psi.shape[1])]
        psi = win % p * _inv_powers(p, nu[z])[(rho + n[None, :]) % p] % p
    return psi


@lru_cache(maxsize=1024)
def eval_fmp_triple(lam: Index, mu: Index, nu: Index, p: int) -> ModPoly:
    """The three-block polynomial interpolating between li and a product.

    The sum runs over 0 < l_x, m_y, n_z < p; the excluded denominators are
    exactly the displayed factors (every L_x, every M_y, and every
    L_a + M_b + N_z), so the intermediate value L_a + M_b itself may be
    divisible by p.  The monomial exponent is the exact total sum.
    """
    ensure_prime(p)
    one = np.ones(1, dtype=np.int64)
    fa = _final_table(lam, p) if lam.depth else one
    fb = _final_table(mu, p) if mu.depth else one
    if min(len(fa), len(fb)) * (p - 1) ** 2 >= (1 << 62):
        raise OverflowError("convolution would overflow 64-bit intermediates")
    w = np.convolve(fa, fb) % p
    if nu.depth == 0:
        return ModPoly(p, w)
    psi = _psi_tables(nu, p)
    out = np.zeros(len(w) + psi.shape[1] - 1, dtype=np.int64)
    for s in np.nonzero(w)[0]:
        out[s : s + psi.shape[1]] += w[s] * psi[s % p]
    return ModPoly(p, out)


def _check_brute_domain(depth: int, p: int) -> None:
    if depth > BRUTE_FORCE_MAX_DEPTH:
        raise ValueError(f"brute force capped at total depth {BRUTE_FORCE_MAX_DEPTH}")
    if p > BRUTE_FORCE_MAX_PRIME:
        raise ValueError(f"brute force capped at p <= {BRUTE_FORCE_MAX_PRIME}")


def brute_force_fmp(k: Index, p: int) -> ModPoly:
    """Literal nested-loop evaluation of the single-index polynomial."""
    ensure_prime(p)
    _check_brute_domain(k.depth, p)
    if k.depth == 0:
        return ModPoly.one(p)
    inv = inverse_table(p).tolist()
    coeffs = [0] * (k.depth * (p - 1) + 1)
    for ls in product(range(1, p), repeat=k.depth):
        total = 0
        term = 1
        for l, kj in zip(ls, k.parts):
            total += l
            rem = total % p
            if rem == 0:
                term = 0
                break
            term = term * pow(inv[rem], kj, p) % p
        if term:
            coeffs[total] = (coeffs[total] + term) % p
    return ModPoly(p, coeffs)


@lru_cache(maxsize=None)
def _brute_variant_bands(k: Index, p: int) -> tuple[int, ...]:
    """One literal pass accumulating the variant per band of the last sum."""
    inv = inverse_table(p).tolist()
    bands = [0] * k.depth
    for ls in product(range(1, p), repeat=k.depth):
        total = 0
        term = 1
        for l, kj in zip(ls, k.parts):
            total += l
            rem = total % p
            if rem == 0:
                term = 0
                break
            term = term * pow(inv[rem], kj, p) % p
        if term:
            bands[total // p] = (bands[total // p] + term) % p
    return tuple(bands)


def brute_force_zeta_variant(i: int, k: Index, p: int) -> int:
    """Literal nested-loop evaluation of the i-th variant."""
    ensure_prime(p)
    _check_brute_domain(k.depth, p)
    if not 1 <= i <= k.depth:
        raise ValueError(f"variant selector i={i} outside [1, {k.depth}]")
    return _brute_variant_bands(k, p)[i - 1]


def brute_force_fmp_triple(lam: Index, mu: Index, nu: Index, p: int) -> ModPoly:
    """Literal nested-loop evaluation of the three-block polynomial."""
    ensure_prime(p)
    a, b, c = lam.depth, mu.depth, nu.depth
    _check_brute_domain(a + b + c, p)
    inv = inverse_table(p).tolist()
    coeffs = [0] * ((a + b + c) * (p - 1) + 1)
    for ls in product(range(1, p), repeat=a):
        term_l = 1
        sum_l = 0
        for l, kj in zip(ls, lam.parts):
            sum_l += l
            rem = sum_l % p
            if rem == 0:
                term_l = 0
                break
            term_l = term_l * pow(inv[rem], kj, p) % p
        if not term_l:
            continue
        for ms in product(range(1, p), repeat=b):
            term_m = term_l
            sum_m = 0
            for m, kj in zip(ms, mu.parts):
                sum_m += m
                rem = sum_m % p
                if rem == 0:
                    term_m = 0
                    break
                term_m = term_m * pow(inv[rem], kj, p) % p
            if not term_m:
                continue
            base = sum_l + sum_m
            for ns in product(range(1, p), repeat=c):
                term = term_m
                sum_n = 0
                for n, kj in zip(ns, nu.parts):
                    sum_n += n
                    rem = (base + sum_n) % p
                    if rem == 0:
                        term = 0
                        break
                    term = term * pow(inv[rem], kj, p) % p
                if term:
                    e = base + sum_n
                    coeffs[e] = (coeffs[e] + term) % p
    return ModPoly(p, coeffs)
