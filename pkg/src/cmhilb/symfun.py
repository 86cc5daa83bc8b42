"""Symmetric-group characters and graded fiber characters.

Irreducible character values come from the border-strip recursion on beta
sets.  Graded multiplicities are Hall-pairing sums over conjugacy classes:
under the substitution that sends each power sum p_k to p_k / (1 - q^k),
the pairing of Schur functions becomes

    sum over mu of chi^lam(mu) chi^delta(mu) / (z_mu prod_i (1 - q^(mu_i))).

The sum is assembled over the common denominator prod_k (1-q^k)^floor(n/k),
reduced by cyclotomic cancellation, and only then converted to Laurent
form, so any inexactness upstream trips an alarm instead of passing
silently.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .exactalg import (
    LaurentPolynomial,
    NonPolynomialError,
    QPolynomial,
    RationalFunction,
    laurent_as_ratfun,
    ratfun_to_laurent,
)
from .partitions import (
    DEFAULT_CAP,
    Partition,
    dim_irrep,
    enumerate_partitions,
    hook_polynomial,
    n_stat,
    staircase,
    triangular_index,
)


class NonTriangularSizeError(ValueError):
    """The partition size is not of the form m(m+1)/2."""


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod over part values k of k^(m_k) * m_k!."""
    counts = {}
    for p in mu.parts:
        counts[p] = counts.get(p, 0) + 1
    z = 1
    for k, m in counts.items():
        z *= k ** m * factorial(m)
    return z


@lru_cache(maxsize=None)
def _strip_removals(parts: tuple, k: int) -> tuple:
    """Partitions obtained by removing one border strip of k cells, with sign.

    Beta-set encoding b_i = parts_i + (len - 1 - i): a strip removal moves
    one entry down by k onto a free slot; the sign is (-1)^height where
    height counts the entries jumped over.
    """
    ell = len(parts)
    beta = [parts[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new = sorted((c for c in beta if c != b), reverse=True) + [nb]
        new.sort(reverse=True)
        newparts = tuple(
            p for p in (new[j] - (ell - 1 - j) for j in range(ell)) if p
        )
        out.append((newparts, -1 if height % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    total = 0
    for sub, sign in _strip_removals(lam, k):
        total += sign * _mn(sub, rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value chi^lam(mu) by border-strip recursion."""
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size} but |{mu}| = {mu.size}")
    return _mn(lam.parts, mu.parts)


class CharacterTable:
    """All irreducible character values of one symmetric group, built once."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = tuple(enumerate_partitions(n, cap=max(n, DEFAULT_CAP)))
        self._values = {
            (lam.parts, mu.parts): _mn(lam.parts, mu.parts)
            for lam in self.partitions
            for mu in self.partitions
        }

    def value(self, lam: Partition, mu: Partition) -> int:
        return self._values[(lam.parts, mu.parts)]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    return CharacterTable(n)


def _one_minus_q(k: int) -> LaurentPolynomial:
    return LaurentPolynomial({0: 1, k: -1})


def q_factorial(n: int) -> LaurentPolynomial:
    """(q)_n = prod over i = 1..n of (1 - q^i)."""
    out = LaurentPolynomial.one()
    for i in range(1, n + 1):
        out = out * _one_minus_q(i)
    return out


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> LaurentPolynomial:
    """The d-th cyclotomic polynomial, via (q^d - 1) / prod of proper divisors."""
    out = LaurentPolynomial({0: -1, d: 1})
    for e in range(1, d):
        if d % e == 0:
            out = out.exact_div(_cyclotomic(e))
    return out


@lru_cache(maxsize=None)
def _common_denominator(n: int) -> LaurentPolynomial:
    """prod_k (1-q^k)^floor(n/k); every class product for size n divides it."""
    out = LaurentPolynomial.one()
    for k in range(1, n + 1):
        f = _one_minus_q(k)
        for _ in range(n // k):
            out = out * f
    return out


@lru_cache(maxsize=None)
def _class_quotient_terms(n: int, mu_parts: tuple) -> tuple:
    """Terms of _common_denominator(n) / prod_i (1 - q^(mu_i))."""
    den = LaurentPolynomial.one()
    for p in mu_parts:
        den = den * _one_minus_q(p)
    return _common_denominator(n).exact_div(den).sorted_terms()


def graded_multiplicity(lam: Partition, delta: Partition) -> RationalFunction:
    """Hall pairing of s_lam with the plethystic image of s_delta, reduced.

    This is the graded multiplicity of the irreducible labeled by lam in
    the polynomial-ring module induced from the one labeled by delta.
    """
    if lam.size != delta.size:
        raise ValueError(
            f"size mismatch: |{lam}| = {lam.size} but |{delta}| = {delta.size}"
        )
    n = lam.size
    if n == 0:
        return RationalFunction(1)
    table = character_table(n)
    nfact = factorial(n)
    acc = {}
    for mu in table.partitions:
        weight = (
            table.value(lam, mu)
            * table.value(delta, mu)
            * (nfact // centralizer_order(mu))
        )
        if not weight:
            continue
        for e, c in _class_quotient_terms(n, mu.parts):
            acc[e] = acc.get(e, 0) + weight * c
    num = LaurentPolynomial(acc)
    if not num:
        return RationalFunction(0)
    # The full denominator is nfact * prod_k (1-q^k)^e_k with e_k = floor(n/k).
    # Split it into cyclotomic factors and cancel them out of the numerator,
    # so the canonical-form reduction below only sees small coprime inputs.
    sign = 1
    phi_mult = {}
    for k in range(1, n + 1):
        e = n // k
        if e % 2:
            sign = -sign
        for d in range(1, k + 1):
            if k % d == 0:
                phi_mult[d] = phi_mult.get(d, 0) + e
    for d in sorted(phi_mult, reverse=True):
        phi = _cyclotomic(d)
        while phi_mult[d]:
            try:
                num = num.exact_div(phi)
            except NonPolynomialError:
                break
            phi_mult[d] -= 1
    den = LaurentPolynomial.one()
    for d in sorted(phi_mult):
        for _ in range(phi_mult[d]):
            den = den * _cyclotomic(d)
    return RationalFunction(
        QPolynomial.from_laurent(num),
        QPolynomial.from_laurent(den).scale(sign * nfact),
    )


def fake_degree(lam: Partition) -> LaurentPolynomial:
    """Graded multiplicity of the lam-irreducible in the coinvariant ring:
    (q)_n * q^(n(lam)) / H_lam(q), an exact polynomial division."""
    num = q_factorial(lam.size) * LaurentPolynomial.monomial(n_stat(lam))
    return num.exact_div(hook_polynomial(lam))


@lru_cache(maxsize=None)
def regular_fiber_character(m: int) -> LaurentPolynomial:
    """Graded character of the rank-n! fiber at the staircase fixed point:
    q^(-n(delta)) * H_delta(q) / (1-q)^n * dim(delta), delta the staircase."""
    if m < 0:
        raise ValueError("staircase index must be nonnegative")
    delta = staircase(m)
    n = delta.size
    top = hook_polynomial(delta) * LaurentPolynomial.monomial(
        -n_stat(delta), dim_irrep(delta)
    )
    f = laurent_as_ratfun(top) / laurent_as_ratfun(_one_minus_q(1) ** n)
    return ratfun_to_laurent(f)


@lru_cache(maxsize=None)
def isotypic_character(lam: Partition) -> LaurentPolynomial:
    """Torus character of the multiplicity space attached to lam inside the
    staircase fiber; palindromic with nonnegative integer coefficients.

    Only triangular sizes carry such a fiber, so any other size is
    rejected rather than approximated.
    """
    m = triangular_index(lam.size)
    if m is None:
        raise NonTriangularSizeError(
            f"|{lam}| = {lam.size} is not a triangular number"
        )
    delta = staircase(m)
    shift = hook_polynomial(delta) * LaurentPolynomial.monomial(-n_stat(delta))
    return ratfun_to_laurent(laurent_as_ratfun(shift) * graded_multiplicity(lam, delta))
