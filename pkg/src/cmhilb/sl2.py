"""Highest-weight bookkeeping for torus characters of SL2 representations:
irreducible characters, decomposition into them, exponents of fiber
multiplicity spaces, tangent-space characters and the odd-weight fixed
point criterion, and the layered factorization of the full fiber.
"""

from __future__ import annotations

from functools import lru_cache

from .exactalg import LaurentPolynomial
from .partitions import (
    DEFAULT_CAP,
    Partition,
    dim_irrep,
    enumerate_partitions,
    hook_lengths,
    staircase,
)
from .symfun import isotypic_character


class NotACharacterError(ValueError):
    """Not a nonnegative integer combination of irreducible characters."""


@lru_cache(maxsize=None)
def irreducible_character(m: int) -> LaurentPolynomial:
    """q^m + q^(m-2) + ... + q^(-m), the weight character of the
    irreducible of highest weight m."""
    if m < 0:
        raise ValueError("highest weight must be nonnegative")
    return LaurentPolynomial({m - 2 * i: 1 for i in range(m + 1)})


class SL2Character:
    """Multiset of highest weights with positive multiplicities."""

    __slots__ = ("_mult",)

    def __init__(self, mult):
        data = {}
        items = mult.items() if hasattr(mult, "items") else mult
        for w, c in items:
            if not isinstance(w, int) or w < 0:
                raise ValueError(f"highest weights must be nonnegative integers, got {w}")
            if not isinstance(c, int) or c < 0:
                raise NotACharacterError(f"multiplicity of weight {w} is {c}")
            if c:
                data[w] = data.get(w, 0) + c
        self._mult = data

    @property
    def mult(self) -> dict:
        """Copy of the weight -> multiplicity map."""
        return dict(self._mult)

    def items(self) -> tuple:
        return tuple(sorted(self._mult.items()))

    def multiplicity(self, w: int) -> int:
        return self._mult.get(w, 0)

    def dimension(self) -> int:
        return sum(c * (w + 1) for w, c in self._mult.items())

    def to_laurent(self) -> LaurentPolynomial:
        """Reconstruct the character polynomial exactly."""
        out = LaurentPolynomial.zero()
        for w, c in self._mult.items():
            out = out + irreducible_character(w).scaled(c)
        return out

    def exponents(self) -> tuple:
        """Weights repeated with multiplicity, ascending."""
        out = []
        for w, c in sorted(self._mult.items()):
            out.extend([w] * c)
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, SL2Character):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self):
        return hash(frozenset(self._mult.items()))

    def __repr__(self):
        return "SL2Character({%s})" % ", ".join(
            f"{w}: {c}" for w, c in self.items()
        )


def decompose(p: LaurentPolynomial) -> SL2Character:
    """Decompose a palindromic integer Laurent polynomial into irreducible
    SL2 characters by peeling from the top weight.

    For a genuine character the decomposition is unique; anything else hits
    a negative multiplicity (or leftover negative weight) and raises.
    """
    work = p.terms
    mult = {}
    while work:
        w = max(work)
        c = work.pop(w)
        if w < 0 or c < 0:
            raise NotACharacterError(
                f"not an SL2 character: multiplicity {c} at weight {w}"
            )
        mult[w] = c
        for e in range(w - 2, -w - 1, -2):
            left = work.get(e, 0) - c
            if left:
                work[e] = left
            else:
                work.pop(e, None)
    return SL2Character(mult)


def exponents(lam: Partition) -> tuple:
    """Exponents of lam: the multiset e with the lam-multiplicity space
    isomorphic to the direct sum of the irreducibles V(e_i), ascending."""
    return decompose(isotypic_character(lam)).exponents()


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def exponent_string(exps) -> str:
    """Compact multiset notation, e.g. (0,1,1,2,2,4) -> "0,1²,2²,4"."""
    groups = []
    for e in exps:
        if groups and groups[-1][0] == e:
            groups[-1][1] += 1
        else:
            groups.append([e, 1])
    pieces = []
    for value, count in groups:
        if count == 1:
            pieces.append(str(value))
        else:
            pieces.append(f"{value}{str(count).translate(_SUPERSCRIPTS)}")
    return ",".join(pieces)


def tangent_character(lam: Partition) -> LaurentPolynomial:
    """Torus character of the tangent space at the fixed point labeled by
    lam: the sum of q^h + q^(-h) over the hook multiset."""
    terms = {}
    for h in hook_lengths(lam):
        terms[h] = terms.get(h, 0) + 1
        terms[-h] = terms.get(-h, 0) + 1
    return LaurentPolynomial(terms)


def weights_all_odd(p: LaurentPolynomial) -> bool:
    """True when every exponent carrying a nonzero coefficient is odd
    (vacuously true for the zero polynomial)."""
    return all(e % 2 for e in p.support())


def sl2_fixed_set(n: int, cap: int = DEFAULT_CAP) -> set:
    """Partitions of n whose tangent character has only odd weights.

    Computed by filtering the full enumeration; the result is the
    staircase alone when n is triangular and empty otherwise.
    """
    return {
        lam
        for lam in enumerate_partitions(n, cap)
        if weights_all_odd(tangent_character(lam))
    }


def hook_layer_character(m: int) -> LaurentPolynomial:
    """Character contributed by one principal-hook layer of the staircase:
    (V(m-1) + V(m-2)) times the square of prod over i = 1..m-2 of
    (V(i) + V(i-1)), with V(-1) = 0."""
    if m < 1:
        raise ValueError("layer index must be at least 1")
    lead = irreducible_character(m - 1)
    if m >= 2:
        lead = lead + irreducible_character(m - 2)
    out = lead
    for i in range(1, m - 1):
        pair = irreducible_character(i) + irreducible_character(i - 1)
        out = out * pair * pair
    return out


def layered_fiber_character(m: int) -> LaurentPolynomial:
    """Staircase fiber character assembled from principal-hook layers:
    dim times the product of hook_layer_character(k) for k = m, m-2, ...
    ending at 2 or 1 according to the parity of m."""
    if m < 1:
        raise ValueError("staircase index must be at least 1")
    out = LaurentPolynomial.one()
    for k in range(m, 0, -2):
        out = out * hook_layer_character(k)
    return out.scaled(dim_irrep(staircase(m)))
