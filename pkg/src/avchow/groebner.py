"""Groebner bases for weighted-homogeneous ideals over Q.

Classic Buchberger with the two standard pair-elimination criteria
(coprime leading monomials, and the chain criterion), followed by
minimalization and inter-reduction, so the returned basis is the reduced
monic Groebner basis: unique for a given ideal and monomial order, hence
byte-for-byte deterministic.  Homogeneous input yields homogeneous basis
elements; nothing here assumes homogeneity, but the catalog relies on it.

Normal forms are computed by full reduction.  The deterministic strategy
reduces the order-largest reducible term first using the earliest-listed
divisor; passing an ``rng`` instead randomizes the choice of term and
divisor, which must not change the result against a Groebner basis (this
confluence is exercised by the test suite).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GeneratorMismatchError
from .poly import GeneratorSet, Monomial, Polynomial


class MonomialOrder:
    """Weighted-degree order with lexicographic tie-break.

    Degree first; ties broken on the exponent vector with earlier
    generators more significant.  Total, multiplicative, and 1 is minimal,
    so it is a valid order for Buchberger's algorithm.
    """

    kind = "wdeglex"

    def __init__(self, gens: GeneratorSet):
        self.gens = gens

    def key(self, mono: Monomial) -> tuple[int, Monomial]:
        return self.gens.sort_key(mono)

    def leading_term(self, p: Polynomial) -> tuple[Monomial, Fraction]:
        if p.is_zero:
            raise ValueError("zero polynomial has no leading term")
        mono = max(p._terms, key=self.key)
        return mono, p._terms[mono]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialOrder) and other.gens == self.gens

    def __repr__(self) -> str:
        return f"MonomialOrder({self.kind}, {self.gens!r})"


def monomial_divides(divisor: Monomial, mono: Monomial) -> bool:
    return all(d <= m for d, m in zip(divisor, mono))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    _, lead = order.leading_term(p)
    return p if lead == 1 else p * (Fraction(1) / lead)


def reduce(
    p: Polynomial,
    basis: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    rng: random.Random | None = None,
) -> Polynomial:
    """Full normal form of p modulo the listed basis.

    No term of the result is divisible by any basis leading monomial.  The
    default strategy is deterministic (largest reducible term, earliest
    divisor); with ``rng`` the reducible term and the divisor are chosen at
    random, for confluence testing.
    """
    if order is None:
        order = MonomialOrder(p.gens)
    active: list[tuple[Monomial, Fraction, Polynomial]] = []
    for b in basis:
        if b.is_zero:
            continue
        if b.gens != p.gens:
            raise GeneratorMismatchError("basis element over a different generator set")
        lm, lc = order.leading_term(b)
        active.append((lm, lc, b))
    if not active:
        return p

    terms = dict(p._terms)
    key = order.key
    while True:
        if rng is None:
            chosen: tuple[Monomial, int] | None = None
            chosen_key = None
            for mono in terms:
                for i, (lm, _, _) in enumerate(active):
                    if monomial_divides(lm, mono):
                        k = key(mono)
                        if chosen is None or k > chosen_key:
                            chosen = (mono, i)
                            chosen_key = k
                        break
            if chosen is None:
                break
        else:
            candidates = [
                (mono, i)
                for mono in terms
                for i, (lm, _, _) in enumerate(active)
                if monomial_divides(lm, mono)
            ]
            if not candidates:
                break
            candidates.sort(key=lambda pair: (key(pair[0]), pair[1]))
            chosen = candidates[rng.randrange(len(candidates))]

        mono, i = chosen
        lm, lc, b = active[i]
        factor = terms[mono] / lc
        shift = tuple(m - l for m, l in zip(mono, lm))
        for bmono, bcoeff in b._terms.items():
            target = monomial_mul(shift, bmono)
            updated = terms.get(target, Fraction(0)) - factor * bcoeff
            if updated:
                terms[target] = updated
            else:
                terms.pop(target, None)
    return Polynomial._raw(p.gens, terms)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial: cancel the leading terms of f and g against their lcm."""
    lmf, lcf = order.leading_term(f)
    lmg, lcg = order.leading_term(g)
    l = monomial_lcm(lmf, lmg)
    uf = tuple(a - b for a, b in zip(l, lmf))
    ug = tuple(a - b for a, b in zip(l, lmg))
    return f.gens.monomial(uf, Fraction(1) / lcf) * f - f.gens.monomial(ug, Fraction(1) / lcg) * g


class GroebnerBasis:
    """Reduced monic Groebner basis plus the order it was computed under."""

    __slots__ = ("gens", "order", "elements", "source", "_leading")

    def __init__(
        self,
        gens: GeneratorSet,
        order: MonomialOrder,
        elements: Sequence[Polynomial],
        source: Sequence[Polynomial] = (),
    ):
        self.gens = gens
        self.order = order
        self.elements = tuple(elements)
        self.source = tuple(source)
        self._leading = tuple(order.leading_term(e)[0] for e in self.elements)

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return self._leading

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def reduce(self, p: Polynomial, rng: random.Random | None = None) -> Polynomial:
        return reduce(p, self.elements, self.order, rng=rng)

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero

    def is_standard(self, mono: Monomial) -> bool:
        """True when no basis leading monomial divides the given monomial."""
        return not any(monomial_divides(lm, mono) for lm in self._leading)


def buchberger(
    generators: Iterable[Polynomial],
    order: MonomialOrder | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by the generators."""
    source = tuple(generators)
    gens: GeneratorSet | None = None
    for g in source:
        if gens is None:
            gens = g.gens
        elif g.gens != gens:
            raise GeneratorMismatchError("ideal generators over different generator sets")
    if gens is None:
        raise ValueError("cannot infer the generator set of an empty ideal; pass at least one polynomial")
    if order is None:
        order = MonomialOrder(gens)

    basis = [_monic(g, order) for g in source if not g.is_zero]
    if not basis:
        return GroebnerBasis(gens, order, (), source)

    lead = [order.leading_term(b)[0] for b in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_key(ij: tuple[int, int]):
        return (order.key(monomial_lcm(lead[ij[0]], lead[ij[1]])), ij)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.remove((i, j))
        lcm_ij = monomial_lcm(lead[i], lead[j])
        # Criterion 1: coprime leading monomials reduce to zero for free.
        if lcm_ij == monomial_mul(lead[i], lead[j]):
            continue
        # Criterion 2 (chain): some k divides the lcm and both mixed pairs
        # are already handled.
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not monomial_divides(lead[k], lcm_ij):
                continue
            ik = (min(i, k), max(i, k))
            jk = (min(j, k), max(j, k))
            if ik not in pairs and jk not in pairs:
                skip = True
                break
        if skip:
            continue
        remainder = reduce(s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder.is_zero:
            continue
        basis.append(_monic(remainder, order))
        lead.append(order.leading_term(basis[-1])[0])
        new = len(basis) - 1
        pairs.update((t, new) for t in range(new))

    # Minimalize: keep only elements whose leading monomial is not divisible
    # by another kept one.
    by_lm = sorted(range(len(basis)), key=lambda i: order.key(lead[i]))
    kept: list[int] = []
    for i in by_lm:
        if not any(monomial_divides(lead[k], lead[i]) for k in kept):
            kept.append(i)
    reduced = [basis[i] for i in kept]

    # Inter-reduce: every element fully reduced against the others.
    changed = True
    while changed:
        changed = False
        for idx in range(len(reduced)):
            others = reduced[:idx] + reduced[idx + 1 :]
            if not others:
                continue
            replacement = _monic(reduce(reduced[idx], others, order), order)
            if replacement != reduced[idx]:
                reduced[idx] = replacement
                changed = True

    reduced.sort(key=lambda b: order.key(order.leading_term(b)[0]), reverse=True)
    return GroebnerBasis(gens, order, reduced, source)


def ideal_membership(p: Polynomial, basis: GroebnerBasis) -> bool:
    """Exact ideal membership: does p reduce to zero against the basis?"""
    return basis.contains(p)
