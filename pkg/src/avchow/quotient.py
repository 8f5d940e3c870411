"""Finitely presented graded quotient rings and their degree functionals.

A presentation is a weighted generator set plus homogeneous relations; the
quotient ring carries the reduced Groebner basis of the relation ideal,
normal forms, per-degree standard-monomial bases, the Hilbert function,
and, when the top graded piece has rank one, a degree functional pinned by
one reference value.  All numbers are exact rationals.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DegreeError, GeneratorMismatchError, InconsistentSystemError, PairingError, SingularSystemError
from .groebner import GroebnerBasis, MonomialOrder, buchberger
from .linalg import solve_exact
from .poly import GeneratorSet, Monomial, Polynomial, expand_chern_identity


class RingPresentation:
    """Weighted generators plus homogeneous relations.

    With ``chern_identity_genus`` set, the homogeneous parts of
    (1 + sum lambda_i)(1 + sum (-1)^i lambda_i) - 1 for that genus are
    appended to the listed relations, so catalog files do not repeat them.
    """

    __slots__ = ("name", "gens", "relations", "chern_identity_genus")

    def __init__(
        self,
        name: str,
        gens: GeneratorSet,
        relations: Iterable[Polynomial],
        chern_identity_genus: int | None = None,
    ):
        self.name = name
        self.gens = gens
        listed = []
        for i, relation in enumerate(relations):
            if relation.gens != gens:
                raise GeneratorMismatchError(f"relation {i} is over a different generator set")
            if relation.is_zero:
                continue
            if not relation.is_homogeneous:
                raise DegreeError(f"relation {i} ({relation}) is not homogeneous")
            listed.append(relation)
        if chern_identity_genus is not None:
            listed.extend(expand_chern_identity(chern_identity_genus, gens))
        self.relations = tuple(listed)
        self.chern_identity_genus = chern_identity_genus

    def __repr__(self) -> str:
        return f"RingPresentation({self.name}, {len(self.relations)} relations)"


class QuotientRing:
    """Graded quotient of a polynomial ring by a homogeneous ideal."""

    def __init__(self, presentation: RingPresentation):
        self.presentation = presentation
        self.gens = presentation.gens
        self.order = MonomialOrder(self.gens)
        if presentation.relations:
            self.groebner: GroebnerBasis = buchberger(presentation.relations, self.order)
        else:
            self.groebner = GroebnerBasis(self.gens, self.order, (), ())
        self._standard: dict[int, tuple[Monomial, ...]] = {}
        self._lock = threading.Lock()

    @property
    def name(self) -> str:
        return self.presentation.name

    def __repr__(self) -> str:
        return f"QuotientRing({self.name})"

    # Element helpers.

    def zero(self) -> Polynomial:
        return self.gens.zero()

    def one(self) -> Polynomial:
        return self.gens.one()

    def gen(self, name: str) -> Polynomial:
        return self.gens.gen(name)

    def normal_form(self, p: Polynomial) -> Polynomial:
        """Canonical representative of the class of p."""
        if p.gens != self.gens:
            raise GeneratorMismatchError("element belongs to a different ring")
        return self.groebner.reduce(p)

    def classes_equal(self, p: Polynomial, q: Polynomial) -> bool:
        """Exact equality in the quotient: p - q lies in the ideal."""
        if p.gens != self.gens or q.gens != self.gens:
            raise GeneratorMismatchError("elements belong to a different ring")
        return self.groebner.reduce(p - q).is_zero

    def contains(self, p: Polynomial) -> bool:
        """Ideal membership of p."""
        return self.normal_form(p).is_zero

    # Graded structure.

    def standard_monomials(self, degree: int) -> tuple[Monomial, ...]:
        """Monomial basis of the degree-d piece, descending by the order.

        Standard monomials are the ones not divisible by any leading
        monomial of the reduced Groebner basis.
        """
        cached = self._standard.get(degree)
        if cached is None:
            computed = tuple(
                m for m in self.gens.monomials_of_degree(degree) if self.groebner.is_standard(m)
            )
            cached = self._standard.setdefault(degree, computed)
        return cached

    def standard_basis_polynomials(self, degree: int) -> list[Polynomial]:
        return [self.gens.monomial(m) for m in self.standard_monomials(degree)]

    def hilbert_function(self, max_degree: int) -> list[int]:
        """Ranks of the graded pieces in degrees 0..max_degree."""
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        return [len(self.standard_monomials(d)) for d in range(max_degree + 1)]

    def coordinates(self, p: Polynomial) -> tuple[int, list[Fraction]]:
        """Degree and coordinate vector of a homogeneous class.

        Coordinates are taken against the standard-monomial basis of the
        degree of p (descending order).  Zero is rejected: it has no degree.
        """
        nf = self.normal_form(p)
        degree = nf.weighted_degree()
        if degree is None:
            raise DegreeError("zero class has no coordinate degree")
        basis = self.standard_monomials(degree)
        return degree, [nf.coefficient(m) for m in basis]


class DegreeFunctional:
    """Linear functional on the rank-one top graded piece of a ring.

    Normalized by one reference element and its exact value; every other
    degree-D class gets its value by exact proportionality.
    """

    def __init__(self, ring: QuotientRing, reference_element: Polynomial, reference_value: Fraction):
        self.ring = ring
        self.reference_element = reference_element
        self.reference_value = Fraction(reference_value)
        degree = reference_element.weighted_degree()
        if degree is None:
            raise DegreeError("reference element must be nonzero")
        self.top_degree = degree
        basis = ring.standard_monomials(degree)
        if len(basis) != 1:
            raise DegreeError(
                f"degree-{degree} piece of {ring.name} has rank {len(basis)}, need rank one"
            )
        self._top_monomial = basis[0]
        nf = ring.normal_form(reference_element)
        if nf.is_zero:
            raise DegreeError("reference element vanishes in the quotient")
        self._reference_coefficient = nf.coefficient(self._top_monomial)

    def degree(self, p: Polynomial) -> Fraction:
        """Exact value of the functional on a degree-D class.

        The zero class gives 0; any nonzero class must be homogeneous of
        the top degree.
        """
        if p.gens != self.ring.gens:
            raise GeneratorMismatchError("element belongs to a different ring")
        if p.is_zero:
            return Fraction(0)
        d = p.weighted_degree()
        if d != self.top_degree:
            raise DegreeError(f"expected degree {self.top_degree}, got {d}")
        nf = self.ring.normal_form(p)
        if nf.is_zero:
            return Fraction(0)
        coefficient = nf.coefficient(self._top_monomial)
        return coefficient / self._reference_coefficient * self.reference_value

    __call__ = degree

    def pairing_matrix(
        self,
        codimension: int,
        rows: Sequence[Polynomial],
        cols: Sequence[Polynomial],
    ) -> list[list[Fraction]]:
        """Matrix of degree(row * col) for homogeneous complementary inputs.

        Rows must be homogeneous of the given codimension and columns of
        the complementary one; zero entries are allowed on either side.
        """
        complement = self.top_degree - codimension
        for label, elements, expected in (("row", rows, codimension), ("column", cols, complement)):
            for i, element in enumerate(elements):
                d = element.weighted_degree()
                if d is not None and d != expected:
                    raise DegreeError(f"{label} {i} has degree {d}, expected {expected}")
        return [[self.degree(r * c) for c in cols] for r in rows]

    def solve_class(
        self,
        codimension: int,
        probes: Sequence[Polynomial],
        values: Sequence[Fraction],
    ) -> Polynomial:
        """Reconstruct the unique degree-k class with the given pairings.

        Probes are homogeneous classes of complementary degree; values are
        the expected degree(x * probe) numbers.  The system is solved
        exactly; rank deficiency means the pairing cannot see the class
        (singular pairing), and contradictory overdetermined data is
        reported rather than least-squares fitted.
        """
        if len(probes) != len(values):
            raise ValueError("need exactly one value per probe")
        complement = self.top_degree - codimension
        for i, probe in enumerate(probes):
            d = probe.weighted_degree()
            if d is not None and d != complement:
                raise DegreeError(f"probe {i} has degree {d}, expected {complement}")
        basis = self.ring.standard_basis_polynomials(codimension)
        matrix = [[self.degree(e * probe) for e in basis] for probe in probes]
        try:
            solution = solve_exact(matrix, [Fraction(v) for v in values])
        except SingularSystemError as err:
            raise PairingError(f"singular pairing in codimension {codimension}: {err}") from err
        except InconsistentSystemError as err:
            raise PairingError(f"inconsistent pairing data in codimension {codimension}: {err}") from err
        result = self.ring.zero()
        for coefficient, element in zip(solution, basis):
            result = result + coefficient * element
        return result


def presentations_equivalent(
    a: QuotientRing,
    b: QuotientRing,
    forward: Mapping[str, Polynomial],
    backward: Mapping[str, Polynomial],
) -> bool:
    """Do the given generator maps define mutually inverse isomorphisms?

    Checks that forward sends every relation of a into the ideal of b and
    backward the other way, and that both composites fix every generator
    up to the respective ideal.  Returns False as soon as one condition
    fails; malformed maps (missing images) raise instead.
    """
    for name in a.gens.names:
        if name not in forward:
            raise GeneratorMismatchError(f"forward map misses generator {name!r}")
    for name in b.gens.names:
        if name not in backward:
            raise GeneratorMismatchError(f"backward map misses generator {name!r}")

    for relation in a.presentation.relations:
        if not b.contains(relation.substitute(forward)):
            return False
    for relation in b.presentation.relations:
        if not a.contains(relation.substitute(backward)):
            return False
    for name in a.gens.names:
        round_trip = forward[name].substitute(backward)
        if not a.classes_equal(round_trip, a.gen(name)):
            return False
    for name in b.gens.names:
        round_trip = backward[name].substitute(forward)
        if not b.classes_equal(round_trip, b.gen(name)):
            return False
    return True
