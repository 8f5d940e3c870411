"""Level-cover arithmetic: symplectic group orders and cusp counts.

All values are exact.  The group order

    gamma(g, l) = l^(g(2g+1)) * prod_{p | l} prod_{j=1..g} (1 - p^(-2j))

is the index governing level-l covers; it is always an integer.  The cusp
count mu_g(l) is stored under two conventions because the printed formula
is ambiguous about the product range:

  * "single-factor" (the default): (1/2) l^(2g) prod_{p|l} (1 - p^(-2g)),
  * "as-printed": (1/2) l^(2g) prod_{p|l} prod_{j=1..g} (1 - p^(-2j)).

The two agree for g = 1.  For g = 2 the as-printed reading produces
non-integers (mu_2(3) = 320/9), which callers flag rather than assert.
The degree identity (1/3) l mu_1(l) mu_2(l) = (1/12) gamma(2, l) / l^3
holds exactly under the single-factor convention.
"""

from __future__ import annotations

from fractions import Fraction

CONVENTIONS = ("single-factor", "as-printed")


def prime_divisors(n: int) -> list[int]:
    """Distinct prime divisors of a positive integer, ascending."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    primes = []
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            primes.append(p)
            while remaining % p == 0:
                remaining //= p
        p += 1 if p == 2 else 2
    if remaining > 1:
        primes.append(remaining)
    return primes


def _validate(genus: int, level: int) -> None:
    if genus < 1:
        raise ValueError(f"genus must be positive, got {genus}")
    if level < 1:
        raise ValueError(f"level must be positive, got {level}")


def group_order_gamma(genus: int, level: int) -> int:
    """Exact order gamma(g, l); the level-1 value is 1."""
    _validate(genus, level)
    value = Fraction(level) ** (genus * (2 * genus + 1))
    for p in prime_divisors(level):
        for j in range(1, genus + 1):
            value *= 1 - Fraction(1, p ** (2 * j))
    if value.denominator != 1:
        raise ArithmeticError(f"gamma({genus}, {level}) failed to be integral: {value}")
    return int(value)


def cusp_count_mu(genus: int, level: int, convention: str = "single-factor") -> Fraction:
    """Cusp count mu_g(l) under the chosen convention.

    Returns an exact Fraction; the as-printed convention can produce
    non-integers for g >= 2, which is reported, never silently rounded.
    """
    _validate(genus, level)
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}, expected one of {CONVENTIONS}")
    value = Fraction(level ** (2 * genus), 2)
    for p in prime_divisors(level):
        if convention == "single-factor":
            value *= 1 - Fraction(1, p ** (2 * genus))
        else:
            for j in range(1, genus + 1):
                value *= 1 - Fraction(1, p ** (2 * j))
    return value


def verify_level_identity(level: int) -> bool:
    """Check (1/3) l mu_1(l) mu_2(l) == (1/12) gamma(2, l) / l^3 exactly.

    Uses the single-factor cusp convention, under which the identity is an
    algebraic consequence of the formulas for every level.
    """
    _validate(2, level)
    lhs = Fraction(1, 3) * level * cusp_count_mu(1, level) * cusp_count_mu(2, level)
    rhs = Fraction(1, 12) * Fraction(group_order_gamma(2, level), level ** 3)
    return lhs == rhs
