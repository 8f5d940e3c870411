"""Independent cross-checks used by the tests.

The graded dimension oracle here deliberately avoids the package's
Groebner machinery and linear algebra: it enumerates monomials by brute
force and row-reduces the degree-d slice of the relation ideal with its
own Gaussian elimination.  Agreement with the staircase count is then a
meaningful check rather than the same computation twice.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count


def monomials_of_weight(weights, total):
    """All exponent tuples e with sum(e[i] * weights[i]) == total."""
    if total < 0:
        return []
    results = []

    def extend(prefix, remaining, position):
        if position == len(weights):
            if remaining == 0:
                results.append(tuple(prefix))
            return
        w = weights[position]
        for e in count():
            used = e * w
            if used > remaining:
                break
            extend(prefix + [e], remaining - used, position + 1)

    extend([], total, 0)
    return results


def _gauss_rank(rows):
    """Rank over the rationals of a list of dense Fraction rows."""
    rows = [list(row) for row in rows if any(row)]
    rank = 0
    col_count = len(rows[0]) if rows else 0
    pivot_col = 0
    while rows and pivot_col < col_count:
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][pivot_col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][pivot_col]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][pivot_col]
            if factor != 0:
                scale = factor / pivot
                rows[i] = [
                    a - scale * b for a, b in zip(rows[i], rows[rank])
                ]
        rank += 1
        pivot_col += 1
    return rank


def graded_dimension(weights, relations, degree):
    """Dimension of the degree-d piece of the quotient by the relations.

    ``relations`` is a list of term lists [(exponent_tuple, Fraction)].
    The degree-d slice of the ideal is spanned by monomial multiples
    m * r with weight(m) + weight(r) == degree; the quotient dimension is
    the monomial count minus the rank of that span.
    """
    monomials = monomials_of_weight(weights, degree)
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    for relation in relations:
        if not relation:
            continue
        rel_weight = sum(
            e * w for e, w in zip(relation[0][0], weights)
        )
        for multiplier in monomials_of_weight(weights, degree - rel_weight):
            row = [Fraction(0)] * len(monomials)
            for exponents, coefficient in relation:
                shifted = tuple(a + b for a, b in zip(exponents, multiplier))
                row[index[shifted]] += coefficient
            rows.append(row)
    return len(monomials) - _gauss_rank(rows)


def hilbert_series_oracle(weights, relations, max_degree):
    """Graded dimensions [dim_0, ..., dim_max] via the rank oracle."""
    return [
        graded_dimension(weights, relations, d) for d in range(max_degree + 1)
    ]
