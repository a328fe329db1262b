"""
Schur functions: Jacobi-Trudi determinants, bialternants, Schur-basis
decomposition and the involution omega
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyRing

from ..errors import ConsistencyError
from .partitions import (
    EMPTY, Partition, box_order_key, conjugate, make_partition, partitions_of, weight
)
from .polynomials import (
    SymPoly, alphabet_of, expand_monomials, is_symmetric, max_generator_index,
    poly_ring, rename, truncate_generators
)

logger = logging.getLogger(__name__)

SchurVector = Dict[Partition, int]


def clean_vector(v: SchurVector) -> SchurVector:
    """Drop zero coefficients and coerce coefficients to int"""
    return {lam: int(c) for lam, c in v.items() if c}


def add_vectors(*vectors: SchurVector) -> SchurVector:
    total: SchurVector = {}
    for v in vectors:
        for lam, c in v.items():
            total[lam] = total.get(lam, 0) + int(c)
    return clean_vector(total)


def scale_vector(v: SchurVector, factor: int) -> SchurVector:
    return clean_vector({lam: factor * c for lam, c in v.items()})


def sorted_items(v: SchurVector) -> List[Tuple[Partition, int]]:
    """Items of v in the fixed basis order"""
    return sorted(clean_vector(v).items(), key=lambda item: box_order_key(item[0]))


def polynomial_det(entries: List[List[SymPoly]], ring: PolyRing) -> SymPoly:
    """
    Fraction-free determinant of a square matrix of polynomials

    Args:
        entries: Rows of elements of ring
        ring: Ring containing every entry

    Returns:
        The determinant as an element of ring
    """
    size = len(entries)
    if size == 0:
        return ring.one
    matrix = DomainMatrix([list(row) for row in entries], (size, size), ring.to_domain())
    return ring.ring_new(matrix.det())


@lru_cache(maxsize=None)
def _jacobi_trudi_h(lam: Partition) -> SymPoly:
    ring = poly_ring('h', weight(lam))

    def h(k: int) -> SymPoly:
        if k < 0:
            return ring.zero
        if k == 0:
            return ring.one
        return ring.gens[k - 1]

    size = len(lam)
    entries = [[h(lam[i] - i + j) for j in range(size)] for i in range(size)]
    return polynomial_det(entries, ring)


def schur_jt_h(lam: Partition, r: int) -> SymPoly:
    """
    Jacobi-Trudi determinant det(h_(lam_i - i + j)) in h-generators

    The matrix has size length(lam); the result lives in the ring with
    weight(lam) generators.
    """
    if len(lam) > r:
        raise ValueError(f"Partition {lam} has more than {r} parts")
    return _jacobi_trudi_h(lam)


@lru_cache(maxsize=None)
def _jacobi_trudi_e(lam: Partition, m: int) -> SymPoly:
    ring = poly_ring('e', m)

    def e(k: int) -> SymPoly:
        if k < 0 or k > m:
            return ring.zero
        if k == 0:
            return ring.one
        return ring.gens[k - 1]

    dual = conjugate(lam)
    size = len(dual)
    entries = [[e(dual[i] - i + j) for j in range(size)] for i in range(size)]
    return polynomial_det(entries, ring)


def schur_jt_e(lam: Partition, m: int) -> SymPoly:
    """
    Dual Jacobi-Trudi determinant det(e_(lam'_i - i + j)) in e1..em

    Generators e_k with k > m are zero.
    """
    if m < len(conjugate(lam)):
        raise ValueError(f"Need at least {len(conjugate(lam))} e-generators for {lam}, got {m}")
    return _jacobi_trudi_e(lam, m)


@lru_cache(maxsize=None)
def schur_lift(lam: Partition, r: int) -> SymPoly:
    """Canonical representative of s_lam in ZZ[e1..er] (e_k = 0 for k > r)"""
    if len(lam) > r:
        raise ValueError(f"Partition {lam} has more than {r} parts")
    width = max(r, len(conjugate(lam)))
    return truncate_generators(schur_jt_e(lam, width), r)


def _alternant(exponents: List[int], r: int) -> SymPoly:
    ring = poly_ring('y', r)
    entries = [[ring.gens[i] ** exponents[j] for j in range(r)] for i in range(r)]
    return polynomial_det(entries, ring)


@lru_cache(maxsize=None)
def schur_bialternant(lam: Partition, r: int) -> SymPoly:
    """
    s_lam(y1..yr) as the quotient a_(lam + delta) / a_delta

    Raises ConsistencyError if the division leaves a remainder.
    """
    if len(lam) > r:
        raise ValueError(f"Partition {lam} has more than {r} parts")
    if r == 0:
        return poly_ring('y', 0).one

    padded = list(lam) + [0] * (r - len(lam))
    numerator = _alternant([padded[j] + r - 1 - j for j in range(r)], r)
    vandermonde = _alternant([r - 1 - j for j in range(r)], r)
    try:
        return numerator.exquo(vandermonde)
    except ExactQuotientFailed as e:
        raise ConsistencyError(f"Alternant for {lam} is not divisible by the Vandermonde: {e}")


@lru_cache(maxsize=None)
def schur_polynomial(lam: Partition, r: int) -> SymPoly:
    """s_lam(y1..yr), expanded from its e-lift; zero when length(lam) > r"""
    if len(lam) > r:
        return poly_ring('y', r).zero
    return expand_monomials(schur_lift(lam, r), r)


def decompose_schur(p: SymPoly, r: int) -> SchurVector:
    """
    Write a symmetric polynomial in y1..yr in the Schur basis

    The graded-lex leading monomial of a symmetric polynomial is a partition
    lam; subtract its coefficient times s_lam and repeat.

    Args:
        p: Symmetric polynomial in the y alphabet
        r: Number of variables

    Returns:
        SchurVector supported on partitions with at most r parts
    """
    if alphabet_of(p) != 'y' and p.ring.ngens:
        raise ValueError(f"Expected a polynomial in y, got alphabet '{alphabet_of(p)}'")
    remaining = rename(p, 'y', r)
    if not is_symmetric(remaining):
        raise ValueError("Polynomial is not symmetric")

    # Elimination removes one partition per step
    degrees = {sum(monom) for monom in remaining.itermonoms()}
    step_budget = sum(len(partitions_of(d, r, d)) for d in degrees) + 1

    result: SchurVector = {}
    steps = 0
    while remaining:
        steps += 1
        if steps > step_budget:
            raise ConsistencyError(f"Schur elimination did not terminate within {step_budget} steps")

        leading = remaining.leading_expv()
        coeff = int(remaining[leading])
        try:
            lam = make_partition(leading)
        except ValueError:
            raise ConsistencyError(f"Leading monomial {leading} of a symmetric polynomial is not a partition")

        result[lam] = result.get(lam, 0) + coeff
        remaining = remaining - coeff * schur_polynomial(lam, r)

    return clean_vector(result)


def omega_involution(v: SchurVector) -> SchurVector:
    """s_lam -> s_lam' coefficientwise"""
    return clean_vector({conjugate(lam): c for lam, c in v.items()})


def vector_to_polynomial(v: SchurVector, r: int) -> SymPoly:
    """Sum of c * s_lam(y1..yr) over the support of v"""
    ring = poly_ring('y', r)
    result = ring.zero
    for lam, c in v.items():
        # s_lam vanishes in r variables when length(lam) > r
        if len(lam) > r:
            continue
        result += c * schur_polynomial(lam, r)
    return result


@lru_cache(maxsize=None)
def vertical_strips(lam: Partition, k: int, max_rows: int) -> Tuple[Partition, ...]:
    """
    Partitions nu with at most max_rows parts such that nu / lam is a vertical k-strip

    These index the Schur terms of e_k * s_lam in max_rows variables.
    """
    if len(lam) > max_rows or k < 0:
        return ()
    if k == 0:
        return (lam,)
    rows = min(max_rows, len(lam) + k)
    padded = list(lam) + [0] * (rows - len(lam))
    found = []
    for chosen in combinations(range(rows), k):
        parts = list(padded)
        for i in chosen:
            parts[i] += 1
        if all(parts[i] >= parts[i + 1] for i in range(rows - 1)):
            found.append(make_partition(parts))
    return tuple(sorted(found))


def pieri_e(v: SchurVector, k: int, max_rows: int, max_cols: Optional[int] = None) -> SchurVector:
    """
    e_k * v in Lambda_max_rows

    Adding a vertical strip never shortens the first row, so terms wider than
    max_cols can be dropped as they appear.
    """
    result: SchurVector = {}
    for lam, c in v.items():
        for nu in vertical_strips(lam, k, max_rows):
            if max_cols is not None and nu and nu[0] > max_cols:
                continue
            result[nu] = result.get(nu, 0) + c
    return clean_vector(result)


def multiply_e_monomial(v: SchurVector, exponents: Tuple[int, ...], max_rows: int,
                        max_cols: Optional[int] = None) -> SchurVector:
    """v * e_1^a_1 * ... * e_k^a_k by repeated Pieri steps"""
    for index, exponent in enumerate(exponents, start=1):
        for _ in range(exponent):
            if not v:
                return {}
            v = pieri_e(v, index, max_rows, max_cols)
    return v


def schur_vector_from_e(p: SymPoly, r: int, max_cols: Optional[int] = None) -> SchurVector:
    """
    Schur expansion in Lambda_r of a polynomial in e1..er

    With max_cols set, only partitions with first part <= max_cols are kept.
    """
    alphabet = alphabet_of(p)
    if alphabet not in ('e', 'p'):
        raise ValueError(f"Expected a polynomial in e- or p-generators, got alphabet '{alphabet}'")
    if max_generator_index(p) > r:
        raise ValueError(f"Polynomial uses generator index {max_generator_index(p)} > {r}")

    result: SchurVector = {}
    for monom, coeff in p.iterterms():
        term = multiply_e_monomial({EMPTY: 1}, tuple(monom), r, max_cols)
        for lam, c in term.items():
            result[lam] = result.get(lam, 0) + int(coeff) * c
    return clean_vector(result)
