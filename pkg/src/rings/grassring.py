"""
The Grassmannian ring ZZ[e1..er] / (h_(n-r+1), ..., h_n) in its Schur basis
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import List, Optional, Tuple

import numpy as np

from ..symcore.partitions import EMPTY, Partition, conjugate, enumerate_box, in_box, weight
from ..symcore.polynomials import (
    SymPoly, alphabet_of, generator, h_from_e, max_generator_index, rename
)
from ..symcore.schur import (
    SchurVector, add_vectors, clean_vector, decompose_schur, multiply_e_monomial, scale_vector,
    schur_lift, schur_vector_from_e, vector_to_polynomial
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrassSpec:
    """The pair (r, n) fixing the ring of HGr(r, n)"""
    r: int
    n: int

    def __post_init__(self):
        if isinstance(self.r, bool) or isinstance(self.n, bool):
            raise ValueError(f"GrassSpec needs integers, got ({self.r}, {self.n})")
        if not 0 <= self.r <= self.n:
            raise ValueError(f"GrassSpec requires 0 <= r <= n, got r={self.r}, n={self.n}")

    @property
    def cols(self) -> int:
        return self.n - self.r

    def basis(self) -> List[Partition]:
        return enumerate_box(self.r, self.cols)

    def contains(self, lam: Partition) -> bool:
        return in_box(lam, self.r, self.cols)

    def dual(self) -> 'GrassSpec':
        return GrassSpec(self.n - self.r, self.n)


def unit(spec: GrassSpec) -> SchurVector:
    return {EMPTY: 1}


def validate_vector(spec: GrassSpec, v: SchurVector) -> SchurVector:
    """Reject vectors with support outside the box of spec"""
    for lam in v:
        if not spec.contains(lam):
            raise ValueError(f"Partition {lam} is not in the {spec.r} x {spec.cols} box of {spec}")
    return clean_vector(v)


def truncate_to_box(spec: GrassSpec, v: SchurVector) -> SchurVector:
    return clean_vector({lam: c for lam, c in v.items() if spec.contains(lam)})


def basis(spec: GrassSpec) -> List[Partition]:
    return spec.basis()


def rank(spec: GrassSpec) -> int:
    return comb(spec.n, spec.r)


def normal_form(spec: GrassSpec, p: SymPoly) -> SchurVector:
    """
    Image of a polynomial in e1..er (or p1..pr) in the Grassmannian ring

    Args:
        spec: Ring to reduce into
        p: Polynomial in the e or p alphabet

    Returns:
        SchurVector supported in the r x (n - r) box
    """
    alphabet = alphabet_of(p)
    if alphabet not in ('e', 'p'):
        raise ValueError(f"normal_form expects e- or p-generators, got alphabet '{alphabet}'")
    if max_generator_index(p) > spec.r:
        raise ValueError(
            f"Generator index {max_generator_index(p)} exceeds r={spec.r} for {spec}")

    expanded = schur_vector_from_e(rename(p, 'e', spec.r), spec.r, max_cols=spec.cols)
    return truncate_to_box(spec, expanded)


@lru_cache(maxsize=None)
def littlewood_richardson(lam: Partition, mu: Partition, r: int) -> Tuple[Tuple[Partition, int], ...]:
    """
    Structure constants of s_lam * s_mu in Lambda_r

    The lighter factor is written in e1..er by the dual Jacobi-Trudi
    determinant and applied to the other one term by term through Pieri steps.
    """
    if (weight(lam), lam) < (weight(mu), mu):
        return littlewood_richardson(mu, lam, r)
    if len(lam) > r or len(mu) > r:
        return ()

    coefficients: SchurVector = {}
    for monom, coeff in schur_lift(mu, r).iterterms():
        for nu, c in multiply_e_monomial({lam: 1}, tuple(monom), r).items():
            coefficients[nu] = coefficients.get(nu, 0) + int(coeff) * c
    coefficients = clean_vector(coefficients)
    logger.debug("LR product %s * %s in %d variables: %d terms", lam, mu, r, len(coefficients))
    return tuple(sorted(coefficients.items()))


def multiply(spec: GrassSpec, a: SchurVector, b: SchurVector) -> SchurVector:
    """
    Product in the Grassmannian ring

    Args:
        spec: Ring the factors live in
        a: First factor, supported in the box
        b: Second factor, supported in the box

    Returns:
        The product truncated to the box
    """
    a = validate_vector(spec, a)
    b = validate_vector(spec, b)
    top_degree = spec.r * spec.cols

    result: SchurVector = {}
    for lam, ca in a.items():
        for mu, cb in b.items():
            if weight(lam) + weight(mu) > top_degree:
                continue
            for nu, c in littlewood_richardson(lam, mu, spec.r):
                if spec.contains(nu):
                    result[nu] = result.get(nu, 0) + ca * cb * c
    return clean_vector(result)


def power(spec: GrassSpec, v: SchurVector, k: int) -> SchurVector:
    if k < 0:
        raise ValueError(f"Exponent must be non-negative, got {k}")
    result = unit(spec)
    for _ in range(k):
        result = multiply(spec, result, v)
    return result


def dual_complement(spec: GrassSpec, v: SchurVector) -> SchurVector:
    """
    Move a class to the complementary Grassmannian GrassSpec(n - r, n)

    s_lam goes to (-1)^|lam| s_lam'.
    """
    v = validate_vector(spec, v)
    return clean_vector({conjugate(lam): (-1) ** weight(lam) * c for lam, c in v.items()})


def pontryagin_generators(spec: GrassSpec) -> List[SchurVector]:
    """[p_1, ..., p_r] of the tautological bundle, i.e. the images of e_1..e_r"""
    return [normal_form(spec, generator('e', spec.r, i)) for i in range(1, spec.r + 1)]


def relations(spec: GrassSpec) -> List[SymPoly]:
    """The ideal generators h_(n-r+1), ..., h_n written in e1..er"""
    return [h_from_e(m, spec.r) for m in range(spec.n - spec.r + 1, spec.n + 1)]


def random_vector(spec: GrassSpec, rng: np.random.Generator, max_coeff: int = 3,
                  density: float = 0.5) -> SchurVector:
    """
    Random element with small integer coefficients

    Args:
        spec: Ring to sample in
        rng: numpy random generator
        max_coeff: Coefficients are drawn from [-max_coeff, max_coeff]
        density: Probability that a basis element appears

    Returns:
        SchurVector supported in the box
    """
    v: SchurVector = {}
    for lam in spec.basis():
        if rng.random() < density:
            v[lam] = int(rng.integers(-max_coeff, max_coeff + 1))
    return clean_vector(v)


def negate(v: SchurVector) -> SchurVector:
    return scale_vector(v, -1)


def add(*vectors: SchurVector) -> SchurVector:
    return add_vectors(*vectors)


def augmentation(v: SchurVector) -> int:
    """Coefficient of the unit s_empty"""
    return int(v.get(EMPTY, 0))


def oracle_multiply(spec: GrassSpec, a: SchurVector, b: SchurVector,
                    r: Optional[int] = None) -> SchurVector:
    """
    Multiply by expanding both factors into y-monomials, then decompose and truncate

    Every Schur term of s_lam * s_mu has at most length(lam) + length(mu) parts,
    so that many variables (capped at spec.r) already give the exact product.
    """
    if r is None:
        a, b = clean_vector(a), clean_vector(b)
        longest = max(map(len, a), default=0) + max(map(len, b), default=0)
        variables = min(spec.r, longest)
    else:
        variables = r
    product = vector_to_polynomial(a, variables) * vector_to_polynomial(b, variables)
    return truncate_to_box(spec, decompose_schur(product, variables))
