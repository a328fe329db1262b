"""
The complete quaternionic flag ring of HFlag(1^r; n)

The ring is ZZ[y1..yr] modulo either the triangular generators
h_(n-i+1)(y1..yi) or the full generators h_(n-i+1)(y1..yr). As a module over
the Grassmannian ring it is free on the monomials y^a with a_i <= r - i.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from ..errors import ConsistencyError
from ..symcore.partitions import Partition
from ..symcore.polynomials import (
    Monomial, SymPoly, alphabet_of, complete_symmetric, poly_ring, rename
)
from ..symcore.schur import SchurVector, clean_vector, schur_polynomial
from .grassring import GrassSpec, normal_form, validate_vector

logger = logging.getLogger(__name__)

ModuleVector = Dict[Monomial, SchurVector]


@dataclass(frozen=True)
class FlagSpec:
    """r rank-2 factors inside a trivial bundle of half-rank n"""
    r: int
    n: int

    def __post_init__(self):
        if isinstance(self.r, bool) or isinstance(self.n, bool):
            raise ValueError(f"FlagSpec needs integers, got ({self.r}, {self.n})")
        if self.r < 1:
            raise ValueError(f"FlagSpec requires r >= 1, got r={self.r}")
        if self.n < self.r:
            raise ValueError(f"FlagSpec requires n >= r, got r={self.r}, n={self.n}")

    @property
    def grass(self) -> GrassSpec:
        return GrassSpec(self.r, self.n)


def rank(spec: FlagSpec) -> int:
    """Free ZZ-rank r! * binomial(n, r)"""
    return factorial(spec.r) * comb(spec.n, spec.r)


def ideal_triangular(spec: FlagSpec) -> List[SymPoly]:
    """[h_n(y1), h_(n-1)(y1, y2), ..., h_(n-r+1)(y1..yr)]"""
    return [rename(complete_symmetric(spec.n - i + 1, i), 'y', spec.r) for i in range(1, spec.r + 1)]


def ideal_full(spec: FlagSpec) -> List[SymPoly]:
    """[h_n, h_(n-1), ..., h_(n-r+1)] in all r variables"""
    return [complete_symmetric(spec.n - i + 1, spec.r) for i in range(1, spec.r + 1)]


def basis_Br(r: int) -> List[Monomial]:
    """
    Exponent vectors (a_1..a_(r-1)) with 0 <= a_i <= r - i

    Ordered by total degree, then lexicographically; there are r! of them.
    """
    if r < 1:
        raise ValueError(f"basis_Br requires r >= 1, got {r}")
    ranges = [range(r - i + 1) for i in range(1, r)]
    found = [tuple(a) for a in product(*ranges)]
    found.sort(key=lambda a: (sum(a), a))
    return found


def basis_monomial(r: int, b: Monomial) -> SymPoly:
    """The monomial y^b in ZZ[y1..yr]"""
    ring = poly_ring('y', r)
    return ring.term_new(tuple(b) + (0,) * (r - len(b)), ZZ.one)


@lru_cache(maxsize=None)
def _descending_lex_ring(r: int) -> PolyRing:
    # Variables listed y_r, ..., y_1 so that lex order puts y_r highest
    names = ",".join(f"y{i}" for i in range(r, 0, -1))
    return PolyRing(names, ZZ, lex)


def _to_descending(p: SymPoly, ring: PolyRing, extra: int = 0) -> SymPoly:
    return ring.from_dict({tuple(reversed(monom)) + (0,) * extra: c for monom, c in p.iterterms()})


def _from_descending(p: SymPoly, r: int) -> SymPoly:
    ring = poly_ring('y', r)
    return ring.from_dict({tuple(reversed(monom[:r])): c for monom, c in p.iterterms()})


def _as_flag_input(spec: FlagSpec, p: SymPoly) -> SymPoly:
    if alphabet_of(p) != 'y' and p.ring.ngens:
        raise ValueError(f"Expected a polynomial in y, got alphabet '{alphabet_of(p)}'")
    return rename(p, 'y', spec.r)


def _ordered(generators: List[SymPoly], order: Optional[Sequence[int]]) -> List[SymPoly]:
    if order is None:
        return generators
    if sorted(order) != list(range(len(generators))):
        raise ValueError(f"Generator order {list(order)} is not a permutation of 0..{len(generators) - 1}")
    return [generators[i] for i in order]


def reduce_triangular(spec: FlagSpec, p: SymPoly, order: Optional[Sequence[int]] = None) -> SymPoly:
    """
    Remainder of p modulo the triangular generators

    In lex order with y_r > ... > y_1 the leading term of h_(n-i+1)(y1..yi)
    is y_i^(n-i+1). Pairwise coprime leading terms make the generators a
    Groebner basis, so the remainder does not depend on `order`.
    """
    ring = _descending_lex_ring(spec.r)
    dividend = _to_descending(_as_flag_input(spec, p), ring)
    divisors = [_to_descending(g, ring) for g in _ordered(ideal_triangular(spec), order)]
    return _from_descending(dividend.rem(divisors), spec.r)


@lru_cache(maxsize=None)
def _artin_ring(r: int) -> PolyRing:
    # y_r > ... > y_1 > e_1 > ... > e_r in lex order
    names = [f"y{i}" for i in range(r, 0, -1)] + [f"E{i}" for i in range(1, r + 1)]
    return PolyRing(",".join(names), ZZ, lex)


@lru_cache(maxsize=None)
def _artin_generators(r: int) -> Tuple[SymPoly, ...]:
    """
    g_i = prod_(j >= i) (y_i - y_j) written through e_k and y_1..y_(i-1)

    The coefficients e_k(y_i..y_r) = sum_m (-1)^m e_(k-m) h_m(y_1..y_(i-1)).
    Each g_i is monic of degree r - i + 1 in y_i.
    """
    ring = _artin_ring(r)
    y = {i: ring.gens[r - i] for i in range(1, r + 1)}
    e = {k: ring.gens[r + k - 1] for k in range(1, r + 1)}

    def e_gen(k: int) -> SymPoly:
        if k == 0:
            return ring.one
        if k < 0 or k > r:
            return ring.zero
        return e[k]

    def h_lower(m: int, i: int) -> SymPoly:
        # complete symmetric polynomial of degree m in y_1..y_(i-1)
        lower = complete_symmetric(m, i - 1)
        result = ring.zero
        for monom, c in lower.iterterms():
            term = ring.term_new(ring.zero_monom, c)
            for j, exponent in enumerate(monom):
                if exponent:
                    term = term * y[j + 1] ** exponent
            result += term
        return result

    generators = []
    for i in range(1, r + 1):
        degree = r - i + 1
        g = ring.zero
        for k in range(degree + 1):
            tail = ring.zero
            for m in range(k + 1):
                tail += (-1) ** m * e_gen(k - m) * h_lower(m, i)
            g += (-1) ** k * tail * y[i] ** (degree - k)
        generators.append(g)
    return tuple(generators)


def module_decompose(spec: FlagSpec, p: SymPoly, reduce_first: bool = True,
                     order: Optional[Sequence[int]] = None) -> ModuleVector:
    """
    Coordinates of p in the free module over the Grassmannian ring

    Args:
        spec: Flag ring
        p: Polynomial in y1..yr
        reduce_first: Divide by the triangular generators before decomposing
        order: Optional permutation of the generator lists used for division

    Returns:
        Mapping from basis_Br exponent vectors to nonzero SchurVectors
    """
    r = spec.r
    p = _as_flag_input(spec, p)
    if reduce_first:
        p = reduce_triangular(spec, p, order)

    ring = _artin_ring(r)
    dividend = _to_descending(p, ring, extra=r)
    remainder = dividend.rem(_ordered(list(_artin_generators(r)), order))

    e_ring = poly_ring('e', r)
    coefficients: Dict[Monomial, Dict[Tuple[int, ...], int]] = {}
    for monom, c in remainder.iterterms():
        y_part = tuple(reversed(monom[:r]))
        if y_part[r - 1] or any(y_part[i] > r - 1 - i for i in range(r)):
            raise ConsistencyError(f"Remainder monomial {y_part} lies outside the module basis")
        b = y_part[:r - 1]
        coefficients.setdefault(b, {})[tuple(monom[r:])] = c

    result: ModuleVector = {}
    for b, terms in coefficients.items():
        vector = normal_form(spec.grass, e_ring.from_dict(terms))
        if vector:
            result[b] = vector
    return result


def ideals_equal(spec: FlagSpec) -> bool:
    """
    True iff the triangular and full generator lists span the same ideal

    Full generators are reduced by the triangular Groebner basis; triangular
    generators are decomposed over the Grassmannian ring, whose relations are
    the full generators.
    """
    for g in ideal_full(spec):
        if reduce_triangular(spec, g):
            logger.info("Full generator %s does not reduce to zero for %s", g, spec)
            return False
    for g in ideal_triangular(spec):
        if module_decompose(spec, g, reduce_first=False):
            logger.info("Triangular generator %s is not in the full ideal for %s", g, spec)
            return False
    return True


def pullback_q(spec: FlagSpec, v: SchurVector) -> SymPoly:
    """Substitute p_i -> e_i(y1..yr) in the Schur polynomial representative of v"""
    v = validate_vector(spec.grass, v)
    ring = poly_ring('y', spec.r)
    result = ring.zero
    for lam, c in v.items():
        result += c * schur_polynomial(lam, spec.r)
    return result


def ideal_inclusions(spec: FlagSpec) -> Tuple[bool, bool]:
    """
    (y_i^n in the ideal for every i, every generator lies in (y1..yr)^(n-r+1))
    """
    ring = poly_ring('y', spec.r)
    powers_in_ideal = all(
        not reduce_triangular(spec, ring.gens[i] ** spec.n) for i in range(spec.r))

    threshold = spec.n - spec.r + 1
    generators = ideal_triangular(spec) + ideal_full(spec)
    high_degree = all(
        sum(monom) >= threshold for g in generators for monom in g.itermonoms())
    return powers_in_ideal, high_degree


def module_basis_check(spec: FlagSpec) -> bool:
    """Every b * q(s_lam) decomposes to the single coordinate {b: {lam: 1}}"""
    for b in basis_Br(spec.r):
        monomial_b = basis_monomial(spec.r, b)
        for lam in spec.grass.basis():
            decomposed = module_decompose(spec, monomial_b * pullback_q(spec, {lam: 1}))
            if decomposed != {b: {lam: 1}}:
                logger.info("Basis element %s * s%s decomposed to %s", b, lam, decomposed)
                return False
    return True


def add_module_vectors(*vectors: ModuleVector) -> ModuleVector:
    total: Dict[Monomial, Dict[Partition, int]] = {}
    for vector in vectors:
        for b, v in vector.items():
            slot = total.setdefault(b, {})
            for lam, c in v.items():
                slot[lam] = slot.get(lam, 0) + c
    return {b: clean_vector(v) for b, v in total.items() if clean_vector(v)}
