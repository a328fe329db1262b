"""
Stabilization checks for the inverse systems HGr(r, n) and HFlag(1^r; n) as n grows

Inverse limits are read degree by degree: a class is stable once its normal
form stops changing, which happens as soon as no relation reaches its degree.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Sequence, Tuple

import pandas as pd

from .rings.flagring import FlagSpec, reduce_triangular
from .rings.grassring import GrassSpec, normal_form, validate_vector
from .symcore.partitions import partitions_of
from .symcore.polynomials import Monomial, monomial, poly_ring, truncate_generators
from .symcore.schur import SchurVector, add_vectors, scale_vector, schur_lift, sorted_items

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedSeries:
    """Element of a graded power-series ring, kept up to a weighted degree cap"""
    generators: Tuple[str, ...]
    degree_cap: int
    terms: Dict[Monomial, int] = field(default_factory=dict)
    weights: Tuple[int, ...] = ()

    def __post_init__(self):
        weights = self.weights or tuple([1] * len(self.generators))
        if len(weights) != len(self.generators):
            raise ValueError(f"Need one weight per generator, got {len(weights)} for {len(self.generators)}")
        object.__setattr__(self, 'weights', weights)
        for monom, c in self.terms.items():
            if len(monom) != len(self.generators):
                raise ValueError(f"Monomial {monom} does not match generators {self.generators}")
            if self.degree(monom) > self.degree_cap:
                raise ValueError(f"Monomial {monom} exceeds degree cap {self.degree_cap}")
        object.__setattr__(self, 'terms', {m: int(c) for m, c in self.terms.items() if c})

    def degree(self, monom: Monomial) -> int:
        return sum(w * a for w, a in zip(self.weights, monom))


def truncate_series(poly, generators: Sequence[str], degree_cap: int,
                    weights: Sequence[int] = ()) -> TruncatedSeries:
    """Drop every term of weighted degree above degree_cap"""
    weights = tuple(weights) or tuple([1] * len(generators))
    terms = {monom: c for monom, c in poly.iterterms()
             if sum(w * a for w, a in zip(weights, monom)) <= degree_cap}
    return TruncatedSeries(tuple(generators), degree_cap, terms, weights)


def _lift_and_reduce(v: SchurVector, source_r: int, target: GrassSpec) -> SchurVector:
    result: SchurVector = {}
    for lam, c in v.items():
        lifted = truncate_generators(schur_lift(lam, source_r), target.r)
        result = add_vectors(result, scale_vector(normal_form(target, lifted), c))
    return result


def restrict_alpha(r: int, n: int, v: SchurVector) -> SchurVector:
    """Restriction GrassSpec(r, n+1) -> GrassSpec(r, n), e_i -> e_i"""
    v = validate_vector(GrassSpec(r, n + 1), v)
    return _lift_and_reduce(v, r, GrassSpec(r, n))


def restrict_beta(r: int, n: int, v: SchurVector) -> SchurVector:
    """Restriction GrassSpec(r+1, n+1) -> GrassSpec(r, n), e_i -> e_i and e_(r+1) -> 0"""
    v = validate_vector(GrassSpec(r + 1, n + 1), v)
    return _lift_and_reduce(v, r + 1, GrassSpec(r, n))


def restriction_surjective(r: int, n: int) -> bool:
    """
    Every basis element of GrassSpec(r, n) is hit from GrassSpec(r, n+1)

    The canonical lift of s_lam is s_lam itself, so its image must be s_lam.
    """
    target = GrassSpec(r, n)
    for lam in target.basis():
        if restrict_alpha(r, n, {lam: 1}) != {lam: 1}:
            logger.info("alpha restriction misses s%s for r=%d, n=%d", lam, r, n)
            return False
    return True


def beta_restriction_surjective(r: int, n: int) -> bool:
    """Every basis element of GrassSpec(r, n) is hit from GrassSpec(r+1, n+1)"""
    target = GrassSpec(r, n)
    for lam in target.basis():
        if restrict_beta(r, n, {lam: 1}) != {lam: 1}:
            logger.info("beta restriction misses s%s for r=%d, n=%d", lam, r, n)
            return False
    return True


def monomial_weight(exponents: Sequence[int]) -> int:
    """Weighted degree of p^a with deg p_i = i"""
    return sum((i + 1) * a for i, a in enumerate(exponents))


def stable_normal_form(r: int, exponents: Sequence[int], n: int) -> Tuple[SchurVector, int]:
    """
    Normal form of p_1^a_1 ... p_r^a_r at level n and the level from which it is constant

    Args:
        r: Number of Pontryagin generators
        exponents: (a_1, ..., a_r)
        n: Top level, n >= r

    Returns:
        (normal form in GrassSpec(r, n), smallest n0 with equal normal forms on n0..n)
    """
    if len(exponents) != r:
        raise ValueError(f"Expected {r} exponents, got {len(exponents)}")
    if n < r:
        raise ValueError(f"Level n={n} is below r={r}")

    p = monomial('p', exponents)
    top = normal_form(GrassSpec(r, n), p)
    witness = n
    for level in range(n - 1, r - 1, -1):
        if normal_form(GrassSpec(r, level), p) != top:
            break
        witness = level
    return top, witness


def p_monomials(r: int, degree_cap: int) -> List[Tuple[int, ...]]:
    """Exponent vectors of p-monomials in r generators with weighted degree <= degree_cap"""
    found = []
    for total in range(degree_cap + 1):
        for lam in partitions_of(total, total, r):
            found.append(tuple(lam.count(i) for i in range(1, r + 1)))
    return found


def _p_label(exponents: Sequence[int]) -> str:
    factors = []
    for i, a in enumerate(exponents, start=1):
        if a == 1:
            factors.append(f"p{i}")
        elif a > 1:
            factors.append(f"p{i}^{a}")
    return " ".join(factors) or "1"


def stabilization_table(r: int, max_n: int, degree_cap: int) -> pd.DataFrame:
    """
    One row per p-monomial of weighted degree <= degree_cap

    Columns: monomial, exponents, weight, witness, bound (weight + r),
    within_bound, normal_form (basis-ordered items at level max_n).
    """
    rows = []
    for exponents in p_monomials(r, degree_cap):
        weight = monomial_weight(exponents)
        form, witness = stable_normal_form(r, exponents, max_n)
        rows.append({
            'monomial': _p_label(exponents),
            'exponents': list(exponents),
            'weight': weight,
            'witness': witness,
            'bound': weight + r,
            'within_bound': witness <= weight + r,
            'normal_form': sorted_items(form),
        })
    return pd.DataFrame(rows, columns=['monomial', 'exponents', 'weight', 'witness',
                                       'bound', 'within_bound', 'normal_form'])


def flag_series(spec: FlagSpec, exponents: Sequence[int], degree_cap: int) -> TruncatedSeries:
    """Flag-ring normal form of y^a, kept up to degree_cap"""
    reduced = reduce_triangular(spec, monomial('y', exponents))
    names = tuple(f"y{i}" for i in range(1, spec.r + 1))
    return truncate_series(reduced, names, degree_cap)


def flag_limit_check(r: int, n_list: Sequence[int], degree_cap: int) -> bool:
    """
    Flag normal forms of y-monomials of degree <= degree_cap agree across
    consecutive levels in n_list whenever degree_cap <= n - r
    """
    if any(n < r for n in n_list):
        raise ValueError(f"Every level must be at least r={r}, got {list(n_list)}")

    monomials = [a for a in product(range(degree_cap + 1), repeat=r) if sum(a) <= degree_cap]
    for lower, upper in zip(n_list, n_list[1:]):
        if degree_cap > min(lower, upper) - r:
            continue
        lower_spec, upper_spec = FlagSpec(r, lower), FlagSpec(r, upper)
        for a in monomials:
            if flag_series(lower_spec, a, degree_cap) != flag_series(upper_spec, a, degree_cap):
                logger.info("y^%s differs between n=%d and n=%d", a, lower, upper)
                return False
    return True


def diagonal_limit_check(max_n: int, degree_cap: int) -> bool:
    """
    Along HGr(n, 2n) the normal forms of p-monomials of weighted degree
    <= degree_cap agree for all n from degree_cap to max_n
    """
    previous = None
    for n in range(max(degree_cap, 1), max_n + 1):
        forms = {}
        for exponents in p_monomials(degree_cap, degree_cap):
            padded = tuple(exponents) + (0,) * (n - degree_cap)
            forms[tuple(exponents)] = normal_form(GrassSpec(n, 2 * n), monomial('p', padded))
        if previous is not None and forms != previous:
            logger.info("Diagonal normal forms change at n=%d", n)
            return False
        previous = forms
    return True


def grass_series(spec: GrassSpec, v: SchurVector, degree_cap: int) -> TruncatedSeries:
    """A class of GrassSpec written in p_1..p_r through its Schur polynomials, truncated"""
    ring = poly_ring('p', spec.r)
    poly = ring.zero
    for lam, c in validate_vector(spec, v).items():
        lifted = schur_lift(lam, spec.r)
        poly += c * ring.from_dict(dict(lifted.iterterms()))
    names = tuple(f"p{i}" for i in range(1, spec.r + 1))
    return truncate_series(poly, names, degree_cap, weights=tuple(range(1, spec.r + 1)))
