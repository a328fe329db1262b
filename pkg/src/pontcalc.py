"""
Pontryagin-class calculus for formal symplectic bundles

A SympClass stores p_1..p_r in an ambient ring: either a free polynomial
ring (universal and root computations) or a Grassmannian ring. Polynomials
in t are tuples of ambient elements, constant coefficient first.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Any, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyRing

from .errors import ConsistencyError
from .rings.grassring import (
    GrassSpec, add, augmentation, multiply, negate, normal_form, pontryagin_generators,
    unit, validate_vector
)
from .symcore.polynomials import h_from_e, poly_ring
from .symcore.schur import SchurVector

logger = logging.getLogger(__name__)

TPoly = Tuple[Any, ...]


@dataclass(frozen=True)
class PolyAmbient:
    """Free polynomial ring ZZ[generators]"""
    ring: PolyRing

    def zero(self):
        return self.ring.zero

    def one(self):
        return self.ring.one

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return not a

    def equal(self, a, b) -> bool:
        return a == b

    def check(self, a):
        if not self.ring.is_element(a):
            raise ValueError(f"{a!r} is not an element of {self.ring}")
        return a


@dataclass(frozen=True)
class GrassAmbient:
    """The Grassmannian ring of spec, elements are SchurVectors"""
    spec: GrassSpec

    def zero(self) -> SchurVector:
        return {}

    def one(self) -> SchurVector:
        return unit(self.spec)

    def add(self, a, b) -> SchurVector:
        return add(a, b)

    def mul(self, a, b) -> SchurVector:
        return multiply(self.spec, a, b)

    def neg(self, a) -> SchurVector:
        return negate(a)

    def is_zero(self, a) -> bool:
        return not a

    def equal(self, a, b) -> bool:
        return add(a, negate(b)) == {}

    def check(self, a) -> SchurVector:
        return validate_vector(self.spec, a)


Ambient = Any


@dataclass(frozen=True)
class SympClass:
    """Pontryagin data (p_1, ..., p_r) of a rank-2r symplectic bundle"""
    ambient: Ambient
    half_rank: int
    classes: Tuple[Any, ...]

    def __post_init__(self):
        if self.half_rank < 0:
            raise ValueError(f"half_rank must be non-negative, got {self.half_rank}")
        if len(self.classes) != self.half_rank:
            raise ValueError(f"Expected {self.half_rank} classes, got {len(self.classes)}")

    def p(self, i: int):
        """p_i with p_0 = 1 and p_i = 0 beyond the half rank"""
        if i == 0:
            return self.ambient.one()
        if i < 0 or i > self.half_rank:
            return self.ambient.zero()
        return self.classes[i - 1]


def make_class(ambient: Ambient, classes: Sequence[Any]) -> SympClass:
    return SympClass(ambient, len(classes), tuple(ambient.check(c) for c in classes))


def trivial_class(ambient: Ambient, n: int) -> SympClass:
    """Hyp(O^n): half rank n, every p_i zero"""
    return SympClass(ambient, n, tuple(ambient.zero() for _ in range(n)))


def trim(ambient: Ambient, poly: Sequence[Any]) -> TPoly:
    coeffs = list(poly)
    while coeffs and ambient.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def poly_equal(ambient: Ambient, a: Sequence[Any], b: Sequence[Any]) -> bool:
    a, b = trim(ambient, a), trim(ambient, b)
    return len(a) == len(b) and all(ambient.equal(x, y) for x, y in zip(a, b))


def poly_mul(ambient: Ambient, a: Sequence[Any], b: Sequence[Any],
             max_degree: Optional[int] = None) -> TPoly:
    if not a or not b:
        return ()
    degree = len(a) + len(b) - 2
    if max_degree is not None:
        degree = min(degree, max_degree)
    result = [ambient.zero() for _ in range(degree + 1)]
    for i, x in enumerate(a):
        if ambient.is_zero(x):
            continue
        for j, y in enumerate(b):
            if i + j > degree:
                break
            result[i + j] = ambient.add(result[i + j], ambient.mul(x, y))
    return trim(ambient, result)


def truncate(ambient: Ambient, poly: Sequence[Any], max_degree: int) -> TPoly:
    return trim(ambient, list(poly)[:max_degree + 1])


def total_class(b: SympClass) -> TPoly:
    """p_t = 1 + p_1 t + ... + p_r t^r"""
    return trim(b.ambient, [b.p(i) for i in range(b.half_rank + 1)])


def pontryagin_polynomial(b: SympClass) -> TPoly:
    """P(t) = t^r - p_1 t^(r-1) + ... + (-1)^r p_r, coefficients from t^0 upward"""
    r = b.half_rank
    coeffs = []
    for degree in range(r + 1):
        i = r - degree
        value = b.p(i)
        coeffs.append(b.ambient.neg(value) if i % 2 else value)
    return tuple(coeffs)


def cartan_sum(b1: SympClass, b2: SympClass) -> SympClass:
    """
    Class of the orthogonal sum: p_t multiplies

    Args:
        b1: First summand
        b2: Second summand, same ambient ring

    Returns:
        SympClass of half rank r1 + r2 with p_i = sum_j p_(i-j)(b1) p_j(b2)
    """
    if b1.ambient != b2.ambient:
        raise ValueError(f"Cannot add classes over different rings: {b1.ambient} and {b2.ambient}")
    ambient = b1.ambient
    half_rank = b1.half_rank + b2.half_rank

    classes = []
    for i in range(1, half_rank + 1):
        total = ambient.zero()
        for j in range(i + 1):
            total = ambient.add(total, ambient.mul(b1.p(i - j), b2.p(j)))
        classes.append(total)
    return SympClass(ambient, half_rank, tuple(classes))


def from_roots(ambient: Ambient, roots: Sequence[Any]) -> SympClass:
    """Fold rank-2 classes with p_1 = root; p_i becomes e_i(roots)"""
    empty = SympClass(ambient, 0, ())
    return reduce(cartan_sum, (SympClass(ambient, 1, (ambient.check(u),)) for u in roots), empty)


def _is_one(ambient: Ambient, value) -> bool:
    return ambient.equal(value, ambient.one())


def poly_divides(ambient: Ambient, dividend: Sequence[Any],
                 divisor: Sequence[Any]) -> Tuple[bool, Optional[TPoly]]:
    """
    Long division by a monic polynomial

    Returns (True, quotient) when the remainder vanishes, (False, None) otherwise.
    """
    divisor = tuple(divisor)
    if not divisor or not _is_one(ambient, divisor[-1]):
        raise ValueError("Divisor must be monic")

    remainder = list(dividend)
    divisor_degree = len(divisor) - 1
    if len(remainder) <= divisor_degree:
        divides = all(ambient.is_zero(c) for c in remainder)
        return (True, ()) if divides else (False, None)

    quotient = [ambient.zero() for _ in range(len(remainder) - divisor_degree)]
    for k in range(len(remainder) - 1, divisor_degree - 1, -1):
        c = remainder[k]
        if ambient.is_zero(c):
            continue
        shift = k - divisor_degree
        quotient[shift] = c
        for j, d in enumerate(divisor):
            remainder[shift + j] = ambient.add(remainder[shift + j], ambient.neg(ambient.mul(c, d)))

    if all(ambient.is_zero(c) for c in remainder):
        return True, trim(ambient, quotient)
    return False, None


def nilpotency_index(spec: GrassSpec, v: SchurVector) -> int:
    """
    Smallest k with v^k = 0 in the Grassmannian ring

    Raises ValueError for a nonzero constant term and ConsistencyError if
    v survives past the grading bound r(n - r) + 2.
    """
    v = validate_vector(spec, v)
    if augmentation(v):
        raise ValueError("Class has a nonzero constant term and is not nilpotent")

    cap = spec.r * spec.cols + 2
    current = v
    for k in range(1, cap + 1):
        if not current:
            return k
        current = multiply(spec, current, v)
    raise ConsistencyError(f"Class {v} is not nilpotent within the grading bound {cap} for {spec}")


def truncated_inverse(ambient: Ambient, total: Sequence[Any], t_trunc: int) -> TPoly:
    """Inverse of a total class modulo t^(t_trunc + 1); the constant term must be 1"""
    total = tuple(total)
    if not total or not _is_one(ambient, total[0]):
        raise ValueError("Total class must have constant term 1")

    # 1/(1 + N) = sum_k (-N)^k, and N^k vanishes mod t^(t_trunc+1) for k > t_trunc
    minus_tail = tuple([ambient.zero()] + [ambient.neg(c) for c in total[1:]])
    inverse: TPoly = (ambient.one(),)
    term: TPoly = (ambient.one(),)
    for _ in range(t_trunc):
        term = poly_mul(ambient, term, minus_tail, t_trunc)
        if not term:
            break
        inverse = tuple(_poly_add(ambient, inverse, term))
    return trim(ambient, inverse)


def _poly_add(ambient: Ambient, a: Sequence[Any], b: Sequence[Any]) -> TPoly:
    size = max(len(a), len(b))
    result = []
    for i in range(size):
        x = a[i] if i < len(a) else ambient.zero()
        y = b[i] if i < len(b) else ambient.zero()
        result.append(ambient.add(x, y))
    return trim(ambient, result)


def gw_multiplicativity_check(bundles: Sequence[SympClass], t_trunc: int) -> bool:
    """
    Sums go to products: p_t of the Cartan sum equals the product of the p_t,
    and every p_t is a unit, both modulo t^(t_trunc + 1)
    """
    if not bundles:
        return True
    ambient = bundles[0].ambient
    if any(b.ambient != ambient for b in bundles):
        raise ValueError("Bundles must share one ambient ring")

    summed = reduce(cartan_sum, bundles)
    product: TPoly = (ambient.one(),)
    for b in bundles:
        product = poly_mul(ambient, product, total_class(b), t_trunc)

    if not poly_equal(ambient, truncate(ambient, total_class(summed), t_trunc), product):
        return False

    for b in bundles:
        total = total_class(b)
        inverse = truncated_inverse(ambient, total, t_trunc)
        if not poly_equal(ambient, poly_mul(ambient, total, inverse, t_trunc), (ambient.one(),)):
            return False
    return True


def evaluate(ambient: Ambient, poly: Sequence[Any], y) -> Any:
    """Horner evaluation of a polynomial in t at an ambient element"""
    value = ambient.zero()
    for c in reversed(tuple(poly)):
        value = ambient.add(ambient.mul(value, y), c)
    return value


def coefficient_relation(b: SympClass, y) -> Any:
    """
    coeff(t^r, p_(-t)(b) * sum_k y^k t^k)

    Equals the Pontryagin polynomial of b evaluated at y.
    """
    ambient = b.ambient
    r = b.half_rank
    p_minus_t = [ambient.neg(b.p(i)) if i % 2 else b.p(i) for i in range(r + 1)]

    geometric = [ambient.one()]
    for _ in range(r):
        geometric.append(ambient.mul(geometric[-1], y))

    value = ambient.zero()
    for i in range(r + 1):
        value = ambient.add(value, ambient.mul(p_minus_t[i], geometric[r - i]))
    return value


def projective_bundle_reduce(b: SympClass, k: int) -> TPoly:
    """
    zeta^k in A[zeta] / (P_b(zeta)) in the basis 1, zeta, ..., zeta^(r-1)

    Uses zeta^r = sum_i (-1)^(i+1) p_i zeta^(r-i).
    """
    if k < 0:
        raise ValueError(f"Exponent must be non-negative, got {k}")
    ambient = b.ambient
    r = b.half_rank
    if r == 0:
        return ()

    coeffs = [ambient.zero() for _ in range(r)]
    coeffs[0] = ambient.one()
    for _ in range(k):
        top = coeffs[-1]
        coeffs = [ambient.zero()] + coeffs[:-1]
        if ambient.is_zero(top):
            continue
        for i in range(1, r + 1):
            contribution = ambient.mul(top, b.p(i))
            if i % 2 == 0:
                contribution = ambient.neg(contribution)
            coeffs[r - i] = ambient.add(coeffs[r - i], contribution)
    return tuple(coeffs)


def tautological_class(spec: GrassSpec) -> SympClass:
    """The tautological bundle U on HGr(r, n): p_i = s_(1^i)"""
    ambient = GrassAmbient(spec)
    return SympClass(ambient, spec.r, tuple(pontryagin_generators(spec)))


def complement_class(spec: GrassSpec) -> SympClass:
    """The complement U^perp: half rank n - r with p_i = (-1)^i h_i"""
    ambient = GrassAmbient(spec)
    classes = []
    for i in range(1, spec.cols + 1):
        h = normal_form(spec, h_from_e(i, spec.r))
        classes.append(negate(h) if i % 2 else h)
    return SympClass(ambient, spec.cols, tuple(classes))


def is_trivial(b: SympClass) -> bool:
    return all(b.ambient.is_zero(c) for c in b.classes)


def roots_ambient(nroots: int, alphabet: str = 'y') -> Tuple[PolyAmbient, List[Any]]:
    """Free polynomial ring on formal roots y1..y_nroots and the roots themselves"""
    ring = poly_ring(alphabet, nroots)
    return PolyAmbient(ring), list(ring.gens)
