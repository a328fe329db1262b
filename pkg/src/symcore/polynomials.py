"""
Exact integer polynomials in the generator alphabets e, h, y and p

A SymPoly is a sympy PolyElement over ZZ whose ring is built by poly_ring.
Generators are named e1..er, h1..hr, y1..yr or p1..pr; the alphabet of a
polynomial is read off its ring.
"""
import logging
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Dict, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

logger = logging.getLogger(__name__)

ALPHABETS = ('e', 'h', 'y', 'p')

# Alphabet used for constants living in a ring without generators
DEFAULT_ALPHABET = 'e'

SymPoly = PolyElement
Monomial = Tuple[int, ...]


@lru_cache(maxsize=None)
def poly_ring(alphabet: str, nvars: int) -> PolyRing:
    """
    Polynomial ring ZZ[a1, ..., a_nvars] in graded-lex order

    Args:
        alphabet: One of 'e', 'h', 'y', 'p'
        nvars: Number of generators (may be zero)

    Returns:
        Cached sympy PolyRing
    """
    if alphabet not in ALPHABETS:
        raise ValueError(f"Unknown alphabet '{alphabet}', expected one of {ALPHABETS}")
    if nvars < 0:
        raise ValueError(f"Number of generators must be non-negative, got {nvars}")

    names = ",".join(f"{alphabet}{i}" for i in range(1, nvars + 1))
    return PolyRing(names, ZZ, grlex)


def alphabet_of(p: SymPoly) -> str:
    symbols = p.ring.symbols
    if not symbols:
        return DEFAULT_ALPHABET
    return str(symbols[0])[0]


def nvars_of(p: SymPoly) -> int:
    return p.ring.ngens


def generator(alphabet: str, nvars: int, index: int) -> SymPoly:
    """The generator a_index of poly_ring(alphabet, nvars), 1-based"""
    if not 1 <= index <= nvars:
        raise ValueError(f"Generator index {index} outside 1..{nvars}")
    return poly_ring(alphabet, nvars).gens[index - 1]


def monomial(alphabet: str, exponents: Sequence[int]) -> SymPoly:
    ring = poly_ring(alphabet, len(exponents))
    return ring.term_new(tuple(int(a) for a in exponents), ZZ.one)


def max_generator_index(p: SymPoly) -> int:
    """Largest 1-based generator index occurring in p, 0 for constants"""
    highest = 0
    for monom in p.itermonoms():
        for i, exponent in enumerate(monom):
            if exponent and i + 1 > highest:
                highest = i + 1
    return highest


def rename(p: SymPoly, alphabet: Optional[str] = None, nvars: Optional[int] = None) -> SymPoly:
    """
    Move p into another alphabet or number of generators, keeping exponents

    Raises ValueError when p uses a generator that the target ring lacks.
    """
    target_alphabet = alphabet if alphabet is not None else alphabet_of(p)
    target_nvars = nvars if nvars is not None else p.ring.ngens
    target = poly_ring(target_alphabet, target_nvars)

    if max_generator_index(p) > target_nvars:
        raise ValueError(
            f"Polynomial uses generator {max_generator_index(p)} but the target ring has {target_nvars}")

    terms = {}
    for monom, coeff in p.iterterms():
        padded = tuple(monom[:target_nvars]) + (0,) * (target_nvars - len(monom))
        terms[padded] = coeff
    return target.from_dict(terms)


def truncate_generators(p: SymPoly, nvars: int) -> SymPoly:
    """Set every generator of index above nvars to zero and shrink the ring"""
    target = poly_ring(alphabet_of(p), nvars)
    terms = {}
    for monom, coeff in p.iterterms():
        if any(monom[nvars:]):
            continue
        padded = tuple(monom[:nvars]) + (0,) * (nvars - len(monom))
        terms[padded] = coeff
    return target.from_dict(terms)


def substitute(p: SymPoly, images: Sequence[SymPoly], target: PolyRing) -> SymPoly:
    """
    Replace the i-th generator of p by images[i], evaluating in `target`

    Args:
        p: Polynomial to substitute into
        images: One image per generator of p's ring, all elements of target
        target: Ring receiving the result

    Returns:
        Polynomial in target
    """
    if len(images) != p.ring.ngens:
        raise ValueError(f"Expected {p.ring.ngens} images, got {len(images)}")

    powers: Dict[Tuple[int, int], SymPoly] = {}
    result = target.zero
    for monom, coeff in p.iterterms():
        term = target.term_new(target.zero_monom, coeff)
        for i, exponent in enumerate(monom):
            if not exponent:
                continue
            key = (i, exponent)
            if key not in powers:
                powers[key] = images[i] ** exponent
            term = term * powers[key]
        result += term
    return result


def elementary_symmetric(m: int, r: int) -> SymPoly:
    """e_m(y1, ..., yr): sum of all squarefree monomials of degree m"""
    if m < 0:
        raise ValueError(f"Degree must be non-negative, got {m}")
    ring = poly_ring('y', r)
    if m > r:
        return ring.zero

    terms = {}
    for chosen in combinations(range(r), m):
        exponents = [0] * r
        for i in chosen:
            exponents[i] = 1
        terms[tuple(exponents)] = 1
    return ring.from_dict(terms)


def complete_symmetric(m: int, r: int) -> SymPoly:
    """h_m(y1, ..., yr): sum of all monomials of degree m; h_0 = 1"""
    if m < 0:
        raise ValueError(f"Degree must be non-negative, got {m}")
    ring = poly_ring('y', r)
    if m == 0:
        return ring.one

    terms = {}
    for chosen in combinations_with_replacement(range(r), m):
        exponents = [0] * r
        for i in chosen:
            exponents[i] += 1
        terms[tuple(exponents)] = 1
    return ring.from_dict(terms)


@lru_cache(maxsize=None)
def h_from_e(m: int, r: int) -> SymPoly:
    """
    Write h_m as a polynomial in e1..er

    Uses the coefficient identity E(t)H(-t) = 1, i.e.
    h_m = sum_{i=1..min(m, r)} (-1)^(i+1) e_i h_(m-i).

    Args:
        m: Degree of the complete symmetric function
        r: Number of e-generators

    Returns:
        Polynomial in poly_ring('e', r)
    """
    if m < 0:
        raise ValueError(f"Degree must be non-negative, got {m}")
    ring = poly_ring('e', r)
    if m == 0:
        return ring.one

    result = ring.zero
    for i in range(1, min(m, r) + 1):
        sign = 1 if i % 2 else -1
        result += sign * ring.gens[i - 1] * h_from_e(m - i, r)
    return result


@lru_cache(maxsize=None)
def e_from_h(m: int) -> SymPoly:
    """Write e_m as a polynomial in h1..hm (the image of h_from_e under omega)"""
    if m < 0:
        raise ValueError(f"Degree must be non-negative, got {m}")
    ring = poly_ring('h', m)
    if m == 0:
        return ring.one

    result = ring.zero
    for i in range(1, m + 1):
        sign = 1 if i % 2 else -1
        result += sign * ring.gens[i - 1] * rename(e_from_h(m - i), 'h', m)
    return result


def expand_monomials(p: SymPoly, r: int) -> SymPoly:
    """
    Expand a polynomial in e, h or p generators into y1..yr

    e_i and p_i map to elementary_symmetric(i, r), h_i to complete_symmetric(i, r).
    A y-polynomial is only moved into the r-variable ring.
    """
    alphabet = alphabet_of(p)
    target = poly_ring('y', r)
    if alphabet == 'y':
        return rename(p, 'y', r)

    ngens = p.ring.ngens
    if alphabet == 'h':
        images = [complete_symmetric(i, r) for i in range(1, ngens + 1)]
    else:
        images = [elementary_symmetric(i, r) for i in range(1, ngens + 1)]
    return substitute(p, images, target)


def is_symmetric(p: SymPoly) -> bool:
    """True when p is invariant under every adjacent transposition of its variables"""
    ring = p.ring
    for i in range(ring.ngens - 1):
        swapped = {}
        for monom, coeff in p.iterterms():
            exponents = list(monom)
            exponents[i], exponents[i + 1] = exponents[i + 1], exponents[i]
            swapped[tuple(exponents)] = coeff
        if ring.from_dict(swapped) != p:
            return False
    return True


def total_degree(monom: Monomial, weights: Optional[Sequence[int]] = None) -> int:
    if weights is None:
        return sum(monom)
    return sum(w * a for w, a in zip(weights, monom))
