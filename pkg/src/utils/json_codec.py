"""
JSON encodings for partitions, polynomials and Schur vectors

Integer coefficients are written as decimal strings so that values beyond
64 bits survive any JSON reader.
"""
import json
from numbers import Integral
from typing import Any, Dict, List, Sequence

from ..errors import PayloadError
from ..symcore.partitions import Partition, make_partition
from ..symcore.polynomials import ALPHABETS, SymPoly, alphabet_of, poly_ring
from ..symcore.schur import SchurVector, clean_vector, sorted_items


def encode_int(value) -> str:
    return str(int(value))


def decode_int(obj: Any) -> int:
    if isinstance(obj, bool):
        raise PayloadError(f"Expected an integer, got {obj!r}")
    if isinstance(obj, Integral):
        return int(obj)
    if isinstance(obj, str):
        try:
            return int(obj.strip())
        except ValueError:
            raise PayloadError(f"Expected a decimal integer string, got {obj!r}")
    raise PayloadError(f"Expected an integer, got {obj!r}")


def encode_partition(lam: Partition) -> List[int]:
    return [int(part) for part in lam]


def decode_partition(obj: Any) -> Partition:
    if not isinstance(obj, list):
        raise PayloadError(f"Partition must be an array of integers, got {obj!r}")
    try:
        return make_partition(obj)
    except ValueError as e:
        raise PayloadError(str(e))


def encode_sympoly(p: SymPoly) -> Dict[str, Any]:
    terms = sorted(p.iterterms(), key=lambda term: term[0])
    return {
        'alphabet': alphabet_of(p),
        'vars': p.ring.ngens,
        'terms': [{'exp': list(monom), 'coeff': encode_int(c)} for monom, c in terms],
    }


def decode_sympoly(obj: Any) -> SymPoly:
    if not isinstance(obj, dict):
        raise PayloadError(f"SymPoly must be an object, got {obj!r}")
    alphabet = obj.get('alphabet')
    if alphabet not in ALPHABETS:
        raise PayloadError(f"SymPoly alphabet must be one of {ALPHABETS}, got {alphabet!r}")
    nvars = decode_int(obj.get('vars'))
    if nvars < 0:
        raise PayloadError(f"SymPoly vars must be non-negative, got {nvars}")
    terms = obj.get('terms', [])
    if not isinstance(terms, list):
        raise PayloadError("SymPoly terms must be an array")

    collected: Dict[tuple, int] = {}
    for term in terms:
        if not isinstance(term, dict) or 'exp' not in term or 'coeff' not in term:
            raise PayloadError(f"SymPoly term must have 'exp' and 'coeff', got {term!r}")
        exponents = term['exp']
        if not isinstance(exponents, list) or len(exponents) != nvars:
            raise PayloadError(f"Exponent vector {exponents!r} must have length {nvars}")
        monom = tuple(decode_int(a) for a in exponents)
        if any(a < 0 for a in monom):
            raise PayloadError(f"Exponents must be non-negative, got {list(monom)}")
        collected[monom] = collected.get(monom, 0) + decode_int(term['coeff'])

    return poly_ring(alphabet, nvars).from_dict(collected)


def encode_vector(v: SchurVector) -> List[Dict[str, Any]]:
    return [{'partition': encode_partition(lam), 'coeff': encode_int(c)} for lam, c in sorted_items(v)]


def decode_vector(obj: Any) -> SchurVector:
    if not isinstance(obj, list):
        raise PayloadError(f"SchurVector must be an array, got {obj!r}")
    v: SchurVector = {}
    for entry in obj:
        if not isinstance(entry, dict) or 'partition' not in entry or 'coeff' not in entry:
            raise PayloadError(f"SchurVector entry must have 'partition' and 'coeff', got {entry!r}")
        lam = decode_partition(entry['partition'])
        v[lam] = v.get(lam, 0) + decode_int(entry['coeff'])
    return clean_vector(v)


def encode_t_poly(coeffs: Sequence[Any], encode_element) -> List[Any]:
    """Polynomial in t as a list of encoded coefficients, t^0 first"""
    return [encode_element(c) for c in coeffs]


def canonical_dumps(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, fixed separators"""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)
