import hypothesis.strategies as st
import pytest
from hypothesis import given

from src.symcore.partitions import conjugate, partitions_up_to
from src.symcore.polynomials import complete_symmetric, elementary_symmetric, expand_monomials, poly_ring
from src.symcore.schur import (
    add_vectors, clean_vector, decompose_schur, multiply_e_monomial, omega_involution, pieri_e,
    scale_vector, schur_bialternant, schur_jt_e, schur_jt_h, schur_lift, schur_polynomial,
    schur_vector_from_e, sorted_items, vector_to_polynomial, vertical_strips
)


def test_schur_jt_h_examples():
    h1, h2, h3 = poly_ring('h', 3).gens
    assert schur_jt_h((3,), 2) == h3
    assert schur_jt_h((), 2) == 1
    assert schur_jt_h((2, 1), 2) == h2*h1 - h3


def test_schur_jt_h_rejects_long_partition():
    with pytest.raises(ValueError):
        schur_jt_h((1, 1, 1), 2)


def test_schur_jt_e_examples():
    assert schur_jt_e((1, 1, 1), 3) == poly_ring('e', 3).gens[2]
    assert schur_jt_e((), 2) == 1
    e1, e2 = poly_ring('e', 2).gens
    assert schur_jt_e((2, 1), 2) == e1*e2
    f1, f2, f3 = poly_ring('e', 3).gens
    assert schur_jt_e((2, 1), 3) == f1*f2 - f3


def test_schur_jt_e_needs_enough_generators():
    with pytest.raises(ValueError):
        schur_jt_e((3,), 2)


def test_schur_bialternant_examples():
    y1, y2 = poly_ring('y', 2).gens
    assert schur_bialternant((1,), 2) == y1 + y2
    assert schur_bialternant((1, 1), 2) == y1*y2
    assert schur_bialternant((2, 1), 2) == y1**2*y2 + y1*y2**2


JACOBI_TRUDI_CASES = [(r, lam) for r in range(1, 5) for lam in partitions_up_to(8, r)]


@pytest.mark.parametrize("r, lam", JACOBI_TRUDI_CASES)
def test_jacobi_trudi_forms_agree(r, lam):
    m = max(r, len(conjugate(lam)))

    via_h = expand_monomials(schur_jt_h(lam, r), r)
    via_e = expand_monomials(schur_jt_e(lam, m), r)
    assert via_h == via_e == schur_bialternant(lam, r)


def test_schur_lift_is_the_dual_jacobi_trudi_in_r_generators():
    e1, e2 = poly_ring('e', 2).gens
    assert schur_lift((2, 1), 2) == e1*e2
    assert schur_lift((3,), 2) == e1**3 - 2*e1*e2


def test_decompose_schur_examples():
    y1, y2 = poly_ring('y', 2).gens
    assert decompose_schur(schur_bialternant((1,), 2)**2, 2) == {(2,): 1, (1, 1): 1}
    assert decompose_schur(y1*y2, 2) == {(1, 1): 1}
    assert decompose_schur(complete_symmetric(3, 3), 3) == {(3,): 1}


def test_decompose_schur_rejects_non_symmetric_input():
    y1, y2 = poly_ring('y', 2).gens
    with pytest.raises(ValueError):
        decompose_schur(y1**2, 2)
    with pytest.raises(ValueError):
        decompose_schur(poly_ring('e', 2).gens[0], 2)


@given(st.data())
def test_decompose_inverts_expansion(data):
    r = data.draw(st.integers(min_value=1, max_value=3))
    support = data.draw(st.lists(st.sampled_from(partitions_up_to(5, r)), max_size=4, unique=True))
    v = clean_vector({lam: data.draw(st.integers(min_value=-5, max_value=5)) for lam in support})
    assert decompose_schur(vector_to_polynomial(v, r), r) == v


def test_top_class_factorization():
    for lam in [(1, 1), (2, 1), (3, 2), (2, 2)]:
        reduced = tuple(part - 1 for part in lam if part > 1)
        assert schur_bialternant(lam, 2) == elementary_symmetric(2, 2) * schur_bialternant(reduced, 2)


def test_omega_involution_examples():
    assert omega_involution({(1,): 1}) == {(1,): 1}
    assert omega_involution({(2,): 1}) == {(1, 1): 1}
    assert omega_involution({(2, 1): 3}) == {(2, 1): 3}


def test_vector_helpers():
    v = add_vectors({(1,): 2, (2,): 1}, {(1,): -2})
    assert v == {(2,): 1}
    assert scale_vector(v, 0) == {}
    assert sorted_items({(2,): 1, (1, 1): 4, (): 3}) == [((), 3), ((1, 1), 4), ((2,), 1)]


def test_bialternant_of_zero_variables_is_one():
    assert schur_bialternant((), 0) == 1


def test_vertical_strips_examples():
    assert vertical_strips((1,), 1, 2) == ((1, 1), (2,))
    assert vertical_strips((1,), 1, 1) == ((2,),)
    assert vertical_strips((), 2, 3) == ((1, 1),)
    assert vertical_strips((1, 1), 1, 2) == ((2, 1),)
    assert vertical_strips((2, 1), 0, 2) == ((2, 1),)
    assert vertical_strips((1, 1, 1), 1, 2) == ()


def test_pieri_e_drops_wide_terms():
    assert pieri_e({(1,): 1}, 1, 2) == {(2,): 1, (1, 1): 1}
    assert pieri_e({(1,): 1}, 1, 2, max_cols=1) == {(1, 1): 1}
    assert pieri_e({(1,): 2, (): 1}, 2, 2) == {(2, 1): 2, (1, 1): 1}


def test_multiply_e_monomial_examples():
    assert multiply_e_monomial({(): 1}, (2,), 2) == {(2,): 1, (1, 1): 1}
    assert multiply_e_monomial({(): 1}, (1, 1), 2) == {(2, 1): 1}
    assert multiply_e_monomial({(): 1}, (3,), 1) == {(3,): 1}
    assert multiply_e_monomial({(): 1}, (0, 2), 2, max_cols=1) == {}


@given(st.data())
def test_schur_vector_from_e_matches_monomial_expansion(data):
    r = data.draw(st.integers(min_value=1, max_value=3))
    ring = poly_ring('e', r)
    p = ring.zero
    for _ in range(data.draw(st.integers(min_value=0, max_value=3))):
        exponents = data.draw(st.lists(st.integers(min_value=0, max_value=2), min_size=r, max_size=r))
        term = ring.one
        for gen, exponent in zip(ring.gens, exponents):
            term *= gen ** exponent
        p += data.draw(st.integers(min_value=-4, max_value=4)) * term
    assert schur_vector_from_e(p, r) == decompose_schur(expand_monomials(p, r), r)


def test_schur_vector_from_e_with_column_bound():
    e1, e2 = poly_ring('e', 2).gens
    assert schur_vector_from_e(e1**2, 2, max_cols=1) == {(1, 1): 1}
    assert schur_vector_from_e(e1**2 - e2, 2) == {(2,): 1}


def test_schur_vector_from_e_rejects_other_alphabets():
    with pytest.raises(ValueError):
        schur_vector_from_e(poly_ring('h', 2).gens[0], 2)
    with pytest.raises(ValueError):
        schur_vector_from_e(poly_ring('e', 3).gens[2], 2)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_schur_polynomial_matches_bialternant(r):
    for lam in partitions_up_to(6, r):
        assert schur_polynomial(lam, r) == schur_bialternant(lam, r)
    assert schur_polynomial((1,) * (r + 1), r) == 0
