import hypothesis.strategies as st
import pytest
from hypothesis import given

from src.pontcalc import (
    GrassAmbient, PolyAmbient, SympClass, cartan_sum, coefficient_relation, complement_class,
    evaluate, from_roots, gw_multiplicativity_check, is_trivial, make_class, nilpotency_index,
    poly_divides, poly_equal, poly_mul, pontryagin_polynomial, projective_bundle_reduce,
    roots_ambient, tautological_class, total_class, trivial_class, truncated_inverse
)
from src.rings.grassring import GrassSpec
from src.symcore.polynomials import elementary_symmetric, poly_ring


def linear_product(ambient, roots):
    product = (ambient.one(),)
    for u in roots:
        product = poly_mul(ambient, product, (ambient.neg(u), ambient.one()))
    return product


def test_total_class_examples():
    ambient, (a, b) = roots_ambient(2)
    assert total_class(trivial_class(ambient, 3)) == (ambient.one(),)
    assert total_class(make_class(ambient, [a])) == (1, a)
    assert total_class(make_class(ambient, [a, b])) == (1, a, b)


def test_pontryagin_polynomial_examples():
    ambient, (a, u1, u2) = roots_ambient(3)
    assert pontryagin_polynomial(make_class(ambient, [a])) == (-a, 1)
    assert pontryagin_polynomial(trivial_class(ambient, 3)) == (0, 0, 0, 1)
    two_roots = from_roots(ambient, [u1, u2])
    assert poly_equal(ambient, pontryagin_polynomial(two_roots), linear_product(ambient, [u1, u2]))


def test_class_validation():
    ambient, _ = roots_ambient(1)
    with pytest.raises(ValueError):
        SympClass(ambient, 2, (ambient.zero(),))
    with pytest.raises(ValueError):
        make_class(ambient, [poly_ring('y', 2).gens[0]])


def test_cartan_sum_examples():
    ambient, (a, b) = roots_ambient(2)
    summed = cartan_sum(make_class(ambient, [a]), make_class(ambient, [b]))
    assert summed.classes == (a + b, a*b)

    doubled = cartan_sum(make_class(ambient, [a]), make_class(ambient, [a]))
    assert doubled.classes == (2*a, a**2)

    padded = cartan_sum(make_class(ambient, [a, b]), trivial_class(ambient, 2))
    assert padded.half_rank == 4
    assert padded.classes == (a, b, 0, 0)


def test_cartan_sum_rejects_mismatched_rings():
    left, (a,) = roots_ambient(1)
    right, (b, _) = roots_ambient(2)
    with pytest.raises(ValueError):
        cartan_sum(make_class(left, [a]), make_class(right, [b]))


def test_from_roots_examples():
    ambient, (u1, u2) = roots_ambient(2)
    assert from_roots(ambient, [u1, u2]).classes == (u1 + u2, u1*u2)

    empty = from_roots(ambient, [])
    assert empty.half_rank == 0
    assert total_class(empty) == (ambient.one(),)

    a = u1
    assert from_roots(ambient, [a, a, a]).classes == (3*a, 3*a**2, a**3)


@given(st.data())
def test_from_roots_is_cartan_coherent(data):
    total = data.draw(st.integers(min_value=0, max_value=6))
    split = data.draw(st.integers(min_value=0, max_value=total))
    ambient, roots = roots_ambient(total)

    left, right = roots[:split], roots[split:]
    summed = cartan_sum(from_roots(ambient, left), from_roots(ambient, right))
    full = from_roots(ambient, roots)
    assert summed.classes == full.classes
    assert all(full.p(i) == elementary_symmetric(i, total) for i in range(1, total + 1))
    assert poly_equal(ambient, pontryagin_polynomial(full), linear_product(ambient, roots))


@given(st.data())
def test_cartan_sum_is_commutative_and_associative(data):
    ambient, roots = roots_ambient(6)
    sizes = [data.draw(st.integers(min_value=0, max_value=2)) for _ in range(3)]
    classes = []
    start = 0
    for size in sizes:
        classes.append(from_roots(ambient, roots[start:start + size]))
        start += size
    a, b, c = classes

    assert cartan_sum(a, b).classes == cartan_sum(b, a).classes
    assert cartan_sum(cartan_sum(a, b), c).classes == cartan_sum(a, cartan_sum(b, c)).classes
    assert cartan_sum(SympClass(ambient, 0, ()), a).classes == a.classes


def test_poly_divides_examples():
    ambient, (u1, u2) = roots_ambient(2)
    full = pontryagin_polynomial(from_roots(ambient, [u1, u2]))
    part = pontryagin_polynomial(from_roots(ambient, [u1]))
    assert poly_divides(ambient, full, part) == (True, (-u2, 1))
    assert poly_divides(ambient, full, full) == (True, (ambient.one(),))

    a = u1
    t_squared = (ambient.zero(), ambient.zero(), ambient.one())
    assert poly_divides(ambient, t_squared, (-a, ambient.one())) == (False, None)


def test_poly_divides_in_a_nilpotent_ring():
    spec = GrassSpec(1, 2)
    ambient = GrassAmbient(spec)
    zeta = {(1,): 1}
    divides, quotient = poly_divides(ambient, ({}, {}, {(): 1}), ({(1,): -1}, {(): 1}))
    assert divides
    assert poly_equal(ambient, quotient, (zeta, {(): 1}))


def test_poly_divides_rejects_non_monic_divisor():
    ambient, (a,) = roots_ambient(1)
    with pytest.raises(ValueError):
        poly_divides(ambient, (a, 1), (a, 2 * ambient.one()))


@given(st.data())
def test_sub_multiset_divisibility(data):
    size = data.draw(st.integers(min_value=1, max_value=6))
    ambient, roots = roots_ambient(size)
    chosen = data.draw(st.lists(st.integers(min_value=0, max_value=size - 1), unique=True))
    sub = [roots[i] for i in sorted(chosen)]
    rest = [roots[i] for i in range(size) if i not in chosen]

    divides, quotient = poly_divides(ambient, pontryagin_polynomial(from_roots(ambient, roots)),
                                     pontryagin_polynomial(from_roots(ambient, sub)))
    assert divides
    assert poly_equal(ambient, quotient, pontryagin_polynomial(from_roots(ambient, rest)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_nilpotency_of_zeta_on_projective_space(n):
    assert nilpotency_index(GrassSpec(1, n + 1), {(1,): 1}) == n + 1


def test_nilpotency_examples():
    assert nilpotency_index(GrassSpec(2, 4), {(1,): 1}) == 5
    assert nilpotency_index(GrassSpec(2, 4), {}) == 1
    with pytest.raises(ValueError):
        nilpotency_index(GrassSpec(2, 4), {(): 1, (1,): 1})


def test_nilpotency_bound_for_generators():
    for n in range(1, 7):
        for r in range(1, min(n, 3) + 1):
            spec = GrassSpec(r, n)
            for p in tautological_class(spec).classes:
                assert nilpotency_index(spec, p) <= r * (n - r) + 1


def test_gw_multiplicativity_examples():
    ambient, roots = roots_ambient(6)
    a, b = make_class(ambient, [roots[0]]), make_class(ambient, [roots[1]])
    assert gw_multiplicativity_check([a, b], 4)
    assert gw_multiplicativity_check([a, trivial_class(ambient, 2), b], 4)
    generic = [from_roots(ambient, roots[0:2]), from_roots(ambient, roots[2:4]), from_roots(ambient, roots[4:6])]
    assert gw_multiplicativity_check(generic, 6)
    assert gw_multiplicativity_check([], 3)


def test_truncated_inverse():
    ambient, (a,) = roots_ambient(1)
    assert truncated_inverse(ambient, (1, a), 2) == (1, -a, a**2)
    with pytest.raises(ValueError):
        truncated_inverse(ambient, (a, 1), 2)


def test_coefficient_relation_matches_pontryagin_polynomial():
    for r in range(0, 5):
        ambient, roots = roots_ambient(r + 1)
        b = from_roots(ambient, roots[:r])
        y = roots[r]
        assert coefficient_relation(b, y) == evaluate(ambient, pontryagin_polynomial(b), y)
        assert all(coefficient_relation(b, u) == 0 for u in roots[:r])


def test_complement_class_is_inverse_of_tautological_class():
    for spec in [GrassSpec(1, 3), GrassSpec(2, 4), GrassSpec(2, 5), GrassSpec(0, 2), GrassSpec(3, 3)]:
        summed = cartan_sum(tautological_class(spec), complement_class(spec))
        assert summed.half_rank == spec.n
        assert is_trivial(summed)


def test_tautological_class_in_grassmannian_ring():
    b = tautological_class(GrassSpec(2, 4))
    assert b.classes == ({(1,): 1}, {(1, 1): 1})
    assert not is_trivial(b)


def test_projective_bundle_of_trivial_bundle():
    ambient = PolyAmbient(poly_ring('p', 0))
    b = trivial_class(ambient, 3)
    assert projective_bundle_reduce(b, 0) == (1, 0, 0)
    assert projective_bundle_reduce(b, 2) == (0, 0, 1)
    assert all(c == 0 for c in projective_bundle_reduce(b, 3))


def test_projective_bundle_twisted():
    ambient, (u1, u2) = roots_ambient(2)
    line = from_roots(ambient, [u1])
    assert projective_bundle_reduce(line, 2) == (u1**2,)

    plane = from_roots(ambient, [u1, u2])
    # zeta^2 = p1 zeta - p2
    assert projective_bundle_reduce(plane, 2) == (-u1*u2, u1 + u2)
    with pytest.raises(ValueError):
        projective_bundle_reduce(plane, -1)
