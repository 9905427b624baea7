import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.internal_types import (
    FIBONACCI,
    VERTICAL,
    Exponent,
    ExponentPair,
    finite_family,
    make_generator_set,
)
from src.monoid.lambda_families import (
    contains_element,
    elements_within,
    enumerate_family,
)
from src.monoid.membership import member_bruteforce
from src.polynomials.coefficient_rings import (
    INTEGERS,
    IntegersModRing,
    ring_for_modulus,
)
from src.polynomials.parser import (
    PolynomialParseError,
    parse_poly,
    parse_poly_file,
    parse_poly_lines,
)
from src.polynomials.sparse_poly import (
    SparsePoly,
    format_poly,
    monomial,
    monomial_of_pair,
    monomials_of,
    poly_scale,
)
from src.polynomials.subalgebra import (
    NotInSubalgebra,
    contains_polynomials_in_x,
    extract_mstar,
    family_monomials,
    in_generated_subring,
    in_subalgebra,
)

MOD_5 = IntegersModRing(5)

FAMILIES = [
    VERTICAL,
    FIBONACCI,
    finite_family([ExponentPair(1, 0), ExponentPair(2, 3)]),
]


def random_polynomial_in_x(rng: random.Random, ring) -> SparsePoly:
    return SparsePoly.from_terms(
        ring,
        [
            (Exponent(rng.randint(0, 30), 0), rng.choice([-1, 1]) * rng.randint(1, 50))
            for _ in range(rng.randint(1, 6))
        ],
    )


def test_rings():
    assert ring_for_modulus(None) is INTEGERS
    assert ring_for_modulus(5) == MOD_5
    assert MOD_5.normalize(-3) == 2
    assert MOD_5.is_zero(10)
    assert MOD_5.mul(3, 4) == 2
    assert str(MOD_5) == "ZZ/5"
    assert str(INTEGERS) == "ZZ"
    with pytest.raises(ValueError):
        IntegersModRing(1)


def test_parse_poly():
    poly = parse_poly("3*x^1*y^0 + 2*x^1*y^2")
    assert poly.terms == {Exponent(1, 0): 3, Exponent(1, 2): 2}
    assert monomials_of(poly) == {Exponent(1, 0), Exponent(1, 2)}


def test_parse_poly_merges_and_reduces_terms():
    assert parse_poly("2*x^1*y^0 + -2*x^1*y^0").is_zero()
    assert parse_poly("5*x^1*y^0 + 1*x^0*y^1", MOD_5).terms == {Exponent(0, 1): 1}


@pytest.mark.parametrize(
    "text, message",
    [
        ("1*x^-1*y^0", "negative exponent"),
        ("1*x^1", "malformed term"),
        ("x^1*y^1", "malformed term"),
        ("   ", "empty polynomial"),
        ("١*x^1*y^0", "malformed term"),
        ("1*x^٣*y^0", "malformed term"),
        ("1*x^1*y^²", "malformed term"),
    ],
)
def test_parse_poly_rejects(text, message):
    with pytest.raises(PolynomialParseError, match=message):
        parse_poly(text)


def test_parse_poly_lines_skips_comments():
    polys = parse_poly_lines("# header\n\n1*x^2*y^5  # trailing\n1*x^0*y^0\n")
    assert len(polys) == 2
    with pytest.raises(PolynomialParseError, match="line 2"):
        parse_poly_lines("1*x^1*y^1\n1*y^2\n")


def test_parse_poly_file(data_dir):
    polys = parse_poly_file(data_dir / "polys_inside.txt", MOD_5)
    assert [format_poly(p) for p in polys] == [
        "1*x^2*y^5",
        "3*x^1*y^0 + 2*x^1*y^2",
    ]


def test_format_poly():
    poly = parse_poly("2*x^1*y^2 + -1*x^0*y^0")
    assert format_poly(poly) == "-1*x^0*y^0 + 2*x^1*y^2"
    assert parse_poly(format_poly(poly)) == poly
    assert format_poly(SparsePoly(INTEGERS)) == "0*x^0*y^0"


def test_arithmetic():
    x, y = monomial(1, 0), monomial(0, 1)
    assert (x + y) * (x - y) == monomial(2, 0) - monomial(0, 2)
    assert -(x - y) == y - x
    assert poly_scale(3, x) == monomial(1, 0, 3)
    x5, y5 = monomial(1, 0, ring=MOD_5), monomial(0, 1, ring=MOD_5)
    assert (x5 + y5) * (x5 + y5) == SparsePoly.from_terms(
        MOD_5, [(Exponent(2, 0), 1), (Exponent(1, 1), 2), (Exponent(0, 2), 1)]
    )
    assert poly_scale(5, x5).is_zero()
    with pytest.raises(ValueError):
        x + x5


def test_in_subalgebra_chooses_factorization():
    result = in_subalgebra(parse_poly("1*x^2*y^5"), VERTICAL)
    assert result.inside
    assert result.generating_monomials == {ExponentPair(1, 2), ExponentPair(1, 3)}
    assert str(result.factorizations[Exponent(2, 5)]) == "(1,2) * (1,3)"


def test_y_is_not_inside():
    for ring in (INTEGERS, MOD_5):
        result = in_subalgebra(parse_poly("1*x^0*y^1", ring), VERTICAL)
        assert not result.inside
        assert result.obstructions == (Exponent(0, 1),)
        assert result.generating_monomials == frozenset()


def test_termwise_membership_over_mod_5():
    poly = parse_poly("3*x^1*y^0 + 2*x^1*y^2", MOD_5)
    assert in_subalgebra(poly, VERTICAL).inside
    assert not in_subalgebra(poly, FIBONACCI).inside


def test_constants_are_inside():
    result = in_subalgebra(parse_poly("7*x^0*y^0"), FIBONACCI)
    assert result.inside
    assert result.generating_monomials == frozenset()


def test_polynomials_in_x_are_inside_over_both_rings(rng):
    for family in FAMILIES:
        for _ in range(100):
            state = rng.getstate()
            over_integers = random_polynomial_in_x(rng, INTEGERS)
            rng.setstate(state)
            over_mod_5 = random_polynomial_in_x(rng, MOD_5)
            assert contains_polynomials_in_x(over_integers, family)
            assert contains_polynomials_in_x(over_mod_5, family)
        for ring in (INTEGERS, MOD_5):
            y = monomial(0, 1, ring=ring)
            assert in_subalgebra(y, family).obstructions == (Exponent(0, 1),)


def test_polynomials_in_x_helper_rejects_y():
    with pytest.raises(AssertionError):
        contains_polynomials_in_x(monomial(1, 1), VERTICAL)


def test_extract_mstar():
    polys = [parse_poly("1*x^2*y^5"), parse_poly("4*x^3*y^3 + 1*x^0*y^0")]
    assert extract_mstar(polys, VERTICAL) == make_generator_set(
        [ExponentPair(1, 1), ExponentPair(1, 2), ExponentPair(1, 3)]
    )


def test_extract_mstar_of_nothing_is_x():
    assert extract_mstar([], FIBONACCI) == make_generator_set([ExponentPair(1, 0)])
    assert extract_mstar([parse_poly("2*x^0*y^0")], FIBONACCI) == (
        make_generator_set([ExponentPair(1, 0)])
    )


def test_extract_mstar_rejects_polynomials_outside():
    polys = [parse_poly("1*x^1*y^0"), parse_poly("1*x^1*y^2")]
    with pytest.raises(NotInSubalgebra) as info:
        extract_mstar(polys, FIBONACCI)
    assert info.value.polynomial_index == 1
    assert info.value.term == Exponent(1, 2)


def test_polynomials_lie_in_subring_of_their_generating_monomials():
    polys = [
        parse_poly("1*x^2*y^5 + 3*x^3*y^3"),
        parse_poly("2*x^7*y^10 + 1*x^1*y^0"),
    ]
    generators = extract_mstar(polys, VERTICAL)
    for poly in polys:
        assert in_generated_subring(poly, generators).inside
    assert not in_generated_subring(monomial(1, 11), generators).inside


def test_family_monomials():
    assert family_monomials(FIBONACCI, 3) == [
        monomial(1, 0),
        monomial(1, 1),
        monomial(2, 3),
    ]
    assert all(in_subalgebra(m, FIBONACCI).inside for m in family_monomials(FIBONACCI, 8))


positive_polys = st.dictionaries(
    st.builds(Exponent, st.integers(0, 12), st.integers(0, 12)),
    st.integers(1, 100),
    min_size=1,
    max_size=6,
).map(lambda terms: SparsePoly.from_terms(INTEGERS, terms.items()))


@given(positive_polys, positive_polys)
@settings(max_examples=200)
def test_product_support_is_the_sum_of_supports(left, right):
    sums = {
        Exponent(e1.a + e2.a, e1.b + e2.b)
        for e1 in monomials_of(left)
        for e2 in monomials_of(right)
    }
    assert monomials_of(left * right) == sums
    assert monomials_of((left - right) * right) <= sums | {
        Exponent(e1.a + e2.a, e1.b + e2.b)
        for e1 in monomials_of(right)
        for e2 in monomials_of(right)
    }


rings = st.one_of(st.just(INTEGERS), st.integers(2, 50).map(IntegersModRing))
coefficients = st.integers(-(10**6), 10**6)


@given(rings, coefficients, coefficients, coefficients)
@settings(max_examples=300)
def test_coefficient_ring_axioms(ring, a, b, c):
    a, b, c = ring.normalize(a), ring.normalize(b), ring.normalize(c)
    add, mul = ring.add, ring.mul
    assert ring.eq(add(a, b), add(b, a))
    assert ring.eq(add(add(a, b), c), add(a, add(b, c)))
    assert ring.eq(mul(a, b), mul(b, a))
    assert ring.eq(mul(mul(a, b), c), mul(a, mul(b, c)))
    assert ring.eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
    assert ring.eq(add(a, ring.zero), a)
    assert ring.eq(mul(a, ring.one), a)
    assert ring.is_zero(mul(a, ring.zero))
    assert ring.is_zero(add(a, ring.neg(a)))
    assert ring.is_zero(a) == ring.eq(a, ring.zero)


@given(st.integers(2, 50), coefficients)
def test_modular_normal_form_is_canonical(modulus, value):
    ring = IntegersModRing(modulus)
    assert 0 <= ring.normalize(value) < modulus
    assert ring.eq(ring.normalize(value), value)
    assert ring.normalize(value + modulus) == ring.normalize(value)


# box sizes keep the brute force oracle small for each family
ORACLE_BOXES = [
    (VERTICAL, 12, 5),
    (FIBONACCI, 12, 30),
    (finite_family([ExponentPair(1, 0), ExponentPair(2, 3), ExponentPair(3, 1)]), 12, 30),
]


@pytest.mark.parametrize("family, max_a, max_b", ORACLE_BOXES)
def test_monomial_membership_agrees_with_brute_force(rng, family, max_a, max_b):
    for _ in range(60):
        a, b = rng.randint(0, max_a), rng.randint(0, max_b)
        if a == 0:
            expected = b == 0
        else:
            generators = make_generator_set(elements_within(family, a, b))
            expected = member_bruteforce(generators, Exponent(a, b))
        result = in_subalgebra(monomial(a, b), family)
        assert result.inside == expected, f"{family=} {(a, b)=}"
        if result.inside and a:
            factorization = result.factorizations[Exponent(a, b)]
            assert factorization.target() == Exponent(a, b)


@pytest.mark.parametrize("family", FAMILIES)
def test_products_of_family_monomials_are_inside(rng, family):
    elements = enumerate_family(family, 5)
    for ring in (INTEGERS, MOD_5):
        for _ in range(30):
            poly = SparsePoly.from_terms(ring, [(Exponent(0, 0), rng.randint(-9, 9))])
            for _ in range(rng.randint(1, 3)):
                product = monomial(0, 0, rng.randint(1, 9), ring=ring)
                for _ in range(rng.randint(1, 4)):
                    product = product * monomial_of_pair(rng.choice(elements), ring)
                poly = poly + product
            result = in_subalgebra(poly, family)
            assert result.inside, format_poly(poly)
            assert all(contains_element(family, g) for g in result.generating_monomials)


def test_deep_monomial_of_vertical_family():
    result = in_subalgebra(parse_poly("1*x^1*y^1200"), VERTICAL)
    assert result.inside
    assert result.generating_monomials == {ExponentPair(1, 1200)}
    result = in_subalgebra(parse_poly("1*x^2*y^1500 + 1*x^0*y^1"), VERTICAL)
    assert not result.inside
    assert result.obstructions == (Exponent(0, 1),)
