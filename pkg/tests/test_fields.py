"""Number field towers: arithmetic, minimal polynomials, subfields, roots."""

import random
from fractions import Fraction

import pytest

from helpers import random_field_element

from hypercircle.fields import (
    QQ,
    ReduciblePolynomialError,
    TowerContext,
    canonical_key,
    field_qq_dim,
    is_irreducible,
    make_extension,
    min_poly_over_q,
    primitive_element,
    relative_min_poly,
    roots_in_field,
    trivial_embedding,
)
from hypercircle.upoly import UniPoly


def _P(*coeffs):
    return UniPoly(QQ, [Fraction(c) for c in coeffs])


QUARTIC_MIN = _P(8, -16, 12, -4, 1)  # x^4 - 4x^3 + 12x^2 - 16x + 8


@pytest.fixture(scope="module")
def quartic_field():
    return make_extension(QQ, QUARTIC_MIN, "a")


def test_rational_field_basics():
    assert QQ.coerce(3) == Fraction(3)
    assert QQ.one - QQ.one == QQ.zero
    assert field_qq_dim(QQ) == 1


def test_gaussian_arithmetic(qi):
    i = qi.gen()
    assert i * i == qi.coerce(-1)
    x = qi.element((Fraction(1), Fraction(2)))  # 1 + 2i
    y = qi.element((Fraction(3), Fraction(-1)))
    assert x * y == qi.element((Fraction(5), Fraction(5)))
    assert x / x == qi.one
    assert (x - x) == qi.zero
    assert field_qq_dim(qi) == 2


def test_inverse_property_random(qi, quartic_field):
    rng = random.Random(20260814)
    for field in (qi, quartic_field):
        for _ in range(25):
            x = random_field_element(rng, field)
            if x == field.zero:
                continue
            assert x * (field.one / x) == field.one


def test_reducible_minpoly_rejected():
    with pytest.raises(ReduciblePolynomialError):
        make_extension(QQ, _P(-1, 0, 1), "a")  # x^2 - 1


def test_is_irreducible():
    assert is_irreducible(_P(1, 0, 1))[0]
    assert is_irreducible(QUARTIC_MIN)[0]
    assert is_irreducible(_P(7, 1))[0]
    ok, factor = is_irreducible(_P(-1, 0, 1))
    assert not ok and _P(-1, 0, 1).divrem(factor)[1].is_zero()
    ok, factor = is_irreducible(_P(4, 0, 0, 0, 1))  # (x^2-2x+2)(x^2+2x+2)
    assert not ok and 1 <= factor.degree() < 4
    assert _P(4, 0, 0, 0, 1).divrem(factor)[1].is_zero()


def test_min_poly_over_q(qi, quartic_field):
    i = qi.gen()
    assert min_poly_over_q(i) == _P(1, 0, 1)
    assert min_poly_over_q(qi.coerce(5)) == _P(-5, 1)
    a = quartic_field.gen()
    gamma = -12 + 8 * a - 3 * a * a + a * a * a
    assert min_poly_over_q(gamma) == _P(40, 12, 1)
    assert min_poly_over_q(a) == QUARTIC_MIN


def test_min_poly_annihilates(quartic_field):
    rng = random.Random(5)
    for _ in range(10):
        x = random_field_element(rng, quartic_field)
        m = min_poly_over_q(x)
        assert m.map_coefficients(quartic_field.coerce, quartic_field).evaluate(x) == quartic_field.zero
        assert is_irreducible(m)


def test_roots_in_field_gaussian(qi):
    i = qi.gen()
    f = UniPoly(qi, (qi.one, qi.zero, qi.one))
    assert roots_in_field(f, qi) == sorted([-i, i], key=canonical_key)
    # no roots when the discriminant is not a square in the field
    g = UniPoly(qi, (qi.coerce(-3), qi.zero, qi.one))
    assert roots_in_field(g, qi) == []


def test_roots_in_field_planted(qi):
    rng = random.Random(99)
    for _ in range(10):
        r1 = random_field_element(rng, qi)
        r2 = random_field_element(rng, qi)
        f = UniPoly(qi, (r1, qi.coerce(-1))) * UniPoly(qi, (r2, qi.coerce(-1)))
        roots = roots_in_field(f, qi)
        assert set(roots) == {r1, r2}
        for c in roots:
            assert f.evaluate(c) == qi.zero


def test_roots_in_field_rational_inputs_over_tower(quartic_field):
    # the quadratic below picks out the two conjugate values of the point field
    f = UniPoly(quartic_field, tuple(quartic_field.coerce(c) for c in (10, 6, 1)))
    roots = roots_in_field(f, quartic_field)
    a = quartic_field.gen()
    expected = {
        -4 * a + Fraction(3, 2) * a * a - Fraction(1, 2) * a * a * a,
        -6 + 4 * a - Fraction(3, 2) * a * a + Fraction(1, 2) * a * a * a,
    }
    assert set(roots) == expected


def test_primitive_element_trivial_and_full(qi):
    pe = primitive_element(qi, [qi.coerce(7), qi.coerce(-2)])
    assert pe.r == 1
    pe2 = primitive_element(qi, [qi.gen()])
    assert pe2.r == 2
    assert pe2.minpoly.degree() == 2


def test_primitive_element_membership_and_lift(quartic_field):
    a = quartic_field.gen()
    gamma = -12 + 8 * a - 3 * a * a + a * a * a
    pe = primitive_element(quartic_field, [gamma])
    assert pe.r == 2
    assert pe.minpoly == _P(40, 12, 1)
    assert pe.membership(gamma)
    assert pe.membership(a) is None
    down = pe.lift(gamma)
    assert down is not None and down.field is pe.subfield
    assert pe.push(down) == gamma
    # the subfield generator maps onto gamma itself
    g = pe.subfield.gen()
    assert pe.push(g) == pe.gamma
    assert pe.lift(pe.push(g)) == g


def test_relative_min_poly_fourth_root():
    K = make_extension(QQ, _P(-2, 0, 0, 0, 1), "a")
    a = K.gen()
    pe = primitive_element(K, [a * a])
    rel = relative_min_poly(pe)
    S = pe.subfield
    g = S.gen()
    assert rel.coeffs == (-g, S.zero, S.one)  # x^2 - g
    # the relative minpoly annihilates a over the subfield tower
    ctx = TowerContext(pe, rel)
    T = ctx.tower
    alpha = T.gen()
    lifted = rel.map_coefficients(T.coerce, T)
    assert lifted.evaluate(alpha) == T.zero


def test_tower_context_roundtrip():
    K = make_extension(QQ, _P(-2, 0, 0, 0, 1), "a")
    a = K.gen()
    pe = primitive_element(K, [a * a])
    ctx = TowerContext(pe, relative_min_poly(pe))
    rng = random.Random(13)
    for _ in range(10):
        x = random_field_element(rng, K)
        assert ctx.flatten(ctx.to_tower(x)) == x


def test_trivial_embedding_is_the_rational_subfield(qi):
    emb = trivial_embedding(qi)
    assert emb.r == 1
    assert emb.subfield is QQ
    assert emb.lift(qi.gen()) is None
    assert emb.lift(qi.coerce(5)) == Fraction(5)
    assert emb.push(Fraction(5)) == qi.coerce(5)


def test_canonical_key_orders_deterministically(qi):
    i = qi.gen()
    xs = [i, -i, qi.one, qi.zero, 2 * i + 1]
    s1 = sorted(xs, key=canonical_key)
    s2 = sorted(list(reversed(xs)), key=canonical_key)
    assert s1 == s2
