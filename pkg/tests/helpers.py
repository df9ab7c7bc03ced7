"""Shared test utilities: repo paths, parsing shorthands, random generators."""

from fractions import Fraction
from pathlib import Path

from hypercircle.exprparse import parse_fraction
from hypercircle.fields import QQ
from hypercircle.mpoly import MultiPoly
from hypercircle.upoly import RationalFunction, UniPoly


def repo_root():
    return Path(__file__).resolve().parent.parent


def input_path(name):
    return repo_root() / "inputs" / name


def parse_gens(strings, nvars):
    """Ideal generators over QQ from expression strings in t0..t{nvars-1}."""
    names = tuple(f"t{i}" for i in range(nvars))
    out = []
    for s in strings:
        num, den = parse_fraction(s, names)
        assert den.is_constant() and den.constant_value() == 1, s
        out.append(num)
    return out


def mp_vars(field, n):
    return [MultiPoly.var(field, n, i) for i in range(n)]


def random_field_element(rng, field, span=3):
    """Small random element, coefficients in -span..span."""
    if field is QQ:
        return Fraction(rng.randint(-span, span), rng.randint(1, span))
    return field.element(
        tuple(Fraction(rng.randint(-span, span)) for _ in range(field.degree))
    )


def random_unipoly(rng, field, max_deg, span=3):
    deg = rng.randint(0, max_deg)
    coeffs = [random_field_element(rng, field, span) for _ in range(deg + 1)]
    return UniPoly(field, coeffs)


def random_rational_function(rng, field, max_deg=2, span=3):
    num = random_unipoly(rng, field, max_deg, span)
    while num.is_zero():
        num = random_unipoly(rng, field, max_deg, span)
    den = random_unipoly(rng, field, max_deg, span)
    while den.is_zero():
        den = random_unipoly(rng, field, max_deg, span)
    return RationalFunction(num, den)


def gen_hom(image, dst):
    """Coefficient map into dst sending the source generator to image."""

    def fn(x):
        acc = dst.zero
        power = dst.one
        for c in x.coeffs:
            acc = acc + power * dst.coerce(c)
            power = power * image
        return acc

    return fn
