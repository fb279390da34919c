import random
from fractions import Fraction

import pytest

from orbitopes.characters import (
    Character,
    NSymSeries,
    char_to_series,
    convolve,
    convolve_value,
    in_group_G,
    invert_character,
    ribbon_mul,
    series_inverse,
    series_mul,
    series_to_char,
)
from orbitopes.compositions import Composition, compositions_of
from orbitopes.hopf_monoid import class_of, mu

C = Composition
F = Fraction


def random_character(rng, degree=6) -> Character:
    values = {}
    for n in range(1, degree + 1):
        for alpha in compositions_of(n):
            if len(alpha) >= 2 or alpha.parts == (1,):
                values[alpha] = F(rng.randint(-5, 5), rng.randint(1, 4))
    return Character(degree, values)


def random_group_series(rng, degree=6) -> NSymSeries:
    return char_to_series(random_character(rng, degree))


def test_ribbon_mul_examples():
    assert ribbon_mul(C((1,)), C((1,))) == (C((1, 1)), C((2,)))
    assert ribbon_mul(C(()), C((2, 1))) == (C((2, 1)),)
    assert ribbon_mul(C((2,)), C((1, 1))) == (C((2, 1, 1)), C((3, 1)))


def test_series_mul_examples():
    one = NSymSeries.unit(3)
    r1 = NSymSeries(3, {C((1,)): F(1)})
    got = series_mul(one + r1, one - 1 * r1)
    assert got == NSymSeries(3, {C(()): F(1), C((2,)): F(-1), C((1, 1)): F(-1)})

    f = NSymSeries(3, {C((2, 1)): F(5), C(()): F(2)})
    assert series_mul(f, NSymSeries.unit(3)) == f

    # cube of the degree-one ribbon: every composition of 3, coefficient 1
    cube_left = series_mul(series_mul(r1, r1), r1)
    cube_right = series_mul(r1, series_mul(r1, r1))
    expected = NSymSeries(3, {alpha: F(1) for alpha in compositions_of(3)})
    assert cube_left == cube_right == expected


def test_series_mul_degree_mismatch():
    with pytest.raises(ValueError, match="degrees differ"):
        series_mul(NSymSeries.unit(3), NSymSeries.unit(4))


def test_series_truncation():
    r3 = NSymSeries(3, {C((3,)): F(1)})
    assert series_mul(r3, r3) == NSymSeries(3, {})
    with pytest.raises(ValueError, match="truncation"):
        NSymSeries(2, {C((3,)): F(1)})


def test_series_inverse_examples():
    assert series_inverse(NSymSeries.unit(4)) == NSymSeries.unit(4)

    f = NSymSeries.unit(4) + NSymSeries(4, {C((1,)): F(1)})
    g = series_inverse(f)
    assert g.coefficient(C((1,))) == -1
    assert g.coefficient(C((2,))) == 1 and g.coefficient(C((1, 1))) == 1
    assert series_mul(f, g) == NSymSeries.unit(4)

    two = 2 * NSymSeries.unit(4)
    assert series_inverse(two) == F(1, 2) * NSymSeries.unit(4)

    with pytest.raises(ValueError, match="non-invertible"):
        series_inverse(NSymSeries(4, {C((1,)): F(1)}))


def test_series_inverse_random():
    rng = random.Random(5)
    for _ in range(50):
        coeffs = {C(()): F(rng.randint(1, 5))}
        for n in range(1, 7):
            for alpha in compositions_of(n):
                if rng.random() < 0.4:
                    coeffs[alpha] = F(rng.randint(-4, 4), rng.randint(1, 3))
        f = NSymSeries(6, coeffs)
        assert series_mul(f, series_inverse(f)) == NSymSeries.unit(6)


def test_in_group_G_examples():
    assert in_group_G(char_to_series(Character.basic()))
    assert in_group_G(NSymSeries.unit(6))
    assert not in_group_G(NSymSeries.unit(6) + NSymSeries(6, {C((2,)): F(1)}))


def test_char_to_series_examples():
    f = char_to_series(Character.basic(2))
    assert f == NSymSeries(2, {C(()): F(1), C((1,)): F(1), C((2,)): F(1, 2)})

    assert char_to_series(Character.identity(2)) == NSymSeries.unit(2)

    zeta = Character(2, {C((1,)): F(1), C((1, 1)): F(2)})
    assert char_to_series(zeta) == NSymSeries(
        2, {C(()): F(1), C((1,)): F(1), C((2,)): F(1, 2), C((1, 1)): F(1)}
    )


def test_char_series_roundtrip():
    rng = random.Random(6)
    for _ in range(25):
        zeta = random_character(rng)
        f = char_to_series(zeta)
        assert in_group_G(f)
        assert series_to_char(f) == zeta
    g = random_group_series(rng)
    assert char_to_series(series_to_char(g)) == g
    with pytest.raises(ValueError, match="group"):
        series_to_char(NSymSeries(3, {C(()): F(1), C((2,)): F(7)}))


def test_convolve_examples():
    basic = Character.basic()
    eps = Character.identity()
    assert convolve(basic, eps) == basic
    assert convolve(eps, basic) == basic

    inv = invert_character(basic)
    conv = convolve(basic, inv)
    assert conv.on_composition(C((1,))) == 0
    assert conv.on_composition(C((1, 1))) == 0
    assert conv.on_composition(C((2,))) == 0

    assert convolve_value(basic, basic, C((1, 1))) == 2


def test_convolve_is_multiplicative_on_one_part_classes():
    # the splits formula on (n) already equals the n-th power of the value on (1)
    rng = random.Random(8)
    for _ in range(20):
        zeta, psi = random_character(rng), random_character(rng)
        conv = convolve(zeta, psi)
        for n in range(1, 7):
            assert convolve_value(zeta, psi, C((n,))) == conv.on_composition(C((1,))) ** n


def test_convolution_group_axioms():
    rng = random.Random(9)
    eps = Character.identity(5)
    for _ in range(15):
        a = random_character(rng, 5)
        b = random_character(rng, 5)
        c = random_character(rng, 5)
        assert convolve(convolve(a, b), c) == convolve(a, convolve(b, c))
        assert convolve(a, eps) == a and convolve(eps, a) == a
        inv = invert_character(a)
        assert convolve(a, inv) == eps
        assert convolve(inv, a) == eps


def test_invert_character_examples():
    psi = invert_character(Character.basic())
    assert psi.on_composition(C((1,))) == -1
    assert psi.on_composition(C((1, 1))) == 2

    eps = Character.identity()
    assert invert_character(eps) == eps


def test_inversion_matches_series_inversion():
    rng = random.Random(10)
    for _ in range(20):
        zeta = random_character(rng)
        assert char_to_series(invert_character(zeta)) == series_inverse(char_to_series(zeta))


def test_group_homomorphism_random():
    rng = random.Random(11)
    for _ in range(25):
        zeta, psi = random_character(rng), random_character(rng)
        lhs = char_to_series(convolve(zeta, psi))
        rhs = series_mul(char_to_series(zeta), char_to_series(psi))
        assert lhs == rhs
        assert in_group_G(lhs)


def test_G_closure():
    rng = random.Random(12)
    for _ in range(20):
        f, g = random_group_series(rng), random_group_series(rng)
        assert in_group_G(series_mul(f, g))
        assert in_group_G(series_inverse(f))


def test_character_on_element_is_multiplicative():
    zeta = random_character(random.Random(13), 6)
    x = class_of(C((2, 1)), "abc")
    y = class_of(C((1, 1)), "de")
    assert zeta.on_element(mu(x, y)) == zeta.on_element(x) * zeta.on_element(y)
    assert zeta.on_element(class_of(C((3,)), "pqr")) == zeta.on_composition(C((1,))) ** 3


def test_character_validation():
    with pytest.raises(ValueError, match="generator"):
        Character(6, {C((3,)): F(1)})
    with pytest.raises(ValueError, match="degree"):
        Character(2, {C((1, 1, 1)): F(1)})
    with pytest.raises(ValueError, match="degree"):
        Character(2, {}).on_composition(C((3,)))


def test_series_json_roundtrip():
    rng = random.Random(14)
    f = random_group_series(rng, 4)
    assert NSymSeries.from_json(f.to_json()) == f


def test_character_json_roundtrip():
    zeta = random_character(random.Random(15), 4)
    assert Character.from_json(zeta.to_json()) == zeta
