import random
from fractions import Fraction

import pytest

from orbitopes.compositions import Composition, compositions_of
from orbitopes.enumeration import subsets
from orbitopes.geometry import standard_ground
from orbitopes.hopf_algebra import (
    EMPTY_MULTISET,
    GeneratorMultiset,
    HopfElement,
    TensorElement,
    antipode,
    apply_antipode_slot,
    coproduct,
    coproduct_in_slot,
    counit,
    generator_multisets,
    inject,
    multiply_slots,
    product,
    tensor,
)
from orbitopes.hopf_monoid import class_of, delta

C = Composition
F = Fraction


def gm(*comps):
    return GeneratorMultiset([C(c) for c in comps])


def elem(*comps):
    return HopfElement.basis(gm(*comps))


def test_generator_multiset_validation():
    gm((1,), (2, 1))
    with pytest.raises(ValueError, match="generator"):
        gm((3,))
    assert gm((2, 1), (1,)).members == gm((1,), (2, 1)).members


def test_inject_examples():
    assert inject(C((2, 1))) == elem((2, 1))
    assert inject(C((3,))) == elem((1,), (1,), (1,))
    assert inject(C(())) == HopfElement.unit()


def test_product_examples():
    x = elem((2, 1))
    assert product(HopfElement.unit(), x) == x
    assert product(inject(C((1,))), inject(C((1,)))) == inject(C((2,)))
    mixed = product(elem((2, 1)) + elem((1,)), elem((1,)))
    assert mixed == elem((2, 1), (1,)) + elem((1,), (1,))


def test_product_commutative_associative_bilinear():
    a, b, c = elem((1, 2)), elem((1,)), elem((1, 1))
    assert product(a, b) == product(b, a)
    assert product(product(a, b), c) == product(a, product(b, c))
    assert product(2 * a + b, c) == 2 * product(a, c) + product(b, c)


def test_coproduct_of_generator_1_2_1():
    got = coproduct(inject(C((1, 2, 1))))
    expected = TensorElement({
        (EMPTY_MULTISET, gm((1, 2, 1))): F(1),
        (gm((1,)), gm((2, 1))): F(4),
        (gm((1, 1)), gm((1, 1))): F(6),
        (gm((1, 2)), gm((1,))): F(4),
        (gm((1, 2, 1)), EMPTY_MULTISET): F(1),
    })
    assert got == expected


def test_coproduct_unit_and_primitive():
    assert coproduct(HopfElement.unit()) == TensorElement.unit()
    one = gm((1,))
    assert coproduct(inject(C((1,)))) == TensorElement({
        (EMPTY_MULTISET, one): F(1),
        (one, EMPTY_MULTISET): F(1),
    })


def test_counit_examples():
    assert counit(HopfElement.unit()) == 1
    assert counit(elem((2, 1))) == 0
    assert counit(3 * HopfElement.unit() + 2 * elem((1,))) == 3


def test_counit_laws():
    # (counit (x) id) after coproduct recovers the element, and symmetrically
    for basis in generator_multisets(5):
        x = HopfElement.basis(basis)
        left = HopfElement()
        right = HopfElement()
        for (u, v), coeff in coproduct(x).coeffs.items():
            left = left + coeff * counit(HopfElement.basis(u)) * HopfElement.basis(v)
            right = right + coeff * counit(HopfElement.basis(v)) * HopfElement.basis(u)
        assert left == x and right == x


def test_one_part_relation_is_well_defined():
    # n-fold product of the primitive's coproduct = binomial expansion of the point class
    for n in range(1, 7):
        via_product = TensorElement.unit()
        for _ in range(n):
            via_product = via_product * coproduct(inject(C((1,))))
        direct = TensorElement({})
        for i in range(n + 1):
            from math import comb

            pair = tensor(inject(C((i,)) if i else C(())), inject(C((n - i,)) if n - i else C(())))
            direct = direct + comb(n, i) * pair
        assert via_product == direct


def test_coassociativity_on_generators():
    for n in range(1, 7):
        for alpha in compositions_of(n):
            x = inject(alpha)
            cp = coproduct(x)
            assert coproduct_in_slot(cp, 0) == coproduct_in_slot(cp, 1)


def test_coproduct_is_algebra_morphism_on_random_elements():
    rng = random.Random(3)
    basis_pool = generator_multisets(5)
    for _ in range(40):
        x = HopfElement({rng.choice(basis_pool): F(rng.randint(-4, 4), rng.randint(1, 3))
                         for _ in range(3)})
        y = HopfElement({rng.choice(basis_pool): F(rng.randint(-4, 4), rng.randint(1, 3))
                         for _ in range(3)})
        assert coproduct(product(x, y)) == coproduct(x) * coproduct(y)


def test_antipode_examples():
    assert antipode(HopfElement.unit()) == HopfElement.unit()
    assert antipode(inject(C((1,)))) == -1 * inject(C((1,)))
    expected = 2 * elem((1,), (1,)) + (-1) * elem((1, 1))
    assert antipode(elem((1, 1))) == expected


def test_antipode_identity_small():
    unit_times_counit = lambda x: counit(x) * HopfElement.unit()
    for basis in generator_multisets(4):
        x = HopfElement.basis(basis)
        cp = coproduct(x)
        left = multiply_slots(apply_antipode_slot(cp, 0))
        right = multiply_slots(apply_antipode_slot(cp, 1))
        assert left == unit_times_counit(x)
        assert right == unit_times_counit(x)


def test_grading():
    x = elem((2, 1), (1,)) + elem((1,))
    assert x.homogeneous(4) == elem((2, 1), (1,))
    assert x.homogeneous(1) == elem((1,))
    assert x.max_degree() == 4
    assert gm((2, 1), (1, 1)).degree == 5


def test_fock_consistency_with_labeled_splits():
    # the binomial weight on each cut counts the labeled subsets realizing it
    for n in range(1, 6):
        labels = standard_ground(n).labels
        for alpha in compositions_of(n):
            cp = coproduct(inject(alpha))
            observed: dict = {}
            for S in subsets(labels):
                left, right = delta(class_of(alpha, labels), S)
                key = (
                    gm(*(c.parts for _, c in sorted(left.blocks, key=lambda b: min(b[0])))),
                    gm(*(c.parts for _, c in sorted(right.blocks, key=lambda b: min(b[0])))),
                )
                observed[key] = observed.get(key, 0) + 1
            assert {k: F(v) for k, v in observed.items()} == cp.coeffs


def test_hopf_element_json_roundtrip():
    x = 2 * elem((1, 2), (1,)) + F(-1, 3) * HopfElement.unit()
    data = x.to_json()
    assert HopfElement.from_json(data) == x
