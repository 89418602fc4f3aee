from itertools import product

import pytest

from mathieu.gf import INF, FieldSpec, Infinity, gf, point_from_index, point_index

GF7 = gf(7)
GF9 = gf(3, 2)
GF11 = gf(11)
GF16 = gf(2, 4)
GF23 = gf(23)

ALL_FIELDS = [GF7, GF9, GF11, GF16, GF23]


@pytest.mark.parametrize("spec", ALL_FIELDS, ids=lambda s: s.label())
def test_field_axioms_exhaustive(spec):
    elems = spec.elements()
    zero, one = spec.zero, spec.one
    for a in elems:
        assert a + zero == a and a * one == a
        assert a - a == zero
        if not a.is_zero():
            assert a * a.inverse() == one
    for a, b in product(elems, repeat=2):
        assert a + b == b + a and a * b == b * a
    for a, b, c in product(elems, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_gf9_multiplication_table_anchors():
    w = GF9.gen
    one, two = GF9.one, GF9.element(2)
    assert w * w == one + w
    assert w**4 == two
    assert w**6 == two + two * w
    assert w**8 == one
    assert w**3 == one + two * w


def test_gf23_inverse_example():
    assert GF23.element(10).inverse() == GF23.element(7)
    with pytest.raises(ZeroDivisionError):
        GF23.zero.inverse()


def test_quadratic_residues_gf9():
    w = GF9.gen
    one, two = GF9.one, GF9.element(2)
    residues = {e.index for e in GF9.elements() if not e.is_zero() and e.is_quadratic_residue()}
    expected = {one.index, two.index, (one + w).index, (two + two * w).index}
    assert residues == expected
    assert not (one + two * w).is_quadratic_residue()
    assert not w.is_quadratic_residue()


def test_quadratic_residue_prime_fields():
    assert GF7.element(2).is_quadratic_residue()
    assert not GF7.element(3).is_quadratic_residue()
    with pytest.raises(ValueError):
        GF7.zero.is_quadratic_residue()


@pytest.mark.parametrize("spec", [GF7, GF9, GF11, GF23], ids=lambda s: s.label())
def test_residue_count_is_half(spec):
    nonzero = [e for e in spec.elements() if not e.is_zero()]
    residues = [e for e in nonzero if e.is_quadratic_residue()]
    assert len(residues) == (spec.order - 1) // 2


def test_char2_all_squares():
    for e in GF16.elements():
        if not e.is_zero():
            assert e.is_quadratic_residue()


@pytest.mark.parametrize(
    "spec,expected_index",
    [(GF7, 3), (GF11, 2), (GF23, 5), (GF9, GF9.gen.index), (GF16, 2)],
    ids=lambda v: str(v),
)
def test_primitive_roots(spec, expected_index):
    root = spec.primitive_root()
    assert root.index == expected_index
    assert root.multiplicative_order() == spec.order - 1


def test_frobenius():
    w = GF9.gen
    assert w.frobenius(1) == w**3 == GF9.element((1, 2))
    assert w.frobenius(0) == w
    for a, b in product(GF9.elements(), repeat=2):
        assert (a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1)
        assert (a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1)
    for c in range(3):
        e = GF9.element(c)
        assert e.frobenius(1) == e


def test_enumerate_order_and_labels():
    labels = [str(e) for e in GF9.elements()]
    assert labels == ["0", "1", "2", "w", "1+w", "2+w", "2*w", "1+2*w", "2+2*w"]
    assert [str(e) for e in gf(2).elements()] == ["0", "1"]
    sixteen = GF16.elements()
    assert len(set(sixteen)) == 16
    for e in sixteen:
        assert e**16 == e


def test_element_index_round_trip():
    for spec in ALL_FIELDS:
        for i, e in enumerate(spec.elements()):
            assert e.index == i
            assert spec.element(i) == e


def test_modulus_validation():
    with pytest.raises(ValueError):
        FieldSpec(3, 2, (0, 0, 1))  # x^2 factors as x*x
    with pytest.raises(ValueError):
        FieldSpec(3, 2, (2, 2, 2))  # not monic
    with pytest.raises(ValueError):
        FieldSpec(4, 1, ())  # 4 is not prime
    with pytest.raises(ValueError):
        gf(5, 3)  # no default modulus on file


def test_infinity_is_distinct():
    assert Infinity() is INF
    assert point_index(GF11, INF) == 11
    assert point_index(GF11, GF11.element(4)) == 4
    assert point_from_index(GF11, 11, with_infinity=True) is INF
    assert point_from_index(GF11, 3, with_infinity=True) == GF11.element(3)


def test_prime_field_int_coercion():
    assert int(GF23.element(-3)) == 20
    with pytest.raises(TypeError):
        int(GF9.gen)


def test_mixed_field_arithmetic_rejected():
    with pytest.raises(ValueError):
        GF7.one + GF11.one
