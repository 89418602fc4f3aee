import random

import pytest

from mathieu.perm import CycleForm, Perm, random_elements

F7 = Perm.from_cycles([(1, 2, 4), (3, 6, 5)], 7)
K11 = Perm([(z + 1) % 11 for z in range(11)])
B23 = Perm.from_cycles(
    [(1, 2, 4, 8, 16, 9, 18, 13, 3, 6, 12), (5, 10, 20, 17, 11, 22, 21, 19, 15, 7, 14)], 23
)
U23 = Perm.from_cycles(
    [(2, 16, 9, 6, 8), (4, 3, 12, 13, 18), (10, 11, 22, 7, 17), (20, 15, 14, 19, 21)], 23
)


def words(degree, gens, count=60, seed=7):
    return random_elements(gens, count, seed)


def test_images_table_from_cycles():
    assert F7.images == (0, 2, 4, 6, 1, 3, 5)


def test_identity_compose():
    assert Perm.identity(7) * F7 == F7
    assert F7 * Perm.identity(7) == F7


def test_compose_is_left_to_right():
    one = Perm.from_cycles([(4, 3), (5, 9), (8, 6), (10, 7)], 11)
    product = one * K11 * K11
    assert list(product.images) == [2, 3, 4, 6, 5, 0, 10, 1, 8, 7, 9]
    assert product**6 == Perm.from_cycles([(0, 4), (2, 5)], 11)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        F7 * K11


def test_inverse():
    assert Perm.identity(5).inverse() == Perm.identity(5)
    assert F7.inverse() == Perm.from_cycles([(1, 4, 2), (3, 5, 6)], 7)
    assert B23 * B23.inverse() == Perm.identity(23)
    assert U23.inverse() * U23 == Perm.identity(23)


def test_power():
    assert F7**0 == Perm.identity(7)
    assert F7**3 == Perm.identity(7)
    assert K11**-1 == K11.inverse()
    assert U23**5 == Perm.identity(23)
    assert U23**-2 == (U23**2).inverse()


def test_order():
    assert Perm.identity(9).order() == 1
    assert K11.order() == 11
    assert U23.order() == 5
    assert B23.order() == 11


def test_support():
    q = Perm.from_cycles([(0, 4), (2, 5)], 11)
    assert q.support() == {0, 2, 4, 5}
    assert Perm.identity(11).support() == frozenset()
    assert len(U23.support()) == 20
    assert set(range(23)) - U23.support() == {0, 1, 5}


def test_parity():
    assert K11.parity() == 0
    assert Perm.from_cycles([(0, 4), (2, 5)], 11).parity() == 0
    ten_cycle = Perm.from_cycles([(1, 2, 4, 8, 5, 10, 9, 7, 3, 6)], 11)
    assert ten_cycle.parity() == 1


def test_parity_is_a_homomorphism():
    gens = [K11, Perm.from_cycles([(0, 1)], 11), Perm.from_cycles([(2, 5, 7)], 11)]
    for p in words(11, gens):
        for q in words(11, gens, seed=11):
            assert (p * q).parity() == (p.parity() + q.parity()) % 2


def test_support_of_product_is_contained_in_union():
    gens = [F7, Perm.from_cycles([(0, 3)], 7)]
    for p in words(7, gens):
        for q in words(7, gens, seed=3):
            assert (p * q).support() <= p.support() | q.support()


def test_cycles_canonical_form():
    assert Perm.identity(6).cycles() == []
    assert F7.cycles() == [(1, 2, 4), (3, 6, 5)]
    two = Perm.from_cycles([(5, 3), (2, 4)], 7)
    assert two.cycles() == [(2, 4), (3, 5)]


def test_cycle_round_trip():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randrange(2, 24)
        images = list(range(n))
        rng.shuffle(images)
        p = Perm(images)
        assert Perm.from_cycles(p.cycles(), n) == p
    assert CycleForm.of(B23).to_perm() == B23


def test_group_axioms_on_random_words():
    gens = [B23, U23]
    ws = words(23, gens, count=40)
    for p in ws[:10]:
        for q in ws[10:20]:
            for r in ws[20:25]:
                assert (p * q) * r == p * (q * r)
    for p in ws:
        assert p * p.inverse() == Perm.identity(23)
        assert p ** p.order() == Perm.identity(23)


def test_not_a_bijection_rejected():
    with pytest.raises(ValueError):
        Perm([0, 0, 1])
    with pytest.raises(ValueError):
        Perm([])
    with pytest.raises(ValueError):
        Perm([1, 2, 3])


def test_bad_cycles_rejected():
    with pytest.raises(ValueError):
        Perm.from_cycles([(1, 2), (2, 3)], 5)
    with pytest.raises(ValueError):
        Perm.from_cycles([(1,)], 5)
    with pytest.raises(ValueError):
        Perm.from_cycles([(1, 7)], 5)
    with pytest.raises(ValueError):
        CycleForm(((0, 0),), 3)


def test_embed_and_relabel():
    f8 = F7.embed(8)
    assert f8.degree == 8 and f8[7] == 7
    assert f8.cycles() == F7.cycles()
    sigma = Perm([(z + 1) % 7 for z in range(7)])
    conj = F7.relabel(sigma)
    for x in range(7):
        assert conj[sigma[x]] == sigma[F7[x]]
    assert sorted(len(c) for c in conj.cycles()) == [3, 3]
