import math

import pytest

from mathieu import search
from mathieu.engine import BudgetExceeded, PermutationGroup, StabilizerChain, min_support
from mathieu.perm import Perm, random_elements


def closure(gens):
    """Independent brute-force group enumeration by breadth-first closure."""
    tables = [tuple(g.images) for g in gens]
    n = len(tables[0])
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in tables:
                prod = tuple(g[i] for i in w)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return seen


def tuple_transitivity(gens, order):
    """Largest k with the k-tuple action transitive, by direct tuple orbits."""
    n = gens[0].degree
    k = 0
    while k < n:
        k += 1
        full = math.prod(range(n, n - k, -1))
        if full > order:
            return k - 1
        start = tuple(range(k))
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for t in frontier:
                for g in gens:
                    image = tuple(g[x] for x in t)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        if len(seen) != full:
            return k - 1
    return n


def cyclic7():
    return PermutationGroup([Perm([(z + 1) % 7 for z in range(7)])])


def sym5():
    return PermutationGroup([Perm.from_cycles([(0, 1)], 5), Perm([(z + 1) % 5 for z in range(5)])])


def alt5():
    return PermutationGroup(
        [Perm.from_cycles([(0, 1, 2)], 5), Perm.from_cycles([(0, 1, 2, 3, 4)], 5)]
    )


def test_cyclic_chain():
    chain = cyclic7().chain(())
    assert chain.order() == 7
    assert chain.base == [0]
    assert chain.orbit_sizes() == [7]


def test_sym_and_alt():
    assert sym5().order() == 120
    assert sym5().verdict() == "sym"
    assert sym5().transitivity_degree() == 5
    assert alt5().order() == 60
    assert alt5().verdict() == "alt"
    assert alt5().transitivity_degree() == 3


@pytest.mark.parametrize(
    "factory",
    [cyclic7, sym5, alt5, search.g168_7, search.psl2_11, search.m10_gf9, search.agl_8],
    ids=lambda f: f.__name__,
)
def test_chain_order_matches_brute_force(factory):
    group = factory()
    elems = closure(group.generators)
    assert group.order() == len(elems)
    assert group.transitivity_degree() == tuple_transitivity(group.generators, len(elems))


def test_chain_elements_enumerate_the_group():
    group = search.g168_7()
    from_chain = {p.images for p in group.chain(()).elements()}
    assert from_chain == closure(group.generators)


def test_sifting_random_words():
    group = search.m11_on_11()
    chain = group.chain(())
    for w in random_elements(group.generators, 100, seed=5):
        assert chain.contains(w)
    assert chain.order() == 7920


def test_contains_rejects_non_members():
    group = search.g168_7()
    assert not group.contains(Perm.from_cycles([(0, 1)], 7))
    with pytest.raises(ValueError):
        group.chain(()).sift(Perm.identity(8))


def test_base_prefix_is_respected():
    group = search.m11_on_11()
    chain = group.chain((3, 7, 1))
    assert chain.base[:3] == [3, 7, 1]
    assert chain.order() == 7920
    with pytest.raises(ValueError):
        StabilizerChain.build(group.generators, base_prefix=(0, 0))
    with pytest.raises(ValueError):
        StabilizerChain.build(group.generators, base_prefix=(99,))
    with pytest.raises(ValueError):
        StabilizerChain.build([], base_prefix=())


def test_pointwise_stabilizer_orders():
    m11 = search.m11_on_11()
    assert m11.pointwise_stabilizer_order([0]) == 720
    assert m11.pointwise_stabilizer_order(range(11)) == 1
    assert cyclic7().pointwise_stabilizer_order([0]) == 1


def test_stabilizer_orbits():
    assert search.m23().stabilizer_orbits([]) == [tuple(range(23))]
    sizes = sorted(len(o) for o in sym5().stabilizer_orbits([0]))
    assert sizes == [4]
    singletons = cyclic7().stabilizer_orbits([0])
    assert all(len(o) == 1 for o in singletons)


def test_orbit():
    assert search.m23().orbit(0) == frozenset(range(23))
    two_blocks = PermutationGroup([Perm.from_cycles([(0, 1), (2, 3)], 4)])
    assert two_blocks.orbit(0) == {0, 1}
    assert two_blocks.transitivity_degree() == 0


def test_value_count_times_order_is_factorial():
    for factory in (cyclic7, sym5, alt5, search.g168_7, search.psl2_11):
        group = factory()
        assert group.value_count() * group.order() == math.factorial(group.degree)
    assert sym5().value_count() == 1
    assert alt5().value_count() == 2
    assert search.g168_7().value_count() == 30


def test_min_support_small_groups():
    assert cyclic7().min_support() == 7
    assert search.g168_7().min_support() == 4
    brute = min(
        sum(1 for i, j in enumerate(w) if i != j)
        for w in closure(search.psl2_11().generators)
        if any(i != j for i, j in enumerate(w))
    )
    assert search.psl2_11().min_support() == brute


def test_min_support_budget_and_trivial():
    with pytest.raises(BudgetExceeded):
        search.m11_on_11().min_support(budget=1000)
    trivial = PermutationGroup([Perm.identity(4)])
    with pytest.raises(ValueError):
        trivial.min_support()


def test_same_group():
    ks = search.m11_on_11()
    assert ks.same_group(ks)
    sigma = Perm([(z + 3) % 11 for z in range(11)])  # a power of the full cycle, so a member
    conj = PermutationGroup([g.relabel(sigma) for g in ks.generators])
    assert ks.same_group(conj)
    psl = search.psl2_11()
    assert not psl.same_group(ks)
    assert all(ks.contains(g) for g in psl.generators)
    with pytest.raises(ValueError):
        psl.same_group(cyclic7())


def test_chain_build_is_deterministic():
    a, b = search.m23().generators
    c1 = StabilizerChain.build([a, b])
    c2 = StabilizerChain.build([a, b])
    assert c1.base == c2.base
    for l1, l2 in zip(c1.levels, c2.levels):
        assert l1.orbit_order == l2.orbit_order
        assert {k: v.images for k, v in l1.orbit.items()} == {k: v.images for k, v in l2.orbit.items()}
        assert [g.images for g in l1.gens] == [g.images for g in l2.gens]


def test_proper_transitive_groups_obey_the_halving_bound():
    for factory in (search.g168_7, search.psl2_11, search.m11_on_11, search.m23, search.m24):
        group = factory()
        if group.verdict() == "proper" and group.value_count() > 2:
            assert group.transitivity_degree() <= group.degree / 2
