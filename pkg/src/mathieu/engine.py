"""Deterministic stabilizer chains for small permutation groups.

The chain is built with a non-randomized Schreier-Sims procedure: each
level keeps a base point, the strong generators attached to it, and an
explicit transversal for the orbit of its base point.  Identical input
always yields an identical chain, which keeps reports byte-stable.

Degrees stay below a few dozen and orders below a few hundred million,
so transversals are stored as whole permutations and orders as exact
Python integers.
"""

from __future__ import annotations

import math

import numpy as np

from .perm import Perm


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive traversal would visit more elements than allowed."""


class _Level:
    __slots__ = ("point", "gens", "orbit", "orbit_order", "done")

    def __init__(self, point: int, degree: int) -> None:
        self.point = point
        self.gens: list[Perm] = []
        self.orbit: dict[int, Perm] = {point: Perm.identity(degree)}
        self.orbit_order: list[int] = [point]
        self.done: set[tuple[int, int]] = set()


class StabilizerChain:
    """Base, transversals and strong generators for one permutation group."""

    def __init__(self, degree: int) -> None:
        self.degree = degree
        self.levels: list[_Level] = []
        self.generators: list[Perm] = []

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, generators: list[Perm], base_prefix=()) -> StabilizerChain:
        """Deterministic Schreier-Sims over the given generators.

        ``base_prefix`` forces the first base points (levels are created
        for them even when their orbits stay trivial), which makes
        pointwise-stabilizer queries for those points direct reads.
        """
        if not generators:
            raise ValueError("generator list must be non-empty")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError("generators must share one degree")
        chain = cls(degree)
        seen: set[int] = set()
        for pt in base_prefix:
            if not 0 <= pt < degree:
                raise ValueError(f"base point {pt} out of range")
            if pt in seen:
                raise ValueError(f"base point {pt} repeated")
            seen.add(pt)
            chain.levels.append(_Level(pt, degree))
        chain.generators = list(generators)
        for g in generators:
            chain._extend(0, g)
        return chain

    def _extend(self, start: int, g: Perm) -> None:
        """Make g a member of the chain group at ``start``, restoring closure."""
        residue, stop = self._sift_partial(start, g)
        if residue is None:
            return
        if stop == len(self.levels):
            self.levels.append(_Level(min(residue.support()), self.degree))
        for lvl in range(start, stop + 1):
            level = self.levels[lvl]
            level.gens.append(residue)
        for lvl in range(start, stop + 1):
            self._close_level(lvl)

    def _close_level(self, lvl: int) -> None:
        """Process outstanding (orbit point, generator) pairs at one level."""
        level = self.levels[lvl]
        work: list[tuple[int, int]] = [
            (beta, gi)
            for beta in level.orbit_order
            for gi in range(len(level.gens))
            if (beta, gi) not in level.done
        ]
        head = 0
        while head < len(work):
            beta, gi = work[head]
            head += 1
            if (beta, gi) in level.done:
                continue
            level.done.add((beta, gi))
            s = level.gens[gi]
            gamma = s[beta]
            u_beta = level.orbit[beta]
            if gamma not in level.orbit:
                level.orbit[gamma] = u_beta * s
                level.orbit_order.append(gamma)
                work.extend((gamma, k) for k in range(len(level.gens)))
            else:
                schreier = u_beta * s * level.orbit[gamma].inverse()
                if not schreier.is_identity():
                    self._extend(lvl + 1, schreier)

    def _sift_partial(self, start: int, g: Perm) -> tuple[Perm | None, int]:
        """Sift from the given level; (None, -1) means membership."""
        residue = g
        for i in range(start, len(self.levels)):
            if residue.is_identity():
                return None, -1
            level = self.levels[i]
            beta = residue[level.point]
            if beta not in level.orbit:
                return residue, i
            residue = residue * level.orbit[beta].inverse()
        if residue.is_identity():
            return None, -1
        return residue, len(self.levels)

    # -- queries -----------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [level.point for level in self.levels]

    def orbit_sizes(self) -> list[int]:
        return [len(level.orbit) for level in self.levels]

    def order(self) -> int:
        return math.prod(self.orbit_sizes())

    def sift(self, p: Perm) -> Perm:
        """The residue of p; identity exactly when p is a member."""
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        residue, _ = self._sift_partial(0, p)
        return Perm.identity(self.degree) if residue is None else residue

    def contains(self, p: Perm) -> bool:
        return self.sift(p).is_identity()

    def __contains__(self, p: Perm) -> bool:
        return self.contains(p)

    def suborder(self, from_level: int) -> int:
        """Order of the group represented by levels from ``from_level`` on."""
        return math.prod(self.orbit_sizes()[from_level:])

    def elements(self, from_level: int = 0):
        """Iterate every element once, as products of transversal members."""
        if from_level >= len(self.levels):
            yield Perm.identity(self.degree)
            return
        level = self.levels[from_level]
        for deep in self.elements(from_level + 1):
            for beta in level.orbit_order:
                yield deep * level.orbit[beta]


def min_support(chain: StabilizerChain, budget: int = 2**24) -> int:
    """Smallest support of any non-identity element, by exhaustive traversal.

    The traversal walks outer transversals depth-first while the deepest
    levels whose product stays small are enumerated once and swept as a
    vectorized block.  Raises BudgetExceeded when the group has more than
    ``budget`` elements, and ValueError for the trivial group.
    """
    order = chain.order()
    if order == 1:
        raise ValueError("trivial group has no non-identity element")
    if order > budget:
        raise BudgetExceeded(f"order {order} exceeds budget {budget}")
    n = chain.degree
    sizes = chain.orbit_sizes()
    split = len(chain.levels)
    suffix = 1
    while split > 0 and suffix * sizes[split - 1] <= 2**16:
        split -= 1
        suffix *= sizes[split]
    inner = np.array([p.images for p in chain.elements(split)], dtype=np.int32)
    points = np.arange(n)
    best = n + 1

    def sweep(prefix: Perm | None) -> int:
        if prefix is None:
            block = inner
        else:
            block = np.asarray(prefix.images, dtype=np.int32)[inner]
        counts = (block != points).sum(axis=1)
        moved = counts[counts > 0]
        return int(moved.min()) if moved.size else n + 1

    def descend(lvl: int, prefix: Perm | None) -> None:
        nonlocal best
        if lvl < 0:
            best = min(best, sweep(prefix))
            return
        level = chain.levels[lvl]
        for beta in level.orbit_order:
            u = level.orbit[beta]
            descend(lvl - 1, u if prefix is None else prefix * u)

    # element = (inner part) * u_{split-1} * ... * u_0, deepest applied first
    descend(split - 1, None)
    return best


class PermutationGroup:
    """A permutation group given by generators, with cached stabilizer chains."""

    def __init__(self, generators: list[Perm], label: str = "") -> None:
        if not generators:
            raise ValueError("generator list must be non-empty")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError("generators must share one degree")
        self.generators = list(generators)
        self.degree = degree
        self.label = label
        self._chains: dict[tuple[int, ...], StabilizerChain] = {}

    def chain(self, base_prefix=None) -> StabilizerChain:
        """The chain for the given forced base prefix; None reuses any cached one."""
        if base_prefix is None:
            if self._chains:
                return next(iter(self._chains.values()))
            base_prefix = ()
        base_prefix = tuple(base_prefix)
        if base_prefix not in self._chains:
            self._chains[base_prefix] = StabilizerChain.build(self.generators, base_prefix)
        return self._chains[base_prefix]

    def order(self) -> int:
        return self.chain().order()

    def contains(self, p: Perm) -> bool:
        return self.chain().contains(p)

    def __contains__(self, p: Perm) -> bool:
        return self.contains(p)

    def orbit(self, point: int) -> frozenset[int]:
        """Orbit of one point under the generators (plain closure, no chain)."""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range")
        seen = {point}
        queue = [point]
        while queue:
            x = queue.pop()
            for g in self.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def pointwise_stabilizer_order(self, fixed) -> int:
        fixed = tuple(fixed)
        return self.chain(fixed).suborder(len(fixed))

    def stabilizer_orbits(self, fixed) -> list[tuple[int, ...]]:
        """Orbits of the pointwise stabilizer of ``fixed`` on the remaining points."""
        fixed = tuple(fixed)
        chain = self.chain(fixed)
        gens = chain.levels[len(fixed)].gens if len(fixed) < len(chain.levels) else []
        remaining = [x for x in range(self.degree) if x not in fixed]
        out: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for start in remaining:
            if start in seen:
                continue
            comp = {start}
            queue = [start]
            while queue:
                x = queue.pop()
                for g in gens:
                    y = g[x]
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            out.append(tuple(sorted(comp)))
        return out

    def transitivity_degree(self) -> int:
        """Largest k with the group k-transitive; 0 when intransitive."""
        chain = self.chain(tuple(range(self.degree)))
        k = 0
        for i, level in enumerate(chain.levels):
            if len(level.orbit) != self.degree - i:
                break
            k += 1
        return k

    def value_count(self) -> int:
        """n!/order: how many distinct functions the relabelings produce."""
        total = math.factorial(self.degree)
        order = self.order()
        assert total % order == 0, "group order must divide n!"
        return total // order

    def verdict(self) -> str:
        """'sym', 'alt' or 'proper' by exact order comparison."""
        order = self.order()
        total = math.factorial(self.degree)
        if order == total:
            return "sym"
        if 2 * order == total:
            return "alt"
        return "proper"

    def min_support(self, budget: int = 2**24) -> int:
        return min_support(self.chain(), budget)

    def same_group(self, other: PermutationGroup) -> bool:
        """Equality as sets of permutations: equal order plus mutual membership."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        if self.order() != other.order():
            return False
        mine, theirs = self.chain(), other.chain()
        return all(theirs.contains(g) for g in self.generators) and all(
            mine.contains(g) for g in other.generators
        )
