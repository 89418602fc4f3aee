"""Exact permutation arithmetic on the point set {0, ..., n-1}.

A permutation is stored as a dense image table: ``images[i]`` is where
point ``i`` goes.  Composition is read left to right everywhere in this
package: ``p * q`` applies ``p`` first, then ``q``.  Degrees never exceed
a few dozen, so everything is plain tuples with no sparse tricks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class Perm:
    """An immutable permutation of {0, ..., degree-1}."""

    __slots__ = ("images",)

    images: tuple[int, ...]

    def __init__(self, images) -> None:
        images = tuple(images)
        n = len(images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a bijection on 0..{n - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> Perm:
        """Wrap an image table known to be valid (internal fast path)."""
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Perm:
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Perm:
        """Build a permutation from disjoint cycles; fixed points are implicit."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = tuple(cycle)
            if len(cycle) < 2:
                raise ValueError(f"cycle {cycle!r} is shorter than 2")
            for a in cycle:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                if a in seen:
                    raise ValueError(f"point {a} appears twice")
                seen.add(a)
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            images[cycle[-1]] = cycle[0]
        return cls._raw(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, point: int) -> int:
        return self.images[point]

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Perm) -> Perm:
        """Apply self first, then other."""
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        return Perm._raw(tuple(map(other.images.__getitem__, self.images)))

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._raw(tuple(inv))

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        square = self
        while k:
            if k & 1:
                result = result * square
            square = square * square
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        """Least k >= 1 with self**k = identity (lcm of cycle lengths)."""
        return math.lcm(*(len(c) for c in self.cycles()), 1)

    def support(self) -> frozenset[int]:
        """The set of moved points."""
        return frozenset(i for i, j in enumerate(self.images) if i != j)

    def parity(self) -> int:
        """0 for even permutations, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    def cycles(self) -> list[tuple[int, ...]]:
        """Canonical cycle decomposition.

        Cycles of length >= 2 only, each rotated to start at its smallest
        point, sorted by that point.
        """
        seen = [False] * len(self.images)
        out: list[tuple[int, ...]] = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def embed(self, degree: int) -> Perm:
        """The same permutation on a larger point set, fixing the new points."""
        if degree < len(self.images):
            raise ValueError("cannot shrink a permutation")
        return Perm._raw(self.images + tuple(range(len(self.images), degree)))

    def relabel(self, sigma: Perm) -> Perm:
        """Conjugate by sigma: the action after renaming each point x to sigma[x]."""
        return sigma.inverse() * self * sigma

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        body = "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())
        return f"Perm[{self.degree}: {body or '()'}]"


@dataclass(frozen=True)
class CycleForm:
    """A cycle-notation value: disjoint cycles of length >= 2 on {0..degree-1}."""

    cycles: tuple[tuple[int, ...], ...]
    degree: int

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for cycle in self.cycles:
            if len(cycle) < 2:
                raise ValueError(f"cycle {cycle!r} is shorter than 2")
            for a in cycle:
                if not 0 <= a < self.degree:
                    raise ValueError(f"point {a} out of range for degree {self.degree}")
                if a in seen:
                    raise ValueError(f"point {a} appears twice")
                seen.add(a)

    def to_perm(self) -> Perm:
        return Perm.from_cycles(self.cycles, self.degree)

    @classmethod
    def of(cls, p: Perm) -> CycleForm:
        return cls(tuple(p.cycles()), p.degree)


def random_elements(gens: list[Perm], count: int, seed: int) -> list[Perm]:
    """Deterministic pseudo-random words in the generators, for spot checks."""
    import random

    rng = random.Random(seed)
    out = []
    for _ in range(count):
        w = Perm.identity(gens[0].degree)
        for _ in range(rng.randrange(2, 12)):
            g = rng.choice(gens)
            if rng.randrange(2):
                g = g.inverse()
            w = w * g
        out.append(w)
    return out
