"""Arithmetic in the small finite fields GF(p) and GF(p^v).

Elements are residue-class polynomials in a root w of an explicit
irreducible modulus, stored as constant-first coefficient tuples.  All
fields used here have at most 23 elements, so irreducibility checks,
primitive-root searches and residue classification are done exhaustively.

Every element has a stable integer index (the coefficient tuple read as a
little-endian base-p number); enumeration order is by that index, which
for prime fields is just 0, 1, ..., p-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class Infinity:
    """The extra projective point; deliberately not a field element."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"


INF = Infinity()

# moduli used when a caller names only p and v; w**2+2w+2 over GF(3) and
# x**4+x+1 over GF(2) pin the element labelling for GF(9) and GF(16)
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (3, 2): (2, 2, 1),
    (2, 4): (1, 1, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """GF(p**nu) with an explicit monic irreducible modulus (trivial for nu=1)."""

    p: int
    nu: int = 1
    modulus: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.nu < 1:
            raise ValueError("extension degree must be >= 1")
        if self.nu == 1:
            if self.modulus:
                raise ValueError("prime fields take no modulus")
            return
        mod = self.modulus
        if len(mod) != self.nu + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree nu, constant first")
        if any(not 0 <= c < self.p for c in mod):
            raise ValueError("modulus coefficients must be reduced mod p")
        if not _poly_irreducible(mod, self.p):
            raise ValueError(f"modulus {mod} is reducible over GF({self.p})")

    @property
    def order(self) -> int:
        return self.p**self.nu

    def element(self, value) -> FieldElement:
        """Coerce an integer (index for extensions, residue for primes) or coeff seq."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.nu == 1:
                return FieldElement((value % self.p,), self)
            if not 0 <= value < self.order:
                raise ValueError(f"index {value} out of range")
            coeffs = []
            for _ in range(self.nu):
                coeffs.append(value % self.p)
                value //= self.p
            return FieldElement(tuple(coeffs), self)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.nu:
            raise ValueError(f"expected {self.nu} coefficients")
        return FieldElement(coeffs, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.nu, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement((1,) + (0,) * (self.nu - 1), self)

    @property
    def gen(self) -> FieldElement:
        """The residue class of w (the modulus root); for nu=1 this is 1."""
        if self.nu == 1:
            return self.one
        return FieldElement((0, 1) + (0,) * (self.nu - 2), self)

    def elements(self) -> list[FieldElement]:
        """All q elements, in index order."""
        return [self.element(i) for i in range(self.order)]

    def primitive_root(self) -> FieldElement:
        """The least element (in index order) of multiplicative order q-1."""
        target = self.order - 1
        for a in self.elements():
            if not a.is_zero() and a.multiplicative_order() == target:
                return a
        raise AssertionError("no primitive element found")

    def label(self) -> str:
        return f"GF({self.p})" if self.nu == 1 else f"GF({self.p}^{self.nu})"

    def __repr__(self) -> str:
        return f"FieldSpec({self.label()})"


@lru_cache(maxsize=None)
def gf(p: int, nu: int = 1, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    """Shared FieldSpec constructor; fills in the package default modulus."""
    if nu == 1:
        return FieldSpec(p, 1, ())
    if modulus is None:
        try:
            modulus = DEFAULT_MODULI[(p, nu)]
        except KeyError:
            raise ValueError(f"no default modulus for GF({p}^{nu}); pass one") from None
    return FieldSpec(p, nu, tuple(modulus))


@dataclass(frozen=True)
class FieldElement:
    """A residue-class polynomial c0 + c1*w + ... over GF(p)."""

    coeffs: tuple[int, ...]
    field: FieldSpec

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.field.nu:
            raise ValueError("coefficient count does not match extension degree")
        if any(not 0 <= c < self.field.p for c in self.coeffs):
            raise ValueError("coefficients must be reduced mod p")

    @property
    def index(self) -> int:
        """Little-endian base-p value of the coefficient tuple."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: FieldElement) -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return FieldElement(tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)), self.field)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return FieldElement(tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)), self.field)

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(tuple((-a) % p for a in self.coeffs), self.field)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        spec = self.field
        if spec.nu == 1:
            return FieldElement(((self.coeffs[0] * other.coeffs[0]) % spec.p,), spec)
        prod = _poly_mul(self.coeffs, other.coeffs, spec.p)
        return FieldElement(_poly_mod(prod, spec.modulus, spec.p), spec)

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("0 has no inverse")
        return self ** (self.field.order - 2)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        square = self
        while k:
            if k & 1:
                result = result * square
            square = square * square
            k >>= 1
        return result

    def frobenius(self, k: int = 1) -> FieldElement:
        """The p**k power map (an automorphism fixing the prime subfield)."""
        return self ** (self.field.p ** (k % self.field.nu))

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ValueError("0 has no multiplicative order")
        k, a = 1, self
        while a != self.field.one:
            a = a * self
            k += 1
        return k

    def is_quadratic_residue(self) -> bool:
        """True iff the element is an even power of a primitive element.

        In characteristic 2 squaring is bijective, so every nonzero element
        counts as a residue.
        """
        if self.is_zero():
            raise ValueError("0 is neither residue nor non-residue")
        q = self.field.order
        if self.field.p == 2:
            return True
        return self ** ((q - 1) // 2) == self.field.one

    def __int__(self) -> int:
        if self.field.nu != 1:
            raise TypeError("only prime-field elements convert to int")
        return self.coeffs[0]

    def __str__(self) -> str:
        if self.field.nu == 1:
            return str(self.coeffs[0])
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                w = "w" if e == 1 else f"w^{e}"
                terms.append(w if c == 1 else f"{c}*{w}")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"<{self} in {self.field.label()}>"


ProjectivePoint = FieldElement | Infinity


def point_index(spec: FieldSpec, point: ProjectivePoint) -> int:
    """Point numbering on the projective line: field elements by index, inf last."""
    if isinstance(point, Infinity):
        return spec.order
    return point.index


def point_from_index(spec: FieldSpec, i: int, with_infinity: bool) -> ProjectivePoint:
    if with_infinity and i == spec.order:
        return INF
    return spec.element(i)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    a = list(a)
    deg = len(mod) - 1
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i]
        if c == 0:
            continue
        for j in range(deg + 1):
            a[i - deg + j] = (a[i - deg + j] - c * mod[j]) % p
    out = a[:deg]
    out += [0] * (deg - len(out))
    return tuple(out)


def _poly_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by lower-degree monic polynomials."""
    deg = len(mod) - 1
    for d in range(1, deg // 2 + 1):
        for idx in range(p**d):
            divisor = []
            v = idx
            for _ in range(d):
                divisor.append(v % p)
                v //= p
            divisor.append(1)
            if _poly_divides(tuple(divisor), mod, p):
                return False
    return True


def _poly_divides(d: tuple[int, ...], mod: tuple[int, ...], p: int) -> bool:
    rem = _poly_mod(list(mod), d, p)
    return all(c == 0 for c in rem)
