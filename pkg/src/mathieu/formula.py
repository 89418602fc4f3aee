"""Compile index-formula substitutions into explicit permutations.

Supported shapes: affine maps a*z+b, fractional linear (Mobius) maps
(a*z+b)/(c*z+d) on the projective line, their semilinear twists by a
Frobenius power, sparse polynomial maps, and literal cycle notation.
Points are numbered by field index with the projective point last, so a
formula over GF(q) compiles to a permutation on q or q+1 points.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .gf import INF, FieldElement, FieldSpec, Infinity, ProjectivePoint, gf, point_index
from .perm import CycleForm, Perm


@dataclass(frozen=True)
class Affine:
    """z -> a*z + b, optionally extended by a fixed projective point."""

    a: FieldElement
    b: FieldElement
    with_infinity: bool = False

    def __post_init__(self) -> None:
        if self.a.is_zero():
            raise ValueError("affine coefficient a must be nonzero")

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    def apply(self, z: ProjectivePoint) -> ProjectivePoint:
        if isinstance(z, Infinity):
            return INF
        return self.a * z + self.b


@dataclass(frozen=True)
class Mobius:
    """z -> (a*z + b) / (c*z + d) on the projective line; needs ad - bc != 0."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement
    with_infinity: bool = dc_field(default=True, init=False)

    def __post_init__(self) -> None:
        if (self.a * self.d - self.b * self.c).is_zero():
            raise ValueError("determinant ad-bc must be nonzero")

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    def determinant(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def apply(self, z: ProjectivePoint) -> ProjectivePoint:
        if isinstance(z, Infinity):
            if self.c.is_zero():
                return INF
            return self.a / self.c
        den = self.c * z + self.d
        if den.is_zero():
            return INF
        return (self.a * z + self.b) / den


@dataclass(frozen=True)
class Semilinear:
    """z -> (a*z^(p^k) + b) / (c*z^(p^k) + d): a Mobius map after Frobenius."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement
    frob: int
    with_infinity: bool = dc_field(default=True, init=False)

    def __post_init__(self) -> None:
        if (self.a * self.d - self.b * self.c).is_zero():
            raise ValueError("determinant ad-bc must be nonzero")

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    def apply(self, z: ProjectivePoint) -> ProjectivePoint:
        if isinstance(z, Infinity):
            w: ProjectivePoint = INF
        else:
            w = z.frobenius(self.frob)
        return Mobius(self.a, self.b, self.c, self.d).apply(w)


@dataclass(frozen=True)
class PolynomialMap:
    """z -> sum of c*z^e terms; compiled only if the map is a bijection."""

    terms: tuple[tuple[FieldElement, int], ...]
    with_infinity: bool = dc_field(default=False, init=False)

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("polynomial needs at least one term")
        exps = [e for _, e in self.terms]
        if len(set(exps)) != len(exps):
            raise ValueError("exponents must be distinct")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        if len({c.field for c, _ in self.terms}) != 1:
            raise ValueError("coefficients must share one field")

    @property
    def field(self) -> FieldSpec:
        return self.terms[0][0].field

    def apply(self, z: ProjectivePoint) -> ProjectivePoint:
        if isinstance(z, Infinity):
            raise ValueError("polynomial maps act on field points only")
        acc = self.field.zero
        for c, e in self.terms:
            acc = acc + c * z**e
        return acc


@dataclass(frozen=True)
class CycleLiteral:
    """Literal cycle notation on a fixed number of points."""

    form: CycleForm


SubstitutionFormula = Affine | Mobius | Semilinear | PolynomialMap | CycleLiteral


def compile_formula(formula: SubstitutionFormula) -> Perm:
    """Evaluate a formula over its whole domain and return the permutation.

    Polynomial maps are verified bijective by the evaluation itself (the
    Perm constructor rejects non-bijections).
    """
    if isinstance(formula, CycleLiteral):
        return formula.form.to_perm()
    spec = formula.field
    points: list[ProjectivePoint] = list(spec.elements())
    if formula.with_infinity:
        points.append(INF)
    images = [point_index(spec, formula.apply(z)) for z in points]
    try:
        return Perm(images)
    except ValueError as exc:
        raise ValueError(f"formula does not permute its domain: {exc}") from exc


def formula_degree(formula: SubstitutionFormula) -> int:
    if isinstance(formula, CycleLiteral):
        return formula.form.degree
    return formula.field.order + (1 if formula.with_infinity else 0)


def d_form(p: int, g: int, beta: int, m: int) -> PolynomialMap:
    """The closed-form substitution fixing 0, 1 and the non-residue g**beta.

    For a primitive root g mod p, odd beta and a multiplier m coprime to
    q = (p-1)/2, the map is z -> A*z^((p-1)/2 + m) + B*z^m with
    A = (1 - g^(beta*(1-m)))/2 and B = (1 + g^(beta*(1-m)))/2.  It sends
    residues a to a^m and non-residues g^(beta+2t) to g^(beta+2mt).
    """
    spec = gf(p)
    q = (p - 1) // 2
    ge = spec.element(g)
    if ge.is_zero() or ge.multiplicative_order() != p - 1:
        raise ValueError(f"{g} is not a primitive root mod {p}")
    if beta % 2 == 0:
        raise ValueError("beta must be odd")
    m = m % q
    if m == 0 or gcd(m, q) != 1:
        raise ValueError(f"multiplier must be coprime to {q}")
    swing = ge ** ((beta * (1 - m)) % (p - 1))
    half = spec.element(2).inverse()
    a = (spec.one - swing) * half
    b = (spec.one + swing) * half
    terms = [(a, q + m), (b, m)]
    # A + B = 1, so at least one coefficient survives
    return PolynomialMap(tuple((c, e) for c, e in terms if not c.is_zero()))


def gamma_relabel(assignment: dict[int, ProjectivePoint], perm: Perm) -> Perm:
    """Transport a permutation along a point -> projective-point renaming.

    ``assignment`` must cover a subset of the permutation's points
    bijectively onto GF(q) plus the projective point; every point outside
    the assignment must be fixed by ``perm``.  The result acts on the
    q+1 field-indexed points.
    """
    specs = {v.field for v in assignment.values() if isinstance(v, FieldElement)}
    if len(specs) != 1:
        raise ValueError("assignment values must share one field")
    spec = specs.pop()
    targets = {point_index(spec, v) for v in assignment.values()}
    if len(targets) != len(assignment) or targets != set(range(spec.order + 1)):
        raise ValueError("assignment must be a bijection onto the projective line")
    for x in range(perm.degree):
        if x not in assignment and perm[x] != x:
            raise ValueError(f"permutation moves unassigned point {x}")
    images = list(range(spec.order + 1))
    for x, v in assignment.items():
        y = perm[x]
        if y not in assignment:
            raise ValueError(f"image point {y} is not assigned")
        images[point_index(spec, v)] = point_index(spec, assignment[y])
    return Perm(images)
