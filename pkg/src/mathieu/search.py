"""The classification pipeline for multiply transitive groups of prime degree.

For a prime p with q = (p-1)/2 also prime, every transitive group worth
examining contains the full cycle z -> z+1 and the double-cycle z -> g*g*z
(g a primitive root mod p).  Aligning the abstract two-cycle pattern with
the concrete one can be done in q ways; each alignment j and each proper
divisor u of q-1 yields one candidate companion substitution acting as
index multiplication on both cycles.  Classifying the groups generated by
the full cycle and each candidate singles out the groups of interest on
7, 11 and 23 points, and adjoining z -> -1/z extends each to one more
point.  Constructors for every named group in that story live here too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import PermutationGroup
from .formula import Affine, Mobius, Semilinear, compile_formula, d_form
from .gf import INF, ProjectivePoint, gf
from .perm import Perm


@dataclass(frozen=True)
class Identification:
    """One way to align the abstract second cycle with the concrete one.

    The first cycle is always matched as x'_i = x_(g^(2i)); alignment j
    matches x''_i = x_(g^(2(i+j)+1)).  There are exactly q alignments.
    """

    p: int
    g: int
    j: int
    primed: tuple[int, ...]
    double_primed: tuple[int, ...]

    @property
    def q(self) -> int:
        return (self.p - 1) // 2


@dataclass(frozen=True)
class CandidateVerdict:
    """Classification outcome for one (alignment, exponent) candidate."""

    p: int
    j: int
    u: int
    candidate: Perm
    order: int
    transitivity: int
    values: int
    verdict: str
    conjugate_of: int | None


def _check_prime_pair(p: int) -> int:
    from .gf import is_prime

    q = (p - 1) // 2
    if not is_prime(p) or not is_prime(q):
        raise ValueError(f"need p and (p-1)/2 prime, got p={p}")
    return q


def build_ab(p: int) -> tuple[Perm, Perm]:
    """The full cycle z -> z+1 and the two-cycle substitution z -> g^2*z."""
    _check_prime_pair(p)
    field = gf(p)
    g = field.primitive_root()
    shift = Perm([(z + 1) % p for z in range(p)])
    double = compile_formula(Affine(g * g, field.zero))
    return shift, double


def enumerate_identifications(p: int) -> list[Identification]:
    """All q alignments of the second cycle, j = 0 first."""
    q = _check_prime_pair(p)
    field = gf(p)
    g = int(field.primitive_root())
    primed = tuple(pow(g, 2 * i, p) for i in range(q))
    out = []
    for j in range(q):
        double_primed = tuple(pow(g, 2 * (i + j) + 1, p) for i in range(q))
        out.append(Identification(p, g, j, primed, double_primed))
    return out


def admissible_exponents(p: int, exhaustive: bool = False) -> list[int]:
    """Divisors u of q-1 with u < q-1; ``exhaustive`` adds q-1 itself."""
    q = _check_prime_pair(p)
    us = [u for u in range(1, q - 1) if (q - 1) % u == 0]
    if exhaustive:
        us.append(q - 1)
    return us


def candidate_d(ident: Identification, u: int) -> Perm:
    """The companion substitution z -> y^u * z on both cycles' indices."""
    q = ident.q
    if u < 1 or u > q - 1 or (q - 1) % u != 0:
        raise ValueError(f"exponent {u} must divide {q - 1} and lie in 1..{q - 1}")
    y = int(gf(q).primitive_root())
    m = pow(y, u, q)
    images = list(range(ident.p))
    for table in (ident.primed, ident.double_primed):
        for z in range(q):
            images[table[z]] = table[(m * z) % q]
    return Perm(images)


def _affine_relabelings(p: int):
    for a in range(1, p):
        for b in range(p):
            yield Perm([(a * z + b) % p for z in range(p)])


def _conjugate_index(
    group: PermutationGroup, earlier: list[tuple[int, PermutationGroup]]
) -> int | None:
    """Smallest earlier alignment whose group is an affine relabeling of this one."""
    p = group.degree
    for j_prev, prev in earlier:
        if prev.order() != group.order():
            continue
        prev_chain = prev.chain()
        for sigma in _affine_relabelings(p):
            if all(prev_chain.contains(g.relabel(sigma)) for g in group.generators):
                return j_prev
    return None


def classify(p: int, exhaustive: bool = False) -> list[CandidateVerdict]:
    """Classify every (alignment, exponent) candidate group for p in {7, 11, 23}."""
    if p not in (7, 11, 23):
        raise ValueError(f"classification is defined for p in {{7, 11, 23}}, not {p}")
    shift, _ = build_ab(p)
    idents = enumerate_identifications(p)
    out: list[CandidateVerdict] = []
    for u in admissible_exponents(p, exhaustive):
        proper_so_far: list[tuple[int, PermutationGroup]] = []
        for ident in idents:
            cand = candidate_d(ident, u)
            group = PermutationGroup([shift, cand])
            transitivity = group.transitivity_degree()
            verdict = group.verdict()
            conj = None
            if verdict == "proper":
                conj = _conjugate_index(group, proper_so_far)
                proper_so_far.append((ident.j, group))
            out.append(
                CandidateVerdict(
                    p=p,
                    j=ident.j,
                    u=u,
                    candidate=cand,
                    order=group.order(),
                    transitivity=transitivity,
                    values=group.value_count(),
                    verdict=verdict,
                    conjugate_of=conj,
                )
            )
    return out


def inversion(p: int) -> Perm:
    """z -> -1/z on the projective line over GF(p), as a p+1 point permutation."""
    field = gf(p)
    return compile_formula(Mobius(field.zero, -field.one, field.one, field.zero))


def extend_inversion(group: PermutationGroup, label: str = "") -> PermutationGroup:
    """Adjoin the new point and z -> -1/z to a group of prime degree p."""
    p = group.degree
    gens = [g.embed(p + 1) for g in group.generators]
    gens.append(inversion(p))
    return PermutationGroup(gens, label or f"{group.label}+inf")


# -- named constructions -------------------------------------------------


def g168_7() -> PermutationGroup:
    """The 2-transitive group of order 168 on 7 points."""
    shift, _ = build_ab(7)
    cand = candidate_d(enumerate_identifications(7)[0], 1)
    return PermutationGroup([shift, cand], "G168_7")


def agl_8() -> PermutationGroup:
    """The 3-transitive extension on 8 points, order 1344."""
    return extend_inversion(g168_7(), "AGL_8")


def psl2_11() -> PermutationGroup:
    """The 2-transitive group of order 660 on 11 points."""
    shift, _ = build_ab(11)
    cand = candidate_d(enumerate_identifications(11)[1], 2)
    return PermutationGroup([shift, cand], "PSL2_11")


def m11_on_11() -> PermutationGroup:
    """M11 in its 4-transitive action on 11 points, order 7920."""
    shift, _ = build_ab(11)
    cand = candidate_d(enumerate_identifications(11)[1], 1)
    return PermutationGroup([shift, cand], "M11_11")


def m11_on_12() -> PermutationGroup:
    """M11 in its 3-transitive action on 12 points, order 7920.

    The 660-point-stabilizer copy sits over Kronecker's group: the first
    11 points carry exactly the generators of psl2_11().  No fractional
    linear map extends that group to order 7920 (adjoining z -> -1/z
    lands in the full 5-transitive group instead; an exhaustive sweep of
    square-determinant maps confirms there is no smaller choice), so the
    third generator is located by a deterministic scan inside M12.
    """
    e, h = (g.embed(12) for g in psl2_11().generators)
    for tau in m12().chain().elements():
        if tau[11] == 11:
            continue
        group = PermutationGroup([e, h, tau], "M11_12")
        if group.order() == 7920:
            return group
    raise AssertionError("no 12-point extension of the 660 group found")


def m12() -> PermutationGroup:
    """M12, 5-transitive on 12 points, order 95040."""
    return extend_inversion(m11_on_11(), "M12")


def m23() -> PermutationGroup:
    """M23, 4-transitive on 23 points, order 10200960."""
    shift, _ = build_ab(23)
    cand = candidate_d(enumerate_identifications(23)[0], 2)
    return PermutationGroup([shift, cand], "M23")


def m24() -> PermutationGroup:
    """M24, 5-transitive on 24 points, order 244823040."""
    return extend_inversion(m23(), "M24")


def m10_relabeling() -> dict[int, ProjectivePoint]:
    """The renaming of points 1..10 by GF(9) labels that linearizes L, R, S."""
    field = gf(3, 2)
    w = field.gen
    one, two = field.one, field.element(2)
    return {
        2: w,
        3: one + w,
        4: two + two * w,
        5: one + two * w,
        6: two,
        7: one,
        9: two + w,
        10: two * w,
        8: field.zero,
        1: INF,
    }


def m10_formulas() -> tuple[Mobius, Affine, Semilinear]:
    """The three GF(9) substitutions generating the 3-transitive group of order 720."""
    field = gf(3, 2)
    w = field.gen
    one, two = field.one, field.element(2)
    frac = Mobius(one, two * w, one + w, one)
    step = Affine(one, two + w, with_infinity=True)
    twist = Semilinear(w, field.zero, field.zero, one, 1)
    return frac, step, twist


def m10_gf9() -> PermutationGroup:
    """The group generated by the three GF(9) substitutions, on 10 points."""
    gens = [compile_formula(f) for f in m10_formulas()]
    return PermutationGroup(gens, "M10_GF9")


def m10_lrs() -> tuple[Perm, Perm, Perm]:
    """The same three generators in the original 11-point labeling (fixing 0)."""
    _, double = build_ab(11)
    r = Perm.from_cycles([(2, 4, 7), (3, 10, 6), (5, 8, 9)], 11)
    s = candidate_d(enumerate_identifications(11)[1], 1)
    return double, r, s


def pgammal_17(tau: int) -> PermutationGroup:
    """The 3-transitive groups on 17 points over GF(16), order 16320/tau.

    tau must divide 4; the generators are the fractional-linear maps
    z -> z+1, z -> g*z, z -> 1/z plus the Frobenius power z -> z^(2^tau)
    (which is the identity for tau = 4).
    """
    if tau not in (1, 2, 4):
        raise ValueError("tau must be one of 1, 2, 4")
    field = gf(2, 4)
    one, zero = field.one, field.zero
    g = field.primitive_root()
    gens = [
        compile_formula(Affine(one, one, with_infinity=True)),
        compile_formula(Affine(g, zero, with_infinity=True)),
        compile_formula(Mobius(zero, one, one, zero)),
    ]
    if tau != 4:
        gens.append(compile_formula(Semilinear(one, zero, zero, one, tau)))
    return PermutationGroup(gens, f"PGammaL_17(tau={tau})")


# -- the two worked rejection arguments -----------------------------------


def rejection_demo_11() -> dict:
    """Rerun the small-support rejection of the first 11-point alignment.

    The product (alignment-0 candidate, then the full cycle twice) has a
    sixth power moving only four points; four is below the (p+1)/2 = 6
    floor for proper transitive groups of prime degree, and indeed the
    generated group collapses.
    """
    shift, _ = build_ab(11)
    first = candidate_d(enumerate_identifications(11)[0], 2)
    product = first * shift * shift
    small = product**6
    group = PermutationGroup([shift, first])
    return {
        "product_images": list(product.images),
        "sixth_power": small,
        "support_size": len(small.support()),
        "floor": (11 + 1) // 2,
        "member": group.contains(small),
        "verdict": group.verdict(),
    }


def uniqueness_checks() -> dict:
    """Check that adjoining the odd full-length scaling collapses the groups.

    On 11 points the scaling z -> 2z (whose square is the two-cycle
    substitution) forces the symmetric or alternating group, and the same
    happens for z -> 5z on 23 points.  Adjoining z -> 2z on 23 points is
    a control: that map is already a member, so nothing changes.
    """
    field11, field23 = gf(11), gf(23)
    e, h = psl2_11().generators
    scale11 = compile_formula(Affine(field11.element(2), field11.zero))
    a, u = m23().generators
    scale23 = compile_formula(Affine(field23.element(5), field23.zero))
    control = compile_formula(Affine(field23.element(2), field23.zero))
    with_scale_11 = PermutationGroup([e, h, scale11])
    with_scale_23 = PermutationGroup([a, u, scale23])
    with_member_23 = PermutationGroup([a, u, control])
    return {
        "verdict_11": with_scale_11.verdict(),
        "verdict_23": with_scale_23.verdict(),
        "control_verdict": with_member_23.verdict(),
        "control_same_group": with_member_23.same_group(m23()),
    }
