"""Text forms: cycle strings, formula strings, generator files and reports.

Cycle strings look like ``(1,2,4)(3,6,5)``; tokens may carry an ``x_``
prefix and ``inf`` names the last point of the degree.  Formula strings
follow one of five shapes::

    affine <a> <b> @ GF(p)[+inf]
    mobius <a> <b> <c> <d> @ GF(p[^v])+inf
    semilinear <a> <b> <c> <d> <k> @ GF(p^v)+inf
    poly <c>*z^<e> [+|- <c>*z^<e> ...] @ GF(p)
    cycles <cycle string> deg <n>

Extension-field coefficients are written in the basis of w, for example
``2+2*w``.  All counts serialize as decimal strings, never floats.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from . import __version__
from .engine import PermutationGroup
from .formula import (
    Affine,
    CycleLiteral,
    Mobius,
    PolynomialMap,
    Semilinear,
    SubstitutionFormula,
    compile_formula,
    formula_degree,
)
from .gf import FieldElement, FieldSpec, gf
from .perm import CycleForm, Perm

_CYCLE_TOKEN = re.compile(r"(?:x_)?(\d+|inf)$")
_FIELD = re.compile(r"GF\((\d+)(?:\^(\d+))?\)(\+inf)?$")
_ELEMENT_TERM = re.compile(r"(\d+)$|(\d*)\*?w(?:\^(\d+))?$")
_POLY_TERM = re.compile(r"(-?\d*)\*?z(?:\^(\d+))?$")


class NotationError(ValueError):
    """Malformed cycle, formula or generator-file text."""


# -- cycle strings ---------------------------------------------------------


def parse_cycles(text: str, degree: int) -> CycleForm:
    """Parse ``(a,b,c)(d,e)`` into a CycleForm on the given degree."""
    stripped = re.sub(r"\s", "", text)
    body = re.findall(r"\(([^()]*)\)", stripped)
    if not body or "".join(f"({b})" for b in body) != stripped:
        raise NotationError(f"malformed cycle string: {text!r}")
    cycles = []
    for part in body:
        if not part:
            raise NotationError("empty cycle")
        points = []
        for token in part.split(","):
            m = _CYCLE_TOKEN.match(token)
            if not m:
                raise NotationError(f"bad point token {token!r}")
            value = degree - 1 if m.group(1) == "inf" else int(m.group(1))
            if value >= degree:
                raise NotationError(f"point {value} out of range for degree {degree}")
            points.append(value)
        cycles.append(tuple(points))
    try:
        return CycleForm(tuple(cycles), degree)
    except ValueError as exc:
        raise NotationError(str(exc)) from exc


def format_cycles(p: Perm | CycleForm, infinity: bool = False) -> str:
    """Canonical cycle string; with ``infinity`` the last point prints as inf."""
    if isinstance(p, CycleForm):
        p = p.to_perm()
    top = p.degree - 1

    def name(x: int) -> str:
        return "inf" if infinity and x == top else str(x)

    body = "".join("(" + ",".join(name(x) for x in c) + ")" for c in p.cycles())
    return body or "()"


# -- field and element tokens ---------------------------------------------


def parse_field(text: str) -> tuple[FieldSpec, bool]:
    """Parse ``GF(p)``, ``GF(p^v)`` with optional ``+inf`` suffix."""
    m = _FIELD.match(text.strip())
    if not m:
        raise NotationError(f"bad field spec {text!r}")
    p, nu = int(m.group(1)), int(m.group(2) or 1)
    try:
        spec = gf(p, nu)
    except ValueError as exc:
        raise NotationError(str(exc)) from exc
    return spec, m.group(3) is not None


def format_field(spec: FieldSpec, with_infinity: bool = False) -> str:
    return spec.label() + ("+inf" if with_infinity else "")


def parse_element(spec: FieldSpec, token: str) -> FieldElement:
    """An element literal: an integer mod p, or a w-polynomial like 2+2*w."""
    token = token.strip()
    if spec.nu == 1:
        try:
            return spec.element(int(token))
        except ValueError as exc:
            raise NotationError(f"bad element {token!r} for {spec.label()}") from exc
    coeffs = [0] * spec.nu
    for term in token.split("+"):
        m = _ELEMENT_TERM.match(term)
        if not m:
            raise NotationError(f"bad element term {term!r} for {spec.label()}")
        if m.group(1) is not None:
            coeffs[0] = (coeffs[0] + int(m.group(1))) % spec.p
        else:
            c = int(m.group(2)) if m.group(2) else 1
            e = int(m.group(3)) if m.group(3) else 1
            if e >= spec.nu:
                raise NotationError(f"w^{e} is not reduced in {spec.label()}")
            coeffs[e] = (coeffs[e] + c) % spec.p
    return spec.element(coeffs)


def format_element(e: FieldElement) -> str:
    return str(e)


# -- formulas --------------------------------------------------------------


def parse_formula(text: str) -> SubstitutionFormula:
    """Parse one of the five formula shapes into a SubstitutionFormula."""
    text = text.strip()
    head, _, rest = text.partition(" ")
    if head == "cycles":
        m = re.match(r"(.*)\bdeg\s+(\d+)$", rest.strip())
        if not m:
            raise NotationError(f"cycles formula needs a trailing degree: {text!r}")
        return CycleLiteral(parse_cycles(m.group(1), int(m.group(2))))
    if "@" not in rest:
        raise NotationError(f"formula needs '@ <field>': {text!r}")
    args_part, _, field_part = rest.rpartition("@")
    spec, with_inf = parse_field(field_part)
    try:
        if head == "affine":
            a, b = _element_args(spec, args_part, 2)
            return Affine(a, b, with_infinity=with_inf)
        if head == "mobius":
            if not with_inf:
                raise NotationError("mobius formulas act on the projective line; use +inf")
            a, b, c, d = _element_args(spec, args_part, 4)
            return Mobius(a, b, c, d)
        if head == "semilinear":
            toks = args_part.split()
            if len(toks) != 5:
                raise NotationError("semilinear takes four coefficients and a power")
            if not with_inf:
                raise NotationError("semilinear formulas act on the projective line; use +inf")
            a, b, c, d = (parse_element(spec, t) for t in toks[:4])
            return Semilinear(a, b, c, d, int(toks[4]))
        if head == "poly":
            if with_inf or spec.nu != 1:
                raise NotationError("poly formulas act on a prime field without inf")
            return PolynomialMap(_poly_terms(spec, args_part))
    except ValueError as exc:
        raise NotationError(str(exc)) from exc
    raise NotationError(f"unknown formula kind {head!r}")


def _element_args(spec: FieldSpec, text: str, count: int) -> list[FieldElement]:
    toks = text.split()
    if len(toks) != count:
        raise NotationError(f"expected {count} coefficients, got {len(toks)}")
    return [parse_element(spec, t) for t in toks]


def _poly_terms(spec: FieldSpec, text: str) -> tuple[tuple[FieldElement, int], ...]:
    flat = text.replace("-", "+-").replace(" ", "")
    terms = []
    for part in flat.split("+"):
        if not part:
            continue
        m = _POLY_TERM.match(part)
        if not m:
            raise NotationError(f"bad polynomial term {part!r}")
        c = m.group(1) or ""
        if c in ("", "-"):
            c += "1"
        coeff = spec.element(int(c))
        exp = int(m.group(2)) if m.group(2) else 1
        terms.append((coeff, exp))
    if not terms:
        raise NotationError("polynomial needs at least one term")
    return tuple(terms)


def format_formula(f: SubstitutionFormula) -> str:
    """Canonical text for a formula; parse(format(f)) reproduces f."""
    if isinstance(f, CycleLiteral):
        return f"cycles {format_cycles(f.form)} deg {f.form.degree}"
    if isinstance(f, Affine):
        field = format_field(f.field, f.with_infinity)
        return f"affine {f.a} {f.b} @ {field}"
    if isinstance(f, Mobius):
        return f"mobius {f.a} {f.b} {f.c} {f.d} @ {format_field(f.field, True)}"
    if isinstance(f, Semilinear):
        return f"semilinear {f.a} {f.b} {f.c} {f.d} {f.frob} @ {format_field(f.field, True)}"
    if isinstance(f, PolynomialMap):
        ordered = sorted(f.terms, key=lambda t: -t[1])
        body = " + ".join(f"{c}*z^{e}" for c, e in ordered)
        return f"poly {body} @ {format_field(f.field)}"
    raise TypeError(f"not a formula: {f!r}")


# -- generator files -------------------------------------------------------


@dataclass(frozen=True)
class GeneratorFile:
    """A labeled generator list: ``degree N`` then ``label: <cycles|formula>``."""

    degree: int
    entries: tuple[tuple[str, Perm], ...]

    def group(self, label: str = "") -> PermutationGroup:
        return PermutationGroup([p for _, p in self.entries], label)


def parse_generator_file(text: str) -> GeneratorFile:
    degree: int | None = None
    entries: list[tuple[str, Perm]] = []
    labels: set[str] = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            m = re.match(r"degree\s+(\d+)$", line)
            if not m:
                raise NotationError("generator file must start with 'degree N'")
            degree = int(m.group(1))
            if degree < 1:
                raise NotationError("degree must be at least 1")
            continue
        label, sep, value = line.partition(":")
        label, value = label.strip(), value.strip()
        if not sep or not label or not value:
            raise NotationError(f"expected 'label: <cycles|formula>': {raw!r}")
        if label in labels:
            raise NotationError(f"duplicate label {label!r}")
        labels.add(label)
        if value.startswith("("):
            perm = parse_cycles(value, degree).to_perm()
        else:
            formula = parse_formula(value)
            if formula_degree(formula) > degree:
                raise NotationError(
                    f"{label!r} acts on {formula_degree(formula)} points, file degree is {degree}"
                )
            perm = compile_formula(formula).embed(degree)
        entries.append((label, perm))
    if degree is None:
        raise NotationError("generator file must start with 'degree N'")
    if not entries:
        raise NotationError("generator file lists no generators")
    return GeneratorFile(degree, tuple(entries))


# -- classification reports ------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    """Deterministic record of one classification case."""

    case: str
    rows: tuple[dict, ...]

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "engine": {"name": "mathieu", "version": __version__},
            "rows": list(self.rows),
        }

    def to_text(self) -> str:
        lines = [f"case {self.case} (engine mathieu {__version__})"]
        header = ("j", "u", "order", "transitivity", "values", "verdict", "conjugate_of")
        table = [header] + [
            tuple(str(r[k] if r[k] is not None else "-") for k in
                  ("alignment", "exponent", "order", "transitivity", "values", "verdict", "conjugate_of"))
            for r in self.rows
        ]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        for row in table:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"


def classification_report(p: int, verdicts) -> ClassificationReport:
    rows = tuple(
        {
            "alignment": v.j,
            "exponent": v.u,
            "candidate": format_cycles(v.candidate),
            "order": str(v.order),
            "transitivity": v.transitivity,
            "values": str(v.values),
            "verdict": v.verdict,
            "conjugate_of": v.conjugate_of,
        }
        for v in sorted(verdicts, key=lambda v: (v.u, v.j))
    )
    return ClassificationReport(case=f"p={p}", rows=rows)


def emit_report(report: ClassificationReport, fmt: str = "text") -> str:
    """Render a report as a human table or as stable JSON."""
    if fmt == "text":
        return report.to_text()
    if fmt == "structured":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
