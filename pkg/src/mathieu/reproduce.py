"""The end-to-end verification run.

Every quantitative claim the package reproduces is keyed by a check id;
the expected values ship as data (data/corpus.json) together with the
source substitution strings.  The run recomputes each value from scratch
with the engine, compares, and reports one row per check.  Output is
byte-identical across runs of one build.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import __version__, search
from .engine import BudgetExceeded, PermutationGroup, min_support
from .formula import compile_formula, d_form, gamma_relabel
from .notation import NotationError, format_cycles, parse_cycles, parse_formula
from .perm import Perm


@dataclass(frozen=True)
class CheckRow:
    check_id: str
    expected: str
    computed: str
    match: bool
    note: str


@dataclass(frozen=True)
class ReproductionReport:
    ok: bool
    checks: tuple[CheckRow, ...]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "engine": {"name": "mathieu", "version": __version__},
            "checks": [
                {
                    "id": c.check_id,
                    "expected": c.expected,
                    "computed": c.computed,
                    "match": c.match,
                    "note": c.note,
                }
                for c in self.checks
            ],
        }

    def to_text(self) -> str:
        lines = [f"reproduction run (engine mathieu {__version__})"]
        for c in self.checks:
            if c.match:
                lines.append(f"ok    {c.check_id}: {c.computed}")
            else:
                lines.append(f"FAIL  {c.check_id}: computed {c.computed}, expected {c.expected}")
        good = sum(c.match for c in self.checks)
        lines.append(f"{good}/{len(self.checks)} checks matched")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def load_corpus() -> dict:
    with resources.files("mathieu.data").joinpath("corpus.json").open() as f:
        return json.load(f)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(_fmt(v) for v in value)
    return str(value)


class _Run:
    def __init__(self, corpus: dict) -> None:
        self.strings = {row["id"]: row for row in corpus["strings"]}
        self.expected = {row["id"]: row for row in corpus["expectations"]}
        self.results: list[tuple[str, str]] = []

    def record(self, check_id: str, value) -> None:
        self.results.append((check_id, _fmt(value)))

    def perm(self, string_id: str) -> Perm:
        """A permutation parsed from a corpus cycle string."""
        row = self.strings[string_id]
        return parse_cycles(row["text"], row["degree"]).to_perm()

    def report(self) -> ReproductionReport:
        rows = []
        seen = set()
        for check_id, computed in self.results:
            seen.add(check_id)
            exp = self.expected.get(check_id)
            if exp is None:
                rows.append(CheckRow(check_id, "<missing expectation>", computed, False, ""))
            else:
                rows.append(
                    CheckRow(check_id, exp["expected"], computed, computed == exp["expected"], exp["note"])
                )
        for row in self.expected.values():
            if row["id"] not in seen:
                rows.append(CheckRow(row["id"], row["expected"], "<not computed>", False, row["note"]))
        return ReproductionReport(ok=all(r.match for r in rows), checks=tuple(rows))


def run_reproduction(corpus: dict | None = None, budget: int = 2**24) -> ReproductionReport:
    """Recompute every check and compare against the expectation table."""
    run = _Run(corpus if corpus is not None else load_corpus())

    _classify_checks(run)
    _rejection_checks(run)
    _extension_checks(run)
    _m23_structure_checks(run, budget)
    _closed_form_checks(run)
    _containment_checks(run)
    _gf9_checks(run)
    _pgammal_checks(run)
    _uniqueness_checks(run)
    _element_checks(run)
    _string_checks(run)
    return run.report()


def _proper(verdicts, u):
    return [v for v in verdicts if v.u == u and v.verdict == "proper"]


def _classify_checks(run: _Run) -> None:
    c7 = search.classify(7)
    run.record("classify7.candidates", len(c7))
    proper = _proper(c7, 1)
    run.record("classify7.proper_alignments", [v.j for v in proper])
    run.record("classify7.order", sorted({v.order for v in proper}))
    run.record("classify7.transitivity", sorted({v.transitivity for v in proper}))
    run.record("classify7.values", sorted({v.values for v in proper}))
    run.record("classify7.conjugate", all(v.conjugate_of == proper[0].j for v in proper[1:]))
    run.record(
        "classify7.collapsed_verdict",
        sorted({v.verdict for v in c7 if v.verdict != "proper"}),
    )

    c11 = search.classify(11)
    for u in (2, 1):
        proper = _proper(c11, u)
        run.record(f"classify11.u{u}.proper_alignments", [v.j for v in proper])
        run.record(f"classify11.u{u}.order", sorted({v.order for v in proper}))
        if u == 2:
            run.record("classify11.u2.values", sorted({v.values for v in proper}))
            run.record(
                "classify11.u2.collapsed",
                [v.j for v in c11 if v.u == 2 and v.verdict != "proper"],
            )
        else:
            run.record("classify11.u1.transitivity", sorted({v.transitivity for v in proper}))
            run.record("classify11.u1.values", sorted({v.values for v in proper}))
        run.record(f"classify11.u{u}.conjugate", all(v.conjugate_of == proper[0].j for v in proper[1:]))

    c23 = search.classify(23)
    run.record("classify23.u1.rejected", sum(1 for v in c23 if v.u == 1 and v.verdict != "proper"))
    run.record("classify23.u5.rejected", sum(1 for v in c23 if v.u == 5 and v.verdict != "proper"))
    proper = _proper(c23, 2)
    run.record("classify23.u2.proper_alignments", [v.j for v in proper])
    first = proper[0]
    run.record("classify23.order", first.order)
    run.record("classify23.transitivity", first.transitivity)
    run.record("classify23.values", first.values)
    run.record("classify23.u2.conjugate", all(v.conjugate_of == first.j for v in proper[1:]))


def _rejection_checks(run: _Run) -> None:
    demo = search.rejection_demo_11()
    run.record("reject11.product", format_cycles(Perm(demo["product_images"])))
    run.record("reject11.sixth_power", format_cycles(demo["sixth_power"]))
    run.record("reject11.support", demo["support_size"])
    run.record("reject11.member", demo["member"])
    run.record("reject11.verdict", demo["verdict"])


def _extension_checks(run: _Run) -> None:
    ext8 = search.agl_8()
    run.record("extend8.order", ext8.order())
    run.record("extend8.transitivity", ext8.transitivity_degree())
    run.record("extend8.values", ext8.value_count())

    merged = search.extend_inversion(search.psl2_11())
    m12 = search.m12()
    run.record("extend12.mobius_order", merged.order())
    run.record("extend12.mobius_same_as_m12", merged.same_group(m12))

    m11_12 = search.m11_on_12()
    run.record("m11_12.order", m11_12.order())
    run.record("m11_12.transitivity", m11_12.transitivity_degree())
    run.record("m11_12.point_stabilizer", m11_12.pointwise_stabilizer_order([11]))
    run.record("m11_12.values", m11_12.value_count())

    run.record("m12.order", m12.order())
    run.record("m12.transitivity", m12.transitivity_degree())
    run.record("m12.values", m12.value_count())

    m24 = search.m24()
    run.record("m24.order", m24.order())
    run.record("m24.transitivity", m24.transitivity_degree())
    run.record("m24.point_stabilizer", m24.pointwise_stabilizer_order([23]))


def _m23_structure_checks(run: _Run, budget: int) -> None:
    m23 = search.m23()
    run.record("m23.stabilizer_order", m23.pointwise_stabilizer_order([0, 1, 5, 2]))
    orbits = m23.stabilizer_orbits([0, 1, 5, 2])
    run.record("m23.stabilizer_orbits", sorted(len(o) for o in orbits))
    try:
        run.record("m23.min_support", m23.min_support(budget))
    except BudgetExceeded:
        run.record("m23.min_support", "not computed (budget)")
    chain = m23.chain((0, 1, 5, 2))
    members = sum(chain.contains(run.perm(f"p23.z{i}")) for i in range(1, 5))
    run.record("m23.z_members", members)
    run.record("m23.threecycle_member", chain.contains(run.perm("p23.threecycle")))
    double = compile_formula(parse_formula(run.strings["p23.scale"]["text"]))
    run.record("m23.contains_double", m23.contains(double))


def _closed_form_checks(run: _Run) -> None:
    ids23 = search.enumerate_identifications(23)
    u_pipeline = search.candidate_d(ids23[0], 2)
    run.record("dform.p23", compile_formula(d_form(23, 5, 1, 4)) == u_pipeline)

    cands7 = [search.candidate_d(i, 1) for i in search.enumerate_identifications(7)]
    run.record("dform.p7", [compile_formula(d_form(7, 3, beta, 2)) == c for beta, c in zip((1, 3, 5), cands7)])
    ids11 = search.enumerate_identifications(11)
    n2, n4 = search.candidate_d(ids11[1], 2), search.candidate_d(ids11[3], 2)
    p2, p4 = search.candidate_d(ids11[1], 1), search.candidate_d(ids11[3], 1)
    run.record("dform.p11_n", [compile_formula(d_form(11, 2, 3, 4)) == n2, compile_formula(d_form(11, 2, 7, 4)) == n4])
    run.record("dform.p11_p", [compile_formula(d_form(11, 2, 3, 2)) == p2, compile_formula(d_form(11, 2, 7, 2)) == p4])

    def compiled(string_id: str) -> Perm:
        return compile_formula(parse_formula(run.strings[string_id]["text"]))

    run.record(
        "poly.p7",
        [
            compiled("p7.form1") == cands7[0],
            compiled("p7.form2") == cands7[1],
            compiled("p7.form3_corrected") == cands7[2],
        ],
    )
    run.record("poly.p7_printed_third_valid", compiled("p7.form3") == cands7[2])
    run.record("poly.p11", [compiled("p11.form_n2") == n2, compiled("p11.form_n4") == n4])
    run.record("poly.p23", compiled("p23.form_u") == u_pipeline)


def _containment_checks(run: _Run) -> None:
    psl = search.psl2_11()
    run.record("psl11.contains_r", psl.contains(run.perm("p11.r")))
    run.record(
        "psl11.contains_derived",
        psl.contains(run.perm("p11.r_derived_1")) and psl.contains(run.perm("p11.r_derived_2")),
    )
    m11 = search.m11_on_11()
    run.record("m11.contains_psl", all(m11.contains(g) for g in psl.generators))


def _gf9_checks(run: _Run) -> None:
    m10 = search.m10_gf9()
    run.record("m10.order", m10.order())
    run.record("m10.transitivity", m10.transitivity_degree())
    assignment = search.m10_relabeling()
    relabeled = [gamma_relabel(assignment, p) for p in search.m10_lrs()]
    compiled = [compile_formula(f) for f in search.m10_formulas()]
    run.record("m10.relabel", relabeled == compiled)
    run.record("m10.same_group", m10.same_group(PermutationGroup(relabeled)))


def _pgammal_checks(run: _Run) -> None:
    groups = [search.pgammal_17(tau) for tau in (1, 2, 4)]
    run.record("pgammal.orders", [g.order() for g in groups])
    run.record("pgammal.transitivity", [g.transitivity_degree() for g in groups])
    run.record("pgammal.values", [g.value_count() for g in groups])


def _uniqueness_checks(run: _Run) -> None:
    res = search.uniqueness_checks()
    run.record("unique.p11", res["verdict_11"])
    run.record("unique.p23", res["verdict_23"])
    run.record("unique.control", res["control_verdict"])
    run.record("unique.control_same", res["control_same_group"])


def _element_checks(run: _Run) -> None:
    ids23 = search.enumerate_identifications(23)
    t = search.candidate_d(ids23[0], 1)
    u = search.candidate_d(ids23[0], 2)
    run.record("t23.order", t.order())
    run.record("t23.fifth_power_support", len((t**5).support()))
    run.record("u23.order", u.order())
    run.record("u23.fixed", sorted(set(range(23)) - u.support()))


def _string_checks(run: _Run) -> None:
    rebuilt = PermutationGroup([run.perm("p23.shift"), run.perm("p23.u")])
    run.record("strings.m23_order", rebuilt.order())
    shift11 = run.perm("p11.shift")
    system1 = PermutationGroup([shift11, run.perm("p11.cand1")])
    run.record("strings.q_member", system1.contains(run.perm("p11.q")))
    g168 = PermutationGroup([run.perm("p7.shift"), run.perm("p7.cand1")])
    run.record("strings.aux7_member", g168.contains(run.perm("p7.aux_involution")))
