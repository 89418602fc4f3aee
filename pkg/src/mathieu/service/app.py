"""The HTTP face of the engine.

Long-lived on purpose: stabilizer chains for the expensive groups are
cached inside group objects, so repeated queries against one service
instance stay cheap.  All endpoints are deterministic; no state beyond
those caches.
"""

from __future__ import annotations

from functools import lru_cache

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..engine import BudgetExceeded, min_support
from ..formula import compile_formula
from ..notation import NotationError, format_cycles, parse_formula, parse_generator_file
from ..reproduce import run_reproduction
from ..search import classify
from .schemas import (
    ApplyRequest,
    ApplyResponse,
    CheckModel,
    ClassifyRequest,
    ClassifyResponse,
    ClassifyRow,
    EngineInfo,
    GroupRequest,
    GroupResponse,
    MinSupportRequest,
    MinSupportResponse,
    ReproduceRequest,
    ReproduceResponse,
    StabilizerInfo,
)

app = FastAPI(title="mathieu engine", version=__version__)

_ENGINE = EngineInfo(name="mathieu", version=__version__)


@lru_cache(maxsize=64)
def _group_for(text: str):
    """One group object per generator file text; its chains persist across requests."""
    gen_file = parse_generator_file(text)
    return gen_file, gen_file.group()


@app.get("/", response_model=EngineInfo)
def info() -> EngineInfo:
    return _ENGINE


@app.post("/apply", response_model=ApplyResponse)
def apply(req: ApplyRequest) -> ApplyResponse:
    try:
        formula = parse_formula(req.formula)
        perm = compile_formula(formula)
    except (NotationError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    with_inf = getattr(formula, "with_infinity", False)
    image = None
    if req.point is not None:
        if not 0 <= req.point < perm.degree:
            raise HTTPException(status_code=400, detail=f"point {req.point} out of range")
        image = perm[req.point]
    return ApplyResponse(degree=perm.degree, cycles=format_cycles(perm, infinity=with_inf), image=image)


@app.post("/group", response_model=GroupResponse)
def group(req: GroupRequest) -> GroupResponse:
    try:
        gf_file, grp = _group_for(req.text)
        if req.base is not None:
            for pt in req.base:
                if not 0 <= pt < grp.degree:
                    raise NotationError(f"base point {pt} out of range")
    except (NotationError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    mins: int | None
    note = ""
    try:
        mins = grp.min_support(req.budget)
    except BudgetExceeded:
        mins, note = None, f"not computed (budget {req.budget})"
    except ValueError:
        mins, note = None, "trivial group"
    stab = None
    if req.base is not None:
        orbits = grp.stabilizer_orbits(req.base)
        stab = StabilizerInfo(
            fixed=list(req.base),
            order=str(grp.pointwise_stabilizer_order(req.base)),
            orbit_sizes=sorted(len(o) for o in orbits),
        )
    return GroupResponse(
        degree=grp.degree,
        labels=[label for label, _ in gf_file.entries],
        order=str(grp.order()),
        transitivity=grp.transitivity_degree(),
        values=str(grp.value_count()),
        verdict=grp.verdict(),
        min_support=mins,
        min_support_note=note,
        stabilizer=stab,
    )


@app.post("/classify", response_model=ClassifyResponse)
def classify_case(req: ClassifyRequest) -> ClassifyResponse:
    try:
        verdicts = classify(req.p, exhaustive=req.exhaustive)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    rows = [
        ClassifyRow(
            alignment=v.j,
            exponent=v.u,
            candidate=format_cycles(v.candidate),
            order=str(v.order),
            transitivity=v.transitivity,
            values=str(v.values),
            verdict=v.verdict,
            conjugate_of=v.conjugate_of,
        )
        for v in sorted(verdicts, key=lambda v: (v.u, v.j))
    ]
    return ClassifyResponse(case=f"p={req.p}", engine=_ENGINE, rows=rows)


@app.post("/minsupport", response_model=MinSupportResponse)
def minsupport(req: MinSupportRequest) -> MinSupportResponse:
    try:
        _, grp = _group_for(req.text)
    except (NotationError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    try:
        return MinSupportResponse(min_support=min_support(grp.chain(), req.budget))
    except BudgetExceeded:
        return MinSupportResponse(min_support=None, note=f"not computed (budget {req.budget})")
    except ValueError as exc:
        return MinSupportResponse(min_support=None, note=str(exc))


@app.post("/reproduce", response_model=ReproduceResponse)
def reproduce(req: ReproduceRequest) -> ReproduceResponse:
    if req.corpus is not None and not {"strings", "expectations"} <= req.corpus.keys():
        raise HTTPException(status_code=400, detail="corpus needs 'strings' and 'expectations'")
    try:
        report = run_reproduction(corpus=req.corpus, budget=req.budget)
    except (NotationError, KeyError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=f"corpus is unusable: {exc}") from exc
    return ReproduceResponse(
        ok=report.ok,
        engine=_ENGINE,
        checks=[
            CheckModel(
                id=c.check_id,
                expected=c.expected,
                computed=c.computed,
                match=c.match,
                note=c.note,
            )
            for c in report.checks
        ],
    )
