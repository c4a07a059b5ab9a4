"""HTTP service exposing the engine.

Every CLI subcommand maps to one POST endpoint here; the CLI runs the app
in-process by default, so the service is the single implementation of the
external interface.  Domain errors surface as HTTP 400 with a JSON body.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .context import Context, default_cap, get_context
from .errors import CobcalcError
from .exprparse import parse_poly
from .generators import e_generator, su_generator, su_low_generators, w_generator, z_generator
from .ideals import IdealSpec, ideal_degree_report, ideal_member, ideals_equal, regularity_check
from .rationals import rat_from_str, rat_json
from .schemas import (
    SCHEMA_VERSION,
    AlphaRequest,
    CapRequest,
    ChernRequest,
    ClassRequest,
    ClassResponse,
    EliminationResponse,
    GeneratorsRequest,
    GeneratorsResponse,
    HoehnRequest,
    HoehnResponse,
    IdealRequest,
    IdealResponse,
    KricheverCheckRequest,
    KricheverCheckResponse,
    StarRequest,
    ValueResponse,
    VerifyRequest,
    VerifyResponse,
)
from .special import (
    abel_eliminate,
    abel_fgl,
    buchstaber_eliminate,
    hoehn_solve,
    krichever_form_check,
    krichever_params_of,
    phi_w,
)
from .verify import render_json, run_suite

app = FastAPI(title="cobcalc", version=__version__)


@app.exception_handler(CobcalcError)
async def _domain_error_handler(request: Request, exc: CobcalcError):
    return JSONResponse(status_code=400, content={"schema": SCHEMA_VERSION, "error": str(exc)})


def _ctx(max_degree: int | None) -> Context:
    return get_context(max_degree if max_degree is not None else default_cap())


@app.get("/health")
def health() -> dict:
    return {"schema": SCHEMA_VERSION, "status": "ok", "version": __version__}


@app.post("/alpha", response_model=ClassResponse, response_model_by_alias=True)
def alpha(req: AlphaRequest) -> ClassResponse:
    ctx = _ctx(req.max_degree)
    return ClassResponse(max_degree=ctx.cap, cls=ctx.alpha(req.i, req.j).to_text())


@app.post("/chern", response_model=ValueResponse, response_model_by_alias=True)
def chern(req: ChernRequest) -> ValueResponse:
    ctx = _ctx(req.max_degree)
    cls = parse_poly(ctx.ring, req.cls)
    value = ctx.chern.chern_number(cls, tuple(req.omega))
    return ValueResponse(max_degree=ctx.cap, value=rat_json(value))


@app.post("/snumber", response_model=ValueResponse, response_model_by_alias=True)
def snumber(req: ClassRequest) -> ValueResponse:
    ctx = _ctx(req.max_degree)
    cls = parse_poly(ctx.ring, req.cls)
    return ValueResponse(max_degree=ctx.cap, value=rat_json(ctx.chern.s_number(cls)))


@app.post("/boundary", response_model=ClassResponse, response_model_by_alias=True)
def boundary(req: ClassRequest) -> ClassResponse:
    ctx = _ctx(req.max_degree)
    cls = parse_poly(ctx.ring, req.cls)
    return ClassResponse(max_degree=ctx.cap, cls=ctx.chern.boundary(cls).to_text())


@app.post("/star", response_model=ClassResponse, response_model_by_alias=True)
def star(req: StarRequest) -> ClassResponse:
    ctx = _ctx(req.max_degree)
    left = parse_poly(ctx.ring, req.left)
    right = parse_poly(ctx.ring, req.right)
    return ClassResponse(max_degree=ctx.cap, cls=ctx.chern.star(left, right).to_text())


def _generator_records(ctx: Context, kind: str, degree: int | None) -> list[dict]:
    if kind == "e":
        degrees = range(1, ctx.cap + 1) if degree is None else [degree]
        return [e_generator(ctx, m).to_json() for m in degrees]
    if kind == "z":
        degrees = range(3, ctx.cap + 1) if degree is None else [degree]
        return [z_generator(ctx, k).to_json() for k in degrees]
    if kind == "x":
        degrees = [1] + list(range(3, ctx.cap + 1)) if degree is None else [degree]
        return [w_generator(ctx, k).to_json() for k in degrees]
    # kind == "y": the SU family
    records = []
    y2, y3, y4 = su_low_generators(ctx)
    eng = ctx.chern
    low = {2: y2, 3: y3, 4: y4}
    degrees = range(2, ctx.cap + 1) if degree is None else [degree]
    for i in degrees:
        if i in low:
            records.append(
                {
                    "kind": "y_i",
                    "degree": i,
                    "class": low[i].to_text(),
                    "s_number": rat_json(eng.s_number(low[i])),
                    "certificates": {
                        "w_member": eng.is_w_class(low[i]),
                        "su_member": eng.is_su_class(low[i]),
                    },
                }
            )
        else:
            records.append(su_generator(ctx, i).to_json())
    return records


@app.post("/generators", response_model=GeneratorsResponse, response_model_by_alias=True)
def generators(req: GeneratorsRequest) -> GeneratorsResponse:
    ctx = _ctx(req.max_degree)
    return GeneratorsResponse(max_degree=ctx.cap, records=_generator_records(ctx, req.kind, req.degree))


@app.post("/abel", response_model=EliminationResponse, response_model_by_alias=True)
def abel(req: CapRequest) -> EliminationResponse:
    ctx = _ctx(req.max_degree)
    sub = abel_eliminate(ctx)
    report = krichever_form_check(abel_fgl(ctx))
    return EliminationResponse(
        max_degree=ctx.cap,
        images={name: img.to_text() for name, img in sorted(sub.images.items())},
        krichever=report.to_json(),
    )


@app.post("/buchstaber", response_model=EliminationResponse, response_model_by_alias=True)
def buchstaber(req: CapRequest) -> EliminationResponse:
    ctx = _ctx(req.max_degree)
    data = buchstaber_eliminate(ctx)
    report = krichever_form_check(data.fgl)
    params = krichever_params_of(data.fgl)
    return EliminationResponse(
        max_degree=ctx.cap,
        images={name: img.to_text() for name, img in sorted(data.substitution.images.items())},
        krichever=report.to_json(),
        params=[p.to_text() for p in params.p] if params.ok else None,
    )


@app.post("/hoehn", response_model=HoehnResponse, response_model_by_alias=True)
def hoehn(req: HoehnRequest) -> HoehnResponse:
    cap = req.max_degree if req.max_degree is not None else default_cap()
    p_values = tuple(rat_from_str(s) for s in req.p)
    genus = hoehn_solve(p_values, cap)
    return HoehnResponse(
        max_degree=cap,
        p=[rat_json(pv) for pv in p_values],
        images={f"P{n}": genus.images[n].to_text() for n in sorted(genus.images)},
    )


@app.post("/krichever-check", response_model=KricheverCheckResponse, response_model_by_alias=True)
def krichever_check(req: KricheverCheckRequest) -> KricheverCheckResponse:
    ctx = _ctx(req.max_degree)
    if req.law == "universal":
        law = ctx.fgl
    elif req.law == "abel":
        law = abel_fgl(ctx)
    else:
        law = buchstaber_eliminate(ctx).fgl
    report = krichever_form_check(law)
    return KricheverCheckResponse(max_degree=ctx.cap, law=req.law, report=report.to_json())


@app.post("/phiw", response_model=ClassResponse, response_model_by_alias=True)
def phiw(req: ClassRequest) -> ClassResponse:
    ctx = _ctx(req.max_degree)
    cls = parse_poly(ctx.ring, req.cls)
    return ClassResponse(max_degree=ctx.cap, cls=phi_w(ctx, cls).to_text())


@app.post("/ideal", response_model=IdealResponse, response_model_by_alias=True)
def ideal(req: IdealRequest) -> IdealResponse:
    ctx = _ctx(req.max_degree)
    gens = tuple(parse_poly(ctx.ring, g) for g in req.generators)
    spec = IdealSpec("I", gens, ctx.cap)
    if req.action == "report":
        result = {"rows": ideal_degree_report(ctx, spec).to_json()}
    elif req.action == "member":
        if req.cls is None:
            raise CobcalcError("the member action needs a class expression")
        cls = parse_poly(ctx.ring, req.cls)
        result = {"member": ideal_member(ctx, spec, cls)}
    elif req.action == "equal":
        if not req.generators2:
            raise CobcalcError("the equal action needs a second generator list")
        gens2 = tuple(parse_poly(ctx.ring, g) for g in req.generators2)
        result = ideals_equal(ctx, spec, IdealSpec("J", gens2, ctx.cap)).to_json()
    else:  # regularity
        result = regularity_check(ctx, list(gens)).to_json()
    return IdealResponse(max_degree=ctx.cap, action=req.action, result=result)


@app.post("/verify", response_model=VerifyResponse, response_model_by_alias=True)
def verify(req: VerifyRequest) -> VerifyResponse:
    cap = req.max_degree if req.max_degree is not None else default_cap()
    results = run_suite(req.suite, cap)
    payload = render_json(results, cap)
    return VerifyResponse(max_degree=cap, suites=payload["suites"], passed=payload["pass"])
