"""FastAPI service wrapping the classification core.

Every endpoint has a plain handler function taking a request model and
returning a response model; the routes delegate to them and the CLI calls
the same handlers in-process.  Error mapping: malformed input (bad type
label, bad rational, wrong weight shape, unknown generator) becomes 422;
mathematically rejected input (critical or non-admissible level, weight
outside a domain) becomes 409.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..admissibility import is_admissible_number
from ..classify import (
    duflo_joseph_move,
    generator_by_name,
    is_module_over_simple_vertex_algebra,
    level_context,
    reduction_data,
    sl2_reduction_admissible,
)
from ..errors import DomainError, GroupTooLargeError, InputError
from ..finite import build_root_system
from ..rationals import format_rational, parse_rational
from ..serialize import (
    real_root_payload,
    root_system_payload,
    weight_from_fundamental_strings,
    weight_payload,
)
from .schemas import (
    ClassifyRequest,
    ClassifyResponse,
    EnumerateRequest,
    EnumerateResponse,
    FailureModel,
    LevelCheckRequest,
    LevelCheckResponse,
    OrbitRequest,
    OrbitResponse,
    OrbitStepModel,
    RealRootModel,
    ReduceRequest,
    ReduceResponse,
    ReductionRowModel,
    RootDataRequest,
    RootDataResponse,
    WeightModel,
)


def _weight_model(rs, lam) -> WeightModel:
    return WeightModel(**weight_payload(rs, lam))


def handle_level_check(req: LevelCheckRequest) -> LevelCheckResponse:
    rs = build_root_system(req.type)
    k = parse_rational(req.level)
    cert = is_admissible_number(rs, k)
    return LevelCheckResponse(
        type=str(rs.lie_type),
        level=format_rational(k),
        admissible=cert.admissible,
        p=cert.p,
        q=cert.q,
        case_gcd=cert.case_gcd,
        min_numerator=cert.min_numerator,
        reason=cert.reason,
    )


def handle_root_data(req: RootDataRequest) -> RootDataResponse:
    rs = build_root_system(req.type)
    return RootDataResponse(**root_system_payload(rs))


def handle_enumerate(req: EnumerateRequest) -> EnumerateResponse:
    ctx = level_context(req.type, parse_rational(req.level))
    rs = ctx.rs
    weights = list(ctx.module_weights)
    multiplicities = None
    if req.verbose:
        multiplicities = [ctx.orbit_multiplicity[w.finite] for w in weights]
    return EnumerateResponse(
        type=str(rs.lie_type),
        level=format_rational(ctx.level),
        p=ctx.p,
        q=ctx.q,
        case_gcd=ctx.certificate.case_gcd,
        dominant_count=len(ctx.dominant_weights),
        total_count=len(weights),
        twist_count=len(ctx.twists),
        dominant=[_weight_model(rs, w) for w in ctx.dominant_weights],
        weights=[_weight_model(rs, w) for w in weights],
        multiplicities=multiplicities,
    )


def handle_classify(req: ClassifyRequest) -> ClassifyResponse:
    ctx = level_context(req.type, parse_rational(req.level))
    lam = weight_from_fundamental_strings(ctx.rs, req.weight, req.level)
    report = is_module_over_simple_vertex_algebra(ctx, lam)
    return ClassifyResponse(
        weight=_weight_model(ctx.rs, lam),
        is_module=report.is_module,
        admissible=report.admissible,
        integral_system=report.integral_system,
        failures=[
            FailureModel(check=f.check, witness=dict(f.witness))
            for f in report.failures
        ],
    )


def handle_reduce(req: ReduceRequest) -> ReduceResponse:
    ctx = level_context(req.type, parse_rational(req.level))
    lam = weight_from_fundamental_strings(ctx.rs, req.weight, req.level)
    rows = []
    for datum in reduction_data(ctx, lam):
        rows.append(
            ReductionRowModel(
                index=datum.index,
                level_i=format_rational(datum.level_i),
                h_value=format_rational(datum.h_value),
                sl2_admissible=sl2_reduction_admissible(datum).admissible,
            )
        )
    return ReduceResponse(
        type=str(ctx.rs.lie_type), level=format_rational(ctx.level), rows=rows
    )


def handle_orbit(req: OrbitRequest) -> OrbitResponse:
    ctx = level_context(req.type, parse_rational(req.level))
    rs = ctx.rs
    lam = weight_from_fundamental_strings(rs, req.weight, req.level)
    moves = [(token, generator_by_name(rs, token)) for token in req.moves]
    verdict = is_module_over_simple_vertex_algebra(ctx, lam)
    if not verdict.is_module:
        raise DomainError(
            "orbit start weight is not a module weight at this level; "
            f"failed checks: {[f.check for f in verdict.failures]}"
        )
    steps = []
    current = lam
    ok = True
    for token, g in moves:
        result = duflo_joseph_move(ctx, current, g)
        if result.applied:
            current = result.weight
            steps.append(
                OrbitStepModel(
                    move=token, applied=True, weight=_weight_model(rs, current)
                )
            )
        else:
            steps.append(
                OrbitStepModel(
                    move=token,
                    applied=False,
                    blocking_root=RealRootModel(**real_root_payload(result.blocking_root)),
                    blocking_pairing=format_rational(result.blocking_pairing),
                )
            )
            ok = False
            break
    return OrbitResponse(ok=ok, start=_weight_model(rs, lam), steps=steps)


app = FastAPI(
    title="admissible-weights",
    version=__version__,
    description="Exact admissible-weight classification for affine root systems.",
)


@app.exception_handler(InputError)
async def _input_error(request: Request, exc: InputError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError):
    return JSONResponse(status_code=409, content={"detail": str(exc)})


@app.exception_handler(GroupTooLargeError)
async def _group_too_large(request: Request, exc: GroupTooLargeError):
    return JSONResponse(status_code=409, content={"detail": str(exc)})


@app.get("/")
def root():
    return {
        "service": "admissible-weights",
        "version": __version__,
        "endpoints": [
            "/level-check",
            "/root-data",
            "/enumerate",
            "/classify",
            "/reduce",
            "/orbit",
        ],
    }


@app.post("/level-check", response_model=LevelCheckResponse)
def level_check(req: LevelCheckRequest) -> LevelCheckResponse:
    return handle_level_check(req)


@app.post("/root-data", response_model=RootDataResponse)
def root_data(req: RootDataRequest) -> RootDataResponse:
    return handle_root_data(req)


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_weights(req: EnumerateRequest) -> EnumerateResponse:
    return handle_enumerate(req)


@app.post("/classify", response_model=ClassifyResponse)
def classify(req: ClassifyRequest) -> ClassifyResponse:
    return handle_classify(req)


@app.post("/reduce", response_model=ReduceResponse)
def reduce_weight(req: ReduceRequest) -> ReduceResponse:
    return handle_reduce(req)


@app.post("/orbit", response_model=OrbitResponse)
def orbit(req: OrbitRequest) -> OrbitResponse:
    return handle_orbit(req)
