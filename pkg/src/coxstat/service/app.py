"""HTTP front door wrapping the core package.

Every endpoint is a thin adapter: parse and validate with the request model,
call the core function, shape the response model.  Domain validation errors
surface as HTTP 422 with the core's message.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, verify
from ..bijections import b_code, fundamental_bijection, fundamental_bijection_inverse
from ..groups import parse_element
from ..oracle import GeneratorSet, table_csv
from ..qpoly import closed_B, closed_D, closed_S, distribution
from ..sorting import selection_sort
from ..stats import all_stats
from . import models

app = FastAPI(
    title="coxstat",
    version=__version__,
    description=(
        "Exact statistics, sorting factorizations and distribution identities "
        "on permutations and signed permutations (types A, B, D)."
    ),
)


def _domain(call, *args, **kwargs):
    try:
        return call(*args, **kwargs)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/")
def root() -> dict:
    return {"schema": models.SCHEMA, "service": "coxstat", "version": __version__}


@app.post("/stats", response_model=models.StatsResponse, response_model_by_alias=True)
def stats(req: models.StatsRequest) -> models.StatsResponse:
    w = _domain(parse_element, req.word, req.group)
    return models.StatsResponse(
        group=req.group, n=w.n, word=list(w.word), stats=_domain(all_stats, w)
    )


@app.post("/sort", response_model=models.SortResponse, response_model_by_alias=True)
def sort(req: models.SortRequest) -> models.SortResponse:
    w = _domain(parse_element, req.word, req.group)
    cert = selection_sort(w)
    return models.SortResponse(
        group=req.group,
        n=w.n,
        word=list(w.word),
        factors=[[t.i, t.j] for t in cert.factors],
        sor=cert.sor_value,
        trace=[list(e.word) for e in cert.trace] if req.trace else None,
    )


_CLOSED_FORMS = {"S": closed_S, "B": closed_B, "D": closed_D}


@app.post("/dist", response_model=models.DistResponse, response_model_by_alias=True)
def dist(req: models.DistRequest) -> models.DistResponse:
    poly = _domain(
        distribution,
        req.group,
        req.n,
        req.q_stat,
        req.t_stat,
        threads=req.threads,
        max_elements=req.max_elements,
    )
    equal = None
    if req.compare:
        equal = poly == _domain(_CLOSED_FORMS[req.compare], req.n)
    return models.DistResponse(
        group=req.group,
        n=req.n,
        q_stat=req.q_stat,
        t_stat=req.t_stat,
        terms=poly.triples(),
        text=str(poly),
        compare=req.compare,
        equal=equal,
    )


@app.post("/verify", response_model=models.VerifyResponse, response_model_by_alias=True)
def run_verify(req: models.VerifyRequest) -> models.VerifyResponse:
    rows = _domain(
        verify.run_suites, req.suite, max_n=req.max_n, threads=req.threads
    )
    return models.VerifyResponse(
        suite=req.suite,
        ok=all(r["ok"] for r in rows),
        checks=[models.CheckRow(**r) for r in rows],
    )


@app.post(
    "/bijection", response_model=models.BijectionResponse, response_model_by_alias=True
)
def bijection(req: models.BijectionRequest) -> models.BijectionResponse:
    w = _domain(parse_element, req.word, "A")
    out = fundamental_bijection_inverse(w) if req.inverse else fundamental_bijection(w)
    return models.BijectionResponse(word=list(w.word), result=list(out.word))


@app.post("/bcode", response_model=models.BcodeResponse, response_model_by_alias=True)
def bcode(req: models.BcodeRequest) -> models.BcodeResponse:
    w = _domain(parse_element, req.word, "A")
    code = b_code(w)
    return models.BcodeResponse(word=list(w.word), code=list(code), sor=sum(code))


@app.post(
    "/oracle/table",
    response_model=models.OracleTableResponse,
    response_model_by_alias=True,
)
def oracle_table(req: models.OracleTableRequest) -> models.OracleTableResponse:
    gen = _domain(GeneratorSet, req.group, req.generators, req.n)
    return models.OracleTableResponse(
        group=req.group, n=req.n, generators=req.generators, csv=_domain(table_csv, gen)
    )
