"""HTTP facade over the library.

Each ground size is built once per process and cached; endpoints serve the
structure, its hyperplanes, the Veldkamp census, the polar subgeometries,
the pivot decompositions and the full verification sweep.
"""

from __future__ import annotations

from functools import lru_cache

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from . import schemas
from .grassmannian import build_g2, named_configuration
from .hyperplanes import enumerate_hyperplanes, enumerate_hyperplanes_scan
from .incidence import StructureError, collinearity_graph, configuration_parameters
from .magic_line import build_magic_line, full_reports
from .polar import alpha_quadric, conwell_heptad, embedded_grassmannian, extract_symplectic
from .veldkamp_space import build_veldkamp, tabulate_census
from .verification import verify_all

SECTOR_COLORS = {"core": "black", "elliptic": "blue",
                 "hyperbolic": "green", "cone": "red"}

app = FastAPI(
    title="veldkamp",
    description="Pair Grassmannians, their geometric hyperplanes and "
                "Veldkamp spaces, and the polar subgeometries inside them.",
    version="0.1.0",
)


@app.exception_handler(StructureError)
async def structure_error_handler(request: Request, exc: StructureError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@lru_cache(maxsize=None)
def get_veldkamp(n: int):
    return build_veldkamp(build_g2(n))


@lru_cache(maxsize=None)
def get_symplectic(n: int):
    return extract_symplectic(get_veldkamp(n))


@lru_cache(maxsize=None)
def get_magic_line(n: int, pivot: int):
    return build_magic_line(get_veldkamp(n), pivot, get_symplectic(n))


@app.get("/health", response_model=schemas.HealthResponse)
def health():
    return {"status": "ok"}


@app.post("/grassmannian", response_model=schemas.GrassmannianResponse)
def grassmannian(req: schemas.GrassmannianRequest):
    host = build_g2(req.n)
    p = configuration_parameters(host)
    return {
        "n": req.n,
        "name": named_configuration(host),
        "parameters": {"v": p.v, "b": p.b, "r": p.r, "k": p.k,
                       "regular": p.regular, "linear": p.linear,
                       "binomial": p.is_binomial},
        "structure": host.to_json_dict(),
    }


@app.post("/hyperplanes", response_model=schemas.HyperplanesResponse)
def hyperplanes(req: schemas.HyperplanesRequest):
    host = build_g2(req.n)
    if req.oracle:
        found = enumerate_hyperplanes_scan(host)
        method = "scan-oracle"
    else:
        found = enumerate_hyperplanes(host)
        method = "backtracking"
    return {
        "n": req.n,
        "count": len(found),
        "method": method,
        "hyperplanes": [
            {"partition": h.partition_label, "points": list(h.point_labels)}
            for h in found],
    }


@app.post("/veldkamp", response_model=schemas.VeldkampResponse)
def veldkamp(req: schemas.VeldkampRequest):
    V = get_veldkamp(req.n)
    census = tabulate_census(V).to_dict() if V.point_types is not None else None
    return {"n": req.n, "points": V.n_points, "lines": V.n_lines, "census": census}


@app.post("/polar", response_model=schemas.PolarResponse)
def polar(req: schemas.PolarRequest):
    V = get_veldkamp(req.n)
    if req.what == "symplectic":
        sub = get_symplectic(req.n)
    elif req.what == "quadric":
        sub = alpha_quadric(V)
    elif req.what == "grassmannian":
        sub, cert = embedded_grassmannian(V)
        sub.details["point_map"] = dict(sorted(cert.point_map.items()))
        sub.details["image_is_host"] = cert.image_is_host
    elif req.what == "heptad":
        sub = conwell_heptad(V)
    else:
        raise StructureError(
            f"unknown selection {req.what!r}; expected symplectic, quadric, "
            "grassmannian or heptad")
    return {
        "n": req.n,
        "kind": sub.kind.value,
        "points": list(sub.point_labels()),
        "lines": [list(t) for t in sub.line_label_triples()],
        "details": sub.details,
    }


@app.post("/magic-line", response_model=schemas.MagicLineResponse)
def magic_line(req: schemas.MagicLineRequest):
    if not req.all and req.pivot is None:
        raise StructureError("request needs a pivot or all=true")
    pivots = range(1, 8) if req.all else [req.pivot]
    decompositions = []
    for g in pivots:
        m = get_magic_line(req.n, g)
        reports = full_reports(m)
        payload = m.sectors_dict()
        payload["ok"] = all(r.ok for r in reports)
        payload["reports"] = [r.to_dict() for r in reports]
        decompositions.append(payload)
    return {"n": req.n, "decompositions": decompositions}


@app.post("/verify-all", response_model=schemas.VerifyAllResponse)
def verify_all_endpoint():
    report = verify_all()
    return {
        "ok": report.ok,
        "checks": [c.to_dict() for c in report.checks],
        "export": report.data["export"],
    }


@app.post("/dot", response_class=PlainTextResponse)
def dot(req: schemas.DotRequest):
    if req.which == "grassmannian":
        graph = collinearity_graph(build_g2(req.n))
        return graph.to_dot(name=f"g2_{req.n}")
    if req.which == "veldkamp":
        graph = collinearity_graph(get_veldkamp(req.n).as_incidence_structure())
        return graph.to_dot(name=f"veldkamp_g2_{req.n}")
    if req.which == "symplectic":
        graph = collinearity_graph(get_symplectic(req.n).as_incidence_structure())
        return graph.to_dot(name=f"symplectic_{req.n}")
    if req.which == "magic-line":
        if req.pivot is None:
            raise StructureError("magic-line DOT export needs a pivot")
        m = get_magic_line(req.n, req.pivot)
        graph = collinearity_graph(m.symplectic.as_incidence_structure())
        colors = {}
        for name, points in (("core", m.core_points), ("elliptic", m.elliptic_points),
                             ("hyperbolic", m.hyperbolic_points), ("cone", m.cone_points)):
            for i in points:
                colors[m.veldkamp.vpoints[i].label] = SECTOR_COLORS[name]
        return graph.to_dot(name=f"magic_line_pivot_{req.pivot}", colors=colors)
    raise StructureError(
        f"unknown DOT selection {req.which!r}; expected grassmannian, veldkamp, "
        "symplectic or magic-line")
