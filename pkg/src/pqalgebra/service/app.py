"""HTTP front end over the algebra package."""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI
from fastapi.responses import JSONResponse

from ..algebra import Element, basis_product, make_spec, multiply
from ..analysis import check_identity, classify, norm
from ..errors import AlgebraError
from ..periodic import periodic_params, rho_label, unit_power
from ..representation import rep_octonion, rep_quadratic_quaternion, rep_sedenion
from . import schemas
from .schemas import from_complex, to_complex

_DUST = 1e-12


def _snapped(z: complex) -> list[float]:
    re = 0.0 if abs(z.real) < _DUST else float(z.real)
    im = 0.0 if abs(z.imag) < _DUST else float(z.imag)
    return [re, im]


def _element_body(el: Element, snap: bool = False) -> dict:
    if snap:
        return {"dim": el.dim, "coeffs": [_snapped(z) for z in el.coeffs]}
    return el.to_json()


def _spec_from(req) -> "AlgebraSpec":
    return make_spec(req.family, to_complex(req.p), to_complex(req.q),
                     branch=req.branch)


def _error_response(request, exc):
    return JSONResponse(
        status_code=400,
        content={"error": {"type": type(exc).__name__, "message": str(exc)}},
    )


def create_app() -> FastAPI:
    app = FastAPI(title="pqalgebra", version="0.1.0")
    app.add_exception_handler(AlgebraError, _error_response)
    app.add_exception_handler(ValueError, _error_response)
    app.add_exception_handler(IndexError, _error_response)

    @app.get("/health", response_model=schemas.HealthResponse)
    def health():
        return {"status": "ok"}

    @app.post("/table", response_model=schemas.TableResponse)
    def table(req: schemas.TableRequest):
        spec = _spec_from(req)
        grid = [[basis_product(spec, i, j).to_json() for j in range(spec.dim)]
                for i in range(spec.dim)]
        return {"family": spec.family, "dim": spec.dim,
                "p": from_complex(spec.p), "q": from_complex(spec.q),
                "table": grid}

    @app.post("/multiply", response_model=schemas.MultiplyResponse)
    def multiply_route(req: schemas.MultiplyRequest):
        spec = _spec_from(req)
        x = Element(np.array([to_complex(c) for c in req.x]))
        y = Element(np.array([to_complex(c) for c in req.y]))
        return {"element": multiply(spec, x, y).to_json()}

    @app.post("/norm", response_model=schemas.NormResponse)
    def norm_route(req: schemas.NormRequest):
        spec = _spec_from(req)
        x = Element(np.array([to_complex(c) for c in req.x]))
        return {"value": from_complex(norm(spec, x))}

    @app.post("/classify", response_model=schemas.ClassifyResponse)
    def classify_route(req: schemas.ClassifyRequest):
        report = classify(to_complex(req.p), to_complex(req.q), dim=req.dim)
        return report.to_json()

    @app.post("/representation", response_model=schemas.RepresentationResponse)
    def representation(req: schemas.RepresentationRequest):
        family = str(req.family).strip().upper()
        p, q = to_complex(req.p), to_complex(req.q)
        if family == "Q":
            sqrt_d = None if req.sqrt_d is None else to_complex(req.sqrt_d)
            rep = rep_quadratic_quaternion(p, q, branch=req.branch, sqrt_d=sqrt_d)
        elif family in ("O", "S"):
            if abs(p) > _DUST or abs(q - 1) > _DUST:
                raise ValueError(
                    f"family {family} matrices exist only at p=0, q=1")
            rep = rep_octonion() if family == "O" else rep_sedenion()
        else:
            raise ValueError(f"no matrix model for family {req.family!r}")
        return rep.to_json()

    @app.post("/power", response_model=schemas.PowerResponse)
    def power(req: schemas.PowerRequest):
        el = unit_power(req.rho, req.k, req.theta)
        p, q = periodic_params(req.rho, req.k)
        # trig dust below 1e-12 is snapped so canonical points print clean
        return {"element": _element_body(el, snap=True),
                "p": _snapped(p), "q": _snapped(q),
                "rho": rho_label(req.rho), "k": req.k, "theta": req.theta}

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest):
        spec = _spec_from(req)
        report = check_identity(spec, req.identity, trials=req.trials,
                                seed=req.seed, tol=req.tol)
        return report.to_json()

    return app
