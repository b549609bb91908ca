"""HTTP API over the core package.

Parsed meshes are cached by their exact text, so a long-running server
reuses incidence tables, homology bases and index systems across requests.
Domain errors map to 400 with a stable machine-readable code; the search
budget guard maps to 409 so clients can tell "won't fit" from "bad input".
"""

from __future__ import annotations

from functools import lru_cache

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import covering, duality, formats, mesh
from ..chains import homology_basis
from ..errors import InvalidParameter, RankGuardExceeded, TetcyclesError
from . import models


@lru_cache(maxsize=32)
def _load_mesh(text: str) -> mesh.Complex3:
    return formats.parse_mesh_text(text)


_GENERATORS = {"s3": mesh.gen_s3, "t3": mesh.gen_t3, "rp3": mesh.rp3}


def create_app() -> FastAPI:
    app = FastAPI(title="tetcycles", version="0.1.0")

    @app.exception_handler(TetcyclesError)
    async def _domain_error(request: Request, exc: TetcyclesError):
        status = 409 if isinstance(exc, RankGuardExceeded) else 400
        return JSONResponse(
            status_code=status,
            content=models.ErrorBody(code=exc.code, detail=str(exc)).model_dump(),
        )

    @app.post("/gen", response_model=models.GenResponse)
    def gen(req: models.GenRequest):
        maker = _GENERATORS.get(req.name)
        if maker is None:
            raise InvalidParameter(
                f"unknown generator {req.name!r}, expected one of s3, t3, rp3"
            )
        if req.name == "t3":
            if req.q is None:
                raise InvalidParameter("generator t3 requires q")
            c = maker(req.q)
        else:
            c = maker()
        return models.GenResponse(mesh=formats.write_mesh_text(c))

    @app.post("/validate", response_model=models.ValidateResponse)
    def validate(req: models.ValidateRequest):
        c = _load_mesh(req.mesh)
        rep = mesh.validate_closed_manifold(c)
        return models.ValidateResponse(
            ok=rep.ok,
            witness=rep.witness,
            n0=rep.n0,
            n1=rep.n1,
            n2=rep.n2,
            n3=rep.n3,
            euler_characteristic=rep.euler_characteristic,
        )

    @app.post("/homology", response_model=models.HomologyResponse)
    def homology(req: models.HomologyRequest):
        c = _load_mesh(req.mesh)
        basis = homology_basis(c, req.dim)
        reps = [formats.write_chain_text(x, c) for x in basis.representatives]
        return models.HomologyResponse(betti=basis.betti, representatives=reps)

    @app.post("/cocycle", response_model=models.CocycleResponse)
    def cocycle(req: models.CocycleRequest):
        c = _load_mesh(req.mesh)
        x = formats.parse_chain_text(req.chain, c)
        if req.method == "fast":
            j = duality.intersection_cocycle(c, x)
        elif req.method == "oracle":
            j = duality.oracle_cocycle(c, x)
        else:
            raise InvalidParameter(
                f"unknown method {req.method!r}, expected fast or oracle"
            )
        return models.CocycleResponse(cochain=formats.write_cochain_text(j, c))

    @app.post("/intersect", response_model=models.IntersectResponse)
    def intersect(req: models.IntersectRequest):
        c = _load_mesh(req.mesh)
        a = formats.parse_chain_text(req.chain_a, c)
        b = formats.parse_chain_text(req.chain_b, c)
        return models.IntersectResponse(value=duality.intersection_number(c, a, b))

    @app.post("/index", response_model=models.IndexResponse)
    def index(req: models.IndexRequest):
        c = _load_mesh(req.mesh)
        y = formats.parse_chain_text(req.chain, c)
        isys = covering.build_index_system(c)
        bits = covering.index_of_chain(isys, y)
        return models.IndexResponse(
            rank=isys.rank, bits=[(bits >> i) & 1 for i in range(isys.rank)]
        )

    @app.post("/homologous", response_model=models.HomologousResponse)
    def homologous(req: models.HomologousRequest):
        c = _load_mesh(req.mesh)
        y = formats.parse_chain_text(req.chain_a, c)
        z = formats.parse_chain_text(req.chain_b, c)
        isys = covering.build_index_system(c)
        return models.HomologousResponse(
            homologous=covering.chains_homologous(isys, y, z)
        )

    @app.post("/minpath", response_model=models.MinpathResponse)
    def minpath(req: models.MinpathRequest):
        c = _load_mesh(req.mesh)
        path = formats.parse_path_text(req.path)
        table = formats.parse_weights_text(req.weights) if req.weights else None
        kwargs = {}
        if req.max_nodes is not None:
            kwargs["max_nodes"] = req.max_nodes
        verts, weight = covering.min_homologous_path(c, path, table, **kwargs)
        return models.MinpathResponse(
            path=formats.write_path_text(verts, weight=weight), weight=weight
        )

    return app


app = create_app()
