"""Homology testing for 1-cycles and shortest homologous paths.

An index system pairs every 1-cycle with a basis of the 2-dimensional
homology: the bit vector of intersection numbers determines the cycle's
class, because the pairing is nondegenerate on a closed manifold.  The same
bits define a 2^r-fold covering of the vertex set; a path is minimal among
homologous paths exactly when its lift is a shortest path in the cover,
which Dijkstra finds without ever materializing the cover.
"""

from __future__ import annotations

import heapq

from .chains import Chain, evaluate, homology_basis, is_cycle
from .duality import cocycle_from_2cycle
from .errors import (
    BoundaryMismatch,
    DimensionMismatch,
    InvalidParameter,
    NotACycle,
    NotAPath,
    RankGuardExceeded,
    UnknownSimplex,
)
from .gf2 import Gf2Matrix
from .mesh import Complex3, ensure_validated

DEFAULT_MAX_NODES = 1 << 20


class IndexSystem:
    """Edge cochains dual to a 2-homology basis, with per-edge step masks."""

    def __init__(self, c: Complex3, cocycles) -> None:
        self.complex = c
        self.cocycles = tuple(cocycles)
        self.rank = len(self.cocycles)
        steps = [0] * c.n1
        for i, j in enumerate(self.cocycles):
            for eid in j.ids:
                steps[eid] |= 1 << i
        self.edge_steps = steps

    def __repr__(self) -> str:
        return f"IndexSystem(rank={self.rank})"


def build_index_system(c: Complex3) -> IndexSystem:
    """One dual cocycle per 2-homology basis element, cached on the complex."""
    ensure_validated(c)
    isys = c._cache.get("index_system")
    if isys is None:
        basis = homology_basis(c, 2)
        isys = IndexSystem(
            c, [cocycle_from_2cycle(c, rep) for rep in basis.representatives]
        )
        c._cache["index_system"] = isys
    return isys


def index_of_chain(isys: IndexSystem, y: Chain) -> int:
    """Bitmask of intersection numbers of the 1-cycle y with the basis."""
    if y.dim != 1:
        raise DimensionMismatch(f"index is defined for 1-chains, got {y.dim}")
    if not is_cycle(isys.complex, y):
        raise NotACycle("index input must be a 1-cycle")
    out = 0
    for i, j in enumerate(isys.cocycles):
        out |= evaluate(j, y) << i
    return out


def _raw_index(isys: IndexSystem, y: Chain) -> int:
    out = 0
    for i, j in enumerate(isys.cocycles):
        out |= evaluate(j, y) << i
    return out


def chains_homologous(isys: IndexSystem, y: Chain, z: Chain) -> bool:
    """Whether two 1-chains with equal boundary differ by a boundary.

    y + z is then a 1-cycle, which bounds exactly when its index vector
    vanishes; by linearity that is equality of the raw index vectors.
    """
    if y.dim != 1 or z.dim != 1:
        raise DimensionMismatch("homology testing is defined for 1-chains")
    c = isys.complex
    from .chains import boundary

    if boundary(c, y) != boundary(c, z):
        raise BoundaryMismatch("the chains have different boundaries")
    return _raw_index(isys, y) == _raw_index(isys, z)


class DualBasis:
    """1-cycles whose index vectors are the unit bitmasks."""

    def __init__(self, isys: IndexSystem, cycles) -> None:
        self.index_system = isys
        self.cycles = tuple(cycles)


def dual_basis(isys: IndexSystem) -> DualBasis:
    """Combine a 1-homology basis so cycle j meets exactly cocycle j.

    Inverts the pairing matrix between the index cocycles and a 1-homology
    basis; a singular matrix cannot happen on a validated closed manifold
    and is reported rather than patched over.
    """
    c = isys.complex
    h1 = homology_basis(c, 1)
    r = isys.rank
    if h1.betti != r:
        raise DimensionMismatch(
            f"1-homology rank {h1.betti} does not match index rank {r}"
        )
    rows = []
    for j in isys.cocycles:
        bits = 0
        for k, a in enumerate(h1.representatives):
            bits |= evaluate(j, a) << k
        rows.append(bits)
    inv = Gf2Matrix(rows, r).inverse()
    cycles = []
    for jcol in range(r):
        ids = frozenset()
        for k in range(r):
            if (inv.rows[k] >> jcol) & 1:
                ids ^= h1.representatives[k].ids
        cycles.append(Chain(1, ids))
    return DualBasis(isys, cycles)


# -- the 2^r covering ------------------------------------------------------


def lift_path(isys: IndexSystem, verts) -> list[tuple[int, int]]:
    """Lift a vertex walk to the cover, starting on sheet 0.

    Crossing an edge moves between sheets by the edge's step mask; the
    final mask equals the index vector of the walk closed up by any path
    with zero index, so homologous walks end on the same sheet.
    """
    c = isys.complex
    _check_walk(c, verts)
    mask = 0
    out = [(verts[0], 0)]
    for a, b in zip(verts, verts[1:]):
        eid = c.edge_id[(a, b) if a < b else (b, a)]
        mask ^= isys.edge_steps[eid]
        out.append((b, mask))
    return out


def _check_walk(c: Complex3, verts) -> None:
    if not verts:
        raise NotAPath("a path needs at least one vertex")
    for v in verts:
        if not 0 <= v < c.n0:
            raise NotAPath(f"vertex {v} not in the mesh")
    for a, b in zip(verts, verts[1:]):
        key = (a, b) if a < b else (b, a)
        if a == b or key not in c.edge_id:
            raise NotAPath(f"consecutive vertices {a} {b} do not span an edge")


def covering_scheme_simplices(isys: IndexSystem, dim: int) -> list:
    """All lifted dim-simplices, as tuples of (vertex, sheet mask) pairs.

    Each base simplex lifts 2^rank times; sheet masks of the other vertices
    are anchored at the smallest vertex through direct edges, which agrees
    with any other anchoring because the cocycles vanish on triangle
    boundaries.
    """
    if not 0 <= dim <= 3:
        raise DimensionMismatch(f"no {dim}-simplices in a 3-complex")
    c = isys.complex
    out = []
    for idx in range(c.count(dim)):
        verts = c.simplex_vertices(dim, idx)
        v0 = verts[0]
        rel = [0]
        for v in verts[1:]:
            rel.append(isys.edge_steps[c.edge_id[(v0, v)]])
        for k in range(1 << isys.rank):
            out.append(tuple((v, k ^ m) for v, m in zip(verts, rel)))
    return out


def covering_complex(isys: IndexSystem) -> Complex3:
    """The 2^rank cover as a complex; vertex (v, k) gets id v * 2^rank + k."""
    r = isys.rank
    tets = [
        tuple(sorted(v * (1 << r) + k for v, k in lifted))
        for lifted in covering_scheme_simplices(isys, 3)
    ]
    return Complex3(tets, n_vertices=isys.complex.n0 * (1 << r))


# -- weighted shortest homologous path ---------------------------------------


class WeightFunction:
    """Nonnegative edge weights; edges missing from the table weigh 1.0."""

    def __init__(self, c: Complex3, table=None) -> None:
        self.values = [1.0] * c.n1
        for (u, v), w in (table or {}).items():
            key = (u, v) if u < v else (v, u)
            eid = c.edge_id.get(key)
            if eid is None:
                raise UnknownSimplex(f"weighted edge {key} not in the mesh")
            if not w >= 0.0:
                raise InvalidParameter(f"edge {key} has negative weight {w}")
            self.values[eid] = float(w)

    def __call__(self, eid: int) -> float:
        return self.values[eid]


def min_homologous_path(
    c: Complex3,
    path,
    weights=None,
    max_nodes: int = DEFAULT_MAX_NODES,
    index_system: IndexSystem | None = None,
):
    """Minimum-weight walk with the same endpoints and homology class.

    Dijkstra over (vertex, sheet mask) states of the cover, from the lift
    of the start vertex to the endpoint on the sheet reached by the input
    path.  Returns (vertices, weight).  Raises RankGuardExceeded once more
    than max_nodes states have been settled; 2^rank * n0 states exist, so
    large 2-homology makes the search space explode and the guard reports
    that honestly instead of running forever.
    """
    ensure_validated(c)
    isys = index_system or build_index_system(c)
    _check_walk(c, path)
    wf = weights if isinstance(weights, WeightFunction) else WeightFunction(c, weights)

    target_mask = 0
    for a, b in zip(path, path[1:]):
        target_mask ^= isys.edge_steps[c.edge_id[(a, b) if a < b else (b, a)]]
    start = (path[0], 0)
    goal = (path[-1], target_mask)

    dist = {start: 0.0}
    parent: dict = {start: None}
    settled = set()
    heap = [(0.0, start)]
    while heap:
        d, state = heapq.heappop(heap)
        if state in settled:
            continue
        settled.add(state)
        if len(settled) > max_nodes:
            raise RankGuardExceeded(
                f"shortest-path search exceeded {max_nodes} settled states"
            )
        if state == goal:
            break
        v, mask = state
        for eid in c.vert_edges[v]:
            a, b = c.edges[eid]
            nxt = (b if a == v else a, mask ^ isys.edge_steps[eid])
            nd = d + wf(eid)
            if nxt not in settled and nd < dist.get(nxt, float("inf")):
                dist[nxt] = nd
                parent[nxt] = state
                heapq.heappush(heap, (nd, nxt))
    else:
        raise NotAPath("no homologous path exists; the cover is disconnected")

    verts = []
    state = goal
    while state is not None:
        verts.append(state[0])
        state = parent[state]
    verts.reverse()
    return verts, dist[goal]
