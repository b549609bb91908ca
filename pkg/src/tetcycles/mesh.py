"""Tetrahedral complexes: incidence tables, stars and links, closed-manifold
validation, barycentric subdivision, and the built-in test fixtures.

Simplices are canonically sorted tuples of 0-based vertex ids.  Each
dimension gets dense ids in lexicographic order of the vertex tuples; all
chain arithmetic elsewhere works on those dense ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations, product

from .errors import (
    DegenerateTet,
    DuplicateTet,
    InvalidParameter,
    NotValidated,
    UnknownSimplex,
)

VertexId = int
Simplex = tuple  # sorted tuple of 1..4 distinct VertexIds


class Complex3:
    """Immutable simplicial structure of a tetrahedral complex.

    Holds the sorted simplex lists of every dimension, the facet tables
    (dim -> dim-1) and the full incidence tables (dim -> every higher
    dimension).  Instances are safe to share between threads; the internal
    cache only ever gains recomputable entries.
    """

    def __init__(self, tets, n_vertices: int | None = None) -> None:
        canon = []
        seen = set()
        max_v = -1
        for raw in tets:
            t = tuple(sorted(int(v) for v in raw))
            if len(t) != 4 or len(set(t)) != 4:
                raise DegenerateTet(f"tetrahedron {tuple(raw)} has repeated vertices")
            if t[0] < 0:
                raise InvalidParameter(f"negative vertex id in tetrahedron {t}")
            if t in seen:
                raise DuplicateTet(f"tetrahedron {t} listed twice")
            seen.add(t)
            canon.append(t)
            if t[3] > max_v:
                max_v = t[3]
        canon.sort()
        if n_vertices is None:
            n_vertices = max_v + 1
        elif max_v >= n_vertices:
            raise InvalidParameter(
                f"vertex id {max_v} out of range for {n_vertices} vertices"
            )

        self.n0 = n_vertices
        self.tets: tuple[Simplex, ...] = tuple(canon)

        tri_set = set()
        edge_set = set()
        for t in canon:
            tri_set.update(combinations(t, 3))
            edge_set.update(combinations(t, 2))
        self.triangles: tuple[Simplex, ...] = tuple(sorted(tri_set))
        self.edges: tuple[Simplex, ...] = tuple(sorted(edge_set))

        self.tet_id = {t: i for i, t in enumerate(self.tets)}
        self.tri_id = {t: i for i, t in enumerate(self.triangles)}
        self.edge_id = {e: i for i, e in enumerate(self.edges)}

        # facet tables (ids are increasing because faces of a sorted tuple
        # enumerate in lexicographic order)
        self.tet_tris = [
            tuple(self.tri_id[f] for f in combinations(t, 3)) for t in self.tets
        ]
        self.tri_edges = [
            tuple(self.edge_id[f] for f in combinations(t, 2)) for t in self.triangles
        ]

        # incidence lists, sorted by construction (tet/tri ids ascend)
        self.tri_tets = [[] for _ in self.triangles]
        self.edge_tets = [[] for _ in self.edges]
        self.vert_tets = [[] for _ in range(n_vertices)]
        for sid, t in enumerate(self.tets):
            for f in combinations(t, 3):
                self.tri_tets[self.tri_id[f]].append(sid)
            for f in combinations(t, 2):
                self.edge_tets[self.edge_id[f]].append(sid)
            for v in t:
                self.vert_tets[v].append(sid)
        self.edge_tris = [[] for _ in self.edges]
        self.vert_tris = [[] for _ in range(n_vertices)]
        for tid, t in enumerate(self.triangles):
            for f in combinations(t, 2):
                self.edge_tris[self.edge_id[f]].append(tid)
            for v in t:
                self.vert_tris[v].append(tid)
        self.vert_edges = [[] for _ in range(n_vertices)]
        for eid, e in enumerate(self.edges):
            for v in e:
                self.vert_edges[v].append(eid)

        self._cache: dict = {}

    # -- counts ---------------------------------------------------------

    @property
    def n1(self) -> int:
        return len(self.edges)

    @property
    def n2(self) -> int:
        return len(self.triangles)

    @property
    def n3(self) -> int:
        return len(self.tets)

    def euler_characteristic(self) -> int:
        return self.n0 - self.n1 + self.n2 - self.n3

    # -- simplex lookup ---------------------------------------------------

    def count(self, dim: int) -> int:
        return (self.n0, self.n1, self.n2, self.n3)[dim]

    def simplex_vertices(self, dim: int, idx: int) -> Simplex:
        if dim == 0:
            if not 0 <= idx < self.n0:
                raise UnknownSimplex(f"no vertex {idx}")
            return (idx,)
        table = (None, self.edges, self.triangles, self.tets)[dim]
        if not 0 <= idx < len(table):
            raise UnknownSimplex(f"no {dim}-simplex with id {idx}")
        return table[idx]

    def simplex_id(self, verts) -> int:
        s = tuple(sorted(verts))
        if len(s) == 1:
            if not 0 <= s[0] < self.n0:
                raise UnknownSimplex(f"vertex {s[0]} not in complex")
            return s[0]
        table = {2: self.edge_id, 3: self.tri_id, 4: self.tet_id}.get(len(s))
        if table is None:
            raise UnknownSimplex(f"{s} is not a simplex of dimension 0..3")
        try:
            return table[s]
        except KeyError:
            raise UnknownSimplex(f"simplex {s} not in complex") from None

    def facet_ids(self, dim: int, idx: int):
        """Ids of the (dim-1)-faces of the given simplex."""
        if dim == 1:
            return self.edges[idx]
        if dim == 2:
            return self.tri_edges[idx]
        if dim == 3:
            return self.tet_tris[idx]
        raise UnknownSimplex(f"no facets in dimension {dim}")

    def cofacet_ids(self, dim: int, idx: int):
        """Ids of the (dim+1)-simplices containing the given simplex."""
        if dim == 0:
            return self.vert_edges[idx]
        if dim == 1:
            return self.edge_tris[idx]
        if dim == 2:
            return self.tri_tets[idx]
        raise UnknownSimplex(f"no cofacets in dimension {dim}")

    def incident_tets(self, dim: int, idx: int):
        if dim == 0:
            return self.vert_tets[idx]
        if dim == 1:
            return self.edge_tets[idx]
        if dim == 2:
            return self.tri_tets[idx]
        return [idx]

    def __repr__(self) -> str:
        return (
            f"Complex3(n0={self.n0}, n1={self.n1}, n2={self.n2}, n3={self.n3})"
        )


def build_complex(tets, n_vertices: int | None = None) -> Complex3:
    """Build the full incidence structure from a list of vertex 4-tuples."""
    return Complex3(tets, n_vertices=n_vertices)


# -- validation -----------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    witness: str | None
    n0: int
    n1: int
    n2: int
    n3: int
    euler_characteristic: int


def _bfs_cover(adj: dict, start) -> set:
    seen = {start}
    todo = deque([start])
    while todo:
        u = todo.popleft()
        for w in adj.get(u, ()):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def validate_closed_manifold(c: Complex3) -> ValidationReport:
    """Check that the complex triangulates a connected closed 3-manifold.

    Pass requires: every triangle in exactly two tetrahedra, every edge link
    a single closed cycle, every vertex link a connected closed surface of
    Euler characteristic 2, and a connected complex.  The first failing
    condition is reported as a witness; checks are ordered so that later
    ones may assume the earlier ones.
    """

    def report(witness=None):
        return ValidationReport(
            ok=witness is None,
            witness=witness,
            n0=c.n0,
            n1=c.n1,
            n2=c.n2,
            n3=c.n3,
            euler_characteristic=c.euler_characteristic(),
        )

    if c.n3 == 0:
        return report("complex has no tetrahedra")

    for tid, cof in enumerate(c.tri_tets):
        if len(cof) != 2:
            return report(
                f"triangle {c.triangles[tid]} lies in {len(cof)} tetrahedra, expected 2"
            )

    # edge links: degree 2 everywhere holds once triangles pass, so a single
    # closed cycle is exactly connectivity of the link graph
    for eid, e in enumerate(c.edges):
        everts = set(e)
        link_verts = set()
        for tid in c.edge_tris[eid]:
            (w,) = set(c.triangles[tid]) - everts
            link_verts.add(w)
        adj: dict[int, list[int]] = {w: [] for w in link_verts}
        for sid in c.edge_tets[eid]:
            a, b = sorted(set(c.tets[sid]) - everts)
            adj[a].append(b)
            adj[b].append(a)
        start = min(link_verts)
        if len(_bfs_cover(adj, start)) != len(link_verts):
            return report(f"link of edge {e} is not a single closed cycle")

    for v in range(c.n0):
        if not c.vert_tets[v]:
            return report(f"vertex {v} lies in no tetrahedron")
        nbrs = set()
        for eid in c.vert_edges[v]:
            a, b = c.edges[eid]
            nbrs.add(b if a == v else a)
        n_lv = len(nbrs)
        n_le = len(c.vert_tris[v])
        n_lf = len(c.vert_tets[v])
        chi = n_lv - n_le + n_lf
        if chi != 2:
            return report(
                f"link of vertex {v} has Euler characteristic {chi}, expected 2"
            )
        adj = {w: [] for w in nbrs}
        for tid in c.vert_tris[v]:
            a, b = sorted(set(c.triangles[tid]) - {v})
            adj[a].append(b)
            adj[b].append(a)
        if len(_bfs_cover(adj, min(nbrs))) != n_lv:
            return report(f"link of vertex {v} is disconnected")

    vadj = {v: [] for v in range(c.n0)}
    for a, b in c.edges:
        vadj[a].append(b)
        vadj[b].append(a)
    if len(_bfs_cover(vadj, 0)) != c.n0:
        return report("complex is disconnected")

    return report(None)


def ensure_validated(c: Complex3) -> ValidationReport:
    """Validate once per complex (cached); raise NotValidated on failure."""
    rep = c._cache.get("validation")
    if rep is None:
        rep = validate_closed_manifold(c)
        c._cache["validation"] = rep
    if not rep.ok:
        raise NotValidated(rep.witness)
    return rep


# -- stars, links, bk -------------------------------------------------------


def star(c: Complex3, s):
    """Chain of all tetrahedra containing the simplex s (vertex tuple or id)."""
    from .chains import Chain

    if isinstance(s, int):
        s = (s,)
    verts = tuple(sorted(s))
    idx = c.simplex_id(verts)
    return Chain(3, frozenset(c.incident_tets(len(verts) - 1, idx)))


def link(c: Complex3, v: VertexId) -> set:
    """All simplices of the boundary of st(v) that do not contain v."""
    if not 0 <= v < c.n0:
        raise UnknownSimplex(f"vertex {v} not in complex")
    out = set()
    for eid in c.vert_edges[v]:
        a, b = c.edges[eid]
        out.add((b,) if a == v else (a,))
    for tid in c.vert_tris[v]:
        out.add(tuple(w for w in c.triangles[tid] if w != v))
    for sid in c.vert_tets[v]:
        out.add(tuple(w for w in c.tets[sid] if w != v))
    return out


def bk(c: Complex3, v: VertexId, sigma) -> set:
    """The three faces of the tetrahedron sigma that contain the vertex v."""
    t = tuple(sorted(sigma))
    if t not in c.tet_id:
        raise UnknownSimplex(f"tetrahedron {t} not in complex")
    if v not in t:
        raise InvalidParameter(f"vertex {v} is not a vertex of {t}")
    return {f for f in combinations(t, 3) if v in f}


def _bk_tri_ids(c: Complex3, v: int, sid: int):
    """Dense ids of the three faces of tet sid containing v, ascending."""
    return [tid for tid in c.tet_tris[sid] if v in c.triangles[tid]]


# -- barycentric subdivision -------------------------------------------------


class BarycentricComplex:
    """Barycentric subdivision of a base complex, with the derived tables.

    Vertices of the subdivision are the barycenters of base simplices, in
    dimension blocks: base vertices keep their ids, then edge, triangle and
    tetrahedron barycenters.  Subdivided k-simplices are flags of proper
    face inclusions; the tables map every base simplex to its subdivided
    chain and every l-simplex to its dual star chain of (3-l)-simplices.
    """

    def __init__(self, base: Complex3) -> None:
        self.base = base
        n0, n1, n2, n3 = base.n0, base.n1, base.n2, base.n3
        off_e, off_t, off_s = n0, n0 + n1, n0 + n1 + n2

        new_tets = []
        for sid, tet in enumerate(base.tets):
            bs = off_s + sid
            for perm in permutations(tet):
                eid = base.edge_id[tuple(sorted(perm[:2]))]
                tid = base.tri_id[tuple(sorted(perm[:3]))]
                new_tets.append((perm[0], off_e + eid, off_t + tid, bs))
        self.complex = Complex3(new_tets, n_vertices=off_s + n3)

        self._offsets = (0, off_e, off_t, off_s)
        vertex_base = []
        base_min = []
        for v in range(n0):
            vertex_base.append((0, v))
            base_min.append(v)
        for eid, e in enumerate(base.edges):
            vertex_base.append((1, eid))
            base_min.append(e[0])
        for tid, t in enumerate(base.triangles):
            vertex_base.append((2, tid))
            base_min.append(t[0])
        for sid, t in enumerate(base.tets):
            vertex_base.append((3, sid))
            base_min.append(t[0])
        self.vertex_base = tuple(vertex_base)
        self.base_min = tuple(base_min)

        sub = self.complex
        subdivided = {0: [(v,) for v in range(n0)]}
        subdivided[1] = [
            (sub.edge_id[(e[0], off_e + eid)], sub.edge_id[(e[1], off_e + eid)])
            for eid, e in enumerate(base.edges)
        ]
        subdivided[2] = [
            tuple(
                sub.tri_id[
                    (p[0], off_e + base.edge_id[tuple(sorted(p[:2]))], off_t + tid)
                ]
                for p in permutations(t)
            )
            for tid, t in enumerate(base.triangles)
        ]
        subdivided[3] = [
            tuple(
                sub.tet_id[
                    (
                        p[0],
                        off_e + base.edge_id[tuple(sorted(p[:2]))],
                        off_t + base.tri_id[tuple(sorted(p[:3]))],
                        off_s + sid,
                    )
                ]
                for p in permutations(t)
            )
            for sid, t in enumerate(base.tets)
        ]
        self._subdivided = subdivided

        bst = {3: [(off_s + sid,) for sid in range(n3)]}
        bst[2] = [
            tuple(sub.edge_id[(off_t + tid, off_s + sid)] for sid in base.tri_tets[tid])
            for tid in range(n2)
        ]
        bst[1] = [
            tuple(
                sub.tri_id[(off_e + eid, off_t + tid, off_s + sid)]
                for tid in base.edge_tris[eid]
                for sid in base.tri_tets[tid]
            )
            for eid in range(n1)
        ]
        bst[0] = [
            tuple(
                sub.tet_id[(v, off_e + eid, off_t + tid, off_s + sid)]
                for eid in base.vert_edges[v]
                for tid in base.edge_tris[eid]
                for sid in base.tri_tets[tid]
            )
            for v in range(n0)
        ]
        self._bst = bst

    def barycenter(self, dim: int, idx: int) -> int:
        """Subdivision vertex id of the barycenter of the given base simplex."""
        return self._offsets[dim] + idx

    def subdivided_ids(self, dim: int, idx: int):
        """Ids (in the subdivision) of the subdivided copies of a base simplex."""
        return self._subdivided[dim][idx]

    def bst_ids(self, dim: int, idx: int):
        """Ids of the barycentric-star simplices (dimension 3-dim) of a base simplex."""
        return self._bst[dim][idx]


def barycentric_subdivision(c: Complex3) -> BarycentricComplex:
    bc = c._cache.get("subdivision")
    if bc is None:
        bc = BarycentricComplex(c)
        c._cache["subdivision"] = bc
    return bc


# -- fixtures ---------------------------------------------------------------


def gen_s3() -> Complex3:
    """Boundary of the 4-simplex: the minimal triangulation of the 3-sphere."""
    return build_complex(list(combinations(range(5), 4)))


def gen_t3(q: int) -> Complex3:
    """Freudenthal triangulation of the periodic q*q*q grid (a 3-torus).

    Each unit cube splits into 6 tetrahedra along its main diagonal; vertex
    (x, y, z) gets index x + q*y + q*q*z.  q >= 3 is required: for q < 3
    opposite faces of a cube become identified and the result is not a
    simplicial complex.
    """
    if q < 3:
        raise InvalidParameter(f"gen_t3 requires q >= 3, got {q}")

    def vid(x: int, y: int, z: int) -> int:
        return (x % q) + q * (y % q) + q * q * (z % q)

    tets = []
    for z in range(q):
        for y in range(q):
            for x in range(q):
                for axes in permutations((0, 1, 2)):
                    cur = [x, y, z]
                    verts = [vid(*cur)]
                    for axis in axes:
                        cur[axis] += 1
                        verts.append(vid(*cur))
                    tets.append(tuple(verts))
    return build_complex(tets, n_vertices=q**3)


def rp3() -> Complex3:
    """The bundled triangulation of real projective 3-space.

    Shipped as a data file; see tools/make_rp3_fixture.py for how it was
    produced and verified.
    """
    from importlib import resources

    from .formats import parse_mesh_text

    text = resources.files("tetcycles.data").joinpath("rp3_tetmesh.txt").read_text()
    return parse_mesh_text(text)
