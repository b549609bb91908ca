"""Intersection cocycles dual to cycles in a closed 3-manifold.

A 1-cycle x gets a 2-cochain J_x (values on triangles) and a 2-cycle gets a
1-cochain (values on edges); in both cases J_x counts mod-2 crossings with
a curve or surface that runs close to x, so evaluating J_x on a cycle of
complementary dimension gives the intersection number of the classes.

Both constructions only touch the stars of the vertices of x plus the
support of x, so their cost is independent of the mesh size for cycles of
bounded size.  A linear-algebra oracle independent of the constructions is
included for cross-checking.
"""

from __future__ import annotations

from collections import deque

from .chains import (
    Chain,
    Cochain,
    _bits_of,
    _ids_of,
    boundary,
    coarsen_chain,
    evaluate,
    is_boundary,
    is_cycle,
)
from .errors import DimensionMismatch, Infeasible, NotACycle
from .gf2 import Gf2Matrix, Gf2Span
from .mesh import Complex3, _bk_tri_ids, barycentric_subdivision, ensure_validated


def is_cocycle(c, j: Cochain) -> bool:
    if j.dim == 3:
        return True
    from .chains import coboundary

    return not coboundary(c, j).ids


def cohomologous(c, j1: Cochain, j2: Cochain) -> bool:
    """Whether j1 + j2 is a coboundary."""
    if j1.dim != j2.dim:
        raise DimensionMismatch(
            f"cannot compare a {j1.dim}-cochain with a {j2.dim}-cochain"
        )
    l = j1.dim
    diff = (j1 + j2).bits()
    if l == 0:
        return diff == 0
    key = ("coboundary_span", l)
    sp = c._cache.get(key)
    if sp is None:
        sp = Gf2Span()
        for f in range(c.count(l - 1)):
            sp.add(_bits_of(c.cofacet_ids(l - 1, f)))
        c._cache[key] = sp
    return sp.contains(diff)


# -- closed-walk decomposition ----------------------------------------------


def _closed_walks(c, edge_ids) -> list[list[int]]:
    """Split a 1-cycle into closed vertex walks covering each edge once.

    Every vertex of a 1-cycle has even degree, so each connected component
    carries one closed walk; ties always break toward the smallest
    neighbor, which makes the decomposition deterministic.
    """
    adj: dict[int, list[tuple[int, int]]] = {}
    for eid in sorted(edge_ids):
        u, v = c.edges[eid]
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))
    for v, lst in adj.items():
        if len(lst) % 2:
            raise NotACycle(f"vertex {v} has odd degree in the 1-chain")
        lst.sort(reverse=True)  # pop smallest neighbor first

    used: set[int] = set()
    walks = []
    for start in sorted(adj):
        if all(eid in used for _, eid in adj[start]):
            continue
        stack = [start]
        walk: list[int] = []
        while stack:
            v = stack[-1]
            lst = adj[v]
            while lst and lst[-1][1] in used:
                lst.pop()
            if lst:
                w, eid = lst.pop()
                used.add(eid)
                stack.append(w)
            else:
                walk.append(stack.pop())
        walk.reverse()
        if len(walk) > 1:
            walks.append(walk)
    return walks


# -- 1-cycle -> 2-cochain ------------------------------------------------


def _star_path_triangles(c, v: int, s_from: int, s_to: int) -> list[int]:
    """Triangles crossed on a shortest tet path inside st(v).

    Adjacent tets of the star share a triangle containing v; the star is
    connected for a validated complex, so BFS always reaches s_to.
    """
    if s_from == s_to:
        return []
    prev = {s_from: (None, None)}
    queue = deque([s_from])
    while queue:
        s = queue.popleft()
        for tid in _bk_tri_ids(c, v, s):
            for s2 in c.tri_tets[tid]:
                if s2 != s and s2 not in prev:
                    prev[s2] = (s, tid)
                    if s2 == s_to:
                        queue.clear()
                        break
                    queue.append(s2)
            else:
                continue
            break
    crossed = []
    s = s_to
    while prev[s][0] is not None:
        s, tid = prev[s]
        crossed.append(tid)
    return crossed


def cocycle_from_1cycle(c: Complex3, x: Chain) -> Cochain:
    """Triangle cochain counting crossings with a curve pushed off x.

    The cycle is split into closed walks; each walk is traced through one
    tetrahedron per edge (the smallest incident one) and, at each vertex,
    through a tet path inside that vertex's star.  Every triangle crossed
    flips its cochain value.
    """
    ensure_validated(c)
    if x.dim != 1:
        raise DimensionMismatch(f"expected a 1-chain, got dimension {x.dim}")
    out: set[int] = set()
    for walk in _closed_walks(c, x.ids):
        m = len(walk) - 1
        walk_edges = [
            c.edge_id[(min(walk[i], walk[i + 1]), max(walk[i], walk[i + 1]))]
            for i in range(m)
        ]
        tet_of = [c.edge_tets[eid][0] for eid in walk_edges]
        for i in range(m):
            v = walk[i]
            for tid in _star_path_triangles(c, v, tet_of[i - 1], tet_of[i]):
                out ^= {tid}
    return Cochain(2, out)


# -- 2-cycle -> 1-cochain ------------------------------------------------


def star_labels(c, v: int, x_ids) -> dict[int, int]:
    """Crossing parity from the smallest tet of st(v) to every other tet.

    x_ids is the triangle id set of a 2-cycle.  Flood fill over the star;
    crossing a triangle of the cycle flips the label.  Labels are well
    defined because around each edge of the star the cycle meets an even
    number of the surrounding triangles.
    """
    st = c.vert_tets[v]
    s0 = st[0]
    lab = {s0: 0}
    queue = deque([s0])
    while queue:
        s = queue.popleft()
        for tid in _bk_tri_ids(c, v, s):
            cross = 1 if tid in x_ids else 0
            for s2 in c.tri_tets[tid]:
                if s2 != s and s2 not in lab:
                    lab[s2] = lab[s] ^ cross
                    queue.append(s2)
    return lab


def cocycle_from_2cycle(c: Complex3, x: Chain) -> Cochain:
    """Edge cochain counting crossings with a surface pushed off x.

    For each vertex v of the cycle, a parity label on the tets of st(v)
    says on which side of the pushed-off surface the tet sits.  An edge uv
    evaluates to the parity difference of its endpoints' labels at any
    shared tet; vertices not on the cycle have all labels zero.
    """
    ensure_validated(c)
    if x.dim != 2:
        raise DimensionMismatch(f"expected a 2-chain, got dimension {x.dim}")
    if boundary(c, x).ids:
        raise NotACycle("the 2-chain has nonzero boundary")
    verts = sorted({v for tid in x.ids for v in c.triangles[tid]})
    labels = {v: star_labels(c, v, x.ids) for v in verts}
    out: set[int] = set()
    seen: set[int] = set()
    for v in verts:
        for eid in c.vert_edges[v]:
            if eid in seen:
                continue
            seen.add(eid)
            u, w = c.edges[eid]
            sigma = c.edge_tets[eid][0]
            lu = labels[u][sigma] if u in labels else 0
            lw = labels[w][sigma] if w in labels else 0
            if lu ^ lw:
                out.add(eid)
    return Cochain(1, out)


def intersection_cocycle(c: Complex3, x: Chain) -> Cochain:
    """Dispatch on the cycle dimension (1 or 2)."""
    if x.dim == 1:
        if boundary(c, x).ids:
            raise NotACycle("the 1-chain has nonzero boundary")
        return cocycle_from_1cycle(c, x)
    if x.dim == 2:
        return cocycle_from_2cycle(c, x)
    raise DimensionMismatch(f"no intersection cocycle for {x.dim}-cycles")


def intersection_number(c: Complex3, x: Chain, z: Chain) -> int:
    """Mod-2 intersection pairing of a 1-cycle and a 2-cycle."""
    if {x.dim, z.dim} != {1, 2}:
        raise DimensionMismatch(
            f"intersection pairing needs dimensions 1 and 2, got {x.dim} and {z.dim}"
        )
    one, two = (x, z) if x.dim == 1 else (z, x)
    return evaluate(intersection_cocycle(c, one), two)


# -- dual realization ---------------------------------------------------


def dual_star_chain(bc, j: Cochain) -> Chain:
    """Chain in the subdivision made of the dual stars of the support of j.

    The dual star of an l-simplex is the set of (3-l)-simplices of the
    subdivision whose flags start at that simplex; for a cocycle the result
    is a cycle realizing the dual homology class.
    """
    ids: set[int] = set()
    for idx in j.ids:
        ids.update(bc.bst_ids(j.dim, idx))
    return Chain(3 - j.dim, ids)


def realizes_same_class(c: Complex3, x: Chain) -> bool:
    """Check the duality identity on x: the realized dual of the dual of x
    is homologous to x itself."""
    bc = barycentric_subdivision(c)
    j = intersection_cocycle(c, x)
    realized = dual_star_chain(bc, j)
    if not is_cycle(bc.complex, realized):
        return False
    return is_boundary(c, coarsen_chain(bc, realized) + x)


# -- linear-algebra oracle ----------------------------------------------


def oracle_cocycle(c: Complex3, x: Chain) -> Cochain:
    """Solve for a dual cocycle directly, without the crossing constructions.

    Unknowns are a cochain J on the (3-m)-simplices plus a bounding chain;
    the constraints say J is a cocycle and that its realized dual star
    chain, pushed back to the base complex, is homologous to x.  Any
    solution is cohomologous to the constructed cocycle, which makes this
    an independent ground truth.
    """
    ensure_validated(c)
    if x.dim not in (1, 2):
        raise DimensionMismatch(f"no dual cocycle for {x.dim}-chains")
    if not is_cycle(c, x):
        raise NotACycle("oracle input must be a cycle")
    bc = barycentric_subdivision(c)
    m = x.dim
    l = 3 - m
    nl = c.count(l)
    nb = c.count(m + 1)

    rows = []
    for s in range(c.count(l + 1)):
        rows.append(_bits_of(c.facet_ids(l + 1, s)))
    n_cocycle_rows = len(rows)

    real_rows = [0] * c.count(m)
    for sigma in range(nl):
        mapped = coarsen_chain(bc, Chain(m, bc.bst_ids(l, sigma)))
        for tau in mapped.ids:
            real_rows[tau] |= 1 << sigma
    for rho in range(nb):
        for tau in c.facet_ids(m + 1, rho):
            real_rows[tau] |= 1 << (nl + rho)
    rows.extend(real_rows)

    rhs = 0
    for tau in x.ids:
        rhs |= 1 << (n_cocycle_rows + tau)

    sol = Gf2Matrix(rows, nl + nb).solve(rhs)
    if sol is None:
        raise Infeasible("no cocycle realizes the dual class of the given cycle")
    return Cochain(l, _ids_of(sol & ((1 << nl) - 1)))
