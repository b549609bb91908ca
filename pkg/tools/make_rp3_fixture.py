"""Generate the bundled real projective 3-space mesh.

Construction: the boundary of the 4-dimensional cross-polytope (16 sign
tetrahedra on vertices +-e_i) is a 3-sphere on which the antipodal map acts
freely; no simplex contains an antipodal vertex pair, and inside a flag of
faces all signs agree, so the antipodal map also acts freely and without
adjacencies on the barycentric subdivision.  The quotient of that
subdivision is therefore a genuine simplicial complex triangulating real
projective 3-space (40 vertices, 192 tetrahedra).

The quotient is then shrunk by bistellar moves (which preserve the PL
homeomorphism type): 4-1 moves remove degree-4 vertices, 3-2 moves remove
degree-3 edges, and seeded random 2-3 moves escape local minima.  The best
complex found is validated, checked for the expected mod-2 Betti numbers
(1, 1, 1, 1), and its 2-fold cover is checked to be a 3-sphere before the
mesh is written to src/tetcycles/data/rp3_tetmesh.txt.

Run from the repository root:  python3 tools/make_rp3_fixture.py
"""

import random
import sys
from itertools import combinations, product
from pathlib import Path

from tetcycles import (
    barycentric_subdivision,
    betti_numbers,
    build_complex,
    build_index_system,
    covering_complex,
    validate_closed_manifold,
    write_mesh_text,
)

SEED = 20250825
TARGET = (11, 40)  # smallest known vertex/tet counts for this manifold
MAX_MOVES = 200_000


def quotient_of_subdivided_cross_polytope():
    def anti(v):
        return v + 4 if v < 4 else v - 4

    tets16 = [tuple(sorted(c)) for c in product(*[(i, i + 4) for i in range(4)])]
    sphere = build_complex(tets16, n_vertices=8)
    assert validate_closed_manifold(sphere).ok
    bc = barycentric_subdivision(sphere)
    sub = bc.complex

    orbit_rep = []
    for vid in range(sub.n0):
        dim, idx = bc.vertex_base[vid]
        verts = sphere.simplex_vertices(dim, idx)
        averts = tuple(sorted(anti(v) for v in verts))
        avid = bc.barycenter(dim, sphere.simplex_id(averts))
        assert avid != vid
        orbit_rep.append(min(vid, avid))

    reps = sorted(set(orbit_rep))
    orbit_id = {rep: i for i, rep in enumerate(reps)}
    assert len(reps) == sub.n0 // 2

    seen = {}
    for tet in sub.tets:
        q = tuple(sorted(orbit_id[orbit_rep[v]] for v in tet))
        assert len(set(q)) == 4, "antipodal action identified vertices of a tet"
        seen[q] = seen.get(q, 0) + 1
    assert all(n == 2 for n in seen.values()), "quotient is not exactly 2-to-1"
    return sorted(seen)


def triangles_of(tets):
    tris = set()
    for t in tets:
        tris.update(combinations(t, 3))
    return tris


def edge_cofacets(tets):
    cof = {}
    for t in tets:
        for e in combinations(t, 2):
            cof.setdefault(e, []).append(t)
    return cof


def vertex_cofacets(tets):
    cof = {}
    for t in tets:
        for v in t:
            cof.setdefault(v, []).append(t)
    return cof


def legal_32_moves(tets, tris, ecof):
    """Edges in exactly 3 tets whose opposite triangle is not yet present."""
    moves = []
    for e, cof in ecof.items():
        if len(cof) != 3:
            continue
        others = set()
        for t in cof:
            others.update(t)
        others -= set(e)
        if len(others) != 3:
            continue
        f = tuple(sorted(others))
        if f not in tris:
            moves.append((e, cof, f))
    return moves


def legal_41_moves(tets, vcof):
    """Vertices in exactly 4 tets whose opposite tet is not yet present."""
    moves = []
    for v, cof in vcof.items():
        if len(cof) != 4:
            continue
        others = set()
        for t in cof:
            others.update(t)
        others.discard(v)
        if len(others) != 4:
            continue
        new = tuple(sorted(others))
        if new not in tets:
            moves.append((v, cof, new))
    return moves


def legal_23_moves(tets, ecof):
    """Triangles whose two apexes are not yet joined by an edge."""
    tri_cof = {}
    for t in tets:
        for f in combinations(t, 3):
            tri_cof.setdefault(f, []).append(t)
    moves = []
    for f, cof in tri_cof.items():
        assert len(cof) == 2
        (u,) = set(cof[0]) - set(f)
        (v,) = set(cof[1]) - set(f)
        e = (u, v) if u < v else (v, u)
        if e not in ecof:
            moves.append((f, cof, e))
    return moves


def apply_32(tets, move):
    e, cof, f = move
    for t in cof:
        tets.remove(t)
    u, v = e
    tets.add(tuple(sorted((u,) + f)))
    tets.add(tuple(sorted((v,) + f)))


def apply_41(tets, move):
    v, cof, new = move
    for t in cof:
        tets.remove(t)
    tets.add(new)


def apply_23(tets, move):
    f, cof, e = move
    for t in cof:
        tets.remove(t)
    for pair in combinations(f, 2):
        tets.add(tuple(sorted(e + pair)))


def simplify(tets, rng):
    tets = set(tets)
    best = set(tets)

    def score(ts):
        return (len({v for t in ts for v in t}), len(ts))

    moves_done = 0
    heat = 0
    while moves_done < MAX_MOVES and score(best) > TARGET:
        tris = triangles_of(tets)
        ecof = edge_cofacets(tets)
        vcof = vertex_cofacets(tets)
        down41 = legal_41_moves(tets, vcof)
        down32 = legal_32_moves(tets, tris, ecof)
        if heat > 0 or (not down41 and not down32):
            up = legal_23_moves(tets, ecof)
            apply_23(tets, rng.choice(up))
            heat = heat - 1 if heat > 0 else rng.randint(0, 2)
        elif down41:
            apply_41(tets, rng.choice(down41))
        else:
            apply_32(tets, rng.choice(down32))
        moves_done += 1
        if score(tets) < score(best):
            best = set(tets)
    return sorted(best), moves_done


def renumber(tets):
    verts = sorted({v for t in tets for v in t})
    new = {v: i for i, v in enumerate(verts)}
    return sorted(tuple(sorted(new[v] for v in t)) for t in tets)


def main():
    quotient = quotient_of_subdivided_cross_polytope()
    c = build_complex(quotient)
    assert validate_closed_manifold(c).ok
    assert betti_numbers(c) == (1, 1, 1, 1)
    print(f"quotient: {c}")

    rng = random.Random(SEED)
    tets, moves = simplify(quotient, rng)
    tets = renumber(tets)
    c = build_complex(tets)
    rep = validate_closed_manifold(c)
    assert rep.ok, rep.witness
    assert betti_numbers(c) == (1, 1, 1, 1)
    cover = covering_complex(build_index_system(c))
    assert validate_closed_manifold(cover).ok
    assert betti_numbers(cover) == (1, 0, 0, 1), "2-fold cover is not a 3-sphere"
    print(f"simplified after {moves} moves: {c}; double cover is a 3-sphere")

    out = Path(__file__).resolve().parent.parent / "src/tetcycles/data/rp3_tetmesh.txt"
    header = (
        "# real projective 3-space\n"
        "# built by tools/make_rp3_fixture.py: antipodal quotient of the\n"
        "# subdivided cross-polytope boundary, shrunk by bistellar moves\n"
        f"# (seed {SEED}); closed-manifold checks, mod-2 Betti numbers\n"
        "# (1, 1, 1, 1) and the 3-sphere double cover were verified\n"
    )
    out.write_text(header + write_mesh_text(c))
    print(f"wrote {out}")


if __name__ == "__main__":
    sys.exit(main())
