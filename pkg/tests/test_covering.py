import random

import pytest

import tetcycles as tc
from tetcycles import covering
from tetcycles.chains import Chain
from tetcycles.errors import (
    BoundaryMismatch,
    InvalidParameter,
    NotACycle,
    NotAPath,
    RankGuardExceeded,
    UnknownSimplex,
)
from helpers import axis_loop, random_walk, t3_vertex, walk_chain


def test_index_system_rank(s3, t3, rp3c):
    assert tc.build_index_system(s3).rank == 0
    assert tc.build_index_system(t3).rank == 3
    assert tc.build_index_system(rp3c).rank == 1
    assert tc.build_index_system(t3) is tc.build_index_system(t3)  # cached


def test_axis_loop_indices(t3):
    isys = tc.build_index_system(t3)
    masks = [tc.index_of_chain(isys, axis_loop(t3, 3, a)) for a in range(3)]
    assert sorted(masks) == [1, 2, 4]
    # translating a loop does not change its index
    for a in range(3):
        assert tc.index_of_chain(isys, axis_loop(t3, 3, a, at=(1, 2))) == masks[a]


def test_index_requires_cycle(t3):
    isys = tc.build_index_system(t3)
    with pytest.raises(NotACycle):
        tc.index_of_chain(isys, Chain(1, {0}))


def test_chains_homologous_cycles(t3):
    isys = tc.build_index_system(t3)
    x = axis_loop(t3, 3, 0)
    y = axis_loop(t3, 3, 0, at=(2, 1))
    assert tc.chains_homologous(isys, x, y)
    assert not tc.chains_homologous(isys, x, axis_loop(t3, 3, 1))
    assert tc.is_boundary(t3, x + y)


def test_chains_homologous_open_chains(t3):
    rng = random.Random(31)
    isys = tc.build_index_system(t3)
    for _ in range(20):
        start = rng.randrange(t3.n0)
        w1 = random_walk(rng, t3, start, rng.randint(1, 6))
        y = walk_chain(t3, w1)
        z = y + random_cycle_1(rng, t3)
        assert tc.chains_homologous(isys, y, z) == tc.is_boundary(t3, y + z)
    with pytest.raises(BoundaryMismatch):
        tc.chains_homologous(isys, Chain(1, {0}), Chain(1, {1}))


def random_cycle_1(rng, c):
    basis = tc.homology_basis(c, 1)
    x = Chain(1)
    for rep in basis.representatives:
        if rng.random() < 0.5:
            x = x + rep
    return x + tc.boundary(c, Chain(2, rng.sample(range(c.n2), 10)))


def test_dual_basis(t3, rp3c):
    for c in (t3, rp3c):
        isys = tc.build_index_system(c)
        db = tc.dual_basis(isys)
        for j, y in enumerate(db.cycles):
            assert tc.index_of_chain(isys, y) == 1 << j


def test_lift_path(t3):
    isys = tc.build_index_system(t3)
    pts = [t3_vertex(3, i, 0, 0) for i in range(3)]
    lifted = tc.lift_path(isys, pts + [pts[0]])
    assert lifted[0] == (pts[0], 0)
    assert lifted[-1][0] == pts[0]
    assert lifted[-1][1] == tc.index_of_chain(isys, axis_loop(t3, 3, 0))
    with pytest.raises(NotAPath):
        tc.lift_path(isys, [])
    with pytest.raises(NotAPath):
        tc.lift_path(isys, [0, 99])
    with pytest.raises(NotAPath):
        tc.lift_path(isys, [0, 0])


def test_covering_scheme_counts(t3, rp3c):
    for c, r in ((t3, 3), (rp3c, 1)):
        isys = tc.build_index_system(c)
        for dim in range(4):
            lifted = tc.covering_scheme_simplices(isys, dim)
            assert len(lifted) == c.count(dim) * (1 << r)
            assert len(set(lifted)) == len(lifted)


def test_covering_complex_is_manifold(t3):
    isys = tc.build_index_system(t3)
    cov = tc.covering_complex(isys)
    assert cov.n3 == t3.n3 * 8 and cov.n0 == t3.n0 * 8
    assert tc.validate_closed_manifold(cov).ok


def test_rp3_double_cover_is_sphere(rp3c):
    cov = tc.covering_complex(tc.build_index_system(rp3c))
    assert tc.validate_closed_manifold(cov).ok
    assert tc.betti_numbers(cov) == (1, 0, 0, 1)


def test_weight_function(t3):
    wf = covering.WeightFunction(t3, {(0, 1): 2.5})
    assert wf(t3.edge_id[(0, 1)]) == 2.5
    assert wf(t3.edge_id[(0, 2)]) == 1.0
    with pytest.raises(InvalidParameter):
        covering.WeightFunction(t3, {(0, 1): -1.0})
    with pytest.raises(UnknownSimplex):
        covering.WeightFunction(t3, {(0, 5): 1.0})


def test_min_homologous_path_basics(t3):
    pts = [t3_vertex(3, i, 0, 0) for i in range(3)]
    loop = pts + [pts[0]]
    verts, w = tc.min_homologous_path(t3, loop)
    assert w == 3.0
    assert verts[0] == loop[0] and verts[-1] == loop[-1]
    assert tc.is_boundary(t3, walk_chain(t3, verts) + walk_chain(t3, loop))
    # a single vertex with trivial class stays put
    verts, w = tc.min_homologous_path(t3, [5])
    assert (verts, w) == ([5], 0.0)


def test_min_homologous_path_respects_weights(t3):
    pts = [t3_vertex(3, i, 0, 0) for i in range(3)]
    loop = pts + [pts[0]]
    table = {(pts[0], pts[1]): 10.0}
    verts, w = tc.min_homologous_path(t3, loop, weights=table)
    assert w == 4.0  # routes around the expensive edge
    assert tc.is_boundary(t3, walk_chain(t3, verts) + walk_chain(t3, loop))


def test_min_homologous_path_guard(t3):
    pts = [t3_vertex(3, i, 0, 0) for i in range(3)]
    loop = pts + [pts[0]]
    with pytest.raises(RankGuardExceeded):
        tc.min_homologous_path(t3, loop, max_nodes=1)
    # the state space has exactly 2^rank * n0 states, so that budget
    # can never be exceeded
    verts, w = tc.min_homologous_path(t3, loop, max_nodes=8 * t3.n0)
    assert w == 3.0


def test_min_homologous_path_input_checks(t3):
    with pytest.raises(NotAPath):
        tc.min_homologous_path(t3, [])
    with pytest.raises(NotAPath):
        tc.min_homologous_path(t3, [0, 99])
