"""Acceptance suite: one test per criterion, one pass/fail line each.

Stated runtime budgets are asserted inside the tests that carry them.
Subdivision-level boundary membership is decided through the pushdown chain
map (see coarsen_chain), which preserves and reflects bounding; the small
fixtures additionally run the direct subdivision-level test to cross-check
that equivalence.
"""

import math
import random
import statistics
import subprocess
import sys
import time

import pytest

import tetcycles as tc
from tetcycles.chains import Chain
from helpers import random_cycle, random_walk, square_loop, t3_vertex, walk_chain


def test_criterion_1_intersection_numbers_match_oracle(s3, t3, t4, rp3c):
    start = time.perf_counter()
    for c in (s3, t3, t4, rp3c):
        h1 = tc.homology_basis(c, 1)
        h2 = tc.homology_basis(c, 2)
        for a in h1.representatives:
            ja = tc.cocycle_from_1cycle(c, a)
            ja_oracle = tc.oracle_cocycle(c, a)
            for b in h2.representatives:
                assert tc.evaluate(ja, b) == tc.evaluate(ja_oracle, b)
        for b in h2.representatives:
            jb = tc.cocycle_from_2cycle(c, b)
            jb_oracle = tc.oracle_cocycle(c, b)
            for a in h1.representatives:
                assert tc.evaluate(jb, a) == tc.evaluate(jb_oracle, a)
                assert tc.evaluate(jb, a) == tc.evaluate(
                    tc.cocycle_from_1cycle(c, a), b
                )
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"criterion 1 took {elapsed:.1f}s, budget 60s"
    print("criterion 1 (basis intersection numbers match oracle): PASS")


def test_criterion_2_cocycle_and_dual_class(s3, t3, t4, rp3c):
    rng = random.Random(2025)
    for c in (s3, t3, t4, rp3c):
        bc = tc.barycentric_subdivision(c)
        direct = c.n3 <= 1000  # cross-check in the subdivision where affordable
        for dim in (1, 2):
            for _ in range(50):
                x = random_cycle(rng, c, dim)
                j = tc.intersection_cocycle(c, x)
                assert not tc.coboundary(c, j).ids
                z = tc.subdivide_chain(bc, x) + tc.dual_star_chain(bc, j)
                assert tc.is_cycle(bc.complex, z)
                assert tc.is_boundary(c, tc.coarsen_chain(bc, z))
                if direct:
                    assert tc.is_boundary(bc.complex, z)
    print("criterion 2 (dual cocycles: closed, and realize the class): PASS")


def test_criterion_3_evaluation_identity(s3, t3, t4, rp3c):
    rng = random.Random(3025)
    for c in (s3, t3, t4, rp3c):
        for i in range(50):
            m = 1 + i % 2
            x = random_cycle(rng, c, m, bulk=10)
            y = random_cycle(rng, c, 3 - m, bulk=10)
            j = tc.intersection_cocycle(c, x)
            assert tc.evaluate(j, y) == tc.evaluate(tc.oracle_cocycle(c, x), y)
        for i in range(50):
            m = 1 + i % 2
            j = tc.intersection_cocycle(c, random_cycle(rng, c, m, bulk=10))
            upper = c.count(j.dim + 1)
            filler = Chain(j.dim + 1, rng.sample(range(upper), min(15, upper)))
            assert tc.evaluate(j, tc.boundary(c, filler)) == 0
    print("criterion 3 (evaluation matches oracle; boundaries evaluate to 0): PASS")


def test_criterion_4_star_labels_well_defined(t3):
    rng = random.Random(4025)
    cycles = list(tc.homology_basis(t3, 2).representatives)
    cycles += [random_cycle(rng, t3, 2) for _ in range(2)]
    for x in cycles:
        labels = {v: tc.star_labels(t3, v, x.ids) for v in range(t3.n0)}
        for eid, (u, v) in enumerate(t3.edges):
            vals = {labels[u][sid] ^ labels[v][sid] for sid in t3.edge_tets[eid]}
            assert len(vals) == 1, f"edge {(u, v)} sees inconsistent labels"
    print("criterion 4 (edge values independent of the shared tet): PASS")


def test_criterion_5_known_topology(s3, t3, t4, rp3c):
    from tetcycles.gf2 import Gf2Matrix

    assert tc.betti_numbers(s3) == (1, 0, 0, 1)
    assert tc.betti_numbers(t3) == (1, 3, 3, 1)
    assert tc.betti_numbers(t4) == (1, 3, 3, 1)
    assert tc.betti_numbers(rp3c) == (1, 1, 1, 1)
    for c in (s3, t3, t4, rp3c):
        h1 = tc.homology_basis(c, 1)
        h2 = tc.homology_basis(c, 2)
        assert h1.betti == h2.betti
        rows = []
        for a in h1.representatives:
            j = tc.cocycle_from_1cycle(c, a)
            rows.append(
                sum(tc.evaluate(j, b) << k for k, b in enumerate(h2.representatives))
            )
        Gf2Matrix(rows, h1.betti).inverse()  # raises SingularPairing if degenerate
    print("criterion 5 (Betti numbers and nondegenerate pairing): PASS")


def test_criterion_6_scaling():
    qs = [4, 5, 6, 8]
    complexes = {}
    for q in qs:
        c = tc.gen_t3(q)
        tc.ensure_validated(c)
        complexes[q] = c

    def median_time(fn, reps=50):
        runs = []
        for _ in range(5):
            t0 = time.perf_counter()
            for _ in range(reps):
                fn()
            runs.append((time.perf_counter() - t0) / reps)
        return max(statistics.median(runs), 1e-7)

    times = {1: {}, 2: {}}
    for q in qs:
        c = complexes[q]
        loop = square_loop(c, q)
        surf = tc.boundary(c, Chain(3, {0}))
        tc.cocycle_from_1cycle(c, loop)  # warm per-complex caches
        tc.cocycle_from_2cycle(c, surf)
        times[1][q] = median_time(lambda c=c, x=loop: tc.cocycle_from_1cycle(c, x))
        times[2][q] = median_time(lambda c=c, x=surf: tc.cocycle_from_2cycle(c, x))

    for which, ts in times.items():
        for qa, qb in zip(qs, qs[1:]):
            doublings = math.log2(complexes[qb].n3 / complexes[qa].n3)
            factor = (ts[qb] / ts[qa]) ** (1.0 / doublings)
            assert factor <= 2.6, (
                f"construction {which}: time factor per doubling {factor:.2f} "
                f"from q={qa} to q={qb} (times {ts[qa]:.2e}s -> {ts[qb]:.2e}s)"
            )
    print("criterion 6 (wall time per size doubling grows by <= 2.6): PASS")


def _exhaustive_min_weight(c, start, target, ychain, cap):
    """Smallest walk length (unit weights) homologous to ychain, up to cap."""
    frontier = {(start, Chain(1))}
    for depth in range(cap + 1):
        for v, chain in sorted(frontier, key=lambda s: (s[0], sorted(s[1].ids))):
            if v == target and tc.is_boundary(c, chain + ychain):
                return depth
        nxt = set()
        for v, chain in frontier:
            for eid in c.vert_edges[v]:
                a, b = c.edges[eid]
                nxt.add((b if a == v else a, chain + Chain(1, {eid})))
        frontier = nxt
    return None


def test_criterion_7_covering_suite(t3):
    start_time = time.perf_counter()
    rng = random.Random(7025)
    isys = tc.build_index_system(t3)

    # sheet reached by a lifted walk equals the walk's index vector
    for _ in range(100):
        walk = random_walk(rng, t3, rng.randrange(t3.n0), rng.randint(0, 12))
        lifted = tc.lift_path(isys, walk)
        mask = 0
        for i, j in enumerate(isys.cocycles):
            mask |= tc.evaluate(j, walk_chain(t3, walk)) << i
        assert lifted[0] == (walk[0], 0)
        assert lifted[-1] == (walk[-1], mask)

    # index comparison agrees with the direct linear-algebra boundary test
    for _ in range(100):
        base = random_walk(rng, t3, rng.randrange(t3.n0), rng.randint(1, 8))
        y = walk_chain(t3, base)
        z = y + random_cycle(rng, t3, 1, bulk=8)
        assert tc.chains_homologous(isys, y, z) == tc.is_boundary(t3, y + z)

    # minimum-weight homologous path matches exhaustive enumeration
    for _ in range(20):
        walk = random_walk(rng, t3, rng.randrange(t3.n0), rng.randint(1, 4))
        verts, weight = tc.min_homologous_path(t3, walk)
        steps = len(verts) - 1
        assert weight == float(steps)
        assert verts[0] == walk[0] and verts[-1] == walk[-1]
        ychain = walk_chain(t3, walk)
        assert tc.is_boundary(t3, walk_chain(t3, verts) + ychain)
        assert _exhaustive_min_weight(t3, walk[0], walk[-1], ychain, steps) == steps

    # budget below the reachable state count triggers the guard; the full
    # state count (2^rank * n0) can never be exceeded
    loop = [t3_vertex(3, i, 0, 0) for i in range(3)] + [0]
    with pytest.raises(tc.RankGuardExceeded):
        tc.min_homologous_path(t3, loop, max_nodes=2)
    verts, weight = tc.min_homologous_path(t3, loop, max_nodes=(1 << isys.rank) * t3.n0)
    assert weight == 3.0

    elapsed = time.perf_counter() - start_time
    assert elapsed < 120.0, f"criterion 7 took {elapsed:.1f}s, budget 120s"
    print("criterion 7 (covering: lifts, homology testing, shortest paths): PASS")


def test_criterion_8_cli_determinism(tmp_path):
    c = tc.gen_t3(3)
    mesh = tmp_path / "t3.txt"
    mesh.write_text(tc.write_mesh_text(c))
    loop = tmp_path / "loop.txt"
    loop.write_text("chain 1 3\n0 1\n0 2\n1 2\n")
    other = tmp_path / "other.txt"
    other.write_text("chain 1 3\n3 4\n3 5\n4 5\n")
    surf = tmp_path / "surf.txt"
    surf.write_text(
        tc.write_chain_text(tc.homology_basis(c, 2).representatives[0], c)
    )
    pathf = tmp_path / "path.txt"
    pathf.write_text("path 3\n0\n1\n2\n0\n")
    weights = tmp_path / "w.txt"
    weights.write_text("edge 0 1 2.5\n")

    commands = [
        ["gen", "t3", "--q", "3"],
        ["gen", "rp3"],
        ["validate", str(mesh)],
        ["homology", str(mesh), "--dim", "1"],
        ["cocycle", str(mesh), str(loop)],
        ["cocycle", str(mesh), str(loop), "--method", "oracle"],
        ["intersect", str(mesh), str(loop), str(surf)],
        ["index", str(mesh), str(loop)],
        ["homologous", str(mesh), str(loop), str(other)],
        ["minpath", str(mesh), str(pathf), "--weights", str(weights)],
    ]
    for cmd in commands:
        argv = [sys.executable, "-m", "tetcycles.cli", *cmd]
        first = subprocess.run(argv, capture_output=True)
        second = subprocess.run(argv, capture_output=True)
        assert first.returncode == 0, (cmd, first.stderr)
        assert second.returncode == 0
        assert first.stdout == second.stdout, f"nondeterministic stdout: {cmd}"
        assert first.stdout
    print("criterion 8 (byte-identical CLI stdout across runs): PASS")
