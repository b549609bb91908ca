"""Deterministic generators for test inputs."""

import tetcycles as tc


def t3_vertex(q, x, y, z):
    return (x % q) + q * (y % q) + q * q * (z % q)


def axis_loop(c, q, axis, at=(0, 0)):
    """1-cycle running once around one coordinate axis of gen_t3(q)."""
    pts = []
    for i in range(q):
        coord = list(at)
        coord.insert(axis, i)
        pts.append(t3_vertex(q, *coord))
    return tc.chain_of(c, 1, [(pts[i], pts[(i + 1) % q]) for i in range(q)])


def square_loop(c, q):
    """The same fixed 4-edge 1-cycle regardless of q."""
    corners = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]
    pts = [t3_vertex(q, *p) for p in corners]
    return tc.chain_of(c, 1, [(pts[i], pts[(i + 1) % 4]) for i in range(4)])


def random_cycle(rng, c, dim, bulk=20):
    """Random combination of basis representatives plus a random boundary."""
    basis = tc.homology_basis(c, dim)
    x = tc.Chain(dim)
    for rep in basis.representatives:
        if rng.random() < 0.5:
            x = x + rep
    upper = c.count(dim + 1)
    ids = rng.sample(range(upper), rng.randint(0, min(bulk, upper)))
    return x + tc.boundary(c, tc.Chain(dim + 1, ids))


def random_walk(rng, c, start, steps):
    verts = [start]
    for _ in range(steps):
        v = verts[-1]
        eid = rng.choice(c.vert_edges[v])
        a, b = c.edges[eid]
        verts.append(b if a == v else a)
    return verts


def walk_chain(c, verts):
    return tc.chain_of(c, 1, list(zip(verts, verts[1:])))
