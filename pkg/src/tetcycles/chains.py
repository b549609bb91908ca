"""Mod-2 chains, cochains, boundary operators and homology bases.

A k-chain is a set of dense k-simplex ids with symmetric-difference
addition; a k-cochain is stored the same way (its support).  Linear algebra
is done on int bitsets via the gf2 module.  Spans and bases are cached on
the complex, so repeated membership tests cost one reduction each.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NotACycle
from .gf2 import Gf2Matrix, Gf2Span, lowest_bit


def _bits_of(ids) -> int:
    b = 0
    for i in ids:
        b |= 1 << i
    return b


def _ids_of(bits: int) -> list[int]:
    out = []
    while bits:
        out.append(lowest_bit(bits))
        bits &= bits - 1
    return out


class Chain:
    """A set of k-simplex ids; + is mod-2 addition."""

    __slots__ = ("dim", "ids")

    def __init__(self, dim: int, ids=()) -> None:
        self.dim = dim
        self.ids = frozenset(ids)

    def __add__(self, other: "Chain") -> "Chain":
        if self.dim != other.dim:
            raise DimensionMismatch(
                f"cannot add a {self.dim}-chain and a {other.dim}-chain"
            )
        return Chain(self.dim, self.ids ^ other.ids)

    __xor__ = __add__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chain)
            and self.dim == other.dim
            and self.ids == other.ids
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.ids))

    def __len__(self) -> int:
        return len(self.ids)

    def __bool__(self) -> bool:
        return bool(self.ids)

    def bits(self) -> int:
        return _bits_of(self.ids)

    def __repr__(self) -> str:
        return f"Chain(dim={self.dim}, size={len(self.ids)})"


class Cochain:
    """A k-cochain, stored as the set of k-simplex ids where it equals 1."""

    __slots__ = ("dim", "ids")

    def __init__(self, dim: int, ids=()) -> None:
        self.dim = dim
        self.ids = frozenset(ids)

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.dim != other.dim:
            raise DimensionMismatch(
                f"cannot add a {self.dim}-cochain and a {other.dim}-cochain"
            )
        return Cochain(self.dim, self.ids ^ other.ids)

    __xor__ = __add__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.dim == other.dim
            and self.ids == other.ids
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.ids))

    def __len__(self) -> int:
        return len(self.ids)

    def __bool__(self) -> bool:
        return bool(self.ids)

    def bits(self) -> int:
        return _bits_of(self.ids)

    def __repr__(self) -> str:
        return f"Cochain(dim={self.dim}, size={len(self.ids)})"


def chain_of(c, dim: int, simplices) -> Chain:
    """Build a chain from vertex tuples; repeats cancel mod 2."""
    ids = set()
    for s in simplices:
        ids ^= {c.simplex_id(tuple(sorted(s)))}
    return Chain(dim, ids)


def evaluate(j: Cochain, x: Chain) -> int:
    """Pairing <j, x> over Z2: parity of the overlap of supports."""
    if j.dim != x.dim:
        raise DimensionMismatch(
            f"cannot pair a {j.dim}-cochain with a {x.dim}-chain"
        )
    return len(j.ids & x.ids) & 1


# -- boundary and coboundary ---------------------------------------------


def boundary(c, x: Chain) -> Chain:
    """Mod-2 boundary; facets of the support, with cancellation."""
    if not 1 <= x.dim <= 3:
        raise DimensionMismatch(f"boundary undefined for {x.dim}-chains")
    out: set[int] = set()
    for idx in x.ids:
        for f in c.facet_ids(x.dim, idx):
            out ^= {f}
    return Chain(x.dim - 1, out)


def coboundary(c, j: Cochain) -> Cochain:
    """Mod-2 coboundary; (dj)(s) sums j over the facets of s."""
    if not 0 <= j.dim <= 2:
        raise DimensionMismatch(f"coboundary undefined for {j.dim}-cochains")
    out: set[int] = set()
    for idx in j.ids:
        for s in c.cofacet_ids(j.dim, idx):
            out ^= {s}
    return Cochain(j.dim + 1, out)


def is_cycle(c, x: Chain) -> bool:
    if x.dim == 0:
        return True
    return not boundary(c, x).ids


def _boundary_span(c, k: int) -> Gf2Span:
    """Span of boundaries of (k+1)-simplices inside C_k, cached on c."""
    key = ("boundary_span", k)
    sp = c._cache.get(key)
    if sp is None:
        sp = Gf2Span()
        if k < 3:
            for idx in range(c.count(k + 1)):
                sp.add(_bits_of(c.facet_ids(k + 1, idx)))
        c._cache[key] = sp
    return sp


def is_boundary(c, x: Chain) -> bool:
    """Whether x bounds: membership in the span of simplex boundaries."""
    if not 0 <= x.dim <= 3:
        raise DimensionMismatch(f"no {x.dim}-chains in a 3-complex")
    return _boundary_span(c, x.dim).contains(x.bits())


def bounding_chain(c, x: Chain) -> Chain | None:
    """Some (k+1)-chain with boundary x, or None if x does not bound."""
    if x.dim == 3:
        return None if x.ids else Chain(3, ())
    rows = [_bits_of(c.cofacet_ids(x.dim, tau)) for tau in range(c.count(x.dim))]
    m = Gf2Matrix(rows, c.count(x.dim + 1))
    sol = m.solve(x.bits())
    if sol is None:
        return None
    return Chain(x.dim + 1, _ids_of(sol))


# -- homology ----------------------------------------------------------


def _cycle_basis_bits(c, k: int) -> list[int]:
    """Basis of the kernel of the boundary map on k-chains."""
    if k == 0:
        return [1 << v for v in range(c.n0)]
    rows = [_bits_of(c.cofacet_ids(k - 1, tau)) for tau in range(c.count(k - 1))]
    return Gf2Matrix(rows, c.count(k)).kernel_basis()


class HomologyBasis:
    """Mod-2 homology basis in one dimension, with class coordinates.

    Representatives are the kernel-basis cycles that survive reduction
    against the boundary span, in elimination order, so the basis is
    deterministic for a given complex.
    """

    def __init__(self, c, dim: int) -> None:
        if not 0 <= dim <= 3:
            raise DimensionMismatch(f"no homology in dimension {dim}")
        self.complex = c
        self.dim = dim
        span = Gf2Span()
        if dim < 3:
            for idx in range(c.count(dim + 1)):
                span.add(_bits_of(c.facet_ids(dim + 1, idx)))
        reps: list[Chain] = []
        for vec in _cycle_basis_bits(c, dim):
            if span.add(vec, 1 << len(reps)):
                reps.append(Chain(dim, _ids_of(vec)))
        self.representatives = tuple(reps)
        self.betti = len(reps)
        self._span = span

    def class_vector(self, x: Chain) -> int:
        """Coordinates of [x] in this basis, as a bitmask; 0 means x bounds."""
        if x.dim != self.dim:
            raise DimensionMismatch(
                f"{x.dim}-chain against a dimension-{self.dim} basis"
            )
        res, tag = self._span.reduce(x.bits())
        if res:
            raise NotACycle(f"{x.dim}-chain with nonzero boundary has no class")
        return tag

    def __repr__(self) -> str:
        return f"HomologyBasis(dim={self.dim}, betti={self.betti})"


def homology_basis(c, dim: int) -> HomologyBasis:
    """The cached mod-2 homology basis of a validated complex."""
    from .mesh import ensure_validated

    ensure_validated(c)
    key = ("homology", dim)
    basis = c._cache.get(key)
    if basis is None:
        basis = HomologyBasis(c, dim)
        c._cache[key] = basis
    return basis


def betti_numbers(c) -> tuple[int, int, int, int]:
    return tuple(homology_basis(c, k).betti for k in range(4))


# -- subdivision transfer ---------------------------------------------------


def subdivide_chain(bc, x: Chain) -> Chain:
    """Image of a base chain in the barycentric subdivision."""
    ids = set()
    for idx in x.ids:
        ids.update(bc.subdivided_ids(x.dim, idx))
    return Chain(x.dim, ids)


def coarsen_chain(bc, x: Chain) -> Chain:
    """Push a subdivision chain back to the base complex.

    Each subdivision vertex maps to the least vertex of the base simplex it
    subdivides; simplices whose images degenerate cancel mod 2.  This is a
    chain map, and composed with subdivide_chain it is the identity, so it
    turns boundary tests in the subdivision into boundary tests in the base.
    """
    base = bc.base
    sub = bc.complex
    out: set[int] = set()
    for idx in x.ids:
        verts = sub.simplex_vertices(x.dim, idx)
        mapped = {bc.base_min[v] for v in verts}
        if len(mapped) == len(verts):
            out ^= {base.simplex_id(tuple(sorted(mapped)))}
    return Chain(x.dim, out)
