"""Plain-text interchange formats for meshes, chains, cochains, paths and
edge weights.

Every format is line based: `#` starts a comment, blank lines are ignored,
tokens are whitespace separated.  Writers emit a canonical form (sorted
simplices, one per line) so identical objects always serialize to identical
bytes.
"""

from __future__ import annotations

from .chains import Chain, Cochain
from .errors import ParseError, UnknownSimplex
from .mesh import Complex3, build_complex


def _content_lines(text: str):
    """Yield (line_number, tokens) for non-empty lines, comments stripped."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {no}: expected integer, got {tok!r}") from None


def _header(lines, keyword: str, n_fields: int):
    try:
        no, toks = next(lines)
    except StopIteration:
        raise ParseError(f"empty input, expected {keyword!r} header") from None
    if toks[0] != keyword or len(toks) != 1 + n_fields:
        raise ParseError(
            f"line {no}: expected header {keyword!r} with {n_fields} fields"
        )
    return [_int(t, no) for t in toks[1:]]


# -- mesh ---------------------------------------------------------------


def parse_mesh_text(text: str) -> Complex3:
    """Parse `tetmesh N0 N3` followed by N3 `tet a b c d` lines."""
    lines = _content_lines(text)
    n0, n3 = _header(lines, "tetmesh", 2)
    if n0 < 0 or n3 < 0:
        raise ParseError("tetmesh header counts must be nonnegative")
    tets = []
    for no, toks in lines:
        if toks[0] != "tet" or len(toks) != 5:
            raise ParseError(f"line {no}: expected 'tet a b c d'")
        verts = [_int(t, no) for t in toks[1:]]
        for v in verts:
            if not 0 <= v < n0:
                raise ParseError(
                    f"line {no}: vertex id {v} out of range for {n0} vertices"
                )
        tets.append(tuple(verts))
    if len(tets) != n3:
        raise ParseError(f"expected {n3} tet lines, found {len(tets)}")
    return build_complex(tets, n_vertices=n0)


def write_mesh_text(c: Complex3) -> str:
    out = [f"tetmesh {c.n0} {c.n3}"]
    for t in c.tets:
        out.append("tet " + " ".join(str(v) for v in t))
    return "\n".join(out) + "\n"


# -- chains and cochains ----------------------------------------------------


def _parse_simplex_lines(lines, c: Complex3, dim: int, count: int, keyword: str):
    ids = set()
    got = 0
    for no, toks in lines:
        if len(toks) != dim + 1:
            raise ParseError(
                f"line {no}: expected {dim + 1} vertex ids for a {dim}-simplex"
            )
        verts = tuple(sorted(_int(t, no) for t in toks))
        if len(set(verts)) != len(verts):
            raise ParseError(f"line {no}: repeated vertex in simplex")
        try:
            idx = c.simplex_id(verts)
        except UnknownSimplex:
            raise UnknownSimplex(
                f"line {no}: {keyword} names simplex {verts} not in the mesh"
            ) from None
        if idx in ids:
            raise ParseError(f"line {no}: simplex {verts} listed twice")
        ids.add(idx)
        got += 1
    if got != count:
        raise ParseError(f"expected {count} simplex lines, found {got}")
    return frozenset(ids)


def parse_chain_text(text: str, c: Complex3) -> Chain:
    """Parse `chain dim count` followed by one simplex (vertex list) per line."""
    lines = _content_lines(text)
    dim, count = _header(lines, "chain", 2)
    if not 0 <= dim <= 3:
        raise ParseError(f"chain dimension must be 0..3, got {dim}")
    return Chain(dim, _parse_simplex_lines(lines, c, dim, count, "chain"))


def write_chain_text(x: Chain, c: Complex3) -> str:
    out = [f"chain {x.dim} {len(x.ids)}"]
    for idx in sorted(x.ids):
        verts = c.simplex_vertices(x.dim, idx)
        out.append(" ".join(str(v) for v in verts))
    return "\n".join(out) + "\n"


def parse_cochain_text(text: str, c: Complex3) -> Cochain:
    """Parse `cochain dim count`; the listed simplices carry value 1."""
    lines = _content_lines(text)
    dim, count = _header(lines, "cochain", 2)
    if not 0 <= dim <= 3:
        raise ParseError(f"cochain dimension must be 0..3, got {dim}")
    return Cochain(dim, _parse_simplex_lines(lines, c, dim, count, "cochain"))


def write_cochain_text(j: Cochain, c: Complex3) -> str:
    out = [f"cochain {j.dim} {len(j.ids)}"]
    for idx in sorted(j.ids):
        verts = c.simplex_vertices(j.dim, idx)
        out.append(" ".join(str(v) for v in verts))
    return "\n".join(out) + "\n"


# -- paths -------------------------------------------------------------


def parse_path_text(text: str) -> list[int]:
    """Parse `path q` followed by q+1 vertex ids, one per line."""
    lines = _content_lines(text)
    (q,) = _header(lines, "path", 1)
    if q < 0:
        raise ParseError(f"path length must be nonnegative, got {q}")
    verts = []
    for no, toks in lines:
        if toks[0] == "weight":
            continue  # tolerate the optional output trailer on round trips
        if len(toks) != 1:
            raise ParseError(f"line {no}: expected a single vertex id")
        v = _int(toks[0], no)
        if v < 0:
            raise ParseError(f"line {no}: vertex id must be nonnegative")
        verts.append(v)
    if len(verts) != q + 1:
        raise ParseError(f"expected {q + 1} vertex lines, found {len(verts)}")
    return verts


def write_path_text(verts, weight: float | None = None) -> str:
    out = [f"path {len(verts) - 1}"]
    out.extend(str(v) for v in verts)
    if weight is not None:
        out.append(f"weight {float(weight)!r}")
    return "\n".join(out) + "\n"


# -- edge weights -------------------------------------------------------


def parse_weights_text(text: str) -> dict:
    """Parse `edge u v w` lines into {(u, v): w} with u < v."""
    table: dict[tuple[int, int], float] = {}
    for no, toks in _content_lines(text):
        if toks[0] != "edge" or len(toks) != 4:
            raise ParseError(f"line {no}: expected 'edge u v w'")
        u, v = _int(toks[1], no), _int(toks[2], no)
        if u == v:
            raise ParseError(f"line {no}: edge endpoints must differ")
        try:
            w = float(toks[3])
        except ValueError:
            raise ParseError(f"line {no}: expected float weight, got {toks[3]!r}") from None
        key = (u, v) if u < v else (v, u)
        if key in table:
            raise ParseError(f"line {no}: edge {key} listed twice")
        table[key] = w
    return table


def write_weights_text(table: dict) -> str:
    out = []
    for (u, v), w in sorted(table.items()):
        out.append(f"edge {u} {v} {float(w)!r}")
    return "\n".join(out) + ("\n" if out else "")
