"""Exception types shared across the package.

Every error carries a stable ``code`` string; the HTTP service and the CLI
use it to map failures onto status codes and exit codes.
"""


class TetcyclesError(Exception):
    code = "error"


class ParseError(TetcyclesError):
    code = "parse_error"


class DegenerateTet(TetcyclesError):
    code = "degenerate_tet"


class DuplicateTet(TetcyclesError):
    code = "duplicate_tet"


class InvalidParameter(TetcyclesError):
    code = "invalid_parameter"


class UnknownSimplex(TetcyclesError):
    code = "unknown_simplex"


class NotValidated(TetcyclesError):
    code = "not_validated"


class DimensionMismatch(TetcyclesError):
    code = "dimension_mismatch"


class NotACycle(TetcyclesError):
    code = "not_a_cycle"


class BoundaryMismatch(TetcyclesError):
    code = "boundary_mismatch"


class NotAPath(TetcyclesError):
    code = "not_a_path"


class SingularPairing(TetcyclesError):
    code = "singular_pairing"


class Infeasible(TetcyclesError):
    code = "infeasible"


class RankGuardExceeded(TetcyclesError):
    code = "rank_guard_exceeded"
