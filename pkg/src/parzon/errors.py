"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: schema problems exit 1,
geometric degeneracies and failed searches exit 3.
"""


class ParzonError(Exception):
    """Base class for package-specific failures."""


class SchemaError(ParzonError, ValueError):
    """Malformed input document: wrong keys, shapes, or value types."""


class DegenerateBodyError(ParzonError, ValueError):
    """Geometric precondition failed: flat tetrahedron, rank-deficient
    generator set, empty body, or an out-of-range generator count."""


class NoFeasibleStartError(ParzonError, RuntimeError):
    """Every optimizer start collapsed to the degenerate penalty."""
