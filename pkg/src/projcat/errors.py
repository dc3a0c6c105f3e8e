"""Exception hierarchy shared by the library and the CLI.

The CLI maps these onto exit codes: ValidationError -> 2,
CapabilityError -> 3, PreconditionError -> 4.
"""


class ProjcatError(Exception):
    """Base class for all library errors."""

    kind = "error"


class ValidationError(ProjcatError):
    """Malformed input: bad JSON shape, dimension mismatch, support violation."""

    kind = "validation"


class CapabilityError(ProjcatError):
    """The configured ring cannot support the requested construction."""

    kind = "capability"


class NoEnoughInjectives(CapabilityError):
    """Raised for injective-side constructions over the integer backend."""

    kind = "NoEnoughInjectives"


class NoEnoughProjectives(CapabilityError):
    """Raised for projective-side constructions over the integer backend."""

    kind = "NoEnoughProjectives"


class PreconditionError(ProjcatError):
    """A stated precondition fails (non-idempotent, non-bimorphism, ...)."""

    kind = "precondition"


class EnumerationBound(PreconditionError):
    """A brute-force oracle was asked to search beyond its hard bound."""

    kind = "enumeration-bound"


class InternalCheckError(ProjcatError):
    """A certified witness failed its own validation; indicates a bug."""

    kind = "internal"
