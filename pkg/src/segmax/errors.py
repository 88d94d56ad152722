"""Exception types shared across the package.

Checked 64-bit arithmetic raises the builtin OverflowError; everything
else raises a SegmaxError subclass so callers (and the CLI exit-status
mapping) can tell input problems, law-gate refusals, and resource guards
apart.
"""


class SegmaxError(Exception):
    """Base class for all package-specific errors."""


class TermSyntaxError(SegmaxError):
    """Malformed s-expression input; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ShapeMismatchError(SegmaxError):
    """Constructor, arity, or child shape does not fit the declared shape."""


class DepthExceededError(SegmaxError):
    """Bounded unfold still had unexpanded seeds at the depth limit."""

    def __init__(self, max_depth: int):
        super().__init__(f"unfold exceeded depth bound {max_depth}")
        self.max_depth = max_depth


class KindMismatchError(SegmaxError):
    """Collections of different kinds were combined."""


class ReduceLawError(SegmaxError):
    """A reduction operator failed the sampled laws required by the
    collection kind (associativity, commutativity for bags, idempotence
    for sets), or an element fell outside the operator's domain."""


class DistributivityError(SegmaxError):
    """The (semiring, collection kind) pair fails the distributivity gate:
    a set-valued reduction needs an idempotent combining operator."""


class SizeGuardError(SegmaxError):
    """A pruning enumeration would exceed the configured element guard."""

    def __init__(self, size: int, guard: int):
        super().__init__(f"collection of {size} elements exceeds guard {guard}")
        self.size = size
        self.guard = guard


class CarrierError(SegmaxError):
    """A label or carrier value lies outside the semiring's domain."""


class BenchBudgetError(SegmaxError):
    """A benchmark run exceeded its wall-clock budget."""


class UnknownLawError(SegmaxError):
    """No law with the requested id is registered."""
