"""Exception types shared across the solvers."""


class DegseqError(Exception):
    """Base class for all library errors."""


class InvalidGraphError(DegseqError):
    """Malformed graph input (bad endpoint, loop, duplicate edge)."""


class InvalidFunctionError(DegseqError):
    """Malformed cost-function table."""


class NonConvexFunctionError(DegseqError):
    """A vertex function required to be convex is not."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"function at vertex {vertex} is not convex")


class NotBipartiteError(DegseqError):
    """The given partition is not a valid bipartition of the graph."""


class MixedMonotonicityError(DegseqError):
    """Functions outside the fixed set mix both monotone directions."""

    def __init__(self, increasing_witness, decreasing_witness):
        self.increasing_witness = increasing_witness
        self.decreasing_witness = decreasing_witness
        super().__init__(
            "functions outside the fixed set are not uniformly monotone: "
            f"vertex {increasing_witness} is nondecreasing-only, "
            f"vertex {decreasing_witness} is nonincreasing-only"
        )


class StateBudgetExceededError(DegseqError):
    """The dynamic program would exceed the configured state budget."""

    def __init__(self, projected, budget):
        self.projected = projected
        self.budget = budget
        super().__init__(
            f"projected DP state count {projected} exceeds budget {budget}"
        )


class TooLargeError(DegseqError):
    """Instance exceeds the brute-force enumeration limit."""

    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(
            f"enumeration of {count} subsets exceeds the oracle limit 2^{limit}"
        )


class MethodInapplicableError(DegseqError):
    """A solve method's precondition does not hold for the instance."""


class InternalError(DegseqError):
    """An invariant the construction guarantees was violated at runtime."""
