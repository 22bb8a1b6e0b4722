"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`HamelError`,
so callers (and the CLI) can separate domain errors from usage errors.
"""


class HamelError(Exception):
    """Base class for domain errors."""

    code = "error"

    def payload(self):
        return {"error": self.code, "message": str(self)}


class MixedFields(HamelError):
    code = "MixedFields"


class NotInSpan(HamelError):
    code = "NotInSpan"

    def __init__(self, residual):
        super().__init__(f"vector is not in the span; residual {residual}")
        self.residual = residual


class NotFree(HamelError):
    code = "NotFree"

    def __init__(self, witness):
        super().__init__(f"vectors are linearly dependent; witness {witness}")
        self.witness = witness


class NotSubspace(HamelError):
    code = "NotSubspace"


class DecompositionFailed(HamelError):
    code = "DecompositionFailed"


class HorizonExceeded(HamelError):
    code = "HorizonExceeded"

    def __init__(self, needed, horizon):
        super().__init__(f"degree {needed} needed but horizon is {horizon}")
        self.needed = needed
        self.horizon = horizon


class DegreeBoundViolated(HamelError):
    code = "DegreeBoundViolated"


class NotInjective(HamelError):
    """The operator has a nonzero kernel vector, so its dual is not onto.

    ``functional`` is an indicator functional that pairs nonzero with the
    kernel vector; the equation ``dual(O) L = functional`` has no solution.
    """

    code = "NotInjective"

    def __init__(self, witness, functional=None):
        super().__init__(f"operator is not injective; kernel vector {witness}")
        self.witness = witness
        self.functional = functional


class InconsistentSystem(HamelError):
    code = "InconsistentSystem"


class Divergent(HamelError):
    code = "Divergent"

    def __init__(self, degrees):
        degrees = list(degrees)
        super().__init__(f"moments diverge at degrees {degrees}")
        self.degrees = degrees


class OperatorSyntaxError(HamelError):
    code = "SyntaxError"

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariable(HamelError):
    code = "UnknownVariable"
