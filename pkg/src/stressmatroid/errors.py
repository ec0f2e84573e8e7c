"""Error hierarchy shared by the library and the CLI.

Every error carries a machine-readable ``code`` (stable, kebab-case) and the
CLI ``exit_code`` bucket it maps to: 1 for input/validation problems, 2 for
verification failures, 3 for exhausted budgets or failed constructions.
"""


class StressMatroidError(Exception):
    code = "error"
    exit_code = 1

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.message = message
        self.detail = detail


# --- validation (exit 1) ---

class LengthMismatch(StressMatroidError):
    code = "length-mismatch"


class DegenerateEdge(StressMatroidError):
    code = "degenerate-edge"


class SingularMatrix(StressMatroidError):
    code = "singular-matrix"


class NotCollinear(StressMatroidError):
    code = "not-collinear"


class NotDistinct(StressMatroidError):
    code = "not-distinct"


class IdenticalLines(StressMatroidError):
    code = "identical-lines"


class ShapeMismatch(StressMatroidError):
    code = "shape-mismatch"


class NotGeneric(StressMatroidError):
    code = "not-generic"


class SizeMismatch(StressMatroidError):
    code = "size-mismatch"


class ArityMismatch(StressMatroidError):
    code = "arity-mismatch"


class CovectorsMissing(StressMatroidError):
    code = "covectors-missing"


class NotInPoset(StressMatroidError):
    code = "not-in-poset"


class ChainNotCollinear(StressMatroidError):
    code = "chain-not-collinear"


class SeedDegenerate(StressMatroidError):
    code = "seed-degenerate"


class InvalidInput(StressMatroidError):
    code = "invalid-input"


# --- verification (exit 2) ---

class NotEquilibrium(StressMatroidError):
    code = "not-equilibrium"
    exit_code = 2


class ClassificationFailed(StressMatroidError):
    code = "classification-failed"
    exit_code = 2


class VerificationFailed(StressMatroidError):
    code = "verification-failed"
    exit_code = 2


# --- budget / construction (exit 3) ---

class CapExceeded(StressMatroidError):
    code = "cap-exceeded"
    exit_code = 3


class TooLarge(StressMatroidError):
    code = "too-large"
    exit_code = 3


class RetryBudgetExceeded(StressMatroidError):
    code = "retry-budget-exceeded"
    exit_code = 3


class ConstructionFailed(StressMatroidError):
    code = "construction-failed"
    exit_code = 3


class PlacementFailed(StressMatroidError):
    code = "placement-failed"
    exit_code = 3
