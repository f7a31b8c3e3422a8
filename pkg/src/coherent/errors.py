"""Exception hierarchy shared by every module."""


class CoherentError(Exception):
    """Base class; ``record()`` gives the structured form used by the CLI."""

    code = "error"

    def record(self):
        return {"error": self.code, "detail": str(self)}


class ForeignFunctor(CoherentError):
    code = "foreign-functor"

    def __init__(self, symbol, theory):
        super().__init__(f"functor {symbol} is not in the signature of {theory}")
        self.symbol = symbol
        self.theory = theory


class IllegalConstant(CoherentError):
    code = "illegal-constant"

    def __init__(self, constant, theory):
        super().__init__(f"constant {constant} is not available in {theory}")
        self.constant = constant
        self.theory = theory


class CompositionMismatch(CoherentError):
    code = "composition-mismatch"

    def __init__(self, expected, found):
        super().__init__(f"cannot compose: expected source {expected}, found {found}")
        self.expected = expected
        self.found = found


class NotExpandable(CoherentError):
    code = "not-expandable"

    def __init__(self, constant, theory):
        super().__init__(f"{constant} has no definition in {theory}")
        self.constant = constant
        self.theory = theory


class ArityMismatch(CoherentError):
    code = "arity-mismatch"


class MalformedTriple(CoherentError):
    code = "malformed-triple"


class NotDiversified(CoherentError):
    code = "not-diversified"

    def __init__(self, side, obj):
        super().__init__(f"{side} object {obj} is not suitably diversified")
        self.side = side
        self.obj = obj


class HomSetMismatch(CoherentError):
    code = "type-mismatch"

    def __init__(self, left, right):
        super().__init__(f"different hom-sets: {left[0]} -> {left[1]} vs {right[0]} -> {right[1]}")
        self.left = left
        self.right = right


class NormalizationBudgetExceeded(CoherentError):
    code = "normalization-budget"


class ParseError(CoherentError):
    code = "syntax"

    def __init__(self, message, line, column):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column

    def record(self):
        return {"error": self.code, "detail": self.message, "line": self.line, "column": self.column}
