"""Exception hierarchy.

Every failure the library can signal is a subclass of :class:`SzError`.  The
command-line front end prints ``type(err).__name__`` so error names double as
machine-readable status codes.
"""


class SzError(Exception):
    """Base class for all library errors."""


class UnsupportedM(SzError):
    pass


class ZeroElement(SzError):
    pass


class ZeroPolynomial(SzError):
    pass


class BadDegree(SzError):
    pass


class NoSolution(SzError):
    pass


class Singular(SzError):
    pass


class NotSuzukiDiagonalizable(SzError):
    pass


class NotTriangularizable(SzError):
    pass


class IndexOutOfRange(SzError):
    pass


class RetryLimitExceeded(SzError):
    """A Las Vegas loop used up its retry budget."""


class EvenOrder(SzError):
    pass


class NotSymplectic(SzError):
    pass


class DegenerateCoordinates(SzError):
    pass


class ConjectureViolation(SzError):
    """The double-coset coefficient determinant vanished identically.

    This would be a counterexample to the non-vanishing conjecture the
    point-mapping engine relies on, so it is never swallowed.
    """


class NotInStabilizer(SzError):
    pass


class BadPoint(SzError):
    pass


class NotMember(SzError):
    pass


class FlagIntersectionFailed(SzError):
    pass


class BaseValueCountMismatch(SzError):
    pass


class BadTwists(SzError):
    pass


class BadPrime(SzError):
    pass


class BadClass(SzError):
    pass


class UnsupportedInput(SzError):
    pass


class NotConjugate(SzError):
    pass


class ParseError(SzError):
    def __init__(self, msg, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(msg + where)


class FieldMismatch(SzError):
    pass
