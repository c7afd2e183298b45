"""Exception hierarchy shared by every module of the package."""


class TorsionError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSimplex(TorsionError, ValueError):
    pass


class NotASimplex(TorsionError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotASubcomplex(TorsionError, ValueError):
    pass


class CompositionMismatch(TorsionError, ValueError):
    pass


class InvalidMap(TorsionError, ValueError):
    """A vertex assignment that does not carry simplices to simplices."""

    def __init__(self, message, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class NotAComplex(TorsionError, ValueError):
    pass


class NotAChainMap(TorsionError, ValueError):
    pass


class NotAUnit(TorsionError, ArithmeticError):
    pass


class ModulusMismatch(TorsionError, ValueError):
    pass


class NotACocycle(TorsionError, ValueError):
    def __init__(self, message, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class NotConnected(TorsionError, ValueError):
    pass


class NotAPiHomologyEquivalence(TorsionError, ValueError):
    """The mapping cone has homology, so no torsion class is defined.

    ``degree`` and ``group`` describe the first nonvanishing homology group
    of the integral expansion of the cone.
    """

    def __init__(self, message, degree=None, group=None):
        super().__init__(message)
        self.degree = degree
        self.group = group


class InternalInconsistency(TorsionError, RuntimeError):
    pass


class IllegalMove(TorsionError, ValueError):
    pass


class NotACover(TorsionError, ValueError):
    pass


class ParseError(TorsionError, ValueError):
    def __init__(self, message, path=None, line=None):
        if path is not None and line is not None:
            message = f"{path}:{line}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        elif path is not None:
            message = f"{path}: {message}"
        super().__init__(message)
        self.path = path
        self.line = line
