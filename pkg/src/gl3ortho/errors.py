"""Exception types raised across the package."""


class Gl3OrthoError(Exception):
    """Base class for all package errors."""


class DuplicateNode(Gl3OrthoError):
    pass


class ShapeMismatch(Gl3OrthoError):
    pass


class SingularSystem(Gl3OrthoError):
    """Linear system has more than one solution."""


class InconsistentSystem(Gl3OrthoError):
    """Linear system has no solution."""


class UnsupportedAlpha(Gl3OrthoError):
    pass


class InvalidHighestWeight(Gl3OrthoError):
    pass


class DegenerateDiagram(Gl3OrthoError):
    pass


class InvalidDiagram(Gl3OrthoError):
    pass


class NotInRootLattice(Gl3OrthoError):
    pass


class NotInQPlus(Gl3OrthoError):
    pass


class NotCyclic(Gl3OrthoError):
    """The operator is not a polynomial multiple of the expected shift monomial."""


class InsufficientSupport(Gl3OrthoError):
    """Too few sample points in the module to pin down a polynomial of the requested degree."""


class NotEigenfunction(Gl3OrthoError):
    pass


class DegenerateForm(Gl3OrthoError):
    pass


class PoleBeforeTermination(Gl3OrthoError):
    pass


class NonTerminating(Gl3OrthoError):
    pass


class ParseError(Gl3OrthoError):
    pass
