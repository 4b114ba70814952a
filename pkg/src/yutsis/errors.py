"""Exception hierarchy shared by all modules.

Every domain failure derives from :class:`YutsisError`; the CLI maps these to
exit status 1 and prints the class name so the failing case is visible.
"""


class YutsisError(Exception):
    """Base class for domain errors."""


class GraphError(YutsisError):
    pass


class OddVertexCount(GraphError):
    pass


class TooSmall(GraphError):
    pass


class Loop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class WrongDegree(GraphError):
    def __init__(self, vertex, degree):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 3")
        self.vertex = vertex
        self.degree = degree


class Disconnected(GraphError):
    pass


class BadVertex(GraphError):
    pass


class NotACycle(YutsisError):
    pass


class NonHamiltonian(YutsisError):
    pass


class LcfError(YutsisError):
    pass


class ParseError(LcfError):
    pass


class IllegalDistance(LcfError):
    pass


class InconsistentChords(LcfError):
    pass


class ChordCollision(LcfError):
    pass


class WignerError(YutsisError):
    """Closure or syntax violation in a Wigner sum; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class BadToken(WignerError):
    pass


class FactorArity(WignerError):
    pass


class LabelRepeatInFactor(WignerError):
    pass


class LabelCount(WignerError):
    pass


class SameSignPair(WignerError):
    pass


class OddFactorCount(WignerError):
    pass


class MultiEdge(WignerError):
    pass


class NotInCatalog(YutsisError):
    pass


class NotFound(NotInCatalog):
    pass


class CatalogFormatError(YutsisError):
    pass
