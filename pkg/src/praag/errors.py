"""Exception types raised across the package."""


class PraagError(Exception):
    """Base class for all package errors."""


class InvalidPrime(PraagError, ValueError):
    pass


class NotChordal(PraagError):
    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"graph is not chordal (witness: {witness})")


class NotConnected(PraagError):
    pass


class EmptySupport(PraagError, ValueError):
    pass


class AlgebraMismatch(PraagError, ValueError):
    pass


class ParameterMismatch(PraagError, ValueError):
    pass


class MissingImage(PraagError, KeyError):
    pass


class NotInFrattiniQuotient(PraagError, ValueError):
    pass


class CupObstruction(PraagError):
    """A consecutive cup product alpha_h * alpha_{h+1} is nonzero.

    ``h`` is 1-based, so the offending pair is ``(h, h + 1)``.
    """

    def __init__(self, h: int):
        self.h = h
        super().__init__(f"cup product of characters {h} and {h + 1} is nonzero")


class NotAHomomorphism(PraagError):
    pass


class BudgetExceeded(PraagError):
    pass


class UnsupportedGraphClass(PraagError):
    pass


class NotChordalSupport(PraagError):
    pass


class AdjacencyCertificateFailed(PraagError):
    pass


class NoLadderEmbedding(PraagError):
    pass


class DegenerateForm(PraagError):
    pass


class OddDimension(PraagError, ValueError):
    pass
