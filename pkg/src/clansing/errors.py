"""Exception hierarchy shared by every module."""


class ClanError(ValueError):
    """Base class for malformed-clan input."""

    reason = "bad-clan"


class EmptyInput(ClanError):
    reason = "empty-input"


class BadToken(ClanError):
    reason = "bad-token"


class UnbalancedLabel(ClanError):
    reason = "unbalanced-label"


class IllFormedCompletion(ClanError):
    """A matching of the big clan has exactly one endpoint in the index set."""

    reason = "ill-formed-completion"


class MixedSignature(ValueError):
    """Two clans with different (p, q) were compared."""

    reason = "mixed-signature"


class NotComparable(ValueError):
    """An operation needed alpha <= gamma in closure order and it fails."""

    reason = "not-comparable"


class BadIndices(ValueError):
    reason = "bad-indices"


class ComputationError(RuntimeError):
    """Base class for errors raised while computing, as opposed to bad input."""

    reason = "computation-error"


class NonConstantDeterminant(ComputationError):
    reason = "non-constant-determinant"


class SingularPoint(ComputationError):
    reason = "singular-point"


class ResourceLimit(ComputationError):
    reason = "resource-limit"


class DimensionMismatch(ComputationError):
    reason = "dimension-mismatch"


class NonVanishingAtOrigin(ComputationError):
    reason = "non-vanishing-at-origin"


class PositionMapMismatch(ComputationError):
    reason = "position-map-mismatch"
