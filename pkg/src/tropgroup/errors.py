"""Exception hierarchy shared by every tropgroup module.

Two families map onto the CLI exit-code contract:

    ValidationError      -> 2  (malformed input, shape problems)
    MathematicalFailure  -> 3  (axiom, factor, reduction failures)

Each exception carries a ``kind`` (for families with several failure modes)
and a ``witnesses`` dict of JSON-ready values that the report echoes.
"""

from typing import Any


class TropError(Exception):
    """Base class for all tropgroup errors."""

    exit_code = 1
    kind: str | None = None

    def __init__(self, message: str, *, kind: str | None = None, witnesses: dict[str, Any] | None = None):
        super().__init__(message)
        if kind is not None:
            self.kind = kind
        self.witnesses = witnesses or {}

    @property
    def name(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind,
            "message": str(self),
            "witnesses": self.witnesses,
        }


# ---------------------------------------------------------------------------
# Validation (exit 2)
# ---------------------------------------------------------------------------

class ValidationError(TropError):
    exit_code = 2


class ParseError(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class DuplicateElements(ValidationError):
    pass


# ---------------------------------------------------------------------------
# Mathematical failures (exit 3)
# ---------------------------------------------------------------------------

class MathematicalFailure(TropError):
    exit_code = 3


class NotMonomial(MathematicalFailure):
    pass


class GroupAxiomFailure(MathematicalFailure):
    """Kinds: NotClosed, NoNeutral, NoInverse."""


class CapExceeded(MathematicalFailure):
    pass


class FactorError(MathematicalFailure):
    """Kinds: NoRowMatch, AmbiguousRowMatch, NotBijective, VerificationFailed, NeutralNotFullRank."""


class ReduceError(MathematicalFailure):
    """Kinds: AllFullRank, RowConsistencyFailed, NotInjectiveOnSample, NotHomomorphicOnSample."""


class RealizationMismatch(MathematicalFailure):
    pass
