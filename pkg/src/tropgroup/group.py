"""Finite lists of square tropical matrices viewed as groups.

A ``MatrixGroup`` is either VERIFIED (closure, neutral and inverses were all
machine-checked on the list) or ASSUMED (the list is a finite sample of a
possibly infinite group; only the neutral is checked).
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import CapExceeded, DuplicateElements, GroupAxiomFailure, ValidationError
from .matrices import TropMatrix, all_same_square, mat_mul

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 10_000


class Mode(Enum):
    VERIFIED = "verified"
    ASSUMED = "assumed"


@dataclass(frozen=True)
class MatrixGroup:
    """Distinct n x n matrices with a two-sided neutral at ``neutral_index`` (1-based)."""

    n: int
    elements: tuple[TropMatrix, ...]
    neutral_index: int
    mode: Mode

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def neutral(self) -> TropMatrix:
        return self.elements[self.neutral_index - 1]

    def index_of(self, g: TropMatrix) -> int | None:
        """1-based position of ``g`` in the list, or None."""
        return self.positions.get(g)

    @cached_property
    def positions(self) -> dict[TropMatrix, int]:
        return {g: k for k, g in enumerate(self.elements, start=1)}

    def summary(self) -> dict:
        return {
            "dimension": self.n,
            "order": self.order,
            "neutral_index": self.neutral_index,
            "mode": self.mode.value,
        }


@dataclass(frozen=True)
class PeriodicReport:
    order: int
    n_factorial: int
    ok: bool

    def to_dict(self) -> dict:
        out = {"order": self.order, "n_factorial": self.n_factorial, "ok": self.ok}
        if not self.ok:
            out["note"] = "periodic group larger than n! -- this is an implementation bug"
        return out


def _ensure_distinct(elements: Sequence[TropMatrix]) -> None:
    seen: dict[TropMatrix, int] = {}
    for k, g in enumerate(elements, start=1):
        if g in seen:
            raise DuplicateElements(
                f"elements {seen[g]} and {k} are equal",
                witnesses={"first": seen[g], "second": k, "matrix": g.to_text()},
            )
        seen[g] = k


def find_neutral(elements: Sequence[TropMatrix]) -> int:
    """1-based index of the element acting as a two-sided identity on all elements."""
    all_same_square(elements)
    for k, e in enumerate(elements, start=1):
        if all(mat_mul(e, g) == g and mat_mul(g, e) == g for g in elements):
            return k
    raise GroupAxiomFailure(
        "no element acts as a two-sided identity on the list",
        kind="NoNeutral",
        witnesses={"order": len(elements)},
    )


def verify_group(elements: Sequence[TropMatrix]) -> MatrixGroup:
    """Check closure, neutral and inverses; failures name the axiom and witnesses."""
    n = all_same_square(elements)
    _ensure_distinct(elements)
    present = set(elements)

    # Products are reused by the inverse search below.
    table: dict[tuple[int, int], TropMatrix] = {}
    for a, g in enumerate(elements, start=1):
        for b, h in enumerate(elements, start=1):
            gh = mat_mul(g, h)
            if gh not in present:
                raise GroupAxiomFailure(
                    f"product of elements {a} and {b} is not in the list",
                    kind="NotClosed",
                    witnesses={"left": a, "right": b, "product": gh.to_text()},
                )
            table[a, b] = gh

    e_idx = find_neutral(elements)
    e = elements[e_idx - 1]
    order = len(elements)
    for a in range(1, order + 1):
        if not any(table[a, b] == e and table[b, a] == e for b in range(1, order + 1)):
            raise GroupAxiomFailure(
                f"element {a} has no two-sided inverse in the list",
                kind="NoInverse",
                witnesses={"element": a, "neutral_index": e_idx},
            )

    logger.debug("verified group of order %d in dimension %d", order, n)
    return MatrixGroup(n, tuple(elements), e_idx, Mode.VERIFIED)


def assume_group(elements: Sequence[TropMatrix]) -> MatrixGroup:
    """Treat ``elements`` as a sample of a group; only the neutral is located."""
    n = all_same_square(elements)
    _ensure_distinct(elements)
    e_idx = find_neutral(elements)
    logger.debug("assumed group sample of %d elements in dimension %d", len(elements), n)
    return MatrixGroup(n, tuple(elements), e_idx, Mode.ASSUMED)


def closure(generators: Sequence[TropMatrix], cap: int = DEFAULT_CLOSURE_CAP) -> list[TropMatrix]:
    """Everything the generators produce under ⊗, in first-seen order.

    Breadth-first over right multiplication by generators: every product of
    known elements is itself a word in the generators, so this reaches the
    same set as closing under all pairs.
    """
    if cap < 1:
        raise ValidationError(f"closure cap must be positive, got {cap}", witnesses={"cap": cap})
    all_same_square(generators)

    elements: list[TropMatrix] = []
    seen: set[TropMatrix] = set()
    gens: list[TropMatrix] = []
    for g in generators:
        if g not in seen:
            seen.add(g)
            elements.append(g)
            gens.append(g)

    def _overflow() -> CapExceeded:
        return CapExceeded(
            f"closure grew past {cap} elements",
            witnesses={"cap": cap, "generators": len(gens)},
        )

    if len(elements) > cap:
        raise _overflow()

    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = mat_mul(x, g)
            if y in seen:
                continue
            seen.add(y)
            elements.append(y)
            if len(elements) > cap:
                raise _overflow()

    logger.debug("closure of %d generators stabilized at %d elements", len(gens), len(elements))
    return elements


def periodic_bound_check(g: MatrixGroup) -> PeriodicReport:
    """A finite (hence periodic) group of n x n matrices has order at most n!."""
    if g.mode is not Mode.VERIFIED:
        raise ValidationError("periodic bound check needs a verified group", witnesses={"mode": g.mode.value})
    bound = math.factorial(g.n)
    report = PeriodicReport(g.order, bound, g.order <= bound)
    if not report.ok:
        logger.error("periodic group of order %d exceeds %d! = %d", g.order, g.n, bound)
    return report
