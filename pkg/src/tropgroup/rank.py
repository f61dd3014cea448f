"""Tropical linear-combination membership and full row rank.

Membership is decided with the principal (residuated) solution: the largest
coefficient vector whose combination stays entrywise below the target. The
target is a combination of the rows iff that single candidate hits it exactly.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DimensionMismatch
from .matrices import TropMatrix
from .semiring import NEG_INF, Scalar, format_scalar, residual, scalar_add, scalar_mul

logger = logging.getLogger(__name__)

Row = Sequence[Scalar]


@dataclass(frozen=True)
class CombinationWitness:
    """``lambdas[k]`` scales ``rows[k]``; the combination reproduces the target row.

    ``target_row`` and ``rows`` are 1-based row indices of the matrix the rows
    came from (0 and positional indices when there is no matrix).
    """

    target_row: int
    rows: tuple[int, ...]
    lambdas: tuple[Scalar, ...]

    def to_dict(self) -> dict:
        return {
            "target_row": self.target_row,
            "rows": list(self.rows),
            "lambdas": [format_scalar(x) for x in self.lambdas],
        }


@dataclass(frozen=True)
class RowRank:
    """Verdict of ``full_row_rank``: full, or the smallest deficient row with its witness."""

    witness: CombinationWitness | None = None

    @property
    def is_full(self) -> bool:
        return self.witness is None

    @property
    def deficient_row(self) -> int | None:
        return None if self.witness is None else self.witness.target_row

    def to_dict(self) -> dict:
        if self.witness is None:
            return {"full_row_rank": True}
        return {"full_row_rank": False, "deficiency": self.witness.to_dict()}


def _check_widths(b: Row, rows: Sequence[Row]) -> int:
    m = len(b)
    if m < 1:
        raise DimensionMismatch("rows must have at least one entry")
    for k, r in enumerate(rows, start=1):
        if len(r) != m:
            raise DimensionMismatch(
                f"row {k} has length {len(r)}, target has length {m}",
                witnesses={"row": k, "length": len(r), "expected": m},
            )
    return m


def combine(lambdas: Sequence[Scalar], rows: Sequence[Row], width: int) -> tuple[Scalar, ...]:
    """⊕_k lambdas[k] ⊗ rows[k]; the empty combination is all NEG_INF."""
    out: list[Scalar] = [NEG_INF] * width
    for lam, r in zip(lambdas, rows):
        if lam is NEG_INF:
            continue
        for t in range(width):
            out[t] = scalar_add(out[t], scalar_mul(lam, r[t]))
    return tuple(out)


def principal_solution(b: Row, rows: Sequence[Row]) -> list[Scalar]:
    """λ_k = min over finite positions t of rows[k] of b[t] - rows[k][t]."""
    m = _check_widths(b, rows)
    lambdas: list[Scalar] = []
    for r in rows:
        candidates = [residual(b[t], r[t]) for t in range(m) if r[t] is not NEG_INF]
        lambdas.append(min(candidates) if candidates else NEG_INF)
    return lambdas


def is_combination(b: Row, rows: Sequence[Row], *, target_row: int = 0,
                   row_indices: Sequence[int] | None = None) -> CombinationWitness | None:
    """Witness that ``b`` is a combination of ``rows``, or None if no λ works."""
    lambdas = principal_solution(b, rows)
    if combine(lambdas, rows, len(b)) != tuple(b):
        return None
    indices = tuple(row_indices) if row_indices is not None else tuple(range(1, len(rows) + 1))
    return CombinationWitness(target_row, indices, tuple(lambdas))


def full_row_rank(a: TropMatrix) -> RowRank:
    """Scan rows 1, 2, ... and report the first one that the others generate.

    A single row has no other rows to be generated by and is always full.
    """
    if a.rows == 1:
        return RowRank()
    rows = a.row_list
    for i in range(1, a.rows + 1):
        others = [r for k, r in enumerate(rows, start=1) if k != i]
        indices = [k for k in range(1, a.rows + 1) if k != i]
        witness = is_combination(rows[i - 1], others, target_row=i, row_indices=indices)
        if witness is not None:
            logger.debug("row %d of %dx%d matrix is a combination of the others: %s",
                         i, a.rows, a.cols, [format_scalar(x) for x in witness.lambdas])
            return RowRank(witness)
    return RowRank()
