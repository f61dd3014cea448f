"""Dense tropical matrices and monomial matrices.

Matrices are immutable and hashable so they can be deduplicated and used as
dict keys by the group code. Row and column indices in the public API are
1-based; ``sigma`` is stored in one-line notation with ``sigma[j-1]`` the row of
the finite entry in column ``j``.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import DimensionMismatch, IndexOutOfRange, NotMonomial
from .semiring import NEG_INF, ZERO, Scalar, format_scalar, scalar


@dataclass(frozen=True)
class TropMatrix:
    """Row-major dense matrix over the max-plus semiring."""

    rows: int
    cols: int
    entries: tuple[Scalar, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionMismatch(
                f"matrix must be at least 1x1, got {self.rows}x{self.cols}",
                witnesses={"rows": self.rows, "cols": self.cols},
            )
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}",
                witnesses={"rows": self.rows, "cols": self.cols, "entries": len(self.entries)},
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable["Scalar | int | str"]]) -> "TropMatrix":
        """Build from nested rows; entries go through ``scalar()``."""
        data = [[scalar(x) for x in row] for row in rows]
        if not data:
            raise DimensionMismatch("matrix has no rows")
        width = len(data[0])
        for i, row in enumerate(data, start=1):
            if len(row) != width:
                raise DimensionMismatch(
                    f"ragged matrix: row {i} has {len(row)} entries, row 1 has {width}",
                    witnesses={"row": i, "length": len(row), "expected": width},
                )
        return cls(len(data), width, tuple(x for row in data for x in row))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Scalar:
        """Entry at 1-based position (i, j)."""
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row(self, i: int) -> tuple[Scalar, ...]:
        """Row i, 1-based."""
        start = (i - 1) * self.cols
        return self.entries[start:start + self.cols]

    @cached_property
    def row_list(self) -> tuple[tuple[Scalar, ...], ...]:
        c = self.cols
        return tuple(self.entries[k:k + c] for k in range(0, len(self.entries), c))

    @cached_property
    def column_list(self) -> tuple[tuple[Scalar, ...], ...]:
        return tuple(tuple(self.entries[i * self.cols + j] for i in range(self.rows)) for j in range(self.cols))

    def to_text(self) -> list[list[str]]:
        """Nested lists of canonical entry strings (the JSON encoding)."""
        return [[format_scalar(x) for x in row] for row in self.row_list]

    def __matmul__(self, other: "TropMatrix") -> "TropMatrix":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"TropMatrix({self.to_text()})"


def mat_mul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Tropical product: entry (i, j) is max_t a(i,t) + b(t,j)."""
    if a.cols != b.rows:
        raise DimensionMismatch(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}",
            witnesses={"left": [a.rows, a.cols], "right": [b.rows, b.cols]},
        )
    out: list[Scalar] = []
    cols = b.column_list
    for row in a.row_list:
        finite = [(t, x) for t, x in enumerate(row) if x is not NEG_INF]
        for col in cols:
            best: Scalar = NEG_INF
            for t, x in finite:
                y = col[t]
                if y is NEG_INF:
                    continue
                s = x + y
                if best is NEG_INF or s > best:
                    best = s
            out.append(best)
    return TropMatrix(a.rows, b.cols, tuple(out))


def neutral(n: int) -> TropMatrix:
    """Zeros on the diagonal, NEG_INF elsewhere."""
    if n < 1:
        raise DimensionMismatch(f"neutral element needs n >= 1, got {n}", witnesses={"n": n})
    return TropMatrix(n, n, tuple(ZERO if i == j else NEG_INF for i in range(n) for j in range(n)))


def remove_row(a: TropMatrix, i: int) -> TropMatrix:
    """Drop row i (1-based); the remaining rows keep their order."""
    if a.rows < 2 or not 1 <= i <= a.rows:
        raise IndexOutOfRange(
            f"cannot remove row {i} from a {a.rows}x{a.cols} matrix",
            witnesses={"row": i, "rows": a.rows},
        )
    kept = [row for k, row in enumerate(a.row_list, start=1) if k != i]
    return TropMatrix(a.rows - 1, a.cols, tuple(x for row in kept for x in row))


# ---------------------------------------------------------------------------
# Monomial matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialMatrix:
    """A permutation plus finite weights: column j is finite only at row sigma[j-1]."""

    sigma: tuple[int, ...]
    diag: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.sigma)
        if n < 1 or len(self.diag) != n:
            raise DimensionMismatch(
                f"monomial matrix needs n >= 1 and n weights, got sigma of length {n} and {len(self.diag)} weights",
                witnesses={"sigma": list(self.sigma), "weights": len(self.diag)},
            )
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise NotMonomial(f"sigma {list(self.sigma)} is not a permutation of 1..{n}",
                              witnesses={"sigma": list(self.sigma)})
        if any(d is NEG_INF for d in self.diag):
            raise NotMonomial("monomial weights must be finite", witnesses={"diag": [format_scalar(d) for d in self.diag]})

    @classmethod
    def identity(cls, n: int) -> "MonomialMatrix":
        return cls(tuple(range(1, n + 1)), (ZERO,) * n)

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def is_diagonal(self) -> bool:
        return all(s == j for j, s in enumerate(self.sigma, start=1))

    @property
    def is_identity(self) -> bool:
        return self.is_diagonal and all(d == 0 for d in self.diag)

    def to_dense(self) -> TropMatrix:
        return to_dense(self)


def to_dense(m: MonomialMatrix) -> TropMatrix:
    n = m.n
    entries: list[Scalar] = [NEG_INF] * (n * n)
    for j, (s, d) in enumerate(zip(m.sigma, m.diag)):
        entries[(s - 1) * n + j] = d
    return TropMatrix(n, n, tuple(entries))


def try_monomial(a: TropMatrix) -> MonomialMatrix | None:
    """The monomial structure of ``a``, or None if it fails the pattern."""
    if not a.is_square:
        return None
    n = a.rows
    sigma: list[int] = []
    diag: list[Fraction] = []
    for j, col in enumerate(a.column_list):
        finite = [(i, x) for i, x in enumerate(col, start=1) if x is not NEG_INF]
        if len(finite) != 1:
            return None
        sigma.append(finite[0][0])
        diag.append(finite[0][1])
    if len(set(sigma)) != n:
        return None
    return MonomialMatrix(tuple(sigma), tuple(diag))


def as_monomial(a: TropMatrix) -> MonomialMatrix:
    """Like ``try_monomial`` but raises NotMonomial."""
    m = try_monomial(a)
    if m is None:
        raise NotMonomial(
            f"{a.rows}x{a.cols} matrix does not have exactly one finite entry per row and column",
            witnesses={"matrix": a.to_text()},
        )
    return m


def all_same_square(matrices: Sequence[TropMatrix]) -> int:
    """Common dimension n of a nonempty list of n x n matrices."""
    if not matrices:
        raise DimensionMismatch("expected at least one matrix")
    n = matrices[0].rows
    for k, m in enumerate(matrices, start=1):
        if m.shape != (n, n):
            raise DimensionMismatch(
                f"matrix {k} is {m.rows}x{m.cols}, expected {n}x{n}",
                witnesses={"index": k, "shape": [m.rows, m.cols], "expected": [n, n]},
            )
    return n
