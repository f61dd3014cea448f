"""Faithful monomial representations of tropical matrix groups.

The recursion works in two stages:

1. While some element has deficient row rank, drop one dimension: with A the
   first deficient element and i its smallest deficient row, every G in the
   group factors as G = P ⊗ Ḡ where Ḡ is G without row i and P is the n x (n-1)
   matrix whose non-i rows form the neutral and whose row i holds the λ of A.
   G maps to Ḡ ⊗ P.
2. Once every element has full row rank, each G is (monomial P_G) ⊗ E for the
   group's neutral E, and G maps to P_G.

Both stages are checked on the data: reconstruction per element, injectivity,
and the homomorphism property on every pair whose product is in the list.
"""

import logging
import math
from collections import defaultdict
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import FactorError, ReduceError, ValidationError
from .group import MatrixGroup, Mode
from .matrices import MonomialMatrix, TropMatrix, mat_mul, neutral, remove_row, to_dense
from .rank import CombinationWitness, full_row_rank
from .semiring import NEG_INF, ZERO, Scalar, format_scalar
from .wreath import WreathElement, element_order, from_monomial, to_monomial, wreath_mul

logger = logging.getLogger(__name__)

TORSION_EXPONENT_CAP = 64


@dataclass(frozen=True)
class ReductionStep:
    """One dimension drop: row ``removed_row`` of the deficient element, its λ, and P."""

    removed_row: int
    witness: CombinationWitness
    p: TropMatrix
    source_dim: int
    deficient_element: int

    def to_dict(self) -> dict:
        return {
            "source_dimension": self.source_dim,
            "deficient_element": self.deficient_element,
            "removed_row": self.removed_row,
            "lambdas": [format_scalar(x) for x in self.witness.lambdas],
            "P": self.p.to_text(),
        }


@dataclass(frozen=True)
class Representation:
    """Images of the source elements (same order) as m x m monomial matrices."""

    source: MatrixGroup
    target_dim: int
    images: tuple[MonomialMatrix, ...]
    trace: tuple[ReductionStep, ...] = ()
    base_neutral: TropMatrix | None = None

    @property
    def sample_only(self) -> bool:
        return self.source.mode is Mode.ASSUMED

    def image_of(self, g: TropMatrix) -> MonomialMatrix:
        k = self.source.index_of(g)
        if k is None:
            raise ValidationError("matrix is not an element of the represented group",
                                  witnesses={"matrix": g.to_text()})
        return self.images[k - 1]

    def wreath_images(self) -> list[WreathElement]:
        return [from_monomial(m) for m in self.images]

    def to_dict(self) -> dict:
        return {
            "source_dimension": self.source.n,
            "target_dimension": self.target_dim,
            "sample_only": self.sample_only,
            "trace": [step.to_dict() for step in self.trace],
            "base_neutral": self.base_neutral.to_text() if self.base_neutral is not None else None,
            "images": [w.to_dict() for w in self.wreath_images()],
        }


@dataclass(frozen=True)
class GroupAnalysis:
    diagonal_indices: tuple[int, ...]
    coset_partition: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    index: int
    n_factorial_bound: int
    bound_ok: bool
    diagonal_abelian_ok: bool
    diagonal_torsion_free_ok: bool
    torsion_check: str = field(default="exact")

    def to_dict(self) -> dict:
        return {
            "diagonal_indices": list(self.diagonal_indices),
            "cosets": [{"sigma": list(sigma), "elements": list(members)}
                       for sigma, members in self.coset_partition],
            "index": self.index,
            "n_factorial_bound": self.n_factorial_bound,
            "bound_ok": self.bound_ok,
            "diagonal_abelian_ok": self.diagonal_abelian_ok,
            "diagonal_torsion_free_ok": self.diagonal_torsion_free_ok,
            "torsion_check": self.torsion_check,
        }


# ---------------------------------------------------------------------------
# Full-rank stage
# ---------------------------------------------------------------------------

def _match_row(g_row: Sequence[Scalar], e_rows: Sequence[Sequence[Scalar]]) -> list[tuple[int, Fraction]]:
    """All (kappa, c) with g_row = c ⊗ e_rows[kappa-1]."""
    support = [t for t, x in enumerate(g_row) if x is not NEG_INF]
    matches: list[tuple[int, Fraction]] = []
    for kappa, e_row in enumerate(e_rows, start=1):
        if [t for t, x in enumerate(e_row) if x is not NEG_INF] != support:
            continue
        if not support:
            matches.append((kappa, ZERO))
            continue
        c = g_row[support[0]] - e_row[support[0]]
        if all(g_row[t] - e_row[t] == c for t in support[1:]):
            matches.append((kappa, c))
    return matches


def extract_monomial_factor(g: TropMatrix, e: TropMatrix) -> MonomialMatrix:
    """The monomial P with P ⊗ E = G, matching each row of G to one scaled row of E."""
    if not (g.is_square and e.is_square and g.rows == e.rows):
        raise ValidationError(
            f"need square matrices of one dimension, got {g.rows}x{g.cols} and {e.rows}x{e.cols}",
            witnesses={"G": [g.rows, g.cols], "E": [e.rows, e.cols]},
        )
    rank = full_row_rank(e)
    if not rank.is_full:
        raise FactorError(
            "the neutral matrix does not have full row rank",
            kind="NeutralNotFullRank",
            witnesses={"deficiency": rank.witness.to_dict()},
        )

    n = g.rows
    e_rows = e.row_list
    kappa: list[int] = []
    offsets: list[Fraction] = []
    for i, g_row in enumerate(g.row_list, start=1):
        matches = _match_row(g_row, e_rows)
        if not matches:
            raise FactorError(f"row {i} of G is not a scaled row of E", kind="NoRowMatch", witnesses={"row": i})
        if len(matches) > 1:
            raise FactorError(
                f"row {i} of G matches several rows of E",
                kind="AmbiguousRowMatch",
                witnesses={"row": i, "candidates": [k for k, _ in matches]},
            )
        kappa.append(matches[0][0])
        offsets.append(matches[0][1])

    if sorted(kappa) != list(range(1, n + 1)):
        raise FactorError("rows of G do not use every row of E exactly once", kind="NotBijective",
                          witnesses={"kappa": kappa})

    # Row i of P is finite only in column kappa(i), so column kappa(i) is finite at row i.
    sigma = [0] * n
    diag: list[Fraction] = [ZERO] * n
    for i, (k, c) in enumerate(zip(kappa, offsets), start=1):
        sigma[k - 1] = i
        diag[k - 1] = c
    p = MonomialMatrix(tuple(sigma), tuple(diag))
    if mat_mul(to_dense(p), e) != g:
        raise FactorError("P ⊗ E does not reproduce G", kind="VerificationFailed",
                          witnesses={"sigma": sigma, "diag": [format_scalar(x) for x in diag]})
    return p


# ---------------------------------------------------------------------------
# Dimension reduction
# ---------------------------------------------------------------------------

def _reduction_matrix(n: int, i: int, lambdas: Sequence[Scalar]) -> TropMatrix:
    """n x (n-1): row i is ``lambdas``; the other rows form neutral(n-1)."""
    ident = neutral(n - 1).row_list
    rows = list(ident[:i - 1]) + [tuple(lambdas)] + list(ident[i - 1:])
    return TropMatrix(n, n - 1, tuple(x for row in rows for x in row))


def _check_faithful(group: MatrixGroup, images: Sequence, mul: Callable, stage: str) -> None:
    """Injectivity and homomorphism of ``elements[k] -> images[k]`` on the list."""
    first: dict = {}
    for k, img in enumerate(images, start=1):
        if img in first:
            raise ReduceError(
                f"{stage}: elements {first[img]} and {k} have the same image",
                kind="NotInjectiveOnSample",
                witnesses={"first": first[img], "second": k},
            )
        first[img] = k

    for a, g in enumerate(group.elements, start=1):
        for b, h in enumerate(group.elements, start=1):
            c = group.index_of(mat_mul(g, h))
            if c is None:
                continue
            if mul(images[a - 1], images[b - 1]) != images[c - 1]:
                raise ReduceError(
                    f"{stage}: image of the product of elements {a} and {b} is not the product of images",
                    kind="NotHomomorphicOnSample",
                    witnesses={"left": a, "right": b, "product": c},
                )


def reduce_once(group: MatrixGroup) -> tuple[MatrixGroup, ReductionStep]:
    """One faithful step from dimension n to n - 1."""
    n = group.n
    if n < 2:
        raise ValidationError("cannot reduce a 1x1 group", witnesses={"dimension": n})

    for a, elem in enumerate(group.elements, start=1):
        rank = full_row_rank(elem)
        if not rank.is_full:
            deficient, witness = a, rank.witness
            break
    else:
        raise ReduceError("every element has full row rank", kind="AllFullRank",
                          witnesses={"dimension": n, "order": group.order})

    i = witness.target_row
    p = _reduction_matrix(n, i, witness.lambdas)
    logger.debug("reducing dimension %d -> %d via row %d of element %d", n, n - 1, i, deficient)

    images: list[TropMatrix] = []
    for k, g in enumerate(group.elements, start=1):
        g_bar = remove_row(g, i)
        if mat_mul(p, g_bar) != g:
            raise ReduceError(
                f"element {k} is not P ⊗ (element without row {i})",
                kind="RowConsistencyFailed",
                witnesses={"element": k, "removed_row": i},
            )
        images.append(mat_mul(g_bar, p))

    _check_faithful(group, images, mat_mul, f"reduction {n} -> {n - 1}")
    step = ReductionStep(i, witness, p, n, deficient)
    reduced = MatrixGroup(n - 1, tuple(images), group.neutral_index, group.mode)
    return reduced, step


def monomialize(group: MatrixGroup) -> Representation:
    """Reduce until every element has full row rank, then factor through the neutral."""
    trace: list[ReductionStep] = []
    current = group
    while current.n >= 2 and any(not full_row_rank(g).is_full for g in current.elements):
        current, step = reduce_once(current)
        trace.append(step)

    e = current.neutral
    images = [extract_monomial_factor(g, e) for g in current.elements]
    _check_faithful(current, images, _monomial_product, "monomial factor")

    m = current.n
    logger.debug("monomial representation of dimension %d after %d reductions", m, len(trace))
    return Representation(group, m, tuple(images), tuple(trace), e)


def _monomial_product(p: MonomialMatrix, q: MonomialMatrix) -> MonomialMatrix:
    return to_monomial(wreath_mul(from_monomial(p), from_monomial(q)))


# ---------------------------------------------------------------------------
# Coset analysis
# ---------------------------------------------------------------------------

def analyze(rep: Representation, *, torsion_exponent_cap: int = TORSION_EXPONENT_CAP) -> GroupAnalysis:
    """Diagonal subgroup D, cosets of D by permutation, and the index bound m!."""
    cosets: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for k, img in enumerate(rep.images, start=1):
        cosets[img.sigma].append(k)

    diagonal = [k for k, img in enumerate(rep.images, start=1) if img.is_diagonal]
    index = len(cosets)
    bound = math.factorial(rep.target_dim)

    diag_images = [from_monomial(rep.images[k - 1]) for k in diagonal]
    abelian = all(wreath_mul(x, y) == wreath_mul(y, x)
                  for a, x in enumerate(diag_images) for y in diag_images[a + 1:])

    e_idx = rep.source.neutral_index
    if rep.source.mode is Mode.VERIFIED:
        torsion_free = diagonal == [e_idx]
        torsion_check = "exact"
    else:
        torsion_free = all(element_order(from_monomial(rep.images[k - 1]), torsion_exponent_cap) is None
                           for k in diagonal if k != e_idx)
        torsion_check = f"checked up to exponent {torsion_exponent_cap}"
        logger.debug("torsion-freeness of the sample %s", torsion_check)

    return GroupAnalysis(
        diagonal_indices=tuple(diagonal),
        coset_partition=tuple((sigma, tuple(members)) for sigma, members in cosets.items()),
        index=index,
        n_factorial_bound=bound,
        bound_ok=index <= bound,
        diagonal_abelian_ok=abelian,
        diagonal_torsion_free_ok=torsion_free,
        torsion_check=torsion_check,
    )
