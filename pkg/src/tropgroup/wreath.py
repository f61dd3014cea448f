"""The wreath product R wr S_n and its isomorphism with monomial tropical matrices.

An element is a pair (sigma, d). The multiplication is the one transported
from the dense monomial product, applying the right factor's permutation first:

    (sigma, d) * (tau, e) = (sigma o tau, j -> d[tau(j)] + e[j])
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, NotMonomial, RealizationMismatch
from .matrices import MonomialMatrix, TropMatrix, mat_mul, to_dense
from .semiring import NEG_INF, ZERO, format_scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WreathElement:
    sigma: tuple[int, ...]
    d: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.sigma)
        if n < 1 or len(self.d) != n:
            raise DimensionMismatch(
                f"wreath element needs n >= 1 and n weights, got {n} and {len(self.d)}",
                witnesses={"sigma": list(self.sigma), "weights": len(self.d)},
            )
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise NotMonomial(f"sigma {list(self.sigma)} is not a permutation of 1..{n}",
                              witnesses={"sigma": list(self.sigma)})
        if any(x is NEG_INF for x in self.d):
            raise NotMonomial("wreath weights must be finite rationals")

    @classmethod
    def identity(cls, n: int) -> "WreathElement":
        return cls(tuple(range(1, n + 1)), (ZERO,) * n)

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def is_identity(self) -> bool:
        return all(s == j for j, s in enumerate(self.sigma, start=1)) and all(x == 0 for x in self.d)

    def inverse(self) -> "WreathElement":
        """(sigma^-1, e) with e[j] = -d[sigma^-1(j)]."""
        inv = [0] * self.n
        for j, s in enumerate(self.sigma, start=1):
            inv[s - 1] = j
        return WreathElement(tuple(inv), tuple(-self.d[inv[j] - 1] for j in range(self.n)))

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return wreath_mul(self, other)

    def to_dict(self) -> dict:
        return {"sigma": list(self.sigma), "d": [format_scalar(x) for x in self.d]}


def wreath_mul(x: WreathElement, y: WreathElement) -> WreathElement:
    if x.n != y.n:
        raise DimensionMismatch(
            f"cannot multiply wreath elements of degree {x.n} and {y.n}",
            witnesses={"left": x.n, "right": y.n},
        )
    sigma = tuple(x.sigma[t - 1] for t in y.sigma)
    d = tuple(x.d[y.sigma[j] - 1] + y.d[j] for j in range(y.n))
    return WreathElement(sigma, d)


def wreath_power(x: WreathElement, k: int) -> WreathElement:
    """x^k for any integer k, by repeated squaring."""
    if k < 0:
        return wreath_power(x.inverse(), -k)
    result = WreathElement.identity(x.n)
    base = x
    while k:
        if k & 1:
            result = wreath_mul(result, base)
        base = wreath_mul(base, base)
        k >>= 1
    return result


def element_order(x: WreathElement, cap: int) -> int | None:
    """Smallest k in 1..cap with x^k the identity, or None."""
    power = x
    for k in range(1, cap + 1):
        if power.is_identity:
            return k
        power = wreath_mul(power, x)
    return None


def from_monomial(m: MonomialMatrix) -> WreathElement:
    return WreathElement(m.sigma, m.diag)


def to_monomial(w: WreathElement) -> MonomialMatrix:
    return MonomialMatrix(w.sigma, w.d)


def realize(elements: Sequence[WreathElement]) -> list[TropMatrix]:
    """Dense monomial matrices for wreath elements, checked on every pair."""
    if not elements:
        return []
    n = elements[0].n
    for k, w in enumerate(elements, start=1):
        if w.n != n:
            raise DimensionMismatch(
                f"wreath element {k} has degree {w.n}, expected {n}",
                witnesses={"index": k, "degree": w.n, "expected": n},
            )
    dense = [to_dense(to_monomial(w)) for w in elements]
    for a, (x, gx) in enumerate(zip(elements, dense), start=1):
        for b, (y, gy) in enumerate(zip(elements, dense), start=1):
            if mat_mul(gx, gy) != to_dense(to_monomial(wreath_mul(x, y))):
                raise RealizationMismatch(
                    f"dense product of realized elements {a} and {b} disagrees with the wreath product",
                    witnesses={"left": a, "right": b},
                )
    logger.debug("realized %d wreath elements of degree %d", len(elements), n)
    return dense
