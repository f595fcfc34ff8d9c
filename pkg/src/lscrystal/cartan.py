"""Exact arithmetic for the rank-2 hyperbolic Cartan datum.

Weights are written in the basis of fundamental weights, so the pair
(c1, c2) stands for c1*L1 + c2*L2 and pairing with a simple coroot just
reads off a coordinate.  Everything is exact (int / Fraction); floats
never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DOMINANT = "dominant"
ANTIDOMINANT = "antidominant"
NEITHER = "neither"


@dataclass(frozen=True)
class GCM:
    """Generalized Cartan matrix [[2, -a], [-b, 2]] with a*b > 4.

    a = 1 or b = 1 is allowed (still hyperbolic when the product
    exceeds 4) but makes parts of the orbit combinatorics degenerate;
    that state is exposed as `boundary` and callers that need
    a, b >= 2 must check it.
    """

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("matrix entries must be integers")
        if self.a < 1 or self.b < 1:
            raise ValueError(f"need a >= 1 and b >= 1, got ({self.a}, {self.b})")
        if self.a * self.b <= 4:
            raise ValueError(f"not hyperbolic: a*b = {self.a * self.b} <= 4")

    @property
    def boundary(self) -> bool:
        """True when a = 1 or b = 1."""
        return self.a == 1 or self.b == 1

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((2, -self.a), (-self.b, 2))

    def entry(self, i: int, j: int) -> int:
        """<alpha_j, alpha_i^vee> for i, j in {1, 2}."""
        return self.matrix[i - 1][j - 1]


class Weight:
    """A weight c1*L1 + c2*L2 with exact rational coordinates.

    Orbit weights (and anything a path evaluates to at t = 1) are
    integral; values at interior times are genuinely rational, so the
    coordinates are stored as Fractions throughout.
    """

    __slots__ = ("c1", "c2")

    def __init__(self, c1, c2):
        self.c1 = Fraction(c1)
        self.c2 = Fraction(c2)

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.c1 == other.c1 and self.c2 == other.c2

    def __hash__(self):
        return hash((self.c1, self.c2))

    def __add__(self, other):
        return Weight(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        return Weight(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self):
        return Weight(-self.c1, -self.c2)

    def __rmul__(self, scalar):
        return Weight(scalar * self.c1, scalar * self.c2)

    def __repr__(self):
        return f"Weight({self.c1}, {self.c2})"

    def __str__(self):
        c2 = self.c2
        sign = "+" if c2 >= 0 else "-"
        return f"{self.c1}L1 {sign} {abs(c2)}L2"

    @property
    def is_integral(self) -> bool:
        return self.c1.denominator == 1 and self.c2.denominator == 1

    def to_json(self) -> dict:
        """Serialize with decimal-string coordinates; integral only."""
        if not self.is_integral:
            raise ValueError(f"non-integral weight {self!r} has no JSON form")
        return {"c1": str(self.c1), "c2": str(self.c2)}

    @classmethod
    def from_json(cls, data: dict) -> "Weight":
        return cls(int(data["c1"]), int(data["c2"]))


LAMBDA = Weight(1, -1)  # the fixed shape L1 - L2


def pairing(mu: Weight, i: int) -> Fraction:
    """<mu, alpha_i^vee>: coordinate i of mu in the fundamental basis."""
    if i == 1:
        return mu.c1
    if i == 2:
        return mu.c2
    raise ValueError(f"simple root index must be 1 or 2, got {i}")


def simple_root(i: int, gcm: GCM) -> Weight:
    """alpha_i in the fundamental-weight basis, forced by the GCM columns."""
    if i == 1:
        return Weight(2, -gcm.b)
    if i == 2:
        return Weight(-gcm.a, 2)
    raise ValueError(f"simple root index must be 1 or 2, got {i}")


def simple_reflect(i: int, mu: Weight, gcm: GCM) -> Weight:
    """r_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
    return mu - pairing(mu, i) * simple_root(i, gcm)


def dominance_class(mu: Weight) -> str:
    """dominant / antidominant / neither by the signs of the coordinates.

    The zero weight reports dominant; it never occurs on the orbit of
    L1 - L2.
    """
    if mu.c1 >= 0 and mu.c2 >= 0:
        return DOMINANT
    if mu.c1 <= 0 and mu.c2 <= 0:
        return ANTIDOMINANT
    return NEITHER
