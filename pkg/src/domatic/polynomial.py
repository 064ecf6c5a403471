"""The domatic polynomial value type.

Coefficients are exact nonnegative integers stored sparsely by degree;
a missing degree means zero. Degree 0 never carries a coefficient, so
zero is always a root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping


@dataclass(frozen=True)
class DomaticPolynomial:
    """Sparse polynomial sum_i c_i x^i with integer c_i >= 0 and i >= 1."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: dict[int, int] = {}
        for deg, c in self.coeffs.items():
            if deg < 1:
                raise ValueError(f"degree {deg} below 1 (zero must stay a root)")
            if c < 0:
                raise ValueError(f"negative coefficient {c} at degree {deg}")
            if c:
                cleaned[deg] = c
        object.__setattr__(self, "coeffs", dict(sorted(cleaned.items())))

    def coefficient(self, degree: int) -> int:
        return self.coeffs.get(degree, 0)

    @property
    def degree(self) -> int:
        """Largest degree with a nonzero coefficient (0 for the zero polynomial)."""
        return max(self.coeffs, default=0)

    def evaluate(self, x: int | Fraction) -> Fraction:
        """Exact evaluation at a rational point."""
        xf = Fraction(x)
        return sum((c * xf**deg for deg, c in self.coeffs.items()), Fraction(0))

    def derivative_at_top(self, r: int) -> int:
        """The r-th derivative for r at or above the polynomial degree.

        At r == degree the derivative is the constant r! * c_r; above the
        degree it vanishes. Below the degree the derivative is not a
        constant, so that call is rejected.
        """
        if r < 1:
            raise ValueError(f"derivative order must be positive, got {r}")
        if r > self.degree:
            return 0
        if r < self.degree:
            raise ValueError(
                f"order {r} is below the polynomial degree {self.degree}; "
                "the derivative is not a constant there"
            )
        return math.factorial(r) * self.coefficient(r)

    def to_json_dict(self) -> dict:
        """JSON form: coefficients as decimal strings keyed by degree."""
        return {"coefficients": {str(d): str(c) for d, c in self.coeffs.items()}}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "DomaticPolynomial":
        return cls({int(d): int(c) for d, c in data["coefficients"].items()})
