"""Number of 5-tangent hyperplanes to a general hypersurface in P^5.

The count for degree ``d`` hypersurfaces is

    m(d) = (d - 2) * d * P(d) / 120

with ``P`` the degree-23 integer polynomial in :data:`M5A1_COEFFICIENTS`
(Kazarian's ``enum[4,5]``). Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from og10.errors import InvariantViolation
from og10.singularity import A1, SingularityConfiguration, mu_total

M5A1_DENOMINATOR = 120

# Highest degree first.
M5A1_COEFFICIENTS: tuple[int, ...] = (
    1, -18, 154, -832, 3181, -9332, 23306, -56258, 137704, -315702,
    632037, -1167746, 2276543, -4606484, 8183892, -12182630, 19262625,
    -37322080, 63347155, -72821310, 73475394, -156527928, 284455368,
    -193415040,
)  # fmt: skip

MIN_ENUMERATIVE_DEGREE = 3


def coefficient_digest(coefficients: tuple[int, ...] = M5A1_COEFFICIENTS) -> str:
    return hashlib.sha256(",".join(map(str, coefficients)).encode()).hexdigest()


@dataclass(frozen=True)
class EnumerativePolynomial:
    """``(d - 2) * d * P(d) / denominator`` with ``P`` given by its coefficients."""

    coefficients: tuple[int, ...]
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if not self.coefficients or self.coefficients[0] == 0:
            raise ValueError("leading coefficient must be nonzero")

    def inner_horner(self, d: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = acc * d + c
        return acc

    def inner_powers(self, d: int) -> int:
        top = len(self.coefficients) - 1
        return sum(c * d ** (top - i) for i, c in enumerate(self.coefficients))

    def _divide(self, numerator: int) -> int:
        q, rem = divmod(numerator, self.denominator)
        if rem:
            raise InvariantViolation(
                f"numerator {numerator} not divisible by {self.denominator}; "
                "coefficient table is corrupted"
            )
        return q

    def evaluate(self, d: int) -> int:
        return self._divide((d - 2) * d * self.inner_horner(d))

    def evaluate_naive(self, d: int) -> int:
        return self._divide((d - 2) * d * self.inner_powers(d))


M5A1 = EnumerativePolynomial(M5A1_COEFFICIENTS, M5A1_DENOMINATOR)


def evaluate_m5A1(d: int) -> int:
    """Exact number of 5-tangent hyperplanes to a general degree ``d`` hypersurface.

    Evaluated two ways (Horner and explicit powers); any disagreement raises
    :class:`InvariantViolation`. Values for ``d < 3`` are returned but carry
    no enumerative meaning, see :func:`is_enumeratively_valid`.
    """
    horner = M5A1.evaluate(d)
    naive = M5A1.evaluate_naive(d)
    if horner != naive:
        raise InvariantViolation(f"evaluation paths disagree at d={d}: {horner} != {naive}")
    return horner


def is_enumeratively_valid(d: int) -> bool:
    return d >= MIN_ENUMERATIVE_DEGREE


def dual_variety_degree_cubic_fourfold() -> int:
    # deg of the dual of a smooth degree-d hypersurface in P^5 is d(d-1)^4.
    return 3 * 2**4


@dataclass(frozen=True)
class StratumDegreeRecord:
    configuration: SingularityConfiguration
    degree: int | None = None

    @property
    def codimension(self) -> int:
        return mu_total(self.configuration)


def known_stratum_degrees() -> list[StratumDegreeRecord]:
    """Degrees of strata of the dual of a general cubic fourfold known in closed form."""
    return [
        StratumDegreeRecord(SingularityConfiguration(((A1, 1),)), dual_variety_degree_cubic_fourfold()),
        StratumDegreeRecord(SingularityConfiguration(((A1, 5),)), evaluate_m5A1(3)),
    ]


@dataclass(frozen=True)
class Identity:
    name: str
    left: int
    right: int

    @property
    def equal(self) -> bool:
        return self.left == self.right


TRITANGENTS_CUBIC_SURFACE = 45
FOUR_TANGENTS_CUBIC_THREEFOLD = 495


def identity_checks() -> list[Identity]:
    return [
        Identity("3^5(3^6-1)", 3**5 * (3**6 - 1), evaluate_m5A1(3)),
        Identity("2^4(2^5-1)-1", 2**4 * (2**5 - 1) - 1, FOUR_TANGENTS_CUBIC_THREEFOLD),
        # Reference value only; no formula to check it against.
        Identity("tritangents", TRITANGENTS_CUBIC_SURFACE, 45),
    ]
