"""Numerical constraints on Betti numbers of compact hyper-Kahler manifolds.

For a hyper-Kahler manifold of real dimension ``4n``:

* ``b_0 = 1``, ``b_1 = 0`` and Poincare duality ``b_k = b_{4n-k}``;
* Salamon's linear relation
  ``2 * sum_{l=1}^{2n} (-1)^l (3 l^2 - n) b_{2n-l} = n b_{2n}``;
* Verbitsky's bounds ``b_{2k} >= binom(b_2 + k - 1, k)`` for ``2 <= k <= n``.

For OG10 (``n = 5``) one also knows ``b_2 = 24`` and ``chi = 176904``. These do
not pin down the Betti numbers; :func:`iter_feasible_og10` enumerates the
survivors to show it.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from math import comb
from typing import NamedTuple

from og10.errors import DomainError

OG10_HALF_DIMENSION = 5
OG10_B2 = 24
OG10_EULER = 176904
DEFAULT_MAX_ODD = 12
DEFAULT_SEARCH_LIMIT = 100
ODD_FREE_INDICES = (3, 5, 7, 9)


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers ``b_0..b_{4n}`` of a candidate ``4n``-real-dimensional manifold.

    Only shape and nonnegativity are enforced; ``b_0 = 1``, ``b_1 = 0`` and
    duality are checked separately so that reports can flag them.
    """

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if self.n < 1:
            raise DomainError("half dimension n must be positive")
        if len(self.values) != 4 * self.n + 1:
            raise DomainError(
                f"expected {4 * self.n + 1} Betti numbers for n={self.n}, got {len(self.values)}"
            )
        if any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in self.values):
            raise DomainError("Betti numbers must be nonnegative integers")

    @classmethod
    def from_half(cls, n: int, lower: Sequence[int]) -> BettiVector:
        """Build from ``b_0..b_{2n}`` by Poincare duality."""
        lower = tuple(lower)
        if len(lower) != 2 * n + 1:
            raise DomainError(f"expected {2 * n + 1} values, got {len(lower)}")
        return cls(n, lower + lower[-2::-1])

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    @property
    def dimension(self) -> int:
        return 4 * self.n

    def duality_holds(self) -> bool:
        return self.values == self.values[::-1]

    def normalized(self) -> bool:
        return self.values[0] == 1 and self.values[1] == 0

    def to_json(self) -> dict[str, object]:
        return {"n": self.n, "b": list(self.values)}

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> BettiVector:
        try:
            n, b = payload["n"], payload["b"]
        except (KeyError, TypeError):
            raise DomainError('Betti vector JSON must look like {"n": 5, "b": [...]}') from None
        if not isinstance(n, int) or not isinstance(b, list):
            raise DomainError('"n" must be an integer and "b" a list')
        return cls(n, tuple(b))


class SalamonResult(NamedTuple):
    holds: bool
    left: int
    right: int


def salamon_coefficients(n: int) -> list[int]:
    """Coefficient of ``b_i`` (``0 <= i <= 2n``) in ``left - right`` of Salamon's relation."""
    coeffs = [0] * (2 * n + 1)
    for l in range(1, 2 * n + 1):
        coeffs[2 * n - l] += 2 * (-1) ** l * (3 * l * l - n)
    coeffs[2 * n] -= n
    return coeffs


def salamon_check(b: BettiVector) -> SalamonResult:
    n = b.n
    left = 2 * sum((-1) ** l * (3 * l * l - n) * b[2 * n - l] for l in range(1, 2 * n + 1))
    right = n * b[2 * n]
    return SalamonResult(left == right, left, right)


def verbitsky_bounds(n: int, b2: int) -> list[tuple[int, int]]:
    """Lower bounds ``(k, binom(b2 + k - 1, k))`` on ``b_{2k}`` for ``k = 2..n``.

    For ``b2 < 3`` the bound is degenerate; :func:`verbitsky_in_regime` flags it.
    """
    if n < 2:
        raise DomainError("Verbitsky bounds need n >= 2")
    if b2 < 0:
        raise DomainError("b2 must be nonnegative")
    return [(k, comb(b2 + k - 1, k)) for k in range(2, n + 1)]


def verbitsky_in_regime(b2: int) -> bool:
    return b2 >= 3


def euler_from_betti(b: BettiVector) -> int:
    return sum((-1) ** i * v for i, v in enumerate(b.values))


@dataclass(frozen=True)
class ConstraintReport:
    b2_expected: int
    b2_actual: int
    b0_is_one: bool
    b1_is_zero: bool
    duality_holds: bool
    salamon: SalamonResult
    verbitsky_violations: tuple[tuple[int, int, int], ...]
    euler_value: int
    euler_expected: int = field(default=OG10_EULER)

    @property
    def b2_holds(self) -> bool:
        return self.b2_actual == self.b2_expected

    @property
    def salamon_holds(self) -> bool:
        return self.salamon.holds

    @property
    def euler_holds(self) -> bool:
        return self.euler_value == self.euler_expected

    def failures(self) -> list[str]:
        checks = {
            "b2": self.b2_holds,
            "b0": self.b0_is_one,
            "b1": self.b1_is_zero,
            "duality": self.duality_holds,
            "salamon": self.salamon_holds,
            "verbitsky": not self.verbitsky_violations,
            "euler": self.euler_holds,
        }
        return [name for name, ok in checks.items() if not ok]

    @property
    def passed(self) -> bool:
        return not self.failures()

    def to_json(self) -> dict[str, object]:
        return {
            "passed": self.passed,
            "failures": self.failures(),
            "b2": {"expected": self.b2_expected, "actual": self.b2_actual, "holds": self.b2_holds},
            "b0_is_one": self.b0_is_one,
            "b1_is_zero": self.b1_is_zero,
            "duality_holds": self.duality_holds,
            "salamon": {
                "holds": self.salamon.holds,
                "left": str(self.salamon.left),
                "right": str(self.salamon.right),
            },
            "verbitsky_violations": [
                {"k": k, "bound": str(bound), "actual": str(actual)}
                for k, bound, actual in self.verbitsky_violations
            ],
            "euler": {
                "value": str(self.euler_value),
                "expected": str(self.euler_expected),
                "holds": self.euler_holds,
            },
        }


def check_og10(b: BettiVector) -> ConstraintReport:
    """Check every known OG10 constraint on ``b``; each is reported on its own."""
    if b.n != OG10_HALF_DIMENSION:
        raise DomainError(f"OG10 has n={OG10_HALF_DIMENSION}, got n={b.n}")
    violations = tuple(
        (k, bound, b[2 * k])
        for k, bound in verbitsky_bounds(b.n, b[2])
        if b[2 * k] < bound
    )
    return ConstraintReport(
        b2_expected=OG10_B2,
        b2_actual=b[2],
        b0_is_one=b[0] == 1,
        b1_is_zero=b[1] == 0,
        duality_holds=b.duality_holds(),
        salamon=salamon_check(b),
        verbitsky_violations=violations,
        euler_value=euler_from_betti(b),
    )


def _odd_bounds(bounds: int | Mapping[int, int]) -> dict[int, int]:
    if isinstance(bounds, int):
        bounds = {i: bounds for i in ODD_FREE_INDICES}
    if not bounds:
        raise DomainError("empty search bounds")
    out = {}
    for i in ODD_FREE_INDICES:
        if i not in bounds:
            raise DomainError(f"missing upper bound for b{i}")
        if bounds[i] < 0:
            raise DomainError(f"upper bound for b{i} must be nonnegative")
        out[i] = bounds[i]
    return out


def _og10_linear_system() -> tuple[dict[int, int], int, dict[int, int], int]:
    """The Salamon and Euler equations in the unknowns ``b_3..b_10``.

    Duality folds ``b_i`` with ``i > 10`` onto ``b_{20-i}``; ``b_0, b_1, b_2``
    are fixed. Returns ``(salamon, salamon_rhs, euler, euler_rhs)`` where each
    equation reads ``sum(coeffs[i] * b_i) == rhs``.
    """
    n = OG10_HALF_DIMENSION
    fixed = {0: 1, 1: 0, 2: OG10_B2}
    sal = salamon_coefficients(n)
    eul = [0] * (2 * n + 1)
    for i in range(4 * n + 1):
        eul[min(i, 4 * n - i)] += (-1) ** i
    sal_rhs = -sum(sal[i] * v for i, v in fixed.items())
    eul_rhs = OG10_EULER - sum(eul[i] * v for i, v in fixed.items())
    unknown = range(3, 2 * n + 1)
    return (
        {i: sal[i] for i in unknown},
        sal_rhs,
        {i: eul[i] for i in unknown},
        eul_rhs,
    )


def iter_feasible_og10(bounds: int | Mapping[int, int] = DEFAULT_MAX_ODD) -> Iterator[BettiVector]:
    """Lazily yield every OG10 Betti vector passing :func:`check_og10`, lexicographically.

    ``bounds`` caps the odd Betti numbers ``b_3, b_5, b_7, b_9`` (one int for
    all, or a mapping by index). The even ones ``b_4..b_10`` are bounded below
    by Verbitsky; ``b_8`` and ``b_10`` are then solved exactly from the Salamon
    and Euler equations, and ``b_4, b_6`` are bounded above by pruning.
    """
    odd_max = _odd_bounds(bounds)
    lower = {2 * k: bound for k, bound in verbitsky_bounds(OG10_HALF_DIMENSION, OG10_B2)}
    sal, sal_rhs, eul, eul_rhs = _og10_linear_system()

    # Eliminate b_10 to get one equation in b_3..b_9, then solve it for b_8.
    red = {i: eul[10] * sal[i] - sal[10] * eul[i] for i in range(3, 10)}
    red_rhs = eul[10] * sal_rhs - sal[10] * eul_rhs
    if red[8] < 0:
        red = {i: -c for i, c in red.items()}
        red_rhs = -red_rhs
    if not all(red[i] > 0 for i in (4, 6, 8)):
        raise AssertionError("expected positive even coefficients after elimination")

    # Smallest possible value of red[i] * b_i for each unknown, used for pruning.
    def floor_term(i: int) -> int:
        if i % 2 == 0:
            return red[i] * lower[i]
        return min(0, red[i] * odd_max[i])

    order = (3, 4, 5, 6, 7)
    budget = red_rhs - red[8] * lower[8]

    def assign(depth: int, partial: dict[int, int], used: int) -> Iterator[dict[int, int]]:
        if depth == len(order):
            yield partial
            return
        i = order[depth]
        rest = sum(floor_term(j) for j in order[depth + 1 :]) + floor_term(9)
        if i % 2:
            candidates: Iterator[int] = iter(range(odd_max[i] + 1))
        else:
            hi = (budget - used - rest) // red[i]
            candidates = iter(range(lower[i], hi + 1))
        for v in candidates:
            term = red[i] * v
            if used + term + rest > budget:
                continue
            yield from assign(depth + 1, {**partial, i: v}, used + term)

    for partial in assign(0, {}, 0):
        found = []
        for b9 in range(odd_max[9] + 1):
            known = {**partial, 9: b9}
            num = red_rhs - sum(red[i] * v for i, v in known.items())
            b8, rem = divmod(num, red[8])
            if rem or b8 < lower[8]:
                continue
            known[8] = b8
            num10 = eul_rhs - sum(eul[i] * v for i, v in known.items())
            b10, rem = divmod(num10, eul[10])
            if rem or b10 < lower[10]:
                continue
            found.append(
                BettiVector.from_half(
                    OG10_HALF_DIMENSION,
                    [1, 0, OG10_B2] + [known[i] for i in range(3, 10)] + [b10],
                )
            )
        yield from sorted(found, key=lambda v: v.values)


def search_feasible_og10(
    bounds: int | Mapping[int, int] = DEFAULT_MAX_ODD,
    limit: int | None = DEFAULT_SEARCH_LIMIT,
) -> list[BettiVector]:
    """The first ``limit`` feasible vectors in lexicographic order (all if ``limit`` is None).

    The full solution set is astronomically large for the default bounds, so
    an unbounded call only makes sense for tiny ranges.
    """
    if limit is not None and limit < 0:
        raise DomainError("limit must be nonnegative")
    return list(itertools.islice(iter_feasible_og10(bounds), limit))
