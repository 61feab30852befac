"""ADE singularities on plane curves and their configurations.

Only the simple singularities that can appear on a hyperplane section of a
general cubic fourfold matter here: ``A1..A5``, ``D4`` and ``D5``. Each carries
two invariants, the Milnor number (its weight in the codimension count) and
the delta invariant (its contribution to the genus drop).
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import total_ordering

from og10.errors import DomainError, UnsupportedSingularityError

_FAMILY_RANK = {"A": 0, "D": 1}
_TYPE_RE = re.compile(r"^\s*([AD])\s*_?\s*(\d+)\s*$")


@total_ordering
@dataclass(frozen=True)
class SingularityType:
    family: str
    index: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_RANK:
            raise DomainError(f"unknown singularity family {self.family!r}")
        if not isinstance(self.index, int) or isinstance(self.index, bool):
            raise DomainError(f"singularity index must be an int, got {self.index!r}")
        lowest = 1 if self.family == "A" else 4
        if self.index < lowest:
            raise DomainError(f"{self.family}_{self.index}: index must be >= {lowest}")

    @classmethod
    def parse(cls, text: str) -> SingularityType:
        match = _TYPE_RE.match(text)
        if match is None:
            raise DomainError(f"cannot parse singularity type {text!r}")
        return cls(match.group(1), int(match.group(2)))

    @property
    def sort_key(self) -> tuple[int, int]:
        return (_FAMILY_RANK[self.family], self.index)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, SingularityType):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


A1, A2, A3, A4, A5 = (SingularityType("A", i) for i in range(1, 6))
D4, D5 = SingularityType("D", 4), SingularityType("D", 5)

#: The seven types admissible on a hyperplane section of a general cubic fourfold.
ADMISSIBLE_TYPES: tuple[SingularityType, ...] = (A1, A2, A3, A4, A5, D4, D5)


def delta_invariant(t: SingularityType) -> int:
    """Genus drop of ``t``: ``ceil(l/2)`` for ``A_l``, 3 for ``D4`` and ``D5``."""
    if t not in ADMISSIBLE_TYPES:
        raise UnsupportedSingularityError(f"unsupported singularity type {t}")
    if t.family == "A":
        return (t.index + 1) // 2
    return 3


def milnor_number(t: SingularityType) -> int:
    return t.index


@dataclass(frozen=True)
class SingularityConfiguration:
    """A multiset of singularity types; the empty configuration is a smooth curve.

    ``items`` is kept in canonical order (A before D, ascending index) with all
    multiplicities positive, so equal multisets compare and hash equal.
    """

    items: tuple[tuple[SingularityType, int], ...] = field(default=())

    def __post_init__(self) -> None:
        merged: dict[SingularityType, int] = {}
        for t, count in self.items:
            if not isinstance(t, SingularityType):
                raise DomainError(f"expected SingularityType, got {t!r}")
            if not isinstance(count, int) or isinstance(count, bool) or count < 0:
                raise DomainError(f"multiplicity of {t} must be a nonnegative int")
            merged[t] = merged.get(t, 0) + count
        canonical = tuple(sorted((t, c) for t, c in merged.items() if c > 0))
        object.__setattr__(self, "items", canonical)

    @classmethod
    def from_counts(cls, counts: Mapping[SingularityType | str, int]) -> SingularityConfiguration:
        pairs = []
        for key, count in counts.items():
            t = key if isinstance(key, SingularityType) else SingularityType.parse(key)
            pairs.append((t, count))
        return cls(tuple(pairs))

    @classmethod
    def smooth(cls) -> SingularityConfiguration:
        return cls(())

    @property
    def counts(self) -> dict[SingularityType, int]:
        return dict(self.items)

    def count(self, t: SingularityType) -> int:
        return self.counts.get(t, 0)

    def types(self) -> Iterator[SingularityType]:
        """Each singular point's type, with repetition."""
        for t, c in self.items:
            yield from itertools.repeat(t, c)

    @property
    def is_smooth(self) -> bool:
        return not self.items

    @property
    def is_nodal(self) -> bool:
        return all(t == A1 for t, _ in self.items)

    def __add__(self, other: SingularityConfiguration) -> SingularityConfiguration:
        if not isinstance(other, SingularityConfiguration):
            return NotImplemented
        return SingularityConfiguration(self.items + other.items)

    def __len__(self) -> int:
        return sum(c for _, c in self.items)

    def label(self) -> str:
        if self.is_smooth:
            return "smooth"
        return "+".join(f"{c}{t}" if c > 1 else str(t) for t, c in self.items)

    __str__ = label

    def to_json(self) -> dict[str, int]:
        return {str(t): c for t, c in self.items}

    @classmethod
    def from_json(cls, payload: Mapping[str, int]) -> SingularityConfiguration:
        return cls.from_counts(payload)


@dataclass(frozen=True)
class PlaneCurveClass:
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise DomainError("plane curve degree must be positive")

    @property
    def arithmetic_genus(self) -> int:
        return (self.degree - 1) * (self.degree - 2) // 2


QUINTIC = PlaneCurveClass(5)


def mu_total(r: SingularityConfiguration) -> int:
    return sum(milnor_number(t) * c for t, c in r.items)


def delta_total(r: SingularityConfiguration) -> int:
    return sum(delta_invariant(t) * c for t, c in r.items)


def geometric_genus(curve: PlaneCurveClass, r: SingularityConfiguration) -> int:
    """Arithmetic genus minus the total delta invariant.

    No admissibility check: reducible or over-singular inputs may give values
    below 1 (or below 0).
    """
    return curve.arithmetic_genus - delta_total(r)


def _order_key(r: SingularityConfiguration) -> tuple:
    # Within one total Milnor number: largest singularity first, A before D at
    # equal index, then compare the remaining points the same way.
    parts = sorted(r.types(), key=lambda t: (-t.index, _FAMILY_RANK[t.family]))
    return (mu_total(r), [(-t.index, _FAMILY_RANK[t.family]) for t in parts])


def _weighted_multiplicities(
    types: tuple[SingularityType, ...], budget: int
) -> Iterator[tuple[int, ...]]:
    if not types:
        yield ()
        return
    head, rest = types[0], types[1:]
    for m in range(budget // head.index + 1):
        for tail in _weighted_multiplicities(rest, budget - m * head.index):
            yield (m, *tail)


def enumerate_configurations(
    mu_max: int, types: Iterable[SingularityType] = ADMISSIBLE_TYPES
) -> list[SingularityConfiguration]:
    """All configurations over ``types`` with total Milnor number at most ``mu_max``.

    Sorted by total Milnor number, then by descending largest singularity.
    The smooth (empty) configuration comes first.
    """
    if mu_max < 0:
        raise DomainError("mu_max must be nonnegative")
    types = tuple(sorted(set(types)))
    configs = [
        SingularityConfiguration(tuple(zip(types, ms)))
        for ms in _weighted_multiplicities(types, mu_max)
    ]
    return sorted(configs, key=_order_key)


def genus_one_configurations(
    mu_max: int, curve: PlaneCurveClass = QUINTIC
) -> list[SingularityConfiguration]:
    return [r for r in enumerate_configurations(mu_max) if geometric_genus(curve, r) == 1]
