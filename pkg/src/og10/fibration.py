"""Euler characteristic of a proper map, summed stratum by stratum.

Over each stratum of a Whitney stratification of the base the map is a
locally trivial fibration, so the total Euler characteristic is
``sum(chi(stratum) * chi(fiber))``. When the fiber has Euler characteristic
zero the base contribution is irrelevant and need not be known.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from og10.degrees import evaluate_m5A1
from og10.errors import ModelConsistencyError
from og10.prym import NodalCoverModel, euler_prym
from og10.singularity import (
    QUINTIC,
    SingularityConfiguration,
    enumerate_configurations,
    geometric_genus,
    mu_total,
)

UNUSED = "unused: fiber chi = 0"
SMOOTH_LABEL = "U"


@dataclass(frozen=True)
class FibrationStratum:
    """``base_euler`` is ``None`` when unknown; only allowed if ``fiber_euler`` is 0."""

    label: str
    base_euler: int | None
    fiber_euler: int
    configuration: SingularityConfiguration | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.base_euler is None and self.fiber_euler != 0:
            raise ModelConsistencyError(
                f"stratum {self.label!r}: base Euler characteristic required when fiber chi != 0"
            )

    @property
    def contribution(self) -> int:
        if self.fiber_euler == 0:
            return 0
        assert self.base_euler is not None
        return self.base_euler * self.fiber_euler


@dataclass(frozen=True)
class FibrationModel:
    """Strata declared by the caller to partition the base."""

    strata: tuple[FibrationStratum, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "strata", tuple(self.strata))
        seen: set[str] = set()
        for s in self.strata:
            if s.label in seen:
                raise ModelConsistencyError(f"duplicate stratum label {s.label!r}")
            seen.add(s.label)

    def __add__(self, other: FibrationModel) -> FibrationModel:
        if not isinstance(other, FibrationModel):
            return NotImplemented
        return FibrationModel(self.strata + other.strata)

    def nonzero_strata(self) -> list[FibrationStratum]:
        return [s for s in self.strata if s.contribution != 0]


def total_euler(model: FibrationModel | Iterable[FibrationStratum]) -> int:
    if not isinstance(model, FibrationModel):
        model = FibrationModel(tuple(model))
    return sum(s.contribution for s in model.strata)


def fiber_euler_for(configuration: SingularityConfiguration) -> int:
    """Euler characteristic of the compactified Prym over a quintic with these singularities."""
    genus = geometric_genus(QUINTIC, configuration)
    if configuration.is_nodal:
        return euler_prym(NodalCoverModel(len(configuration), genus))
    return 1 if genus == 1 else 0


def build_og10_model() -> FibrationModel:
    """Stratification of the base ``(P^5)^dual`` for a general cubic fourfold.

    The smooth locus carries intermediate Jacobians (complex tori, chi 0).
    Discriminant strata are indexed by singularity configurations of total
    Milnor number at most 5; only the 5A1 stratum is a finite set of points.
    """
    strata = [FibrationStratum(SMOOTH_LABEL, None, 0, SingularityConfiguration.smooth())]
    five_nodes = SingularityConfiguration.from_counts({"A1": 5})
    for config in enumerate_configurations(5):
        if config.is_smooth:
            continue
        base = evaluate_m5A1(3) if config == five_nodes else None
        strata.append(FibrationStratum(config.label(), base, fiber_euler_for(config), config))
    return FibrationModel(tuple(strata))


def trace_rows(model: FibrationModel) -> list[dict[str, object]]:
    rows = []
    for s in model.strata:
        config = s.configuration
        rows.append(
            {
                "label": s.label,
                "mu_tot": mu_total(config) if config is not None else 0,
                "geometric_genus": geometric_genus(QUINTIC, config) if config is not None else None,
                "fiber_euler": s.fiber_euler,
                "base_euler": UNUSED if s.base_euler is None else s.base_euler,
                "contribution": s.contribution,
            }
        )
    return rows
