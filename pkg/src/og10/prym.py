"""Euler characteristics of compactified Pryms and Jacobians of nodal curves.

A compactified Jacobian of a nodal curve is stratified by generalized
Jacobians of its partial normalizations. Each stratum is an extension of an
abelian variety by a torus ``(C*)^k``, so its Euler characteristic vanishes
unless both the torus and the abelian part are trivial.

For an etale double cover ``D -> C`` of an irreducible nodal curve, the nodes
of ``D`` come in free pairs under the covering involution, and only strata
indexed by involution-invariant node subsets meet the compactified Prym. Such
subsets are in bijection with subsets of the nodes of ``C``.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from dataclasses import dataclass

from og10.errors import DomainError, ResourceBoundError

DEFAULT_MAX_BRUTE_NODES = 25
MAX_NODES_ENV = "OG10_MAX_BRUTE_NODES"


def max_brute_nodes() -> int:
    raw = os.environ.get(MAX_NODES_ENV)
    if raw is None:
        return DEFAULT_MAX_BRUTE_NODES
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{MAX_NODES_ENV} must be an integer, got {raw!r}") from None
    return max(value, DEFAULT_MAX_BRUTE_NODES)


@dataclass(frozen=True)
class NodalCoverModel:
    """Etale double cover of an irreducible curve with ``base_nodes`` nodes.

    ``normalization_genus`` is the genus of the normalization of the base.
    """

    base_nodes: int
    normalization_genus: int

    def __post_init__(self) -> None:
        if self.base_nodes < 0:
            raise DomainError("base_nodes must be nonnegative")
        if self.normalization_genus < 1:
            raise DomainError(
                "no connected etale double cover: normalization genus must be >= 1"
            )

    @property
    def cover_nodes(self) -> int:
        return 2 * self.base_nodes

    def lift(self, base_subset: int) -> int:
        """Bitmask of cover nodes over a bitmask of base nodes.

        Cover nodes ``2i`` and ``2i+1`` form the involution orbit over base node ``i``.
        """
        lifted = 0
        for i in range(self.base_nodes):
            if base_subset >> i & 1:
                lifted |= 0b11 << (2 * i)
        return lifted


def torus_euler(dim: int) -> int:
    return 1 if dim == 0 else 0


def abelian_euler(dim: int) -> int:
    return 1 if dim == 0 else 0


@dataclass(frozen=True)
class PrymStratum:
    normalized_base_nodes: int
    torus_dimension: int
    abelian_dimension: int

    @property
    def euler(self) -> int:
        return torus_euler(self.torus_dimension) * abelian_euler(self.abelian_dimension)


def prym_strata(model: NodalCoverModel) -> Iterator[PrymStratum]:
    """One stratum per involution-invariant subset ``B`` of cover nodes.

    The torus rank is the number of involution orbits among the cover nodes
    left unnormalized, ``(#A - #B) / 2``.
    """
    r = model.base_nodes
    abelian_dim = model.normalization_genus - 1
    for base_subset in range(1 << r):
        # Equal to model.lift(base_subset).bit_count().
        normalized = 2 * base_subset.bit_count()
        yield PrymStratum(
            normalized_base_nodes=normalized // 2,
            torus_dimension=(model.cover_nodes - normalized) // 2,
            abelian_dimension=abelian_dim,
        )


def euler_prym(model: NodalCoverModel) -> int:
    """1 for normalization genus 1, else 0; the node count plays no role."""
    return 1 if model.normalization_genus == 1 else 0


def _check_cap(n: int) -> None:
    cap = max_brute_nodes()
    if n > cap:
        raise ResourceBoundError(f"{n} nodes exceeds the enumeration cap of {cap}")


def euler_prym_bruteforce(model: NodalCoverModel) -> int:
    _check_cap(model.base_nodes)
    return sum(stratum.euler for stratum in prym_strata(model))


def count_prym_strata(model: NodalCoverModel) -> tuple[int, int]:
    """Return ``(strata enumerated, strata with nonzero Euler characteristic)``."""
    _check_cap(model.base_nodes)
    total = nonzero = 0
    for stratum in prym_strata(model):
        total += 1
        nonzero += stratum.euler != 0
    return total, nonzero


def euler_compactified_jacobian_bruteforce(node_count: int, normalization_genus: int) -> int:
    if node_count < 0 or normalization_genus < 0:
        raise DomainError("node_count and normalization_genus must be nonnegative")
    _check_cap(node_count)
    total = 0
    for subset in range(1 << node_count):
        torus_dim = node_count - subset.bit_count()
        total += torus_euler(torus_dim) * abelian_euler(normalization_genus)
    return total
