"""Multiplicities of indecomposable K[G]-modules in the polydifferentials.

For wild G of order q the indecomposables are indexed by their dimension
``j = 1..q`` and ``d[j-1]`` counts copies of the j-dimensional one.  For the
tame (Kummer) case the irreducible characters are indexed by ``j = 0..n-1``
and ``d[j]`` is the multiplicity of the j-th one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .boseck import BoseckTable
from .core import (
    ConsistencyError,
    CyclicTower,
    ElementaryAbelian,
    RealizabilityError,
    TameKummer,
    UnsupportedCaseError,
)

__all__ = [
    "Decomposition",
    "decompose",
    "decompose_cyclic",
    "decompose_cyclic_m1",
    "decompose_elab",
    "decompose_elab_m1",
    "decompose_tame",
    "basis_counts",
]


@dataclass(frozen=True)
class Decomposition:
    kind: str
    m: int
    d: Tuple[int, ...]
    total_dim: int

    @property
    def dims(self) -> Tuple[int, ...]:
        """Dimension of the module counted by each entry of ``d``."""
        if self.kind == "tame":
            return (1,) * len(self.d)
        return tuple(range(1, len(self.d) + 1))

    @property
    def labels(self) -> Tuple[int, ...]:
        if self.kind == "tame":
            return tuple(range(len(self.d)))
        return tuple(range(1, len(self.d) + 1))

    def multiplicity(self, j: int) -> int:
        return self.d[self.labels.index(j)]


def _expected_dim(table: BoseckTable) -> int:
    if table.m == 1:
        return table.g_top
    return (2 * table.m - 1) * (table.g_top - 1)


def _finish(table: BoseckTable, d, first_label: int) -> Decomposition:
    for idx, value in enumerate(d):
        if value < 0:
            label = idx + first_label
            raise RealizabilityError(
                f"multiplicity d_{label} = {value} < 0: the ramification data is not realizable",
                index=label,
                value=value,
            )
    kind = table.spec.kind
    if kind == "tame":
        total = sum(d)
    else:
        total = sum(j * dj for j, dj in enumerate(d, start=1))
    if total != _expected_dim(table):
        raise ConsistencyError(f"total dimension {total} != expected {_expected_dim(table)}")
    return Decomposition(kind=kind, m=table.m, d=tuple(d), total_dim=total)


def _require(table, cls, what):
    if not isinstance(table.spec, cls):
        raise TypeError(f"{what} needs a table built from a {cls.__name__} spec")


def decompose_cyclic(table: BoseckTable) -> Decomposition:
    _require(table, CyclicTower, "decompose_cyclic")
    m = table.m
    if m < 2:
        raise UnsupportedCaseError("decompose_cyclic needs m >= 2; use decompose_cyclic_m1")
    gamma = table.gamma
    q = len(gamma)
    d = [gamma[k - 1] - gamma[k] for k in range(1, q)]
    d.append(gamma[q - 1] + (table.g_base - 1) * (2 * m - 1))
    return _finish(table, d, 1)


def decompose_cyclic_m1(table: BoseckTable) -> Decomposition:
    _require(table, CyclicTower, "decompose_cyclic_m1")
    if table.m != 1:
        raise UnsupportedCaseError("decompose_cyclic_m1 needs a table with m = 1")
    spec = table.spec
    n = spec.params.n
    if not any(pl.e == n for pl in spec.places):
        raise UnsupportedCaseError(
            "m = 1 without a totally ramified place involves an unramified subextension; "
            "that case is not covered by the Boseck invariants"
        )
    gamma = table.gamma
    q = len(gamma)
    d = [gamma[k - 1] - gamma[k] - (1 if k == q - 1 else 0) for k in range(1, q)]
    d.append(table.g_base)
    return _finish(table, d, 1)


def decompose_elab(table: BoseckTable) -> Decomposition:
    _require(table, ElementaryAbelian, "decompose_elab")
    m = table.m
    if m < 2:
        raise UnsupportedCaseError("decompose_elab needs m >= 2; use decompose_elab_m1")
    gamma = table.gamma
    q = len(gamma)
    d = [gamma[j - 1] - gamma[j] for j in range(1, q)]
    d.append(gamma[q - 1] - 2 * m + 1)
    return _finish(table, d, 1)


def basis_counts(table: BoseckTable) -> Tuple[int, ...]:
    """Number of basis elements ``x**nu * w_k / g_k * dx**m`` for each k (rational base, wild).

    For ``m >= 2`` this is ``Gamma_k - 2m + 1``; for ``m = 1`` the last index
    ``k = q - 1`` contributes nothing.
    """
    m = table.m
    q = len(table.gamma)
    top = q - 1 if m == 1 else q
    return tuple(table.gamma[k] - 2 * m + 1 if k < top else 0 for k in range(q))


def decompose_elab_m1(table: BoseckTable) -> Decomposition:
    """m = 1, read off from the basis counts.

    The copies of the j-dimensional module are the basis indices ``k = j - 1``
    not absorbed by the larger modules, so ``d_j = count_{j-1} - count_j``.
    """
    _require(table, ElementaryAbelian, "decompose_elab_m1")
    if table.m != 1:
        raise UnsupportedCaseError("decompose_elab_m1 needs a table with m = 1")
    counts = basis_counts(table) + (0,)
    q = len(table.gamma)
    d = [counts[j - 1] - counts[j] for j in range(1, q + 1)]

    gamma = table.gamma
    beta_form = [gamma[j - 1] - gamma[j] - (1 if j == q - 1 else 0) for j in range(1, q)] + [0]
    if d != beta_form:
        raise ConsistencyError(f"basis-count multiplicities {d} differ from {beta_form}")
    return _finish(table, d, 1)


def decompose_tame(table: BoseckTable) -> Decomposition:
    _require(table, TameKummer, "decompose_tame")
    g = table.g_base
    d = [g] + [table.gamma[j] - 1 + g for j in range(1, len(table.gamma))]
    return _finish(table, d, 0)


def decompose(table: BoseckTable) -> Decomposition:
    """Pick the decomposition rule matching the table's kind and order."""
    spec = table.spec
    if isinstance(spec, TameKummer):
        return decompose_tame(table)
    if isinstance(spec, CyclicTower):
        return decompose_cyclic_m1(table) if table.m == 1 else decompose_cyclic(table)
    return decompose_elab_m1(table) if table.m == 1 else decompose_elab(table)
