"""Tangent-space dimensions for deformations of Katz-Gabber covers.

A Katz-Gabber cover is a G-cover of the projective line with a single,
totally ramified, branch point.  The tangent space ``H^1(G, T_X)`` is the
space of G-covariants of the 2-polydifferentials, and it splits as

    dim H^1(G, T_X) = dim H^1(X/G, pi_*^G T_X) + dim H^1(G, T_K[[t]])
                      (h1_quotient)            (h1_local)

with ``h1_quotient = 3 g_{X/G} - 3 + ceil(delta / q)``.  The covariant
dimension comes from the m = 2 decomposition and the dimensions of the
covariants of the indecomposables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .boseck import boseck_table, different_exponents
from .core import CyclicTower, ElementaryAbelian, UnsupportedCaseError, ValidationError
from .decomp import decompose
from .modrep import covariant_dim_closed, covariant_dim_oracle, small_field

__all__ = [
    "DeformReport",
    "h1_quotient_dim",
    "deform_cyclic",
    "elab_closed_form",
    "deform_report_cyclic",
    "deform_elab",
    "deform",
    "ORACLE_LIMIT",
]

# largest group order for which the brute-force covariant dimensions are attached
ORACLE_LIMIT = 64


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def h1_quotient_dim(g_quotient: int, delta: int, q: int) -> int:
    return 3 * g_quotient - 3 + _ceil_div(delta, q)


def deform_cyclic(delta: int, q: int) -> int:
    """``floor(2 delta / q) - ceil(delta / q)``."""
    return (2 * delta) // q - _ceil_div(delta, q)


@dataclass(frozen=True)
class DeformReport:
    kind: str
    delta: int
    q: int
    gamma: Tuple[int, ...]
    d: Tuple[int, ...]
    covariant_dims: Tuple[int, ...]
    covariant_total: int
    h1_quotient: int
    h1_local: int
    closed_form: Optional[int] = None
    closed_form_agrees: Optional[bool] = None
    oracle_covariant_total: Optional[int] = None


def _katz_gabber(spec) -> int:
    if spec.g_base != 0:
        raise ValidationError("a Katz-Gabber cover lives over the projective line (g_base = 0)")
    if len(spec.places) != 1:
        raise ValidationError(
            f"a Katz-Gabber cover has exactly one ramified place, got {len(spec.places)}"
        )
    if isinstance(spec, CyclicTower) and spec.places[0].e != spec.params.n:
        raise ValidationError("the ramified place of a Katz-Gabber cover must be totally ramified")
    return different_exponents(spec)[0]


def deform_report_cyclic(spec: CyclicTower) -> DeformReport:
    """All modules of a cyclic group have one-dimensional covariants, so the total is ``sum d``."""
    if not isinstance(spec, CyclicTower):
        raise TypeError("deform_report_cyclic needs a CyclicTower")
    delta = _katz_gabber(spec)
    q = spec.order
    table = boseck_table(spec, 2)
    dec = decompose(table)
    total = sum(dec.d)
    h1q = h1_quotient_dim(0, delta, q)
    return DeformReport(
        kind="cyclic",
        delta=delta,
        q=q,
        gamma=table.gamma,
        d=dec.d,
        covariant_dims=(1,) * q,
        covariant_total=total,
        h1_quotient=h1q,
        h1_local=total - h1q,
    )


def elab_closed_form(gamma, p: int) -> int:
    """The published closed sum for the elab covariant total.

    As printed the correction sum starts at ``nu = 0`` with a ``Gamma_{-1}``
    term; that term is dropped here, so the sum runs over
    ``nu = p, 2p, ..., q - p``.
    """
    q = len(gamma)
    correction = sum(gamma[v - 1] - gamma[v] for v in range(p, q, p))
    return gamma[0] + gamma[p - 1] - 6 - correction


def deform_elab(spec: ElementaryAbelian) -> DeformReport:
    if not isinstance(spec, ElementaryAbelian):
        raise TypeError("deform_elab needs an ElementaryAbelian spec")
    delta = _katz_gabber(spec)
    p, n, q = spec.params.p, spec.params.n, spec.order
    table = boseck_table(spec, 2)
    dec = decompose(table)
    dims = tuple(covariant_dim_closed(j, p, n) for j in range(1, q + 1))
    total = sum(dj * w for dj, w in zip(dec.d, dims))
    oracle_total = None
    if q <= ORACLE_LIMIT:
        field = small_field(p, n)
        oracle_total = sum(dj * covariant_dim_oracle(j, field) for j, dj in enumerate(dec.d, start=1) if dj)
    h1q = h1_quotient_dim(0, delta, q)
    closed = elab_closed_form(table.gamma, p)
    return DeformReport(
        kind="elab",
        delta=delta,
        q=q,
        gamma=table.gamma,
        d=dec.d,
        covariant_dims=dims,
        covariant_total=total,
        h1_quotient=h1q,
        h1_local=total - h1q,
        closed_form=closed,
        closed_form_agrees=closed == total,
        oracle_covariant_total=oracle_total,
    )


def deform(spec) -> DeformReport:
    if isinstance(spec, CyclicTower):
        return deform_report_cyclic(spec)
    if isinstance(spec, ElementaryAbelian):
        return deform_elab(spec)
    raise UnsupportedCaseError("deformation dimensions are computed for wild Katz-Gabber covers only")
