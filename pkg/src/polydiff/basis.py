"""Explicit bases of the holomorphic m-polydifferentials over a rational base.

Wild case (``E = K(x)``, infinite place unramified)::

    x**nu * w_k * g_k(x)**-1 * dx**m,   g_k = prod_i P_i(x)**nu_ik(m),
    0 <= k <= q - 1 (q - 2 when m = 1),  0 <= nu <= Gamma_k(m) - 2m.

Tame case (``y**n = u``, ``u = prod_i (x - a_i)**vu_i``, m = 1)::

    x**nu * y**-k * g_k(x) * dx,   g_k = prod_i P_i(x)**floor(k phi_i / e_i),
    1 <= k <= n - 1,  0 <= nu <= Gamma_k(1) - 2.

Elements are symbolic: only exponents are stored.  Their divisors are
tracked by coefficient at the ramified places and at infinity; what is left
(zeros of ``x**nu`` and of ``w_k`` or ``y**-k`` away from the ramified
places) is carried by its degree only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from .boseck import (
    BoseckTable,
    basis_weight,
    boseck_table,
    different_exponents,
    places_above,
    ramification_exponent,
)
from .core import (
    ConsistencyError,
    TameKummer,
    UnsupportedCaseError,
    p_adic_digits,
)

__all__ = [
    "BasisElement",
    "PlaceDivisor",
    "HolomorphyCheck",
    "enumerate_basis",
    "iter_basis",
    "divisor_of_element",
    "verify_holomorphic",
]


@dataclass(frozen=True)
class BasisElement:
    k: int
    nu_x: int
    g_exponents: Tuple[int, ...]
    m: int
    digits: Tuple[int, ...] = ()


@dataclass(frozen=True)
class PlaceDivisor:
    """Divisor of a basis element, resolved at the ramified places and at infinity.

    ``ramified_coeffs[i]`` is the coefficient at each of the
    ``ramified_multiplicity[i]`` places of F above the i-th ramified place;
    ``infinity_coeff`` is the coefficient at each of the ``infinity_places``
    places above infinity.
    """

    ramified_coeffs: Tuple[int, ...]
    ramified_multiplicity: Tuple[int, ...]
    infinity_coeff: int
    infinity_places: int
    residual_degree: int

    @property
    def degree(self) -> int:
        ramified = sum(c * w for c, w in zip(self.ramified_coeffs, self.ramified_multiplicity))
        return ramified + self.infinity_coeff * self.infinity_places + self.residual_degree

    @property
    def effective(self) -> bool:
        return (
            all(c >= 0 for c in self.ramified_coeffs)
            and self.infinity_coeff >= 0
            and self.residual_degree >= 0
        )


@dataclass(frozen=True)
class HolomorphyCheck:
    ok: bool
    reasons: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _require_rational(spec, m):
    if spec.g_base != 0:
        raise UnsupportedCaseError("bases are constructed over a rational base field only (g_base = 0)")
    if isinstance(spec, TameKummer) and m != 1:
        raise UnsupportedCaseError("tame bases are known for m = 1 only")


def _tame_g_exponents(spec: TameKummer, k: int) -> Tuple[int, ...]:
    return tuple((k * pl.phi) // pl.e for pl in spec.places)


def iter_basis(spec, m: int, table: BoseckTable = None) -> Iterator[BasisElement]:
    """Yield basis elements in ``(k, nu_x)`` order."""
    _require_rational(spec, m)
    if table is None:
        table = boseck_table(spec, m)
    if isinstance(spec, TameKummer):
        for k in range(1, spec.n_deg):
            exps = _tame_g_exponents(spec, k)
            for nu_x in range(table.gamma[k] - 1):
                yield BasisElement(k=k, nu_x=nu_x, g_exponents=exps, m=1)
        return
    q = spec.order
    p, n = spec.params.p, spec.params.n
    last = q - 2 if m == 1 else q - 1
    for k in range(last + 1):
        exps = tuple(row[k] for row in table.nu)
        digits = p_adic_digits(k, p, n)
        for nu_x in range(table.gamma[k] - 2 * m + 1):
            yield BasisElement(k=k, nu_x=nu_x, g_exponents=exps, m=m, digits=digits)


def enumerate_basis(spec, m: int) -> List[BasisElement]:
    return list(iter_basis(spec, m))


def divisor_of_element(elem: BasisElement, spec, table: BoseckTable) -> PlaceDivisor:
    """Divisor of ``elem``; its degree is checked against ``m (2 g_F - 2)``."""
    _require_rational(spec, elem.m)
    m = elem.m
    s = len(spec.places)
    mult = tuple(places_above(spec, i) for i in range(s))
    order = spec.order
    if isinstance(spec, TameKummer):
        # dx: e_i - 1 at each ramified place; y**-k: -k phi_i; g_k: e_i * floor(k phi_i / e_i)
        coeffs = tuple(
            pl.e - 1 - elem.k * pl.phi + pl.e * g for pl, g in zip(spec.places, elem.g_exponents)
        )
        # u = prod (x - a_i)**vu_i has a pole of order sum(vu) at infinity
        at_inf_y = elem.k * sum(pl.vu for pl in spec.places) // spec.n_deg
        infinity = at_inf_y - sum(elem.g_exponents) - 2 - elem.nu_x
        residual = elem.nu_x * order
    else:
        delta = different_exponents(spec)
        coeffs = []
        residual = elem.nu_x * order
        for i in range(s):
            e = ramification_exponent(spec, i)
            weight = basis_weight(spec, i, elem.k)
            coeffs.append(m * delta[i] - weight - spec.p ** e * elem.g_exponents[i])
            # zeros of w_k away from the ramified places balance its poles
            residual += mult[i] * weight
        coeffs = tuple(coeffs)
        infinity = sum(elem.g_exponents) - 2 * m - elem.nu_x
    div = PlaceDivisor(
        ramified_coeffs=coeffs,
        ramified_multiplicity=mult,
        infinity_coeff=infinity,
        infinity_places=order,
        residual_degree=residual,
    )
    expected = m * (2 * table.g_top - 2)
    if div.degree != expected:
        raise ConsistencyError(f"divisor degree {div.degree} != m(2g_F - 2) = {expected} for {elem}")
    return div


def verify_holomorphic(elem: BasisElement, spec, table: BoseckTable) -> HolomorphyCheck:
    reasons = []
    if elem.m != table.m:
        return HolomorphyCheck(False, (f"element has m = {elem.m}, table has m = {table.m}",))
    if not 0 <= elem.k < len(table.gamma):
        return HolomorphyCheck(False, (f"index k = {elem.k} out of range",))
    if elem.nu_x < 0:
        reasons.append(f"negative exponent of x: {elem.nu_x}")
    if isinstance(spec, TameKummer):
        if elem.k == 0:
            reasons.append("k = 0 does not occur in the tame basis")
        bound = table.gamma[elem.k] - 2
        expected = _tame_g_exponents(spec, elem.k)
    else:
        bound = table.gamma[elem.k] - 2 * elem.m
        expected = tuple(row[elem.k] for row in table.nu)
    if elem.g_exponents != expected:
        reasons.append(f"g exponents {elem.g_exponents} differ from {expected}")
    if elem.nu_x > bound:
        reasons.append(f"nu_x = {elem.nu_x} exceeds its upper bound {bound}")
    try:
        div = divisor_of_element(elem, spec, table)
    except ConsistencyError as exc:
        reasons.append(str(exc))
    else:
        for i, c in enumerate(div.ramified_coeffs):
            if c < 0:
                reasons.append(f"pole of order {-c} above ramified place {i}")
        if div.infinity_coeff < 0:
            reasons.append(f"pole of order {-div.infinity_coeff} above infinity")
        if div.residual_degree < 0:
            reasons.append(f"residual part has negative degree {div.residual_degree}")
    return HolomorphyCheck(not reasons, tuple(reasons))
