"""Different exponents and the Boseck invariants built from them.

For a wild place ``i`` with ramification index ``p**e_i`` and different
exponent ``delta_i``, the k-th basis element ``w_k`` of F over E has a pole
of order ``weight_i(k)`` at every place above ``i``, and

    nu_ik(m) = floor((m * delta_i - weight_i(k)) / p**e_i),
    Gamma_k(m) = sum_i nu_ik(m).

In the tame case only ``m = 1`` is treated and ``nu_ik(1)`` is the
fractional part of ``k * phi_i / e_i``, kept as an exact :class:`Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .core import (
    ConsistencyError,
    CyclicPlace,
    CyclicTower,
    ElabPlace,
    ElementaryAbelian,
    GroupParams,
    TameKummer,
    TamePlace,
    UnsupportedCaseError,
    ValidationError,
    p_adic_digits,
)

__all__ = [
    "BoseckTable",
    "different_exponent_cyclic",
    "different_exponent_elab",
    "different_exponent_tame",
    "basis_weight_cyclic",
    "basis_weight",
    "ramification_exponent",
    "places_above",
    "different_exponents",
    "degree_of_different",
    "genus",
    "elab_genus_closed_form",
    "nu",
    "nu_generic",
    "boseck_table",
]


def different_exponent_cyclic(place: CyclicPlace, params: GroupParams) -> int:
    p, n = params.p, params.n
    e = place.e
    delta = (p - 1) * sum((place.phi[j - 1] + 1) * p ** (n - j) for j in range(n - e + 1, n + 1))
    alt = (p - 1) * sum(place.phi[j - 1] * p ** (n - j) for j in range(1, n + 1)) + (p ** e - 1)
    if delta != alt:
        # only possible when the low (unramified) levels carry nonzero phi
        raise ConsistencyError(f"different exponent forms disagree ({delta} != {alt}) for {place}")
    return delta


def different_exponent_elab(place: ElabPlace, params: GroupParams) -> int:
    return (params.q - 1) * (place.phi + 1)


def different_exponent_tame(place: TamePlace) -> int:
    return place.e - 1


def basis_weight_cyclic(place: CyclicPlace, k: int, params: GroupParams) -> int:
    """Pole order of ``w_k = y_1**a_1 ... y_n**a_n`` at a place over ``place``."""
    p, n = params.p, params.n
    digits = p_adic_digits(k, p, n)
    return sum(a * phi * p ** (n - j) for j, (a, phi) in enumerate(zip(digits, place.phi), start=1))


def basis_weight(spec, i: int, k: int) -> int:
    """Pole order of the k-th basis element at the places above place ``i``."""
    place = spec.places[i]
    if isinstance(spec, CyclicTower):
        return basis_weight_cyclic(place, k, spec.params)
    if isinstance(spec, ElementaryAbelian):
        if not 0 <= k < spec.params.q:
            raise ValueError(f"k={k} outside [0, {spec.params.q - 1}]")
        return k * place.phi
    raise UnsupportedCaseError("basis weights are defined for wild extensions only")


def ramification_exponent(spec, i: int) -> int:
    """``e_i`` with ramification index ``p**e_i`` (wild kinds only)."""
    if isinstance(spec, CyclicTower):
        return spec.places[i].e
    if isinstance(spec, ElementaryAbelian):
        return spec.params.n
    raise UnsupportedCaseError("tame places carry their ramification index directly")


def places_above(spec, i: int) -> int:
    """Number of places of F lying over the i-th ramified place of E."""
    if isinstance(spec, TameKummer):
        return spec.n_deg // spec.places[i].e
    return spec.params.p ** (spec.params.n - ramification_exponent(spec, i))


def different_exponents(spec) -> Tuple[int, ...]:
    if isinstance(spec, CyclicTower):
        return tuple(different_exponent_cyclic(pl, spec.params) for pl in spec.places)
    if isinstance(spec, ElementaryAbelian):
        return tuple(different_exponent_elab(pl, spec.params) for pl in spec.places)
    return tuple(different_exponent_tame(pl) for pl in spec.places)


def degree_of_different(spec) -> int:
    return sum(places_above(spec, i) * d for i, d in enumerate(different_exponents(spec)))


def genus(spec) -> int:
    """Genus of F from Riemann-Hurwitz.

    Raises :class:`ValidationError` when the formula does not give an integer.
    """
    twice = spec.order * (2 * spec.g_base - 2) + degree_of_different(spec)
    if twice % 2:
        raise ValidationError(f"Riemann-Hurwitz gives non-integral genus (2g-2 = {twice})")
    return twice // 2 + 1


def elab_genus_closed_form(spec: ElementaryAbelian) -> Fraction:
    q = spec.params.q
    return Fraction(q - 1, 2) * (-2 + sum(pl.phi + 1 for pl in spec.places))


def nu_generic(delta: int, e: int, weight: int, p: int, m: int) -> int:
    """``floor((m*delta + weight) / p**e)`` for a signed basis-element valuation."""
    if e < 1 or m < 1:
        raise ValueError("need e >= 1 and m >= 1")
    return (m * delta + weight) // p ** e


def _check_order(spec, m):
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError(f"order m must be a positive integer, got {m!r}")
    if isinstance(spec, TameKummer) and m != 1:
        raise UnsupportedCaseError(f"tame extensions are handled for m = 1 only (got m = {m})")


def nu(spec, i: int, k: int, m: int) -> Union[int, Fraction]:
    _check_order(spec, m)
    if isinstance(spec, TameKummer):
        if not 0 <= k < spec.n_deg:
            raise ValueError(f"k={k} outside [0, {spec.n_deg - 1}]")
        place = spec.places[i]
        return Fraction((k * place.phi) % place.e, place.e)
    delta = different_exponents(spec)[i]
    return nu_generic(delta, ramification_exponent(spec, i), -basis_weight(spec, i, k), spec.p, m)


@dataclass(frozen=True)
class BoseckTable:
    """``nu[i][k]``, ``gamma[k]`` and the global data they are checked against."""

    spec: object
    m: int
    delta: Tuple[int, ...]
    nu: Tuple[tuple, ...]
    gamma: Tuple[int, ...]
    deg_diff: int
    g_base: int
    g_top: int

    @property
    def order(self) -> int:
        return len(self.gamma)


def boseck_table(spec, m: int) -> BoseckTable:
    _check_order(spec, m)
    delta = different_exponents(spec)
    order = spec.order
    rows = []
    if isinstance(spec, TameKummer):
        for place in spec.places:
            rows.append(tuple(Fraction((k * place.phi) % place.e, place.e) for k in range(order)))
    else:
        p = spec.p
        for i, d in enumerate(delta):
            e = ramification_exponent(spec, i)
            rows.append(tuple(nu_generic(d, e, -basis_weight(spec, i, k), p, m) for k in range(order)))

    gamma = []
    for k in range(order):
        total = sum((row[k] for row in rows), Fraction(0) if spec.kind == "tame" else 0)
        if isinstance(total, Fraction):
            if total.denominator != 1:
                raise ValidationError(
                    f"Gamma_{k} = {total} is not an integer: valuations of u must sum to 0 mod n"
                )
            total = int(total)
        gamma.append(total)

    deg_diff = degree_of_different(spec)
    g_top = genus(spec)
    if isinstance(spec, ElementaryAbelian) and elab_genus_closed_form(spec) != g_top:
        raise ConsistencyError("Riemann-Hurwitz and the closed genus formula disagree")

    if spec.wild:
        if 2 * sum(gamma) != (2 * m - 1) * deg_diff:
            raise ConsistencyError(
                f"2*sum(Gamma) = {2 * sum(gamma)} but (2m-1)*deg Diff = {(2 * m - 1) * deg_diff}"
            )
    elif 2 * sum(gamma[1:]) != deg_diff:
        raise ConsistencyError(f"2*sum(Gamma) = {2 * sum(gamma[1:])} but deg Diff = {deg_diff}")

    return BoseckTable(
        spec=spec,
        m=m,
        delta=delta,
        nu=tuple(rows),
        gamma=tuple(gamma),
        deg_diff=deg_diff,
        g_base=spec.g_base,
        g_top=g_top,
    )
