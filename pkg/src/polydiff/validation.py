"""Checks of the standing hypotheses on an :data:`ExtensionSpec`."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Optional, Tuple

from sympy import isprime

from .boseck import genus
from .core import (
    CyclicTower,
    ElementaryAbelian,
    PolydiffError,
    TameKummer,
    ValidationError,
)

__all__ = ["ValidationReport", "validate_spec", "require_valid"]


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[str, ...]
    g_top: Optional[int]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def genus_ok(self) -> bool:
        return self.g_top is not None and self.g_top >= 2


def _cyclic_violations(spec: CyclicTower, strict: bool):
    p, n = spec.params.p, spec.params.n
    out = []
    if not spec.places and spec.g_base < 2:
        out.append("an unramified cyclic extension needs g_base >= 2")
    for i, place in enumerate(spec.places):
        if len(place.phi) != n:
            out.append(f"place {i}: phi has {len(place.phi)} entries, expected n = {n}")
            continue
        if not 1 <= place.e <= n:
            out.append(f"place {i}: e = {place.e} outside [1, {n}]")
            continue
        for j in range(1, n + 1):
            phi = place.phi[j - 1]
            if j <= n - place.e:
                if phi != 0:
                    out.append(f"place {i}: phi({j}) = {phi} must vanish below level n - e = {n - place.e}")
            elif phi <= 0 or gcd(phi, p) != 1:
                out.append(f"place {i}: phi({j}) = {phi} is not standard (positive and prime to p = {p})")
        if strict:
            for j in range(1, n):
                if place.phi[j] < p * place.phi[j - 1]:
                    out.append(
                        f"place {i}: jump condition phi({j + 1}) >= p*phi({j}) fails "
                        f"({place.phi[j]} < {p * place.phi[j - 1]})"
                    )
    if spec.g_base == 0 and spec.places and not any(pl.e == n for pl in spec.places):
        # the rational function field has no unramified extensions
        out.append("over a rational base some place must be totally ramified (e = n)")
    return out


def _elab_violations(spec: ElementaryAbelian):
    p = spec.params.p
    out = []
    if not spec.places:
        out.append("an elementary abelian extension needs at least one ramified place")
    for i, place in enumerate(spec.places):
        if place.phi < 1 or gcd(place.phi, p) != 1:
            out.append(f"place {i}: phi = {place.phi} is not standard (positive and prime to p = {p})")
    return out


def _tame_violations(spec: TameKummer):
    n = spec.n_deg
    out = []
    if gcd(n, spec.p) != 1:
        out.append(f"degree n = {n} is not prime to p = {spec.p}")
    if not spec.places:
        out.append("a Kummer extension needs at least one ramified place")
    for i, place in enumerate(spec.places):
        if not 0 < place.vu < n:
            out.append(f"place {i}: valuation of u = {place.vu} outside (0, {n})")
            continue
        if place.e != n // gcd(n, place.vu):
            out.append(f"place {i}: e = {place.e} but n / gcd(n, vu) = {n // gcd(n, place.vu)}")
        if place.phi * n != place.e * place.vu:
            out.append(f"place {i}: phi * n = {place.phi * n} differs from e * vu = {place.e * place.vu}")
    if spec.places and sum(pl.vu for pl in spec.places) % n:
        out.append(f"valuations of u sum to {sum(pl.vu for pl in spec.places)}, not 0 mod n = {n}")
    if spec.g_base == 0 and spec.places and reduce(gcd, (pl.vu for pl in spec.places), n) != 1:
        out.append("over a rational base gcd(n, valuations of u) must be 1, else y**n = u is reducible")
    return out


def validate_spec(spec, strict: bool = False) -> ValidationReport:
    """Report every violated hypothesis.  Never raises for a well-typed spec."""
    if isinstance(spec, TameKummer):
        p = spec.p
    else:
        p = spec.params.p
    violations = []
    if not isprime(p):
        violations.append(f"p = {p} is not prime")
    if isinstance(spec, CyclicTower):
        violations += _cyclic_violations(spec, strict)
    elif isinstance(spec, ElementaryAbelian):
        violations += _elab_violations(spec)
    elif isinstance(spec, TameKummer):
        violations += _tame_violations(spec)
    else:
        return ValidationReport((f"unknown extension kind {type(spec).__name__}",), None)

    g_top = None
    if not violations:
        try:
            g_top = genus(spec)
        except PolydiffError as exc:
            violations.append(str(exc))
        else:
            if g_top < 2:
                violations.append(f"g_F = {g_top} < 2 (the genus of F is assumed to be at least 2)")
    return ValidationReport(tuple(violations), g_top)


def require_valid(spec, strict: bool = False) -> ValidationReport:
    report = validate_spec(spec, strict)
    if not report.ok:
        raise ValidationError("; ".join(report.violations), report.violations)
    return report
