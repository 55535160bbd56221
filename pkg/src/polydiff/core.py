"""Domain types and p-adic digit machinery.

An extension is described by its ramification data only: the pole orders
of the Artin-Schreier (or Kummer) generators at the ramified places, never
the defining equations themselves.  Three kinds are supported:

* :class:`CyclicTower` -- a cyclic extension of degree ``p**n`` written as a
  tower of Artin-Schreier steps, over a base of arbitrary genus;
* :class:`ElementaryAbelian` -- ``y**q - y = f(x)`` over a rational base,
  every ramified place totally ramified;
* :class:`TameKummer` -- ``y**n = u`` with ``gcd(n, p) = 1``.

All objects are immutable.  Constructors only check shapes; the
mathematical hypotheses are checked by :func:`polydiff.validation.validate_spec`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Tuple, Union

__all__ = [
    "PolydiffError",
    "ValidationError",
    "RealizabilityError",
    "UnsupportedCaseError",
    "ConsistencyError",
    "GroupParams",
    "CyclicPlace",
    "ElabPlace",
    "TamePlace",
    "CyclicTower",
    "ElementaryAbelian",
    "TameKummer",
    "ExtensionSpec",
    "p_adic_digits",
    "from_digits",
]


class PolydiffError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PolydiffError):
    """The input violates a standing hypothesis (bad shape, g_F < 2, ...)."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class RealizabilityError(PolydiffError):
    """A multiplicity came out negative, so the ramification data cannot occur."""

    def __init__(self, message, index=None, value=None):
        super().__init__(message)
        self.index = index
        self.value = value


class UnsupportedCaseError(PolydiffError):
    """The request is well formed but outside the cases with a known answer."""


class ConsistencyError(PolydiffError):
    """An internal cross-check failed.  Never expected on validated input."""


def _check_int(name, value, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")


@dataclass(frozen=True)
class GroupParams:
    """Prime ``p`` and exponent ``n`` of a group of order ``q = p**n``."""

    p: int
    n: int

    def __post_init__(self):
        _check_int("p", self.p, 2)
        _check_int("n", self.n, 1)

    @property
    def q(self) -> int:
        return self.p ** self.n


@dataclass(frozen=True)
class CyclicPlace:
    """A ramified place of a cyclic tower.

    ``phi[j-1]`` is the pole order of the j-th Artin-Schreier right-hand side
    at a place of the (j-1)-th field lying over this place.  The place has
    ramification index ``p**e``; the lowest ``n - e`` levels are unramified,
    so those entries are zero.
    """

    e: int
    phi: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(self.phi))
        _check_int("e", self.e)
        for value in self.phi:
            _check_int("phi entry", value)

    @classmethod
    def from_phi(cls, phi) -> "CyclicPlace":
        """Build a place, reading ``e`` off the number of leading zeros."""
        phi = tuple(phi)
        zeros = 0
        while zeros < len(phi) and phi[zeros] == 0:
            zeros += 1
        return cls(e=len(phi) - zeros, phi=phi)


@dataclass(frozen=True)
class ElabPlace:
    """A ramified place of an elementary abelian extension, with pole order ``phi``."""

    phi: int

    def __post_init__(self):
        _check_int("phi", self.phi)


@dataclass(frozen=True)
class TamePlace:
    """A ramified place of a Kummer extension ``y**n = u``.

    ``vu`` is the valuation of ``u`` at the place, ``e`` the ramification
    index and ``phi`` the valuation of ``y`` at a place above it.
    """

    vu: int
    e: int
    phi: int

    def __post_init__(self):
        _check_int("vu", self.vu)
        _check_int("e", self.e)
        _check_int("phi", self.phi)

    @classmethod
    def of(cls, vu: int, n_deg: int) -> "TamePlace":
        _check_int("vu", vu)
        _check_int("n_deg", n_deg, 1)
        g = gcd(n_deg, vu)
        e = n_deg // g
        return cls(vu=vu, e=e, phi=vu // g)


@dataclass(frozen=True)
class CyclicTower:
    params: GroupParams
    places: Tuple[CyclicPlace, ...]
    g_base: int = 0

    kind = "cyclic"
    wild = True

    def __post_init__(self):
        object.__setattr__(self, "places", tuple(self.places))
        _check_int("g_base", self.g_base, 0)

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def order(self) -> int:
        return self.params.q


@dataclass(frozen=True)
class ElementaryAbelian:
    params: GroupParams
    places: Tuple[ElabPlace, ...]

    kind = "elab"
    wild = True
    g_base = 0

    def __post_init__(self):
        object.__setattr__(self, "places", tuple(self.places))

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def order(self) -> int:
        return self.params.q


@dataclass(frozen=True)
class TameKummer:
    n_deg: int
    p: int
    places: Tuple[TamePlace, ...]
    g_base: int = 0

    kind = "tame"
    wild = False

    def __post_init__(self):
        object.__setattr__(self, "places", tuple(self.places))
        _check_int("n_deg", self.n_deg, 1)
        _check_int("p", self.p, 2)
        _check_int("g_base", self.g_base, 0)

    @property
    def order(self) -> int:
        return self.n_deg

    @classmethod
    def from_valuations(cls, n_deg, p, vus, g_base=0) -> "TameKummer":
        return cls(n_deg, p, tuple(TamePlace.of(v, n_deg) for v in vus), g_base)


ExtensionSpec = Union[CyclicTower, ElementaryAbelian, TameKummer]


def p_adic_digits(k: int, p: int, n: int) -> Tuple[int, ...]:
    """Digits ``(a_1, ..., a_n)`` with ``k = a_1 + a_2 p + ... + a_n p**(n-1)``.

    >>> p_adic_digits(5, 3, 2)
    (2, 1)
    """
    _check_int("k", k)
    if not 0 <= k < p ** n:
        raise ValueError(f"k={k} outside [0, {p}**{n} - 1]")
    digits = []
    for _ in range(n):
        k, a = divmod(k, p)
        digits.append(a)
    return tuple(digits)


def from_digits(digits, p: int) -> int:
    return sum(a * p ** j for j, a in enumerate(digits))
