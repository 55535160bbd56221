"""Randomized realizable specs and the identity suite run by ``polydiff verify``.

Cyclic data is drawn through upper ramification jumps, which guarantees the
lower jumps come from an actual tower: ``u_1`` prime to p, and
``u_{t+1} >= p u_t`` with ``p`` not dividing ``u_{t+1}`` unless equality
holds.  The lower jumps are ``phi_1 = u_1`` and
``phi_{t+1} = phi_t + p**t (u_{t+1} - u_t)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .basis import BasisElement, divisor_of_element, iter_basis, verify_holomorphic
from .boseck import boseck_table
from .core import (
    CyclicPlace,
    CyclicTower,
    ElabPlace,
    ElementaryAbelian,
    GroupParams,
    PolydiffError,
    TameKummer,
    UnsupportedCaseError,
)
from .decomp import decompose
from .deform import deform, deform_cyclic
from .validation import validate_spec

__all__ = [
    "CheckResult",
    "upper_to_lower",
    "random_upper_jumps",
    "random_spec",
    "random_valid_spec",
    "twin_spec",
    "run_identity_suite",
    "sweep",
]

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""


def upper_to_lower(upper: Sequence[int], p: int) -> Tuple[int, ...]:
    lower = [upper[0]]
    for t in range(1, len(upper)):
        lower.append(lower[-1] + p ** t * (upper[t] - upper[t - 1]))
    return tuple(lower)


def random_upper_jumps(rng: random.Random, p: int, length: int, max_first: int, slack: int = 3) -> Tuple[int, ...]:
    first = rng.choice([u for u in range(1, max_first + 1) if u % p])
    jumps = [first]
    for _ in range(length - 1):
        base = p * jumps[-1]
        options = [base] + [base + s for s in range(1, slack + 1) if (base + s) % p]
        jumps.append(rng.choice(options))
    return tuple(jumps)


def _random_cyclic(rng, primes, max_n, max_places, max_phi, g_base):
    p = rng.choice(primes)
    n = rng.randint(1, max_n)
    s = rng.randint(1, max_places)
    places = []
    for i in range(s):
        # the first place is totally ramified so that m = 1 is always covered
        e = n if i == 0 else rng.randint(1, n)
        lower = upper_to_lower(random_upper_jumps(rng, p, e, max_phi), p)
        places.append(CyclicPlace(e=e, phi=(0,) * (n - e) + lower))
    return CyclicTower(GroupParams(p, n), tuple(places), g_base)


def _random_elab(rng, primes, max_n, max_places, max_phi):
    p = rng.choice(primes)
    n = rng.randint(1, max_n)
    s = rng.randint(1, max_places)
    choices = [v for v in range(1, max_phi + 1) if v % p]
    return ElementaryAbelian(GroupParams(p, n), tuple(ElabPlace(rng.choice(choices)) for _ in range(s)))


def _random_tame(rng, primes, max_places, g_base, max_deg=12):
    p = rng.choice(primes)
    n_deg = rng.choice([d for d in range(2, max_deg + 1) if d % p])
    s = rng.randint(2, max(2, max_places))
    vus = [rng.randint(1, n_deg - 1) for _ in range(s - 1)]
    last = (-sum(vus)) % n_deg
    if last == 0:
        # keep the total divisible by n_deg with every valuation nonzero
        vus[-1] = vus[-1] % (n_deg - 1) + 1
        last = (-sum(vus)) % n_deg
        if last == 0:
            return None
    vus.append(last)
    return TameKummer.from_valuations(n_deg, p, vus, g_base)


def random_spec(
    rng: random.Random,
    kinds: Sequence[str] = ("cyclic", "elab", "tame"),
    primes: Sequence[int] = (2, 3, 5, 7),
    max_n: int = 3,
    max_places: int = 5,
    max_phi: int = 50,
    max_g_base: int = 2,
):
    """One candidate spec; it may still fail validation (e.g. g_F < 2)."""
    kind = rng.choice(list(kinds))
    if kind == "cyclic":
        return _random_cyclic(rng, primes, max_n, max_places, max_phi, rng.randint(0, max_g_base))
    if kind == "elab":
        return _random_elab(rng, primes, max_n, max_places, max_phi)
    return _random_tame(rng, primes, max_places, rng.randint(0, max_g_base))


def random_valid_spec(rng: random.Random, **kwargs):
    while True:
        spec = random_spec(rng, **kwargs)
        if spec is not None and validate_spec(spec).ok:
            return spec


def twin_spec(spec):
    """For n = 1 and a rational base, the same data read as the other wild kind."""
    if isinstance(spec, ElementaryAbelian) and spec.params.n == 1:
        return CyclicTower(spec.params, tuple(CyclicPlace(1, (pl.phi,)) for pl in spec.places), 0)
    if isinstance(spec, CyclicTower) and spec.params.n == 1 and spec.g_base == 0 and spec.places:
        return ElementaryAbelian(spec.params, tuple(ElabPlace(pl.phi[0]) for pl in spec.places))
    return None


def _expected_dim(g_top, m):
    return g_top if m == 1 else (2 * m - 1) * (g_top - 1)


def _check_table(spec, m, out):
    table = boseck_table(spec, m)
    if spec.wild:
        lhs, rhs = 2 * sum(table.gamma), (2 * m - 1) * table.deg_diff
    else:
        lhs, rhs = 2 * sum(table.gamma[1:]), table.deg_diff
    out.append(CheckResult(f"m={m}:different", PASS if lhs == rhs else FAIL, f"{lhs} vs {rhs}"))
    return table


def _check_decomposition(table, m, out):
    dec = decompose(table)
    expected = _expected_dim(table.g_top, m)
    ok = dec.total_dim == expected and all(v >= 0 for v in dec.d)
    out.append(CheckResult(f"m={m}:dimension", PASS if ok else FAIL, f"{dec.total_dim} vs {expected}"))
    return dec


def _check_basis(spec, m, table, dec, out, basis_limit):
    if spec.g_base != 0:
        out.append(CheckResult(f"m={m}:basis", SKIP, "bases are built over a rational base only"))
        return
    if dec.total_dim > basis_limit:
        out.append(CheckResult(f"m={m}:basis", SKIP, f"{dec.total_dim} elements exceed the limit {basis_limit}"))
        return
    count = 0
    problems = []
    last = {}
    for elem in iter_basis(spec, m, table):
        count += 1
        last[elem.k] = elem
        check = verify_holomorphic(elem, spec, table)
        if not check.ok:
            problems.append(f"k={elem.k} nu={elem.nu_x}: {check.reasons[0]}")
    for elem in last.values():
        bumped = BasisElement(elem.k, elem.nu_x + 1, elem.g_exponents, elem.m, elem.digits)
        if verify_holomorphic(bumped, spec, table).ok or divisor_of_element(bumped, spec, table).effective:
            problems.append(f"k={elem.k}: nu_x = {bumped.nu_x} still holomorphic")
    if count != dec.total_dim:
        problems.append(f"{count} elements, decomposition has dimension {dec.total_dim}")
    out.append(CheckResult(f"m={m}:basis", FAIL if problems else PASS, problems[0] if problems else f"{count} elements"))


def _check_twin(spec, m, table, dec, out):
    twin = twin_spec(spec)
    if twin is None:
        return
    t2 = boseck_table(twin, m)
    d2 = decompose(t2)
    same = t2.nu == table.nu and t2.gamma == table.gamma and d2.d == dec.d
    out.append(CheckResult(f"m={m}:n1-agreement", PASS if same else FAIL, f"twin kind {twin.kind}"))


def _check_deform(spec, out):
    if not spec.wild or spec.g_base != 0 or len(spec.places) != 1:
        return
    rep = deform(spec)
    ok = rep.covariant_total == rep.h1_quotient + rep.h1_local
    detail = f"h1_local={rep.h1_local}"
    if rep.kind == "cyclic":
        ok = ok and rep.h1_local == deform_cyclic(rep.delta, rep.q)
    out.append(CheckResult("deform:splitting", PASS if ok else FAIL, detail))
    if rep.kind == "elab" and rep.oracle_covariant_total is not None:
        agree = rep.oracle_covariant_total == rep.covariant_total
        out.append(
            CheckResult(
                "deform:covariant-oracle",
                PASS if agree else FAIL,
                f"closed dims give {rep.covariant_total}, brute force {rep.oracle_covariant_total}",
            )
        )
    twin = twin_spec(spec)
    if twin is not None:
        other = deform(twin)
        same = (other.h1_local, other.covariant_total) == (rep.h1_local, rep.covariant_total)
        out.append(CheckResult("deform:n1-agreement", PASS if same else FAIL, f"twin kind {twin.kind}"))


def run_identity_suite(spec, orders: Sequence[int], basis_limit: int = 5000) -> List[CheckResult]:
    """Every identity that should hold for ``spec`` at the given orders.

    Raises the package errors on invalid input; unsupported orders are
    reported as skipped checks.
    """
    out: List[CheckResult] = []
    for m in orders:
        try:
            table = _check_table(spec, m, out)
            dec = _check_decomposition(table, m, out)
        except UnsupportedCaseError as exc:
            out.append(CheckResult(f"m={m}", SKIP, str(exc)))
            continue
        try:
            _check_basis(spec, m, table, dec, out, basis_limit)
        except UnsupportedCaseError as exc:
            out.append(CheckResult(f"m={m}:basis", SKIP, str(exc)))
        _check_twin(spec, m, table, dec, out)
    _check_deform(spec, out)
    return out


def sweep(seed: int, count: int, orders: Sequence[int] = (1, 2, 3, 4), basis_limit: int = 2000, **kwargs):
    """``count`` random valid specs from ``seed``, each with its suite results.

    Errors raised while checking a spec are recorded as failed checks.
    """
    rng = random.Random(seed)
    results = []
    for _ in range(count):
        spec = random_valid_spec(rng, **kwargs)
        try:
            checks = run_identity_suite(spec, orders, basis_limit)
        except PolydiffError as exc:
            checks = [CheckResult("suite", FAIL, f"{type(exc).__name__}: {exc}")]
        results.append((spec, checks))
    return results

