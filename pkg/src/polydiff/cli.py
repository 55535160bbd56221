"""Command line interface: ``polydiff <command> [options]``.

Exit codes: 0 success, 1 a verify check failed, 2 invalid input,
3 non-realizable ramification data, 4 unsupported case.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from sympy import isprime

from . import __version__
from .basis import iter_basis
from .boseck import boseck_table
from .core import (
    ConsistencyError,
    RealizabilityError,
    TameKummer,
    UnsupportedCaseError,
    ValidationError,
)
from .decomp import decompose
from .deform import deform
from .modrep import covariant_dim_closed, covariant_dim_oracle, fixed_space_dim, small_field
from .specio import load_spec, parse_int, parse_orders, spec_to_dict
from .validation import require_valid
from .verify import FAIL, run_identity_suite, sweep

__all__ = ["JobConfig", "Section", "run", "main", "COMMANDS", "SCHEMA"]

SCHEMA = "polydiff.report/1"
COMMANDS = ("table", "decompose", "basis", "deform", "oracle", "verify")
FORMATS = ("json", "tsv", "pretty")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_VALIDATION = 2
EXIT_REALIZABILITY = 3
EXIT_UNSUPPORTED = 4


@dataclass(frozen=True)
class JobConfig:
    commands: Tuple[str, ...]
    spec: object = None
    orders: Tuple[int, ...] = (1,)
    output_format: str = "json"
    strict: bool = False
    seed: int = 0
    count: int = 20
    p: Optional[int] = None
    n: Optional[int] = None

    def __post_init__(self):
        if not self.commands:
            raise ValidationError("at least one command is required")
        for cmd in self.commands:
            if cmd not in COMMANDS:
                raise ValidationError(f"unknown command {cmd!r}")
        if self.output_format not in FORMATS:
            raise ValidationError(f"unknown output format {self.output_format!r}")
        if not self.orders or any(m < 1 for m in self.orders):
            raise ValidationError("orders m must be >= 1")


@dataclass
class Section:
    """One block of a report: structured data plus a flat table view."""

    command: str
    data: dict
    columns: List[str]
    rows: List[List[str]] = field(default_factory=list)
    failed: bool = False


def _s(x) -> str:
    return str(x)


def _seq(xs) -> List[str]:
    return [str(x) for x in xs]


def _table_section(spec, orders) -> Section:
    s = len(spec.places)
    sec = Section("table", {"tables": []}, ["m", "k", "gamma"] + [f"nu_{i}" for i in range(s)])
    for m in orders:
        t = boseck_table(spec, m)
        sec.data["tables"].append(
            {
                "m": _s(m),
                "delta": _seq(t.delta),
                "deg_diff": _s(t.deg_diff),
                "g_base": _s(t.g_base),
                "g_top": _s(t.g_top),
                "gamma": _seq(t.gamma),
                "nu": [_seq(row) for row in t.nu],
            }
        )
        for k, g in enumerate(t.gamma):
            sec.rows.append([_s(m), _s(k), _s(g)] + [_s(row[k]) for row in t.nu])
    return sec


def _decompose_section(spec, orders) -> Section:
    sec = Section("decompose", {"decompositions": []}, ["m", "j", "module_dim", "multiplicity"])
    for m in orders:
        t = boseck_table(spec, m)
        dec = decompose(t)
        sec.data["decompositions"].append(
            {
                "m": _s(m),
                "gamma": _seq(t.gamma),
                "d": _seq(dec.d),
                "labels": _seq(dec.labels),
                "total_dim": _s(dec.total_dim),
                "g_top": _s(t.g_top),
            }
        )
        for label, dim, mult in zip(dec.labels, dec.dims, dec.d):
            sec.rows.append([_s(m), _s(label), _s(dim), _s(mult)])
    return sec


def _basis_section(spec, orders) -> Section:
    sec = Section("basis", {"bases": []}, ["m", "k", "digits", "nu_x", "g_exponents"])
    for m in orders:
        elements = []
        for elem in iter_basis(spec, m):
            digits = ",".join(_seq(elem.digits))
            gexp = ",".join(_seq(elem.g_exponents))
            elements.append(
                {"k": _s(elem.k), "digits": _seq(elem.digits), "nu_x": _s(elem.nu_x), "g_exponents": _seq(elem.g_exponents)}
            )
            sec.rows.append([_s(m), _s(elem.k), digits, _s(elem.nu_x), gexp])
        sec.data["bases"].append({"m": _s(m), "count": _s(len(elements)), "elements": elements})
    return sec


def _deform_section(spec) -> Section:
    if not isinstance(spec, TameKummer) and len(spec.places) != 1:
        raise ValidationError(
            f"deform needs a single ramified place (one branch point), got {len(spec.places)} places"
        )
    rep = deform(spec)
    data = {
        "kind": rep.kind,
        "delta": _s(rep.delta),
        "q": _s(rep.q),
        "gamma_m2": _seq(rep.gamma),
        "d_m2": _seq(rep.d),
        "covariant_dims": _seq(rep.covariant_dims),
        "covariant_total": _s(rep.covariant_total),
        "h1_quotient": _s(rep.h1_quotient),
        "h1_local": _s(rep.h1_local),
    }
    if rep.closed_form is not None:
        data["closed_form"] = _s(rep.closed_form)
        data["closed_form_agrees"] = "true" if rep.closed_form_agrees else "false"
    if rep.oracle_covariant_total is not None:
        data["oracle_covariant_total"] = _s(rep.oracle_covariant_total)
    sec = Section("deform", data, ["field", "value"])
    for key, value in data.items():
        sec.rows.append([key, ",".join(value) if isinstance(value, list) else value])
    return sec


def _oracle_section(p: int, n: int) -> Section:
    fld = small_field(p, n)
    sec = Section("oracle", {}, ["j", "covariant_oracle", "covariant_closed", "agrees", "fixed_dim"])
    entries, mismatches = [], []
    for j in range(1, p ** n + 1):
        orc = covariant_dim_oracle(j, fld)
        closed = covariant_dim_closed(j, p, n)
        fixed = fixed_space_dim(j, fld)
        agree = orc == closed
        if not agree:
            mismatches.append(_s(j))
        entries.append(
            {"j": _s(j), "covariant_oracle": _s(orc), "covariant_closed": _s(closed), "fixed_dim": _s(fixed)}
        )
        sec.rows.append([_s(j), _s(orc), _s(closed), "true" if agree else "false", _s(fixed)])
    sec.data = {
        "p": _s(p),
        "n": _s(n),
        "modulus": _seq(fld.modulus),
        "modules": entries,
        "covariant_mismatches": mismatches,
    }
    return sec


def _checks_json(checks):
    return [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks]


def _verify_section(config: JobConfig) -> Section:
    sec = Section("verify", {}, ["spec", "check", "status", "detail"])
    if config.spec is not None:
        runs = [(config.spec, run_identity_suite(config.spec, config.orders))]
        sec.data["mode"] = "spec"
    else:
        runs = sweep(config.seed, config.count, config.orders)
        sec.data.update({"mode": "sweep", "seed": _s(config.seed), "count": _s(config.count)})
    sec.data["orders"] = _seq(config.orders)
    results = []
    n_fail = 0
    for idx, (spec, checks) in enumerate(runs):
        results.append({"spec": spec_to_dict(spec), "checks": _checks_json(checks)})
        for c in checks:
            n_fail += c.status == FAIL
            sec.rows.append([_s(idx), c.name, c.status, c.detail])
    sec.data["results"] = results
    sec.data["failures"] = _s(n_fail)
    sec.failed = n_fail > 0
    return sec


def _build_section(cmd: str, config: JobConfig) -> Section:
    if cmd == "oracle":
        if config.p is None or config.n is None:
            raise ValidationError("oracle needs --p and --n")
        if config.p < 2 or config.n < 1:
            raise ValidationError("oracle needs p >= 2 and n >= 1")
        if not isprime(config.p):
            raise ValidationError(f"p = {config.p} is not prime")
        return _oracle_section(config.p, config.n)
    if cmd == "verify":
        if config.spec is not None:
            require_valid(config.spec, config.strict)
        return _verify_section(config)
    if config.spec is None:
        raise ValidationError(f"{cmd} needs --spec")
    require_valid(config.spec, config.strict)
    if cmd == "table":
        return _table_section(config.spec, config.orders)
    if cmd == "decompose":
        return _decompose_section(config.spec, config.orders)
    if cmd == "basis":
        return _basis_section(config.spec, config.orders)
    return _deform_section(config.spec)


def _header(config: JobConfig) -> str:
    return f"{SCHEMA} polydiff {__version__} {' '.join(config.commands)}"


def render(config: JobConfig, sections: Sequence[Section]) -> str:
    fmt = config.output_format
    if fmt == "json":
        doc = {
            "schema": SCHEMA,
            "generator": f"polydiff {__version__}",
            "spec": spec_to_dict(config.spec) if config.spec is not None else None,
            "sections": [{"command": s.command, **s.data} for s in sections],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"# {_header(config)}"]
    for sec in sections:
        if fmt == "tsv":
            lines.append(f"# section {sec.command}")
            lines.append("\t".join(sec.columns))
            lines.extend("\t".join(row) for row in sec.rows)
        else:
            lines.append("")
            lines.append(f"== {sec.command} ==")
            widths = [len(c) for c in sec.columns]
            for row in sec.rows:
                widths = [max(w, len(v)) for w, v in zip(widths, row)]
            lines.append("  ".join(c.ljust(w) for c, w in zip(sec.columns, widths)).rstrip())
            lines.extend("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in sec.rows)
    return "\n".join(lines) + "\n"


def run(config: JobConfig, out=None, err=None) -> int:
    """Execute every command of ``config``; write the report to ``out``."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        sections = [_build_section(cmd, config) for cmd in config.commands]
    except ValidationError as exc:
        err.write(f"polydiff: invalid input: {exc}\n")
        return EXIT_VALIDATION
    except RealizabilityError as exc:
        err.write(f"polydiff: not realizable: {exc}\n")
        return EXIT_REALIZABILITY
    except UnsupportedCaseError as exc:
        err.write(f"polydiff: unsupported: {exc}\n")
        return EXIT_UNSUPPORTED
    except ConsistencyError as exc:
        err.write(f"polydiff: internal consistency check failed: {exc}\n")
        return EXIT_CHECK_FAILED
    out.write(render(config, sections))
    return EXIT_CHECK_FAILED if any(s.failed for s in sections) else EXIT_OK


def _parse_orders_flag(text: str) -> Tuple[int, ...]:
    if "," in text:
        return parse_orders(text.split(","))
    return parse_orders(text)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="JSON file describing the extension")
    common.add_argument("--m", help="order m, a range like 1..4, or a list like 1,3")
    common.add_argument("--format", choices=FORMATS, default="json", dest="output_format")
    common.add_argument("--strict", action="store_true", help="also check phi(j+1) >= p*phi(j) for cyclic towers")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized verify sweeps")

    parser = argparse.ArgumentParser(prog="polydiff", description="Galois module structure of polydifferentials.")
    parser.add_argument("--version", action="version", version=f"polydiff {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="Boseck invariants nu and Gamma")
    sub.add_parser("decompose", parents=[common], help="multiplicities of indecomposable modules")
    sub.add_parser("basis", parents=[common], help="explicit basis of the polydifferentials")
    sub.add_parser("deform", parents=[common], help="deformation tangent-space dimensions")
    oracle = sub.add_parser("oracle", parents=[common], help="brute-force covariant and fixed-space dimensions")
    oracle.add_argument("--p", type=int, required=True)
    oracle.add_argument("--n", type=int, required=True)
    verify = sub.add_parser("verify", parents=[common], help="run the identity suite")
    verify.add_argument("--count", type=int, default=20, help="number of random specs when no --spec is given")
    return parser


def config_from_args(args) -> JobConfig:
    spec, file_orders = (None, None)
    if args.spec:
        try:
            spec, file_orders = load_spec(args.spec)
        except OSError as exc:
            raise ValidationError(f"cannot read {args.spec}: {exc.strerror}") from exc
    if args.m is not None:
        orders = _parse_orders_flag(args.m)
    elif file_orders is not None:
        orders = file_orders
    elif args.command == "verify" and not isinstance(spec, TameKummer):
        orders = (1, 2, 3, 4)
    else:
        orders = (1,)
    return JobConfig(
        commands=(args.command,),
        spec=spec,
        orders=orders,
        output_format=args.output_format,
        strict=args.strict,
        seed=args.seed,
        count=parse_int(getattr(args, "count", 20), "count"),
        p=getattr(args, "p", None),
        n=getattr(args, "n", None),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except (ValidationError, TypeError, ValueError) as exc:
        sys.stderr.write(f"polydiff: invalid input: {exc}\n")
        return EXIT_VALIDATION
    return run(config)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
