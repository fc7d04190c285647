"""Command-line front end.

Subcommands: table (Hilbert-Kunz values), period (period report), realize
(search for a ring with a prescribed period), verify (closed form against the
Groebner oracle), gb (display a reduced basis).  Data goes to stdout,
diagnostics to stderr.  Exit codes: 0 success, 1 verification failure,
2 invalid input, 3 search exhausted.

All output is deterministic and integer-exact; JSON is rendered canonically
(sorted keys, two-space indent) so identical invocations are byte-identical
and parse/re-render round-trips.
"""

import argparse
import csv
import enum
import json
import os
import sys
from collections.abc import Sequence
from dataclasses import dataclass

from .closed_form import InvalidRingError, RingSpec, hk_table, hk_value
from .groebner import (
    QCapExceededError,
    buchberger,
    frobenius_power_generators,
    hk_brute,
    standard_monomial_count,
    verify_closed_form_basis,
)
from .numtheory import NoPrimesInClassError, NotAUnitError
from .period import period_of
from .realize import SearchExhausted, realize

DEFAULT_Q_CAP = 512
DEFAULT_N_LIMIT = 10_000
DEFAULT_P_LIMIT = 10_000

ENV_Q_CAP = "HKKIT_QCAP"
ENV_N_LIMIT = "HKKIT_NLIMIT"
ENV_P_LIMIT = "HKKIT_PLIMIT"


class OutputFormat(enum.Enum):
    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class CliConfig:
    """Resolved runtime knobs: flag beats environment beats default."""

    q_cap: int = DEFAULT_Q_CAP
    n_limit: int = DEFAULT_N_LIMIT
    p_limit: int = DEFAULT_P_LIMIT
    format: OutputFormat = OutputFormat.PLAIN


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def _pick(flag: int | None, env: int | None, default: int) -> int:
    if flag is not None:
        if flag < 1:
            raise ValueError(f"limits must be positive, got {flag}")
        return flag
    if env is not None:
        return env
    return default


def _resolve_config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        q_cap=_pick(getattr(args, "qcap", None), _env_int(ENV_Q_CAP), DEFAULT_Q_CAP),
        n_limit=_pick(
            getattr(args, "nlimit", None), _env_int(ENV_N_LIMIT), DEFAULT_N_LIMIT
        ),
        p_limit=_pick(
            getattr(args, "plimit", None), _env_int(ENV_P_LIMIT), DEFAULT_P_LIMIT
        ),
        format=OutputFormat(args.format),
    )


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    cells = [[str(c) for c in row] for row in rows]
    widths = [
        max(len(h), *(len(row[k]) for row in cells)) if cells else len(h)
        for k, h in enumerate(header)
    ]
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for row in cells:
        print("  ".join(c.rjust(w) for c, w in zip(row, widths)))


def _emit_pairs(pairs: Sequence[tuple[str, object]]) -> None:
    width = max(len(k) for k, _ in pairs)
    for key, value in pairs:
        print(f"{key:<{width}}  {value}")


def _bool_str(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_table(args: argparse.Namespace, config: CliConfig) -> int:
    spec = RingSpec(args.p, args.n)
    records = hk_table(spec, args.emax)
    rows = [[r.e, r.q, r.b, r.hk, r.phi] for r in records]
    if config.format is OutputFormat.JSON:
        _emit_json(
            {
                "p": spec.p,
                "n": spec.n,
                "rows": [
                    {"e": r.e, "q": r.q, "b": r.b, "hk": r.hk, "phi": r.phi}
                    for r in records
                ],
            }
        )
    elif config.format is OutputFormat.CSV:
        _emit_csv(["e", "q", "b", "hk", "phi"], rows)
    else:
        _emit_table(["e", "q", "b", "hk", "phi"], rows)
    return 0


def cmd_period(args: argparse.Namespace, config: CliConfig) -> int:
    spec = RingSpec(args.p, args.n)
    report = period_of(spec)
    if config.format is OutputFormat.JSON:
        _emit_json(
            {
                "p": spec.p,
                "n": spec.n,
                "omega": report.omega,
                "pi": report.pi,
                "branch": report.branch.value,
                "involution": report.involution_check,
                "phi_profile": list(report.phi_profile),
            }
        )
    elif config.format is OutputFormat.CSV:
        _emit_csv(
            ["p", "n", "omega", "pi", "branch", "involution", "phi_profile"],
            [
                [
                    spec.p,
                    spec.n,
                    report.omega,
                    report.pi,
                    report.branch.value,
                    _bool_str(report.involution_check),
                    ";".join(str(v) for v in report.phi_profile),
                ]
            ],
        )
    else:
        _emit_pairs(
            [
                ("p", spec.p),
                ("n", spec.n),
                ("omega", report.omega),
                ("pi", report.pi),
                ("branch", report.branch.value),
                ("involution", _bool_str(report.involution_check)),
                ("phi_profile", " ".join(str(v) for v in report.phi_profile)),
            ]
        )
    return 0


def cmd_realize(args: argparse.Namespace, config: CliConfig) -> int:
    result = realize(args.pi, config.n_limit, config.p_limit)
    spec, report, stats = result.spec, result.report, result.search_stats
    if config.format is OutputFormat.JSON:
        _emit_json(
            {
                "target_pi": result.target_pi,
                "spec": {"p": spec.p, "n": spec.n},
                "report": {
                    "omega": report.omega,
                    "pi": report.pi,
                    "branch": report.branch.value,
                    "involution": report.involution_check,
                    "phi_profile": list(report.phi_profile),
                },
                "residue_used": result.residue_used,
                "search_stats": {
                    "n_candidates": stats.n_candidates,
                    "p_candidates": stats.p_candidates,
                },
            }
        )
    elif config.format is OutputFormat.CSV:
        _emit_csv(
            [
                "target_pi",
                "p",
                "n",
                "omega",
                "pi",
                "branch",
                "residue_used",
                "n_candidates",
                "p_candidates",
            ],
            [
                [
                    result.target_pi,
                    spec.p,
                    spec.n,
                    report.omega,
                    report.pi,
                    report.branch.value,
                    result.residue_used,
                    stats.n_candidates,
                    stats.p_candidates,
                ]
            ],
        )
    else:
        _emit_pairs(
            [
                ("target_pi", result.target_pi),
                ("p", spec.p),
                ("n", spec.n),
                ("omega", report.omega),
                ("pi", report.pi),
                ("branch", report.branch.value),
                ("residue_used", result.residue_used),
                ("n_candidates", stats.n_candidates),
                ("p_candidates", stats.p_candidates),
            ]
        )
    return 0


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    spec = RingSpec(args.p, args.n)
    rows = []
    skipped: list[int] = []
    all_pass = True
    for e in range(args.emax + 1):
        q = spec.p**e
        if q > config.q_cap:
            skipped.append(e)
            continue
        closed = hk_value(spec, e)
        oracle = hk_brute(spec, e, config.q_cap)
        basis_ok = None
        if q > spec.n:
            basis_ok = bool(verify_closed_form_basis(spec, e, config.q_cap))
        ok = closed == oracle and basis_ok is not False
        all_pass = all_pass and ok
        rows.append((e, q, closed, oracle, basis_ok, ok))
    if skipped:
        print(
            f"skipped e = {skipped[0]}..{skipped[-1]}: "
            f"q = p^e exceeds the oracle cap {config.q_cap}",
            file=sys.stderr,
        )
    if config.format is OutputFormat.JSON:
        _emit_json(
            {
                "p": spec.p,
                "n": spec.n,
                "q_cap": config.q_cap,
                "rows": [
                    {
                        "e": e,
                        "q": q,
                        "closed_form": closed,
                        "oracle": oracle,
                        "basis_check": basis_ok,
                        "pass": ok,
                    }
                    for e, q, closed, oracle, basis_ok, ok in rows
                ],
                "skipped_e": skipped,
                "all_pass": all_pass,
            }
        )
    elif config.format is OutputFormat.CSV:
        _emit_csv(
            ["e", "q", "closed_form", "oracle", "basis_check", "status"],
            [
                [
                    e,
                    q,
                    closed,
                    oracle,
                    "na" if basis_ok is None else ("pass" if basis_ok else "fail"),
                    "PASS" if ok else "FAIL",
                ]
                for e, q, closed, oracle, basis_ok, ok in rows
            ],
        )
    else:
        _emit_table(
            ["e", "q", "closed_form", "oracle", "basis", "status"],
            [
                [
                    e,
                    q,
                    closed,
                    oracle,
                    "-" if basis_ok is None else ("ok" if basis_ok else "FAIL"),
                    "PASS" if ok else "FAIL",
                ]
                for e, q, closed, oracle, basis_ok, ok in rows
            ],
        )
    return 0 if all_pass else 1


def cmd_gb(args: argparse.Namespace, config: CliConfig) -> int:
    spec = RingSpec(args.p, args.n)
    q = spec.p**args.e
    if q > config.q_cap:
        raise QCapExceededError(q, config.q_cap)
    gb = buchberger(frobenius_power_generators(spec, args.e))
    count = standard_monomial_count(gb)
    if config.format is OutputFormat.JSON:
        _emit_json(
            {
                "p": spec.p,
                "n": spec.n,
                "e": args.e,
                "q": q,
                "generators": [str(g) for g in gb.generators],
                "staircase": [[m.i, m.j] for m in gb.staircase],
                "count": count,
            }
        )
    elif config.format is OutputFormat.CSV:
        _emit_csv(
            ["generator", "lead_i", "lead_j"],
            [[str(g), m.i, m.j] for g, m in zip(gb.generators, gb.staircase)],
        )
    else:
        _emit_pairs(
            [
                ("p", spec.p),
                ("n", spec.n),
                ("e", args.e),
                ("q", q),
                ("count", "infinite" if count is None else count),
                ("staircase", "  ".join(str(m) for m in gb.staircase)),
            ]
        )
        print("basis:")
        for g in gb.generators:
            print(f"  {g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkkit",
        description=(
            "Hilbert-Kunz functions of k[[x,y]]/(x^n - y^n): exact tables, "
            "period analysis, period realization, and a Groebner-basis oracle."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.PLAIN.value,
        help="output format (default plain)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser(
        "table", parents=[common], help="tabulate e, q, b, HK(e), phi(e)"
    )
    p_table.add_argument("--p", type=int, required=True, help="characteristic (prime)")
    p_table.add_argument("--n", type=int, required=True, help="exponent n in x^n - y^n")
    p_table.add_argument("--emax", type=int, required=True, help="largest e to tabulate")
    p_table.set_defaults(handler=cmd_table)

    p_period = sub.add_parser(
        "period", parents=[common], help="order, period, and branch report"
    )
    p_period.add_argument("--p", type=int, required=True, help="characteristic (prime)")
    p_period.add_argument("--n", type=int, required=True, help="exponent n in x^n - y^n")
    p_period.set_defaults(handler=cmd_period)

    p_realize = sub.add_parser(
        "realize", parents=[common], help="find a ring with a prescribed period"
    )
    p_realize.add_argument("--pi", type=int, required=True, help="target period")
    p_realize.add_argument(
        "--nlimit", type=int, help=f"modulus search bound (default {DEFAULT_N_LIMIT})"
    )
    p_realize.add_argument(
        "--plimit",
        type=int,
        help=f"characteristic search bound (default {DEFAULT_P_LIMIT})",
    )
    p_realize.set_defaults(handler=cmd_realize)

    p_verify = sub.add_parser(
        "verify",
        parents=[common],
        help="closed form vs. Groebner oracle, row per e",
    )
    p_verify.add_argument("--p", type=int, required=True, help="characteristic (prime)")
    p_verify.add_argument("--n", type=int, required=True, help="exponent n in x^n - y^n")
    p_verify.add_argument("--emax", type=int, required=True, help="largest e to check")
    p_verify.add_argument(
        "--qcap", type=int, help=f"oracle cap on q = p^e (default {DEFAULT_Q_CAP})"
    )
    p_verify.set_defaults(handler=cmd_verify)

    p_gb = sub.add_parser(
        "gb", parents=[common], help="reduced Groebner basis of (x^q, y^q, x^n - y^n)"
    )
    p_gb.add_argument("--p", type=int, required=True, help="characteristic (prime)")
    p_gb.add_argument("--n", type=int, required=True, help="exponent n in x^n - y^n")
    p_gb.add_argument("--e", type=int, required=True, help="Frobenius exponent")
    p_gb.add_argument(
        "--qcap", type=int, help=f"oracle cap on q = p^e (default {DEFAULT_Q_CAP})"
    )
    p_gb.set_defaults(handler=cmd_gb)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args)
        return args.handler(args, config)
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (
        InvalidRingError,
        QCapExceededError,
        NotAUnitError,
        NoPrimesInClassError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
