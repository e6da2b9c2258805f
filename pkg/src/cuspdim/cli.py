"""Command-line surface: classification reports, cusp tables with an
optional brute-force cross-check, exact q-expansions, and the verification
suites.

Exit status contract: 0 all checks pass and all verdicts decided; 1
mathematical failure (an Undecided verdict, a residual above tolerance, or
an oracle disagreement); 2 usage error.  Output is deterministic given the
inputs and the seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .classify import (
    Verdict,
    certificate_tsv_rows,
    classify,
    m23_element_orders,
)
from .gamma0 import group_profile
from .oracle import ORACLE_CUTOFF, oracle_cusps
from .qseries import EtaQuotient, eta_cubed, eta_expansion, eta_quotient_expansion, unary_theta
from .verify import (
    character_suite,
    cocycle_suite,
    eta_law_suite,
    euler_identity_suite,
    rr_identity_suite,
)

__all__ = ["CliConfig", "main"]

ENV_PREFIX = "CUSPDIM_"

REPRESENTATIVE_NOTE = (
    "cusp representatives use the least nonnegative numerator coprime to the "
    "class denominator within its residue class; any other reduced fraction "
    "in the class is equally valid"
)


@dataclass(frozen=True)
class CliConfig:
    precision: int = 200
    tolerance: float = 1e-9
    oracle_cutoff: int = ORACLE_CUTOFF
    seed: int = 0
    output_format: str = "text"

    def __post_init__(self):
        if self.precision < 16:
            raise ValueError(f"precision must be at least 16, got {self.precision}")
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.oracle_cutoff < 1:
            raise ValueError(f"oracle cutoff must be positive, got {self.oracle_cutoff}")
        if self.output_format not in ("json", "tsv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def _env(name: str, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        raise SystemExit(f"invalid {ENV_PREFIX + name}={raw!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspdim",
        description=(
            "Exact invariants of Hecke congruence groups and certified "
            "dimension verdicts for weight-3/2 cusp forms with the cubed "
            "eta multiplier."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "tsv", "text"),
        default=_env("FORMAT", str, "text"),
        help="output format (default: text)",
    )
    common.add_argument(
        "--precision",
        type=int,
        default=_env("PRECISION", int, 200),
        help="series precision for numeric work (default: 200, minimum 16)",
    )
    common.add_argument(
        "--tolerance",
        type=float,
        default=_env("TOLERANCE", float, None),
        help="numeric tolerance (default: per-suite, 1e-9 unless noted)",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=_env("SEED", int, 0),
        help="seed for randomized suites (default: 0)",
    )
    common.add_argument(
        "--oracle-cutoff",
        type=int,
        default=_env("ORACLE_CUTOFF", int, ORACLE_CUTOFF),
        help=f"largest level the brute-force oracle accepts (default: {ORACLE_CUTOFF})",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", parents=[common], help="dimension verdicts with certificates"
    )
    p_classify.add_argument("range", help="level n, or inclusive range a..b")

    p_cusps = sub.add_parser(
        "cusps", parents=[common], help="cusp classes of one level, with widths"
    )
    p_cusps.add_argument("level", type=int)
    p_cusps.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against brute-force orbit enumeration",
    )

    p_qexp = sub.add_parser(
        "qexp", parents=[common], help="exact q-expansion coefficients"
    )
    p_qexp.add_argument(
        "series",
        nargs="+",
        help="eta PREC | eta3 PREC | theta L R PREC | etaq N d:r[,d:r...] PREC",
    )

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run a verification suite"
    )
    p_verify.add_argument(
        "suite",
        choices=("eta-law", "cocycle", "character", "euler-identity", "rr-identity"),
    )
    return parser


def _config_from_args(args) -> CliConfig:
    tolerance = args.tolerance if args.tolerance is not None else 1e-9
    try:
        return CliConfig(
            precision=args.precision,
            tolerance=tolerance,
            oracle_cutoff=args.oracle_cutoff,
            seed=args.seed,
            output_format=args.format,
        )
    except ValueError as exc:
        raise SystemExit(f"cuspdim: {exc}")


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _emit_tsv(rows) -> None:
    for row in rows:
        print("\t".join(row))


def _parse_range(text: str):
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            return None
        if lo < 1 or hi < lo:
            return None
        return lo, hi
    try:
        n = int(text)
    except ValueError:
        return None
    if n < 1:
        return None
    return n, n


def _cmd_classify(args, parser) -> int:
    bounds = _parse_range(args.range)
    if bounds is None:
        parser.error(f"malformed level range {args.range!r}; expected n or a..b with 1 <= a <= b")
    lo, hi = bounds
    config = _config_from_args(args)
    certs = [classify(n) for n in range(lo, hi + 1)]
    dim_one = [c.level for c in certs if c.verdict is Verdict.DIM_ONE]
    undecided = [c.level for c in certs if c.verdict is Verdict.UNDECIDED]
    covers_reference = lo == 1 and hi >= 23
    matches = (
        sorted(dim_one) == sorted(m23_element_orders()) if covers_reference else None
    )

    if config.output_format == "json":
        _emit_json(
            {
                "range": [lo, hi],
                "certificates": [c.to_json_obj() for c in certs],
                "dim_one_levels": dim_one,
                "undecided_levels": undecided,
                "matches_m23_element_orders": matches,
            }
        )
    elif config.output_format == "tsv":
        _emit_tsv(certificate_tsv_rows(certs))
    else:
        header = (
            "level", "index", "cusps", "mu2", "mu3", "genus",
            "divdeg", "bound", "verdict", "rule",
        )
        rows = [header]
        for c in certs:
            p = group_profile(c.level)
            rows.append(
                (
                    str(c.level), str(p.index), str(p.cusp_count), str(p.mu2),
                    str(p.mu3), str(p.genus), str(c.divisor_degree), str(c.bound),
                    c.verdict.value, c.rule,
                )
            )
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        for row in rows:
            print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
        print()
        print(f"dim-one levels: {dim_one}")
        if undecided:
            print(f"UNDECIDED levels (rule coverage gap!): {undecided}")
        if matches is not None:
            print(f"matches M23 element orders: {matches}")
    return 1 if undecided else 0


def _cmd_cusps(args, parser) -> int:
    n = args.level
    if n < 1:
        parser.error(f"level must be positive, got {n}")
    config = _config_from_args(args)
    profile = group_profile(n)

    oracle_verdict = None
    if args.oracle:
        if n > config.oracle_cutoff:
            print(
                f"cuspdim: oracle refused: level {n} exceeds cutoff "
                f"{config.oracle_cutoff}",
                file=sys.stderr,
            )
            return 2
        orbits = oracle_cusps(n, config.oracle_cutoff)
        formula_widths = sorted(c.width for c in profile.cusps)
        orbit_widths = sorted(o.width for o in orbits)
        oracle_verdict = "AGREE" if formula_widths == orbit_widths else "DISAGREE"

    if config.output_format == "json":
        _emit_json(
            {
                "level": n,
                "index": profile.index,
                "cusps": [
                    {
                        "a": c.a,
                        "d": c.d,
                        "representative": str(c.representative),
                        "width": c.width,
                    }
                    for c in profile.cusps
                ],
                "oracle": oracle_verdict,
                "metadata": {"representative_convention": REPRESENTATIVE_NOTE},
            }
        )
    elif config.output_format == "tsv":
        rows = [("a", "d", "representative", "width")]
        rows += [
            (str(c.a), str(c.d), str(c.representative), str(c.width))
            for c in profile.cusps
        ]
        if oracle_verdict is not None:
            rows.append(("oracle", oracle_verdict, "", ""))
        _emit_tsv(rows)
    else:
        print(f"level {n}: index {profile.index}, {profile.cusp_count} cusp classes")
        for c in profile.cusps:
            print(f"  a={c.a:<4d} d={c.d:<6d} representative={str(c.representative):<10s} width={c.width}")
        print(f"note: {REPRESENTATIVE_NOTE}")
        if oracle_verdict is not None:
            print(f"oracle cross-check: {oracle_verdict}")
    return 0 if oracle_verdict in (None, "AGREE") else 1


def _build_series(words: list[str], parser, default_precision: int):
    def precision_of(token: str) -> int:
        try:
            p = int(token)
        except ValueError:
            parser.error(f"malformed precision {token!r}")
        if p < 1:
            parser.error(f"precision must be positive, got {p}")
        return p

    kind = words[0]
    if kind == "eta":
        if len(words) > 2:
            parser.error("usage: qexp eta [PRECISION]")
        prec = precision_of(words[1]) if len(words) == 2 else default_precision
        return eta_expansion(prec)
    if kind == "eta3":
        if len(words) > 2:
            parser.error("usage: qexp eta3 [PRECISION]")
        prec = precision_of(words[1]) if len(words) == 2 else default_precision
        return eta_cubed(prec)
    if kind == "theta":
        if len(words) not in (3, 4):
            parser.error("usage: qexp theta L R [PRECISION]")
        try:
            ell, r = int(words[1]), int(words[2])
        except ValueError:
            parser.error(f"malformed theta parameters {words[1:3]!r}")
        prec = precision_of(words[3]) if len(words) == 4 else default_precision
        try:
            return unary_theta(ell, r, prec)
        except ValueError as exc:
            parser.error(str(exc))
    if kind == "etaq":
        if len(words) not in (3, 4):
            parser.error("usage: qexp etaq N d:r[,d:r...] [PRECISION]")
        try:
            level = int(words[1])
            exponents = {}
            for item in words[2].split(","):
                d_text, _, r_text = item.partition(":")
                exponents[int(d_text)] = int(r_text)
        except ValueError:
            parser.error(f"malformed eta quotient {words[1:3]!r}")
        prec = precision_of(words[3]) if len(words) == 4 else default_precision
        try:
            return eta_quotient_expansion(EtaQuotient(level, exponents), prec)
        except ValueError as exc:
            parser.error(str(exc))
    parser.error(f"unknown series kind {kind!r}; expected eta, eta3, theta, or etaq")


def _cmd_qexp(args, parser) -> int:
    config = _config_from_args(args)
    series = _build_series(args.series, parser, config.precision)
    if config.output_format == "json":
        _emit_json(series.to_json_obj())
    elif config.output_format == "tsv":
        rows = [("index", "exponent", "coefficient")]
        rows += [
            (str(k), str(series.exponent(k)), str(c))
            for k, c in enumerate(series.coeffs)
        ]
        _emit_tsv(rows)
    else:
        print(f"offset {series.offset}, step {series.step}, {series.precision} terms")
        print(", ".join(str(c) for c in series.coeffs))
    return 0


def _cmd_verify(args, parser) -> int:
    config = _config_from_args(args)
    explicit_tolerance = args.tolerance is not None
    if args.suite == "eta-law":
        result = eta_law_suite(tolerance=config.tolerance, seed=config.seed)
    elif args.suite == "cocycle":
        tol = config.tolerance if explicit_tolerance else 1e-10
        result = cocycle_suite(tolerance=tol, seed=config.seed)
    elif args.suite == "character":
        result = character_suite(seed=config.seed)
    elif args.suite == "euler-identity":
        result = euler_identity_suite(depth=config.precision)
    else:
        result = rr_identity_suite()
    if config.output_format == "json":
        _emit_json(result.to_json_obj())
    elif config.output_format == "tsv":
        rows = [("check", "status")]
        rows += [(line.rsplit(" ", 1)[0], line.rsplit(" ", 1)[1]) for line in result.lines]
        _emit_tsv(rows)
    else:
        for line in result.lines:
            print(line)
        print(result.summary())
    return 0 if result.ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "classify":
        return _cmd_classify(args, parser)
    if args.command == "cusps":
        return _cmd_cusps(args, parser)
    if args.command == "qexp":
        return _cmd_qexp(args, parser)
    return _cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
