"""Command-line interface.

Subcommands: classify, survey, certify, verify, oracle, extremal.  All
rational input uses the exact `p/q` syntax (decimals are rejected), all
rational output is lossless strings, and JSON output has a fixed key set
per command so golden-file tests stay stable.

Exit codes for classify: 0 when the form is SOS, 1 when it is nonnegative
but not SOS, 2 when it is not nonnegative; usage errors exit with 64.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import certify, cones, oracle
from .exactpoly import InvariantQuartic

EX_USAGE = 64

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Strict `p/q` or integer parser; decimals are rejected."""
    if not _RATIONAL_RE.match(text):
        raise UsageError(
            f"invalid rational {text!r}: use an integer or p/q (no decimals)"
        )
    return Fraction(text)


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let negative rationals like -20/13 pass as option values
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _iq_str(f: InvariantQuartic) -> str:
    return f"{f.a}*p2^2 + {f.b}*p4"


def build_parser() -> _Parser:
    parser = _Parser(prog="anquartics")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_form_flags(p):
        p.add_argument("-n", type=int, required=True, help="n >= 3 (n+1 variables)")
        p.add_argument("-a", type=_rational_arg, required=True,
                       help="coefficient of p2^2, as p/q")
        p.add_argument("-b", type=_rational_arg, required=True,
                       help="coefficient of p4, as p/q")

    p = sub.add_parser("classify", help="classify a*p2^2 + b*p4 against both cones")
    add_form_flags(p)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("survey", help="reproduce the cone comparison over a range of n")
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("certify", help="write an SOS certificate file")
    add_form_flags(p)
    p.add_argument("-o", "--out", required=True, help="output certificate path")

    p = sub.add_parser("verify", help="verify a certificate file")
    p.add_argument("cert_path")

    p = sub.add_parser("oracle", help="numeric sampling cross-check")
    add_form_flags(p)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("extremal", help="print alpha, beta, F, G, S1, S2 for one n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")

    return parser


def _classify_record(n: int, f: InvariantQuartic) -> dict:
    member = cones.classify(n, f)
    rng = cones.psd_range(n)
    return {
        "n": n,
        "a": str(f.a),
        "b": str(f.b),
        "psd": member.psd.value,
        "sos": member.sos.value,
        "witness": list(member.witness.coordinates) if member.witness else None,
        "sos_coords": [str(c) for c in member.sos_coords]
        if member.sos_coords
        else None,
        "alpha": str(rng.alpha),
        "beta": str(rng.beta),
    }


def cmd_classify(args) -> int:
    if args.n < 3:
        print("error: n must be >= 3", file=sys.stderr)
        return EX_USAGE
    record = _classify_record(args.n, InvariantQuartic(args.a, args.b))
    if args.format == "json":
        print(json.dumps(record))
    else:
        for key, value in record.items():
            print(f"{key}: {value}")
    if record["sos"] != "Outside":
        return 0
    if record["psd"] != "Outside":
        return 1
    return 2


def _survey_rows(n_from: int, n_to: int):
    rows = []
    ok = True
    for n in range(n_from, n_to + 1):
        rng = cones.psd_range(n)
        equal = cones.cones_equal(n)
        gap = cones.gap_witness(n)
        ok = ok and (equal == (n % 2 == 1))
        rows.append(
            {
                "n": n,
                "alpha": str(rng.alpha),
                "beta": str(rng.beta),
                "cones_equal": equal,
                "gap_witness": [str(gap.a), str(gap.b)] if gap else None,
            }
        )
    return rows, ok


def cmd_survey(args) -> int:
    if args.n_from < 3 or args.n_from > args.n_to:
        print("error: need 3 <= n-from <= n-to", file=sys.stderr)
        return EX_USAGE
    rows, ok = _survey_rows(args.n_from, args.n_to)
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print(f"{'n':>4}  {'alpha':>12}  {'beta':>12}  {'equal':>5}  gap_witness")
        for r in rows:
            gap = f"({r['gap_witness'][0]}, {r['gap_witness'][1]})" if r["gap_witness"] else "-"
            print(
                f"{r['n']:>4}  {r['alpha']:>12}  {r['beta']:>12}  "
                f"{str(r['cones_equal']).lower():>5}  {gap}"
            )
    if not ok:
        print("error: cone equality disagrees with parity of n", file=sys.stderr)
        return 1
    return 0


def cmd_certify(args) -> int:
    if args.n < 3:
        print("error: n must be >= 3", file=sys.stderr)
        return EX_USAGE
    f = InvariantQuartic(args.a, args.b)
    try:
        cert = certify.cert_for(args.n, f)
    except certify.NotInSosCone as exc:
        print(
            json.dumps(
                {
                    "error": "NotInSosCone",
                    "n": args.n,
                    "a": str(f.a),
                    "b": str(f.b),
                    "raw_coords": [str(exc.raw[0]), str(exc.raw[1])],
                }
            )
        )
        return 1
    try:
        certify.write_file(cert, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EX_USAGE
    print(
        json.dumps(
            {
                "written": args.out,
                "n": args.n,
                "squares": len(cert.squares),
                "modulo_p1": cert.modulo_p1,
            }
        )
    )
    return 0


def cmd_verify(args) -> int:
    try:
        cert = certify.read_file(args.cert_path)
    except OSError as exc:
        print(f"error: cannot read {args.cert_path}: {exc}", file=sys.stderr)
        return EX_USAGE
    except ValueError as exc:
        print(f"error: malformed certificate: {exc}", file=sys.stderr)
        return 1
    ok = certify.verify(cert)
    print(json.dumps({"verified": ok, "n": cert.n, "squares": len(cert.squares)}))
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    if args.n < 3:
        print("error: n must be >= 3", file=sys.stderr)
        return EX_USAGE
    f = InvariantQuartic(args.a, args.b)
    report = oracle.sample_min(args.n, f, args.samples, args.seed)
    print(
        json.dumps(
            {
                "n": report.n,
                "a": str(f.a),
                "b": str(f.b),
                "samples": report.samples,
                "seed": report.seed,
                "min_value": report.min_value,
                "argmin_point": list(report.argmin_point),
            }
        )
    )
    return 0


def cmd_extremal(args) -> int:
    if args.n < 3:
        print("error: n must be >= 3", file=sys.stderr)
        return EX_USAGE
    n = args.n
    rng = cones.psd_range(n)
    rays = cones.extremal_rays(n)
    gens = cones.sos_generators(n)
    record = {
        "n": n,
        "alpha": str(rng.alpha),
        "beta": str(rng.beta),
        "F": [str(rays.F.a), str(rays.F.b)],
        "G": [str(rays.G.a), str(rays.G.b)],
        "S1": [str(gens.S1.a), str(gens.S1.b)],
        "S2": [str(gens.S2.a), str(gens.S2.b)],
    }
    if args.format == "json":
        print(json.dumps(record))
    else:
        print(f"n: {n}")
        print(f"alpha: {rng.alpha}")
        print(f"beta: {rng.beta}")
        print(f"F: {_iq_str(rays.F)}")
        print(f"G: {_iq_str(rays.G)}")
        print(f"S1: {_iq_str(gens.S1)}")
        print(f"S2: {_iq_str(gens.S2)}")
    return 0


_COMMANDS = {
    "classify": cmd_classify,
    "survey": cmd_survey,
    "certify": cmd_certify,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "extremal": cmd_extremal,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
