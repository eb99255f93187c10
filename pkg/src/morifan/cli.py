"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 validation error, 4 class not
effective, 5 verification failure. JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures
from .exact_geom import GeometryError
from .git_fan import InvalidWeightSystem, WeightSystem, git_fan, signature
from .io import (
    ParseError,
    cone_to_json,
    dumps,
    fan_to_json,
    map_from_json,
    parse_vector,
    vector_to_json,
    weight_system_from_json,
)
from .mori import NonIntegral, NotEffective, ZeroClass, chamber_info, h0, zariski
from .morphism import PASS, DimensionMismatch, RestrictionReport, restrict_fan, verify_against_fan, verify_restriction
from .slicing import SliceError, parse_subspace, slice_document, to_svg

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_NOT_EFFECTIVE, EXIT_VERIFY = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _weight_system(args) -> WeightSystem:
    if args.fixture and args.input:
        raise CliError(EXIT_PARSE, "give either an input file or --fixture, not both")
    if args.fixture:
        try:
            return fixtures.weight_system(args.fixture)
        except fixtures.UnknownFixture as exc:
            raise CliError(EXIT_PARSE, str(exc.args[0])) from exc
    if not args.input:
        raise CliError(EXIT_PARSE, "no weight system given (path or --fixture)")
    return weight_system_from_json(args.input)


def _divisor(args, ws: WeightSystem):
    d = parse_vector(args.divisor)
    if len(d) != ws.rank:
        raise CliError(EXIT_INVALID, f"divisor has {len(d)} entries, rank is {ws.rank}")
    return d


def _emit(doc) -> None:
    sys.stdout.write(dumps(doc) + "\n")


def cmd_fan(args) -> int:
    _emit(fan_to_json(git_fan(_weight_system(args))))
    return EXIT_OK


def cmd_zariski(args) -> int:
    ws = _weight_system(args)
    z = zariski(ws, _divisor(args, ws))
    kind = git_fan(ws).kind_of(z.cone)
    _emit({
        "positive": vector_to_json(z.positive),
        "negative": vector_to_json(z.negative),
        "coefficients": vector_to_json(z.coefficients),
        "cone": cone_to_json(z.cone),
        "kind": kind,
    })
    return EXIT_OK


def cmd_chamber(args) -> int:
    ws = _weight_system(args)
    info = chamber_info(ws, _divisor(args, ws))
    _emit({
        "cone": cone_to_json(info.cone),
        "dim": info.dim,
        "kind": info.kind,
        "positive_face": cone_to_json(info.positive_face),
        "exceptional": [ws.names[i] for i in sorted(info.exceptional_indices)],
    })
    return EXIT_OK


def cmd_h0(args) -> int:
    ws = _weight_system(args)
    _emit({"h0": h0(ws, _divisor(args, ws))})
    return EXIT_OK


def cmd_signature(args) -> int:
    ws = _weight_system(args)
    sig = signature(ws, _divisor(args, ws))
    names = lambda sets: sorted(([ws.names[i] for i in sorted(s)] for s in sets), key=lambda s: (len(s), s))  # noqa: E731
    _emit({"semistable": names(sig.semistable_supports), "stable": names(sig.stable_supports)})
    return EXIT_OK


def _report_json(r: RestrictionReport) -> dict:
    return {
        "verdict": r.verdict,
        "expected": fan_to_json(r.expected),
        "actual": fan_to_json(r.actual),
        "mismatches": [{"cone": cone_to_json(c), "side": side} for c, side in r.mismatches],
        "cone_checks": {k: bool(v) for k, v in r.cone_checks.items()},
        "note": r.note,
    }


def _map_args(args):
    if args.fixture_map:
        if args.paths:
            raise CliError(EXIT_PARSE, "give either files or --fixture-map, not both")
        try:
            return fixtures.map_fixture(args.fixture_map)
        except fixtures.UnknownFixture as exc:
            raise CliError(EXIT_PARSE, str(exc.args[0])) from exc
    return None


def cmd_verify(args) -> int:
    fixture = _map_args(args)
    if fixture:
        ws_x, ws_y, f, golden = fixture
        report = verify_restriction(ws_x, ws_y, f) if ws_y else verify_against_fan(ws_x, golden, f)
    else:
        if len(args.paths) != 3:
            raise CliError(EXIT_PARSE, "verify needs X, Y and map files (or --fixture-map)")
        x, y, m = args.paths
        report = verify_restriction(weight_system_from_json(x), weight_system_from_json(y), map_from_json(m))
    _emit(_report_json(report))
    return EXIT_OK if report.verdict == PASS else EXIT_VERIFY


def cmd_restrict(args) -> int:
    fixture = _map_args(args)
    if fixture:
        ws_x, _, f, _ = fixture
    else:
        if len(args.paths) != 2:
            raise CliError(EXIT_PARSE, "restrict needs X and map files (or --fixture-map)")
        ws_x, f = weight_system_from_json(args.paths[0]), map_from_json(args.paths[1])
    _emit(fan_to_json(restrict_fan(git_fan(ws_x), f)))
    return EXIT_OK


def cmd_slice(args) -> int:
    ws = _weight_system(args)
    subspace = parse_subspace(args.subspace) if args.subspace else None
    doc = slice_document(ws, subspace)
    if args.svg:
        Path(args.svg).write_text(to_svg(doc))
    _emit(doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="morifan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def ws_command(name, func, help, divisor=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", nargs="?", help="weight system JSON file")
        p.add_argument("--fixture", help=f"shipped weight system ({', '.join(fixtures.WEIGHT_SYSTEMS)})")
        if divisor:
            p.add_argument("-d", "--divisor", required=True, help="comma-separated rationals")
        p.set_defaults(func=func)
        return p

    ws_command("fan", cmd_fan, "GIT / Mori chamber fan of the effective cone")
    ws_command("zariski", cmd_zariski, "Zariski decomposition of a class", divisor=True)
    ws_command("chamber", cmd_chamber, "fan cone whose relative interior holds a class", divisor=True)
    ws_command("h0", cmd_h0, "number of sections of an integral class", divisor=True)
    ws_command("signature", cmd_signature, "semistable and stable supports at a character", divisor=True)
    p = ws_command("slice", cmd_slice, "planar cross-section of a rank-3 fan")
    p.add_argument("--subspace", help="basis of a subspace to overlay, e.g. 1,0,0:0,1,0")
    p.add_argument("--svg", help="also write an SVG drawing to this path")

    for name, func, help in (
        ("verify", cmd_verify, "check Fan(Y) against Fan(X) restricted along a pullback map"),
        ("restrict", cmd_restrict, "restrict Fan(X) along a pullback map"),
    ):
        p = sub.add_parser(name, help=help)
        p.add_argument("paths", nargs="*")
        p.add_argument("--fixture-map", help=f"shipped map ({', '.join(fixtures.MAPS)})")
        p.set_defaults(func=func)
    return parser


def _attach_divisor(argv: list[str]) -> list[str]:
    # "-d -1,0,0" would otherwise read the negative value as an option
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("-d", "--divisor") and i + 1 < len(argv):
            out.append(f"--divisor={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_divisor(argv))
    try:
        return args.func(args)
    except CliError as exc:
        code, msg = exc.code, str(exc)
    except ParseError as exc:
        code, msg = EXIT_PARSE, str(exc)
    except (NotEffective, ZeroClass) as exc:
        code, msg = EXIT_NOT_EFFECTIVE, str(exc)
    except (InvalidWeightSystem, GeometryError, DimensionMismatch, NonIntegral, SliceError) as exc:
        code, msg = EXIT_INVALID, str(exc)
    print(f"morifan {args.command}: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
