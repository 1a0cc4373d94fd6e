"""
Command-line front end.

    szlenk [--json] <command> ARGS

Ordinal arguments use the syntax of `notation.parse_ordinal`, space arguments that of
`notation.parse_space`. Results go to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 domain error, 2 syntax or usage error, 3 overflow.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from . import config
from .cb_topology import cb_derivative, dirac_rank, height_report
from .classification import canonical_representative, isomorphic
from .errors import ExpressionSyntaxError, OrdinalOverflowError, SzlenkError
from .indices import dentability_index, gamma_of, index_report, szlenk_index
from .notation import parse_ordinal, parse_space
from .ordinals import compare
from .space_algebra import RewriteTrace, check_trace, decompose_bp, normalize, szlenk_bounds
from .utils.serialization import ordinal_to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_SYNTAX = 2
EXIT_OVERFLOW = 3

Result = Tuple[str, Dict[str, Any]]


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _single(args) -> Result:
    value = parse_ordinal(args.alpha)
    return str(value), {"value": ordinal_to_json(value)}


def _cmp(args) -> Result:
    left, right = parse_ordinal(args.left), parse_ordinal(args.right)
    symbol = compare(left, right).symbol
    return symbol, {"left": ordinal_to_json(left), "right": ordinal_to_json(right), "result": symbol}


def _index(function: Callable, key: str) -> Callable[[Any], Result]:
    def handler(args) -> Result:
        alpha = parse_ordinal(args.alpha)
        value = function(alpha)
        return str(value), {"alpha": ordinal_to_json(alpha), key: ordinal_to_json(value)}

    return handler


def _report(args) -> Result:
    report = index_report(parse_ordinal(args.alpha))
    lines = [f"alpha: {report.alpha}"]
    if report.gamma is not None:
        lines += [f"gamma: {report.gamma}", f"bracket: [{report.bracket_low}, {report.bracket_high})"]
    lines.append(f"szlenk: {report.szlenk}")
    if report.dentability is not None:
        lines.append(f"dentability: {report.dentability}")
    return "\n".join(lines), report.model_dump(mode="json")


def _iso(args) -> Result:
    verdict = isomorphic(parse_ordinal(args.alpha), parse_ordinal(args.beta))
    if verdict.isomorphic:
        text = f"isomorphic (beta < alpha^w = {verdict.witness_pow})"
    else:
        text = f"not isomorphic (beta >= alpha^w = {verdict.witness_pow})"
    return text, verdict.model_dump(mode="json")


def _cb(args) -> Result:
    alpha = parse_ordinal(args.alpha)
    lines, payload = [], {"alpha": ordinal_to_json(alpha)}
    if args.stage is not None:
        descriptor = cb_derivative(alpha, parse_ordinal(args.stage))
        lines.append(f"stage {descriptor.xi}: {descriptor.description}")
        payload["descriptor"] = descriptor.model_dump(mode="json")
    if args.height or args.stage is None:
        report = height_report(alpha)
        lines.append(f"height: {report.height}")
        payload["height"] = report.model_dump(mode="json")
    return "\n".join(lines), payload


def _trace_lines(trace: RewriteTrace) -> List[str]:
    lines = []
    for number, step in enumerate(trace.steps, start=1):
        where = ".".join(map(str, step.position)) or "root"
        lines.append(f"{number}. {step.rule} @ {where}: {step.before} => {step.after}")
    return lines


def _decompose(args) -> Result:
    result, trace = decompose_bp(parse_ordinal(args.xi), parse_ordinal(args.zeta))
    return f"{trace.source} ~ {result}", trace.model_dump(mode="json")


def _normalize_space(args) -> Result:
    result, trace = normalize(parse_space(args.space))
    if not args.trace:
        return str(result), {"source": str(trace.source), "result": str(result)}
    payload = trace.model_dump(mode="json")
    payload["checked"] = check_trace(trace)
    return "\n".join(_trace_lines(trace) + [str(result)]), payload


def _bounds(args) -> Result:
    expr = parse_space(args.space)
    bounds = szlenk_bounds(expr)
    text = "\n".join(
        [
            f"lower: {bounds.lower}",
            f"upper: {bounds.upper}",
            f"exact: {'true' if bounds.exact else 'false'}",
            f"via: {bounds.justification}",
        ]
    )
    payload = bounds.model_dump(mode="json")
    payload["space"] = str(expr)
    return text, payload


COMMANDS: Dict[str, Tuple[str, Sequence[str], Callable[[Any], Result]]] = {
    "eval": ("normalize an ordinal expression", ("alpha",), _single),
    "cmp": ("compare two ordinals (<, = or >)", ("left", "right"), _cmp),
    "sz": ("Szlenk index of C([0, alpha])", ("alpha",), _index(szlenk_index, "szlenk")),
    "dz": ("w*-dentability index of C([0, alpha])", ("alpha",), _index(dentability_index, "dentability")),
    "gamma": ("the gamma with w^(w^gamma) <= alpha < w^(w^(gamma+1))", ("alpha",), _index(gamma_of, "gamma")),
    "report": ("all index data for alpha", ("alpha",), _report),
    "iso": ("Bessaga-Pelczynski test for C([0, alpha]) ~ C([0, beta])", ("alpha", "beta"), _iso),
    "rep": ("canonical representative w^(w^gamma)", ("alpha",), _index(canonical_representative, "representative")),
    "cb": ("Cantor-Bendixson derivatives and height of [0, alpha]", ("alpha",), _cb),
    "dirac": ("stages the Dirac functional at lambda survives", ("alpha",), _index(dirac_rank, "rank")),
    "decompose": ("C0(xi*zeta) ~ C0(zeta) (+) c0(zeta, C0(xi))", ("xi", "zeta"), _decompose),
    "normalize-space": ("rewrite a space expression to normal form", ("space",), _normalize_space),
    "bounds": ("Szlenk index bounds for a space expression", ("space",), _bounds),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="szlenk", description="Ordinal arithmetic and Szlenk indices of C([0, alpha]).")
    parser.add_argument("--json", action="store_true", help="print one JSON object instead of text")
    # lets --json also follow the subcommand
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    for name, (help_text, positionals, handler) in COMMANDS.items():
        command = subparsers.add_parser(name, help=help_text, parents=[shared])
        for positional in positionals:
            command.add_argument(positional)
        if name == "cb":
            command.add_argument("--stage", help="derivation stage xi")
            command.add_argument("--height", action="store_true", help="print the Cantor-Bendixson height")
        if name == "normalize-space":
            command.add_argument("--trace", action="store_true", help="print every rewrite step")
        command.set_defaults(handler=handler)
    return parser


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as e:
        stderr.write(parser.format_usage())
        stderr.write(f"error: {e}\n")
        return EXIT_SYNTAX
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_SYNTAX

    try:
        text, payload = args.handler(args)
    except SzlenkError as e:
        logger.debug(f"{args.command} failed with {type(e).__name__}")
        stderr.write(f"error: {e}\n")
        return _exit_code(e)

    if args.json:
        stdout.write(json.dumps({"command": args.command, **payload}, sort_keys=True) + "\n")
    else:
        stdout.write(text + "\n")
    return EXIT_OK


def _exit_code(error: SzlenkError) -> int:
    if isinstance(error, ExpressionSyntaxError):
        return EXIT_SYNTAX
    if isinstance(error, OrdinalOverflowError):
        return EXIT_OVERFLOW
    # OrdinalDomainError and the remaining engine errors
    return EXIT_DOMAIN


def main() -> None:
    logging.basicConfig(level=config.LOG_LEVEL, stream=sys.stderr)
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
