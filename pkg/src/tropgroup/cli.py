"""tropgroup CLI entry point.

Exit codes: 0 success, 2 parse/validation error, 3 mathematical failure.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from . import render
from .config import TropConfig, load_config
from .documents import DocumentKind, DocumentOptions, InputDocument, load_document
from .errors import GroupAxiomFailure, ParseError, TropError, ValidationError
from .group import MatrixGroup, assume_group, closure, periodic_bound_check, verify_group
from .matrices import mat_mul
from .rank import full_row_rank
from .report import dump_report, fail_report, new_report
from .representation import analyze, monomialize
from .wreath import realize

COMMANDS = ("mul", "rank", "verify", "closure", "monomialize", "analyze", "realize")

_GROUP_KINDS = (DocumentKind.MATRIX_LIST, DocumentKind.GROUP_SAMPLE)


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="tropgroup",
        description="tropgroup -- monomial representations of tropical matrix groups",
    )
    parser.add_argument("command", choices=COMMANDS, help="Operation to run")
    parser.add_argument(
        "--in",
        dest="input",
        required=True,
        metavar="FILE",
        help="Input JSON document",
    )
    parser.add_argument(
        "--assume-group",
        action="store_true",
        help="Treat the matrices as a sample of a group instead of verifying the axioms",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=None,
        help="Closure cap (overrides the document and config)",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Human-readable trace on stderr",
    )
    parser.add_argument(
        "--config",
        metavar="FILE",
        help="Config file (default: ~/.tropgroup/config.yaml)",
    )
    return parser.parse_args(argv)


def _resolve(args: argparse.Namespace, doc: InputDocument, config: TropConfig) -> dict[str, Any]:
    """Flag > document option > config file > default."""
    opts: DocumentOptions = doc.options
    if args.assume_group:
        assume = True
    elif opts.assume_group is not None:
        assume = opts.assume_group
    else:
        assume = config.assume_group
    if args.cap is not None:
        cap = args.cap
    elif opts.closure_cap is not None:
        cap = opts.closure_cap
    else:
        cap = config.closure_cap
    return {"assume_group": assume, "closure_cap": cap}


def _require(doc: InputDocument, command: str, kinds: tuple[DocumentKind, ...]) -> None:
    if doc.kind not in kinds:
        raise ParseError(
            f"{command} needs a {' or '.join(k.value for k in kinds)} document, got {doc.kind.value}",
            witnesses={"kind": doc.kind.value, "expected": [k.value for k in kinds]},
        )


def _build_group(doc: InputDocument, assume: bool) -> MatrixGroup:
    return assume_group(doc.matrices) if assume else verify_group(doc.matrices)


def _verified_block(matrices) -> dict[str, Any]:
    """Group summary plus the periodic bound, or why the list is not a group."""
    try:
        group = verify_group(matrices)
    except (GroupAxiomFailure, ValidationError) as e:
        return {"group": None, "group_failure": e.to_dict()}
    return {"group": group.summary(), "periodic_bound_check": periodic_bound_check(group).to_dict()}


# ---------------------------------------------------------------------------
# Commands -- each returns the result blocks of the report
# ---------------------------------------------------------------------------

def cmd_mul(doc: InputDocument, opts: dict, config: TropConfig, verbose: bool) -> dict[str, Any]:
    _require(doc, "mul", (DocumentKind.MATRIX_LIST,))
    if len(doc.matrices) != 2:
        raise ParseError("mul needs exactly two matrices", witnesses={"count": len(doc.matrices)})
    product = mat_mul(*doc.matrices)
    return {"result": InputDocument(DocumentKind.MATRIX, None, matrices=(product,)).to_dict()}


def cmd_rank(doc: InputDocument, opts: dict, config: TropConfig, verbose: bool) -> dict[str, Any]:
    _require(doc, "rank", (DocumentKind.MATRIX, DocumentKind.MATRIX_LIST))
    return {"ranks": [full_row_rank(m).to_dict() for m in doc.matrices]}


def cmd_verify(doc: InputDocument, opts: dict, config: TropConfig, verbose: bool) -> dict[str, Any]:
    _require(doc, "verify", _GROUP_KINDS)
    group = verify_group(doc.matrices)
    if verbose:
        render.render_group(group, sys.stderr)
    return {"group": group.summary(), "periodic_bound_check": periodic_bound_check(group).to_dict()}


def cmd_closure(doc: InputDocument, opts: dict, config: TropConfig, verbose: bool) -> dict[str, Any]:
    _require(doc, "closure", _GROUP_KINDS)
    elements = closure(doc.matrices, opts["closure_cap"])
    return {
        "closure": {"order": len(elements), "elements": [m.to_text() for m in elements]},
        **_verified_block(elements),
    }


def cmd_monomialize(doc: InputDocument, opts: dict, config: TropConfig, verbose: bool) -> dict[str, Any]:
    _require(doc, "monomialize", _GROUP_KINDS)
    group = _build_group(doc, opts["assume_group"])
    rep = monomialize(group)
    if verbose:
        render.render_group(group, sys.stderr)
        render.render_representation(rep, sys.stderr)
    return {"group": group.summary(), "representation": rep.to_dict()}


def cmd_analyze(doc: InputDocument, opts: dict, config: TropConfig, verbose: bool) -> dict[str, Any]:
    _require(doc, "analyze", _GROUP_KINDS)
    group = _build_group(doc, opts["assume_group"])
    rep = monomialize(group)
    analysis = analyze(rep, torsion_exponent_cap=config.torsion_exponent_cap)
    if verbose:
        render.render_group(group, sys.stderr)
        render.render_representation(rep, sys.stderr)
        render.render_analysis(analysis, sys.stderr)
    return {"group": group.summary(), "representation": rep.to_dict(), "analysis": analysis.to_dict()}


def cmd_realize(doc: InputDocument, opts: dict, config: TropConfig, verbose: bool) -> dict[str, Any]:
    _require(doc, "realize", (DocumentKind.WREATH_LIST,))
    matrices = realize(doc.wreath)
    return {
        "realization": {"matrices": [m.to_text() for m in matrices]},
        **_verified_block(matrices),
    }


_DISPATCH = {
    "mul": cmd_mul,
    "rank": cmd_rank,
    "verify": cmd_verify,
    "closure": cmd_closure,
    "monomialize": cmd_monomialize,
    "analyze": cmd_analyze,
    "realize": cmd_realize,
}


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def run(argv: list[str] | None = None) -> int:
    """Run one command, print the report to stdout, and return the exit code."""
    args = parse_args(argv)
    report = new_report(args.command, {})
    indent = 2
    verbose = args.verbose
    try:
        config = load_config(Path(args.config) if args.config else None)
        indent = config.indent
        verbose = verbose or config.verbose
        _configure_logging(verbose)
        doc = load_document(Path(args.input))
        opts = _resolve(args, doc, config)
        report["options"] = opts
        report.update(_DISPATCH[args.command](doc, opts, config, verbose))
    except TropError as e:
        fail_report(report, e)
        _configure_logging(verbose)
        if verbose:
            render.render_error(e, sys.stderr)
        sys.stdout.write(dump_report(report, indent))
        return e.exit_code

    sys.stdout.write(dump_report(report, indent))
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
