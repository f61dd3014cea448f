"""Human-readable trace on stderr (``--verbose``).

Uses prompt_toolkit formatted text on a terminal; anything else gets the same
lines as plain text.
"""

from typing import TextIO

from prompt_toolkit.formatted_text import HTML, to_plain_text
from prompt_toolkit.shortcuts import print_formatted_text
from prompt_toolkit.styles import Style

from .errors import TropError
from .group import MatrixGroup
from .matrices import TropMatrix
from .representation import GroupAnalysis, Representation

STYLE = Style.from_dict({
    "heading": "ansimagenta bold",
    "step": "ansicyan bold",
    "ok": "ansigreen bold",
    "bad": "ansired bold",
    "dim": "#888888",
    "value": "#cccccc",
})


def _esc(text: str) -> str:
    """Escape HTML special characters for prompt_toolkit HTML."""
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _emit(stream: TextIO, markup: str) -> None:
    fragment = HTML(markup)
    if stream.isatty():
        print_formatted_text(fragment, style=STYLE, file=stream)
    else:
        stream.write(to_plain_text(fragment) + "\n")


def _matrix_lines(m: TropMatrix) -> list[str]:
    text = m.to_text()
    width = max(len(x) for row in text for x in row)
    return ["  [" + " ".join(x.rjust(width) for x in row) + "]" for row in text]


def _flag(ok: bool) -> str:
    return "<ok>ok</ok>" if ok else "<bad>FAILED</bad>"


def render_group(group: MatrixGroup, stream: TextIO) -> None:
    _emit(stream, f"<heading>group</heading> order {group.order}, dimension {group.n}, "
                  f"mode {group.mode.value}, neutral is element {group.neutral_index}")


def render_representation(rep: Representation, stream: TextIO) -> None:
    for k, step in enumerate(rep.trace, start=1):
        lams = ", ".join(x for x in step.to_dict()["lambdas"])
        _emit(stream, f"<step>reduction {k}</step> {step.source_dim} -> {step.source_dim - 1}: "
                      f"element {step.deficient_element}, row {step.removed_row}, λ = ({_esc(lams)})")
        for line in _matrix_lines(step.p):
            _emit(stream, f"<dim>{_esc(line)}</dim>")
    if not rep.trace:
        _emit(stream, "<dim>no reductions: every element has full row rank</dim>")
    _emit(stream, f"<heading>monomial images</heading> dimension {rep.target_dim}"
                  + (" <dim>(sample only)</dim>" if rep.sample_only else ""))
    for k, w in enumerate(rep.wreath_images(), start=1):
        d = ", ".join(w.to_dict()["d"])
        _emit(stream, f"  {k}: <value>sigma={list(w.sigma)} d=({_esc(d)})</value>")


def render_analysis(analysis: GroupAnalysis, stream: TextIO) -> None:
    _emit(stream, f"<heading>analysis</heading> index {analysis.index} &lt;= {analysis.n_factorial_bound}: "
                  f"{_flag(analysis.bound_ok)}")
    _emit(stream, f"  diagonal subgroup {list(analysis.diagonal_indices)}, "
                  f"abelian {_flag(analysis.diagonal_abelian_ok)}, "
                  f"torsion-free {_flag(analysis.diagonal_torsion_free_ok)} <dim>({analysis.torsion_check})</dim>")


def render_error(error: TropError, stream: TextIO) -> None:
    kind = f" [{error.kind}]" if error.kind else ""
    _emit(stream, f"<bad>{error.name}{_esc(kind)}</bad>: {_esc(str(error))}")
