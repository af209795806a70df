"""Export of verified proof scripts as Isar lemma text.

The emitted text follows a fixed template: the goal sequent in full
constructor syntax inside the lemma header, one proof step per rule
application with the stated open sequents joined by "and", and a closing
"with Basic show" line.  Output is byte-deterministic for a given script.
The text targets the calculus theory's syntax but is not validated against
an Isabelle installation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import ProofScript, Step, check_script
from .diagnostics import Diagnostic
from .names import NameMap
from .printers import (
    lenient_formatters,
    print_conventional,
    print_full,
    print_full_term,
)
from .syntax import Sequent

HINT_STYLES = ("attribute", "comment")


class EmitRefusedError(Exception):
    """The script does not verify and force was not set."""

    def __init__(self, diagnostics: list[Diagnostic]):
        errors = sum(1 for d in diagnostics if d.is_error)
        super().__init__(f"refusing to emit: {errors} error(s) in the script")
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class GeneratedProof:
    isar_text: str
    name_map_rendering: str
    conventional_rendering: str


def _sequent_lines(z: Sequent, indent: str) -> list[str]:
    lines = [f"{indent}["]
    for i, p in enumerate(z):
        comma = "," if i + 1 < len(z) else ""
        lines.append(f"{indent}  {print_full(p)}{comma}")
    lines.append(f"{indent}]")
    return lines


def _step_lines(step: Step, hint_style: str) -> list[str]:
    rule = step.app.rule.value
    annotation = ""
    if step.app.hint is not None:
        term = print_full_term(step.app.hint)
        if hint_style == "attribute":
            annotation = f"[where t = ‹{term}›]"
        else:
            annotation = f" ― ‹t = {term}›"
    if not step.stated:
        return [f"  with {rule}{annotation} show ?thesis", "    by simp"]
    lines = [f"  from {rule}{annotation} have ?thesis if ‹⊩"]
    for i, z in enumerate(step.stated):
        lines.extend(_sequent_lines(z, "    "))
        lines.append("    ›" if i + 1 == len(step.stated) else "    › and ‹⊩")
    lines.append("    using that by simp")
    return lines


def render_name_map(nm: NameMap) -> str:
    lines: list[str] = []
    if nm.functions:
        lines.append("Functions:")
        lines.extend(f"  {name} = {i}" for name, i in nm.functions.items())
    if nm.predicates:
        lines.append("Predicates:")
        lines.extend(f"  {name} = {i}" for name, i in nm.predicates.items())
    return "\n".join(lines)


def emit_isar(
    script: ProofScript,
    nm: NameMap,
    force: bool = False,
    hint_style: str = "attribute",
) -> GeneratedProof:
    """Render a script as Isar text, refusing unverified input unless forced.

    hint_style controls how gamma instantiation hints appear: "attribute"
    renders a where-attribute on the rule name, "comment" a trailing
    document comment.
    """
    if hint_style not in HINT_STYLES:
        raise ValueError(f"unknown hint style {hint_style!r}")
    if not force:
        fmt_formula, fmt_sequent = lenient_formatters(nm)
        diagnostics = check_script(script, fmt_formula, fmt_sequent)
        if any(d.is_error for d in diagnostics):
            raise EmitRefusedError(diagnostics)
    lines = ["lemma ‹⊩"]
    lines.extend(_sequent_lines((script.goal,), "  "))
    lines.append("  ›")
    lines.append("proof -")
    for step in script.steps:
        lines.extend(_step_lines(step, hint_style))
    if not script.steps or script.steps[-1].stated:
        lines.append("  show ?thesis")
        lines.append("    sorry")
    lines.append("qed")
    return GeneratedProof(
        isar_text="\n".join(lines) + "\n",
        name_map_rendering=render_name_map(nm),
        conventional_rendering=print_conventional(script.goal, nm),
    )


def assemble_unshortened(g: GeneratedProof, warnings: int = 0) -> str:
    """Full output for one proof: comment header then the lemma text."""
    header = ["(*"]
    if warnings:
        plural = "s" if warnings != 1 else ""
        header.append(f"  WARNING: {warnings} warning{plural}; run check for details.")
        header.append("")
    header.append(f"  Statement: {g.conventional_rendering}")
    if g.name_map_rendering:
        header.append("")
        header.extend("  " + line for line in g.name_map_rendering.split("\n"))
    header.append("*)")
    return "\n".join(header) + "\n" + g.isar_text
