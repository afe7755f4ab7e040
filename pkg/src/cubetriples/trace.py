"""Step-by-step derivation emitter.

Produces the reduction for any instance (s, c) as an ordered list of
algebraic steps with the concrete numbers substituted in, renderable as
plain text, markdown, or newline-delimited records.  Equations are plain
ASCII (caret for powers, slash for the remainder fraction) so renderings
are diff-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .solver import SolutionSet, Triple, TripleSystem, candidate_zs, solve, solve_quadratic_for_x

__all__ = [
    "RENDER_FORMATS",
    "TraceStep",
    "derive_trace",
    "render",
    "solve_linear_diophantus",
]

RENDER_FORMATS = ("plain", "markdown", "structured-records")


@dataclass(frozen=True)
class TraceStep:
    index: int
    label: str
    equation_text: str
    note: str


def solve_linear_diophantus(a: int, b: int, c: int) -> int | None:
    """The integer X with a = b*X + c, or None when b does not divide a - c."""
    if b == 0:
        raise ValueError("coefficient b must be nonzero")
    q, r = divmod(a - c, b)
    return q if r == 0 else None


def _term(coefficient: int, symbol: str = "") -> str:
    """Render ' + 3Z' / ' - Z' / ' + 7' style trailing terms; '' for zero."""
    if coefficient == 0:
        return ""
    sign = " + " if coefficient > 0 else " - "
    magnitude = abs(coefficient)
    if symbol and magnitude == 1:
        return f"{sign}{symbol}"
    return f"{sign}{magnitude}{symbol}"


def _s_minus_z(s: int) -> str:
    if s == 0:
        return "-Z"
    return f"{s} - Z"


def _z_minus_s(s: int) -> str:
    if s == 0:
        return "Z"
    op = "-" if s > 0 else "+"
    return f"Z {op} {abs(s)}"


def _fraction(numerator: int, s: int, times_three: bool = False) -> str:
    """Sign-simplified remainder fraction numerator / (s - Z).

    Negative numerators flip the denominator to Z - s so the rendered
    numerator stays positive; times_three wraps the denominator in 3(...).
    """
    if numerator == 0:
        return "0"
    if numerator < 0:
        top, bottom = -numerator, _z_minus_s(s)
    else:
        top, bottom = numerator, _s_minus_z(s)
    if times_three:
        return f"{top}/(3({bottom}))"
    return f"{top}/({bottom})"


def _z_minus_s_coefficient(s: int) -> str:
    return "Z" if s == 0 else f"({_z_minus_s(s)})"


def _quadratic_text(k: int, constant: int) -> str:
    return f"X^2{_term(-k, 'X')}{_term(-constant)} = 0"


def format_triple(triple: Triple) -> str:
    return f"({triple.x}, {triple.y}, {triple.z})"


def format_solution_set(solution_set: SolutionSet) -> str:
    if solution_set.kind == "infinite_family":
        s = solution_set.family_anchor
        return f"infinite family: all permutations of ({s}, t, -t) for every integer t"
    assert solution_set.triples is not None
    body = ", ".join(format_triple(t) for t in solution_set.triples)
    return f"(X, Y, Z) in {{{body}}}"


def derive_trace(system: TripleSystem) -> list[TraceStep]:
    """The full derivation for the instance, in fixed step order."""
    s, c = system.s, system.c
    d0 = system.d0
    steps: list[TraceStep] = []

    def add(label: str, equation_text: str, note: str) -> None:
        steps.append(TraceStep(len(steps) + 1, label, equation_text, note))

    add(
        "rearrange-linear",
        f"X + Y = {_s_minus_z(s)}",
        "Isolate the pivot Z in the sum constraint.",
    )
    add(
        "rearrange-cubic",
        f"X^3 + Y^3 = {c} - Z^3",
        "Isolate the pivot Z in the cube-sum constraint.",
    )

    divide_lhs = f"X^2 + Y^2 - XY - Z^2{_term(-s, 'Z')}{_term(-s * s)}"
    add(
        "divide",
        f"{divide_lhs} = {_fraction(d0, s)}",
        "X^3 + Y^3 factors as (X + Y)(X^2 - XY + Y^2), so dividing the two "
        "rearranged constraints leaves a polynomial plus this remainder term.",
    )

    substitute_lhs = f"X^2 + {_z_minus_s_coefficient(s)}X{_term(-s, 'Z')}"
    if d0 % 3 == 0:
        substitute_rhs = _fraction(d0 // 3, s)
    else:
        substitute_rhs = _fraction(d0, s, times_three=True)
    add(
        "substitute",
        f"{substitute_lhs} = {substitute_rhs}",
        f"Substituting Y = {_s_minus_z(s)} - X collapses the identity to a "
        "quadratic in X alone.",
    )

    if system.degenerate:
        factor_left = "X" if s == 0 else f"(X{_term(-s)})"
        add(
            "factor",
            f"{factor_left}(X + Z) = 0",
            f"With c = s^3 = {c} the remainder vanishes and the quadratic "
            "factors: X = s forces Y = -Z, and X = -Z forces Y = s.",
        )
        add(
            "solutions",
            format_solution_set(solve(system)),
            "Every choice of integer t gives a solution, so the set is infinite.",
        )
        return steps

    if d0 % 3 == 0:
        reduced = d0 // 3
        add(
            "divisibility",
            f"({_z_minus_s(s)}) | {abs(reduced)}",
            "The left side of the quadratic is an integer for integer X, so "
            "the remainder must be an integer as well.",
        )
    else:
        add(
            "divisibility",
            f"3({_s_minus_z(s)}) | {d0}",
            f"3({_s_minus_z(s)}) is a multiple of 3 but {d0} is not, so no "
            "integer Z is admissible.",
        )

    candidates = candidate_zs(system)
    candidate_list = ", ".join(str(cand.z) for cand in candidates)
    add(
        "candidates",
        f"Z in {{{candidate_list}}}",
        "Each admissible pivot value comes from one signed divisor of "
        f"{d0} that is a multiple of 3.",
    )

    for cand in candidates:
        constant = s * cand.z + cand.d
        discriminant = cand.k * cand.k + 4 * constant
        roots = solve_quadratic_for_x(cand, system)
        if roots:
            triples = ", ".join(
                format_triple(Triple(x, s - cand.z - x, cand.z)) for x in roots
            )
            if len(roots) == 1:
                note = f"Discriminant {discriminant} gives the double root X = {roots[0]}; triple {triples}."
            else:
                note = f"Discriminant {discriminant} gives X = {roots[0]} or X = {roots[1]}; triples {triples}."
        elif discriminant < 0:
            note = f"Discriminant {discriminant} is negative, so Z = {cand.z} is rejected."
        else:
            note = (
                f"Discriminant {discriminant} is not a perfect square, so "
                f"Z = {cand.z} is rejected."
            )
        add(f"candidate Z = {cand.z}", _quadratic_text(cand.k, constant), note)

    add(
        "solutions",
        format_solution_set(solve(system)),
        "Union of the surviving triples, closed under all 6 coordinate "
        "permutations and sorted.",
    )
    return steps


def render(trace: list[TraceStep], format: str = "plain") -> str:
    """Deterministic rendering of a trace in one of RENDER_FORMATS."""
    if format == "plain":
        lines = []
        for step in trace:
            lines.append(f"{step.index:2d}. [{step.label}] {step.equation_text}")
            lines.append(f"      {step.note}")
        return "\n".join(lines) + ("\n" if lines else "")
    if format == "markdown":
        lines = []
        for step in trace:
            lines.append(f"{step.index}. **{step.label}**: `{step.equation_text}`")
            lines.append(f"   {step.note}")
        return "\n".join(lines) + ("\n" if lines else "")
    if format == "structured-records":
        lines = [
            json.dumps(
                {
                    "index": step.index,
                    "label": step.label,
                    "equation_text": step.equation_text,
                    "note": step.note,
                },
                separators=(",", ":"),
            )
            for step in trace
        ]
        return "\n".join(lines) + ("\n" if lines else "")
    raise ValueError(f"unknown render format {format!r}")
