"""Exact solver for the symmetric system  X + Y + Z = s,  X^3 + Y^3 + Z^3 = c.

The reduction: pick a pivot coordinate Z and put k = s - Z.  Dividing the
cube-sum constraint by the sum constraint (X^3 + Y^3 factors as
(X + Y)(X^2 - XY + Y^2)) and substituting Y = s - Z - X collapses the system
to one quadratic per pivot,

    X^2 - k*X - (s*Z + d) = 0        with  d = (c - s^3) / (3k),

which has integer content only when 3k divides d0 = c - s^3.  That
divisibility condition admits finitely many pivots whenever d0 != 0, so
enumerating divisors of d0 and testing each quadratic's discriminant yields
every solution.  The degenerate case c = s^3 (d0 = 0) makes the quadratic
factor as (X - s)(X + Z) = 0 for every pivot, producing the infinite family
of permutations of (s, t, -t).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from .intmath import perfect_square_root, signed_divisors

__all__ = [
    "CandidateZ",
    "SolutionSet",
    "Triple",
    "TripleSystem",
    "candidate_zs",
    "completeness_bound",
    "solve",
    "solve_quadratic_for_x",
    "verify",
]


@dataclass(frozen=True)
class TripleSystem:
    """One problem instance: target sum s and target cube sum c."""

    s: int
    c: int

    @property
    def d0(self) -> int:
        """Remainder constant c - s^3 whose divisors bound the pivot."""
        return self.c - self.s**3

    @property
    def degenerate(self) -> bool:
        """True when c = s^3, the case with infinitely many solutions."""
        return self.d0 == 0


@dataclass(frozen=True, order=True)
class Triple:
    """An ordered integer triple (x, y, z); ordering is lexicographic."""

    x: int
    y: int
    z: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def permutations(self) -> set["Triple"]:
        return {Triple(*p) for p in itertools.permutations(self.as_tuple())}


@dataclass(frozen=True)
class CandidateZ:
    """An admissible pivot value z with its derived quantities.

    k = s - z, and d = d0 / (3k) is the exact remainder the quadratic
    inherits; 3k | d0 holds by construction.
    """

    z: int
    k: int
    d: int
    d0: int


@dataclass(frozen=True)
class SolutionSet:
    """Either a finite, sorted, permutation-closed list of triples, or a
    symbolic descriptor of the infinite family (all permutations of
    (s, t, -t) over every integer t)."""

    kind: str
    triples: tuple[Triple, ...] | None = None
    family_anchor: int | None = None

    @classmethod
    def finite(cls, triples: tuple[Triple, ...]) -> "SolutionSet":
        return cls(kind="finite", triples=triples)

    @classmethod
    def infinite_family(cls, anchor: int) -> "SolutionSet":
        return cls(kind="infinite_family", family_anchor=anchor)

    def to_json_dict(self) -> dict[str, Any]:
        if self.kind == "finite":
            assert self.triples is not None
            return {
                "kind": "finite",
                "solutions": [list(t.as_tuple()) for t in self.triples],
            }
        return {"kind": "infinite_family", "family_anchor": self.family_anchor}

    @classmethod
    def from_json_dict(cls, data: dict[str, Any]) -> "SolutionSet":
        kind = data.get("kind")
        if kind == "finite":
            triples = tuple(Triple(*map(int, sol)) for sol in data["solutions"])
            return cls.finite(triples)
        if kind == "infinite_family":
            return cls.infinite_family(int(data["family_anchor"]))
        raise ValueError(f"unknown solution-set kind {kind!r}")


def verify(triple: Triple, system: TripleSystem) -> bool:
    """True iff the triple satisfies both constraints exactly."""
    x, y, z = triple.as_tuple()
    return x + y + z == system.s and x**3 + y**3 + z**3 == system.c


def candidate_zs(system: TripleSystem) -> list[CandidateZ]:
    """Every admissible pivot z, sorted ascending.

    z is admissible iff z != s and 3(s - z) divides d0 = c - s^3; these are
    the only values any solution coordinate can take in a non-degenerate
    system.  Enumerated via the signed divisors of d0 that are multiples
    of 3.
    """
    if system.degenerate:
        raise ValueError(
            f"system (s={system.s}, c={system.c}) is degenerate (c = s^3); "
            f"solve() handles this case"
        )
    d0 = system.d0
    candidates = []
    for divisor in signed_divisors(d0):
        if divisor % 3 != 0:
            continue
        k = divisor // 3
        candidates.append(CandidateZ(z=system.s - k, k=k, d=d0 // divisor, d0=d0))
    candidates.sort(key=lambda cand: cand.z)
    return candidates


def solve_quadratic_for_x(candidate: CandidateZ, system: TripleSystem) -> list[int]:
    """Integer roots of X^2 - k*X - (s*z + d) = 0, sorted ascending.

    Empty when the discriminant k^2 + 4(s*z + d) is negative, not a perfect
    square, or of the wrong parity relative to k.
    """
    k = candidate.k
    constant = system.s * candidate.z + candidate.d
    discriminant = k * k + 4 * constant
    if discriminant < 0:
        return []
    root = perfect_square_root(discriminant)
    if root is None:
        return []
    if (k - root) % 2 != 0:
        return []
    if root == 0:
        return [k // 2]
    return sorted(((k - root) // 2, (k + root) // 2))


def completeness_bound(system: TripleSystem) -> int:
    """A box radius guaranteed to contain every solution coordinate.

    Any coordinate z of a solution satisfies 3|s - z| <= |d0|, hence
    |z| <= |s| + |d0|/3; the max(1, ...) keeps the bound positive for
    tiny d0.  Used to make brute-force comparisons exhaustive.
    """
    if system.degenerate:
        raise ValueError("degenerate system has no finite completeness bound")
    return abs(system.s) + max(1, abs(system.d0) // 3)


def solve(system: TripleSystem) -> SolutionSet:
    """The complete solution set of the system.

    Degenerate systems (c = s^3) return the symbolic infinite family.
    Otherwise the finite set is assembled by running the quadratic at every
    admissible pivot and closing under the 6 coordinate permutations; the
    result is duplicate-free and sorted lexicographically.
    """
    if system.degenerate:
        return SolutionSet.infinite_family(system.s)
    found: set[Triple] = set()
    for candidate in candidate_zs(system):
        for x in solve_quadratic_for_x(candidate, system):
            y = system.s - candidate.z - x
            found.update(Triple(x, y, candidate.z).permutations())
    return SolutionSet.finite(tuple(sorted(found)))
