"""Generator enumeration.

A generator is an unordered g-tuple of intersection points with exactly
one point on each alpha curve and one on each beta curve; since every
point lies on exactly one curve of each family, generators correspond
to systems of distinct representatives, enumerated here by backtracking
over alpha curves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import HeegaardDiagram, validate


@dataclass(frozen=True, order=True)
class Generator:
    """Canonical form: the sorted tuple of its point identifiers."""

    points: tuple[str, ...]

    def __str__(self) -> str:
        return "{" + ",".join(self.points) + "}"


def enumerate_generators(d: HeegaardDiagram) -> list[Generator]:
    """All generators of a valid diagram, sorted by canonical id."""
    report = validate(d)
    if not report.ok:
        raise ValueError(f"enumerate_generators() requires a valid diagram:\n{report}")
    beta_of = {}
    for j, curve in enumerate(d.beta):
        for p in curve:
            beta_of[p] = j
    # Visit alpha curves in ascending candidate count to prune early.
    order = sorted(range(d.genus), key=lambda i: (len(d.alpha[i]), i))
    found: list[Generator] = []
    chosen: list[str] = []
    used_beta: set[int] = set()

    def extend(depth: int) -> None:
        if depth == d.genus:
            found.append(Generator(tuple(sorted(chosen))))
            return
        for p in d.alpha[order[depth]]:
            j = beta_of[p]
            if j in used_beta:
                continue
            used_beta.add(j)
            chosen.append(p)
            extend(depth + 1)
            chosen.pop()
            used_beta.remove(j)

    extend(0)
    found.sort()
    return found
