"""Weak and strong admissibility with certificates.

Both criteria quantify over real multiples of periodic domains, so they
are decided completely by exact rational LP over the periodic basis:

* weak fails iff some nonzero element of the (possibly class-restricted)
  periodic span is componentwise nonnegative;
* strong fails iff some element of the span has Chern pairing 2 and all
  coefficients at most 1 (the homogeneous normalization of "every P
  with pairing 2n > 0 has a coefficient above n").

On success an area certificate can be produced: a strictly positive
rational area vector giving every basis element zero signed area (weak)
or signed area equal to half its Chern pairing with total area one
(strong).  Certificates and witnesses are verified exactly before being
returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .diagram import HeegaardDiagram
from .domains import _integer_direction, periodic_lattice, recession_direction
from .exactla import EQ, GE, LE, canonical_basis, hermite_solve, lp_optimize
from .measures import chern_pairing
from .spinc import SpincClass


class NotAdmissible(Exception):
    """Requested an area certificate for a non-admissible diagram."""

    def __init__(self, witness: tuple[int, ...]):
        self.witness = witness
        super().__init__(f"no area certificate: witness {witness}")


@dataclass(frozen=True)
class AdmissibilityReport:
    kind: str  # "weak" | "strong"
    verdict: bool
    witness: Optional[tuple[int, ...]] = None
    certificate: Optional[tuple[Fraction, ...]] = None


def _chern_zero_basis(
    d: HeegaardDiagram, c: SpincClass
) -> list[tuple[int, ...]]:
    """Basis of the sublattice of periodic domains with zero pairing."""
    basis = periodic_lattice(d).basis
    if not basis:
        return []
    x = c.members[0]
    pairings = [[chern_pairing(d, x, vec) for vec in basis]]
    solved = hermite_solve(pairings, [0])
    assert solved is not None
    _, combos = solved
    n = len(basis[0])
    vectors = []
    for combo in combos:
        vec = [0] * n
        for coef, kvec in zip(combo, basis):
            for i in range(n):
                vec[i] += coef * kvec[i]
        vectors.append(vec)
    return [tuple(v) for v in canonical_basis(vectors)]


def weak_admissible(
    d: HeegaardDiagram, c: Optional[SpincClass] = None
) -> AdmissibilityReport:
    """No nonzero all-nonnegative element in the periodic span.

    Without a class the whole n_z = 0 lattice is constrained (weak
    admissibility for every Spin^c structure at once); with a class
    only the zero-pairing sublattice is.
    """
    basis = _chern_zero_basis(d, c) if c is not None else list(periodic_lattice(d).basis)
    witness = recession_direction(basis)
    if witness is None:
        return AdmissibilityReport("weak", True)
    return AdmissibilityReport("weak", False, witness=witness)


def strong_admissible(d: HeegaardDiagram, c: SpincClass) -> AdmissibilityReport:
    """Every P with pairing 2n > 0 must have a coefficient above n.

    Scale-normalized to pairing exactly 2 and coefficients <= 1 over
    the real span; the zero-pairing sublattice is additionally held to
    the weak criterion, and a failure of either yields the witness.
    """
    weak_part = weak_admissible(d, c)
    if not weak_part.verdict:
        return AdmissibilityReport("strong", False, witness=weak_part.witness)
    basis = periodic_lattice(d).basis
    if not basis:
        return AdmissibilityReport("strong", True)
    x = c.members[0]
    chern = [chern_pairing(d, x, vec) for vec in basis]
    n = len(basis[0])
    r = len(basis)
    constraints = [(chern, EQ, 2)]
    for i in range(n):
        constraints.append(([vec[i] for vec in basis], LE, 1))
    res = lp_optimize([0] * r, constraints)
    if not res.optimal:
        return AdmissibilityReport("strong", True)
    witness = _integer_direction(basis, res.point)
    # Scaling by the common denominator keeps the violation: the
    # witness has pairing 2m with every coefficient <= m.
    pairing = chern_pairing(d, x, witness)
    assert pairing > 0 and pairing % 2 == 0
    assert max(witness) <= pairing // 2
    return AdmissibilityReport("strong", False, witness=witness)


def area_certificate(
    d: HeegaardDiagram, mode: str, c: Optional[SpincClass] = None
) -> tuple[Fraction, ...]:
    """Strictly positive area vector certifying admissibility.

    mode "weak": a . P = 0 for every (class-restricted) basis element.
    mode "strong" (requires a class): a . P = <c_1, P>/2 for every basis
    element and a . [Sigma] = 1.  Raises NotAdmissible when the verdict
    is false.
    """
    if mode not in ("weak", "strong"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "strong" and c is None:
        raise ValueError("strong certificates require a Spin^c class")
    report = weak_admissible(d, c) if mode == "weak" else strong_admissible(d, c)
    if not report.verdict:
        raise NotAdmissible(report.witness)
    n = len(d.regions)
    if mode == "weak":
        basis: Sequence[Sequence[int]] = (
            _chern_zero_basis(d, c) if c is not None else periodic_lattice(d).basis
        )
        equalities = [(vec, EQ, 0) for vec in basis]
    else:
        basis = periodic_lattice(d).basis
        x = c.members[0]
        equalities = [
            (vec, EQ, Fraction(chern_pairing(d, x, vec), 2)) for vec in basis
        ]
        equalities.append(([1] * n, EQ, 1))
    # Variables: areas a_0..a_{n-1} and the margin m; maximize m with
    # m <= a_i <= 1 so a strictly positive solution surfaces as m > 0.
    def widen(row: Sequence[int | Fraction]) -> list[Fraction | int]:
        return list(row) + [0]

    constraints = [(widen(row), rel, rhs) for row, rel, rhs in equalities]
    for i in range(n):
        gap = [0] * (n + 1)
        gap[i] = 1
        gap[n] = -1
        constraints.append((gap, GE, 0))  # a_i >= m
        cap = [0] * (n + 1)
        cap[i] = 1
        constraints.append((cap, LE, 1))  # a_i <= 1
    objective = [0] * n + [1]
    res = lp_optimize(objective, constraints)
    if not res.optimal or res.value <= 0:
        raise NotAdmissible(report.witness or tuple([0] * n))
    areas = tuple(res.point[:n])
    assert all(a > 0 for a in areas)
    for row, rel, rhs in equalities:
        lhs = sum(Fraction(cf) * a for cf, a in zip(row, areas))
        assert lhs == rhs
    return areas
