"""Connecting domains, the periodic lattice, and positive enumeration.

A domain is an integer vector of region coefficients.  Its alpha
boundary, pushed to a 0-chain on the intersection points, must equal
``to - from``; the beta boundary gives the mirror ``from - to``.  Both
conditions form one integer linear system per diagram, solved exactly
through the Hermite normal form.

The kernel of that system splits as (periodic lattice with n_z = 0)
plus the fundamental class [Sigma] (all coefficients 1), split off by
n_z.  Positive domains of a prescribed index and n_z are enumerated by
walking the integer points of the polytope D0 + lattice >= 0, with
exact-LP bounds certifying completeness; an unbounded polytope is
reported as an error naming a recession direction, which is precisely a
failure of weak admissibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional, Sequence

from .diagram import ALPHA, HeegaardDiagram, validate
from .exactla import EQ, GE, canonical_basis, hermite_solve, lp_optimize
from .generators import Generator


class UnboundedEnumeration(Exception):
    """Positive-domain polytope has a recession direction.

    Carries an all-nonnegative nonzero integer kernel direction as
    ``witness``; its existence means the diagram is not weakly
    admissible.
    """

    def __init__(self, witness: tuple[int, ...]):
        self.witness = witness
        super().__init__(
            f"positive domains are unbounded along the periodic direction {witness}"
        )


@dataclass(frozen=True)
class Domain:
    """Integer region vector connecting ``from_gen`` to ``to_gen``."""

    coefficients: tuple[int, ...]
    from_gen: Generator
    to_gen: Generator

    def __add__(self, other: "Domain") -> "Domain":
        if self.to_gen != other.from_gen:
            raise ValueError("domains are not composable")
        return Domain(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
            self.from_gen,
            other.to_gen,
        )


@dataclass(frozen=True)
class PeriodicLattice:
    """Basis of the n_z = 0 kernel plus the fundamental class."""

    basis: tuple[tuple[int, ...], ...]
    sigma: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class BoundarySystem:
    """Matrices sending region vectors to point 0-chains.

    ``l_alpha @ n`` is the alpha boundary of the domain ``n`` as a
    0-chain over ``points`` (in canonical order); ``l_beta`` the beta
    one.  ``D`` connects x to y exactly when ``l_alpha @ n = y - x``
    and ``l_beta @ n = x - y``.
    """

    points: tuple[str, ...]
    l_alpha: tuple[tuple[int, ...], ...]
    l_beta: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def boundary_system(d: HeegaardDiagram) -> BoundarySystem:
    report = validate(d)
    if not report.ok:
        raise ValueError(f"boundary_system() requires a valid diagram:\n{report}")
    points = d.points
    index = {p: i for i, p in enumerate(points)}
    n_regions = len(d.regions)
    la = [[0] * n_regions for _ in points]
    lb = [[0] * n_regions for _ in points]
    for ri, region in enumerate(d.regions):
        for cyc in region.cycles:
            for ref in cyc:
                tail, head = d.arc_endpoints(ref)
                target = la if ref.curve == ALPHA else lb
                target[index[head]][ri] += ref.dir
                target[index[tail]][ri] -= ref.dir
    return BoundarySystem(
        points,
        tuple(tuple(row) for row in la),
        tuple(tuple(row) for row in lb),
    )


def _chain(points: Sequence[str], gen: Generator) -> list[int]:
    chi = [0] * len(points)
    index = {p: i for i, p in enumerate(points)}
    for p in gen.points:
        chi[index[p]] += 1
    return chi


def _stacked_system(d: HeegaardDiagram) -> list[list[int]]:
    sys = boundary_system(d)
    return [list(r) for r in sys.l_alpha] + [list(r) for r in sys.l_beta]


def _stacked_rhs(d: HeegaardDiagram, x: Generator, y: Generator) -> list[int]:
    sys = boundary_system(d)
    cx = _chain(sys.points, x)
    cy = _chain(sys.points, y)
    return [b - a for a, b in zip(cx, cy)] + [a - b for a, b in zip(cx, cy)]


def _assert_mirror(d: HeegaardDiagram, dom: Domain) -> None:
    sys = boundary_system(d)
    cx = _chain(sys.points, dom.from_gen)
    cy = _chain(sys.points, dom.to_gen)
    for row, want in zip(sys.l_alpha, (b - a for a, b in zip(cx, cy))):
        assert sum(r * c for r, c in zip(row, dom.coefficients)) == want
    for row, want in zip(sys.l_beta, (a - b for a, b in zip(cx, cy))):
        assert sum(r * c for r, c in zip(row, dom.coefficients)) == want


def connecting_domain(
    d: HeegaardDiagram, x: Generator, y: Generator
) -> Optional[Domain]:
    """A domain from x to y with n_z = 0, or None when none exists.

    Solvability is exactly the vanishing of the epsilon obstruction, so
    absence here means x and y sit in different Spin^c classes.
    """
    solved = hermite_solve(_stacked_system(d), _stacked_rhs(d, x, y))
    if solved is None:
        return None
    particular, _ = solved
    nz = particular[d.basepoint]
    coeffs = tuple(c - nz for c in particular)
    dom = Domain(coeffs, x, y)
    _assert_mirror(d, dom)
    return dom


@lru_cache(maxsize=None)
def periodic_lattice(d: HeegaardDiagram) -> PeriodicLattice:
    """Canonical basis of the n_z = 0 kernel, with [Sigma] split off."""
    n = len(d.regions)
    solved = hermite_solve(_stacked_system(d), [0] * (2 * len(d.points)))
    assert solved is not None  # 0 always solves
    _, kernel = solved
    sigma = tuple([1] * n)
    nz_row = [[vec[d.basepoint] for vec in kernel]]
    if kernel:
        sub = hermite_solve(nz_row, [0])
        assert sub is not None
        _, combos = sub
        vectors = []
        for combo in combos:
            vec = [0] * n
            for c, k in zip(combo, kernel):
                for i in range(n):
                    vec[i] += c * k[i]
            vectors.append(vec)
        basis = tuple(tuple(v) for v in canonical_basis(vectors))
    else:
        basis = ()
    return PeriodicLattice(basis, sigma)


def _integer_direction(
    basis: Sequence[Sequence[int]], t: Sequence[Fraction]
) -> tuple[int, ...]:
    """Clear denominators of P.t and return the integer region vector."""
    scale = lcm(*(c.denominator for c in t)) if t else 1
    n = len(basis[0])
    out = [0] * n
    for c, vec in zip(t, basis):
        ci = c * scale
        assert ci.denominator == 1
        for i in range(n):
            out[i] += int(ci) * vec[i]
    return tuple(out)


def recession_direction(
    basis: Sequence[Sequence[int]],
) -> Optional[tuple[int, ...]]:
    """All-nonnegative nonzero direction in the span of ``basis``, if any."""
    if not basis:
        return None
    n = len(basis[0])
    r = len(basis)
    constraints = []
    for i in range(n):
        constraints.append(([vec[i] for vec in basis], GE, 0))
    total = [sum(vec[i] for i in range(n)) for vec in basis]
    constraints.append((total, GE, 1))
    res = lp_optimize([0] * r, constraints)
    if not res.optimal:
        return None
    witness = _integer_direction(basis, res.point)
    assert all(w >= 0 for w in witness) and any(w > 0 for w in witness)
    return witness


@lru_cache(maxsize=None)
def _positive_solutions(
    d: HeegaardDiagram, x: Generator, y: Generator, nz: int
) -> tuple[tuple[int, ...], ...]:
    """All nonnegative coefficient vectors connecting x to y at n_z."""
    solved = hermite_solve(_stacked_system(d), _stacked_rhs(d, x, y))
    if solved is None:
        return ()
    particular, _ = solved
    lattice = periodic_lattice(d)
    shift = nz - particular[d.basepoint]
    d0 = [c + shift for c in particular]

    basis = lattice.basis
    if not basis:
        if all(c >= 0 for c in d0):
            return (tuple(d0),)
        return ()

    witness = recession_direction(basis)
    if witness is not None:
        raise UnboundedEnumeration(witness)

    n = len(d0)
    r = len(basis)
    results: list[tuple[int, ...]] = []

    def last_bounds(fixed: list[int]) -> Optional[tuple[int, int]]:
        """One free variable left: read its range off each constraint."""
        low, high = None, None
        for i in range(n):
            base = d0[i] + sum(v * basis[j][i] for j, v in enumerate(fixed))
            coef = basis[r - 1][i]
            if coef == 0:
                if base < 0:
                    return None
            elif coef > 0:
                cand = math.ceil(Fraction(-base, coef))
                low = cand if low is None else max(low, cand)
            else:
                cand = math.floor(Fraction(-base, coef))
                high = cand if high is None else min(high, cand)
        assert low is not None and high is not None  # bounded polytope
        if low > high:
            return None
        return low, high

    def lp_bounds(fixed: list[int], coord: int) -> Optional[tuple[int, int]]:
        """Integer range of c[coord] over the polytope with c[:coord] fixed."""
        constraints = []
        for i in range(n):
            row = [vec[i] for vec in basis]
            constraints.append((row, GE, -d0[i]))
        for j, val in enumerate(fixed):
            unit = [0] * r
            unit[j] = 1
            constraints.append((unit, EQ, val))
        obj = [0] * r
        obj[coord] = 1
        hi = lp_optimize(obj, constraints)
        if hi.status == "infeasible":
            return None
        assert hi.optimal  # bounded: no recession direction exists
        obj[coord] = -1
        lo = lp_optimize(obj, constraints)
        assert lo.optimal
        return math.ceil(-lo.value), math.floor(hi.value)

    def sweep(fixed: list[int]) -> None:
        coord = len(fixed)
        if coord == r:
            coeffs = list(d0)
            for val, vec in zip(fixed, basis):
                for i in range(n):
                    coeffs[i] += val * vec[i]
            if all(c >= 0 for c in coeffs):
                results.append(tuple(coeffs))
            return
        rng = last_bounds(fixed) if coord == r - 1 else lp_bounds(fixed, coord)
        if rng is None:
            return
        low, high = rng
        for val in range(low, high + 1):
            sweep(fixed + [val])

    sweep([])
    results.sort()
    return tuple(results)


def positive_domains(
    d: HeegaardDiagram,
    x: Generator,
    y: Generator,
    target_index: int,
    nz: int,
) -> list[Domain]:
    """All domains x -> y with coefficients >= 0, given n_z and index.

    Complete by the bounded-polytope argument: absence of a recession
    direction (checked first, by exact LP) makes the positive polytope
    compact, and per-coordinate LP bounds with depth-first re-tightening
    sweep every integer point.  Raises UnboundedEnumeration otherwise.
    """
    from .measures import maslov_index

    results = []
    for coeffs in _positive_solutions(d, x, y, nz):
        dom = Domain(coeffs, x, y)
        if maslov_index(d, dom) == target_index:
            _assert_mirror(d, dom)
            results.append(dom)
    return results
