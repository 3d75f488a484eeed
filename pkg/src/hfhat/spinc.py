"""Spin^c decomposition of the generator set and relative gradings.

Two generators lie in the same Spin^c class exactly when a connecting
domain exists, so the partition is computed from integer solvability of
the domain equation.  Gradings inside a class are relative: gr(x) -
gr(y) is the Maslov index of any n_z = 0 domain from x to y, read mod
the divisor gcd |<c_1, P>| over the periodic basis when that is
nonzero.  An explicit epsilon obstruction (an abelian-group element
that vanishes iff a connecting domain exists) is exposed for
diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import HeegaardDiagram
from .domains import _stacked_rhs, _stacked_system, connecting_domain, periodic_lattice
from .exactla import mat_vec, smith_normal_form
from .generators import Generator, enumerate_generators
from .measures import chern_pairing, maslov_index


@dataclass(frozen=True)
class SpincClass:
    members: tuple[Generator, ...]
    divisor: int
    gradings: tuple[tuple[Generator, int], ...]

    @property
    def key(self) -> Generator:
        """Canonical representative: the minimum member id."""
        return self.members[0]

    def grading(self, x: Generator) -> int:
        return dict(self.gradings)[x]


def spinc_partition(d: HeegaardDiagram) -> list[SpincClass]:
    """Partition the generators by Spin^c structure.

    Classes are sorted by their canonical representative; each comes
    with its grading divisor and normalized relative gradings.
    """
    gens = enumerate_generators(d)
    groups: list[list[Generator]] = []
    for g in gens:
        for group in groups:
            if connecting_domain(d, g, group[0]) is not None:
                group.append(g)
                break
        else:
            groups.append([g])
    classes = []
    for group in sorted(groups, key=lambda grp: grp[0]):
        members = tuple(sorted(group))
        divisor = _divisor(d, members[0])
        gradings = _gradings(d, members, divisor)
        classes.append(SpincClass(members, divisor, gradings))
    # Transitivity sanity check: members of distinct classes never connect.
    for i, ca in enumerate(classes):
        for cb in classes[i + 1 :]:
            assert connecting_domain(d, ca.members[0], cb.members[0]) is None
    return classes


def _divisor(d: HeegaardDiagram, x: Generator) -> int:
    lattice = periodic_lattice(d)
    value = 0
    for vec in lattice.basis:
        value = gcd(value, abs(chern_pairing(d, x, vec)))
    return value


def _gradings(
    d: HeegaardDiagram, members: tuple[Generator, ...], divisor: int
) -> tuple[tuple[Generator, int], ...]:
    base = members[0]
    raw = {}
    for x in members:
        dom = connecting_domain(d, x, base)
        assert dom is not None
        raw[x] = maslov_index(d, dom)
    low = min(raw.values())
    out = []
    for x in members:
        value = raw[x] - low
        if divisor > 0:
            value %= divisor
        out.append((x, value))
    return tuple(out)


def grading_divisor(d: HeegaardDiagram, c: SpincClass) -> int:
    """gcd of |<c_1(s), P>| over the periodic basis; 0 means Z-graded."""
    return _divisor(d, c.members[0])


def relative_gradings(d: HeegaardDiagram, c: SpincClass) -> dict[Generator, int]:
    """Normalized relative gradings (minimum 0; reduced mod the divisor)."""
    return dict(_gradings(d, c.members, c.divisor))


def epsilon_obstruction(d: HeegaardDiagram, x: Generator, y: Generator) -> tuple[int, ...]:
    """Diagnostic epsilon: coordinates of the obstruction to pi_2(x,y).

    Computed in the cokernel of the boundary system through the Smith
    normal form: each coordinate is the image of the right-hand side
    along an invariant factor (reduced mod the factor when finite).
    The zero tuple is returned exactly when a connecting domain exists.
    """
    a = _stacked_system(d)
    rhs = _stacked_rhs(d, x, y)
    u, s, _ = smith_normal_form(a)
    transformed = mat_vec(u, rhs)
    diag = min(len(s), len(s[0]) if s else 0)
    coords = []
    for i, value in enumerate(transformed):
        factor = s[i][i] if i < diag else 0
        coords.append(value % factor if factor > 0 else value)
    while coords and coords[-1] == 0:
        coords.pop()
    return tuple(coords)
