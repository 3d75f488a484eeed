"""Hat-flavor chain complex over F2 for rigid domains.

An index-1 positive domain with n_z = 0 contributes a count of 1 mod 2
when it is a rigid embedded disk: a bigon (two corners) or a rectangle
(four corners).  Bigons are certified by the Riemann mapping theorem;
rectangles are the standard extension adopted by the combinatorial
literature and can be disabled with ``strict_rectangles`` (they then
classify as Other).  Any Other domain aborts the computation with a
NotCombinatorial error listing the offenders, rather than guessing a
count the combinatorics cannot certify (annuli in particular).
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import HeegaardDiagram, quadrants, validate
from .domains import Domain, UnboundedEnumeration, positive_domains
from .generators import Generator
from .measures import maslov_index
from .spinc import SpincClass, spinc_partition

BIGON = "Bigon"
RECTANGLE = "Rectangle"
OTHER = "Other"

# Cyclically contiguous nonempty subsets of the 4 quadrant slots.
_CONTIGUOUS = {
    frozenset((s + i) % 4 for i in range(w)) for w in (1, 2, 3) for s in range(4)
} | {frozenset(range(4))}


@dataclass(frozen=True)
class RigidShape:
    tag: str
    support: tuple[int, ...]
    corners: tuple[str, ...]


@dataclass(frozen=True)
class GradedComplex:
    """Differential data of one Spin^c class."""

    spinc: SpincClass
    order: tuple[Generator, ...]
    matrix: tuple[tuple[int, ...], ...]  # matrix[iy][ix] over F2
    audit: tuple[tuple[Generator, Generator, Domain, str], ...]


class NotCombinatorial(Exception):
    """Some counted moduli space is not a rigid bigon/rectangle."""

    def __init__(self, offenders: list[tuple[Generator, Generator, Domain, RigidShape]]):
        self.offenders = offenders
        lines = [
            f"  {x} -> {y}: coefficients {dom.coefficients}"
            for x, y, dom, _ in offenders
        ]
        super().__init__(
            "index-1 domains without a certified count:\n" + "\n".join(lines)
        )


def _support_chi(d: HeegaardDiagram, support: set[int]) -> int:
    """Euler characteristic of the closed support surface.

    Glue the closures of the support regions along shared arcs:
    chi = sum chi(region) + #points on used arcs - #used arcs.
    """
    arcs: set[tuple[str, int, int]] = set()
    for ri in support:
        for cyc in d.regions[ri].cycles:
            for ref in cyc:
                arcs.add((ref.curve, ref.index, ref.arc))
    pts: set[str] = set()
    for curve_tag, index, k in arcs:
        curve = d.curve(curve_tag, index)
        pts.add(curve[k])
        pts.add(curve[(k + 1) % len(curve)])
    chi = sum(d.regions[ri].euler_char for ri in support)
    return chi + len(pts) - len(arcs)


def _support_connected(d: HeegaardDiagram, support: set[int]) -> bool:
    arc_owner: dict[tuple[str, int, int], list[int]] = {}
    for ri in support:
        for cyc in d.regions[ri].cycles:
            for ref in cyc:
                arc_owner.setdefault((ref.curve, ref.index, ref.arc), []).append(ri)
    adj: dict[int, set[int]] = {ri: set() for ri in support}
    for owners in arc_owner.values():
        for a in owners:
            for b in owners:
                if a != b:
                    adj[a].add(b)
    start = min(support)
    seen = {start}
    stack = [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == support


def classify_rigid(d: HeegaardDiagram, D: Domain) -> RigidShape:
    """Classify an index-1 nonnegative n_z = 0 domain.

    Bigon and Rectangle require coefficients in {0,1}, connected disk
    support with locally contiguous quadrants, and a corner census
    matching the moving points of the generator pair; everything else
    is Other.
    """
    coeffs = D.coefficients
    assert all(c >= 0 for c in coeffs)
    assert coeffs[d.basepoint] == 0
    assert maslov_index(d, D) == 1
    if any(c not in (0, 1) for c in coeffs):
        return RigidShape(OTHER, (), ())
    support = {i for i, c in enumerate(coeffs) if c == 1}
    if not support:
        return RigidShape(OTHER, (), ())
    sup = tuple(sorted(support))
    qs = quadrants(d)
    corner_pts = []
    for p in d.points:
        covered = frozenset(
            s for s, ri in enumerate(qs.quadrant_regions(p)) if ri in support
        )
        if covered and covered not in _CONTIGUOUS:
            return RigidShape(OTHER, sup, ())  # pinched point
        if len(covered) == 1:
            corner_pts.append(p)
    if not _support_connected(d, support):
        return RigidShape(OTHER, sup, tuple(corner_pts))
    if _support_chi(d, support) != 1:
        return RigidShape(OTHER, sup, tuple(corner_pts))
    moving_from = set(D.from_gen.points) - set(D.to_gen.points)
    moving_to = set(D.to_gen.points) - set(D.from_gen.points)
    if set(corner_pts) != moving_from | moving_to:
        return RigidShape(OTHER, sup, tuple(corner_pts))
    if len(moving_from) == 1 and len(moving_to) == 1:
        return RigidShape(BIGON, sup, tuple(sorted(corner_pts)))
    if len(moving_from) == 2 and len(moving_to) == 2:
        return RigidShape(RECTANGLE, sup, tuple(sorted(corner_pts)))
    return RigidShape(OTHER, sup, tuple(corner_pts))


def differential(
    d: HeegaardDiagram,
    c: SpincClass,
    strict_rectangles: bool = False,
    threads: int = 1,
) -> GradedComplex:
    """F2 boundary matrix of one Spin^c class with its audit trail.

    Entry (y, x) counts the rigid index-1 positive n_z = 0 domains from
    x to y mod 2.  Raises NotCombinatorial when any such domain is not
    rigid, and propagates UnboundedEnumeration from the domain solver.
    """
    order = c.members
    idx = {g: i for i, g in enumerate(order)}
    pairs = [(x, y) for x in order for y in order if x != y]

    def entry(pair: tuple[Generator, Generator]):
        x, y = pair
        domains = positive_domains(d, x, y, 1, 0)
        shapes = [classify_rigid(d, dom) for dom in domains]
        return x, y, list(zip(domains, shapes))

    if threads > 1 and len(pairs) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            computed = list(pool.map(entry, pairs))
    else:
        computed = [entry(pair) for pair in pairs]

    counted_tags = (BIGON,) if strict_rectangles else (BIGON, RECTANGLE)
    matrix = [[0] * len(order) for _ in order]
    audit = []
    offenders = []
    for x, y, found in computed:
        for dom, shape in found:
            if shape.tag in counted_tags:
                matrix[idx[y]][idx[x]] ^= 1
                audit.append((x, y, dom, shape.tag))
            else:
                offenders.append((x, y, dom, shape))
    if offenders:
        raise NotCombinatorial(offenders)

    gradings = dict(c.gradings)
    for x, y, dom, _ in audit:
        drop = gradings[x] - gradings[y]
        if c.divisor > 0:
            assert drop % c.divisor == 1 % c.divisor
        else:
            assert drop == 1
    mat = tuple(tuple(row) for row in matrix)
    _assert_d_squared_zero(mat)
    return GradedComplex(c, order, mat, tuple(audit))


def _assert_d_squared_zero(matrix: tuple[tuple[int, ...], ...]) -> None:
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc ^= matrix[i][k] & matrix[k][j]
            assert acc == 0, "d^2 != 0 over F2"


def _gf2_rank(rows: list[list[int]]) -> int:
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_col = 0
    r = 0
    while r < len(rows) and pivot_col < cols:
        pivot = next((i for i in range(r, len(rows)) if rows[i][pivot_col]), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][pivot_col]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        pivot_col += 1
    return rank


@dataclass(frozen=True)
class HomologyClassReport:
    spinc: SpincClass
    ranks: tuple[tuple[int, int], ...]  # (grading, rank), sorted

    @property
    def total(self) -> int:
        return sum(r for _, r in self.ranks)


def homology(
    d: HeegaardDiagram, strict_rectangles: bool = False, threads: int = 1
) -> list[HomologyClassReport]:
    """Graded F2 homology ranks per Spin^c class."""
    report = validate(d)
    if not report.ok:
        raise ValueError(f"homology() requires a valid diagram:\n{report}")
    out = []
    for c in spinc_partition(d):
        complex_ = differential(d, c, strict_rectangles, threads)
        gradings = dict(c.gradings)
        levels = sorted({v for v in gradings.values()})
        ranks = []
        for k in levels:
            dim_k = sum(1 for g in complex_.order if gradings[g] == k)
            ranks.append((k, dim_k - _rank_from(complex_, gradings, k) - _rank_into(complex_, gradings, k, c.divisor)))
        out.append(HomologyClassReport(c, tuple(ranks)))
    return out


def _columns_at(complex_: GradedComplex, gradings, level: int) -> list[list[int]]:
    cols = []
    for j, g in enumerate(complex_.order):
        if gradings[g] == level:
            cols.append([complex_.matrix[i][j] for i in range(len(complex_.order))])
    return cols


def _rank_from(complex_: GradedComplex, gradings, level: int) -> int:
    """Rank of the differential restricted to grading ``level``."""
    cols = _columns_at(complex_, gradings, level)
    return _gf2_rank(cols) if cols else 0


def _rank_into(complex_: GradedComplex, gradings, level: int, divisor: int) -> int:
    """Rank of the differential landing in grading ``level``."""
    src = level + 1
    present = {gradings[g] for g in complex_.order}
    if divisor > 0:
        src %= divisor
    if src not in present:
        return 0
    cols = _columns_at(complex_, gradings, src)
    # Restrict images to the rows of this grading level.
    rows = [i for i, g in enumerate(complex_.order) if gradings[g] == level]
    restricted = [[col[i] for i in rows] for col in cols]
    return _gf2_rank(restricted) if restricted else 0
