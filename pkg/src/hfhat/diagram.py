"""Combinatorial pointed Heegaard diagrams.

A diagram is stored with no geometry at all: each curve is the cyclic
sequence of intersection points met along a chosen orientation, and each
elementary region records its genus together with its boundary cycles.
A boundary cycle is an alternating sequence of oriented arc references,
where arc ``k`` of a curve is the segment from its ``k``-th to its
``(k+1)``-th point (cyclically), and regions are traversed with the
region on the left.

From this the module derives the quadrant structure at every point (the
four local cells used by point measures), validates the long list of
consistency invariants a genuine diagram must satisfy, and implements
stabilization and connected sum at the basepoints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Iterable

from .exactla import matrix_rank

ALPHA = "a"
BETA = "b"

# Quadrant slots in cyclic order around a point.  ``in``/``out`` refer
# to the half-edges of the two curves at the point: slot 0 sits between
# the outgoing alpha and outgoing beta half-edges, and the remaining
# slots follow one another around the point.
SLOT_ORDER = (("out", "out"), ("in", "out"), ("in", "in"), ("out", "in"))
_SLOT_OF = {halves: s for s, halves in enumerate(SLOT_ORDER)}


class HFDFormatError(ValueError):
    """Raised when an HFD document is malformed."""


@dataclass(frozen=True)
class ArcRef:
    """Oriented reference to one arc inside a region boundary cycle."""

    curve: str  # "a" or "b"
    index: int  # which curve of that family
    arc: int  # arc k runs from point k to point k+1 of the curve
    dir: int  # +1 along the curve orientation, -1 against it


@dataclass(frozen=True)
class Region:
    genus: int
    cycles: tuple[tuple[ArcRef, ...], ...]

    @property
    def corner_count(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.genus - len(self.cycles)

    @property
    def euler_measure(self) -> Fraction:
        return Fraction(self.euler_char) - Fraction(self.corner_count, 4)


@dataclass(frozen=True)
class HeegaardDiagram:
    genus: int
    alpha: tuple[tuple[str, ...], ...]
    beta: tuple[tuple[str, ...], ...]
    regions: tuple[Region, ...]
    basepoint: int

    @property
    def points(self) -> tuple[str, ...]:
        """All point identifiers in canonical (lexicographic) order."""
        seen = sorted({p for curve in self.alpha for p in curve})
        return tuple(seen)

    def curve(self, family: str, index: int) -> tuple[str, ...]:
        return (self.alpha if family == ALPHA else self.beta)[index]

    def arc_endpoints(self, ref: ArcRef) -> tuple[str, str]:
        """(tail, head) of the underlying arc, ignoring ``ref.dir``."""
        curve = self.curve(ref.curve, ref.index)
        return curve[ref.arc], curve[(ref.arc + 1) % len(curve)]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{name}: {detail}" for name, detail in self.violations)


# ---------------------------------------------------------------------------
# HFD file format.
# ---------------------------------------------------------------------------

_TOP_KEYS = {"genus", "alpha", "beta", "regions", "basepoint_region"}
_REGION_KEYS = {"genus", "boundary"}
_REF_KEYS = {"curve", "index", "arc", "dir"}


def parse_hfd(text: str) -> HeegaardDiagram:
    """Parse an HFD (JSON) document; rejects unknown fields."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HFDFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise HFDFormatError("top level must be an object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise HFDFormatError(f"unknown top-level fields: {sorted(unknown)}")
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise HFDFormatError(f"missing top-level fields: {sorted(missing)}")
    genus = doc["genus"]
    if not isinstance(genus, int) or genus < 1:
        raise HFDFormatError("genus must be an integer >= 1")
    alpha = _parse_curves(doc["alpha"], "alpha")
    beta = _parse_curves(doc["beta"], "beta")
    if not isinstance(doc["regions"], list):
        raise HFDFormatError("regions must be a list")
    regions = tuple(_parse_region(r, i) for i, r in enumerate(doc["regions"]))
    bp = doc["basepoint_region"]
    if not isinstance(bp, int) or not (0 <= bp < len(regions)):
        raise HFDFormatError("basepoint_region out of range")
    return HeegaardDiagram(genus, alpha, beta, regions, bp)


def _parse_curves(raw: object, label: str) -> tuple[tuple[str, ...], ...]:
    if not isinstance(raw, list):
        raise HFDFormatError(f"{label} must be a list of curves")
    out = []
    for i, curve in enumerate(raw):
        if not isinstance(curve, list) or not curve:
            raise HFDFormatError(f"{label}[{i}] must be a nonempty list of point ids")
        for p in curve:
            if not isinstance(p, str):
                raise HFDFormatError(f"{label}[{i}] contains a non-string point id")
        out.append(tuple(curve))
    return tuple(out)


def _parse_region(raw: object, i: int) -> Region:
    if not isinstance(raw, dict):
        raise HFDFormatError(f"regions[{i}] must be an object")
    unknown = set(raw) - _REGION_KEYS
    if unknown:
        raise HFDFormatError(f"regions[{i}] unknown fields: {sorted(unknown)}")
    if set(raw) != _REGION_KEYS:
        raise HFDFormatError(f"regions[{i}] must have fields genus and boundary")
    g = raw["genus"]
    if not isinstance(g, int) or g < 0:
        raise HFDFormatError(f"regions[{i}].genus must be an integer >= 0")
    if not isinstance(raw["boundary"], list):
        raise HFDFormatError(f"regions[{i}].boundary must be a list of cycles")
    cycles = []
    for c, cyc in enumerate(raw["boundary"]):
        if not isinstance(cyc, list) or not cyc:
            raise HFDFormatError(f"regions[{i}].boundary[{c}] must be a nonempty list")
        refs = []
        for ref in cyc:
            if not isinstance(ref, dict) or set(ref) != _REF_KEYS:
                raise HFDFormatError(
                    f"regions[{i}].boundary[{c}] arc refs need fields "
                    f"curve/index/arc/dir"
                )
            if ref["curve"] not in (ALPHA, BETA):
                raise HFDFormatError(f"regions[{i}]: curve must be 'a' or 'b'")
            if ref["dir"] not in (1, -1):
                raise HFDFormatError(f"regions[{i}]: dir must be +1 or -1")
            if not isinstance(ref["index"], int) or not isinstance(ref["arc"], int):
                raise HFDFormatError(f"regions[{i}]: index and arc must be integers")
            refs.append(ArcRef(ref["curve"], ref["index"], ref["arc"], ref["dir"]))
        cycles.append(tuple(refs))
    return Region(g, tuple(cycles))


def serialize_hfd(d: HeegaardDiagram) -> str:
    """Deterministic HFD serialization (byte-stable for equal diagrams)."""
    doc = {
        "genus": d.genus,
        "alpha": [list(c) for c in d.alpha],
        "beta": [list(c) for c in d.beta],
        "regions": [
            {
                "genus": r.genus,
                "boundary": [
                    [
                        {"curve": a.curve, "index": a.index, "arc": a.arc, "dir": a.dir}
                        for a in cyc
                    ]
                    for cyc in r.cycles
                ],
            }
            for r in d.regions
        ],
        "basepoint_region": d.basepoint,
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# Validation.
# ---------------------------------------------------------------------------


def _structural_violations(d: HeegaardDiagram) -> list[tuple[str, str]]:
    """Checks that must pass before any derived structure makes sense."""
    bad: list[tuple[str, str]] = []
    if d.genus < 1:
        bad.append(("genus", f"genus {d.genus} < 1"))
    if len(d.alpha) != d.genus or len(d.beta) != d.genus:
        bad.append(
            (
                "curve_count",
                f"expected {d.genus} curves per family, "
                f"got {len(d.alpha)} alpha / {len(d.beta)} beta",
            )
        )
    if not (0 <= d.basepoint < len(d.regions)):
        bad.append(("basepoint", f"basepoint region {d.basepoint} out of range"))
    for ri, region in enumerate(d.regions):
        if region.genus < 0:
            bad.append(("region_genus", f"region {ri} has negative genus"))
        for ci, cyc in enumerate(region.cycles):
            for t, ref in enumerate(cyc):
                if ref.curve not in (ALPHA, BETA):
                    bad.append(("arc_ref", f"region {ri} cycle {ci}: bad curve tag"))
                    continue
                family = d.alpha if ref.curve == ALPHA else d.beta
                if not (0 <= ref.index < len(family)):
                    bad.append(
                        ("arc_ref", f"region {ri} cycle {ci}: curve index out of range")
                    )
                elif not (0 <= ref.arc < len(family[ref.index])):
                    bad.append(
                        ("arc_ref", f"region {ri} cycle {ci}: arc index out of range")
                    )
                if ref.dir not in (1, -1):
                    bad.append(("arc_ref", f"region {ri} cycle {ci}: dir not +-1"))
            for t, ref in enumerate(cyc):
                nxt = cyc[(t + 1) % len(cyc)]
                if ref.curve == nxt.curve:
                    bad.append(
                        (
                            "alternation",
                            f"region {ri} cycle {ci}: consecutive refs on the "
                            f"same curve family at position {t}",
                        )
                    )
    return bad


def _arrival_point(d: HeegaardDiagram, ref: ArcRef) -> str:
    tail, head = d.arc_endpoints(ref)
    return head if ref.dir == 1 else tail


def _departure_point(d: HeegaardDiagram, ref: ArcRef) -> str:
    tail, head = d.arc_endpoints(ref)
    return tail if ref.dir == 1 else head


def _arrival_half(ref: ArcRef) -> str:
    # Arriving along the orientation uses the head half-edge (pointing
    # into the point); arriving against it uses the tail half-edge.
    return "in" if ref.dir == 1 else "out"


def _departure_half(ref: ArcRef) -> str:
    return "out" if ref.dir == 1 else "in"


@lru_cache(maxsize=None)
def validate(d: HeegaardDiagram) -> ValidationReport:
    """Check every diagram invariant; collects all violations."""
    bad = _structural_violations(d)
    if bad:
        return ValidationReport(tuple(bad))

    # Point membership: each id on exactly one alpha and one beta curve.
    for label, family in ((ALPHA, d.alpha), (BETA, d.beta)):
        counts: dict[str, int] = {}
        for curve in family:
            for p in curve:
                counts[p] = counts.get(p, 0) + 1
        for p, c in sorted(counts.items()):
            if c != 1:
                bad.append(
                    ("point_membership", f"point {p} occurs {c} times on {label} curves")
                )
    apts = {p for curve in d.alpha for p in curve}
    bpts = {p for curve in d.beta for p in curve}
    if apts != bpts:
        bad.append(
            (
                "point_membership",
                f"alpha/beta point sets differ: {sorted(apts ^ bpts)}",
            )
        )
    if bad:
        return ValidationReport(tuple(bad))

    # Arc coverage: every arc referenced exactly twice, once per side.
    usage: dict[tuple[str, int, int], list[int]] = {}
    for region in d.regions:
        for cyc in region.cycles:
            for ref in cyc:
                usage.setdefault((ref.curve, ref.index, ref.arc), []).append(ref.dir)
    for fam, family in ((ALPHA, d.alpha), (BETA, d.beta)):
        for i, curve in enumerate(family):
            for k in range(len(curve)):
                dirs = sorted(usage.get((fam, i, k), []))
                if dirs != [-1, 1]:
                    bad.append(
                        (
                            "arc_coverage",
                            f"arc {fam}{i}[{k}] referenced with dirs {dirs}, "
                            f"expected one +1 and one -1",
                        )
                    )
    extra = set(usage) - {
        (fam, i, k)
        for fam, family in ((ALPHA, d.alpha), (BETA, d.beta))
        for i, curve in enumerate(family)
        for k in range(len(curve))
    }
    for key in sorted(extra):
        bad.append(("arc_coverage", f"reference to nonexistent arc {key}"))

    # Cycle connectivity: consecutive refs share the point where one
    # arrives and the next departs.
    for ri, region in enumerate(d.regions):
        for ci, cyc in enumerate(region.cycles):
            for t, ref in enumerate(cyc):
                nxt = cyc[(t + 1) % len(cyc)]
                if _arrival_point(d, ref) != _departure_point(d, nxt):
                    bad.append(
                        (
                            "cycle_connectivity",
                            f"region {ri} cycle {ci}: ref {t} arrives at "
                            f"{_arrival_point(d, ref)} but ref {(t + 1) % len(cyc)} "
                            f"departs from {_departure_point(d, nxt)}",
                        )
                    )
    if any(name == "cycle_connectivity" for name, _ in bad):
        return ValidationReport(tuple(bad))

    # Corner count and quadrant closure at every point.
    slots = _corner_slots(d)
    for p in d.points:
        incidences = slots.get(p, [])
        if len(incidences) != 4:
            bad.append(
                ("corner_count", f"point {p} has {len(incidences)} corners, expected 4")
            )
            continue
        seen = sorted(slot for slot, _ in incidences)
        if seen != [0, 1, 2, 3]:
            bad.append(
                (
                    "quadrant_closure",
                    f"quadrant closure at point {p}: slots {seen} "
                    f"do not cover all four quadrants",
                )
            )

    # Euler characteristic of the glued surface.
    v = len(d.points)
    e = 2 * v
    chi_sum = sum(r.euler_char for r in d.regions)
    if chi_sum + v - e != 2 - 2 * d.genus:
        bad.append(
            (
                "euler_characteristic",
                f"sum chi + V - E = {chi_sum + v - e}, expected {2 - 2 * d.genus}",
            )
        )
    em = sum((r.euler_measure for r in d.regions), Fraction(0))
    if em != 2 - 2 * d.genus:
        bad.append(
            ("euler_measure", f"sum e(D_i) = {em}, expected {2 - 2 * d.genus}")
        )

    # Homological independence of each curve family (rank g over Q).
    for label, ok in (("alpha", _family_rank_ok(d, ALPHA)), ("beta", _family_rank_ok(d, BETA))):
        if not ok:
            bad.append(
                (
                    "curve_homology_rank",
                    f"{label} curve classes do not have rank {d.genus} in H1",
                )
            )
    return ValidationReport(tuple(bad))


def _corner_slots(d: HeegaardDiagram) -> dict[str, list[tuple[int, int]]]:
    """Corner incidences per point as (slot, region index) pairs."""
    out: dict[str, list[tuple[int, int]]] = {}
    for ri, region in enumerate(d.regions):
        for cyc in region.cycles:
            for t, ref in enumerate(cyc):
                nxt = cyc[(t + 1) % len(cyc)]
                p = _arrival_point(d, ref)
                halves = {ref.curve: _arrival_half(ref), nxt.curve: _departure_half(nxt)}
                slot = _SLOT_OF[(halves[ALPHA], halves[BETA])]
                out.setdefault(p, []).append((slot, ri))
    return out


def _family_rank_ok(d: HeegaardDiagram, family: str) -> bool:
    """Do the family's curve classes span rank g in H1 of the surface?

    Graph classes in H1 of the closed surface form the cycle space of
    the 4-valent graph modulo the region boundary chains; handles
    carried by region genus do not interact with graph classes.
    """
    arc_ids: dict[tuple[str, int, int], int] = {}
    for fam, curves in ((ALPHA, d.alpha), (BETA, d.beta)):
        for i, curve in enumerate(curves):
            for k in range(len(curve)):
                arc_ids[(fam, i, k)] = len(arc_ids)
    n_arcs = len(arc_ids)

    boundary_rows = []
    for region in d.regions:
        row = [0] * n_arcs
        for cyc in region.cycles:
            for ref in cyc:
                row[arc_ids[(ref.curve, ref.index, ref.arc)]] += ref.dir
        boundary_rows.append(row)
    base_rank = matrix_rank(boundary_rows)

    curve_rows = []
    curves = d.alpha if family == ALPHA else d.beta
    for i, curve in enumerate(curves):
        row = [0] * n_arcs
        for k in range(len(curve)):
            row[arc_ids[(family, i, k)]] += 1
        curve_rows.append(row)
    total_rank = matrix_rank(boundary_rows + curve_rows)
    return total_rank - base_rank == d.genus


# ---------------------------------------------------------------------------
# Quadrant structure.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arc:
    curve: str
    index: int
    arc: int
    tail: str
    head: str


@dataclass(frozen=True)
class QuadrantStructure:
    """Derived arcs and the 4-quadrant incidence map at each point."""

    arcs: tuple[Arc, ...]
    corners: dict[str, tuple[int, int, int, int]] = field(hash=False)

    def quadrant_regions(self, p: str) -> tuple[int, int, int, int]:
        """Region index occupying each of the 4 slots at point p."""
        return self.corners[p]

    def point_measure(self, coefficients: Iterable[int], p: str) -> Fraction:
        coeffs = list(coefficients)
        return Fraction(sum(coeffs[r] for r in self.corners[p]), 4)


@lru_cache(maxsize=None)
def quadrants(d: HeegaardDiagram) -> QuadrantStructure:
    """Build the quadrant structure of a valid diagram."""
    report = validate(d)
    if not report.ok:
        raise ValueError(f"quadrants() requires a valid diagram:\n{report}")
    arcs = []
    for fam, curves in ((ALPHA, d.alpha), (BETA, d.beta)):
        for i, curve in enumerate(curves):
            for k in range(len(curve)):
                arcs.append(Arc(fam, i, k, curve[k], curve[(k + 1) % len(curve)]))
    slots = _corner_slots(d)
    corners = {}
    for p, incidences in slots.items():
        by_slot = dict(incidences)
        corners[p] = tuple(by_slot[s] for s in range(4))
    return QuadrantStructure(tuple(arcs), corners)


# ---------------------------------------------------------------------------
# Diagram transforms.
# ---------------------------------------------------------------------------


def _shift_region(region: Region, curve_shift: int) -> Region:
    cycles = tuple(
        tuple(
            ArcRef(ref.curve, ref.index + curve_shift, ref.arc, ref.dir) for ref in cyc
        )
        for cyc in region.cycles
    )
    return Region(region.genus, cycles)


def _relabel(d: HeegaardDiagram, mapping: dict[str, str]) -> HeegaardDiagram:
    ren = lambda c: tuple(mapping.get(p, p) for p in c)
    return HeegaardDiagram(
        d.genus,
        tuple(ren(c) for c in d.alpha),
        tuple(ren(c) for c in d.beta),
        d.regions,
        d.basepoint,
    )


def connected_sum(d1: HeegaardDiagram, d2: HeegaardDiagram) -> HeegaardDiagram:
    """Connected sum at the basepoints.

    The two z-regions are joined by a tube into a single region whose
    genus adds and whose boundary cycles are pooled; the new basepoint
    is the merged region.  Point labels of ``d2`` are prefixed with
    ``r.`` as often as needed to stay disjoint from ``d1``.
    """
    for d in (d1, d2):
        report = validate(d)
        if not report.ok:
            raise ValueError(f"connected_sum() requires valid diagrams:\n{report}")
    taken = set(d1.points)
    pts2 = d2.points
    prefix = ""
    while any((prefix + p) in taken for p in pts2):
        prefix = "r." + prefix
    if prefix:
        d2 = _relabel(d2, {p: prefix + p for p in pts2})

    alpha = d1.alpha + d2.alpha
    beta = d1.beta + d2.beta
    z1 = d1.regions[d1.basepoint]
    z2 = d2.regions[d2.basepoint]
    kept1 = [r for i, r in enumerate(d1.regions) if i != d1.basepoint]
    kept2 = [
        _shift_region(r, d1.genus)
        for i, r in enumerate(d2.regions)
        if i != d2.basepoint
    ]
    z2s = _shift_region(z2, d1.genus)
    merged = Region(z1.genus + z2s.genus, z1.cycles + z2s.cycles)
    regions = tuple(kept1 + kept2 + [merged])
    out = HeegaardDiagram(
        d1.genus + d2.genus, alpha, beta, regions, len(regions) - 1
    )
    report = validate(out)
    assert report.ok, f"connected sum produced an invalid diagram:\n{report}"
    return out


def _torus_piece(point: str) -> HeegaardDiagram:
    """Genus-one diagram with a single intersection point.

    One alpha and one beta circle meeting once on the torus; the
    complement is a single square region with all four corners at the
    point.
    """
    a0 = lambda s: ArcRef(ALPHA, 0, 0, s)
    b0 = lambda s: ArcRef(BETA, 0, 0, s)
    region = Region(0, ((a0(1), b0(1), a0(-1), b0(-1)),))
    return HeegaardDiagram(1, ((point,),), ((point,),), (region,), 0)


def stabilize(d: HeegaardDiagram) -> HeegaardDiagram:
    """Stabilization: connected sum with the standard genus-one piece.

    Adds one curve to each family and one new intersection point; the
    generator set is unchanged up to appending the new point.
    """
    taken = set(d.points)
    label = "c"
    k = 0
    while label in taken:
        k += 1
        label = f"c{k}"
    return connected_sum(d, _torus_piece(label))
