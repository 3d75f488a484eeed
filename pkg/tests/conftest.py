"""Shared fixtures: corpus access, a brute-force domain oracle, and a
hand-frozen genus-2 diagram whose differential counts rectangles."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from hfhat import (
    ArcRef,
    Domain,
    Generator,
    HeegaardDiagram,
    Region,
    boundary_system,
    maslov_index,
    validate,
)
from hfhat.corpus import build

SMALL_NAMES = [
    "s3_g1",
    "s1s2_g1",
    "s1s2_bad",
    "s1s2_wind",
    "lens(2,1)",
    "lens(3,1)",
    "lens(3,2)",
    "lens(5,2)",
    "gsph(2)",
]

ADMISSIBLE_NAMES = [n for n in SMALL_NAMES if n not in ("s1s2_bad", "s1s2_wind")]


@pytest.fixture(scope="session")
def corpus_small():
    return {name: build(name) for name in SMALL_NAMES}


_GRID_CACHE = {}


def _grid_images(d, cap):
    key = (d, cap)
    if key not in _GRID_CACHE:
        sys_ = boundary_system(d)
        a = np.array(
            [list(r) for r in sys_.l_alpha] + [list(r) for r in sys_.l_beta],
            dtype=np.int64,
        )
        f = len(d.regions)
        grid = np.array(
            list(itertools.product(range(cap + 1), repeat=f)), dtype=np.int64
        )
        _GRID_CACHE[key] = (grid, a @ grid.T)
    return _GRID_CACHE[key]


def brute_force_domains(d, x, y, target_index, nz, cap=3):
    """All domains x -> y with coefficients in 0..cap, given index and n_z.

    Independent oracle: enumerate the full coefficient grid and test the
    boundary equations directly.
    """
    sys_ = boundary_system(d)
    pts = {p: i for i, p in enumerate(sys_.points)}
    cx = np.zeros(len(sys_.points), dtype=np.int64)
    cy = np.zeros(len(sys_.points), dtype=np.int64)
    for p in x.points:
        cx[pts[p]] += 1
    for p in y.points:
        cy[pts[p]] += 1
    rhs = np.concatenate([cy - cx, cx - cy])
    grid, images = _grid_images(d, cap)
    match = np.all(images == rhs[:, None], axis=0)
    out = []
    for vec in grid[match]:
        coeffs = tuple(int(c) for c in vec)
        if coeffs[d.basepoint] != nz:
            continue
        dom = Domain(coeffs, x, y)
        if maslov_index(d, dom) == target_index:
            out.append(dom)
    out.sort(key=lambda dom: dom.coefficients)
    return out


def _a(index, arc, dir):
    return ArcRef("a", index, arc, dir)


def _b(index, arc, dir):
    return ArcRef("b", index, arc, dir)


def rectangle_diagram() -> HeegaardDiagram:
    """Genus-2 diagram: each alpha_i meets each beta_j once (points p_ij).

    Two generators {p00,p11} and {p01,p10} in one class; the two square
    regions off the basepoint are both index-1 rectangles between them,
    so the differential cancels mod 2.
    """
    r0 = Region(0, ((_a(0, 0, 1), _b(1, 0, 1), _a(1, 1, 1), _b(0, 1, 1)),))
    r1 = Region(
        0,
        (
            (_a(0, 0, -1), _b(0, 0, 1), _a(1, 1, -1), _b(1, 1, 1)),
            (_a(0, 1, 1), _b(0, 1, -1), _a(1, 0, 1), _b(1, 0, -1)),
        ),
    )
    r2 = Region(0, ((_a(0, 1, -1), _b(1, 1, -1), _a(1, 0, -1), _b(0, 0, -1)),))
    d = HeegaardDiagram(
        2,
        (("p00", "p01"), ("p10", "p11")),
        (("p00", "p10"), ("p01", "p11")),
        (r0, r1, r2),
        1,
    )
    assert validate(d).ok
    return d


def gen(*points) -> Generator:
    return Generator(tuple(points))
