"""Admissibility depends on where the basepoint sits.

The same pair of curves on the torus gives three corpus entries:
s1s2_g1 (basepoint in the annulus) is weakly and strongly admissible
with an explicit area certificate; s1s2_bad (basepoint in a bigon) has
an all-nonnegative periodic domain and fails weak admissibility;
s1s2_wind (a connected sum of two bad copies) passes the class-level
weak check yet fails the strong one, with a verified witness.
"""

from hfhat import (
    area_certificate,
    build,
    periodic_lattice,
    spinc_partition,
    strong_admissible,
    weak_admissible,
)


def main():
    good = build("s1s2_g1")
    print("s1s2_g1 lattice basis:", periodic_lattice(good).basis)
    print("  weak:", weak_admissible(good).verdict)
    (c,) = spinc_partition(good)
    print("  strong:", strong_admissible(good, c).verdict)
    print("  area certificate:", area_certificate(good, "strong", c))

    bad = build("s1s2_bad")
    report = weak_admissible(bad)
    print("\ns1s2_bad lattice basis:", periodic_lattice(bad).basis)
    print("  weak:", report.verdict, " witness:", report.witness)

    wind = build("s1s2_wind")
    (c,) = spinc_partition(wind)
    report = strong_admissible(wind, c)
    print("\ns1s2_wind grading divisor:", c.divisor)
    print("  class-restricted weak:", weak_admissible(wind, c).verdict)
    print("  strong:", report.verdict, " witness:", report.witness)


if __name__ == "__main__":
    main()
