#!/usr/bin/env python3
"""Double cones under the standard Laplacian: complement closure, the
order-mod-4 characterization, and the connected-cone negative result.
"""

import math

from lapwalk import (
    complement,
    complement_closure_check,
    complete,
    connected_double_cone_refutation,
    disjoint_union,
    double_cone_characterization,
    empty,
    join_necessary_condition,
    standard_laplacian,
    verify_pst,
)


def main():
    # Complement closure: K2 plus six isolated vertices transfers at pi/2
    # (only the edge does anything), and 8 * pi/2 = 4pi is a multiple of
    # 2pi, so the complement transfers too. That complement is exactly the
    # double cone over K6.
    g = disjoint_union(complete(2), empty(6))
    t = math.pi / 2
    condition, deviation = complement_closure_check(g, t)
    print(f"closure condition nt in 2piZ: {condition}, identity deviation {deviation:.2e}")
    before = verify_pst(standard_laplacian(g), (0, 1), t)
    after = verify_pst(standard_laplacian(complement(g)), (0, 1), t)
    print(f"K2 + isolated vertices at pi/2: {before.magnitude:.9f}")
    print(f"its complement (double cone over K6):  {after.magnitude:.9f}")

    # A necessary condition for transfer inside any join: t(m+n) in 2piZ.
    print("\njoin necessary condition at t=pi/2:")
    for n in (2, 4, 6):
        print(f"  |H| = {n}: {join_necessary_condition(2, n, t)}")

    # The full characterization: the double cone over any base of order n
    # transfers iff n = 2 (mod 4), independent of which base is used.
    print("\ndouble-cone characterization (search up to t=50):")
    for res in double_cone_characterization(range(1, 11)):
        best = max(w[1] for w in res.witnesses)
        note = "transfer at pi/2" if res.has_pst else f"best magnitude {best:.6f}"
        print(f"  n = {res.n:2d}  (n mod 4 = {res.n % 4}): {note}")

    # Making the two apexes adjacent kills the effect entirely.
    print("\nconnected double cones K2 + G (apexes adjacent), scan to t=50:")
    for label, base in [("K2", complete(2)), ("2 isolated", empty(2))]:
        mag = connected_double_cone_refutation(base)
        print(f"  base {label}: max apex-pair magnitude {mag:.6f}")


if __name__ == "__main__":
    main()
