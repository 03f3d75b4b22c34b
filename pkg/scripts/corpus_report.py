"""Print the full angle report for every built-in example pair, with all
three computational routes side by side.

Usage:
    python scripts/corpus_report.py
"""

import math

from grassdist.angles import (AngleRoute, asymmetric_angle, disjointness_angle,
                              supplementation_angle)
from grassdist.corpus import corpus
from grassdist.subspace import principal_angles

ROUTES = [AngleRoute.PRINCIPAL, AngleRoute.GRAM, AngleRoute.EXTERIOR]


def deg(x: float) -> str:
    return f"{math.degrees(x):8.3f}"


def main():
    header = (f"{'pair':<26}{'dims':>8}  {'theta_i (deg)':<20}"
              f"{'Theta':>9}{'Theta rev':>10}{'Upsilon':>9}{'Psi':>9}"
              f"{'route spread':>14}")
    print(header)
    print("-" * len(header))
    for g in corpus():
        spread = 0.0
        for fn in (asymmetric_angle, disjointness_angle, supplementation_angle):
            vals = [fn(g.v, g.w, route) for route in ROUTES]
            spread = max(spread, max(vals) - min(vals))
        theta = ", ".join(f"{math.degrees(t):.1f}"
                          for t in principal_angles(g.v, g.w))
        print(f"{g.name:<26}{g.v.dim}/{g.w.dim}/{g.v.ambient_dim:>2}   "
              f"{theta:<20}"
              f"{deg(asymmetric_angle(g.v, g.w)):>9}"
              f"{deg(asymmetric_angle(g.w, g.v)):>10}"
              f"{deg(disjointness_angle(g.v, g.w)):>9}"
              f"{deg(supplementation_angle(g.v, g.w)):>9}"
              f"{spread:>14.2e}")


if __name__ == "__main__":
    main()
