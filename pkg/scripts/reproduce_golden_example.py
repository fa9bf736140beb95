"""Print every invariant of the k = 5 reference oval next to its exact value."""

import math

from hedgehogs import Hedgehog, TrigPoly
from hedgehogs.curvegeom import algebraic_length, oriented_area
from hedgehogs.curvespec import format_value
from hedgehogs.inequality import d_2, d_inf, full_report, symmetral_reference
from hedgehogs.preserving import preserving_oriented_area, preserving_set

PI2 = math.pi**2
O = Hedgehog(
    TrigPoly(137.0, ((2, 21.0, 0.0), (5, 0.0, 1.0), (6, 1.0, 0.0), (9, 0.0, -1 / 3), (10, 0.0, 1 / 3)))
)
K = 5


def main():
    rep = full_report(O, K)
    N = symmetral_reference(O, K)
    rows = [
        ("length", algebraic_length(O), 274 * math.pi),
        ("area", oriented_area(O), 325225 * math.pi / 18),
        ("area of P_5", preserving_oriented_area(preserving_set(O, K)), -35 * math.pi / 2),
        ("Delta_5", rep.slack_thm1, 24604 * PI2 / 9),
        ("d_inf(O, P_5 + D)", d_inf(O, N), 67 / 3),
        ("d_2(O, P_5 + D)", d_2(O, N), math.sqrt(3979 * math.pi) / 3),
        ("stab1", rep.stab1_bound, 179560 * PI2 / (9 * (5 + 2 * math.pi / math.tan(math.pi / 5)))),
        ("stab2", rep.stab2_bound, 7958 * PI2 / 3),
    ]
    print(f"{'quantity':<20} {'computed':>22} {'exact':>22} {'rel. err':>10}  symbolic")
    for name, got, want in rows:
        err = abs(got - want) / abs(want)
        sym = format_value(got).get("symbolic", "")
        print(f"{name:<20} {got:>22.15g} {want:>22.15g} {err:>10.1e}  {sym}")
    print(f"stab1 <= Delta_5: {rep.stab1_bound <= rep.slack_thm1}, stab2 <= Delta_5: {rep.stab2_bound <= rep.slack_thm1}")
    print(f"slack with midpoint term: {rep.slack_thm2:.15g}  ({format_value(rep.slack_thm2).get('symbolic', '')})")


if __name__ == "__main__":
    main()
