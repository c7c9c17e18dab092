"""Smoke tests for the Python bindings: one pass over each exposed operation."""

import sys
from fractions import Fraction

import tropnorm as tn


def unit_interval():
    return tn.MonoidPair(1, [((-1,), 0), ((1,), 1)])


def check(name, ok):
    status = "ok" if ok else "FAIL"
    print(f"  {name}: {status}")
    return ok


def main():
    all_ok = True
    pair = unit_interval()
    f = tn.TropPoly(1, [((0,), 0), ((1,), 0)])  # 0 v X

    doubled = tn.scale(2, f)
    all_ok &= check("scale expands", doubled == tn.TropPoly(1, [((0,), 0), ((1,), 0), ((2,), 0)]))
    all_ok &= check("join/plus", tn.plus(f, f) == doubled and tn.join(f, f) == f)
    all_ok &= check("eval", tn.eval(doubled, ["1/2"]) == Fraction(1))
    all_ok &= check("eval bottom", tn.eval(tn.TropPoly(1), [Fraction(1, 2)]) is None)

    cf = tn.canonical_form(doubled, pair)
    all_ok &= check("canonical form", cf.terms() == [((2,), Fraction(0))])
    all_ok &= check("pointwise", tn.pointwise_eq(doubled, tn.TropPoly(1, [((0,), 0), ((2,), 0)]), pair))
    all_ok &= check("saturate_coeff", tn.saturate_coeff(doubled, [1], pair) == Fraction(0))
    all_ok &= check("essential slopes", tn.essential_slopes(doubled, pair) == [(2,)])

    all_ok &= check("syntactic", tn.syntactic_eq(tn.plus(tn.TropPoly(1, [((0,), 0), ((2,), 0)]), f),
                                                 tn.scale(3, f), pair) == "yes")
    member = tn.monoid_member([1], -1, pair, bound=8)  # x - 1 <= 0 on [0,1]
    all_ok &= check("monoid member", member["status"] == "yes" and member["witness"]["a"] == [0, 1])
    outside = tn.monoid_member([1], "1/2", pair, bound=8)  # positive at x = 1
    all_ok &= check("monoid non-member", outside["status"] == "no")

    closed = tn.is_integrally_closed(f, pair)
    all_ok &= check("integrally closed", closed["status"] == "yes")
    dep = tn.integral_over(tn.TropPoly(1, [((0,), 0), ((2,), 0)]), doubled, pair)
    all_ok &= check("integral over", dep["n"] == 1)
    g = tn.TropPoly(1, [((1,), "1/3")])
    all_ok &= check("cancels", tn.cancels(f, g, doubled, pair))

    cells = tn.linearity_cells(tn.TropPoly(1, [((-1,), 0), ((1,), 0)]),
                               tn.MonoidPair(1, [((-1,), 1), ((1,), 1)]))
    all_ok &= check("cells", len(cells) == 2 and all(len(c["vertices"]) == 2 for c in cells))

    I = tn.MonomialIdeal(2, [(3, 0), (0, 3)])
    closure = tn.integral_closure(I)
    all_ok &= check("ideal closure", closure.gens() == [(0, 3), (1, 2), (2, 1), (3, 0)])
    all_ok &= check("ideal ops", tn.ideal_power(I, 2) == tn.ideal_product(I, I)
                    and tn.ideal_sum(I, I) == I)
    all_ok &= check("dependence oracle", tn.dependence_oracle((2, 1), I) == 3
                    and tn.dependence_oracle((0, 0), I, m_max=4) is None)
    J = tn.MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])
    all_ok &= check("reduction number", tn.reduction_number(tn.MonomialIdeal(2, [(2, 0), (0, 2)]), J) == 1)

    sat = tn.saturate(2, [(2, 0), (0, 1), (1, 1)], 3)
    all_ok &= check("saturation", not sat["saturated"] and (1, 0) in sat["missing"])

    report = tn.run_proptest("semiring-laws", seed=1, cases=10)
    all_ok &= check("proptest", report["failures"] == [] and report["cases"] == 10)
    all_ok &= check("suites listed", "lp-oracle" in tn.proptest_suites())

    print("smoke:", "all ok" if all_ok else "FAILURES")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
