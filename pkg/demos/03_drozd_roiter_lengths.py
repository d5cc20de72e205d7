"""Drozd-Roiter lengths for semigroup rings and line arrangements.

The two bounds (multiplicity at most 3, and the length of the closure of m^2
over x*m at most 1) decide finite type for the supported one-dimensional
classes.  Run with:  python demos/03_drozd_roiter_lengths.py
"""

from cmtype import (
    Polynomial,
    arrangement_dr,
    line_arrangement,
    semigroup_closure,
    semigroup_dr,
)

X = Polynomial.variable(2, 0)
Y = Polynomial.variable(2, 1)


def show(label, report):
    print(
        f"{label:28s} e = {report.e}, lambda = {report.lam}, "
        f"dr1 = {report.dr1}, dr2 = {report.dr2} "
        f"=> finite type: {report.finite_type}"
    )


def main() -> None:
    print("numerical semigroup rings k[[t^a : a in S]]")
    for gens in [(2, 3), (3, 7), (3, 4), (4, 5, 6, 7), (2, 5)]:
        sg = semigroup_closure(gens)
        report = semigroup_dr(sg)
        show(f"  <{','.join(map(str, gens))}>  (frob {sg.frobenius})", report)
        if report.witnesses:
            print(f"{'':30s} witnesses t^s for s in {report.witnesses}")

    print()
    print("reduced line arrangements in two variables")
    arrangements = [
        ("x, y", [X, Y]),
        ("x, y, x+y", [X, Y, X + Y]),
        ("y, x, x-y, x+y", [Y, X, X - Y, X + Y]),
    ]
    for label, lines in arrangements:
        report = arrangement_dr(line_arrangement(lines, X + 2 * Y))
        show(f"  {{{label}}}", report)


if __name__ == "__main__":
    main()
