"""Classify a showcase corpus and print the verdicts with their citations.

Run with:  python demos/02_classification_walkthrough.py
"""

from cmtype import classify, parse_presentation, scroll_ideal, veronese_cone_ideal

TEXT_CASES = [
    ("two lines            xy", "ring: x, y ; ideal: x*y"),
    ("three lines          xy(x+y)", "ring: x, y ; ideal: x^2*y + x*y^2"),
    ("line + double line   xy^2", "ring: x, y ; ideal: x*y^2"),
    ("double line          y^2", "ring: x, y ; ideal: y^2"),
    ("two double lines     x^2y^2", "ring: x, y ; ideal: x^2*y^2"),
    ("smooth quadric cone  rank 4 of 4", "ring: x, y, z, w ; ideal: x^2 + y^2 + z^2 + w^2"),
    ("corank-one quadric   rank 3 of 4", "ring: x, y, z, w ; ideal: x^2 + y^2 + z^2"),
    ("degenerate quadric   rank 2 of 4", "ring: x, y, z, w ; ideal: x^2 + y^2"),
    ("gw ring              (xy, yz, z^2)", "ring: x, y, z ; ideal: x*y, y*z, z^2"),
    ("cyclic minors", "ring: x, y, z ; ideal: x*z - y^2, x^2 - y*z, x*y - z^2"),
    ("four coordinate lines",
     "ring: x, u, v, w ; ideal: u*v, u*w, v*w, u^2 - x*u, v^2 - x*v, w^2 - x*w"),
    ("Gorenstein non-hypersurface", "ring: x, y, z, w ; ideal: x^2 + y^2, z^2 + w^2"),
    ("not Cohen-Macaulay", "ring: x, y ; ideal: x^2, x*y"),
]


def describe(title, report):
    cites = "; ".join(f"{j.citation}" for j in report.justification)
    print(f"{title:36s} -> {report.verdict.value:20s} [{cites}]")


def main() -> None:
    for title, text in TEXT_CASES:
        describe(title, classify(parse_presentation(text)))
    for scroll_type in [(3,), (4,), (1, 2), (2, 2)]:
        describe(f"scroll {scroll_type}", classify(scroll_ideal(scroll_type)))
    for n in (5, 6, 7):
        describe(f"Veronese cone n={n}", classify(veronese_cone_ideal(n)))


if __name__ == "__main__":
    main()
