#!/usr/bin/env python3
"""Walk through the full ranking pipeline on the bundled 5x10 assessment.

Loads the CSV fixture, shows a pairwise comparison, the cumulative
domination/subjection/equity totals, and the decision table under each of
the three measures.
"""

from pathlib import Path

from fsprank import (
    Measure,
    compare,
    cumulative_scores,
    parse_assessment,
    rank,
)
from fsprank.io import format_fraction, fraction_ratio

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "example.csv"


def main() -> None:
    fss = parse_assessment(FIXTURE.read_bytes(), "csv")
    print(f"loaded {fss.n_alternatives} alternatives x {fss.n_attributes} attributes")
    print("alternatives:", ", ".join(fss.alternatives))
    print()

    a, b = fss.alternatives[0], fss.alternatives[1]
    cell = compare(fss, a, b)
    print(f"pairwise {a} vs {b}:")
    print(f"  dominates on : {sorted(cell.rho, key=fss.attributes.index)}")
    print(f"  subjected on : {sorted(cell.chi, key=fss.attributes.index)}")
    print(f"  exact ties   : {sorted(cell.eq, key=fss.attributes.index)}")
    print()

    print("cumulative totals (dom, sub, equity):")
    for s in cumulative_scores(fss):
        print(f"  {s.alternative}: ({s.dom}, {s.sub}, {s.equity})")
    print()

    for measure in Measure:
        table = rank(fss, measure)
        print(f"ranking by {measure.value}:")
        for row in table.rows:
            value = row.value(measure)
            shown = value if measure is Measure.G2 else (
                f"{format_fraction(value)} ({fraction_ratio(value)})"
            )
            print(f"  {row.rank}. {row.alternative}  {shown}")
        print()


if __name__ == "__main__":
    main()
