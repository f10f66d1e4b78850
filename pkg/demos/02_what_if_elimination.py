#!/usr/bin/env python3
"""Model incomplete information: eliminate criteria and watch the ranking move.

When a committee cannot agree on a criterion, or no data exists for it, the
whole column is dropped.  This script removes each attribute of the bundled
fixture in turn and reports how the top pick and the rank order react.
"""

from pathlib import Path

from fsprank import Measure, parse_assessment, rank, restrict_attributes

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "example.csv"


def order(table) -> tuple[str, ...]:
    return tuple(r.alternative for r in table.rows)


def main() -> None:
    fss = parse_assessment(FIXTURE.read_bytes(), "csv")
    baseline = rank(fss, Measure.G1)
    print("baseline order:", " > ".join(order(baseline)))
    print()

    for attribute in fss.attributes:
        keep = [e for e in fss.attributes if e != attribute]
        reduced = rank(restrict_attributes(fss, keep), Measure.G1)
        marker = "  <- order changes" if order(reduced) != order(baseline) else ""
        print(f"without {attribute}: {' > '.join(order(reduced))}{marker}")

    print()
    print("single-criterion view (only the first attribute kept):")
    solo = rank(restrict_attributes(fss, {fss.attributes[0]}), Measure.G1)
    for row in solo.rows:
        print(f"  {row.rank}. {row.alternative}  (tie group {row.tie_group})")
    print("ties are explicit: equal grades cannot be separated by one criterion")


if __name__ == "__main__":
    main()
