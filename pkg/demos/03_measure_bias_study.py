#!/usr/bin/env python3
"""Reproduce the measure-bias experiment: which measure ties least?

Runs a seeded batch of random scenarios at the study scale (1000 scenarios,
10 alternatives, 20 criteria, one-decimal grid) and prints the text
histogram plus the tie counts per measure.  The headline result: gamma1
ties rarest, gamma3 ties most, because gamma3 collapses to a function of
the equity total alone.
"""

from fsprank import Measure, SimulationConfig, emit_report, run_simulation


def main() -> None:
    config = SimulationConfig(
        scenarios=1000, n_alternatives=10, n_attributes=20, seed=7
    )
    report = run_simulation(config)
    print(emit_report(report, "histogram").decode())

    t1, t2, t3 = (report.stats_for(m).tie_count for m in Measure)
    print(f"tie counts: G1={t1}  G2={t2}  G3={t3}")
    assert t1 < t2 < t3
    print("G1 < G2 < G3 holds: the equity-weighted ratio discriminates best")

    print()
    print("same seed, same report (bit-identical):",
          run_simulation(config) == report)


if __name__ == "__main__":
    main()
