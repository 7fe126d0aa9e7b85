"""Hunting hidden essential sensors in a nominally two-fold redundant array.

The 9-element array below satisfies the double-difference condition: every
lag up to L-1 = 15 has weight at least two. Nominally it should survive any
single interior sensor failure. The exhaustive sweep says otherwise.
"""

from coarray import (
    classify,
    coarray_profile,
    parse_and_normalize,
    single_failure_sweep,
    weight_table,
)
from coarray.robustness import VERDICT_SENTENCES

NINE = [0, 1, 5, 6, 12, 13, 14, 15, 16]


def main():
    arr = parse_and_normalize(NINE)
    report = classify(arr)
    print(f"array: {arr}")
    print(f"verdict: {report.verdict.value}")
    print(f"  {VERDICT_SENTENCES[report.verdict]}")
    print(f"hidden essential sensors: {list(report.hes_positions)}")
    print(
        f"fragility: {len(report.essential_positions)}/{report.n_sensors}"
        f" (a true 2FRA would be 2/{report.n_sensors})"
    )

    print("\nper-sensor failure sweep:")
    for outcome in single_failure_sweep(arr):
        effect = (
            f"holes at {list(outcome.residual_holes)}"
            if outcome.breaks_continuity
            else "coarray intact"
        )
        print(f"  remove {outcome.removed_position:3d} -> {effect}")

    print("\nWhy sensor 6? Lag 6 is generated by the pairs (6,0) and (12,6).")
    print("Both involve the sensor at 6, so its weight-2 coverage is an")
    print("illusion: losing that one sensor removes both generating pairs.")
    faulty = parse_and_normalize([p for p in NINE if p != 6])
    profile = coarray_profile(weight_table(faulty))
    print(f"weight function without 6 has holes at +-{list(profile.holes)}")

    print("\nShifting or flipping the array cannot hide the dependency:")
    flipped = parse_and_normalize([max(NINE) - p for p in NINE])
    flipped_report = classify(flipped)
    print(f"flipped array {flipped} -> HES at {list(flipped_report.hes_positions)}")


if __name__ == "__main__":
    main()
