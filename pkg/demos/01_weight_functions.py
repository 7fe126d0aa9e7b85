"""Weight functions and coarray profiles of familiar sparse arrays.

The weight function w(m) counts the sensor pairs separated by exactly m
grid units. Reading it tells you almost everything about an array's
coarray behavior: zeros inside [-L, L] are holes, and the span of
uninterrupted lags around 0 is the virtual ULA a coarray estimator can use.
"""

from coarray import coarray_profile, parse_and_normalize, weight_table

ARRAYS = {
    "6-element MISC": [0, 1, 2, 6, 10, 13],
    "5-element ULA": [0, 1, 2, 3, 4],
    "sparse with a hole": [0, 1, 4],
    "9-element 2FRA": [0, 1, 5, 6, 12, 13, 14, 15, 16],
}


def describe(name, raw):
    arr = parse_and_normalize(raw)
    wt = weight_table(arr)
    profile = coarray_profile(wt)
    print(f"\n{name}: {arr}")
    print(f"  aperture L = {arr.aperture}, sensors N = {arr.n_sensors}")
    weights = ", ".join(f"w({m})={wt.weight(m)}" for m in range(0, arr.aperture + 1))
    print(f"  positive-side weights: {weights}")
    if profile.hole_free:
        print(f"  coarray is hole-free: all {2 * arr.aperture + 1} lags present")
    else:
        print(f"  coarray has holes at +-{list(profile.holes)}")
    print(f"  central ULA segment: [-{profile.central_ula_bound}, {profile.central_ula_bound}]")


def main():
    for name, raw in ARRAYS.items():
        describe(name, raw)

    print("\nThe MISC array is hole-free, but notice how many of its lags")
    print("have weight exactly 1: each of those depends on a single sensor")
    print("pair, which is why it cannot tolerate any sensor failure.")


if __name__ == "__main__":
    main()
