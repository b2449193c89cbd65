"""
Seed-averaged attacks on synthetic models
=========================================

A smaller version of the n=500 sweep: three seeds at n=200 so it finishes in
seconds. Raise RUNS and N to get the full picture.
"""

from netvuln import ALL_STRATEGIES, GeneratorSpec, mean_destruction, sweep

RUNS, N = 3, 200

for model in ("ba", "er", "ws"):
    spec = GeneratorSpec.with_average_degree(model, N, 6)
    results = sweep(spec, ALL_STRATEGIES, runs=RUNS)
    means = mean_destruction(results)
    row = "  ".join(f"{code}={f:.3f}" for code, f in means.items())
    print(f"{model}: {row}")

# scale-free graphs fall apart soonest under recalculated attacks;
# initial eccentricity (IC) is the weakest strategy everywhere
