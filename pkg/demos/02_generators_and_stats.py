"""
Synthetic networks and their statistics
=======================================

ER, WS and BA graphs at n=500 with mean degree near 6, reduced to their giant
components, then summarised.
"""

from netvuln import GeneratorSpec, extract_giant, network_stats

# the same (model, n, parameter, seed) always gives the same edges
for model in ("er", "ws", "ba"):
    spec = GeneratorSpec.with_average_degree(model, 500, 6, seed=0)
    g = extract_giant(spec.build())
    s = network_stats(g)
    print(f"{spec.name}: param={spec.param}")
    for key, value in s.to_dict().items():
        print(f"    {key:<28} {value:.4f}" if isinstance(value, float) else f"    {key:<28} {value}")

# the ring lattice behind WS, before any rewiring
lattice = GeneratorSpec("ws", 12, (4, 0.0)).build()
print("lattice clustering:", round(network_stats(lattice).clustering_coefficient, 3))
