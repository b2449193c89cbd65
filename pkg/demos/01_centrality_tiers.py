"""
Centrality tiers on small graphs
================================

Four notions of "center" and how ties turn into removal tiers.
"""

from netvuln import CentralityKind, centrality, centrality_tiers, from_edges

# a path on seven nodes: 0 - 1 - 2 - 3 - 4 - 5 - 6
path = from_edges([(i, i + 1) for i in range(6)])

for kind in CentralityKind:
    scores = centrality(path, kind)
    print(f"{kind.name.lower():>12}:", [round(scores[v], 2) for v in sorted(scores)])

# betweenness counts unordered pairs, so the middle node sits on 9 geodesics
tiers = centrality_tiers(path, CentralityKind.BETWEENNESS)
for score, members in tiers:
    print(f"betweenness {score:g}: {sorted(members)}")

# on a cycle every node looks the same, so there is one tier holding all of them
cycle = from_edges([(i, (i + 1) % 6) for i in range(6)])
print(centrality_tiers(cycle, CentralityKind.REMOTENESS).node_sets)
