"""Summary statistics of a network: size, distances and clustering."""
import math
from dataclasses import asdict, dataclass

from ._kernels import bfs_profile
from .errors import DomainError
from .graph import connected_components


@dataclass(frozen=True)
class NetworkStats:
    node_count: int
    edge_count: int
    ncc: int
    diameter: int
    radius: int
    connected_pair_count: int
    characteristic_path_length: float
    average_degree: float
    clustering_coefficient: float

    def to_dict(self):
        return asdict(self)


def local_clustering(g, v):
    """Fraction of neighbour pairs of ``v`` that are adjacent.

    ``nan`` when ``v`` has fewer than two neighbours.
    """
    nbrs = g.neighbors(v)
    k = len(nbrs)
    if k < 2:
        return math.nan
    links = sum(len(g.neighbors(u) & nbrs) for u in nbrs) // 2
    return 2.0 * links / (k * (k - 1))


def average_clustering(g, count_zeros=True):
    """Mean local clustering.

    With ``count_zeros`` nodes of degree < 2 contribute 0 to the mean (the
    convention that reproduces published tables); otherwise they are left out.
    """
    vals = [local_clustering(g, v) for v in g.nodes]
    if count_zeros:
        vals = [0.0 if math.isnan(c) else c for c in vals]
    else:
        vals = [c for c in vals if not math.isnan(c)]
    return float(sum(vals) / len(vals)) if vals else 0.0


def network_stats(g, count_zeros=True):
    """Statistics of ``g``.

    Path length is averaged over ordered pairs at finite distance. Diameter and
    radius refer to the largest component when ``g`` is disconnected.
    """
    if g.n == 0:
        raise DomainError("statistics of the empty graph are undefined")
    comps = connected_components(g)
    order = sorted(g.nodes)
    ecc, total, reached = bfs_profile(*g.csr(order))
    pairs = int((reached - 1).sum())
    cpl = float(total.sum()) / pairs if pairs else 0.0
    index = {v: i for i, v in enumerate(order)}
    lcc_ecc = ecc[[index[v] for v in comps.largest]]
    return NetworkStats(
        node_count=g.n,
        edge_count=g.m,
        ncc=len(comps),
        diameter=int(lcc_ecc.max()),
        radius=int(lcc_ecc.min()),
        connected_pair_count=pairs,
        characteristic_path_length=cpl,
        average_degree=2.0 * g.m / g.n,
        clustering_coefficient=average_clustering(g, count_zeros),
    )
