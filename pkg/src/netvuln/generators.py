"""Seeded Erdos-Renyi, Watts-Strogatz and Barabasi-Albert generators.

Randomness comes from numpy's PCG64 bit generator. Each model draws from its
own stream, ``SeedSequence([seed, stream_id])`` with ``stream_id`` 1 for ER,
2 for WS and 3 for BA, so the same seed never couples two models. Output is a
pure function of ``(model, n, parameters, seed)``.
"""
import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidArgumentError
from .graph import Graph, connected_components, from_edges


class Model(enum.Enum):
    ERDOS_RENYI = "er"
    WATTS_STROGATZ = "ws"
    BARABASI_ALBERT = "ba"


_STREAM = {Model.ERDOS_RENYI: 1, Model.WATTS_STROGATZ: 2, Model.BARABASI_ALBERT: 3}

DEFAULT_BETA = 0.1


def make_rng(seed, model):
    """PCG64 generator for ``model``'s stream of ``seed``."""
    if seed < 0:
        raise InvalidArgumentError("seed must be non-negative")
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, _STREAM[Model(model)]])
    return np.random.Generator(np.random.PCG64(ss))


def _check_n(n):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidArgumentError(f"n must be a positive integer, got {n!r}")


def erdos_renyi(n, p, seed=0):
    """G(n, p): every unordered pair is an edge independently with probability ``p``.

    One uniform draw per pair, pairs in lexicographic ``(i, j)``, ``i < j`` order.
    """
    _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError(f"p must lie in [0, 1], got {p}")
    rng = make_rng(seed, Model.ERDOS_RENYI)
    iu, ju = np.triu_indices(n, k=1)
    hit = rng.random(iu.size) < p
    return from_edges(zip(iu[hit].tolist(), ju[hit].tolist()), n_hint=n)


def watts_strogatz(n, k, beta=DEFAULT_BETA, seed=0):
    """Ring lattice of degree ``k`` with each edge's far end rewired with probability ``beta``.

    Lattice edges ``(u, u + j)`` are visited for ``j = 1..k/2`` (outer) and
    ``u = 0..n-1`` (inner). A rewired edge keeps ``u`` and moves its other end
    to a uniform node that is neither ``u`` nor already adjacent to it.
    """
    _check_n(n)
    if k % 2 or not 0 < k < n:
        raise InvalidArgumentError(f"k must be even with 0 < k < n, got k={k}, n={n}")
    if not 0.0 <= beta <= 1.0:
        raise InvalidArgumentError(f"beta must lie in [0, 1], got {beta}")
    rng = make_rng(seed, Model.WATTS_STROGATZ)
    adj = [set() for _ in range(n)]
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            adj[u].add(v)
            adj[v].add(u)
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            if rng.random() >= beta:
                continue
            if v not in adj[u] or len(adj[u]) >= n - 1:
                continue
            while True:
                w = int(rng.integers(n))
                if w != u and w not in adj[u]:
                    break
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
    return Graph._trusted({u: frozenset(nb) for u, nb in enumerate(adj)}, {})


def barabasi_albert(n, m, seed=0):
    """Preferential attachment grown from a complete graph on ``m`` nodes.

    Each new node picks ``m`` distinct targets by repeated degree-proportional
    draws (one integer draw into the degree-weighted endpoint list), discarding
    duplicates. While every existing degree is zero (only when ``m == 1``)
    draws are uniform over existing nodes.
    """
    _check_n(n)
    if not 1 <= m < n:
        raise InvalidArgumentError(f"m must satisfy 1 <= m < n, got m={m}, n={n}")
    rng = make_rng(seed, Model.BARABASI_ALBERT)
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    endpoints = [v for e in edges for v in e]
    for new in range(m, n):
        targets = []
        chosen = set()
        while len(targets) < m:
            if endpoints:
                t = endpoints[int(rng.integers(len(endpoints)))]
            else:
                t = int(rng.integers(new))
            if t not in chosen:
                chosen.add(t)
                targets.append(t)
        for t in targets:
            edges.append((t, new))
            endpoints.extend((t, new))
    return from_edges(edges, n_hint=n)


def extract_giant(g):
    """Largest component as a new graph with dense ids ``0..k-1`` (ascending old id).

    Original labels are kept; unlabeled nodes are labelled with their old id.
    """
    if g.n == 0:
        raise DomainError("cannot extract the giant component of an empty graph")
    lcc = connected_components(g).largest
    sub, _ = g.subgraph(lcc).relabeled()
    return sub


@dataclass(frozen=True)
class GeneratorSpec:
    """A synthetic model with its parameters.

    ``param`` is ``p`` for ER, ``(k, beta)`` for WS and ``m`` for BA.
    """

    model: Model
    n: int
    param: object
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "model", Model(self.model))

    @classmethod
    def with_average_degree(cls, model, n, avg_degree=6, seed=0, beta=DEFAULT_BETA):
        """Parameters giving mean degree ``avg_degree``: p = d/(n-1), k = d, m = d/2."""
        model = Model(model)
        if model is Model.ERDOS_RENYI:
            param = avg_degree / (n - 1)
        elif model is Model.WATTS_STROGATZ:
            param = (int(avg_degree), beta)
        else:
            param = max(1, int(round(avg_degree / 2)))
        return cls(model, n, param, seed)

    def with_seed(self, seed):
        return GeneratorSpec(self.model, self.n, self.param, seed)

    @property
    def name(self):
        return self.model.value

    def build(self):
        if self.model is Model.ERDOS_RENYI:
            return erdos_renyi(self.n, self.param, self.seed)
        if self.model is Model.WATTS_STROGATZ:
            k, beta = self.param
            return watts_strogatz(self.n, k, beta, self.seed)
        return barabasi_albert(self.n, self.param, self.seed)


def generate(spec):
    return spec.build()
