"""Undirected simple graphs, node removal and connected components.

Node identifiers are integers. Graphs built by the readers and generators use
dense ids ``0..n-1``; after :func:`remove_nodes` the surviving ids are kept as
they are, so traces can refer to nodes of the original network.
"""
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ._kernels import bfs_all_pairs
from .errors import InvalidArgumentError


class Graph:
    """Immutable undirected simple graph.

    Parameters
    ----------
    adjacency : mapping of node -> iterable of neighbours
        Must be symmetric and free of self-loops; use :func:`from_edges` when
        building from raw, possibly dirty, edge data.
    labels : mapping of node -> str, optional
        Display names carried over from ingested files.
    dropped : int
        Number of input edges discarded at construction (self-loops and
        duplicates).
    """

    __slots__ = ("_adj", "labels", "dropped", "_m")

    def __init__(self, adjacency=None, labels=None, dropped=0):
        adj = {}
        for u, nbrs in (adjacency or {}).items():
            adj[u] = frozenset(nbrs)
        for u, nbrs in adj.items():
            for v in nbrs:
                if v == u:
                    raise InvalidArgumentError(f"self-loop on node {u}")
                if v not in adj or u not in adj[v]:
                    raise InvalidArgumentError(f"adjacency is not symmetric for edge ({u}, {v})")
        self._adj = adj
        self.labels = dict(labels) if labels else {}
        self.dropped = dropped
        self._m = sum(len(nbrs) for nbrs in adj.values()) // 2

    @classmethod
    def _trusted(cls, adj, labels, dropped=0):
        g = cls.__new__(cls)
        g._adj = adj
        g.labels = labels
        g.dropped = dropped
        g._m = sum(len(nbrs) for nbrs in adj.values()) // 2
        return g

    @property
    def nodes(self):
        return self._adj.keys()

    @property
    def n(self):
        return len(self._adj)

    @property
    def m(self):
        return self._m

    def __len__(self):
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self):
        return iter(self._adj)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash(frozenset(self.edges())) ^ hash(frozenset(self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v):
        try:
            return self._adj[v]
        except KeyError:
            raise InvalidArgumentError(f"node {v!r} not in graph") from None

    def degree(self, v):
        return len(self.neighbors(v))

    def edges(self):
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    def label(self, v):
        return self.labels.get(v, str(v))

    def subgraph(self, keep):
        """Induced subgraph on ``keep`` (node ids and labels preserved)."""
        keep = set(keep)
        missing = keep - self._adj.keys()
        if missing:
            raise InvalidArgumentError(f"nodes not in graph: {sorted(missing)[:5]}")
        adj = {u: self._adj[u] & keep for u in self._adj if u in keep}
        labels = {u: s for u, s in self.labels.items() if u in keep}
        return Graph._trusted(adj, labels)

    def relabeled(self):
        """Copy with nodes renumbered ``0..n-1`` in ascending id order.

        Returns the new graph and the list mapping new id -> old id. Labels
        follow their nodes; unlabeled nodes get their old id as label.
        """
        order = sorted(self._adj)
        index = {v: i for i, v in enumerate(order)}
        adj = {index[u]: frozenset(index[v] for v in self._adj[u]) for u in order}
        labels = {index[u]: self.label(u) for u in order}
        return Graph._trusted(adj, labels), order

    def csr(self, order=None):
        """``(indptr, indices)`` int64 arrays with rows in ``order`` (default: sorted ids)."""
        if order is None:
            order = sorted(self._adj)
        index = {v: i for i, v in enumerate(order)}
        indptr = np.zeros(len(order) + 1, dtype=np.int64)
        flat = []
        for i, u in enumerate(order):
            nbrs = sorted(index[v] for v in self._adj[u])
            flat.extend(nbrs)
            indptr[i + 1] = indptr[i] + len(nbrs)
        return indptr, np.asarray(flat, dtype=np.int64)


def from_edges(edges, n_hint=None, nodes=None, labels=None):
    """Build a simple undirected graph from ``(u, v)`` pairs.

    Self-loops and repeated edges (in either orientation) are dropped and
    counted in ``Graph.dropped``. Nodes are the edge endpoints plus
    ``range(n_hint)`` plus ``nodes``; a self-loop alone does not declare its
    endpoint.
    """
    adj = {}
    if n_hint is not None:
        if n_hint < 0:
            raise InvalidArgumentError("n_hint must be non-negative")
        for v in range(n_hint):
            adj[v] = set()
    for v in nodes or ():
        adj.setdefault(v, set())
    dropped = 0
    for u, v in edges:
        if u == v:
            dropped += 1
            continue
        nu = adj.setdefault(u, set())
        if v in nu:
            dropped += 1
            continue
        nu.add(v)
        adj.setdefault(v, set()).add(u)
    frozen = {u: frozenset(nbrs) for u, nbrs in adj.items()}
    return Graph._trusted(frozen, dict(labels or {}), dropped)


def remove_nodes(g, victims):
    """Return a new graph without ``victims`` and their incident edges."""
    victims = set(victims)
    if not victims:
        return g
    missing = [v for v in victims if v not in g]
    if missing:
        raise InvalidArgumentError(f"cannot remove nodes not in graph: {sorted(missing)[:5]}")
    adj = {}
    for u, nbrs in g._adj.items():
        if u in victims:
            continue
        adj[u] = nbrs - victims if not nbrs.isdisjoint(victims) else nbrs
    labels = {u: s for u, s in g.labels.items() if u not in victims}
    return Graph._trusted(adj, labels)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components, largest first (ties: smallest minimum node id)."""

    components: list = field(default_factory=list)

    @property
    def largest(self):
        return self.components[0] if self.components else frozenset()

    @property
    def sizes(self):
        return [len(c) for c in self.components]

    def __len__(self):
        return len(self.components)


def connected_components(g):
    seen = set()
    comps = []
    for s in g.nodes:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g._adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(c)))
    return ComponentPartition(comps)


def largest_connected_component(g):
    """Node set and size of the largest component; ``(frozenset(), 0)`` when empty."""
    lcc = connected_components(g).largest
    return lcc, len(lcc)


def is_connected(g):
    return g.n > 0 and len(connected_components(g)) == 1


def bfs_distances(g, source):
    """Hop distances from ``source`` to every node of its component."""
    if source not in g:
        raise InvalidArgumentError(f"unknown source node {source!r}")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g._adj[u]:
            if v not in dist:
                dist[v] = du
                queue.append(v)
    return dist


def distance_matrix(g, order=None):
    """All-pairs hop distances as a float array (``inf`` where unreachable).

    Returns ``(order, D)`` with ``D[i, j] = d(order[i], order[j])``.
    """
    if order is None:
        order = sorted(g.nodes)
    if not order:
        return order, np.zeros((0, 0))
    dist = bfs_all_pairs(*g.csr(order))
    D = dist.astype(float)
    D[dist < 0] = np.inf
    return order, D
