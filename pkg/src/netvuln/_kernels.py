"""Compiled BFS and Brandes passes over CSR adjacency arrays."""
import numpy as np
from numba import njit


@njit(cache=True)
def bfs_all_pairs(indptr, indices):
    """Hop-distance matrix, -1 where unreachable."""
    n = indptr.size - 1
    dist = np.full((n, n), -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = row[u] + 1
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if row[v] < 0:
                    row[v] = du
                    queue[tail] = v
                    tail += 1
    return dist


@njit(cache=True)
def bfs_profile(indptr, indices):
    """Per source: eccentricity within its component, distance sum, nodes reached."""
    n = indptr.size - 1
    ecc = np.zeros(n, dtype=np.int64)
    total = np.zeros(n, dtype=np.int64)
    reached = np.zeros(n, dtype=np.int64)
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[:] = -1
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        acc = 0
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if dist[v] < 0:
                    dist[v] = du
                    acc += du
                    queue[tail] = v
                    tail += 1
        ecc[s] = dist[queue[tail - 1]]
        total[s] = acc
        reached[s] = tail
    return ecc, total, reached


@njit(cache=True)
def brandes(indptr, indices):
    """Betweenness over ordered pairs (halve for unordered pairs).

    Sources are processed in index order and each source's dependencies are
    added in one pass, so the floating-point sum is reproducible.
    """
    n = indptr.size - 1
    bc = np.zeros(n)
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n)
    delta = np.empty(n)
    order = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[:] = -1
        sigma[:] = 0.0
        delta[:] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            u = order[head]
            head += 1
            du = dist[u] + 1
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if dist[v] < 0:
                    dist[v] = du
                    order[tail] = v
                    tail += 1
                if dist[v] == du:
                    sigma[v] += sigma[u]
        # predecessors of w are the neighbours one level closer to s
        for i in range(tail - 1, 0, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            dw = dist[w] - 1
            for k in range(indptr[w], indptr[w + 1]):
                v = indices[k]
                if dist[v] == dw:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
    return bc
