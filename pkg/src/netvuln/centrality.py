"""Degree, eccentricity, remoteness and betweenness, and the central node tiers
derived from them.

Eccentricity and remoteness need a connected graph: attacks always evaluate
them on the current largest component. Betweenness is computed per component.
"""
import enum
from dataclasses import dataclass

from ._kernels import bfs_profile, brandes
from .errors import DomainError

# equal-score tolerance for real-valued (betweenness) tiers
REL_TOL = 1e-9
ABS_TOL = 1e-12


class CentralityKind(enum.Enum):
    DEGREE = "degree"
    ECCENTRICITY = "eccentricity"
    REMOTENESS = "remoteness"
    BETWEENNESS = "betweenness"

    @property
    def higher_is_central(self):
        return self in (CentralityKind.DEGREE, CentralityKind.BETWEENNESS)

    @property
    def letter(self):
        """Letter used in strategy codes: D(egree), C(enter), M(edian), B(etweenness)."""
        return _LETTERS[self]

    @classmethod
    def from_letter(cls, letter):
        for kind, ch in _LETTERS.items():
            if ch == letter.upper():
                return kind
        raise ValueError(f"unknown centrality letter {letter!r}")


_LETTERS = {
    CentralityKind.BETWEENNESS: "B",
    CentralityKind.ECCENTRICITY: "C",
    CentralityKind.DEGREE: "D",
    CentralityKind.REMOTENESS: "M",
}


@dataclass(frozen=True)
class CentralityTiers:
    """Equal-score node groups, most central first.

    ``tiers`` is a list of ``(score, frozenset_of_nodes)``. For betweenness the
    score of a tier is the largest score among its members.
    """

    kind: CentralityKind
    tiers: list

    def __len__(self):
        return len(self.tiers)

    def __iter__(self):
        return iter(self.tiers)

    @property
    def node_sets(self):
        return [nodes for _, nodes in self.tiers]


def degrees(g):
    return {v: len(g.neighbors(v)) for v in g.nodes}


def _profile(g, what):
    order = sorted(g.nodes)
    if not order:
        raise DomainError(f"{what} is undefined on the empty graph")
    ecc, total, reached = bfs_profile(*g.csr(order))
    if reached[0] != len(order):
        raise DomainError(f"{what} requires a connected graph")
    return order, ecc, total


def eccentricities(g):
    order, ecc, _ = _profile(g, "eccentricity")
    return dict(zip(order, ecc.tolist()))


def remoteness(g):
    order, _, total = _profile(g, "remoteness")
    return dict(zip(order, total.tolist()))


def betweenness(g):
    """Unnormalised betweenness over unordered pairs ``{s, t}``, endpoints excluded.

    One Brandes pass per source (BFS path counting, then dependency
    accumulation in reverse BFS order), summed in source order.
    """
    order = sorted(g.nodes)
    if not order:
        return {}
    scores = brandes(*g.csr(order)) / 2.0
    return {v: float(b) for v, b in zip(order, scores)}


_MEASURES = {
    CentralityKind.DEGREE: degrees,
    CentralityKind.ECCENTRICITY: eccentricities,
    CentralityKind.REMOTENESS: remoteness,
    CentralityKind.BETWEENNESS: betweenness,
}


def centrality(g, kind):
    """Score mapping for ``kind``."""
    return _MEASURES[CentralityKind(kind)](g)


def _same_score(a, b):
    return abs(a - b) <= max(ABS_TOL, REL_TOL * max(abs(a), abs(b)))


def tiers_from_scores(scores, kind):
    """Group a score mapping into tiers ordered most-central first."""
    kind = CentralityKind(kind)
    sign = -1 if kind.higher_is_central else 1
    ranked = sorted(scores.items(), key=lambda kv: (sign * kv[1], kv[0]))
    tiers = []
    rep, members = None, []
    for v, s in ranked:
        if rep is not None and (s == rep or (kind is CentralityKind.BETWEENNESS and _same_score(s, rep))):
            members.append(v)
            continue
        if members:
            tiers.append((rep, frozenset(members)))
        rep, members = s, [v]
    if members:
        tiers.append((rep, frozenset(members)))
    return CentralityTiers(kind, tiers)


def centrality_tiers(g, kind):
    if g.n == 0:
        raise DomainError("centrality tiers of the empty graph are undefined")
    return tiers_from_scores(centrality(g, kind), kind)


def central_set(g, kind):
    """All nodes attaining the most central score for ``kind``."""
    return centrality_tiers(g, kind).tiers[0][1]
