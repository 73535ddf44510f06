"""ADE Dynkin diagrams and their spectral data.

Vertices are indexed by *position* 0..rank-1 in a fixed display order per
family; the human-facing name of each position is kept in ``vertex_labels``.
For E6 the display order runs along the long path and puts the short branch
vertex last, so positions carry labels (0, 1, 2, 5, 4, 3).  All matrices in
the package are written in this position order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import UnsupportedDiagramError

__all__ = [
    "Family", "DynkinDiagram", "SpectralData",
    "build_diagram", "graph_norm", "perron_frobenius", "q_number",
    "coxeter_exponents", "parse_graph_name", "ascii_diagram", "diagram_json",
]


class Family(Enum):
    A = "A"
    D = "D"
    E = "E"
    # Affine families are reserved names only; build_diagram rejects them.
    AFFINE_A = "A~"
    AFFINE_D = "D~"
    AFFINE_E = "E~"


def _frozen(m):
    a = np.asarray(m, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class DynkinDiagram:
    family: Family
    rank: int
    vertex_labels: tuple
    adjacency: np.ndarray  # rank x rank symmetric 0/1, read-only
    coxeter_number: int

    @property
    def name(self):
        return "%s%d" % (self.family.value, self.rank)

    def neighbors(self, v):
        return tuple(int(w) for w in np.flatnonzero(self.adjacency[v]))

    def label_to_position(self, label):
        return self.vertex_labels.index(str(label))

    def __repr__(self):
        return "DynkinDiagram(%s)" % self.name


@dataclass(frozen=True)
class SpectralData:
    norm: float
    perron_frobenius: np.ndarray
    exponents: tuple


def _path_adjacency(n):
    g = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        g[i, i + 1] = g[i + 1, i] = 1
    return g


def build_diagram(family, rank):
    """Build the diagram for a valid ADE pair.

    ``family`` may be a Family member or one of the strings "A", "D", "E".
    Vertex conventions: A_n is the path 0-1-...-(n-1), marked end first.
    D_n runs 0-...-(n-3) along the tail with both fork vertices attached to
    position n-3 and listed last.  E6/E7/E8 run along the long path through
    the trivalent vertex, short branch vertex last; the marked vertex is the
    far end of the longest branch.  Only E6's order is pinned by the
    frozen reference tables; the D/E7/E8 orders are this package's
    documented choice.
    """
    if isinstance(family, str):
        try:
            family = Family(family)
        except ValueError:
            raise UnsupportedDiagramError("unknown family %r" % (family,))
    if family in (Family.AFFINE_A, Family.AFFINE_D, Family.AFFINE_E):
        raise UnsupportedDiagramError(
            "affine diagrams are reserved but not constructible")
    rank = int(rank)

    if family is Family.A:
        if rank < 1:
            raise UnsupportedDiagramError("A_n needs n >= 1")
        g = _path_adjacency(rank)
        labels = tuple(str(i) for i in range(rank))
        cox = rank + 1
    elif family is Family.D:
        if rank < 4:
            raise UnsupportedDiagramError("D_n needs n >= 4")
        g = _path_adjacency(rank)
        # detach the path end and hang both forks off position rank-3
        g[rank - 2, rank - 1] = g[rank - 1, rank - 2] = 0
        g[rank - 3, rank - 1] = g[rank - 1, rank - 3] = 1
        labels = tuple(str(i) for i in range(rank))
        cox = 2 * rank - 2
    elif family is Family.E:
        if rank not in (6, 7, 8):
            raise UnsupportedDiagramError("E_n needs n in {6, 7, 8}")
        # long path on positions 0..rank-2, branch vertex rank-1 attached
        # to the trivalent position
        trivalent = {6: 2, 7: 3, 8: 4}[rank]
        g = _path_adjacency(rank)
        g[rank - 2, rank - 1] = g[rank - 1, rank - 2] = 0
        g[trivalent, rank - 1] = g[rank - 1, trivalent] = 1
        if rank == 6:
            labels = ("0", "1", "2", "5", "4", "3")
        else:
            labels = tuple(str(i) for i in range(rank))
        cox = {6: 12, 7: 18, 8: 30}[rank]
    else:
        raise UnsupportedDiagramError("unknown family %r" % (family,))

    return DynkinDiagram(family, rank, labels, _frozen(g), cox)


def parse_graph_name(text):
    """Parse strings like "E6" or "A11" into a diagram."""
    text = text.strip()
    if len(text) < 2 or text[0].upper() not in "ADE":
        raise UnsupportedDiagramError("cannot parse graph name %r" % (text,))
    try:
        rank = int(text[1:])
    except ValueError:
        raise UnsupportedDiagramError("cannot parse graph name %r" % (text,))
    return build_diagram(text[0].upper(), rank)


def graph_norm(d):
    """The norm beta = 2 cos(pi / N), N the Coxeter number.

    This closed form equals the largest adjacency eigenvalue; the
    perron_frobenius computation cross-checks the residual.
    """
    return 2.0 * math.cos(math.pi / d.coxeter_number)


def perron_frobenius(d, tol=1e-12, max_iter=100000):
    """Positive eigenvector for the norm, normalized to 1 at position 0.

    Power iteration on g + 1, not g itself: the diagram is bipartite, so
    -beta is also an eigenvalue of g and the unshifted iteration never
    settles.  Started from the all-ones vector (guaranteed overlap with
    the positive eigenvector).  The A1 diagram is the degenerate zero
    matrix.
    """
    if d.rank == 1:
        return np.array([1.0])
    beta = graph_norm(d)
    g = d.adjacency.astype(float)
    shifted = g + np.eye(d.rank)
    v = np.ones(d.rank)
    for _ in range(max_iter):
        w = shifted @ v
        w /= np.linalg.norm(w)
        if np.linalg.norm(w - v) < tol:
            v = w
            break
        v = w
    v = v / v[0]
    residual = np.max(np.abs(g @ v - beta * v))
    if residual > 1e-9:
        raise ArithmeticError(
            "power iteration residual %.3g exceeds 1e-9" % residual)
    return v


def q_number(n, N):
    """The deformed integer [n] = sin(n pi / N) / sin(pi / N)."""
    if N < 2:
        raise ValueError("q_number needs N >= 2")
    return math.sin(n * math.pi / N) / math.sin(math.pi / N)


_E_EXPONENTS = {
    6: (1, 4, 5, 7, 8, 11),
    7: (1, 5, 7, 9, 11, 13, 17),
    8: (1, 7, 11, 13, 17, 19, 23, 29),
}


def coxeter_exponents(d):
    """Exponents m: the adjacency eigenvalues are 2 cos(pi m / N)."""
    if d.family is Family.A:
        return tuple(range(1, d.rank + 1))
    if d.family is Family.D:
        return tuple(range(1, 2 * d.rank - 2, 2)) + (d.rank - 1,)
    return _E_EXPONENTS[d.rank]


def spectral_data(d):
    return SpectralData(graph_norm(d), perron_frobenius(d),
                        coxeter_exponents(d))


def ascii_diagram(d):
    """Plain-text picture of the diagram, labels at their positions."""
    labels = d.vertex_labels
    if d.family is Family.A:
        return " -- ".join(labels)
    # D and E: positions 0..rank-2 form a path, position rank-1 branches off
    branch_at = {Family.D: d.rank - 3,
                 Family.E: {6: 2, 7: 3, 8: 4}[d.rank]}[d.family]
    cells = list(labels[:d.rank - 1])
    sep = " -- "
    line = sep.join(cells)
    col = sum(len(c) + len(sep) for c in cells[:branch_at])
    pad = " " * col
    return "%s%s\n%s|\n%s" % (pad, labels[d.rank - 1], pad, line)


def diagram_json(d):
    return json.dumps({
        "family": d.family.value,
        "rank": d.rank,
        "labels": list(d.vertex_labels),
        "adjacency": d.adjacency.tolist(),
        "coxeter_number": d.coxeter_number,
    }, indent=2)
