"""Concrete path model on an ADE diagram.

Paths of length p are (p+1)-tuples of adjacent vertex positions.  The
annihilation operator C_k contracts a backtracking step at position k with
weight sqrt(D[v_k]/D[v_{k-1}]), where D is the Perron-Frobenius vector;
its adjoint C+_k inserts a backtrack.  The normalized products
e_k = C+_k C_k / beta realize the Temperley-Lieb projectors, and the
essential subspace at length p is the joint kernel of all C_k.

This module is the numeric cross-check for the integer essential-path
counts: it never looks at the recurrence, only at explicit path vectors,
so agreement between the two is a real test.
"""

from __future__ import annotations

import json

import numpy as np

from .diagram import graph_norm, perron_frobenius
from .errors import LengthCapError

__all__ = [
    "DEFAULT_CAP",
    "PathSpace",
    "PathOperator",
    "enumerate_paths",
    "annihilation_operator",
    "creation_operator",
    "jones_projector",
    "essential_subspace",
    "essential_dims",
    "spanning_json",
]

DEFAULT_CAP = 8

_path_cache = {}


def _paths(diagram, length, origin):
    key = (diagram.family, diagram.rank, length, origin)
    if key in _path_cache:
        return _path_cache[key]
    starts = range(diagram.rank) if origin is None else (origin,)
    out = []
    for v0 in starts:
        frontier = [(v0,)]
        for _ in range(length):
            frontier = [p + (w,) for p in frontier for w in diagram.neighbors(p[-1])]
        out.extend(frontier)
    paths = tuple(sorted(out))
    _path_cache[key] = paths
    return paths


def enumerate_paths(diagram, length, origin=None, cap=DEFAULT_CAP):
    """All edge paths of the given length in lexicographic order, as
    tuples of vertex positions."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length > cap:
        raise LengthCapError(
            "length %d exceeds the cap %d (pass cap= to raise it)"
            % (length, cap))
    return list(_paths(diagram, length, origin))


class PathSpace:
    """The span of all paths of one length, optionally from one origin."""

    def __init__(self, diagram, length, origin=None, cap=DEFAULT_CAP):
        self.diagram = diagram
        self.length = length
        self.origin = origin
        self.paths = tuple(enumerate_paths(diagram, length, origin, cap))
        self.index = {p: i for i, p in enumerate(self.paths)}
        self.cap = cap

    @property
    def dim(self):
        return len(self.paths)

    def __repr__(self):
        return "PathSpace(%s, length=%d, origin=%r, dim=%d)" % (
            self.diagram.name, self.length, self.origin, self.dim)


class PathOperator:
    def __init__(self, kind, k, source, target, matrix):
        self.kind = kind
        self.k = k
        self.source = source
        self.target = target
        self.matrix = matrix
        matrix.setflags(write=False)

    def __repr__(self):
        return "PathOperator(%s, k=%d, %d -> %d)" % (
            self.kind, self.k, self.source.length, self.target.length)


def annihilation_operator(space, k):
    """C_k: contract the backtrack v_{k-1}, v_k, v_{k+1} when
    v_{k+1} == v_{k-1}; zero on every other path."""
    p = space.length
    if not 1 <= k <= p - 1:
        raise ValueError("C_%d undefined on paths of length %d" % (k, p))
    d = space.diagram
    target = PathSpace(d, p - 2, space.origin, space.cap)
    pf = perron_frobenius(d)
    m = np.zeros((target.dim, space.dim))
    for j, path in enumerate(space.paths):
        if path[k + 1] != path[k - 1]:
            continue
        short = path[:k] + path[k + 2:]
        m[target.index[short], j] = np.sqrt(pf[path[k]] / pf[path[k - 1]])
    return PathOperator("annihilation", k, space, target, m)


def creation_operator(space, k):
    """C+_k: insert a backtrack through every neighbor of v_{k-1}."""
    p = space.length
    if not 1 <= k <= p + 1:
        raise ValueError("C+_%d undefined on paths of length %d" % (k, p))
    d = space.diagram
    target = PathSpace(d, p + 2, space.origin, max(space.cap, p + 2))
    pf = perron_frobenius(d)
    m = np.zeros((target.dim, space.dim))
    for j, path in enumerate(space.paths):
        anchor = path[k - 1]
        for w in d.neighbors(anchor):
            longer = path[:k] + (w, anchor) + path[k:]
            m[target.index[longer], j] += np.sqrt(pf[w] / pf[anchor])
    return PathOperator("creation", k, space, target, m)


def jones_projector(space, k):
    """e_k = C+_k C_k / beta, an endomorphism of the path space."""
    ann = annihilation_operator(space, k)
    cre = creation_operator(ann.target, k)
    m = cre.matrix @ ann.matrix / graph_norm(space.diagram)
    return PathOperator("jones", k, space, space, m)


def _block_paths(space, a, b):
    return [p for p in space.paths if p[0] == a and p[-1] == b]


def essential_subspace(space, tol=1e-9):
    """Orthonormal bases of the joint kernel of all C_k, one per
    (origin, endpoint) pair: {(a, b): rows-are-basis-vectors array}.
    Coordinates follow the lexicographic order of the block's paths."""
    d = space.diagram
    p = space.length
    pf = perron_frobenius(d)
    origins = range(d.rank) if space.origin is None else (space.origin,)
    out = {}
    for a in origins:
        for b in range(d.rank):
            block = _block_paths(space, a, b)
            if not block:
                continue
            if p < 2:
                out[a, b] = np.eye(len(block))
                continue
            index = {pa: i for i, pa in enumerate(block)}
            stack = []
            for k in range(1, p):
                shorts = {}
                rows = {}
                for j, path in enumerate(block):
                    if path[k + 1] != path[k - 1]:
                        continue
                    short = path[:k] + path[k + 2:]
                    if short not in shorts:
                        shorts[short] = len(shorts)
                        rows[shorts[short]] = np.zeros(len(block))
                    rows[shorts[short]][j] = np.sqrt(pf[path[k]] / pf[path[k - 1]])
                stack.extend(rows.values())
            if not stack:
                out[a, b] = np.eye(len(block))
                continue
            kmat = np.vstack(stack)
            _, sing, vh = np.linalg.svd(kmat)
            rank = int(np.sum(sing > tol))
            out[a, b] = vh[rank:]
    return out


def essential_dims(space, tol=1e-9):
    """Integer matrix dims[a, b] of essential path counts at this
    length, computed purely from the path model."""
    bases = essential_subspace(space, tol)
    r = space.diagram.rank
    dims = np.zeros((r, r), dtype=np.int64)
    for (a, b), basis in bases.items():
        dims[a, b] = basis.shape[0]
    return dims


def spanning_json(space, tol=1e-9):
    bases = essential_subspace(space, tol)
    blocks = []
    for (a, b), basis in sorted(bases.items()):
        blocks.append({
            "origin": a,
            "end": b,
            "dim": int(basis.shape[0]),
            "paths": [list(p) for p in _block_paths(space, a, b)],
            "basis": [[float(x) for x in row] for row in basis],
        })
    return json.dumps({
        "graph": space.diagram.name,
        "length": space.length,
        "blocks": blocks,
    }, indent=2, sort_keys=True)
