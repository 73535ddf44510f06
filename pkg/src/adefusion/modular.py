"""Modular data attached to the quantum symmetries.

The level is the Coxeter number N.  S and T act on the N-1 characters
indexed 1..N-1 (stored 0-based): S[m,n] is a normalized sine kernel and T
a diagonal of phases, satisfying S^2 = -1, S^4 = 1, (ST)^3 = 1, with the
order of T computed exactly from the phase fractions.

A toric matrix is attached to every canonical quantum symmetry element
a(x)b as E_a . (E^r_b)^T, the reduced essential matrix keeping only
ambichiral target columns; all single-pair forms of an element must give
the same matrix.  The element 0(x)0 yields the modular invariant, whose
block structure is read off and printed as a sum of |chi+...|^2 terms.
"""

from __future__ import annotations

import json
import math
import warnings
from fractions import Fraction

import numpy as np

from .errors import StructuralError
from .essential import essential_matrices, reduced_essential
from .ocneanu import quantum_symmetry_algebra

__all__ = [
    "ModularRep",
    "verlinde_s",
    "verlinde_t",
    "toric_matrices",
    "modular_invariance_check",
    "partition_function",
    "modular_json",
]


def verlinde_s(level):
    """(N-1) x (N-1) sine kernel, indices 1..N-1 stored 0-based."""
    n = level
    coef = -2j / (math.sqrt(2) * math.sqrt(n))
    m = np.arange(1, n)
    return coef * np.sin(np.pi * np.outer(m, m) / n)


def verlinde_t(level):
    """Diagonal of phases exp(i pi (m^2/2N + 1/4)), m = 1..N-1."""
    n = level
    m = np.arange(1, n)
    return np.diag(np.exp(1j * np.pi * (m * m / (2.0 * n) + 0.25)))


def _t_order(level):
    """Smallest k with T^k = 1, from the exact phase fractions."""
    k = 1
    for m in range(1, level):
        f = Fraction(m * m, 2 * level) + Fraction(1, 4)
        # need k*f an even integer
        g = f / 2
        k = k * g.denominator // math.gcd(k, g.denominator)
    return k


class ModularRep:
    def __init__(self, level):
        self.level = level
        self.s = verlinde_s(level)
        self.t = verlinde_t(level)
        self.t_order = _t_order(level)

    def relation_deviations(self):
        """Max deviations of S^2 = -1, S^4 = 1, (ST)^3 = 1, T^order = 1."""
        eye = np.eye(self.level - 1)
        s2 = self.s @ self.s
        st = self.s @ self.t
        tk = np.diag(np.diag(self.t) ** self.t_order)
        return {
            "s2": float(np.abs(s2 + eye).max()),
            "s4": float(np.abs(s2 @ s2 - eye).max()),
            "st3": float(np.abs(st @ st @ st - eye).max()),
            "t_order": float(np.abs(tk - eye).max()),
        }

    def __repr__(self):
        return "ModularRep(level=%d)" % self.level


def toric_matrices(graph):
    """One (N-1) x (N-1) integer matrix per canonical element, each
    checked to be independent of the representative pair."""
    qs = quantum_symmetry_algebra(graph)
    ess = essential_matrices(qs.algebra)
    red = reduced_essential(ess)
    mats = []
    for x, pairs in enumerate(qs._unit_hits()):
        cand = [ess.e[a] @ red[b].T for a, b in pairs]
        for other in cand[1:]:
            if not np.array_equal(cand[0], other):
                raise StructuralError(
                    "toric matrix of element %d depends on the pair" % x)
        mats.append(cand[0])
    return mats


def _invariant_index(qs):
    v = qs.nf[0, 0]
    live = np.nonzero(v)[0]
    if len(live) != 1 or v[live[0]] != 1:
        raise StructuralError("0(x)0 is not a canonical basis element")
    return int(live[0])


def modular_invariance_check(graph, element=None, tol=1e-9):
    """Deviation of [W, S] and [W, T] for one toric matrix (default the
    invariant element 0(x)0)."""
    qs = quantum_symmetry_algebra(graph)
    if element is None:
        element = _invariant_index(qs)
    w = toric_matrices(graph)[element]
    rep = ModularRep(qs.diagram.coxeter_number)
    ds = float(np.abs(w @ rep.s - rep.s @ w).max())
    dt = float(np.abs(w @ rep.t - rep.t @ w).max())
    return {
        "element": element,
        "name": qs.element_names[element],
        "s_deviation": ds,
        "t_deviation": dt,
        "invariant": bool(ds < tol and dt < tol),
    }


def _blocks_of(w):
    """Partition of the character indices under the 0/1 block pattern of
    w, or None if w has no such structure."""
    n = w.shape[0]
    if np.any((w != 0) & (w != 1)) or not np.array_equal(w, w.T):
        return None
    live = [m for m in range(n) if w[m, m] == 1]
    seen = set()
    blocks = []
    for m in live:
        if m in seen:
            continue
        members = tuple(int(x) for x in np.nonzero(w[m])[0])
        blocks.append(members)
        seen.update(members)
    # every nonzero entry must come from exactly these diagonal blocks
    rebuilt = np.zeros_like(w)
    for members in blocks:
        for i in members:
            for j in members:
                rebuilt[i, j] = 1
    if not np.array_equal(rebuilt, w):
        return None
    return blocks


def partition_function(graph):
    """The modular invariant as a sum of squared character blocks,
    e.g. |chi1+chi7|^2 + ... printed with 1-based character indices."""
    qs = quantum_symmetry_algebra(graph)
    w = toric_matrices(graph)[_invariant_index(qs)]
    blocks = _blocks_of(w)
    if blocks is None:
        warnings.warn("modular invariant of %s is not block diagonal"
                      % qs.diagram.name)
        terms = []
        for m, n in zip(*np.nonzero(w)):
            coef = "" if w[m, n] == 1 else "%d" % w[m, n]
            terms.append("%sχ%dχ̄%d" % (coef, m + 1, n + 1))
        return "+".join(terms)
    parts = []
    for members in sorted(blocks):
        inner = "+".join("χ%d" % (m + 1) for m in members)
        parts.append("|%s|²" % inner)
    return "+".join(parts)


def modular_json(graph):
    qs = quantum_symmetry_algebra(graph)
    rep = ModularRep(qs.diagram.coxeter_number)
    return json.dumps({
        "graph": qs.diagram.name,
        "level": qs.diagram.coxeter_number,
        "t_order": rep.t_order,
        "names": list(qs.element_names),
        "toric": [m.tolist() for m in toric_matrices(graph)],
        "partition_function": partition_function(graph),
        "invariance": modular_invariance_check(graph),
    }, indent=2, sort_keys=True)
