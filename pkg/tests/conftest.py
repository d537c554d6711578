"""Shared helpers: independent brute-force oracles.

These oracles restate the magic-graph definition with naive loops and
full permutation enumeration.  They deliberately share no code with the
library's verifier or backtracking search so they can arbitrate.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from fuzzymagic.graph import FuzzyGraph


def oracle_is_magic(g: FuzzyGraph) -> bool:
    """Clause-by-clause restatement of the magic-graph definition."""
    if not g.edges:
        return False
    alphas = [g.alpha[v] for v in g.vertices]
    if len(set(alphas)) != len(alphas):
        return False
    betas = [g.beta[e] for e in g.edges]
    if len(set(betas)) != len(betas):
        return False
    for u, v in g.edges:
        if not g.beta[(u, v)] < g.alpha[u] + g.alpha[v]:
            return False
    sums = {g.alpha[u] + g.beta[(u, v)] + g.alpha[v] for u, v in g.edges}
    if len(sums) != 1:
        return False
    return sums.pop() <= 1


def naive_enumerate(structure, K: int, target: int, unit: Fraction):
    """Generate-and-test over every placement of distinct values from
    {1..K} into the vertex and edge slots.  Returns the set of assignment
    vectors (vertices in declaration order, then sorted edges)."""
    if target * unit > 1:
        return set()
    vertices = list(structure.vertices)
    edges = sorted(structure.edges)
    slots = len(vertices) + len(edges)
    found = set()
    for combo in itertools.permutations(range(1, K + 1), slots):
        vval = dict(zip(vertices, combo[: len(vertices)]))
        eval_ = dict(zip(edges, combo[len(vertices):]))
        ok = True
        for u, v in edges:
            e = eval_[(u, v)]
            if vval[u] + e + vval[v] != target or not e < vval[u] + vval[v]:
                ok = False
                break
        if ok:
            found.add(combo)
    return found
