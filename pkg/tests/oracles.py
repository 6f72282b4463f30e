"""Brute-force reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from math import prod


def closure_roots(cartan):
    """All roots by repeatedly applying simple reflections.

    Convention: ``cartan[i][j] = <alpha_j, alpha_i^vee>``.
    """
    n = len(cartan)
    start = {tuple(int(i == j) for i in range(n)) for j in range(n)}
    seen = set(start)
    todo = list(start)
    while todo:
        v = todo.pop()
        for j in range(n):
            p = sum(v[i] * cartan[j][i] for i in range(n))  # <v, alpha_j^vee>
            w = tuple(v[k] - (p if k == j else 0) for k in range(n))
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

EXPONENTS = {
    "A3": (1, 2, 3),
    "B3": (1, 3, 5),
    "C4": (1, 3, 5, 7),
    "D4": (1, 3, 3, 5),
    "D5": (1, 3, 4, 5, 7),
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
    "F4": (1, 5, 7, 11),
    "G2": (1, 5),
}

DUAL_COXETER = {"A3": 4, "B3": 5, "C3": 4, "D5": 8, "E6": 12, "E7": 18, "E8": 30, "F4": 9, "G2": 4}


def weyl_order(exponents) -> int:
    return prod(m + 1 for m in exponents)


def weyl_elements_by_length(cartan, support=None):
    """Length generating coefficients of a (parabolic) Weyl group via BFS on a regular orbit."""
    n = len(cartan)
    support = range(n) if support is None else list(support)
    start = tuple(1 for _ in range(n))  # rho in fundamental-weight coordinates
    dist = {start: 0}
    layer = [start]
    while layer:
        nxt = []
        for mu in layer:
            for i in support:
                nu = tuple(mu[j] - mu[i] * cartan[i][j] for j in range(n))
                if nu not in dist:
                    dist[nu] = dist[mu] + 1
                    nxt.append(nu)
        layer = nxt
    out = [0] * (max(dist.values()) + 1)
    for d in dist.values():
        out[d] += 1
    return out


def upper_ideals_bruteforce(size, covers):
    """Every subset closed upward, by checking all 2^size subsets."""
    out = []
    for m in range(1 << size):
        if all(not (m >> x & 1) or m >> y & 1 for x, y in covers):
            out.append(m)
    return out


def comparabilities(size, covers):
    up = {i: set() for i in range(size)}
    for x, y in covers:
        up[x].add(y)
    changed = True
    while changed:
        changed = False
        for i in range(size):
            new = set(up[i])
            for j in up[i]:
                new |= up[j]
            if new != up[i]:
                up[i] = new
                changed = True
    return up


def antichains_bruteforce(size, covers):
    up = comparabilities(size, covers)
    out = []
    for m in range(1 << size):
        els = [i for i in range(size) if m >> i & 1]
        if all(b not in up[a] and a not in up[b] for a, b in itertools.combinations(els, 2)):
            out.append(m)
    return out


def rowmotion_bruteforce(size, covers, antichain):
    """Maximal elements among those not above any member of the antichain."""
    up = comparabilities(size, covers)
    members = [i for i in range(size) if antichain >> i & 1]
    ideal = set(members)
    for a in members:
        ideal |= up[a]
    rest = [i for i in range(size) if i not in ideal]
    return sum(1 << i for i in rest if not any(j in up[i] for j in rest))
