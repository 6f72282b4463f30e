"""Weyl group elements as words in simple reflections.

A word ``(j1, j2, ..., jk)`` stands for ``s_j1 s_j2 ... s_jk`` and acts on
vectors right to left: ``s_jk`` is applied first.  The full group is never
materialised; only parabolic longest elements and minimal coset
representatives are.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .rootsys import RootSystem, RootVec, is_negative, pairing, reflect

if TYPE_CHECKING:
    from .grading import ZGrading

WeylWord = tuple[int, ...]


def act(rs: RootSystem, word: WeylWord, v: RootVec) -> RootVec:
    v = tuple(v)
    for j in reversed(word):
        v = reflect(rs, j, v)
    return v


def inverse(word: WeylWord) -> WeylWord:
    return tuple(reversed(word))


def inversion_set(rs: RootSystem, word: WeylWord) -> frozenset[RootVec]:
    """``N(w) = {gamma > 0 : w(gamma) < 0}``, by direct evaluation over all positive roots."""
    return frozenset(g for g in rs.positive_roots if is_negative(act(rs, word, g)))


def length(rs: RootSystem, word: WeylWord) -> int:
    return len(inversion_set(rs, word))


def is_reduced(rs: RootSystem, word: WeylWord) -> bool:
    return len(word) == length(rs, word)


def longest_element(rs: RootSystem, support) -> WeylWord:
    """Reduced word for the longest element of the parabolic subgroup on ``support``."""
    support = sorted(set(support))
    if not support:
        raise ValueError("longest_element needs a nonempty support")
    sup = set(support)
    n = rs.rank
    # 2*rho of the parabolic subsystem
    v = [0] * n
    for g in rs.positive_roots:
        if all(c == 0 or i in sup for i, c in enumerate(g)):
            for i, c in enumerate(g):
                v[i] += c
    v = tuple(v)
    steps: list[int] = []
    while True:
        for j in support:
            if pairing(rs, v, j) > 0:
                v = reflect(rs, j, v)
                steps.append(j)
                break
        else:
            break
    # v_final = s_jk ... s_j1 (2 rho_0)
    return tuple(reversed(steps))


@dataclass(frozen=True)
class CosetRep:
    word: WeylWord
    length: int
    inv_set: frozenset[RootVec]
    point: tuple[int, ...]  # w(h~) in fundamental-coweight coordinates

    def apply(self, rs: RootSystem, v: RootVec) -> RootVec:
        return act(rs, self.word, v)


def coweight_orbit(rs: RootSystem, labels) -> list[tuple[tuple[int, ...], WeylWord]]:
    """W-orbit of a dominant coweight given by its values on the simple roots.

    Breadth-first from the dominant point; each orbit point ``mu`` is reached
    first through a reduced word ``w`` with ``w(lambda) = mu`` and ``len(w)``
    equal to the BFS depth.
    """
    start = tuple(int(x) for x in labels)
    if any(x < 0 for x in start):
        raise ValueError("coweight orbit must start from a dominant coweight")
    n = rs.rank
    a = rs.cartan
    found = {start: ()}
    order = [start]
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        w = found[mu]
        for i in range(n):
            if mu[i] > 0:
                # s_i(mu)(alpha_j) = mu(alpha_j) - mu(alpha_i) <alpha_j, alpha_i^vee>
                nu = tuple(mu[j] - mu[i] * a[i][j] for j in range(n))
                if nu not in found:
                    found[nu] = (i,) + w
                    order.append(nu)
                    queue.append(nu)
    return [(mu, found[mu]) for mu in order]


def coset_reps(rs: RootSystem, grading: ZGrading) -> list[CosetRep]:
    """Minimal-length representatives ``W^0`` of ``W / W(0)`` for a standard grading."""
    marks = grading.marks
    if any(m not in (0, 1) for m in marks):
        raise ValueError(f"coset_reps needs a standard grading (marks in {{0, 1}}), got {marks}")
    return [
        CosetRep(word, len(word), inversion_set(rs, word), mu)
        for mu, word in coweight_orbit(rs, marks)
    ]


def poincare_coefficients(reps) -> list[int]:
    """Coefficients of ``sum_w t^l(w)``."""
    top = max(r.length for r in reps)
    out = [0] * (top + 1)
    for r in reps:
        out[r.length] += 1
    return out
