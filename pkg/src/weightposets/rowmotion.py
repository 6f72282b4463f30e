"""The reverse operator (rowmotion) on antichains and its orbit statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .grading import WeightPoset
from .poset import FinitePoset


def step(p: FinitePoset, antichain: int) -> int:
    """``max(P \\ I(antichain))``."""
    if not p.is_antichain(antichain):
        raise ValueError("step expects an antichain")
    return _step(p, antichain)


def _step(p: FinitePoset, antichain: int) -> int:
    rest = p.full & ~p.upper_closure(antichain)
    return p.maximal(rest)


def inverse_step(p: FinitePoset, antichain: int) -> int:
    """``min(P \\ I_-(antichain))``."""
    if not p.is_antichain(antichain):
        raise ValueError("inverse_step expects an antichain")
    rest = p.full & ~p.lower_closure(antichain)
    return p.minimal(rest)


@dataclass(frozen=True)
class OrbitStats:
    size: int
    avg_antichain_size: Fraction
    avg_ideal_size: Fraction
    lagrangian_count: int | None = None


@dataclass(frozen=True)
class OrbitReport:
    orbit_sizes: tuple[int, ...]
    order: int
    per_orbit: tuple[OrbitStats, ...]
    orbits: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def num_antichains(self) -> int:
        return sum(self.orbit_sizes)

    def constant_antichain_average(self) -> bool:
        return len({o.avg_antichain_size for o in self.per_orbit}) <= 1

    def constant_ideal_average(self) -> bool:
        return len({o.avg_ideal_size for o in self.per_orbit}) <= 1


def orbits(
    p: FinitePoset,
    lagrangian: Callable[[int], bool] | None = None,
    cap: int | None = None,
) -> OrbitReport:
    """Orbit decomposition of ``AN(P)``; ``lagrangian`` is a predicate on upper ideals."""
    start = p.antichains(cap)
    seen: set[int] = set()
    orbit_list = []
    stats = []
    for a in start:
        if a in seen:
            continue
        orb = []
        x = a
        while x not in seen:
            seen.add(x)
            orb.append(x)
            x = _step(p, x)
        if x != a:
            raise RuntimeError("rowmotion is not a permutation on this input")
        ideals = [p.upper_closure(g) for g in orb]
        n = len(orb)
        lag = None if lagrangian is None else sum(1 for i in ideals if lagrangian(i))
        stats.append(
            OrbitStats(
                n,
                Fraction(sum(g.bit_count() for g in orb), n),
                Fraction(sum(i.bit_count() for i in ideals), n),
                lag,
            )
        )
        orbit_list.append(tuple(orb))
    sizes = tuple(o.size for o in stats)
    order = math.lcm(*sizes) if sizes else 1
    return OrbitReport(sizes, order, tuple(stats), tuple(orbit_list))


def power(p: FinitePoset, antichain: int, k: int) -> int:
    for _ in range(k):
        antichain = _step(p, antichain)
    return antichain


# -- weight posets ------------------------------------------------------------


def star_dual(wp: WeightPoset, ideal: int) -> int:
    """``I* = Delta(1) \\ w0(I)`` for the longest element ``w0`` of ``W(0)``."""
    if not wp.is_upper_ideal(ideal):
        raise ValueError("star_dual expects an upper ideal")
    return wp.full & ~wp.apply_perm(wp.w0_perm, ideal)


def self_dual_count(wp: WeightPoset, cap: int | None = None) -> int:
    return sum(1 for i in wp.upper_ideals(cap) if star_dual(wp, i) == i)


def factorization_check(wp: WeightPoset, cap: int | None = None) -> bool:
    """True iff rowmotion equals ``w0`` composed with the ``*`` involution on every antichain."""
    perm = wp.w0_perm
    for a in wp.antichains(cap):
        star = wp.minimal(star_dual(wp, wp.upper_closure(a)))
        if _step(wp, a) != wp.apply_perm(perm, star):
            return False
    return True


def _require_extra_special(wp: WeightPoset) -> None:
    if not wp.grading.is_extra_special:
        raise ValueError(f"{wp.grading.label()} is not the extra-special grading")


def is_lagrangian(wp: WeightPoset, subset: int, method: str = "definition") -> bool:
    """Half-size subset of Delta(1) with no two members summing to theta.

    ``method="involution"`` uses the equivalent test ``S = Delta(1) \\ (-s_theta(S))``.
    """
    _require_extra_special(wp)
    partner = wp.theta_partner
    if method == "definition":
        if 2 * subset.bit_count() != wp.size:
            return False
        m = subset
        while m:
            low = m & -m
            if subset >> partner[low.bit_length() - 1] & 1:
                return False
            m ^= low
        return True
    if method == "involution":
        return subset == wp.full & ~wp.apply_perm(partner, subset)
    raise ValueError(f"unknown method {method!r}")


def lagrangian_ideals(wp: WeightPoset, cap: int | None = None) -> list[int]:
    out = []
    for i in wp.upper_ideals(cap):
        a = is_lagrangian(wp, i, "definition")
        b = is_lagrangian(wp, i, "involution")
        if a != b:
            raise RuntimeError(f"Lagrangian tests disagree on ideal {i:#x}")
        if a:
            out.append(i)
    return out
