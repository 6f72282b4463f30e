"""Finite reduced irreducible root systems with exact integer data.

Roots are integer coefficient vectors in the basis of simple roots.  Node
numbering follows the Onishchik-Vinberg tables:

* ``A_n, B_n, C_n, F_4, G_2`` agree with Bourbaki (``B_n``: alpha_n short,
  ``C_n``: alpha_n long, ``F_4``: alpha_1, alpha_2 long, ``G_2``: alpha_1
  short).
* ``D_n``: chain alpha_1 .. alpha_{n-2}; alpha_{n-1} and alpha_n attached to
  alpha_{n-2} (same as Bourbaki).
* ``E_n``: chain alpha_1 .. alpha_{n-1}, alpha_n attached to alpha_{n-3}.
  In Bourbaki labels this is

  ====  ===========================================
  E6    1->1, 2->3, 3->4, 4->5, 5->6, 6->2
  E7    1->7, 2->6, 3->5, 4->4, 5->3, 6->1, 7->2
  E8    1->1, 2->3, 3->4, 4->5, 5->6, 6->7, 7->8, 8->2
  ====  ===========================================

  (left: index used here, right: Bourbaki).  With this numbering the highest
  root of E6 is ``(1, 2, 3, 2, 1, 2)``.

Python indices of simple roots are 0-based; ``alpha_1`` is index 0.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

RootVec = tuple[int, ...]

FAMILIES = "ABCDEFG"


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        f, n = self.family, self.rank
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"rank must be a positive integer, got {n!r}")
        if f in "BC" and n < 2:
            raise ValueError(f"{f}{n}: type {f} requires rank >= 2")
        if f == "D" and n < 4:
            raise ValueError(f"D{n}: type D requires rank >= 4")
        if f == "E" and n not in (6, 7, 8):
            raise ValueError(f"E{n}: type E requires rank in {{6, 7, 8}}")
        if f == "F" and n != 4:
            raise ValueError(f"F{n}: type F requires rank 4")
        if f == "G" and n != 2:
            raise ValueError(f"G{n}: type G requires rank 2")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse root system type {text!r} (expected e.g. A3, E7, G2)")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"


def _diagram(stype: SimpleType) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges of the Dynkin diagram and the symmetrizer ``d_i = (a_i, a_i)/2``."""
    f, n = stype.family, stype.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if f == "A":
        return chain, [1] * n
    if f == "B":
        return chain, [2] * (n - 1) + [1]
    if f == "C":
        return chain, [1] * (n - 1) + [2]
    if f == "D":
        edges = [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
        return edges, [1] * n
    if f == "E":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 4, n - 1)]
        return edges, [1] * n
    if f == "F":
        return chain, [2, 2, 1, 1]
    return chain, [1, 3]  # G2


def cartan_matrix(stype: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``a[i][j] = <alpha_j, alpha_i^vee>``."""
    edges, d = _diagram(stype)
    n = stype.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        b = -max(d[i], d[j])  # (alpha_i, alpha_j) in units where (a, a) = 2d
        a[i][j] = b // d[i]
        a[j][i] = b // d[j]
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootSystem:
    stype: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    dsym: tuple[int, ...]
    positive_roots: tuple[RootVec, ...] = field(repr=False)
    theta: RootVec
    h: int
    h_star: int
    exponents: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.stype.rank

    @cached_property
    def roots(self) -> tuple[RootVec, ...]:
        neg = tuple(tuple(-c for c in r) for r in reversed(self.positive_roots))
        return neg + self.positive_roots

    @cached_property
    def root_set(self) -> frozenset[RootVec]:
        return frozenset(self.roots)

    @cached_property
    def positive_index(self) -> dict[RootVec, int]:
        return {r: i for i, r in enumerate(self.positive_roots)}

    @cached_property
    def simple_roots(self) -> tuple[RootVec, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for i in range(n)) for j in range(n))

    def is_root(self, v: RootVec) -> bool:
        return tuple(v) in self.root_set

    def inner(self, u: RootVec, v: RootVec) -> int:
        """W-invariant form normalised so that ``(alpha_i, alpha_i) = 2 d_i``."""
        n = self.rank
        return sum(
            u[i] * v[j] * self.dsym[i] * self.cartan[i][j]
            for i in range(n)
            if u[i]
            for j in range(n)
            if v[j]
        )

    def root_d(self, v: RootVec) -> int:
        """``(v, v) / 2``; equals ``max(dsym)`` exactly on long roots."""
        return self.inner(v, v) // 2

    def is_long(self, v: RootVec) -> bool:
        return self.root_d(v) == max(self.dsym)

    def __str__(self) -> str:
        return str(self.stype)


def height(v: RootVec) -> int:
    return sum(v)


def is_positive(v: RootVec) -> bool:
    return any(v) and all(c >= 0 for c in v)


def is_negative(v: RootVec) -> bool:
    return any(v) and all(c <= 0 for c in v)


def _pairing(cartan, v: RootVec, j: int) -> int:
    row = cartan[j]
    return sum(c * a for c, a in zip(v, row))


def _closure(cartan) -> set[RootVec]:
    n = len(cartan)
    simple = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for j in range(n):
                p = _pairing(cartan, v, j)
                if p == 0:
                    continue
                w = list(v)
                w[j] -= p
                w = tuple(w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def _conjugate(parts: list[int]) -> list[int]:
    if not parts:
        return []
    return [sum(1 for p in parts if p >= j) for j in range(1, max(parts) + 1)]


def from_cartan(stype: SimpleType, cartan, dsym) -> RootSystem:
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    dsym = tuple(int(x) for x in dsym)
    n = len(cartan)
    for i in range(n):
        for j in range(n):
            if dsym[i] * cartan[i][j] != dsym[j] * cartan[j][i]:
                raise ValueError("dsym does not symmetrize the Cartan matrix")
    roots = _closure(cartan)
    pos = sorted((r for r in roots if is_positive(r)), key=lambda r: (height(r), r))
    if 2 * len(pos) != len(roots):
        raise ValueError("root closure is not symmetric under negation")
    top = max(height(r) for r in pos)
    maximal = [r for r in pos if height(r) == top]
    if len(maximal) != 1:
        raise ValueError("no unique highest root")
    theta = maximal[0]
    h = top + 1
    hist = Counter(height(r) for r in pos)
    # exponents: conjugate partition of the height histogram
    exps = tuple(sorted(_conjugate([hist[i] for i in range(1, top + 1)])))
    # dual Coxeter number from the coroot of theta: 1 + height(theta^vee)
    dmax = max(dsym)
    h_star = 1 + sum(c * dsym[i] // dmax for i, c in enumerate(theta))
    return RootSystem(stype, cartan, dsym, tuple(pos), theta, h, h_star, exps)


_CACHE: dict[SimpleType, RootSystem] = {}


def build(stype: SimpleType | str) -> RootSystem:
    """Root system of the given type, with positive roots sorted by (height, coefficients)."""
    if isinstance(stype, str):
        stype = SimpleType.parse(stype)
    rs = _CACHE.get(stype)
    if rs is None:
        _, d = _diagram(stype)
        rs = _CACHE[stype] = from_cartan(stype, cartan_matrix(stype), d)
    return rs


def pairing(rs: RootSystem, v: RootVec, j: int) -> int:
    """``<v, alpha_j^vee>``."""
    return _pairing(rs.cartan, v, j)


def coroot_pairing(rs: RootSystem, gamma: RootVec, mu: RootVec) -> int:
    """``<gamma, mu^vee> = 2 (gamma, mu) / (mu, mu)`` for a root ``mu``."""
    mu = tuple(mu)
    if not rs.is_root(mu):
        raise ValueError(f"{mu} is not a root of {rs}")
    num = 2 * rs.inner(gamma, mu)
    den = rs.inner(mu, mu)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral pairing <{gamma}, {mu}^vee> = {num}/{den}")
    return q


def reflect(rs: RootSystem, j: int, v: RootVec) -> RootVec:
    """Simple reflection ``s_j(v) = v - <v, alpha_j^vee> alpha_j``."""
    p = _pairing(rs.cartan, v, j)
    if p == 0:
        return tuple(v)
    w = list(v)
    w[j] -= p
    return tuple(w)


def reflect_in(rs: RootSystem, mu: RootVec, v: RootVec) -> RootVec:
    """Reflection ``s_mu(v) = v - <v, mu^vee> mu`` in an arbitrary root."""
    p = coroot_pairing(rs, v, mu)
    return tuple(a - p * b for a, b in zip(v, mu))


def long_simple_roots(rs: RootSystem) -> frozenset[int]:
    dmax = max(rs.dsym)
    return frozenset(i for i, d in enumerate(rs.dsym) if d == dmax)


def long_roots(rs: RootSystem) -> tuple[RootVec, ...]:
    return tuple(r for r in rs.roots if rs.is_long(r))


def exponents(rs: RootSystem) -> tuple[int, ...]:
    return rs.exponents


_DUAL_FAMILY = {"B": "C", "C": "B"}


@dataclass(frozen=True)
class DualSystem:
    system: RootSystem
    coroot: dict[RootVec, RootVec] = field(repr=False)


def coroot_coeffs(rs: RootSystem, gamma: RootVec) -> RootVec:
    """Coefficients of ``gamma^vee`` in the basis of simple coroots."""
    dg = rs.root_d(gamma)
    out = []
    for c, d in zip(gamma, rs.dsym):
        q, r = divmod(c * d, dg)
        if r:
            raise ArithmeticError(f"{gamma} is not a root of {rs}")
        out.append(q)
    return tuple(out)


def dual(rs: RootSystem) -> DualSystem:
    """Dual root system (transposed Cartan matrix) and the map gamma -> gamma^vee.

    The numbering is inherited, so for ``F4`` and ``G2`` the dual carries the
    reversed long/short assignment rather than the standard labelling.
    """
    stype = SimpleType(_DUAL_FAMILY.get(rs.stype.family, rs.stype.family), rs.rank)
    n = rs.rank
    cartan_t = tuple(tuple(rs.cartan[j][i] for j in range(n)) for i in range(n))
    dmax = max(rs.dsym)
    dsym = tuple(dmax // d for d in rs.dsym)
    drs = from_cartan(stype, cartan_t, dsym)
    cmap = {r: coroot_coeffs(rs, r) for r in rs.roots}
    return DualSystem(drs, cmap)


def info(rs: RootSystem) -> dict:
    return {
        "type": str(rs.stype),
        "rank": rs.rank,
        "num_positive_roots": len(rs.positive_roots),
        "theta": list(rs.theta),
        "h": rs.h,
        "h_star": rs.h_star,
        "exponents": list(rs.exponents),
        "long_simple": [i + 1 for i in sorted(long_simple_roots(rs))],
    }
