"""Finite graded posets: ideals, antichains, generating polynomials.

Subsets of a poset are Python ints used as bit-sets: bit ``i`` is element
``i``.  Covers are pairs ``(x, y)`` meaning ``y`` covers ``x``.
"""

from __future__ import annotations

import itertools
import json
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .polynomial import IntPoly, one_minus_t_pow, product, q_pochhammer
from .rootsys import RootSystem, height

DEFAULT_CAP = 10**7
WIDTH_LIMIT = 512


class EnumerationCapExceeded(RuntimeError):
    pass


def default_cap() -> int:
    env = os.environ.get("WEIGHTPOSETS_IDEAL_CAP")
    return int(env) if env else DEFAULT_CAP


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class FinitePoset:
    """Immutable finite graded poset on ``range(size)``."""

    def __init__(self, size: int, covers, rank: Sequence[int], labels: Sequence | None = None):
        if size < 0:
            raise ValueError("size must be nonnegative")
        if size > WIDTH_LIMIT:
            raise ValueError(f"poset of size {size} exceeds the bit-set width limit {WIDTH_LIMIT}")
        if len(rank) != size:
            raise ValueError("rank must give one value per element")
        covers = tuple(sorted({(int(x), int(y)) for x, y in covers}))
        up = [0] * size
        down = [0] * size
        for x, y in covers:
            if not (0 <= x < size and 0 <= y < size) or x == y:
                raise ValueError(f"bad cover pair ({x}, {y})")
            if rank[y] != rank[x] + 1:
                raise ValueError(f"cover ({x}, {y}) does not raise the rank by one")
            up[x] |= 1 << y
            down[y] |= 1 << x
        self.size = size
        self.covers = covers
        self.rank = tuple(int(r) for r in rank)
        self.labels = tuple(labels) if labels is not None else None
        self.up_covers = tuple(up)
        self.down_covers = tuple(down)
        self.full = (1 << size) - 1
        # elements in decreasing rank: every upper cover precedes its lower element
        self.top_down = tuple(sorted(range(size), key=lambda i: (-self.rank[i], i)))
        upc = [0] * size
        for x in self.top_down:
            m = 1 << x
            for y in bits(up[x]):
                m |= upc[y]
            upc[x] = m
        downc = [0] * size
        for x in reversed(self.top_down):
            m = 1 << x
            for y in bits(down[x]):
                m |= downc[y]
            downc[x] = m
        self.up_closure = tuple(upc)
        self.down_closure = tuple(downc)
        self._ideals: list[int] | None = None

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={self.size}, covers={len(self.covers)})"

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up_closure[x] >> y & 1)

    def members(self, mask: int) -> list[int]:
        return list(bits(mask))

    def mask(self, elems) -> int:
        m = 0
        for e in elems:
            m |= 1 << e
        return m

    # -- subsets ---------------------------------------------------------

    def is_upper_ideal(self, mask: int) -> bool:
        return all(self.up_covers[x] & ~mask == 0 for x in bits(mask))

    def is_lower_ideal(self, mask: int) -> bool:
        return all(self.down_covers[x] & ~mask == 0 for x in bits(mask))

    def is_antichain(self, mask: int) -> bool:
        return all((self.up_closure[x] | self.down_closure[x]) & mask == 1 << x for x in bits(mask))

    def minimal(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            if self.down_closure[x] & mask == 1 << x:
                out |= 1 << x
        return out

    def maximal(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            if self.up_closure[x] & mask == 1 << x:
                out |= 1 << x
        return out

    def upper_closure(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= self.up_closure[x]
        return out

    def lower_closure(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= self.down_closure[x]
        return out

    # -- levels and components --------------------------------------------

    def levels(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, r in enumerate(self.rank):
            out[r] = out.get(r, 0) | 1 << i
        return dict(sorted(out.items()))

    def level_sizes(self) -> list[int]:
        if not self.size:
            return []
        c = Counter(self.rank)
        return [c[r] for r in range(min(c), max(c) + 1)]

    def components(self) -> list[int]:
        """Connected components of the Hasse diagram, as masks, ordered by least element."""
        seen = 0
        out = []
        for s in range(self.size):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for x in bits(frontier):
                    nxt |= self.up_covers[x] | self.down_covers[x]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(comp)
        return out

    def subposet(self, mask: int) -> FinitePoset:
        idx = list(bits(mask))
        pos = {x: i for i, x in enumerate(idx)}
        covers = [(pos[x], pos[y]) for x, y in self.covers if x in pos and y in pos]
        labels = [self.labels[x] for x in idx] if self.labels else None
        return FinitePoset(len(idx), covers, [self.rank[x] for x in idx], labels)

    # -- enumeration ------------------------------------------------------

    def iter_upper_ideals(self, cap: int | None = None) -> Iterator[int]:
        """Every upper ideal exactly once, by include/exclude over a reverse linear extension."""
        cap = default_cap() if cap is None else cap
        order = self.top_down
        n = self.size
        upc = self.up_covers
        count = 0
        stack = [(0, 0)]
        while stack:
            pos, mask = stack.pop()
            if pos == n:
                count += 1
                if count > cap:
                    raise EnumerationCapExceeded(
                        f"more than {cap} upper ideals in a poset of size {n}"
                    )
                yield mask
                continue
            x = order[pos]
            stack.append((pos + 1, mask))
            if upc[x] & ~mask == 0:
                stack.append((pos + 1, mask | 1 << x))

    def upper_ideals(self, cap: int | None = None) -> list[int]:
        if self._ideals is None:
            ideals = list(self.iter_upper_ideals(cap))
            ideals.sort(key=lambda m: (m.bit_count(), m))
            self._ideals = ideals
        return self._ideals

    def antichains(self, cap: int | None = None) -> list[int]:
        return [self.minimal(i) for i in self.upper_ideals(cap)]


def upper_ideals(p: FinitePoset, cap: int | None = None) -> list[int]:
    return p.upper_ideals(cap)


def antichain_of_ideal(p: FinitePoset, ideal: int) -> int:
    if not p.is_upper_ideal(ideal):
        raise ValueError("not an upper ideal")
    return p.minimal(ideal)


def ideal_of_antichain(p: FinitePoset, antichain: int) -> int:
    if not p.is_antichain(antichain):
        raise ValueError("not an antichain")
    return p.upper_closure(antichain)


def lower_ideal_of_antichain(p: FinitePoset, antichain: int) -> int:
    if not p.is_antichain(antichain):
        raise ValueError("not an antichain")
    return p.lower_closure(antichain)


def m_polynomial(p: FinitePoset, cap: int | None = None) -> IntPoly:
    """Upper ideals counted by cardinality."""
    c = [0] * (p.size + 1)
    for i in p.upper_ideals(cap):
        c[i.bit_count()] += 1
    return IntPoly(c)


def n_polynomial(p: FinitePoset, cap: int | None = None) -> IntPoly:
    """Antichains counted by cardinality."""
    c = [0] * (p.size + 1)
    for i in p.upper_ideals(cap):
        c[p.minimal(i).bit_count()] += 1
    return IntPoly(c)


@dataclass(frozen=True)
class RankProfile:
    level_sizes: tuple[int, ...]
    symmetric: bool
    unimodal: bool
    sperner: bool
    unique_max_level: bool
    width: int


def rank_profile(p: FinitePoset, cap: int | None = None) -> RankProfile:
    sizes = tuple(p.level_sizes())
    top = max(sizes, default=0)
    width = n_polynomial(p, cap).degree
    return RankProfile(
        level_sizes=sizes,
        symmetric=sizes == sizes[::-1],
        unimodal=IntPoly(sizes).is_unimodal() if sizes else True,
        sperner=width == top,
        unique_max_level=sizes.count(top) == 1,
        width=width,
    )


# -- product formula ------------------------------------------------------


@dataclass(frozen=True)
class NotPolynomial:
    """A product of ``(1 - t^(r+1)) / (1 - t^r)`` that does not divide out."""

    numerator: IntPoly
    denominator: IntPoly
    quotient: IntPoly
    remainder: IntPoly
    value_at_one: Fraction


def product_value_at_one(ranks) -> Fraction:
    out = Fraction(1)
    for r in ranks:
        out *= Fraction(r + 1, r)
    return out


def product_formula(ranks) -> IntPoly | NotPolynomial:
    """``prod_r (1 - t^(r+1)) / (1 - t^r)`` by exact division."""
    ranks = sorted(ranks)
    if any(r < 1 for r in ranks):
        raise ValueError("ranks must be positive")
    num = product(one_minus_t_pow(r + 1) for r in ranks)
    den = product(one_minus_t_pow(r) for r in ranks)
    q, rem = num.divmod(den)
    if rem.is_zero():
        return q
    return NotPolynomial(num, den, q, rem, product_value_at_one(ranks))


def macmahon(k: int, m: int, n: int) -> IntPoly:
    """Rank generating function of plane partitions in a ``k x m x n`` box."""
    if min(k, m, n) < 1:
        raise ValueError("box dimensions must be positive")
    num = product(q_pochhammer(r) for r in range(1, k))
    num = num * product(q_pochhammer(r) for r in range(m + n, m + n + k))
    den = product(q_pochhammer(r) for r in range(m, m + k))
    den = den * product(q_pochhammer(r) for r in range(n, n + k))
    return num // den


# -- constructors ---------------------------------------------------------


def chain_product(dims: Sequence[int]) -> FinitePoset:
    """``C_d1 x ... x C_dk`` with rank = sum of coordinates, starting at 1."""
    dims = list(dims)
    if not dims or any(d < 1 for d in dims):
        raise ValueError("chain_product needs a nonempty list of positive lengths")
    elems = sorted(itertools.product(*(range(d) for d in dims)), key=lambda e: (sum(e), e))
    index = {e: i for i, e in enumerate(elems)}
    covers = []
    for e, i in index.items():
        for k in range(len(dims)):
            if e[k] + 1 < dims[k]:
                f = e[:k] + (e[k] + 1,) + e[k + 1 :]
                covers.append((i, index[f]))
    return FinitePoset(len(elems), covers, [sum(e) + 1 for e in elems], elems)


def chain(n: int) -> FinitePoset:
    return chain_product([n])


def boolean_algebra(n: int) -> FinitePoset:
    return chain_product([2] * n)


def positive_root_poset(rs: RootSystem) -> FinitePoset:
    roots = rs.positive_roots
    index = rs.positive_index
    covers = []
    for i, g in enumerate(roots):
        for j in range(rs.rank):
            up = g[:j] + (g[j] + 1,) + g[j + 1 :]
            k = index.get(up)
            if k is not None:
                covers.append((i, k))
    return FinitePoset(len(roots), covers, [height(g) for g in roots], roots)


def disjoint_union(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    off = p.size
    covers = list(p.covers) + [(x + off, y + off) for x, y in q.covers]
    labels = None
    if p.labels is not None and q.labels is not None:
        labels = list(p.labels) + list(q.labels)
    return FinitePoset(p.size + q.size, covers, list(p.rank) + list(q.rank), labels)


# -- isomorphism ----------------------------------------------------------


def is_isomorphism(p: FinitePoset, q: FinitePoset, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` is a bijection carrying covers onto covers with a constant rank shift."""
    if p.size != q.size or len(mapping) != p.size or sorted(mapping) != list(range(q.size)):
        return False
    if p.size and len({q.rank[mapping[x]] - p.rank[x] for x in range(p.size)}) != 1:
        return False
    image = {(mapping[x], mapping[y]) for x, y in p.covers}
    return image == set(q.covers)


def _refined_colors(p: FinitePoset, q: FinitePoset) -> tuple[list[int], list[int]]:
    base_p = min(p.rank, default=0)
    base_q = min(q.rank, default=0)
    cp = [(p.rank[i] - base_p, p.up_covers[i].bit_count(), p.down_covers[i].bit_count()) for i in range(p.size)]
    cq = [(q.rank[i] - base_q, q.up_covers[i].bit_count(), q.down_covers[i].bit_count()) for i in range(q.size)]
    n_classes = -1
    while True:
        table = {c: k for k, c in enumerate(sorted(set(cp) | set(cq)))}
        ip = [table[c] for c in cp]
        iq = [table[c] for c in cq]
        if len(table) == n_classes:
            return ip, iq
        n_classes = len(table)
        cp = [
            (ip[i], tuple(sorted(ip[j] for j in bits(p.up_covers[i]))), tuple(sorted(ip[j] for j in bits(p.down_covers[i]))))
            for i in range(p.size)
        ]
        cq = [
            (iq[i], tuple(sorted(iq[j] for j in bits(q.up_covers[i]))), tuple(sorted(iq[j] for j in bits(q.down_covers[i]))))
            for i in range(q.size)
        ]


def find_isomorphism(p: FinitePoset, q: FinitePoset) -> list[int] | None:
    """Rank-stratified backtracking search, pruned by colour refinement."""
    if p.size != q.size or len(p.covers) != len(q.covers):
        return None
    if p.level_sizes() != q.level_sizes():
        return None
    cp, cq = _refined_colors(p, q)
    if Counter(cp) != Counter(cq):
        return None
    by_color: dict[int, list[int]] = {}
    for y, c in enumerate(cq):
        by_color.setdefault(c, []).append(y)
    order = sorted(range(p.size), key=lambda x: (p.rank[x], len(by_color[cp[x]]), x))
    f = [-1] * p.size
    inv = [-1] * q.size

    def consistent(x: int, y: int) -> bool:
        for nb_p, nb_q in ((p.down_covers, q.down_covers), (p.up_covers, q.up_covers)):
            img = 0
            for z in bits(nb_p[x]):
                if f[z] >= 0:
                    img |= 1 << f[z]
            assigned_q = 0
            for z in bits(nb_q[y]):
                if inv[z] >= 0:
                    assigned_q |= 1 << z
            if img != assigned_q:
                return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in by_color[cp[x]]:
            if inv[y] < 0 and consistent(x, y):
                f[x], inv[y] = y, x
                if search(k + 1):
                    return True
                f[x], inv[y] = -1, -1
        return False

    return list(f) if search(0) else None


def poset_isomorphic(p: FinitePoset, q: FinitePoset, hint: Sequence[int] | None = None) -> bool:
    if hint is not None:
        return is_isomorphism(p, q, hint)
    return find_isomorphism(p, q) is not None


# -- serialization --------------------------------------------------------


def to_json(p: FinitePoset) -> dict:
    return {"size": p.size, "covers": [list(c) for c in p.covers], "rank": list(p.rank)}


def from_json(data: dict) -> FinitePoset:
    try:
        size = int(data["size"])
        covers = [(int(a), int(b)) for a, b in data["covers"]]
        rank = [int(r) for r in data["rank"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed poset JSON: {exc}") from exc
    return FinitePoset(size, covers, rank)


def load(path) -> FinitePoset:
    with open(path, encoding="utf-8") as fh:
        return from_json(json.load(fh))


def dump(p: FinitePoset, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json(p), fh, sort_keys=True)
        fh.write("\n")


def to_dot(p: FinitePoset, name: str = "P") -> str:
    """Hasse diagram in DOT, one ``rank=same`` layer per rank, edges pointing upward."""

    def label(i: int) -> str:
        if p.labels is None:
            return str(i)
        lab = p.labels[i]
        if isinstance(lab, tuple):
            return "".join(str(c) for c in lab) if all(0 <= c < 10 for c in lab) else ",".join(map(str, lab))
        return str(lab)

    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=circle];"]
    for i in range(p.size):
        lines.append(f'  n{i} [label="{label(i)}"];')
    for r, m in p.levels().items():
        lines.append(f"  {{ rank=same; {' '.join(f'n{i};' for i in bits(m))} }}")
    for x, y in p.covers:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
