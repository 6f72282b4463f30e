"""Z-gradings of simple Lie algebras given by marks on the simple roots."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .poset import FinitePoset
from .rootsys import RootSystem, RootVec, coroot_pairing, height
from .weyl import act, longest_element


@dataclass(frozen=True)
class ZGrading:
    rs: RootSystem
    marks: tuple[int, ...]
    levels: dict[int, tuple[RootVec, ...]] = field(compare=False, repr=False)

    def level(self, i: int) -> tuple[RootVec, ...]:
        return self.levels.get(i, ())

    def degree_of(self, v: RootVec) -> int:
        return sum(c * m for c, m in zip(v, self.marks))

    @property
    def is_standard(self) -> bool:
        return all(m in (0, 1) for m in self.marks)

    @property
    def k(self) -> int:
        """Number of marks equal to 1 (``k`` of a ``k``-standard grading)."""
        return sum(1 for m in self.marks if m == 1)

    @property
    def pi0(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.marks) if m == 0)

    @property
    def pi1(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.marks) if m == 1)

    @property
    def positive_zero(self) -> tuple[RootVec, ...]:
        return tuple(r for r in self.level(0) if sum(r) > 0)

    @property
    def is_abelian(self) -> bool:
        return self.k == 1 and sum(self.marks) == 1 and not self.level(2)

    @property
    def is_extra_special(self) -> bool:
        return self.rs.rank >= 2 and self.marks == extra_special_marks(self.rs)

    def label(self) -> str:
        return f"{self.rs.stype}[{','.join(map(str, self.marks))}]"


def make_grading(rs: RootSystem, marks) -> ZGrading:
    marks = tuple(int(m) for m in marks)
    if len(marks) != rs.rank:
        raise ValueError(f"{rs} needs {rs.rank} marks, got {len(marks)}")
    if any(m < 0 for m in marks):
        raise ValueError("marks must be nonnegative")
    if not any(marks):
        raise ValueError("at least one mark must be positive")
    levels: dict[int, list[RootVec]] = {}
    for r in rs.roots:
        levels.setdefault(sum(c * m for c, m in zip(r, marks)), []).append(r)
    return ZGrading(rs, marks, {i: tuple(v) for i, v in sorted(levels.items())})


def abelian_gradings(rs: RootSystem) -> list[ZGrading]:
    """One grading per simple root with coefficient 1 in the highest root."""
    out = []
    for i, c in enumerate(rs.theta):
        if c == 1:
            out.append(make_grading(rs, [int(j == i) for j in range(rs.rank)]))
    return out


def extra_special_marks(rs: RootSystem) -> tuple[int, ...]:
    return tuple(coroot_pairing(rs, a, rs.theta) for a in rs.simple_roots)


def extra_special_grading(rs: RootSystem) -> ZGrading:
    """Grading by ``(gamma, theta^vee)``: ``Delta(2) = {theta}``."""
    if rs.rank < 2:
        raise ValueError(f"{rs}: the extra-special grading is not standard for A1 (Delta(1) is empty)")
    return make_grading(rs, extra_special_marks(rs))


def one_standard_gradings(rs: RootSystem) -> list[ZGrading]:
    return [make_grading(rs, [int(j == i) for j in range(rs.rank)]) for i in range(rs.rank)]


class WeightPoset(FinitePoset):
    """The poset ``Delta(1)`` of a grading; covers differ by a simple root in ``Pi(0)``."""

    def __init__(self, grading: ZGrading):
        elements = tuple(sorted(grading.level(1), key=lambda r: (height(r), r)))
        if not elements:
            raise ValueError(f"{grading.label()}: Delta(1) is empty")
        index = {r: i for i, r in enumerate(elements)}
        covers = []
        for i, g in enumerate(elements):
            for j in grading.pi0:
                up = g[:j] + (g[j] + 1,) + g[j + 1 :]
                k = index.get(up)
                if k is not None:
                    covers.append((i, k))
        super().__init__(len(elements), covers, [height(g) for g in elements], elements)
        self.grading = grading
        self.elements = elements
        self.index = index
        rs = grading.rs
        n0 = len(grading.level(0))
        self.dims = {
            "delta1": len(elements),
            "delta0_pos": n0 // 2,
            "rank": rs.rank,
            "dim_g0": n0 + rs.rank,
            "dim_g1": len(elements),
        }

    @cached_property
    def w0_word(self) -> tuple[int, ...]:
        pi0 = self.grading.pi0
        return longest_element(self.grading.rs, pi0) if pi0 else ()

    @cached_property
    def w0_perm(self) -> tuple[int, ...]:
        return w0_action_on_delta1(self)

    def apply_perm(self, perm, mask: int) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << perm[low.bit_length() - 1]
            mask ^= low
        return out

    @cached_property
    def theta_partner(self) -> tuple[int, ...]:
        """``gamma -> theta - gamma`` on Delta(1) (extra-special gradings only)."""
        theta = self.grading.rs.theta
        out = []
        for g in self.elements:
            partner = tuple(a - b for a, b in zip(theta, g))
            if partner not in self.index:
                raise ValueError(f"{self.grading.label()}: theta - {g} is not in Delta(1)")
            out.append(self.index[partner])
        return tuple(out)


def delta1_poset(g: ZGrading) -> WeightPoset:
    return WeightPoset(g)


def w0_action_on_delta1(wp: WeightPoset) -> tuple[int, ...]:
    """Permutation of Delta(1) induced by the longest element of ``W(0)``."""
    g = wp.grading
    if not g.is_standard:
        raise ValueError("w0 action is defined here for standard gradings only")
    word = wp.w0_word
    return tuple(wp.index[act(g.rs, word, r)] for r in wp.elements)
