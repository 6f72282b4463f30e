import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from oracles import antichains_bruteforce, upper_ideals_bruteforce
from weightposets import poset as P
from weightposets.grading import WeightPoset, extra_special_grading, make_grading
from weightposets.polynomial import IntPoly
from weightposets.rootsys import build


@st.composite
def graded_posets(draw, max_levels=4, max_width=4):
    sizes = draw(st.lists(st.integers(1, max_width), min_size=1, max_size=max_levels))
    rank, levels = [], []
    for r, s in enumerate(sizes):
        levels.append(list(range(len(rank), len(rank) + s)))
        rank += [r + 1] * s
    covers = []
    for lo, hi in zip(levels, levels[1:]):
        for x in lo:
            for y in hi:
                if draw(st.booleans()):
                    covers.append((x, y))
    return P.FinitePoset(len(rank), covers, rank)


@settings(max_examples=80, deadline=None)
@given(graded_posets())
def test_ideals_and_antichains_against_bruteforce(p):
    ideals = p.upper_ideals()
    assert sorted(ideals) == upper_ideals_bruteforce(p.size, p.covers)
    assert sorted(p.antichains()) == antichains_bruteforce(p.size, p.covers)
    m, n = P.m_polynomial(p), P.n_polynomial(p)
    assert m(1) == n(1) == len(ideals)
    for i in ideals:
        a = P.antichain_of_ideal(p, i)
        assert P.ideal_of_antichain(p, a) == i
        assert p.is_lower_ideal(p.full & ~i)


@settings(max_examples=40, deadline=None)
@given(graded_posets(), st.randoms(use_true_random=False))
def test_isomorphism_under_relabelling(p, rnd):
    perm = list(range(p.size))
    rnd.shuffle(perm)
    q = P.FinitePoset(p.size, [(perm[x], perm[y]) for x, y in p.covers], [p.rank[perm.index(i)] + 3 for i in range(p.size)])
    f = P.find_isomorphism(p, q)
    assert f is not None and P.is_isomorphism(p, q, f)
    assert P.poset_isomorphic(p, q, hint=perm)


@settings(max_examples=40, deadline=None)
@given(graded_posets())
def test_json_roundtrip(p):
    q = P.from_json(json.loads(json.dumps(P.to_json(p))))
    assert q.covers == p.covers and q.rank == p.rank
    assert P.m_polynomial(q) == P.m_polynomial(p)
    assert P.n_polynomial(q) == P.n_polynomial(p)


def test_file_roundtrip(tmp_path):
    p = P.chain_product([2, 3])
    path = tmp_path / "p.json"
    P.dump(p, path)
    assert P.m_polynomial(P.load(path)) == P.m_polynomial(p)


def test_basic_enumeration():
    empty = P.FinitePoset(0, [], [])
    assert empty.upper_ideals() == [0]
    for n in range(1, 6):
        assert len(P.chain(n).upper_ideals()) == n + 1
    grid = P.chain_product([2, 3])
    assert len(grid.upper_ideals()) == comb(5, 2)
    assert P.m_polynomial(P.chain_product([2, 2])) == IntPoly([1, 1, 2, 1, 1])


def test_weight_poset_enumeration_examples():
    a3 = WeightPoset(make_grading(build("A3"), (0, 1, 0)))
    assert P.m_polynomial(a3) == IntPoly([1, 1, 2, 1, 1])
    e8 = WeightPoset(extra_special_grading(build("E8")))
    assert len(e8.upper_ideals()) == 8 * 29
    e7 = WeightPoset(make_grading(build("E7"), (1, 0, 0, 0, 0, 0, 0)))
    assert P.n_polynomial(e7) == IntPoly([1, 27, 27, 1])
    f4 = WeightPoset(extra_special_grading(build("F4")))
    assert P.n_polynomial(f4) == IntPoly([1, 14, 7])


def test_ideal_antichain_edge_cases():
    p = P.chain_product([2, 2])
    assert P.antichain_of_ideal(p, p.full) == p.minimal(p.full)
    assert P.ideal_of_antichain(p, 0) == 0
    with pytest.raises(ValueError):
        P.antichain_of_ideal(p, 0b0001)  # bottom alone is not upward closed
    with pytest.raises(ValueError):
        P.ideal_of_antichain(p, 0b0011)  # comparable pair


def test_rank_profile():
    b4 = P.boolean_algebra(4)
    prof = P.rank_profile(b4)
    assert prof.level_sizes == (1, 4, 6, 4, 1) and prof.unique_max_level
    assert prof.symmetric and prof.unimodal and prof.sperner and prof.width == 6
    assert P.rank_profile(P.chain(5)).level_sizes == (1,) * 5
    e8 = WeightPoset(make_grading(build("E8"), [0] * 7 + [1]))
    assert e8.level_sizes() == [1, 1, 2, 3, 4, 5, 6, 6, 6, 6, 5, 4, 3, 2, 1, 1]


def test_n_polynomial_boolean():
    assert P.n_polynomial(P.boolean_algebra(4)) == IntPoly([1, 16, 55, 64, 25, 6, 1])
    assert len(P.boolean_algebra(4).antichains()) == 168


def test_product_formula():
    assert P.product_formula([1, 2, 2, 3]) == IntPoly([1, 1, 2, 1, 1])
    b4 = P.boolean_algebra(4)
    res = P.product_formula(b4.rank)
    assert isinstance(res, P.NotPolynomial)
    assert res.value_at_one == Fraction(500, 3)
    assert res.quotient * res.denominator + res.remainder == res.numerator
    with pytest.raises(ValueError):
        P.product_formula([0, 1])


def test_macmahon():
    assert P.macmahon(1, 1, 5) == IntPoly([1] * 6)
    b3 = P.boolean_algebra(3)
    assert P.macmahon(2, 2, 2) == P.m_polynomial(b3) and P.macmahon(2, 2, 2)(1) == 20
    e6 = WeightPoset(make_grading(build("E6"), (0, 0, 1, 0, 0, 0)))
    assert P.macmahon(2, 3, 3)(1) == len(e6.upper_ideals())
    with pytest.raises(ValueError):
        P.macmahon(0, 1, 1)


def test_chain_product_and_isomorphisms():
    d4 = WeightPoset(extra_special_grading(build("D4")))
    assert P.poset_isomorphic(P.chain_product([2, 2, 2]), d4)
    assert P.poset_isomorphic(P.chain_product([2, 3]), P.chain_product([3, 2]))
    two = P.FinitePoset(2, [], [1, 1])
    assert not P.poset_isomorphic(P.chain(2), two)
    assert len(P.chain_product([4]).antichains()) == 5


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_type_c_and_type_d_abelian_posets_agree(n):
    c = WeightPoset(make_grading(build(f"C{n - 1}"), [0] * (n - 2) + [1]))
    d = WeightPoset(make_grading(build(f"D{n}"), [0] * (n - 1) + [1]))
    assert P.poset_isomorphic(c, d)


def test_positive_root_poset():
    rs = build("A3")
    p = P.positive_root_poset(rs)
    assert len(p.antichains()) == 14
    assert {p.labels[i] for i in p.members(p.minimal(p.full))} == set(rs.simple_roots)
    assert [p.labels[i] for i in p.members(p.maximal(p.full))] == [rs.theta]


def test_disjoint_union_and_components():
    u = P.disjoint_union(P.chain(2), P.chain(3))
    assert len(u.components()) == 2
    assert P.m_polynomial(u) == P.m_polynomial(P.chain(2)) * P.m_polynomial(P.chain(3))


def test_validation():
    with pytest.raises(ValueError):
        P.FinitePoset(2, [(0, 1)], [1, 1])
    with pytest.raises(ValueError):
        P.FinitePoset(2, [(0, 2)], [1, 2])
    with pytest.raises(ValueError):
        P.FinitePoset(1, [], [1, 2])
    with pytest.raises(ValueError):
        P.FinitePoset(P.WIDTH_LIMIT + 1, [], [1] * (P.WIDTH_LIMIT + 1))
    with pytest.raises(ValueError):
        P.from_json({"size": 2, "covers": "x"})
    with pytest.raises(ValueError):
        P.chain_product([])


def test_cap(monkeypatch):
    with pytest.raises(P.EnumerationCapExceeded):
        list(P.boolean_algebra(4).iter_upper_ideals(cap=10))
    monkeypatch.setenv("WEIGHTPOSETS_IDEAL_CAP", "7")
    with pytest.raises(P.EnumerationCapExceeded):
        P.boolean_algebra(3).upper_ideals()


def test_dot_export():
    a3 = WeightPoset(make_grading(build("A3"), (0, 1, 0)))
    dot = P.to_dot(a3, "A3")
    assert dot.count("->") == 4
    assert dot.count("[label=") == 4
    assert "rank=same" in dot
