import itertools

import pytest

from weightposets import poset as P
from weightposets.grading import (
    WeightPoset,
    abelian_gradings,
    extra_special_grading,
    extra_special_marks,
    make_grading,
    one_standard_gradings,
)
from weightposets.rootsys import build, height


def test_levels_by_coefficient_filter():
    rs = build("A3")
    g = make_grading(rs, (0, 1, 0))
    assert set(g.level(1)) == {(0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1)}
    assert g.level(2) == ()
    a2 = make_grading(build("A2"), (1, 1))
    assert set(a2.level(1)) == {(1, 0), (0, 1)} and a2.level(2) == ((1, 1),)


@pytest.mark.parametrize("t", ["B4", "G2", "E6", "F4"])
def test_levels_partition_and_add(t):
    rs = build(t)
    for marks in itertools.product(range(3), repeat=rs.rank):
        if not any(marks) or sum(marks) > 3:
            continue
        g = make_grading(rs, marks)
        flat = [r for v in g.levels.values() for r in v]
        assert sorted(flat) == sorted(rs.roots)
        for a, b in itertools.combinations(rs.positive_roots, 2):
            s = tuple(x + y for x, y in zip(a, b))
            if rs.is_root(s):
                assert g.degree_of(s) == g.degree_of(a) + g.degree_of(b)


def test_standard_flags():
    rs = build("D5")
    g = make_grading(rs, (1, 0, 0, 1, 0))
    assert g.is_standard and g.k == 2 and g.pi1 == (0, 3)
    assert not make_grading(rs, (2, 0, 0, 0, 0)).is_standard
    with pytest.raises(ValueError):
        make_grading(rs, (0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        make_grading(rs, (1, 0))
    with pytest.raises(ValueError):
        make_grading(rs, (1, -1, 0, 0, 0))


def test_abelian_gradings():
    assert [g.pi1 for g in abelian_gradings(build("A5"))] == [(i,) for i in range(5)]
    assert [g.pi1 for g in abelian_gradings(build("E7"))] == [(0,)]
    assert abelian_gradings(build("E8")) == []
    assert abelian_gradings(build("F4")) == [] and abelian_gradings(build("G2")) == []
    for g in abelian_gradings(build("E6")):
        assert g.is_abelian


@pytest.mark.parametrize("t", ["A2", "A5", "B4", "C3", "C5", "D4", "D6", "E6", "E7", "E8", "F4", "G2"])
def test_extra_special(t):
    rs = build(t)
    g = extra_special_grading(rs)
    assert g.level(2) == (rs.theta,)
    assert g.is_extra_special and g.is_standard
    wp = WeightPoset(g)
    assert wp.size == 2 * rs.h_star - 4


def test_extra_special_examples():
    assert set(extra_special_grading(build("A2")).level(1)) == {(1, 0), (0, 1)}
    for n in range(2, 7):
        assert WeightPoset(extra_special_grading(build(f"C{n}"))).size == 2 * n - 2
    g2 = WeightPoset(extra_special_grading(build("G2")))
    assert g2.size == 4 and list(g2.rank) == [1, 2, 3, 4]
    assert P.m_polynomial(g2) == P.product_formula(g2.rank) == sum((P.IntPoly.monomial(k) for k in range(5)), P.IntPoly())
    with pytest.raises(ValueError):
        extra_special_grading(build("A1"))
    assert extra_special_marks(build("A1")) == (2,)


def test_weight_poset_shape():
    a3 = WeightPoset(make_grading(build("A3"), (0, 1, 0)))
    assert P.poset_isomorphic(a3, P.chain_product([2, 2]))
    for n in (4, 5, 6):
        d = WeightPoset(make_grading(build(f"D{n}"), [1] + [0] * (n - 1)))
        assert d.level_sizes() == [1] * (n - 2) + [2] + [1] * (n - 2)
        assert d.size == 2 * n - 2


@pytest.mark.parametrize("t", ["B3", "D5", "E6", "F4"])
def test_components_and_ranks(t):
    rs = build(t)
    for k in (1, 2):
        for nodes in itertools.combinations(range(rs.rank), k):
            g = make_grading(rs, [int(i in nodes) for i in range(rs.rank)])
            wp = WeightPoset(g)
            assert list(wp.rank) == [height(e) for e in wp.elements]
            comps = wp.components()
            assert len(comps) == k
            mins = {wp.elements[i] for i in wp.members(wp.minimal(wp.full))}
            assert mins == {rs.simple_roots[i] for i in nodes}


@pytest.mark.parametrize("t", ["A4", "C4", "E6", "F4", "G2"])
def test_w0_action(t):
    rs = build(t)
    for g in one_standard_gradings(rs):
        wp = WeightPoset(g)
        perm = wp.w0_perm
        assert all(perm[perm[i]] == i for i in range(wp.size))
        for i in wp.upper_ideals():
            assert wp.is_lower_ideal(wp.apply_perm(perm, i))
    top = WeightPoset(make_grading(build("A3"), (1, 1, 1)))
    assert top.w0_perm == tuple(range(top.size))


def test_empty_delta1_rejected():
    with pytest.raises(ValueError):
        WeightPoset(make_grading(build("A2"), (2, 0)))


def test_dims():
    e6 = WeightPoset(extra_special_grading(build("E6")))
    assert e6.dims["dim_g1"] == 20 and e6.dims["dim_g0"] == 36
    d4 = WeightPoset(extra_special_grading(build("D4")))
    assert d4.dims["dim_g0"] == 10


def test_theta_partner():
    wp = WeightPoset(extra_special_grading(build("E7")))
    theta = wp.grading.rs.theta
    for i, j in enumerate(wp.theta_partner):
        assert tuple(a + b for a, b in zip(wp.elements[i], wp.elements[j])) == theta
