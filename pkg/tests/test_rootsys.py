import pytest
from hypothesis import given, strategies as st

from oracles import DUAL_COXETER, EXPONENTS, POSITIVE_ROOT_COUNT, closure_roots
from weightposets import rootsys
from weightposets.rootsys import SimpleType, build, dual, height, is_negative, is_positive

ALL_TYPES = [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)] + [f"C{n}" for n in range(2, 9)]
ALL_TYPES += [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8", "F4", "G2"]


@pytest.mark.parametrize("t", ALL_TYPES)
def test_positive_roots_match_closure_oracle(t):
    rs = build(t)
    oracle = {v for v in closure_roots(rs.cartan) if is_positive(v)}
    assert set(rs.positive_roots) == oracle
    assert len(oracle) == POSITIVE_ROOT_COUNT[t[0]](rs.rank)


@pytest.mark.parametrize("t", ALL_TYPES)
def test_global_invariants(t):
    rs = build(t)
    n_pos = len(rs.positive_roots)
    assert 2 * n_pos == rs.rank * rs.h
    assert height(rs.theta) == rs.h - 1
    assert all(1 <= height(g) <= rs.h - 1 for g in rs.positive_roots)
    assert sum(rs.exponents) == n_pos and max(rs.exponents) == rs.h - 1
    assert len(rootsys.long_roots(rs)) == rs.h * len(rootsys.long_simple_roots(rs))
    # theta is the only positive root that no simple root can be added to
    tops = [g for g in rs.positive_roots if not any(rs.is_root(tuple(a + b for a, b in zip(g, s))) for s in rs.simple_roots)]
    assert tops == [rs.theta]


@pytest.mark.parametrize("t,exps", sorted(EXPONENTS.items()))
def test_exponents_table(t, exps):
    assert build(t).exponents == exps


@pytest.mark.parametrize("t,hstar", sorted(DUAL_COXETER.items()))
def test_dual_coxeter_number(t, hstar):
    rs = build(t)
    assert rs.h_star == hstar
    assert height(dual(rs).coroot[rs.theta]) == hstar - 1


def test_small_systems():
    a3 = build("A3")
    assert len(a3.positive_roots) == 6 and a3.h == 4 and a3.theta == (1, 1, 1)
    g2 = build("G2")
    assert len(g2.positive_roots) == 6 and g2.h == 6 and g2.h_star == 4 and g2.theta == (3, 2)
    assert build("E6").theta == (1, 2, 3, 2, 1, 2)
    assert build("E7").theta == (1, 2, 3, 4, 3, 2, 2)
    assert build("E8").theta == (2, 3, 4, 5, 6, 4, 2, 3)


def test_pairings():
    a2 = build("A2")
    assert rootsys.pairing(a2, (1, 0), 0) == 2
    assert rootsys.pairing(a2, (1, 0), 1) == -1
    g2 = build("G2")
    vals = [rootsys.pairing(g2, g2.theta, j) for j in range(2)]
    assert all(v >= 0 for v in vals)
    for t in ALL_TYPES:
        rs = build(t)
        assert rootsys.coroot_pairing(rs, rs.theta, rs.theta) == 2
    assert rootsys.coroot_pairing(a2, (1, 0), a2.theta) == 1
    c3 = build("C3")
    assert sum(1 for g in c3.positive_roots if rootsys.coroot_pairing(c3, g, c3.theta) == 1) == 4
    with pytest.raises(ValueError):
        rootsys.coroot_pairing(a2, (1, 0), (2, 0))


def test_reflections():
    a3 = build("A3")
    assert rootsys.reflect(a3, 1, (1, 0, 0)) == (1, 1, 0)
    for t in ("B3", "G2", "F4"):
        rs = build(t)
        for j in range(rs.rank):
            assert rootsys.reflect(rs, j, rs.simple_roots[j]) == tuple(-c for c in rs.simple_roots[j])
            for v in rs.roots:
                assert rootsys.reflect(rs, j, rootsys.reflect(rs, j, v)) == v


@given(st.sampled_from(["B3", "C3", "G2", "F4", "D4"]), st.data())
def test_reflect_in_root_is_involution_on_roots(t, data):
    rs = build(t)
    mu = data.draw(st.sampled_from(rs.roots))
    v = data.draw(st.sampled_from(rs.roots))
    w = rootsys.reflect_in(rs, mu, v)
    assert rs.is_root(w)
    assert rootsys.reflect_in(rs, mu, w) == v
    assert rs.inner(w, w) == rs.inner(v, v)


def test_long_simple_roots():
    assert rootsys.long_simple_roots(build("A4")) == frozenset(range(4))
    assert rootsys.long_simple_roots(build("C4")) == frozenset({3})
    assert rootsys.long_simple_roots(build("B4")) == frozenset({0, 1, 2})
    assert len(rootsys.long_simple_roots(build("G2"))) == 1
    assert rootsys.long_simple_roots(build("F4")) == frozenset({0, 1})


def test_dual():
    assert str(dual(build("B3")).system.stype) == "C3"
    assert str(dual(build("C5")).system.stype) == "B5"
    e7 = dual(build("E7"))
    assert e7.system.cartan == build("E7").cartan
    assert height(e7.coroot[build("E7").theta]) == 17
    g2 = build("G2")
    dg = dual(g2)
    assert height(dg.coroot[g2.theta]) == g2.h_star - 1 == 3
    assert dg.system.is_root(dg.coroot[g2.theta])


def test_exponent_small_cases():
    assert build("A3").exponents == (1, 2, 3)
    assert build("G2").exponents == (1, 5)


def test_info_json():
    d = rootsys.info(build("G2"))
    assert d == {
        "type": "G2",
        "rank": 2,
        "num_positive_roots": 6,
        "theta": [3, 2],
        "h": 6,
        "h_star": 4,
        "exponents": [1, 5],
        "long_simple": [2],
    }


@pytest.mark.parametrize("text", ["B1", "C1", "D3", "E5", "E9", "F3", "G3", "A0", "Z2", "", "A"])
def test_type_validation(text):
    with pytest.raises(ValueError):
        build(text)


def test_simple_type_parse_and_signs():
    assert SimpleType.parse("e7") == SimpleType("E", 7)
    assert is_positive((0, 1)) and not is_positive((0, 0)) and not is_positive((1, -1))
    assert is_negative((-1, 0)) and not is_negative((0, 0))


def test_from_cartan_rejects_bad_symmetrizer():
    st_ = SimpleType("B", 2)
    with pytest.raises(ValueError):
        rootsys.from_cartan(st_, rootsys.cartan_matrix(st_), (1, 1))
