"""Smoke tests for the python bindings."""

try:
    import f4chev as m
except ImportError:  # dev build: the extension sits on PYTHONPATH directly
    import _f4chev as m


def test_roots():
    pos = m.positive_roots()
    assert len(pos) == 24
    assert "2342" in pos
    assert m.is_root("0122")
    assert not m.is_root("1010")
    assert m.copair("2342", 1) == 1


def test_weyl():
    assert m.weyl_order() == 1152
    assert m.weyl_apply("w[1]", "0100") == "1100"
    assert m.weyl_apply_cochar("w[234]", [10, 18, 12, 4]) == [10, 20, 14, 8]


def test_orbits_and_tori():
    assert len(m.orbit_catalog()) == 16
    assert m.half_dim("C3") == 21
    assert m.half_dim("A~2") == 15
    assert m.orbits_with_half_dim(15) == ["A2", "A2t"]
    assert m.orbits_with_half_dim(16) == []
    assert m.torus_of_orbit("B2") == [6, 10, 7, 4]
    assert m.torus_of_orbit("F4") == [22, 42, 30, 16]
    comp = m.compose(m.torus_of_orbit("C3"), [0, 1, 0, 0])
    assert comp == [10, 20, 14, 8]
    match = m.match_to_orbit(comp)
    assert match["label"] == "F4a2"
    assert m.closure_leq("A1", "F4")
    assert not m.closure_leq("A2t", "B2")


def test_grading():
    g = m.grading("B2")
    assert sorted(g[6]) == ["2342"]
    assert len(g[2]) == 6


def test_commutators():
    terms = m.commutator_formula("1110", "0010")
    assert len(terms) == 1
    assert terms[0]["root"] == "1120"
    assert abs(int(terms[0]["coeff"])) == 2
    assert m.structure_constant("0100", "0010") != 0


def test_stabilizers():
    assert m.f4a3_discriminant("1", "0", "0") == "-27"
    a = ["1", "0", "0", "0", "1", "0"]  # rows ((0,1,0),(0,0,1),(1,0,0))
    b = ["0", "1", "1", "1", "0", "0"]  # rows ((1,0,0),(1,0,0),(0,1,1))
    assert m.f4a3_stab_dim(a, b) == 1
    zero = ["0"] * 6
    assert m.f4a3_stab_dim(zero, zero) == 13
    assert m.f4a2_stab_dim(["0"] * 8) == 8


def test_descent():
    assert m.check_dim_equation(3, 11, 8, 0, 6)
    table = m.descent_table()
    infeasible = [r for r in table if not r["feasible"]]
    assert {(r["orbit"], r["dim_e"]) for r in infeasible} == {("A1+A1t", 16), ("A1", 16)}
    rep = m.verify_composition("C3o2")
    assert rep["pass"]
    assert rep["leading"] == "F4a2"
    pf = m.pair_feasibility("SL2,Sp6")
    rev = pf["directions"][1]["options"]
    assert {(o["dim_e"], o["feasible"]) for o in rev} == {(13, False), (14, True), (15, True)}


def test_sp_partition():
    assert m.sp_partition_torus(4, [4]) == [3, 1, -1, -3]
    assert m.sp_partition_torus(4, [2, 1, 1]) == [1, 0, 0, -1]


def test_exchange():
    names = m.exchange_fixtures()
    assert "thm-mini1-b2" in names
    for name in names:
        res = m.replay_fixture(name)
        assert res["completed"], f"{name}: {res['failure']}"
