"""End-to-end smoke of the python bindings against known values."""

import pytest

import ptnpy


def test_families():
    tags = ptnpy.known_families()
    assert set(tags) == {"theta4", "theta5", "theta6", "c4", "c5", "c6", "theta6+k5m"}


def test_canonical_and_planarity():
    assert ptnpy.canonical_g6("C~") == "C~"
    assert ptnpy.is_planar("C~")
    assert not ptnpy.is_planar("D~{")  # the complete graph on five vertices


def test_detection():
    w = ptnpy.find_forbidden("C~", "theta4")
    assert w is not None
    assert sorted(w["vertices"]) == [0, 1, 2, 3]
    assert len(w["chord"]) == 2
    assert ptnpy.find_forbidden("C~", "theta5") is None
    assert ptnpy.is_family_free("C~", "theta5")


def test_bound():
    b = ptnpy.bound("theta6", 10)
    assert b["value"] == "144/7"
    assert b["floor"] == 20


def test_search():
    r = ptnpy.ex_planar(6, "theta6")
    assert r["max_edges"] == 10
    assert r["maximizer_count"] == 3
    assert r["witness"] == "E@~w"
    assert r["exhaustive"] is True
    with pytest.raises(ValueError):
        ptnpy.ex_planar(12, "theta4")


def test_enumerate():
    classes = ptnpy.enumerate_planar_free(4, "theta4")
    assert len(classes) == 9
    assert len(set(classes)) == 9


def test_constructions():
    assert ptnpy.construct("theta4", 0) == "KlfB@_K@gE`L"
    cert = ptnpy.construction_certificate("theta5", 0)
    assert cert["pass"] is True
    assert cert["n"] == 50
    assert cert["e"] == 120
    rot = ptnpy.construct("theta4", 0, format="rotation")
    assert rot.splitlines()[0].startswith("0:")
    assert ptnpy.named_graph("fig3") == "H^{GO[N"


def test_audits():
    rep = ptnpy.audit_observation1(ptnpy.named_graph("fig3"))
    assert rep["all_checks_pass"] is True
    chain = ptnpy.audit_inequalities(ptnpy.named_graph("fig3"), "theta6")
    assert chain["all_checks_pass"] is True
    statuses = {h["name"]: h["status"] for h in chain["hypotheses"]}
    assert statuses["2-connected"] == "violated"


def test_random_planar_is_seeded():
    a = ptnpy.random_planar_g6(12, seed=5)
    b = ptnpy.random_planar_g6(12, seed=5)
    assert a == b
    assert ptnpy.is_planar(a)
