import pytest

import frattini


def test_permutation_basics():
    p = frattini.Permutation(5, "(1 2 3)")
    assert p.degree == 5
    assert p.order() == 3
    assert (p * p * p).is_identity()
    assert p.inverse().cycles() == "(1 3 2)"
    with pytest.raises(frattini.GroupError):
        frattini.Permutation(3, "(1 9)")


def test_group_construction_and_membership():
    s3 = frattini.PermGroup(3, ["(1 2)", "(1 2 3)"])
    assert s3.order == 6
    assert s3.contains(frattini.Permutation(3, "(1 3)"))
    assert len(s3.elements()) == 6
    assert frattini.PermGroup.trivial(4).order == 1


def test_named_constructors():
    assert frattini.cyclic(12).order == 12
    assert frattini.dihedral(4).order == 8
    assert frattini.symmetric(4).order == 24
    assert frattini.alternating(5).order == 60
    assert frattini.aut_a6().order == 1440
    g, m, n = frattini.paper_example_100()
    assert g.order == 100 and m.order == 5 and n.order == 5


def test_structure_operations():
    s4 = frattini.symmetric(4)
    assert frattini.fitting_subgroup(s4).order == 4
    assert frattini.frattini_subgroup(s4).order == 1
    assert frattini.socle(s4).order == 4
    assert [t.order for t in frattini.f_star_series(s4)] == [1, 4, 12, 24]

    q = frattini.quotient(s4, frattini.fitting_subgroup(s4))
    assert q.target.order == 6

    factors = frattini.chief_factors(frattini.cyclic(4))
    assert [f["order"] for f in factors] == [2, 2]
    assert factors[0]["frattini"] is True


def test_classifiers():
    f20 = frattini.frobenius20()
    assert frattini.is_phi_free(f20)
    assert not frattini.is_b_group(f20)
    assert frattini.b_residual(f20).order == 10

    report = frattini.class_report(f20, "F20")
    assert report.in_nc is False
    assert report.b_residual.order == 10
    assert "in_B: false" in frattini.save_report(report)

    assert frattini.is_b_group(frattini.aut_a6())
    witness = frattini.nc_witness(frattini.aut_a6())
    assert witness is not None and witness.order == 360

    v4 = frattini.PermGroup(4, ["(1 2)(3 4)", "(1 3)(2 4)"])
    c = frattini.find_complement(frattini.symmetric(4), v4)
    assert c is not None and c.order == 6


def test_spec_round_trip():
    spec = "degree: 3\ngen: (1 2)\ngen: (1 2 3)\norder: 6\n"
    g = frattini.load_group(spec)
    assert g.order == 6
    again = frattini.load_group(frattini.group_spec("S3", g))
    assert again.order == 6


def test_checks_run():
    results = frattini.run_checks([("F20", frattini.frobenius20())], ["doerk", "tn"])
    assert {r["check"] for r in results} == {"doerk", "tn"}
    assert all(r["status"] == "pass" for r in results)


def test_caps_are_enforced():
    caps = frattini.Caps()
    caps.enumeration_cap = 10
    with pytest.raises(frattini.CapExceededError):
        frattini.symmetric(4).elements(caps)
