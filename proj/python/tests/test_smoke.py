import pytest

import descentlab


def test_worked_example_stats():
    s = descentlab.stats("8 5 7 1 2 6 4 3")
    assert (s["des"], s["udr"], s["maj"], s["imaj"]) == (4, 6, 17, 20)
    assert descentlab.stats("1,4,3,2")["inv"] == 3


def test_signed_stats():
    s = descentlab.signed_stats("-4,7,2,-6,-3,5,1")
    assert (s["des_b"], s["fdes"], s["neg"]) == (4, 7, 3)


def test_polynomial():
    assert descentlab.polynomial("eulerian", 4) == "t + 11*t^2 + 11*t^3 + t^4"
    assert descentlab.polynomial("eulerian", 3, "av231") == "t + 3*t^2 + t^3"
    assert "narayana" in descentlab.family_names()


def test_bijections_and_orbits():
    assert descentlab.psi("2 1 9 4 3 8 5 6 7") == "UDUUDDUUUUDUDDUDDD"
    assert "4 6 7 5 1 2 8 3 9" in descentlab.mfs_orbit("4 6 7 1 2 5 8 3 9")
    assert descentlab.theta_tilde("1") == "1(.,.)"


def test_verify_and_perturb():
    assert descentlab.verify("EUL-PK", n=5)["status"] == "pass"
    bad = descentlab.verify("EUL-PK", perturb=True, n=5)
    assert bad["status"] == "fail" and bad["witness"]


def test_suite():
    reports = descentlab.run_suite("bijections", max_n=5)
    assert reports and all(r["status"] == "pass" for r in reports)
    assert set(descentlab.suite_names()) >= {"all", "numeric"}
    assert "PA-ST" in descentlab.registry_ids()


def test_errors_become_python_exceptions():
    with pytest.raises(ValueError):
        descentlab.stats("1 1")
    with pytest.raises(ValueError):
        descentlab.verify("NO-SUCH-ID")
