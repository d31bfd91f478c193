from fractions import Fraction

import pytest

import ribbonkit as rk


def test_three_loop_example():
    d, certs = rk.load_fixture("fig1")
    assert d.labels == ["1", "2", "3"]
    assert d.twisted == ["1"]
    assert d.quasi_trees() == [[], ["1"], ["1", "2"], ["1", "3"]]
    assert rk.qt_poly(d) == [1, 1, 2]
    assert rk.q_sequence(d) == [1, 3]
    assert rk.is_hurwitz_stable(rk.qt_poly(d))
    assert rk.qt_poly_eval(d, {"1": Fraction(1, 2), "2": 3, "3": 5}) == Fraction(11, 2)

    cert = certs[""]
    m = rk.adjusted_matrix(d, cert)
    assert m.rows() == [[1, 1, 1], [-1, 0, 0], [-1, 0, 0]]
    report = rk.verify_detection(d, m)
    assert report["detects"] and report["quasi_tree_count"] == 4
    assert m.identity_plus().det() == 4

    adjusted = rk.adjust(d, cert, "4")
    assert adjusted.is_orientable()
    lifted = rk.delta_matroid(d).lift("4")
    assert rk.delta_matroid(adjusted).same_as(lifted)


def test_two_certificates_smith_forms():
    d, certs = rk.load_fixture("ex316")
    assert rk.adjusted_matrix(d, certs["S"]).identity_plus().smith_diagonal() == [1, 1, 1, 1, 3, 9]
    assert rk.adjusted_matrix(d, certs["T"]).identity_plus().smith_diagonal() == [1, 1, 1, 1, 1, 27]


def test_cycle_family():
    c5 = rk.make_cn(5)
    assert rk.find_certificate(c5) is None
    assert rk.qt_poly(c5) == [1, 5, 5, 5, 5, 1]
    assert rk.rhp_root_count(rk.qt_poly(c5)) >= 1
    assert not rk.is_hurwitz_stable(rk.qt_poly(rk.make_cn(6)))
    assert rk.q_sequence(c5) == [1, 10, 10, 1]
    assert rk.is_log_concave([1, 10, 10, 1])
    assert rk.find_certificate(rk.make_cn(4)) is not None


def test_random_pseudo_bouquets_are_stable():
    for seed in range(20):
        d = rk.random_pseudo(seed, 6)
        assert rk.find_certificate(d) is not None
        assert rk.is_hurwitz_stable(rk.qt_poly(d))
        assert rk.random_pseudo(seed, 6) == d


def test_partial_dual_shifts_quasi_trees():
    d = rk.diagram("1 2 1 3 2 3", "2")
    x = ["1", "2"]
    assert d.is_quasi_tree(x)
    dual = d.partial_dual(x)
    shifted = sorted(sorted(set(q) ^ set(x)) for q in d.quasi_trees())
    assert sorted(dual.quasi_trees()) == shifted


def test_set_systems():
    s = rk.parse_dsys(rk.fixture("nonstrong"))
    assert s.is_delta_matroid()
    assert not s.is_strong()
    t = rk.SetSystem(["a", "b"], [[], ["a", "b"]])
    assert t.is_even() and t.is_strong()


def test_errors_carry_their_kind():
    with pytest.raises(rk.RibbonkitError) as info:
        rk.make_cn(0)
    assert rk.error_kind(info.value) == "InvalidN"
    with pytest.raises(rk.RibbonkitError) as info:
        rk.fixture("nope")
    assert rk.error_kind(info.value) == "UnknownFixture"
    with pytest.raises(rk.RibbonkitError):
        rk.diagram("1 2 1")


def test_acceptance_entry_point():
    rows = rk.run_acceptance("round-trips")
    assert len(rows) == 1
    assert rows[0]["passed"]
