from fractions import Fraction

import pytest

import closedgeo as cg


def running():
    return cg.IndexProfile(4, [3, 2, 1, 2], ["10/97", "13/97", "31/97"], [1, 1, 1])


def test_iterates_and_average():
    p = running()
    assert cg.index_sequence(p, 5) == [3, 5, 7, 7, 9]
    assert cg.average_index(p) == Fraction(178, 97)
    assert cg.gamma_invariant(p) == -1
    assert p.t[0] == Fraction(10, 97)


def test_phase_collision():
    with pytest.raises(cg.PhaseCollision):
        cg.iterate_index(running(), 97)


def test_invalid_profile():
    with pytest.raises(ValueError, match="exceeds N_1"):
        cg.IndexProfile(3, [2, 0, 2], [Fraction(1, 5), Fraction(2, 5)], [1, 1])


def test_json_round_trip():
    p = running()
    assert cg.IndexProfile.from_json(p.to_json()) == p
    assert cg.extremal_profile(4, [Fraction(10, 97), Fraction(13, 97), Fraction(31, 97)]) == p


def test_betti_and_euler():
    assert cg.poincare_coefficients(4, 10) == [0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0]
    assert cg.average_euler_number(4) == Fraction(-2, 3)


def test_morse():
    r = cg.morse_q_recursion(cg.aggregate_w(running(), 8), cg.poincare_coefficients(4, 8))
    assert r["q"][8] == -1
    assert r["feasible"] is False


def test_prop33_and_pipeline():
    assert cg.check_prop33(running())["conclusions"]["c"] is True
    out = cg.single_geodesic_pipeline(4, running(), 40)
    assert out["failed_step"] == "average-relation"


def test_verify():
    s = cg.verify_theorem(3, 200, 499, threads=2)
    assert s["candidates"] == 72
    assert s["survivors"] == []
    assert len(cg.enumerate_signatures(3)) == 72
