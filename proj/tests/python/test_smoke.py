"""Smoke tests for the python module: a few known exact values per operation."""

import pytest

import logw


@pytest.fixture(scope="module")
def a2():
    return logw.RootSystem("A2")


def test_root_system_data(a2):
    assert a2.rank == 2
    assert a2.coxeter == 3
    assert a2.dim_g == 8
    assert a2.cartan == [[2, -1], [-1, 2]]
    assert a2.minuscule == [1, 2]
    assert a2.num_positive_roots == 3
    assert a2.weyl_order() == 6
    assert a2.pairing([1, 0], [1, 0]) == "2/3"
    assert a2.weyl_dimension([1, 1]) == "8"
    with pytest.raises(ValueError):
        logw.RootSystem("B2")


def test_carry_calculus(a2):
    assert logw.epsilon_w0(a2, 3, 0, [0, 0]) == [-1, -1]
    assert logw.epsilon_of(a2, 3, 0, [0, 0], [2]) == [0, -1]
    assert logw.check_alcove(a2, 2, 0, [0, 0])
    assert not logw.check_alcove(a2, 2, 0, [1, 0])
    assert logw.check_novel(a2, 2, 0, [0, 0])
    scan = logw.condequiv_scan(a2, 2)
    assert scan["total"] == 12
    assert scan["mismatches"] == 0
    assert scan["partial_sum_condition_ok"]


def test_conformal_data(a2):
    assert logw.central_charge(a2, 2) == "-10"
    a1 = logw.RootSystem("A1")
    assert logw.central_charge(a1, 2) == "-2"
    assert logw.central_charge(a1, 3) == "-7"
    assert logw.delta(a2, 2, [0, 0], 0, [0, 0]) == "0"
    assert logw.delta(a2, 2, [-2, 1], 0, [0, 0]) == "1"


def test_series(a2):
    eta = logw.eta_inverse_power(1, "4")
    assert eta["-1/24"] == "1"
    assert eta["95/24"] == "5"  # -1/24 + 4 partitions of four

    chi = logw.weyl_character(a2, [1, 1])
    assert chi[(0, 0)] == "2"
    assert chi[(1, 1)] == "1"
    assert len(chi) == 7


def test_character_identity():
    a1 = logw.RootSystem("A1")
    rep = logw.compare_characters(a1, 2, 0, [0], "6")
    assert rep["matches"]
    assert rep["diffs"] == 0
    eu = logw.euler_character(a1, 2, 0, [0], "2")
    assert eu[(0,)]["1/12"] == "1"  # vacuum term


def test_kernels_and_relations():
    a1 = logw.RootSystem("A1")
    entries = logw.kernel_graded_dims(a1, 2, 0, [0], [1], "3", refine=True)
    dims = {e["delta"]: e["kernel"] for e in entries}
    assert dims == {"0": 1, "1": 0, "2": 1, "3": 4}
    assert entries[3]["weights"] == {(-2,): 1, (0,): 2, (2,): 1}
    rel = logw.relation_suite(a1, 2, "3")
    assert rel["all_pass"]
    with pytest.raises(ValueError):
        logw.kernel_graded_dims(a1, 2, 0, [1], [1], "2")


def test_cohomology_dims(a2):
    assert logw.cohomology_dim(a2, [4, 0], 1, 0) == 5
    assert logw.cohomology_dim(a2, [-3, 0], 1, 1) == 2
    assert logw.cohomology_dim(a2, [-1, 0], 1, 0) == 0
    assert logw.cohomology_dim(a2, [-1, 0], 1, 1) == 0
