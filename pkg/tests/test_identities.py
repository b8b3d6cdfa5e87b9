from fractions import Fraction

import pytest

from qmobius import arith, identities as I, partitions
from qmobius.fps import Series, log_derivative
from qmobius.identities import Mismatch


def test_lemma1_examples():
    assert I.verify_lemma1("Q/n", 100).passed
    r = I.verify_lemma1("one", 200)
    assert r.passed and r.params == {"sequence": "one"}
    assert I.verify_lemma1(arith.mobius, 100, label="mu").passed


def test_theorem1_examples():
    r = I.verify_theorem1(6)
    assert r.passed
    assert log_derivative(partitions.series_psi_q(6)) == Series([0, -1, -2, -3, -4, -4, -8])
    assert I.verify_theorem1(1).passed
    assert I.verify_theorem1(200).passed


def test_theorem2_examples():
    r = I.verify_theorem2(1, 100)
    assert r.passed and "closed-form" in r.claims
    assert I.verify_theorem2(3, 60).passed


def test_theorem3_examples():
    r = I.verify_theorem3(1, 40)
    assert r.passed
    assert "combinatorial cross-check through n=40" in r.notes[0]
    r = I.verify_theorem3(2, 100)
    assert r.passed and "series-only above" in r.notes[0]
    assert partitions.series_b_hat(1, 6)[6] == 16 == sum(partitions.series_b(j, 6)[6] for j in range(1, 6))


def test_engine_identities():
    assert I.verify_euler_pentagonal(500).passed
    assert I.verify_jacobi(500).passed
    assert I.verify_euler_durfee(200).passed
    assert I.verify_partition_numbers(500).passed


def test_pentagonal_and_jacobi_series_shapes():
    pent = I.pentagonal_series(30)
    assert [k for k, c in enumerate(pent) if c] == [0, 1, 2, 5, 7, 12, 15, 22, 26]
    jac = I.jacobi_series(10)
    assert jac == Series.from_terms({0: 1, 1: -3, 3: 5, 6: -7, 10: 9}, 10)


def test_run_all_ordering_and_degenerate_order():
    reports = I.run_all(1)
    assert all(r.passed for r in reports)
    labels = [r.label for r in reports]
    assert labels[:3] == ["lemma1[sequence=one]", "lemma1[sequence=Q/n]", "lemma1[sequence=mobius]"]
    assert labels[3] == "theorem1"
    assert labels[4:9] == [f"theorem2[a={a}]" for a in range(1, 6)]
    assert labels[-4:] == ["euler-pentagonal", "jacobi", "euler-durfee", "partition-numbers"]


def test_reports_are_deterministic():
    assert I.run_all(30) == I.run_all(30)


def test_errors_become_failed_reports():
    r = I.run_check("lemma1", 10, sequence="nonexistent")
    assert r.status == "fail" and r.error and r.first_mismatch is None
    r = I.run_check("theorem2", 10, a=0)
    assert r.status == "fail" and "a must be positive" in r.error


def test_unknown_names_rejected():
    with pytest.raises(KeyError):
        I.run_all(5, names=["nosuch"])
    with pytest.raises(ValueError):
        I.normalize_corruption({"nosuch": {1: 1}})
    assert I.normalize_corruption({"pa": {3: 1}}) == {"pa@1": {3: 1}}


def test_mismatch_records_exact_coefficients():
    r = I.verify_theorem1(12, corrupt={"Qhat": {4: Fraction(1, 3)}})
    assert r.status == "fail"
    assert r.first_mismatch == Mismatch(4, Fraction(-4), Fraction(-13, 3), "log-derivative")


def test_full_diff_lists_every_mismatch():
    r = I.verify_partition_numbers(20, corrupt={"p": {3: 1, 9: -2}}, full_diff=True)
    assert [m.power for m in r.diffs] == [3, 9]
    assert r.first_mismatch.power == 3
    assert I.verify_partition_numbers(20, corrupt={"p": {3: 1}}).diffs == ()


@pytest.mark.parametrize("key,index", [("Q", 1), ("Q", 17), ("Qhat", 2), ("Qhat", 30)])
def test_theorem1_fault_injection(key, index):
    r = I.verify_theorem1(40, corrupt={key: {index: 1}})
    assert r.status == "fail"
    assert r.first_mismatch.power == index
