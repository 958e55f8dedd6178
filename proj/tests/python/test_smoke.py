import itertools

import pytest

import qcong


def partitions_brute(n):
    # plain partition numbers by the pentagonal recurrence
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        for k in itertools.count(1):
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
        p[m] = total
    return p


def test_count_anchors():
    assert qcong.count("rstar", 2, 3) == [1, 2, 3, 6]
    assert qcong.count("pbar", upto=3) == [1, 2, 4, 8]
    assert qcong.count("p", upto=200) == partitions_brute(200)


def test_big_coefficients_are_python_ints():
    vals = qcong.count("p", upto=1000)
    assert vals[1000] == 24061467864032622473692149727991
    assert isinstance(vals[1000], int)


def test_series_match_counts():
    for ell in (2, 3, 8):
        assert qcong.rstar_series(ell, 101) == qcong.count("rstar", ell, 100)
    assert qcong.eta_quotient("1:1", 8) == [1, -1, -1, 0, 0, 1, 0, 1]
    assert qcong.eta_quotient("2:1,1:-2", 5, modulus=4) == [1, 2, 0, 0, 2]
    assert qcong.phi(10) == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]
    assert qcong.psi(7) == [1, 1, 0, 1, 0, 0, 1]


def test_enumerate_small():
    assert sorted(qcong.enumerate_small("rstar", 2, 3)) == sorted(
        ["3", "3'", "2' + 1", "2' + 1'", "1' + 1 + 1", "1 + 1 + 1"])


def test_number_theory():
    assert qcong.legendre(-1, 5) == 1
    assert qcong.legendre(-1, 7) == -1
    assert qcong.is_prime(97) and not qcong.is_prime(91)
    assert qcong.eligible_primes("thm3.1.ii", 20) == [13, 17, 19]


def test_verify_theorem_reports():
    reports = qcong.verify_theorem("thm3.5", terms=300)
    assert len(reports) == 5
    assert all(r["status"] == "pass" for r in reports)
    assert all(r["terms_checked"] == 300 for r in reports)
    fail = qcong.verify_theorem("thm3.3.i", alpha=1, over_two=True, terms=50)
    assert fail[0]["status"] == "fail"
    assert fail[0]["counterexamples"]


def test_lemma_and_intermediates():
    assert qcong.verify_identity("F1SQ_2DISS", order=200)["status"] == "pass"
    assert all(r["status"] == "pass" for r in qcong.verify_intermediates(terms=200))


def test_errors_raise():
    with pytest.raises(qcong.QcongError):
        qcong.verify_theorem("thm3.1.ii", p=7)
    with pytest.raises(ValueError):
        qcong.count("bogus", upto=3)


def test_search_and_acceptance():
    found = qcong.search(4, max_step=4, max_modulus=4, order=500)
    hits = {(c["progression"]["step"], c["progression"]["offset"], c["modulus"]) for c in found}
    assert {(4, 2, 4), (4, 3, 4)} <= hits
    results = qcong.run_acceptance([1, 2])
    assert [r["criterion"] for r in results] == [1, 2]
    assert all(r["passed"] for r in results)
