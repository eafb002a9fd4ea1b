import math

import pytest

import korobov_ibc as k


def test_counts_are_python_ints():
    spec = k.Space(2.0, k.Weights("const", c=1.0))
    assert k.count(spec, 1, 0.5) == (3, 2)
    n, _ = k.count(spec, 50, math.sqrt(0.5), memoize=True)
    assert n == 3**50
    assert k.brute_force_count(spec, 3, math.sqrt(0.5)) == 27
    assert k.info_complexity_via_errors(spec, 2, 0.5) == 9


def test_spectrum_and_errors():
    spec = k.Space(2.0, k.Weights("explicit", values=[1.0, 0.5]))
    top = k.top_eigenvalues(spec, 2, 5)
    assert [v for _, v in top] == [1, 1, 1, 0.5, 0.5]
    assert top[0][0] == (0, 0)
    errors = k.minimal_errors(spec, 2, 4)
    assert errors[0] == 1.0
    assert errors[3] == pytest.approx(math.sqrt(0.5), rel=1e-15)
    assert k.trace(spec, 2) == pytest.approx(11.3464183691004, rel=1e-13)
    assert k.zeta(2.0) == pytest.approx(math.pi**2 / 6, abs=1e-12)


def test_classification():
    poly = k.Space(2.0, k.Weights("poly", c=1.0, a=1.0))
    assert k.classify(poly, "PT", "std")["verdict"] == "holds"
    ones = k.Space(2.0, k.Weights("const", c=1.0))
    assert k.classify(ones, "WT", "std")["verdict"] == "fails"
    assert k.classify(ones, "sigma-tau-WT", "all", sigma=1.5)["verdict"] == "holds"
    assert k.spt_exponent(k.Space(2.0, k.Weights("poly", c=1.0, a=3.0))) == 1.0
    assert k.qpt_exponent(k.Space(10.0, k.Weights("const", c=0.5))) == pytest.approx(2 / math.log(2))
    assert k.qpt_criterion(k.Space(2.0, k.Weights("const", c=0.5)), 1, 1.0) == pytest.approx(
        1 + math.pi**2 / 6, rel=1e-13
    )
    assert k.k_epsilon(k.Weights("const", c=0.5), 10, math.sqrt(0.1)) == 3


def test_truncation():
    spec = k.Space(2.0, k.Weights("explicit", values=[1.0, 0.5]))
    kept, err = k.truncate(spec, {(0, 0): 1.0, (0, 1): 3.0 + 4.0j}, 2, 3)
    assert kept == {(0, 0): 1.0}
    assert err == pytest.approx(5.0)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        k.Weights("const", c=1.5)
    with pytest.raises(ValueError):
        k.Space(1.0, k.Weights("const", c=1.0))
    with pytest.raises(IndexError):
        k.Weights("explicit", values=[0.5]).gamma(2)
    with pytest.raises(k.ResourceError):
        k.top_eigenvalues(k.Space(2.0, k.Weights("const", c=1.0)), 1, 10**9)
    with pytest.raises(k.PreconditionError):
        k.spt_exponent(k.Space(2.0, k.Weights("const", c=0.5)))
