import math
from fractions import Fraction as F

import pytest

from hwsum.exact_core import PoleError
from hwsum.gamma_ratio import (
    NOT_PAIRABLE,
    GammaRatioSpec,
    IndeterminateError,
    RatioValue,
    eval_numeric_gamma,
    eval_ratio,
    reduce_exact,
)


def test_reduce_exact_examples():
    assert reduce_exact(GammaRatioSpec([F(7, 2)], [F(1, 2)])) == F(15, 8)
    assert reduce_exact(GammaRatioSpec([5], [2])) == 24
    assert reduce_exact(GammaRatioSpec([F(1, 2), F(1, 2)], [1, 1])) is NOT_PAIRABLE


def test_reduce_exact_downward_and_prefactor():
    assert reduce_exact(GammaRatioSpec([F(1, 2)], [F(7, 2)], prefactor=3)) == 3 / F(15, 8)
    # Gamma(1/2)^2 / (4 Gamma(3/2)^2) = 1
    assert reduce_exact(GammaRatioSpec([F(1, 2), F(1, 2)], [F(3, 2), F(3, 2)], pow2=-2)) == 1
    assert reduce_exact(GammaRatioSpec([F(1, 3)], [F(1, 3)], pow2=F(1, 2))) is NOT_PAIRABLE


def test_reduce_exact_errors():
    with pytest.raises(ValueError):
        reduce_exact(GammaRatioSpec([1, 2], [1]))
    with pytest.raises(PoleError):
        reduce_exact(GammaRatioSpec([-1], [2]))


def test_numeric_gamma_examples():
    assert eval_numeric_gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert eval_numeric_gamma(5) == pytest.approx(24.0, rel=1e-14)
    assert eval_numeric_gamma(-0.5) == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-14)
    for z in (0, -1, -7):
        with pytest.raises(PoleError):
            eval_numeric_gamma(z)


def test_numeric_gamma_accuracy():
    worst = max(abs(eval_numeric_gamma(z) / math.gamma(z) - 1)
                for z in (0.5 + 19.5 * i / 400 for i in range(401)))
    assert worst <= 1e-13


def test_numeric_gamma_recurrence():
    for i in range(100):
        z = 0.5 + 9.5 * i / 99
        assert eval_numeric_gamma(z + 1) == pytest.approx(z * eval_numeric_gamma(z), rel=1e-12)


def test_numeric_gamma_reflection():
    for i in range(1, 100):
        z = i / 100
        if i == 50:
            continue
        prod = eval_numeric_gamma(z) * eval_numeric_gamma(1 - z) * math.sin(math.pi * z) / math.pi
        assert prod == pytest.approx(1.0, abs=1e-10)


def test_eval_ratio_kinds():
    assert eval_ratio(GammaRatioSpec([F(7, 2)], [F(1, 2)])) == RatioValue("exact", F(15, 8))
    r = eval_ratio(GammaRatioSpec([F(1, 3), F(2, 3)], [1, 1]))
    assert r.kind == "numeric"
    assert float(r) == pytest.approx(2 * math.pi / math.sqrt(3), rel=1e-13)
    assert eval_ratio(GammaRatioSpec([F(1, 2), 2], [0, F(3, 2)])).kind == "zero"
    with pytest.raises(IndeterminateError):
        eval_ratio(GammaRatioSpec([-1], [0]))
    with pytest.raises(PoleError):
        eval_ratio(GammaRatioSpec([-1], [F(1, 2)]))


def test_exact_and_numeric_agree():
    specs = [
        GammaRatioSpec([F(7, 2), F(4, 3)], [F(1, 2), F(10, 3)], prefactor=F(2, 5)),
        GammaRatioSpec([F(11, 4), 6, F(1, 5)], [F(-1, 4), 2, F(16, 5)], pow2=3),
    ]
    for spec in specs:
        exact = reduce_exact(spec)
        value = float(spec.prefactor) * 2.0 ** float(spec.pow2)
        for p in spec.numerator_args:
            value *= eval_numeric_gamma(p)
        for q in spec.denominator_args:
            value /= eval_numeric_gamma(q)
        assert value == pytest.approx(float(exact), rel=1e-10)


def test_ratio_value_sum():
    zero = RatioValue("zero")
    one = RatioValue("exact", F(1))
    assert (zero + zero).kind == "zero"
    assert (zero + one) == RatioValue("exact", F(1))
    num = one + RatioValue("numeric", numeric=0.5)
    assert num.kind == "numeric" and float(num) == 1.5
    assert one.scaled(F(3)).as_exact() == 3
