import math
from fractions import Fraction as F

import pytest

from parbun.cyclic import CyclicCoverParams, cyclic_bundle, kappa, kappa_j, s1, s_j, w_j
from parbun.errors import InputError
from parbun.parabolic import evaluate, parabolic_degree, tensor, tensor_power, unit_bundle

P34 = CyclicCoverParams(3, 4)
P44 = CyclicCoverParams(4, 4)
P53 = CyclicCoverParams(5, 3)
P13 = CyclicCoverParams(1, 3)


def kappa_by_counting(m, c):
    # integer-only restatement: w_j * c is (-m*j) mod c
    return sum(1 for j in range(1, c) if (-m) % c + (-m * j) % c >= c)


def test_params_validation_and_r_inf():
    assert CyclicCoverParams(6, 4).r_inf == 2
    assert P44.r_inf == 1
    with pytest.raises(InputError):
        CyclicCoverParams(0, 3)


def test_w_j_examples():
    assert w_j(P34, 1) == F(1, 4)
    assert w_j(P34, 0) == 0
    assert all(w_j(P44, j) == 0 for j in range(4))
    with pytest.raises(InputError):
        w_j(P34, 4)


def test_w_j_divisibility():
    for m in range(1, 10):
        for c in range(1, 10):
            P = CyclicCoverParams(m, c)
            for j in range(c):
                assert (w_j(P, j) * P.r_inf).denominator == 1


def test_kappa_j_examples():
    assert kappa_j(P34, 3) == 1
    assert kappa_j(P34, 1) == 0
    assert all(kappa_j(P44, j) == 0 for j in range(1, 4))
    with pytest.raises(InputError):
        kappa_j(P34, 0)


def test_kappa_examples():
    assert kappa(P34) == 1 == kappa_by_counting(3, 4)
    assert kappa(P44) == 0
    assert kappa(P53) == 1 == kappa_by_counting(5, 3)


def test_s1_examples():
    assert s1(P34) == -1
    assert s1(P44) == -1
    assert s1(P53) == -2


def test_s_j_examples():
    assert s_j(P44, 3) == -3
    assert s_j(P13, 2) == -1
    assert s_j(P53, 0) == 0


@pytest.mark.parametrize("m", range(1, 13))
@pytest.mark.parametrize("c", range(1, 13))
def test_s_j_bounds_and_telescoping(m, c):
    P = CyclicCoverParams(m, c)
    for j in range(1, c):
        assert s_j(P, j) <= -1
    # one more step of the recursion returns to the trivial bundle
    s_c = c * s1(P) + kappa(P) + m
    assert s_c == 0
    assert s1(P) == -math.ceil(m / c)


def test_cyclic_bundle_examples():
    (pc,) = cyclic_bundle(P13, 1).pieces
    assert pc.degree == -1 and pc.weights == (F(1, 3), F(2, 3))
    for P in (P34, P44, P53):
        assert cyclic_bundle(P, 0) == unit_bundle(cyclic_bundle(P, 0).curve)
    (pc,) = cyclic_bundle(P44, 3).pieces
    assert pc.degree == -3 and pc.weights == (F(3, 4),) * 4 + (0,)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("c", range(2, 7))
def test_cyclic_bundle_jumps(m, c):
    P = CyclicCoverParams(m, c)
    k = m + 1
    for j in range(c):
        B = cyclic_bundle(P, j)
        assert evaluate(B, [0] * k) == [s_j(P, j)]
        assert parabolic_degree(B) == 0
        for i in range(m):
            at = [0] * k
            at[i] = F(j, c)
            assert evaluate(B, at) == [s_j(P, j)]
            at[i] = F(j + 1, c)
            assert evaluate(B, at) == [s_j(P, j) - 1]
        step = F(1, P.r_inf)
        at = [0] * m + [w_j(P, j)]
        assert evaluate(B, at) == [s_j(P, j)]
        at[-1] = w_j(P, j) + step
        assert evaluate(B, at) == [s_j(P, j) - 1]


def test_powers_by_iterated_tensor_share_no_code_with_formula():
    for m in range(1, 6):
        for c in range(1, 6):
            P = CyclicCoverParams(m, c)
            V1 = cyclic_bundle(P, 1 % c)
            acc = unit_bundle(V1.curve)
            for j in range(c):
                assert acc.pieces[0].degree == s_j(P, j)
                acc = tensor(acc, V1)
            assert acc == unit_bundle(V1.curve)
            assert tensor_power(V1, c) == acc
