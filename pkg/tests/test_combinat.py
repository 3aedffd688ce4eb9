import math

import pytest

from mdscosets.combinat import binom, omega


def binom_oracle(n, k):
    # independent factorial-ratio evaluation
    if k < 0 or k > n:
        return 0
    return math.factorial(n) // (math.factorial(k) * math.factorial(n - k))


def omega_oracle(n, d, w, v):
    if w <= d - 2:
        return 0
    return (-1) ** ((w - d) % 2) * binom_oracle(n - v, w - v) * binom_oracle(w - 1 - v, d - 2 - v)


def test_binom_known_values():
    assert binom(5, 2) == 10
    assert binom(6, 7) == 0
    assert binom(0, 0) == 1
    assert binom(10, -1) == 0


def test_binom_rejects_negative_n():
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_binom_matches_factorial_oracle():
    for n in range(0, 25):
        for k in range(-2, n + 3):
            assert binom(n, k) == binom_oracle(n, k)


def test_omega_known_values():
    assert omega(6, 4, 4, 0) == 45        # C(6,4)*C(3,2)
    assert omega(6, 4, 2, 1) == 0         # vanishes for w <= d-2
    assert omega(6, 4, 3, 2) == -4        # -C(4,1)*C(0,0)


def test_omega_domain_errors():
    with pytest.raises(ValueError):
        omega(6, 4, 7, 0)                 # w > n
    with pytest.raises(ValueError):
        omega(6, 4, 3, 3)                 # v > d-2
    with pytest.raises(ValueError):
        omega(6, 4, -1, 0)


def test_omega_matches_oracle():
    for n in range(3, 13):
        for d in range(3, n + 1):
            for w in range(0, n + 1):
                for v in range(0, d - 1):
                    assert omega(n, d, w, v) == omega_oracle(n, d, w, v)


def test_omega_particular_cases():
    # at w = d-1 the coefficient collapses to -C(n-j, d-1-j)
    for n in range(4, 12):
        for d in range(3, n + 1):
            for j in range(0, d - 1):
                assert omega(n, d, d - 1, j) == -binom(n - j, d - 1 - j)
    # at v = d-2 it collapses to (+/-) C(n-d+2, n-w)
    for n in range(4, 12):
        for d in range(3, n + 1):
            for w in range(d - 1, n + 1):
                sign = -1 if (w - d) % 2 else 1
                assert omega(n, d, w, d - 2) == sign * binom(n - d + 2, n - w)


def test_binomial_identities_exhaustive():
    # symmetry, Pascal, subset-of-subset, and the two alternating sums,
    # swept over the whole grid 0 <= l, m, p <= h <= 20
    H = 20
    for h in range(H + 1):
        for ell in range(h + 1):
            assert binom(h, ell) == binom(h, h - ell)
            assert binom(h, ell) == (binom(h - 1, ell) + binom(h - 1, ell - 1)
                                     if h else (1 if ell == 0 else 0))
        for m in range(h + 1):
            for p in range(h + 1):
                assert binom(h, m) * binom(m, p) == binom(h, p) * binom(h - p, m - p)
    for h in range(1, H + 1):
        for m in range(h + 1):
            alt = sum((-1) ** j * binom(h, j) for j in range(m + 1))
            assert alt == (-1) ** m * binom(h - 1, m)
            tail = sum((-1) ** j * binom(h, m + j) for j in range(h - m + 1))
            assert tail == binom(h - 1, m - 1)
