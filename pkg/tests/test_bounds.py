import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trifree.bounds import (
    FLOAT_TOL,
    NotApplicable,
    antipodal_size,
    binomial,
    bound_report,
    fixed_bit_size,
    frankl_bound,
    level_bound,
    lower_bound_asymptotic,
    lower_bound_probabilistic,
    optimal_sampling_probability,
    paper_relaxation_chain,
    select_antipodal_prime,
    shadow_sum_r2,
    triangle_count_formula,
    upper_bound_level_sum,
    upper_bound_r2,
    upper_bound_r2_exact,
)
from trifree.core import Params, ParamError

import brute


def valid_grid(n_max, n_min=1):
    return [(n, r) for n in range(n_min, n_max + 1) for r in range(2, 2 * n // 3 + 1, 2)]


def test_binomial():
    assert binomial(6, 2) == 15
    assert binomial(0, 0) == 1
    assert binomial(64, 32) == brute.pascal(64, 32) == 1832624140942590534
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


@given(st.integers(0, 80), st.integers(-2, 82))
def test_binomial_matches_pascal(n, k):
    assert binomial(n, k) == brute.pascal(n, k)


def test_triangle_count_formula_examples():
    assert triangle_count_formula(Params(3, 2)) == 8 == len(brute.triangles(brute.strings(3), 2))
    assert triangle_count_formula(Params(6, 2)) == 1280
    assert triangle_count_formula(Params(4, 4, exploratory=True)) == 0
    with pytest.raises(ParamError):
        triangle_count_formula(Params(5, 3, exploratory=True))


def test_triangle_count_formula_brute_force_small():
    for n, r in valid_grid(6):
        assert triangle_count_formula(Params(n, r)) == len(brute.triangles(brute.strings(n), r))


def test_optimal_probability():
    assert optimal_sampling_probability(Params(3, 2)) == pytest.approx(math.sqrt(2 / 6), abs=1e-12)
    assert optimal_sampling_probability(Params(6, 2)) == pytest.approx(0.12909944, abs=1e-8)
    assert optimal_sampling_probability(Params(4, 4, True), with_flag=True) == (1.0, True)
    assert optimal_sampling_probability(Params(6, 2), with_flag=True)[1] is False


def test_optimal_probability_maximises_expectation():
    # E[X - Y] = 2^n p - p^3 T, checked against a fine grid of p
    params = Params(8, 4)
    t = triangle_count_formula(params)
    f = lambda p: 2**8 * p - p**3 * t
    p_star = optimal_sampling_probability(params)
    grid = [i / 20000 for i in range(1, 20001)]
    assert f(p_star) >= max(f(p) for p in grid) - 1e-9
    assert f(p_star) == pytest.approx(lower_bound_probabilistic(params), rel=1e-12)


def test_lower_bound_probabilistic_examples():
    assert lower_bound_probabilistic(Params(6, 2)) == pytest.approx(5.50824, abs=1e-5)
    assert lower_bound_probabilistic(Params(3, 2)) == pytest.approx(3.07920, abs=1e-5)
    for n, r in valid_grid(30):
        p = Params(n, r)
        expected = 2**n * optimal_sampling_probability(p) * 2 / 3
        assert lower_bound_probabilistic(p) == pytest.approx(expected, rel=1e-12)


def test_lower_bound_asymptotic():
    assert lower_bound_asymptotic(Params(6, 2)) == pytest.approx(0.78578, abs=1e-5)
    assert lower_bound_asymptotic(Params(6, 2)) <= lower_bound_probabilistic(Params(6, 2))
    assert lower_bound_asymptotic(Params(12, 2)) <= lower_bound_probabilistic(Params(12, 2))


def test_bounds_uncapped_in_n():
    p = Params(500, 100)
    assert triangle_count_formula(p) > 2**500
    assert math.isfinite(lower_bound_probabilistic(p))
    assert lower_bound_asymptotic(p) <= lower_bound_probabilistic(p)
    total, _ = upper_bound_level_sum(Params(300, 20))
    assert total < 2**300


def test_antipodal_size():
    assert antipodal_size(9, 3) == 32
    assert antipodal_size(6, 2) == 16
    for p in (2, 3, 5, 7):
        assert antipodal_size(p, p) == 2**p
    with pytest.raises(ParamError):
        antipodal_size(10, 3)


def test_select_antipodal_prime():
    assert select_antipodal_prime(9, 2) == 3
    assert select_antipodal_prime(6, 2) is None
    assert select_antipodal_prime(15, 2) == 3
    assert select_antipodal_prime(9, 4) is None


def test_select_antipodal_prime_brute():
    for n in range(1, 60):
        for r in range(2, n, 2):
            cands = [p for p in range(2, n + 1)
                     if all(p % d for d in range(2, p)) and n % p == 0 and r % p and n // p > r]
            want = min(cands, key=lambda p: (-(n // p + p - 1), p)) if cands else None
            assert select_antipodal_prime(n, r) == want


def test_fixed_bit_size():
    assert fixed_bit_size(Params(6, 4)) == 9
    assert fixed_bit_size(Params(3, 2)) == 2
    assert fixed_bit_size(Params(9, 4)) == 15


def test_frankl_bound():
    assert frankl_bound(6, 2, 3) == 10
    assert frankl_bound(8, 2, 3) == 14
    for n in range(2, 10):
        assert frankl_bound(n, 1, 2) == 1
    with pytest.raises(NotApplicable):
        frankl_bound(5, 2, 3)


def test_frankl_bound_holds_exhaustively():
    # largest family of 2-subsets of [6] with no 3 pairwise disjoint members
    from itertools import combinations
    pairs = list(combinations(range(6), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        fam = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(fam) <= best:
            continue
        if any(not (set(a) & set(b)) and not (set(a) & set(c)) and not (set(b) & set(c))
               for a, b, c in combinations(fam, 3)):
            continue
        best = len(fam)
    assert best <= frankl_bound(6, 2, 3)


def test_upper_bound_r2():
    assert upper_bound_r2(4) == 13
    assert upper_bound_r2(6) == 37
    for n in range(1, 31):
        assert upper_bound_r2_exact(n) == shadow_sum_r2(n)
        assert upper_bound_r2(n) >= upper_bound_r2_exact(n)
        assert upper_bound_r2(n) - upper_bound_r2_exact(n) < 1


def test_level_bound_examples():
    p = Params(8, 4)
    assert level_bound(p, 3) == (32, "shadow")
    assert level_bound(p, 2) == (28, "trivial")
    assert level_bound(p, 5) == (32, "cover")
    with pytest.raises(NotApplicable):
        level_bound(Params(9, 6), 3)


def test_level_sum_example():
    total, prof = upper_bound_level_sum(Params(8, 4))
    assert total == 184
    assert list(prof.per_level) == [1, 8, 28, 32, 46, 32, 28, 8, 1]
    assert prof.total == total


def test_level_bound_r2_matches_shadow_argument():
    for n in range(4, 20):
        p = Params(n, 2)
        for k in range(2, n // 2 + 1):
            assert level_bound(p, k)[0] == min(binomial(n, k), 2 * binomial(n, k - 1) // k)


def test_level_sum_profile_properties():
    for n, r in valid_grid(40):
        if 2 * r > n:
            continue
        total, prof = upper_bound_level_sum(Params(n, r))
        assert sum(prof.per_level) == total
        for k in range(n + 1):
            assert prof.per_level[k] == prof.per_level[n - k]
            assert prof.per_level[k] <= binomial(n, k)


def test_frankl_applicability_never_fails_on_valid_grid():
    for n, r in valid_grid(40):
        if 2 * r > n:
            continue
        h = r // 2
        for k in range(h + 1, n // 2 + 1):
            assert n - (k - h) >= 3 * h
            level_bound(Params(n, r), k)  # must not raise


def test_simplified_level_bound_is_exact():
    # 2 C(n, k-h) C(n-k+h-1, h-1) / C(k, h) == C(n, k) r / (n - k + h)
    for n, r in valid_grid(30):
        h = r // 2
        for k in range(h + 1, n // 2 + 1):
            lhs = Fraction(2 * binomial(n, k - h) * binomial(n - k + h - 1, h - 1), binomial(k, h))
            assert lhs == Fraction(binomial(n, k) * r, n - k + h)


def test_relaxation_chain_monotone():
    for n, r in valid_grid(30):
        if 2 * r > n:
            continue
        p = Params(n, r)
        total, _ = upper_bound_level_sum(p)
        first, second, third = paper_relaxation_chain(p)
        assert total <= first <= second <= third
    first, second, third = paper_relaxation_chain(Params(6, 2))
    assert first == 46
    assert third == 2 * (1 + 6 + Fraction(21 * 2, 7) + Fraction(35 * 2, 7))


def test_level_sum_not_applicable():
    with pytest.raises(NotApplicable):
        upper_bound_level_sum(Params(9, 6))
    with pytest.raises(NotApplicable):
        upper_bound_level_sum(Params(3, 2))


def test_bound_report_examples():
    rep = bound_report(Params(6, 2))
    assert rep.lower_probabilistic == pytest.approx(5.50824, abs=1e-5)
    assert rep.upper_r2 == 37
    assert rep.upper_level_sum == 36
    assert rep.triangle_count == 1280
    assert rep.upper_applicable

    rep = bound_report(Params(9, 6))
    assert rep.upper_level_sum is None and not rep.upper_applicable
    assert "upper_level_sum" in rep.reasons

    rep = bound_report(Params(9, 4))
    assert rep.antipodal is None
    assert rep.fixed_bit == 15


def test_bound_report_lower_below_upper():
    for n, r in valid_grid(40):
        rep = bound_report(Params(n, r))
        assert 0 < rep.optimal_probability <= 1
        assert rep.triangle_count >= 0
        if 2 * r > n:
            continue
        lows = rep.lower_values()
        lows["asymptotic"] = rep.lower_asymptotic
        for lo in lows.values():
            for hi in rep.upper_values().values():
                assert lo <= hi + FLOAT_TOL


def test_bound_report_json_exact_strings():
    d = bound_report(Params(60, 20)).to_dict()
    assert d["triangle_count"] == str(triangle_count_formula(Params(60, 20)))
    assert isinstance(d["lower_probabilistic"], float)
