import pytest

from krpoly import (
    DominantWeight,
    KRParams,
    LevelMismatch,
    b_lower,
    b_upper,
    check_perfect,
    dominant_weights,
    enumerate_crystal,
    eps_profile,
    ground_state_path,
    phi_profile,
)
from krpoly.perfect import profile_uniqueness_table

from conftest import all_params


def test_dominant_weight_enumeration():
    weights = dominant_weights(2, 1)
    assert [w.coeffs for w in weights] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert all(w.level == 1 for w in weights)
    assert len(dominant_weights(3, 2)) == 10


def test_level_mismatch_errors():
    with pytest.raises(LevelMismatch):
        b_lower(DominantWeight((1, 0, 0)), KRParams(2, 1, 2))
    with pytest.raises(LevelMismatch):
        b_upper(DominantWeight((1, 0)), KRParams(2, 1, 1))
    with pytest.raises(LevelMismatch):
        ground_state_path(DominantWeight((2, 0, 0)), KRParams(2, 1, 1), 4)


def test_b_lower_reads_coefficients_without_wraparound():
    # entry at (p, q) is coefficient p+q-r; top row a_1..a_r, bottom a_{n-r+1}..a_n
    weight = DominantWeight((0, 1, 0, 2))  # level 3, n = 3
    b = b_lower(weight, KRParams(3, 2, 3))
    assert b.rows == ((1, 0), (0, 2))
    assert eps_profile(b) == weight.coeffs


def test_b_lower_profile_for_corner_weight():
    for params in all_params(3, 2):
        weight = DominantWeight(
            tuple(params.s if t == params.r else 0 for t in range(params.n + 1))
        )
        b = b_lower(weight, params)
        assert b.eps(params.r) == params.s
        assert all(b.eps(t) == 0 for t in range(params.n + 1) if t != params.r)


def test_b_upper_reads_coefficients_mod_n_plus_one():
    weight = DominantWeight((2, 0, 0))  # level 2 at n = 2, all weight on node 0
    b = b_upper(weight, KRParams(2, 1, 2))
    # cells (p, q) carry coefficient (p + q) mod 3; only p+q = 0 mod 3 is hit
    assert b.rows == ((0,), (2,))
    assert phi_profile(b) == weight.coeffs


def test_b_upper_last_row_reads_initial_coefficients():
    # bottom row (q = n) carries a_0, a_1, ..., a_{r-1}
    weight = DominantWeight((1, 1, 0, 1))
    params = KRParams(3, 2, 3)
    b = b_upper(weight, params)
    assert tuple(b.a(p, params.n) for p in range(1, params.r + 1)) == (1, 1)
    assert phi_profile(b) == weight.coeffs


def test_profiles_match_exhaustive_uniqueness_search():
    for params in all_params(3, 2):
        crystal = enumerate_crystal(params)
        eps_hits = profile_uniqueness_table(
            {b: eps_profile(b) for b in crystal}, params.s
        )
        phi_hits = profile_uniqueness_table(
            {b: phi_profile(b) for b in crystal}, params.s
        )
        for weight in dominant_weights(params.n, params.s):
            assert eps_hits[weight.coeffs] == [b_lower(weight, params)]
            assert phi_hits[weight.coeffs] == [b_upper(weight, params)]


def test_profile_sums_are_at_least_the_level():
    for params in all_params(3, 2):
        for b in enumerate_crystal(params):
            assert sum(eps_profile(b)) >= params.s
            assert sum(phi_profile(b)) >= params.s


def test_check_perfect_vector_crystal():
    report = check_perfect(KRParams(2, 1, 1))
    assert report.ok
    assert report.cardinality == 3
    assert report.tensor_square_connected
    assert report.min_profile_level == 1
    assert report.eps_profiles_bijective and report.phi_profiles_bijective
    assert report.formulas_match_search


def test_check_perfect_sweep_small():
    for params in all_params(3, 2):
        assert check_perfect(params).ok


def test_four_cycle_mimic_fails_uniqueness():
    # A ->1 B ->2 C ->1 D ->0 A: profiles of B and D coincide at level 1
    profiles = {
        "A": (0, 0, 0),
        "B": (0, 1, 0),
        "C": (0, 0, 1),
        "D": (0, 1, 0),
    }
    hits = profile_uniqueness_table(profiles, 1)
    assert sorted(hits[(0, 1, 0)]) == ["B", "D"]


def test_ground_state_path_full_rotation():
    # r = n: the weight cycle has period n+1 and the rows shift by one
    weight = DominantWeight((1, 0, 2, 0))
    params = KRParams(3, 3, 3)
    path = ground_state_path(weight, params, 8)
    assert [w.coeffs for w in path.weights[:5]] == [
        (1, 0, 2, 0),
        (0, 1, 0, 2),
        (2, 0, 1, 0),
        (0, 2, 0, 1),
        (1, 0, 2, 0),
    ]
    assert path.period == 4
    assert path.elements[0].rows == ((1, 0, 2),)
    assert path.elements[1].rows == ((0, 1, 0),)
    assert path.elements[3].rows == ((0, 2, 0),)


def test_ground_state_path_two_row_case():
    # r = n-1 with odd n: weights slide backwards by two
    weight = DominantWeight((1, 1, 0, 1))
    path = ground_state_path(weight, KRParams(3, 2, 3), 6)
    assert [w.coeffs for w in path.weights[:3]] == [
        (1, 1, 0, 1),
        (0, 1, 1, 1),
        (1, 1, 0, 1),
    ]
    assert path.elements[0].rows == ((1, 1), (1, 1))
    assert path.period == 2


def test_ground_state_path_one_hot_weight():
    params = KRParams(3, 2, 2)
    path = ground_state_path(DominantWeight((2, 0, 0, 0)), params, 8)
    for k, w in enumerate(path.weights):
        hot = w.coeffs.index(2)
        assert hot == (-k * params.r) % (params.n + 1)
        assert sum(w.coeffs) == 2


def test_period_divides_rotation_order():
    import math

    for params in all_params(3, 2):
        weight = dominant_weights(params.n, params.s)[1]
        path = ground_state_path(weight, params, 3 * (params.n + 1))
        order = (params.n + 1) // math.gcd(params.n + 1, params.r)
        assert path.period is not None and order % path.period == 0
