import math
import random

import pytest

from circorbits import (
    CirculantGraph,
    DisconnectedGraph,
    DoesNotClose,
    NotLatticePoint,
    bcounts_for_length,
    binomial,
    connected_graphs,
    count_lyndon,
    count_orbits_l,
    count_orbits_lk,
    count_orbits_lk_unreduced,
    divisors,
    predicted_repetition,
    sum_reduction_check,
)


def test_reduced_big_example():
    G = CirculantGraph(440, 5, 14)
    report = count_orbits_lk(G, 360, 240)
    assert report.omega == 9
    assert [(t.m, t.mu) for t in report.terms] == [(1, 1), (3, -1)]
    expected = 440 * (math.comb(360, 240) - math.comb(120, 80)) // 360
    assert report.count == expected


def test_reduced_small_examples():
    G9 = CirculantGraph(9, 1, 4)
    report = count_orbits_lk(G9, 9, 3)
    assert report.count == 84
    assert report.omega == 2
    assert [(t.m, t.mu) for t in report.terms] == [(1, 1)]

    G5 = CirculantGraph(5, 1, 4)
    report = count_orbits_lk(G5, 3, 1)
    assert report.count == 0
    assert report.omega is None
    assert report.terms == ()


def test_reduced_requires_connected_and_valid_lk():
    with pytest.raises(DisconnectedGraph):
        count_orbits_lk(CirculantGraph(12, 2, 4), 6, 3)
    G = CirculantGraph(5, 1, 4)
    with pytest.raises(ValueError):
        count_orbits_lk(G, 0, 0)
    with pytest.raises(ValueError):
        count_orbits_lk(G, 3, 4)


def test_total_examples():
    total, reports = count_orbits_l(CirculantGraph(21, 4, 10), 15)
    assert total == 3822
    assert [(r.k, r.omega, r.count) for r in reports] == [(4, 4, 1911), (11, 6, 1911)]

    G5 = CirculantGraph(5, 1, 4)
    assert count_orbits_l(G5, 1)[0] == 0
    assert count_orbits_l(G5, 5)[0] == 2


def test_unreduced_big_example_q_blocks():
    G = CirculantGraph(440, 5, 14)
    reduced = count_orbits_lk(G, 360, 240)
    unreduced = count_orbits_lk_unreduced(G, 360, 240)
    assert unreduced.count == reduced.count
    assert sorted({t.q for t in unreduced.terms}) == [1, 2, 4, 5, 8, 10, 20, 40]


def test_unreduced_matches_lyndon_block_sum():
    G = CirculantGraph(9, 1, 4)
    report = count_orbits_lk_unreduced(G, 9, 3)
    assert report.count == 84
    # per-block totals are (n/q) * (Lyndon count at (l/q, k/q))
    assert 9 * count_lyndon(9, 3) + 3 * count_lyndon(3, 1) == 84

    G7 = CirculantGraph(7, 1, 3)
    single = count_orbits_lk_unreduced(G7, 3, 2)
    assert {t.q for t in single.terms} == {1}
    assert single.count == count_orbits_lk(G7, 3, 2).count


def test_unreduced_rejects_non_lattice_points():
    with pytest.raises(NotLatticePoint):
        count_orbits_lk_unreduced(CirculantGraph(5, 1, 4), 3, 1)


def test_reduced_equals_unreduced_sweep():
    for G in connected_graphs(12):
        for l in range(1, 25):
            for c in bcounts_for_length(G, l):
                red = count_orbits_lk(G, c.l, c.k)
                unred = count_orbits_lk_unreduced(G, c.l, c.k)
                assert red.count == unred.count, (G, c)
                # integrality guard: l divides n * (signed term sum) on both routes
                for rep in (red, unred):
                    assert G.n * sum(t.mu * t.binomial for t in rep.terms) == rep.count * c.l


def test_count_equals_lyndon_bijection_sum():
    for G in connected_graphs(12):
        for l in range(1, 25):
            for c in bcounts_for_length(G, l):
                gamma = math.gcd(c.l, c.k)
                expected = sum(
                    (G.n // q) * count_lyndon(c.l // q, c.k // q)
                    for q in divisors(gamma)
                    if math.gcd(q, c.omega) == 1
                )
                assert count_orbits_lk(G, c.l, c.k).count == expected, (G, c)


def test_totals_decompose_over_classes():
    for G in connected_graphs(10):
        for l in range(1, 13):
            total, reports = count_orbits_l(G, l)
            assert total == sum(r.count for r in reports)


def test_sum_reduction_examples():
    f = {t: binomial(360 // t, 240 // t) for t in divisors(120)}
    lhs, rhs = sum_reduction_check(120, 9, f)
    assert lhs == rhs == math.comb(360, 240) - math.comb(120, 80)

    f1 = {1: 7}
    assert sum_reduction_check(1, 5, f1) == (7, 7)

    f12 = {t: t for t in divisors(12)}
    assert sum_reduction_check(12, 4, f12) == (-1, -1)


def test_sum_reduction_validates_inputs():
    with pytest.raises(ValueError):
        sum_reduction_check(0, 1, {1: 1})
    with pytest.raises(ValueError):
        sum_reduction_check(1, 0, {1: 1})


def test_sum_reduction_random_functions():
    rng = random.Random(1729)
    for _ in range(200):
        gamma = rng.randint(1, 120)
        omega = rng.randint(1, 60)
        f = {t: rng.randint(-10**6, 10**6) for t in divisors(gamma)}
        lhs, rhs = sum_reduction_check(gamma, omega, f)
        assert lhs == rhs


def test_predicted_repetition_examples():
    G9 = CirculantGraph(9, 1, 4)
    assert predicted_repetition(G9, "aab" * 3) == 1

    G5 = CirculantGraph(5, 1, 4)
    assert predicted_repetition(G5, "a" * 10) == 2
    assert predicted_repetition(G5, "ab") == 1  # primitive closing word

    with pytest.raises(DoesNotClose):
        predicted_repetition(G5, "aba")
