import itertools
import random
from fractions import Fraction

import pytest

from expanderlab.fp_core import DomainError
from expanderlab import real_expand as rex


# ---------------------------------------------------------------------------
# sets, star product, energy


def test_realset_validation():
    s = rex.RealSet([Fraction(1, 2), 1, 2])
    assert s.elements == (Fraction(1, 2), Fraction(1), Fraction(2))
    with pytest.raises(DomainError):
        rex.RealSet([])
    with pytest.raises(DomainError):
        rex.RealSet([0, 1])
    with pytest.raises(DomainError):
        rex.RealSet([-1, 1])
    with pytest.raises(DomainError):
        rex.RealSet([0.5, 1])  # floats are not exact rationals


def test_star_examples():
    assert rex.star(1, 2, 1, 2, 1) == (Fraction(2), Fraction(16))
    assert rex.star(1, 1, 1, 1, -1) == (Fraction(2), Fraction(2))
    with pytest.raises(DomainError):
        rex.f_real(0, 1, 1)


def test_star_injectivity_within_slope_pair():
    # inside fixed slope classes, equal star products force equal arguments
    alpha, alpha2 = Fraction(1, 2), Fraction(3)
    xs = [Fraction(1), Fraction(2), Fraction(5, 2)]
    pairs1 = [(x, alpha * x) for x in xs]
    pairs2 = [(x, alpha2 * x) for x in xs]
    seen = {}
    for (x, y) in pairs1:
        for (x2, y2) in pairs2:
            val = rex.star(x, y, x2, y2, 1)
            assert val not in seen
            seen[val] = (x, x2)


def test_mult_energy_examples():
    assert rex.mult_energy_real(rex.RealSet([1, 2])) == 6
    assert rex.mult_energy_real(rex.RealSet.geometric(2, 5)) == 85
    assert rex.mult_energy_real(rex.RealSet([5])) == 1
    assert rex.energy_bound_ok(rex.RealSet([1, 2]))


def test_energy_bound_battery():
    for seed in range(200):
        a = rex.random_rational_set(2 + seed % 30, seed)
        assert rex.energy_bound_ok(a)


# ---------------------------------------------------------------------------
# dyadic levels and the chain


def test_dyadic_levels_pair_example():
    lv = rex.dyadic_levels(rex.RealSet([1, 2]))
    assert sorted(map(str, lv.ratio_counts)) == ["1", "1/2", "2"]
    assert lv.ratio_counts[Fraction(1)] == 2
    assert lv.levels[1] == [Fraction(1)]
    assert sorted(lv.levels[0]) == [Fraction(1, 2), Fraction(2)]
    assert lv.selected == 1 and lv.d == 1
    assert lv.bound_ok


def test_dyadic_levels_geometric_census():
    a = rex.RealSet.geometric(2, 5)
    lv = rex.dyadic_levels(a)
    # class sizes 1,2,3,4,5,4,3,2,1 across the nine ratios
    sizes = sorted(lv.ratio_counts.values())
    assert sizes == [1, 1, 2, 2, 3, 3, 4, 4, 5]
    assert lv.energy == 85
    assert lv.bound_ok


def test_dyadic_needs_two_elements():
    with pytest.raises(DomainError):
        rex.dyadic_levels(rex.RealSet([3]))


def test_dyadic_existence_battery():
    for seed in range(300):
        a = rex.random_rational_set(2 + seed % 31, (seed, "dyadic"))
        assert rex.dyadic_levels(a).bound_ok


def test_chain_small_example_all_ks():
    a = rex.RealSet([1, 2, 3])
    for k in (1, 2, Fraction(1, 2), -1):
        ch = rex.solymosi_chain(a, k)
        assert ch.within_pair_products_ok
        assert ch.distinct_real_pairs_ok
        assert ch.interval_ordering_ok
        assert ch.f_sq_ge_4id
        assert ch.f_sq_ge_chain_sum


def test_chain_two_element_set():
    ch = rex.solymosi_chain(rex.RealSet([1, 2]), 1)
    assert 1 <= ch.d <= 3
    assert ch.f_sq_ge_4id


def test_chain_rejects_bad_k():
    a = rex.RealSet([1, 2])
    with pytest.raises(DomainError):
        rex.solymosi_chain(a, 0)
    with pytest.raises(DomainError):
        rex.solymosi_chain(a, -2)


def test_chain_k_minus_one_is_sum_chain():
    # k = -1 turns the product rule into the plain sumset
    a = rex.RealSet([1, 2, 3, 5])
    sums = {x + y for x in a for y in a}
    assert rex.f_image_real(a, -1) == len(sums)
    ch = rex.solymosi_chain(a, -1)
    assert ch.f_size == len(sums)
    assert ch.within_pair_products_ok


def test_chain_battery_exact_ks():
    for seed in range(120):
        a = rex.random_rational_set(2 + seed % 15, (seed, "chain"))
        for k in (1, 2, -1):
            ch = rex.solymosi_chain(a, k)
            assert ch.within_pair_products_ok, (seed, k)
            assert ch.distinct_real_pairs_ok, (seed, k)
            assert ch.interval_ordering_ok, (seed, k)
            assert ch.f_sq_ge_4id, (seed, k)
            assert ch.f_sq_ge_chain_sum, (seed, k)


def test_chain_battery_half_exponent():
    # non-integer exponent: float route with near-tie flagging
    for seed in range(40):
        a = rex.random_rational_set(2 + seed % 15, (seed, "chain-half"))
        ch = rex.solymosi_chain(a, Fraction(1, 2))
        assert ch.within_pair_products_ok, seed
        assert ch.distinct_real_pairs_ok, seed
        assert ch.f_sq_ge_4id, seed
        assert ch.interval_ordering_ok or ch.indeterminate, seed


def test_pp71_check():
    rep = rex.pp71_check(rex.RealSet.interval(8), 1)
    assert rep.holds  # the proven chain inequality
    assert rep.ratio > 0
    geo = rex.pp71_check(rex.RealSet.geometric(2, 8), 1)
    assert geo.holds
    # k = -1 consistency: f(A,A) is the sumset
    a = rex.RealSet.interval(8)
    rep_neg = rex.pp71_check(a, -1)
    assert rep_neg.lhs == max(
        len({x + y for x in a for y in a}), len(rex.product_set_real(a))
    )
    with pytest.raises(DomainError):
        rex.pp71_check(rex.RealSet([1, 2]), 1)


def test_pp71_battery():
    for seed in range(80):
        a = rex.random_rational_set(3 + seed % 20, (seed, "pp71"))
        for k in (1, 2, -1):
            assert rex.pp71_check(a, k).holds, (seed, k)


# ---------------------------------------------------------------------------
# curves


def test_curve_params_validation():
    with pytest.raises(DomainError):
        rex.CurveParams(0, 1)
    degenerate = rex.CurveParams(2, 2)  # allowed: used by diagonal sums
    assert not degenerate.nondegenerate
    with pytest.raises(DomainError):
        rex.curve_intersect(degenerate, rex.CurveParams(1, 2))


def test_known_intersection_instance():
    pts = rex.curve_intersect(rex.CurveParams(1, 2), rex.CurveParams(2, 1))
    assert len(pts) == 3
    rational = [q for q in pts if q.kind == "rational"]
    assert len(rational) == 1
    assert rational[0].y == Fraction(-3) and rational[0].yp == Fraction(-3)
    assert rational[0].z == Fraction(1)
    quad = sorted(
        (q for q in pts if q.kind == "quadratic"), key=lambda q: float(q.z)
    )
    assert len(quad) == 2
    # slope roots (-9 +/- sqrt(65))/4
    for q, sign in zip(quad, (-1, 1)):
        assert q.z.d == 65
        assert q.z.r == Fraction(-9, 4)
        assert q.z.s == Fraction(sign, 4)
    assert all(q.verified for q in pts)


def test_resultant_matches_direct_expansion():
    # (a-bz^2)(d^2 z - c^2) = (c-dz^2)(b^2 z - a^2), expanded directly
    rng = random.Random("resultant")
    for _ in range(50):
        a, b, c, d = (Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(4))
        coeffs = rex._resultant_coeffs(rex.CurveParams(a, b), rex.CurveParams(c, d))
        for _ in range(5):
            z = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            direct = (a - b * z * z) * (d * d * z - c * c) - (c - d * z * z) * (
                b * b * z - a * a
            )
            horner = sum(coef * z**i for i, coef in enumerate(coeffs))
            assert horner == direct


def test_intersections_exhaustive_battery():
    for a, b in itertools.permutations(range(1, 7), 2):
        for c, d in itertools.permutations(range(1, 7), 2):
            if (a, b) == (c, d):
                continue
            pts = rex.curve_intersect(rex.CurveParams(a, b), rex.CurveParams(c, d))
            assert len(pts) <= 3
            for q in pts:
                assert q.verified
                if q.kind != "cubic":
                    assert rex.curve_contains(rex.CurveParams(a, b), q.y, q.yp)
                    assert rex.curve_contains(rex.CurveParams(c, d), q.y, q.yp)
                else:
                    y, yp = q.y_float, q.yp_float
                    assert abs(a * y * y + a * a * y - b * yp * yp - b * b * yp) < 1e-6
                    assert abs(c * y * y + c * c * y - d * yp * yp - d * d * yp) < 1e-6


def test_identical_curves_rejected():
    with pytest.raises(DomainError):
        rex.curve_intersect(rex.CurveParams(1, 2), rex.CurveParams(1, 2))


def test_duality_random_quadruples():
    rng = random.Random("duality")
    for _ in range(1000):
        a, b = (Fraction(rng.randint(1, 40), rng.randint(1, 10)) for _ in range(2))
        y, yp = (
            Fraction(rng.randint(-40, 40) or 3, rng.randint(1, 10)) for _ in range(2)
        )
        on_first = rex.curve_contains(rex.CurveParams(a, b), y, yp)
        if y != 0 and yp != 0:
            assert on_first == rex.curve_contains(rex.CurveParams(y, yp), a, b)


def test_duality_constructed_incidences():
    # f(a, y) = f(y, a), so (y, a) always lies on the curve with parameters (a, y)
    rng = random.Random("duality2")
    for _ in range(200):
        a = Fraction(rng.randint(1, 20), rng.randint(1, 6))
        y = Fraction(rng.randint(1, 20), rng.randint(1, 6))
        assert rex.curve_contains(rex.CurveParams(a, y), y, a)
        assert rex.curve_contains(rex.CurveParams(y, a), a, y)


def test_quadratic_field_arithmetic():
    x = rex.QuadExt.make(Fraction(1, 2), Fraction(3), 5)
    y = rex.QuadExt.make(Fraction(-2), Fraction(1, 3), 5)
    assert float(x * y) == pytest.approx(float(x) * float(y))
    assert float(x + y) == pytest.approx(float(x) + float(y))
    assert (x * x.inverse()).r == 1 and (x * x.inverse()).s == 0
    folded = rex.QuadExt.make(0, 1, 18)  # sqrt(18) = 3 sqrt(2)
    assert folded.d == 2 and folded.s == 3


def test_root_isolation_irreducible_cubic():
    # z^3 - 2z - 5 is irreducible with a single real root near 2.0945
    roots = rex.real_roots_exact([-5, -2, 0, 1])
    assert len(roots) == 1
    assert isinstance(roots[0], rex.RootInterval)
    assert float(roots[0]) == pytest.approx(2.0945514815, abs=1e-9)
    # three real irrational roots: z^3 - 4z + 1
    roots3 = rex.real_roots_exact([1, -4, 0, 1])
    assert len(roots3) == 3
    vals = sorted(float(r) for r in roots3)
    for v in vals:
        assert abs(v**3 - 4 * v + 1) < 1e-9


# ---------------------------------------------------------------------------
# incidences


def test_incidence_count_brute():
    pts = [(Fraction(-3), Fraction(-3)), (Fraction(1), Fraction(1))]
    curves = [rex.CurveParams(1, 2), rex.CurveParams(2, 1)]
    rep = rex.incidence_count(pts, curves)
    assert rep.n_points == 2 and rep.n_curves == 2
    assert rep.incidences == 2  # (-3,-3) lies on both, (1,1) on neither


def test_pp73_tiny_example():
    a = rex.RealSet([1, 2])
    rep = rex.pp73_check(a, a)
    assert rep.path == "incidence"
    # full enumeration: 4 diagonal pairs... the curve sum splits 4 + 0 + 2
    assert rep.total_gamma_sum == 6
    assert rep.diag_sum == 4
    assert rep.mirror_sum == 0
    assert rep.offdiag_sum == 2
    assert rep.cs_holds
    assert rep.f_size == 3  # f(1,1)=2, f(1,2)=f(2,1)=6, f(2,2)=16


def test_pp73_decomposition_identity_and_cs():
    for seed in range(40):
        a = rex.random_rational_set(3 + seed % 7, (seed, "a73"))
        b = rex.random_rational_set(3 + (seed * 5) % 7, (seed, "b73"))
        rep = rex.pp73_check(a, b)
        if rep.path == "incidence":
            assert rep.total_gamma_sum == rep.diag_sum + rep.mirror_sum + rep.offdiag_sum
            assert rep.diag_bound_ok
            assert rep.cs_holds
        else:
            assert rep.easy_holds


def test_pp73_uses_easy_path_when_unbalanced():
    big = rex.RealSet.interval(17)
    tiny = rex.RealSet([1, 2])
    rep = rex.pp73_check(big, tiny)  # |B| = 2 < sqrt(17)
    assert rep.path == "easy"
    assert rep.balance_ok is False
    assert rep.easy_holds


def test_pp73_diag_curve_two_solutions():
    # on a diagonal curve, each y admits at most two partners y'
    a_val = Fraction(3)
    b = rex.RealSet([1, 2, 3, 4, 5])
    for y in b:
        partners = [
            yp for yp in b
            if rex.curve_contains(rex.CurveParams(a_val, a_val), y, yp)
        ]
        assert len(partners) <= 2


def test_realset_cannot_be_empty_or_inexact():
    with pytest.raises(DomainError):
        rex.RealSet([])
    with pytest.raises(DomainError):
        rex.RealSet([0.25])  # floats are rejected, only exact rationals
