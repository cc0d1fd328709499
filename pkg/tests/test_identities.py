import pytest

from clutters import (
    GroundSetTooLarge,
    NotStarSelfDual,
    SetFamily,
    StarSelfDualFamily,
    check_appendix,
    h_vector,
    random_star_selfdual,
    star,
    up_closure,
)
from clutters.vectors import binom, f_vector

from conftest import SINGLETON2, TRIANGLE, clutter


def test_construction_validates_pairing():
    with pytest.raises(NotStarSelfDual):
        StarSelfDualFamily(SetFamily(3, (0, 7, 1, 6)))  # two both-sided pairs
    with pytest.raises(NotStarSelfDual):
        StarSelfDualFamily(SetFamily(3, (0, 1, 2)))  # wrong count
    StarSelfDualFamily(SetFamily(3, (0, 1, 2, 3)))  # low half of each pair
    StarSelfDualFamily(SetFamily(1, (0,)))
    StarSelfDualFamily(SetFamily(1, (1,)))


def test_generator_is_star_fixed_and_deterministic():
    for t in (1, 2, 3, 5, 8):
        for seed in (0, 1, 42, 999):
            fam = random_star_selfdual(t, seed).family
            assert star(fam) == fam
            assert len(fam) == 1 << (t - 1)
            again = random_star_selfdual(t, seed).family
            assert again == fam


def test_generator_regression_t3_seed42():
    fam = random_star_selfdual(3, 42).family
    assert fam.members == (0, 3, 5, 6)


def test_generator_t4_middle_count():
    for seed in range(10):
        fv = f_vector(random_star_selfdual(4, seed).family)
        assert fv[2] == 3 == binom(4, 2) // 2


def test_generator_t1():
    for seed in range(8):
        fam = random_star_selfdual(1, seed).family
        assert fam.members in ((0,), (1,))


def test_generator_rejects_large_t():
    with pytest.raises(GroundSetTooLarge):
        random_star_selfdual(29, 0)


def test_check_appendix_rejects_non_star_family():
    with pytest.raises(NotStarSelfDual):
        check_appendix(SetFamily(3, (0, 1)))


def test_appendix_singleton_upset_t3():
    fam = up_closure(clutter(3, SINGLETON2)).family()
    assert h_vector(fam).values == (0, 1, 0, 0)
    report = check_appendix(fam)
    assert report["pass"]
    checks = report["checks"]
    assert checks["odd_t_block"] == "pass"
    assert checks["odd_h_relation"] == "pass"  # 2 h_2 + 3 h_3 = 0
    assert checks["eq24"] == "n/a"
    assert checks["eq27_block"] == "n/a"


def test_appendix_triangle_upset_t4():
    fam = up_closure(clutter(4, TRIANGLE)).family()
    hv = h_vector(fam)
    assert hv.values == (0, 0, 3, -2, 0)
    assert hv[4] == 0
    assert sum(k * hv[k] for k in range(2, 4)) == 0
    report = check_appendix(fam)
    assert report["pass"]
    checks = report["checks"]
    assert checks["eq24"] == "pass"
    assert checks["weighted_h_sum"] == "pass"
    assert checks["eq27_block"] == "pass"  # t = 4: middle index is even
    assert checks["odd_t_block"] == "n/a"


def test_middle_relations_not_applicable_at_t6():
    # at t = 2 mod 4 the middle-index relations genuinely fail, so the
    # suite must not apply them: h = (0,0,3,-2,0,0,0) gives
    # h_3 + (1/2) sum C(k,3) h_k = -2, not 0
    fam = up_closure(clutter(6, TRIANGLE)).family()
    hv = h_vector(fam)
    assert hv.values == (0, 0, 3, -2, 0, 0, 0)
    lhs2 = 2 * hv[3] + sum(binom(k, 3) * hv[k] for k in range(4, 6))
    assert lhs2 == -4  # the relation would demand 0
    report = check_appendix(fam)
    assert report["pass"]
    assert report["checks"]["eq27_block"] == "n/a"
    assert report["checks"]["eq27_eq9_block"] == "n/a"
    assert report["checks"]["eq9_block"] == "pass"  # parity-robust


def test_middle_relations_applicable_at_t4_and_t8():
    for t, seed in ((4, 5), (8, 5)):
        report = check_appendix(random_star_selfdual(t, seed))
        assert report["checks"]["eq27_block"] == "pass"
        assert report["checks"]["eq27_eq9_block"] == "pass"


def test_appendix_random_sweep_all_parities():
    for t in (3, 4, 5, 6, 8):
        for seed in range(100):
            report = check_appendix(random_star_selfdual(t, seed))
            assert report["pass"], (t, seed, report["checks"])


def test_appendix_named_check_applicability():
    odd = check_appendix(random_star_selfdual(5, 0))["checks"]
    even = check_appendix(random_star_selfdual(6, 0))["checks"]
    mod4 = check_appendix(random_star_selfdual(8, 0))["checks"]
    always = {"eq28", "h_pair_sum", "h_complement_form", "eq21", "eq14",
              "f_delta", "eq23", "eq25", "weighted_h_sum"}
    for name in always:
        assert odd[name] == even[name] == mod4[name] == "pass"
    assert odd["eq24"] == "n/a" and even["eq24"] == "pass"
    assert odd["odd_t_block"] == "pass" and even["odd_t_block"] == "n/a"
    assert odd["eq29"] == "n/a" and even["eq29"] == "pass"
    assert even["eq27_block"] == "n/a" and mod4["eq27_block"] == "pass"


def test_ht_vanishes_for_selfdual_upfamilies_even_t(enum4):
    for cl in enum4.items:
        fam = up_closure(cl).family()
        assert h_vector(fam)[4] == 0
        assert check_appendix(fam)["pass"]


def test_odd_sign_correction_matters_at_t3():
    # the t = 3 instances only pass with the (-1)^((t-1)/2) factor
    fam = up_closure(clutter(3, SINGLETON2)).family()
    fv = f_vector(fam)
    hv = h_vector(fam)
    lo = fv[0] - fv[1]
    assert hv[3] != binom(2, 1) - 2 * lo  # unsigned form fails
    assert hv[3] == -binom(2, 1) - 2 * lo  # signed form holds
