from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from contfrob.bounds import (
    bound_main,
    bound_strengthened,
    check_macbeath,
    check_main_bound,
    clint_predicted,
    dense_formula,
    middle_formula,
    sparse_formula,
)
from contfrob.intervals import IntervalUnion, EmptyOperandError, torus_project
from contfrob.semigroup import gap, h_fold

from conftest import F, U, unions


class TestBoundMain:
    @pytest.mark.parametrize("alpha,regime,value", [
        ("1/20", "sparse", "19"),
        ("1/12", "sparse", "11"),
        ("1/3", "middle", "2"),
        ("2/5", "middle", "8/5"),
        ("3/10", "middle", "12/5"),  # (7/10 + 3/10 * 1/3) * 3
        ("3/4", "dense", "1/2"),
        ("1", "dense", "0"),
    ])
    def test_values(self, alpha, regime, value):
        r = bound_main(alpha)
        assert (r.regime, r.value) == (regime, F(value))

    @pytest.mark.parametrize("alpha", ["1/10", "1/2"])
    def test_boundaries_agree(self, alpha):
        a = F(alpha)
        if a == F("1/10"):
            assert sparse_formula(a) == middle_formula(a) == bound_main(a).value == 9
        else:
            assert middle_formula(a) == dense_formula(a) == bound_main(a).value == 1

    def test_regimes_by_range(self):
        for n in range(1, 200):
            a = Fraction(n, 200)
            v = bound_main(a).value
            if a <= F("1/10"):
                assert v == sparse_formula(a)
            elif a <= F("1/2"):
                assert v == middle_formula(a)
            else:
                assert v == dense_formula(a)

    @pytest.mark.parametrize("alpha", [0, "-1/2", "3/2"])
    def test_rejects(self, alpha):
        with pytest.raises(ValueError):
            bound_main(alpha)

    def test_to_json(self):
        assert bound_main("3/4").to_json() == {"alpha": "3/4", "regime": "dense", "value": "1/2"}


class TestStrengthened:
    def test_equals_middle(self):
        assert bound_strengthened("1/20") == middle_formula(F("1/20")) == 19
        # at reciprocals of integers the middle and sparse formulas coincide
        for n in range(2, 30):
            assert bound_strengthened(Fraction(1, n)) == sparse_formula(Fraction(1, n))

    def test_exceeds_sparse_off_reciprocals(self):
        a = F("2/21")  # 1/a = 10.5
        assert bound_strengthened(a) > sparse_formula(a)

    def test_range(self):
        with pytest.raises(ValueError):
            bound_strengthened("3/5")


class TestMainBoundOnSets:
    @pytest.mark.parametrize("pairs", [
        [("2/3", 1)],
        [("1/4", "1/2"), ("1/2", 1)],
        [("1/3", "1/2"), ("5/6", 1)],
        [("1/10", "1/5"), ("9/10", 1)],
    ])
    def test_examples(self, pairs):
        assert check_main_bound(U(*pairs))

    @settings(max_examples=80, deadline=None)
    @given(unions(q=12, max_parts=4))
    def test_random(self, A):
        assume(A.inf > 0)
        assert gap(A).gap <= bound_main(A.measure()).value


class TestClint:
    def test_worked_example(self):
        A = U(("1/4", "1/2"), ("13/20", 1))
        assert A.measure() == F("3/5")
        pred = clint_predicted(A, 2)
        assert (pred.lo, pred.hi) == (F("4/5"), F("17/10"))
        assert U((pred.lo, pred.hi)).issubset(h_fold(A, 2))

    def test_below_threshold(self):
        A = U(("1/10", "1/5"), ("9/10", 1))  # kappa = floor(9/10 / 1/5) = 4
        assert clint_predicted(A, 7) is None
        assert clint_predicted(A, 8) is not None

    def test_empty(self):
        with pytest.raises(EmptyOperandError):
            clint_predicted(IntervalUnion(), 2)

    @settings(max_examples=80, deadline=None)
    @given(unions(q=8, max_parts=3))
    def test_prediction_inside_hA(self, A):
        lam, alpha = A.sup - A.inf, A.measure()
        kappa = int(lam / alpha)
        for h in range(max(1, 2 * kappa), 2 * kappa + 3):
            pred = clint_predicted(A, h)
            if pred is not None:
                assert U((pred.lo, pred.hi)).issubset(h_fold(A, h))


class TestMacbeath:
    def test_half_circle(self):
        T = torus_project(U((0, "1/2")))
        assert check_macbeath(T, T)

    @settings(max_examples=100, deadline=None)
    @given(unions(q=12, max_parts=3, lo=0, hi=2), unions(q=12, max_parts=3, lo=0, hi=2))
    def test_random(self, A, B):
        assert check_macbeath(torus_project(A), torus_project(B))
