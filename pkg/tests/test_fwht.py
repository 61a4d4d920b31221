import random

import numpy as np
import pytest

from dispersat.brute import brute_opt, enumerate_solutions
from dispersat.cnf import Assignment, CapabilityError, CnfFormula, UnsatError, InfeasibleError
from dispersat.fwht import (
    DenseTable,
    convolve,
    exact_diameter,
    exact_dispersion,
    fwht,
    indicator_table,
)
from dispersat.measures import (
    DispersionObjective,
    min_pairwise_distance,
    sum_pairwise_distance,
)


def A(s):
    return Assignment.from_string(s)


def random_formula(rng, n, k=3, m=None):
    m = m if m is not None else 2 * n
    clauses = [
        [rng.choice([-1, 1]) * v for v in rng.sample(range(1, n + 1), min(n, k))]
        for _ in range(m)
    ]
    return CnfFormula(n, clauses)


class TestTransform:
    def test_or_indicator(self):
        t = DenseTable(2, [0, 1, 1, 1])
        assert fwht(t).values.tolist() == [3, -1, -1, -1]

    def test_delta_to_constant(self):
        t = DenseTable(3, [1] + [0] * 7)
        assert fwht(t).values.tolist() == [1] * 8

    def test_involution_identity(self):
        rng = np.random.default_rng(0)
        v = rng.integers(-5, 6, size=64)
        t = DenseTable(6, v)
        assert (fwht(fwht(t)).values == 64 * v).all()

    def test_limit(self):
        with pytest.raises(CapabilityError):
            fwht(DenseTable(3, [0] * 8), limit=2)


class TestConvolve:
    def test_self_convolution_counts(self):
        f = DenseTable(2, [0, 1, 1, 1])
        assert convolve(f, f).values.tolist() == [3, 2, 2, 2]

    def test_delta_shift(self):
        a, b = 3, 5
        f = DenseTable(3, np.eye(8, dtype=np.int64)[a])
        g = DenseTable(3, np.eye(8, dtype=np.int64)[b])
        conv = convolve(f, g).values
        expected = np.zeros(8, dtype=np.int64)
        expected[a ^ b] = 1
        assert (conv == expected).all()

    def test_fubini(self):
        rng = np.random.default_rng(1)
        f = DenseTable(8, rng.integers(0, 2, size=256))
        g = DenseTable(8, rng.integers(0, 2, size=256))
        conv = convolve(f, g).values
        assert conv.sum() == f.values.sum() * g.values.sum()

    def test_matches_direct_double_sum(self):
        rng = np.random.default_rng(2)
        f = DenseTable(4, rng.integers(0, 2, size=16))
        g = DenseTable(4, rng.integers(0, 2, size=16))
        conv = convolve(f, g).values
        direct = [
            sum(int(f.values[x]) * int(g.values[x ^ y]) for x in range(16))
            for y in range(16)
        ]
        assert conv.tolist() == direct

    def test_zero_count_is_solution_count(self):
        rng = random.Random(3)
        for _ in range(10):
            n = rng.randint(2, 8)
            f = random_formula(rng, n)
            table = indicator_table(f)
            conv = convolve(table, table)
            assert conv.values[0] == len(enumerate_solutions(f))
            assert conv.values.min() >= 0
            assert conv.values.max() <= 1 << n


class TestExactDiameter:
    def test_or_clause(self):
        z1, z2 = exact_diameter(CnfFormula(2, [(1, 2)]))
        assert z1.distance(z2) == 2
        assert {z1, z2} == {A("01"), A("10")}

    def test_unique_solution(self):
        z1, z2 = exact_diameter(CnfFormula(2, [(1,), (-2,)]))
        assert z1 == z2 == A("10")

    def test_trivially_true(self):
        z1, z2 = exact_diameter(CnfFormula(5, []))
        assert z1.distance(z2) == 5

    def test_unsat(self):
        with pytest.raises(UnsatError):
            exact_diameter(CnfFormula(1, [(1,), (-1,)]))

    def test_agreement_with_brute(self):
        rng = random.Random(4)
        for _ in range(40):
            n = rng.randint(2, 9)
            f = random_formula(rng, n, k=rng.choice([2, 3]))
            sols = enumerate_solutions(f).members
            if not sols:
                with pytest.raises(UnsatError):
                    exact_diameter(f)
                continue
            diam = max(a.distance(b) for a in sols for b in sols)
            z1, z2 = exact_diameter(f)
            assert z1.distance(z2) == diam


class TestExactDispersion:
    def test_sum_example(self):
        wit = exact_dispersion(CnfFormula(2, [(1, 2)]), 3, DispersionObjective.SUM_PD)
        assert sum_pairwise_distance(wit) == 4

    def test_min_example(self):
        wit = exact_dispersion(CnfFormula(2, [(1, 2)]), 3, DispersionObjective.MIN_PD)
        assert min_pairwise_distance(wit) == 1
        assert sorted(z.to_string() for z in wit) == ["01", "10", "11"]

    def test_distinct_matches_brute(self):
        f = CnfFormula(3, [(1, 2, 3)])
        wit = exact_dispersion(f, 3, DispersionObjective.SUM_PD_DISTINCT)
        val, _ = brute_opt(f, 3, DispersionObjective.SUM_PD_DISTINCT)
        assert sum_pairwise_distance(wit) == val
        assert len(set(wit.members)) == 3

    def test_infeasible_distinct(self):
        with pytest.raises(InfeasibleError):
            exact_dispersion(
                CnfFormula(2, [(1,), (-2,)]), 2, DispersionObjective.MIN_PD
            )

    def test_unsat(self):
        with pytest.raises(UnsatError):
            exact_dispersion(
                CnfFormula(1, [(1,), (-1,)]), 2, DispersionObjective.SUM_PD
            )

    def test_work_limit(self):
        with pytest.raises(CapabilityError):
            exact_dispersion(CnfFormula(20, []), 4, DispersionObjective.SUM_PD)

    @pytest.mark.parametrize("objective", list(DispersionObjective))
    @pytest.mark.parametrize("s", [2, 3])
    def test_agreement_with_brute(self, objective, s):
        rng = random.Random(10 + s)
        done = 0
        while done < 12:
            n = rng.randint(2, 6)
            f = random_formula(rng, n)
            sols = enumerate_solutions(f).members
            if not sols:
                continue
            needs_set = objective is not DispersionObjective.SUM_PD
            if needs_set and len(sols) < s:
                continue
            val, _ = brute_opt(f, s, objective)
            wit = exact_dispersion(f, s, objective)
            measure = (
                min_pairwise_distance
                if objective is DispersionObjective.MIN_PD
                else sum_pairwise_distance
            )
            assert measure(wit) == val
            done += 1
