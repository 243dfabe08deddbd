import random
from fractions import Fraction as F

import pytest

from lowerprev.simplex import (
    Constraint,
    LinearProgram,
    LPFormatError,
    LPStatus,
    Relation,
    solve,
)

from .oracles import brute_force_lp

GE, EQ = Relation.GE, Relation.EQ


def lp(objective, rows, nonneg=True):
    return LinearProgram.make(objective, rows, nonneg)


class TestFrozenExamples:
    def test_single_active_bound(self):
        out = solve(lp([1], [([1], GE, F(3, 10))], nonneg=False))
        assert out.status is LPStatus.OPTIMAL
        assert out.value == F(3, 10)

    def test_infeasible_bounds_exceed_total(self):
        # lower bounds sum to 6/5 > 1, so no feasible point exists
        out = solve(
            lp([0, 0], [([1, 0], GE, F(3, 5)), ([0, 1], GE, F(3, 5)), ([1, 1], EQ, 1)])
        )
        assert out.status is LPStatus.INFEASIBLE
        assert out.certificate is not None

    def test_vertex_of_segment(self):
        out = solve(
            lp([2, 1], [([1, 0], GE, F(3, 10)), ([0, 1], GE, F(1, 2)), ([1, 1], EQ, 1)])
        )
        assert out.status is LPStatus.OPTIMAL
        assert out.value == F(13, 10)
        assert out.optimizer == (F(3, 10), F(7, 10))

    def test_unbounded(self):
        out = solve(lp([-1], [([1], GE, 0)]))
        assert out.status is LPStatus.UNBOUNDED

    def test_free_variable_split(self):
        out = solve(lp([1], [([1], GE, -5)], nonneg=False))
        assert out.status is LPStatus.OPTIMAL
        assert out.value == -5

    def test_no_constraints(self):
        assert solve(lp([1], [])).value == 0
        assert solve(lp([-1], [])).status is LPStatus.UNBOUNDED
        assert solve(lp([1], [], nonneg=False)).status is LPStatus.UNBOUNDED

    def test_width_mismatch(self):
        with pytest.raises(LPFormatError):
            LinearProgram((F(1),), (Constraint((F(1), F(2)), GE, F(0)),), (True,))
        with pytest.raises(LPFormatError):
            LinearProgram((), (), ())


def random_program(rng, nvars, nrows):
    objective = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(nvars)]
    rows = []
    for _ in range(nrows):
        coeffs = [F(rng.randint(-2, 3), 1) for _ in range(nvars)]
        rel = rng.choice([GE, EQ])
        rhs = F(rng.randint(-4, 4), rng.randint(1, 2))
        rows.append((coeffs, rel, rhs))
    # keep the feasible set bounded: total mass capped
    rows.append(([F(1)] * nvars, EQ, F(rng.randint(1, 3))))
    return lp(objective, rows)


class TestAgainstVertexEnumeration:
    def test_random_small_programs(self):
        rng = random.Random(20240811)
        statuses = set()
        for _ in range(120):
            program = random_program(rng, rng.randint(2, 3), rng.randint(1, 3))
            got = solve(program)
            expected_status, expected_value = brute_force_lp(program)
            statuses.add(got.status)
            assert got.status.value == expected_status
            if got.status is LPStatus.OPTIMAL:
                assert got.value == expected_value
        assert LPStatus.OPTIMAL in statuses and LPStatus.INFEASIBLE in statuses

    def test_determinism(self):
        rng = random.Random(7)
        program = random_program(rng, 3, 3)
        first = solve(program)
        for _ in range(3):
            again = solve(program)
            assert again == first


class TestCertificates:
    def test_optimizer_feasible_exactly(self):
        rng = random.Random(99)
        for _ in range(60):
            program = random_program(rng, 3, 2)
            out = solve(program)
            if out.status is not LPStatus.OPTIMAL:
                continue
            for row in program.constraints:
                lhs = sum(a * v for a, v in zip(row.coeffs, out.optimizer))
                assert lhs == row.rhs if row.relation is EQ else lhs >= row.rhs
            assert all(v >= 0 for v in out.optimizer)

    def test_farkas_certificate_separates(self):
        rng = random.Random(5)
        found = 0
        for _ in range(150):
            program = random_program(rng, 2, 3)
            out = solve(program)
            if out.status is not LPStatus.INFEASIBLE:
                continue
            found += 1
            y = out.certificate
            total = F(0)
            for mult, row in zip(y, program.constraints):
                if row.relation is GE:
                    assert mult >= 0
                total += mult * row.rhs
            assert total > 0
            for j in range(len(program.objective)):
                column = sum(
                    mult * row.coeffs[j] for mult, row in zip(y, program.constraints)
                )
                assert column <= 0
        assert found > 5


class TestDuality:
    def test_primal_equals_hand_built_dual(self):
        # min c.x st Ax >= b, x >= 0  <->  max b.y st A^T y <= c, y >= 0,
        # the latter posed as min -b.y with negated rows.
        rng = random.Random(13)
        checked = 0
        for _ in range(80):
            nvars, nrows = rng.randint(2, 3), rng.randint(2, 3)
            A = [[F(rng.randint(-2, 3)) for _ in range(nvars)] for _ in range(nrows)]
            b = [F(rng.randint(-3, 0)) for _ in range(nrows)]  # x = 0 feasible
            c = [F(rng.randint(0, 3)) for _ in range(nvars)]  # bounded below
            primal = lp(c, [(A[i], GE, b[i]) for i in range(nrows)])
            dual = lp(
                [-bi for bi in b],
                [([-A[i][j] for i in range(nrows)], GE, -c[j]) for j in range(nvars)],
            )
            p = solve(primal)
            d = solve(dual)
            assert p.status is LPStatus.OPTIMAL
            assert d.status is LPStatus.OPTIMAL
            assert p.value == -d.value
            checked += 1
        assert checked == 80
