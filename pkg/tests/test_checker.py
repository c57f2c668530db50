from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fuzznorm.checker import (builtin_tnorm_universe, check_archimedean,
                              check_axioms, check_cancellation,
                              check_limit_property,
                              check_strict_monotonicity, classify_uninorm,
                              verify_implication)
from fuzznorm.connectives import (BUILTIN_TNORMS, Connective, Role, S_L, S_P,
                                  T_D, T_L, T_M, T_P, construct_nullnorm,
                                  construct_uninorm_max,
                                  construct_uninorm_min, power_iterate)
from fuzznorm.errors import BudgetExceededError, DomainError
from fuzznorm.reports import (GridDomain, SearchBudget, Verdict, dumps)
from fuzznorm.tables import enumerate_chain_tnorm_tables, uniform_chain

F = Fraction
D10 = GridDomain(10)


class TestAxioms:
    def test_builtin_tnorms_pass(self):
        for conn in BUILTIN_TNORMS:
            rep = check_axioms(conn, D10)
            assert rep.verdict is Verdict.HOLDS, conn.name
            assert [c.property_id for c in rep.children] == [
                "T1:commutativity", "T2:associativity",
                "T3:monotonicity", "T4:boundary"]

    def test_uninorm_axioms(self):
        u = construct_uninorm_min(F(1, 2), T_P, S_P)
        rep = check_axioms(u, D10)
        assert rep.verdict is Verdict.HOLDS
        assert rep.child("U4:identity").details["identity"] == "1/2"

    def test_nullnorm_axioms(self):
        f = construct_nullnorm(S_L, F(1, 2), T_L)
        rep = check_axioms(f, D10)
        assert rep.verdict is Verdict.HOLDS
        assert rep.child("F4:absorbing").details["absorber"] == "1/2"

    def test_projection_fails_commutativity(self):
        proj = Connective("proj", Role.TNORM, lambda x, y: x, identity=None)
        rep = check_axioms(proj, GridDomain(4))
        comm = rep.child("T1:commutativity")
        assert comm.verdict is Verdict.FAILS
        # every recorded witness re-evaluates to a violation
        for w in comm.witnesses:
            x, y = w.inputs
            assert proj(x, y) != proj(y, x)
        assert proj(F(0), F(1)) != proj(F(1), F(0))

    def test_aggregation_axioms(self):
        from fuzznorm.connectives import A_MIN
        rep = check_axioms(A_MIN, GridDomain(6))
        assert rep.verdict is Verdict.HOLDS


class TestStrictMonotonicity:
    def test_verdicts(self):
        assert check_strict_monotonicity(T_P, D10).verdict is Verdict.HOLDS
        assert check_strict_monotonicity(T_M, D10).verdict is Verdict.FAILS
        assert check_strict_monotonicity(T_L, D10).verdict is Verdict.FAILS

    def test_witnesses_reevaluate(self):
        rep = check_strict_monotonicity(T_M, D10)
        for w in rep.witnesses:
            x, y, z = w.inputs
            assert x > 0 and y < z
            assert not (T_M(x, y) < T_M(x, z))
        # the documented witness is among them
        assert (F(1, 2), F(3, 5), F(7, 10)) in {w.inputs for w in rep.witnesses}

    def test_role_precondition(self):
        with pytest.raises(DomainError):
            check_strict_monotonicity(S_P, D10)


class TestCancellation:
    def test_plain(self):
        assert check_cancellation(T_P, D10).verdict is Verdict.HOLDS
        rep = check_cancellation(T_L, D10)
        assert rep.verdict is Verdict.FAILS
        assert (F(1, 5), F(1, 10), F(1, 5)) in {w.inputs for w in rep.witnesses}
        for w in rep.witnesses:
            x, y, z = w.inputs
            assert T_L(x, y) == T_L(x, z) and x != 0 and y != z

    def test_conditional(self):
        assert check_cancellation(T_L, D10, conditional=True).verdict is Verdict.HOLDS
        assert check_cancellation(T_M, D10, conditional=True).verdict is Verdict.FAILS


def brute_archimedean_pairs(conn, domain, n_max):
    """Independent double loop: recompute powers from scratch per pair."""
    found = {}
    for x in domain.interior:
        for y in domain.interior:
            witness = None
            for n in range(1, n_max + 1):
                if power_iterate(conn, x, n) < y:
                    witness = n
                    break
            found[(x, y)] = witness
    return found


class TestArchimedean:
    def test_verdicts_match_known_classification(self):
        budget = SearchBudget(n_max=64)
        assert check_archimedean(T_L, D10, budget).verdict is Verdict.HOLDS
        assert check_archimedean(T_P, D10, budget).verdict is Verdict.HOLDS
        assert check_archimedean(T_D, D10, budget).verdict is Verdict.HOLDS
        rep = check_archimedean(T_M, D10, budget)
        assert rep.verdict is Verdict.FAILS
        for w in rep.witnesses:
            x, y = w.inputs
            assert w.values[0] == x  # stationary exactly at x

    def test_agrees_with_brute_force_reference(self):
        budget = SearchBudget(n_max=64)
        for conn in BUILTIN_TNORMS:
            oracle = brute_archimedean_pairs(conn, D10, budget.n_max)
            rep = check_archimedean(conn, D10, budget)
            all_found = all(v is not None for v in oracle.values())
            assert (rep.verdict is Verdict.HOLDS) == all_found, conn.name
            failed_pairs = {w.inputs for w in rep.witnesses}
            assert failed_pairs <= {p for p, v in oracle.items() if v is None}

    def test_budget_exhaustion_is_vacuous(self):
        rep = check_archimedean(T_P, D10, SearchBudget(n_max=2))
        assert rep.verdict is Verdict.VACUOUS
        assert "budget-exhausted" in rep.tags


class TestLimitProperty:
    def test_lukasiewicz_reaches_zero(self):
        rep = check_limit_property(T_L, D10, SearchBudget(iter_cap=128))
        assert rep.verdict is Verdict.HOLDS
        assert rep.details["convergence"]["9/10"] == 10

    def test_min_fails_everywhere_interior(self):
        rep = check_limit_property(T_M, D10)
        assert rep.verdict is Verdict.FAILS
        assert {w.inputs[0] for w in rep.witnesses} == set(D10.interior)

    def test_drastic_two_steps(self):
        rep = check_limit_property(T_D, D10)
        assert rep.verdict is Verdict.HOLDS
        assert rep.details["convergence"]["9/10"] == 2


class TestResolutionMonotonicity:
    # a failure seen on a coarse grid stays a failure on a finer grid,
    # because the coarse points embed into the finer grid
    @pytest.mark.parametrize("check", [
        check_strict_monotonicity,
        check_cancellation,
        lambda c, d: check_archimedean(c, d, SearchBudget()),
    ])
    def test_fails_never_flips(self, check):
        for conn in BUILTIN_TNORMS:
            coarse = check(conn, GridDomain(5))
            if coarse.verdict is Verdict.FAILS:
                assert check(conn, GridDomain(10)).verdict is Verdict.FAILS


class TestClassifyUninorm:
    def test_min_construction_is_conjunctive(self):
        rep = classify_uninorm(construct_uninorm_min(F(1, 2), T_P, S_P), D10)
        assert rep.verdict is Verdict.HOLDS
        assert rep.details["conjunctive"] is True
        assert rep.details["disjunctive"] is False
        assert rep.details["mixed_region"] == "min"

    def test_max_construction_is_disjunctive(self):
        rep = classify_uninorm(construct_uninorm_max(F(1, 2), T_P, S_P), D10)
        assert rep.details["disjunctive"] is True
        assert rep.details["mixed_region"] == "max"

    def test_tnorm_degenerates(self):
        rep = classify_uninorm(T_M, D10)
        assert rep.details["conjunctive"] is True
        assert rep.details["locally_internal_on_boundary"] is True
        assert rep.details["idempotent_diagonal"] is True
        assert rep.details["mixed_region"] == "empty"


class TestVerifyImplication:
    def test_archimedean_does_not_imply_strict(self):
        universe = builtin_tnorm_universe((T_L,), D10)
        rep = verify_implication("archimedean", "strict-monotone", universe)
        assert rep.verdict is Verdict.FAILS
        assert rep.witnesses[0].inputs == (T_L.name,)

    def test_strict_implies_cancellation_chain(self):
        chain = uniform_chain(4)
        from fuzznorm.reports import FinitePoints
        dom = FinitePoints(chain)
        conns = tuple(t.as_connective() for t in enumerate_chain_tnorm_tables(chain))
        universe = builtin_tnorm_universe(conns + BUILTIN_TNORMS, dom)
        assert verify_implication("strict-monotone", "cancellation",
                                  universe).verdict is Verdict.HOLDS
        assert verify_implication("cancellation", "conditional-cancellation",
                                  universe).verdict is Verdict.HOLDS

    def test_budget_refusal(self):
        universe = builtin_tnorm_universe(BUILTIN_TNORMS, D10)
        with pytest.raises(BudgetExceededError) as err:
            verify_implication("archimedean", "strict-monotone", universe,
                               max_members=2)
        assert err.value.size_estimate == 4

    def test_unknown_property(self):
        universe = builtin_tnorm_universe(BUILTIN_TNORMS, D10)
        with pytest.raises(DomainError):
            verify_implication("archimedean", "no-such-prop", universe)


class TestFloatMode:
    def test_dyadic_float_product_passes(self):
        floaty = Connective("float-product", Role.TNORM,
                            lambda x, y: float(x) * float(y), identity=F(1))
        # on a dyadic grid every product is an exact binary float
        rep = check_axioms(floaty, GridDomain(4))
        assert rep.verdict is Verdict.HOLDS

    def test_float_limit_uses_float_tolerance(self):
        floaty = Connective("float-product", Role.TNORM,
                            lambda x, y: float(x) * float(y), identity=F(1))
        rep = check_limit_property(floaty, GridDomain(4),
                                   SearchBudget(iter_cap=128))
        assert rep.verdict is Verdict.HOLDS
        # 0.75^n needs to pass below 1e-9, far beyond the rational default
        assert rep.details["convergence"]["3/4"] > 64

    def test_near_tie_is_undecidable(self):
        bump = {(F(1, 2), F(3, 4)), (F(3, 4), F(1, 2))}

        def noisy(x, y):
            if (x, y) in bump:
                return 0.25 + 5e-10
            return float(x) * float(y)

        conn = Connective("noisy", Role.TNORM, noisy, identity=F(1))
        rep = check_strict_monotonicity(conn, GridDomain(4))
        assert rep.verdict is Verdict.VACUOUS
        assert "float-tolerance-undecidable" in rep.tags


class TestReportPlumbing:
    def test_merge_is_commutative_and_unions_witnesses(self):
        a = check_strict_monotonicity(T_M, GridDomain(5))
        b = check_strict_monotonicity(T_M, GridDomain(5))
        merged = a.merge(b)
        assert merged.verdict is Verdict.FAILS
        assert {w.inputs for w in merged.witnesses} == {w.inputs for w in a.witnesses}
        assert dumps(a.merge(b)) == dumps(b.merge(a))

    def test_json_shape(self):
        import json
        rep = check_cancellation(T_L, GridDomain(5))
        obj = json.loads(dumps(rep))
        assert set(obj) >= {"property_id", "verdict", "domain", "witnesses", "budget"}
        assert obj["verdict"] == "FAILS"
        assert obj["domain"] == {"kind": "grid", "resolution": 5}
        first = obj["witnesses"][0]
        assert set(first) == {"inputs", "values"}
        assert all("/" in s or s in ("0", "1") for s in first["inputs"])

    def test_domain_and_budget_validation(self):
        with pytest.raises(DomainError):
            GridDomain(1)
        with pytest.raises(DomainError):
            SearchBudget(n_max=0)
        with pytest.raises(DomainError):
            SearchBudget(epsilon=F(0))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8))
def test_grid_points_are_exact(n):
    dom = GridDomain(n)
    pts = dom.points
    assert pts[0] == 0 and pts[-1] == 1
    assert len(pts) == n + 1
    assert all(pts[i] < pts[i + 1] for i in range(n))
    # arithmetic over grid points stays exact
    assert sum(pts) * 2 == (n + 1)
