from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fuzznorm.connectives import (A_MIN, BUILTIN_TCONORMS, BUILTIN_TNORMS,
                                  Connective, Role, S_D, S_L, S_M, S_P, T_D,
                                  T_L, T_M, T_P, construct_nullnorm,
                                  construct_uninorm_max, construct_uninorm_min,
                                  dualize, eval_tconorm, eval_tnorm,
                                  parse_operator, power_iterate)
from fuzznorm.errors import (DegenerateParameterError, DomainError,
                             UnknownOperatorError)

F = Fraction

grid_points = st.integers(min_value=0, max_value=12).map(lambda i: F(i, 12))


def test_eval_tnorm_closed_forms():
    assert eval_tnorm("T_L", F(7, 10), F(1, 2)) == F(1, 5)
    assert eval_tnorm("T_M", F(3, 10), F(1)) == F(3, 10)
    assert eval_tnorm("T_D", F(3, 10), F(9, 10)) == 0
    assert eval_tnorm("product", F(1, 2), F(1, 2)) == F(1, 4)


def test_eval_tconorm_closed_forms():
    assert eval_tconorm("S_P", F(1, 2), F(1, 2)) == F(3, 4)
    assert eval_tconorm("S_M", F(2, 5), F(0)) == F(2, 5)
    assert eval_tconorm("S_L", F(7, 10), F(1, 2)) == 1
    assert eval_tconorm("S_D", F(1, 10), F(1, 10)) == 1


def test_unknown_family_rejected():
    with pytest.raises(UnknownOperatorError):
        eval_tnorm("T_X", F(0), F(0))
    with pytest.raises(UnknownOperatorError):
        eval_tconorm("nope", F(0), F(0))


def test_power_iterate():
    assert power_iterate(T_P, F(1, 2), 3) == F(1, 8)
    assert power_iterate(T_L, F(9, 10), 0) == 1
    assert power_iterate(T_M, F(1, 2), 100) == F(1, 2)
    assert power_iterate(T_L, F(9, 10), 10) == 0


def test_power_iterate_errors():
    with pytest.raises(DomainError):
        power_iterate(T_P, F(1, 2), -1)
    anonymous = Connective("anon", Role.TNORM, lambda x, y: x * y)
    with pytest.raises(DomainError):
        power_iterate(anonymous, F(1, 2), 0)


def test_power_iterate_value_object():
    from fuzznorm.connectives import PowerIterate
    assert PowerIterate(F(1, 2), 0).evaluate(T_P) == 1
    assert PowerIterate(F(1, 2), 1).evaluate(T_P) == F(1, 2)
    assert PowerIterate(F(1, 2), 3).evaluate(T_P) == F(1, 8)
    with pytest.raises(DomainError):
        PowerIterate(F(1, 2), -1)


@settings(max_examples=60, deadline=None)
@given(grid_points, grid_points, st.integers(0, 4), st.integers(0, 4))
def test_power_additivity(x, y, m, n):
    # T(x^(m), x^(n)) = x^(m+n), a consequence of associativity
    for conn in BUILTIN_TNORMS:
        lhs = conn(power_iterate(conn, x, m + 1), power_iterate(conn, x, n + 1))
        assert lhs == power_iterate(conn, x, m + n + 2)


class TestUninormConstruction:
    def test_min_branch_values(self):
        u = construct_uninorm_min(F(1, 2), T_P, S_P)
        assert u(F(1, 4), F(1, 4)) == F(1, 8)
        assert u(F(3, 10), F(1, 2)) == F(3, 10)  # identity element
        assert u(F(0), F(1)) == 0

    def test_max_branch_values(self):
        u = construct_uninorm_max(F(1, 2), T_P, S_P)
        assert u(F(1, 4), F(3, 4)) == F(3, 4)
        assert u(F(0), F(1)) == 1
        u_l = construct_uninorm_max(F(1, 2), T_P, S_L)
        assert u_l(F(3, 4), F(3, 4)) == 1

    def test_degenerate_identity_rejected(self):
        for e in (0, 1):
            with pytest.raises(DegenerateParameterError):
                construct_uninorm_min(e, T_P, S_P)
            with pytest.raises(DegenerateParameterError):
                construct_uninorm_max(e, T_P, S_P)

    def test_role_validation(self):
        with pytest.raises(DomainError):
            construct_uninorm_min(F(1, 2), S_P, S_P)

    @settings(max_examples=40, deadline=None)
    @given(grid_points, grid_points)
    def test_mixed_region_bounded(self, x, y):
        e = F(1, 2)
        u = construct_uninorm_min(e, T_P, S_P)
        if min(x, y) < e < max(x, y):
            assert min(x, y) <= u(x, y) <= max(x, y)


class TestNullnormConstruction:
    def test_branch_values(self):
        f = construct_nullnorm(S_L, F(1, 2), T_L)
        assert f(F(1, 4), F(1, 4)) == F(1, 2)
        assert f(F(1, 2), F(9, 10)) == F(1, 2)  # absorbing element
        assert f(F(0), F(3, 10)) == F(3, 10)
        assert f(F(1), F(3, 4)) == F(3, 4)

    def test_mixed_region_is_constant(self):
        f = construct_nullnorm(S_L, F(1, 2), T_L)
        k = F(1, 2)
        pts = [F(i, 8) for i in range(9)]
        for x in pts:
            for y in pts:
                if (x < k and y > k) or (x > k and y < k):
                    assert f(x, y) == k

    def test_degenerate_absorber_rejected(self):
        for k in (0, 1):
            with pytest.raises(DegenerateParameterError):
                construct_nullnorm(S_L, k, T_L)


class TestDualize:
    def test_examples(self):
        assert dualize(T_M)(F(3, 10), F(4, 5)) == F(4, 5)
        assert dualize(T_L)(F(7, 10), F(1, 2)) == 1

    def test_role_error(self):
        with pytest.raises(DomainError):
            dualize(A_MIN)

    @settings(max_examples=60, deadline=None)
    @given(grid_points, grid_points)
    def test_dual_pairs_and_involution(self, x, y):
        for t, s in zip(BUILTIN_TNORMS, BUILTIN_TCONORMS):
            assert dualize(t)(x, y) == s(x, y)
            assert dualize(dualize(t))(x, y) == t(x, y)
        assert dualize(T_L)(F(0), x) == x

    @settings(max_examples=60, deadline=None)
    @given(grid_points, grid_points)
    def test_builtin_tnorms_commute_below_min(self, x, y):
        for conn in BUILTIN_TNORMS:
            assert conn(x, y) == conn(y, x)
            assert conn(x, y) <= min(x, y)


class TestParseOperator:
    def test_builtin_ids_round_trip(self):
        for conn in BUILTIN_TNORMS + BUILTIN_TCONORMS + (A_MIN,):
            assert parse_operator(conn.name) is conn

    def test_uninorm_named_and_positional(self):
        named = parse_operator("uninorm:umin(e=1/2,T=product,S=probsum)")
        positional = parse_operator("uninorm:umin(1/2,product,probsum)")
        assert named.name == positional.name
        assert named.identity == F(1, 2)
        assert named(F(1, 4), F(1, 4)) == positional(F(1, 4), F(1, 4)) == F(1, 8)

    def test_constructed_name_reparses(self):
        u = construct_uninorm_max(F(3, 4), T_L, S_L)
        again = parse_operator(u.name)
        assert again.name == u.name
        f = construct_nullnorm(S_L, F(1, 2), T_L)
        assert parse_operator(f.name).name == f.name
        assert parse_operator(f.name)(F(1, 4), F(1, 4)) == F(1, 2)

    def test_nullnorm_suffixes_optional(self):
        a = parse_operator("nullnorm:<lukasiewicz-S,1/2,lukasiewicz-T>")
        b = parse_operator("nullnorm:<lukasiewicz,1/2,lukasiewicz>")
        assert a(F(1, 4), F(1, 4)) == b(F(1, 4), F(1, 4))

    def test_bad_ids(self):
        for bad in ("tnorm:median", "uninorm:umin(0,product,probsum)",
                    "uninorm:umin(1/2,product)", "nullnorm:<probsum,1/2>",
                    "garbage", "uninorm:umin(e=1/2,T=product)"):
            with pytest.raises(UnknownOperatorError):
                parse_operator(bad)
