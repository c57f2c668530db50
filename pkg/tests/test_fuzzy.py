import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fuzznorm.carriers import (CarrierMonoid, FiniteGroup, carrier_from_json,
                               cyclic_group)
from fuzznorm.connectives import (A_MIN, BUILTIN_TNORMS, S_L, S_M, S_P, T_D,
                                  T_L, T_M, T_P, construct_nullnorm,
                                  construct_uninorm_max, construct_uninorm_min)
from fuzznorm.errors import DomainError, InputFormatError, TotalityError
from fuzznorm.fuzzy import (FuzzyProp, KIND_T_SUBNORM, a_submonoid_kind,
                            characterize_special_cases,
                            check_discrete_subalgebra, check_fuzzy_property,
                            check_fuzzy_subgroup, check_fuzzy_subgroupoid,
                            check_fuzzy_submonoid, check_not_strictly_decreasing,
                            core_is_submonoid, extract_core, f_submonoid_kind,
                            refute_uninorm_existence, uninorm_family)
from fuzznorm.reports import FinitePoints, GridDomain, Verdict
from fuzznorm.subsets import (MU_COMPLEMENT, MU_ID, MU_ONE, MU_ZERO,
                              enumerate_table_subsets, indicator_subset,
                              intersect_fuzzy_subsets, parse_subset_spec,
                              step_subset, subset_from_json, table_subset)
from fuzznorm.tables import (enumerate_chain_tnorm_tables, mixed_grid_points,
                             uniform_chain)

F = Fraction
D10 = GridDomain(10)
ALPHABET = (F(0), F(1, 2), F(1))


def min_carrier(domain=D10):
    return CarrierMonoid.from_connective(T_M, domain)


class TestSubgroupoid:
    def test_trivial_subsets_pass(self):
        carrier = min_carrier()
        assert check_fuzzy_subgroupoid(MU_ONE, carrier).holds
        assert check_fuzzy_subgroupoid(MU_ZERO, carrier).holds

    def test_indicator_of_non_closed_subset_fails(self):
        g4 = cyclic_group(4)
        mu = indicator_subset({1, 2})
        rep = check_fuzzy_subgroupoid(mu, g4.monoid)
        assert rep.fails
        for w in rep.witnesses:
            x, y = w.inputs
            assert mu(x) == mu(y) == 1 and mu((x + y) % 4) == 0


class TestSubmonoid:
    def test_identity_map_unique_to_min(self):
        assert check_fuzzy_submonoid(MU_ID, min_carrier(), KIND_T_SUBNORM).holds
        for conn in (T_P, T_L, T_D):
            carrier = CarrierMonoid.from_connective(conn, D10)
            assert check_fuzzy_submonoid(MU_ID, carrier, KIND_T_SUBNORM).fails

    def test_identity_witness_at_half(self):
        carrier = CarrierMonoid.from_connective(T_P, D10)
        rep = check_fuzzy_submonoid(MU_ID, carrier, KIND_T_SUBNORM)
        assert (F(1, 2), F(1, 2)) in {w.inputs for w in rep.witnesses}

    def test_full_subset_works_everywhere(self):
        for conn in BUILTIN_TNORMS:
            carrier = CarrierMonoid.from_connective(conn, D10)
            assert check_fuzzy_submonoid(MU_ONE, carrier, KIND_T_SUBNORM).holds

    def test_zero_subset_fails_identity_condition(self):
        rep = check_fuzzy_submonoid(MU_ZERO, min_carrier(), KIND_T_SUBNORM)
        assert rep.fails
        assert rep.details["identity_condition"] is False

    def test_complement_is_a_min_submonoid_of_max(self):
        carrier = CarrierMonoid.from_connective(S_M, D10)
        rep = check_fuzzy_submonoid(MU_COMPLEMENT, carrier,
                                    a_submonoid_kind(A_MIN))
        assert rep.holds

    def test_agrees_with_independent_reference_loop(self):
        # reference loop written from the definition, no shared code
        chain = uniform_chain(4)
        dom = FinitePoints(chain)
        for table in enumerate_chain_tnorm_tables(chain):
            conn = table.as_connective()
            carrier = CarrierMonoid.from_connective(conn, dom)
            for mu in enumerate_table_subsets(chain, ALPHABET):
                expected = mu(F(1)) == 1 and all(
                    min(mu(x), mu(y)) <= mu(table(x, y))
                    for x in chain for y in chain)
                got = check_fuzzy_submonoid(mu, carrier, KIND_T_SUBNORM).holds
                assert got == expected


class TestSubgroup:
    def test_subgroup_indicator_passes(self):
        g4 = cyclic_group(4)
        assert check_fuzzy_subgroup(indicator_subset({0, 2}), g4).holds
        assert check_fuzzy_subgroup(MU_ONE, g4).holds

    def test_generator_pair_fails(self):
        g4 = cyclic_group(4)
        assert check_fuzzy_subgroup(indicator_subset({0, 1}), g4).fails

    def test_group_construction_requires_inverses(self):
        elements = (0, 1)
        table = {(a, b): min(a, b) for a in elements for b in elements}
        with pytest.raises(DomainError):
            FiniteGroup.from_table(elements, table, 1)


class TestIntersection:
    def test_pointwise_min(self):
        inter = intersect_fuzzy_subsets([MU_ID, MU_COMPLEMENT])
        assert inter(F(3, 10)) == F(3, 10)
        assert inter(F(4, 5)) == F(1, 5)
        assert intersect_fuzzy_subsets([MU_ONE, MU_ID])(F(2, 5)) == F(2, 5)

    def test_empty_intersection_is_full(self):
        assert intersect_fuzzy_subsets([])(F(1, 3)) == 1

    def test_subgroup_indicators_intersect_to_subgroup(self):
        g4 = cyclic_group(4)
        a = indicator_subset({0, 2})
        b = indicator_subset({0, 1, 2, 3})
        inter = intersect_fuzzy_subsets([a, b])
        assert check_fuzzy_subgroup(inter, g4).holds
        assert [inter(x) for x in g4.elements] == [1, 0, 1, 0]

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.sampled_from([MU_ONE, MU_ZERO, MU_ID]), min_size=1,
                    max_size=3))
    def test_intersection_of_subgroupoids_is_subgroupoid(self, mus):
        carrier = min_carrier(GridDomain(5))
        for mu in mus:
            assert check_fuzzy_subgroupoid(mu, carrier).holds
        assert check_fuzzy_subgroupoid(intersect_fuzzy_subsets(mus), carrier).holds


class TestFuzzyProperties:
    def test_constant_map_is_never_fuzzy_strict(self):
        rep = check_fuzzy_property(MU_ONE, T_L, FuzzyProp.FSTRICT, D10)
        assert rep.fails

    def test_gating_tags_non_subnorms(self):
        rep = check_fuzzy_property(MU_ID, T_P, FuzzyProp.FSTRICT, D10)
        assert rep.verdict is Verdict.VACUOUS
        assert "NOT_A_SUBNORM" in rep.tags
        assert rep.witnesses  # carries the subnorm violations

    def test_fcancel_min_saturates(self):
        rep = check_fuzzy_property(MU_ID, T_M, FuzzyProp.FCANCEL, D10)
        assert rep.fails
        for w in rep.witnesses:
            x, y, z = w.inputs
            assert MU_ID(T_M(x, y)) == MU_ID(T_M(x, z)) and x != 0 and y != z

    def test_fcondcancel_reports_strong_form_separately(self):
        rep = check_fuzzy_property(MU_ID, T_M, FuzzyProp.FCONDCANCEL, D10)
        # weaker conclusion mu(y) = mu(z) fails on the same witnesses here
        assert rep.fails
        assert rep.details["strong_form_violations"] >= len(rep.witnesses)

    def test_farch_constant_map_tagged(self):
        rep = check_fuzzy_property(MU_ONE, T_L, FuzzyProp.FARCH, D10)
        assert rep.verdict is Verdict.VACUOUS
        assert "VACUOUS-BY-CONSTANCY" in rep.tags

    def test_flimit_constant_map_holds(self):
        for conn in BUILTIN_TNORMS:
            rep = check_fuzzy_property(MU_ONE, conn, FuzzyProp.FLIMIT, D10)
            assert rep.holds, conn.name

    def test_flimit_identity_map_on_lukasiewicz(self):
        rep = check_fuzzy_property(MU_ID, T_L, FuzzyProp.FLIMIT, D10,
                                   gate=False)
        assert rep.holds

    def test_ungated_evaluation_matches_definition(self):
        rep = check_fuzzy_property(MU_ID, T_P, FuzzyProp.FSTRICT, D10,
                                   gate=False)
        assert rep.fails  # product values collide under mu at y<z with x=0-free quantifier


class TestNotStrictlyDecreasing:
    def test_identity_map_vacuous_premise(self):
        rep = check_not_strictly_decreasing(MU_ID, T_P, D10)
        assert rep.verdict is Verdict.VACUOUS
        assert "premise-not-subnorm" in rep.tags

    def test_complement_fails_the_premise_too(self):
        rep = check_not_strictly_decreasing(MU_COMPLEMENT, T_P, D10)
        assert rep.verdict is Verdict.VACUOUS
        assert rep.details["mu_is_subnorm"] is False

    def test_full_subset_consistent(self):
        rep = check_not_strictly_decreasing(MU_ONE, T_P, D10)
        assert rep.holds
        x, y = rep.witnesses[0].inputs
        assert x < y and MU_ONE(x) <= MU_ONE(y)

    def test_non_strict_operator_vacuous(self):
        rep = check_not_strictly_decreasing(MU_ONE, T_M, D10)
        assert rep.verdict is Verdict.VACUOUS
        assert "premise-not-strict" in rep.tags


class TestCore:
    def test_full_subset_core_is_everything(self):
        carrier = min_carrier()
        assert extract_core(MU_ONE, carrier) == carrier.elements

    def test_peaked_subset_core_is_identity(self):
        carrier = min_carrier()
        mu = table_subset({p: (F(1) if p == 1 else F(1, 2))
                           for p in carrier.elements})
        assert extract_core(mu, carrier) == (F(1),)

    def test_step_core_is_upper_segment(self):
        carrier = min_carrier()
        core = extract_core(step_subset(F(1, 2)), carrier)
        assert core == tuple(p for p in carrier.elements if p >= F(1, 2))
        assert core_is_submonoid(core, carrier)

    def test_core_closed_for_passing_submonoids(self):
        dom = FinitePoints(uniform_chain(3))
        carrier = CarrierMonoid.from_connective(T_M, dom)
        f = construct_nullnorm(S_L, F(1, 2), T_L)
        kind = f_submonoid_kind(f)
        for mu in enumerate_table_subsets(dom.points, ALPHABET):
            if check_fuzzy_submonoid(mu, carrier, kind).holds:
                assert core_is_submonoid(extract_core(mu, carrier), carrier)


class TestDiscreteSubalgebra:
    def test_mixed_grid_closed_under_both_constructions(self):
        pts = mixed_grid_points(F(1, 2), 2, 2)
        assert pts == (F(0), F(1, 4), F(1, 2), F(3, 4), F(1))
        u = construct_uninorm_min(F(1, 2), T_L, S_L)
        f = construct_nullnorm(S_L, F(1, 2), T_L)
        assert check_discrete_subalgebra(pts, u).holds
        assert check_discrete_subalgebra(pts, f).holds

    def test_product_escapes_sparse_set(self):
        rep = check_discrete_subalgebra((F(0), F(1, 3), F(1)), T_P)
        assert rep.fails
        assert rep.witnesses[0].inputs == (F(1, 3), F(1, 3))
        assert rep.witnesses[0].values == (F(1, 9),)

    def test_requires_bounds(self):
        with pytest.raises(DomainError):
            check_discrete_subalgebra((F(1, 4), F(1, 2)), T_M)


class TestCharacterizations:
    def grid3(self):
        return FinitePoints(uniform_chain(3))

    def test_prop17_sweep(self):
        dom = self.grid3()
        for mu in enumerate_table_subsets(dom.points, ALPHABET):
            rep = characterize_special_cases("prop17", mu, A_MIN, dom)
            assert rep.holds, mu.name
            assert rep.details["rhs_closed_form"] == (mu(F(1)) == 1)

    def test_prop18_sweep(self):
        dom = self.grid3()
        for mu in enumerate_table_subsets(dom.points, ALPHABET):
            assert characterize_special_cases("prop18", mu, A_MIN, dom).holds

    def test_disjunctive_case_rejects_wrong_operator(self):
        u_conj = construct_uninorm_min(F(1, 2), T_P, S_P)
        with pytest.raises(DomainError):
            characterize_special_cases("disjunctive-uninorm", MU_ONE, u_conj,
                                       self.grid3())

    def test_disjunctive_case_identity_map(self):
        u = construct_uninorm_max(F(1, 2), T_P, S_P)
        rep = characterize_special_cases("disjunctive-uninorm", MU_ID, u,
                                         self.grid3())
        assert rep.holds
        assert rep.details["lhs_submonoid_check"] is False
        assert rep.details["rhs_closed_form"] is False

    def test_prop20_step_subset_passes_both_sides(self):
        u = construct_uninorm_min(F(1, 2), T_P, S_M)
        rep = characterize_special_cases("prop20", step_subset(F(1, 2)), u, D10)
        assert rep.holds
        assert rep.details["lhs_submonoid_check"] is True
        assert rep.details["rhs_closed_form"] is True

    def test_prop20_shape_validated(self):
        u_wrong = construct_uninorm_min(F(1, 2), T_P, S_P)  # upper square not max
        with pytest.raises(DomainError):
            characterize_special_cases("prop20", MU_ONE, u_wrong, D10)

    def test_prop24_sweep(self):
        dom = self.grid3()
        f = construct_nullnorm(S_L, F(1, 2), T_L)
        for mu in enumerate_table_subsets(dom.points, ALPHABET):
            assert characterize_special_cases("prop24", mu, f, dom).holds

    def test_prop25_sweeps(self):
        dom = self.grid3()
        f = construct_nullnorm(S_L, F(1, 2), T_M)
        for case in ("prop25-tnorm", "prop25-tconorm"):
            for mu in enumerate_table_subsets(dom.points, ALPHABET):
                assert characterize_special_cases(case, mu, f, dom).holds

    def test_unknown_case(self):
        with pytest.raises(DomainError):
            characterize_special_cases("prop99", MU_ONE, A_MIN, self.grid3())


class TestRefutations:
    def family(self):
        return uninorm_family((F(1, 4), F(1, 2), F(3, 4)), (T_P, T_L),
                              (S_P, S_L))

    def test_identity_map_has_no_admitting_uninorm(self):
        dom = GridDomain(8)
        family = self.family()
        for carrier in (T_P, T_L, T_M):
            rep = refute_uninorm_existence(MU_ID, carrier, family, dom)
            assert rep.holds
            assert len(rep.witnesses) == len(family)
            for w in rep.witnesses:
                member_name, x, y = w.inputs
                e = next(m for m in family if m.name == member_name).identity
                assert x == e and y > e

    def test_complement_map_mirror_witnesses(self):
        dom = GridDomain(8)
        family = self.family()
        for carrier in (S_P, S_L, S_M):
            rep = refute_uninorm_existence(MU_COMPLEMENT, carrier, family, dom)
            assert rep.holds
            for w in rep.witnesses:
                member_name, x, y = w.inputs
                e = next(m for m in family if m.name == member_name).identity
                assert x == 1 - e and y < 1 - e

    def test_full_subset_always_admitted(self):
        rep = refute_uninorm_existence(MU_ONE, T_P, self.family(), GridDomain(8))
        assert rep.fails  # no refutation possible


class TestSubsetIO:
    def test_builtin_specs(self):
        assert parse_subset_spec("builtin:identity") is MU_ID
        assert parse_subset_spec("builtin:step(1/2)")(F(1, 4)) == F(1, 4)
        assert parse_subset_spec("builtin:step(1/2)")(F(1, 2)) == 1

    def test_table_json_round_trip(self):
        obj = {"form": "table", "entries": [["0", "1"], ["1/2", "3/4"], ["1", "1"]]}
        mu = subset_from_json(obj)
        assert mu(F(1, 2)) == F(3, 4)
        with pytest.raises(TotalityError):
            mu(F(1, 4))

    def test_bad_table_entries(self):
        with pytest.raises(InputFormatError):
            subset_from_json({"form": "table", "entries": [["0"]]})
        with pytest.raises(InputFormatError):
            subset_from_json({"form": "table", "entries": [["0", "7/2"]]})
        with pytest.raises(InputFormatError):
            subset_from_json({"entries": []})

    def test_carrier_json(self):
        obj = {"elements": ["0", "1/2", "1"], "identity": "1",
               "op": [["0", "0", "0"], ["0", "1/2", "1/2"], ["0", "1/2", "1"]]}
        carrier = carrier_from_json(obj)
        assert carrier.op(F(1, 2), F(1)) == F(1, 2)
        bad = dict(obj, op=[["0", "0", "0"], ["0", "1/2", "1"], ["0", "1/2", "1"]])
        with pytest.raises(InputFormatError):
            carrier_from_json(bad)
