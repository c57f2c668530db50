"""Fuzzy substructure checks over carrier monoids.

Covers the min-based subgroupoid/submonoid/subgroup conditions, the
five fuzzified operator properties, and the generalized submonoid
conditions where the min combiner is replaced by an aggregation
function, a uninorm, or a nullnorm. Also houses the characterization
sweeps and the uninorm non-existence refutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .carriers import CarrierMonoid, FiniteGroup
from .connectives import Connective, Role
from .errors import DomainError
from .reports import (PropertyReport, SearchBudget, Verdict, Witness,
                      conclude)
from .scalars import (FLOAT_TOL, ONE, ZERO, eq3, eq_approx, format_scalar,
                      le_approx, lt3)
from .subsets import FuzzySubset


class SubstructureTag(Enum):
    SUBGROUPOID = "fuzzy-subgroupoid"
    SUBGROUP = "fuzzy-subgroup"
    SUBMONOID = "fuzzy-submonoid"
    T_SUBNORM = "fuzzy-t-subnorm"
    T_SUBCONORM = "fuzzy-t-subconorm"
    A_SUBMONOID = "a-fuzzy-submonoid"
    U_SUBMONOID = "u-fuzzy-submonoid"
    F_SUBMONOID = "f-fuzzy-submonoid"


_COMBINER_ROLE = {
    SubstructureTag.A_SUBMONOID: Role.AGGREGATION,
    SubstructureTag.U_SUBMONOID: Role.UNINORM,
    SubstructureTag.F_SUBMONOID: Role.NULLNORM,
}


@dataclass(frozen=True)
class SubstructureKind:
    """Which inequality family to check and what replaces min.

    ``combiner`` stays None for the min-based kinds. The n-ary
    aggregation condition is checked for arities 2 up to ``arity_cap``.
    """

    tag: SubstructureTag
    combiner: Optional[Connective] = None
    arity_cap: int = 3

    def __post_init__(self):
        wanted = _COMBINER_ROLE.get(self.tag)
        if wanted is not None:
            if self.combiner is None or self.combiner.role is not wanted:
                raise DomainError(
                    f"{self.tag.value} needs a combiner of role {wanted.value}")
        elif self.combiner is not None:
            raise DomainError(f"{self.tag.value} uses the min combiner")

    def combine(self, values: tuple):
        if self.combiner is None:
            return min(values)
        return self.combiner(*values)


KIND_SUBGROUPOID = SubstructureKind(SubstructureTag.SUBGROUPOID)
KIND_SUBMONOID = SubstructureKind(SubstructureTag.SUBMONOID)
KIND_T_SUBNORM = SubstructureKind(SubstructureTag.T_SUBNORM)
KIND_T_SUBCONORM = SubstructureKind(SubstructureTag.T_SUBCONORM)


def a_submonoid_kind(agg: Connective, arity_cap: int = 3) -> SubstructureKind:
    return SubstructureKind(SubstructureTag.A_SUBMONOID, agg, arity_cap)


def u_submonoid_kind(uninorm: Connective) -> SubstructureKind:
    return SubstructureKind(SubstructureTag.U_SUBMONOID, uninorm)


def f_submonoid_kind(nullnorm: Connective) -> SubstructureKind:
    return SubstructureKind(SubstructureTag.F_SUBMONOID, nullnorm)


def _closure_witnesses(mu, carrier, kind):
    """Violations of combiner(mu(x..)) <= mu(x o ..) over tuples."""
    elems = carrier.elements
    vals = {a: mu(a) for a in elems}
    witnesses = []
    arities = (2,) if kind.tag is not SubstructureTag.A_SUBMONOID \
        else tuple(range(2, kind.arity_cap + 1))
    for arity in arities:
        if arity == 2:
            for x in elems:
                vx = vals[x]
                for y in elems:
                    lhs = kind.combine((vx, vals[y]))
                    rhs = mu(carrier.op(x, y))
                    if not le_approx(lhs, rhs):
                        witnesses.append(Witness((x, y), (lhs, rhs)))
        else:
            import itertools
            for combo in itertools.product(elems, repeat=arity):
                lhs = kind.combine(tuple(vals[c] for c in combo))
                acc = combo[0]
                for c in combo[1:]:
                    acc = carrier.op(acc, c)
                rhs = mu(acc)
                if not le_approx(lhs, rhs):
                    witnesses.append(Witness(combo, (lhs, rhs)))
    return witnesses


def check_fuzzy_subgroupoid(mu: FuzzySubset, carrier: CarrierMonoid) -> PropertyReport:
    """Closure under the carrier operation: min of the memberships never
    exceeds the membership of the product."""
    witnesses = _closure_witnesses(mu, carrier, KIND_SUBGROUPOID)
    return conclude(SubstructureTag.SUBGROUPOID.value, carrier.to_json(),
                    witnesses, 0, instances=1,
                    details={"mu": mu.name})


def check_fuzzy_submonoid(mu: FuzzySubset, carrier: CarrierMonoid,
                          kind: SubstructureKind = KIND_SUBMONOID) -> PropertyReport:
    """Closure condition for the kind's combiner plus full membership at
    the carrier identity."""
    witnesses = _closure_witnesses(mu, carrier, kind)
    ident_val = mu(carrier.identity)
    identity_ok = eq_approx(ident_val, ONE)
    if not identity_ok:
        witnesses.append(Witness((carrier.identity,), (ident_val, ONE)))
    details = {"mu": mu.name, "identity_condition": identity_ok}
    if kind.combiner is not None:
        details["combiner"] = kind.combiner.name
    return conclude(kind.tag.value, carrier.to_json(), witnesses, 0,
                    instances=1, details=details)


def check_fuzzy_subgroup(mu: FuzzySubset, group: FiniteGroup) -> PropertyReport:
    """Subgroupoid closure plus the inverse condition mu(x^-1) >= mu(x)."""
    witnesses = _closure_witnesses(mu, group.monoid, KIND_SUBGROUPOID)
    for a in group.elements:
        va = mu(a)
        vi = mu(group.inverse[a])
        if not le_approx(va, vi):
            witnesses.append(Witness((a, group.inverse[a]), (va, vi)))
    return conclude(SubstructureTag.SUBGROUP.value, group.to_json(),
                    witnesses, 0, instances=1, details={"mu": mu.name})


class FuzzyProp(Enum):
    FSTRICT = "fuzzy-strict-monotonicity"
    FCANCEL = "fuzzy-cancellation"
    FCONDCANCEL = "fuzzy-conditional-cancellation"
    FARCH = "fuzzy-archimedean"
    FLIMIT = "fuzzy-limit-property"


def check_fuzzy_property(mu: FuzzySubset, conn: Connective, prop: FuzzyProp,
                         domain, budget: Optional[SearchBudget] = None,
                         gate: bool = True) -> PropertyReport:
    """One of the five fuzzified operator properties.

    The properties are stated for subsets that pass the t-subnorm check
    first; anything else gets a VACUOUS report tagged NOT_A_SUBNORM
    carrying the subnorm violations (``gate=False`` evaluates the bare
    quantified statement instead). Strict monotonicity runs in the
    reversed direction with x = 1 excluded, matching the only direction
    the closure inequality leaves open.
    """
    budget = budget or SearchBudget()
    base_details = {"mu": mu.name, "operator": conn.name}
    if gate:
        carrier = CarrierMonoid.from_connective(conn, domain)
        subnorm = check_fuzzy_submonoid(mu, carrier, KIND_T_SUBNORM)
        if not subnorm.holds:
            return PropertyReport(prop.value, Verdict.VACUOUS, domain.to_json(),
                                  witnesses=list(subnorm.witnesses),
                                  budget=budget.to_json(),
                                  tags=("NOT_A_SUBNORM",), details=base_details)
    pts = domain.points
    interior = domain.interior
    witnesses, undecided = [], 0
    inconclusive = 0
    instances = 0
    details = dict(base_details)

    if prop is FuzzyProp.FSTRICT:
        for x in interior:
            for i, y in enumerate(pts):
                vy = mu(conn(x, y))
                for z in pts[i + 1:]:
                    instances += 1
                    vz = mu(conn(x, z))
                    r = lt3(vz, vy)  # reversed: mu(T(x,y)) > mu(T(x,z))
                    if r is None:
                        undecided += 1
                    elif not r:
                        witnesses.append(Witness((x, y, z), (vy, vz)))

    elif prop is FuzzyProp.FCANCEL:
        for x in pts:
            if x == 0:
                continue
            for i, y in enumerate(pts):
                vy = mu(conn(x, y))
                for z in pts[i + 1:]:
                    instances += 1
                    if eq_approx(vy, mu(conn(x, z))):
                        witnesses.append(Witness((x, y, z), (vy, mu(conn(x, z)))))

    elif prop is FuzzyProp.FCONDCANCEL:
        mu0 = mu(ZERO)
        strong_violations = 0
        for x in pts:
            for i, y in enumerate(pts):
                vy = mu(conn(x, y))
                for z in pts[i + 1:]:
                    instances += 1
                    vz = mu(conn(x, z))
                    if not eq_approx(vy, vz):
                        continue
                    r = lt3(mu0, vy)
                    if r is None:
                        undecided += 1
                        continue
                    if not r:
                        continue
                    strong_violations += 1  # stronger reading concludes y = z
                    c = eq3(mu(y), mu(z))
                    if c is None:
                        undecided += 1
                    elif not c:
                        witnesses.append(Witness((x, y, z), (vy, mu(y), mu(z))))
        details["strong_form_violations"] = strong_violations

    elif prop is FuzzyProp.FARCH:
        values = {p: mu(p) for p in pts}
        if len(set(values.values())) == 1:
            return PropertyReport(prop.value, Verdict.VACUOUS, domain.to_json(),
                                  budget=budget.to_json(),
                                  tags=("VACUOUS-BY-CONSTANCY",),
                                  details=details)
        from .checker import _power_trajectory
        for x in interior:
            traj, stationary = _power_trajectory(conn, x, budget.n_max)
            for y in interior:
                instances += 1
                target = mu(y)
                outcome = None
                for _, value in traj:
                    r = lt3(mu(value), target)
                    if r is None:
                        outcome = "undecided"
                        break
                    if r:
                        outcome = "found"
                        break
                if outcome == "undecided":
                    undecided += 1
                elif outcome is None:
                    if stationary is not None:
                        witnesses.append(
                            Witness((x, y), (stationary, mu(stationary), target)))
                    else:
                        inconclusive += 1
        if inconclusive:
            details["inconclusive_pairs"] = inconclusive

    elif prop is FuzzyProp.FLIMIT:
        mu0 = mu(ZERO)
        for x in interior:
            instances += 1
            cur = x
            prev = None
            outcome = None
            for _ in range(budget.iter_cap):
                if prev is not None and eq3(cur, prev) is True:
                    r = eq3(mu(cur), mu0)
                    if r is None:
                        outcome = "undecided"
                    elif r:
                        outcome = "converged"
                    else:
                        witnesses.append(Witness((x,), (cur, mu(cur), mu0)))
                        outcome = "failed"
                    break
                prev = cur
                cur = conn(cur, x)
            if outcome is None:
                # cap reached with the trajectory still moving: accept a
                # final value within epsilon of the target (a budget
                # rule, compared plainly), else give up
                diff = mu(cur) - mu0
                diff = -diff if diff < 0 else diff
                eps = FLOAT_TOL if isinstance(diff, float) else budget.epsilon
                if diff < eps:
                    outcome = "converged"
                else:
                    inconclusive += 1
            if outcome == "undecided":
                undecided += 1
        if inconclusive:
            details["inconclusive_points"] = inconclusive

    else:  # pragma: no cover - exhaustive enum
        raise DomainError(f"unknown fuzzy property {prop}")

    return conclude(prop.value, domain.to_json(), witnesses, undecided,
                    inconclusive=inconclusive, instances=instances,
                    budget=budget.to_json(), details=details)


def check_not_strictly_decreasing(mu: FuzzySubset, conn: Connective,
                                  domain) -> PropertyReport:
    """Strictly monotone operators admit no strictly decreasing
    membership map among their t-subnorms.

    When both premises hold, the report carries a supporting pair
    x < y with mu(x) <= mu(y); a strictly decreasing subnorm under a
    strictly monotone operator would be a counterexample and FAILS.
    """
    from .checker import check_strict_monotonicity

    dom = domain.to_json()
    details = {"mu": mu.name, "operator": conn.name}
    strict = check_strict_monotonicity(conn, domain)
    details["operator_strictly_monotone"] = strict.holds
    if not strict.holds:
        return PropertyReport("not-strictly-decreasing", Verdict.VACUOUS, dom,
                              tags=("premise-not-strict",), details=details)
    carrier = CarrierMonoid.from_connective(conn, domain)
    gate = check_fuzzy_submonoid(mu, carrier, KIND_T_SUBNORM)
    details["mu_is_subnorm"] = gate.holds
    if not gate.holds:
        return PropertyReport("not-strictly-decreasing", Verdict.VACUOUS, dom,
                              witnesses=list(gate.witnesses),
                              tags=("premise-not-subnorm",), details=details)
    pts = domain.points
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            if le_approx(mu(x), mu(y)):
                return PropertyReport(
                    "not-strictly-decreasing", Verdict.HOLDS, dom,
                    witnesses=[Witness((x, y), (mu(x), mu(y)))],
                    details=details)
    return PropertyReport("not-strictly-decreasing", Verdict.FAILS, dom,
                          witnesses=[Witness((pts[0], pts[-1]),
                                             (mu(pts[0]), mu(pts[-1])))],
                          details=details)


def extract_core(mu: FuzzySubset, carrier: CarrierMonoid) -> tuple:
    """Elements with full membership, in carrier order."""
    return tuple(x for x in carrier.elements if eq_approx(mu(x), ONE))


def core_is_submonoid(core: tuple, carrier: CarrierMonoid) -> bool:
    members = set(core)
    if carrier.identity not in members:
        return False
    return all(carrier.op(x, y) in members for x in core for y in core)


def check_discrete_subalgebra(points: Sequence, conn: Connective) -> PropertyReport:
    """HOLDS iff the point set is closed under the operator."""
    pts = tuple(points)
    if ZERO not in pts or ONE not in pts:
        raise DomainError("a discrete subalgebra must contain 0 and 1")
    members = set(pts)
    witnesses = []
    for x in pts:
        for y in pts:
            v = conn(x, y)
            if v not in members:
                witnesses.append(Witness((x, y), (v,)))
    dom = {"kind": "finite", "size": len(pts),
           "points": [format_scalar(p) for p in pts]}
    return conclude("discrete-subalgebra", dom, witnesses, 0, instances=1,
                    details={"operator": conn.name})


# --- characterization sweeps ---

def _min_carrier(domain) -> CarrierMonoid:
    from .connectives import T_M
    return CarrierMonoid.from_connective(T_M, domain)


def _max_carrier(domain) -> CarrierMonoid:
    from .connectives import S_M
    return CarrierMonoid.from_connective(S_M, domain)


def _validate_min_aggregation(conn, domain):
    if conn.role is not Role.AGGREGATION:
        raise DomainError("this case needs the min aggregation operator")
    pts = domain.points
    for x in pts[:: max(1, len(pts) // 4)]:
        for y in pts[:: max(1, len(pts) // 4)]:
            if conn(x, y) != min(x, y):
                raise DomainError("aggregation operator is not min")


def _validate_disjunctive(conn, domain):
    if conn.role is not Role.UNINORM or not eq_approx(conn(ZERO, ONE), ONE):
        raise DomainError("this case needs a disjunctive uninorm")


def _validate_prop20_shape(conn, domain):
    e = conn.identity
    if conn.role is not Role.UNINORM or e is None or not (0 < e < 1):
        raise DomainError("this case needs a uninorm with interior identity")
    for x in domain.points:
        for y in domain.points:
            if x >= e and y >= e:
                if conn(x, y) != max(x, y):
                    raise DomainError("upper square must act as max")
            elif min(x, y) < e < max(x, y):
                if conn(x, y) != min(x, y):
                    raise DomainError("mixed region must act as min")


def _validate_nullnorm(conn, domain):
    if conn.role is not Role.NULLNORM:
        raise DomainError("this case needs a nullnorm")


def _validate_fm_shape(conn, domain):
    _validate_nullnorm(conn, domain)
    k = conn.absorber if conn.absorber is not None else conn(ZERO, ONE)
    for x in domain.points:
        for y in domain.points:
            if x >= k and y >= k:
                if conn(x, y) != min(x, y):
                    raise DomainError("upper square must act as min")


def _mu_values(mu, carrier):
    return [mu(x) for x in carrier.elements]


def _rhs_prop20(mu, conn, carrier):
    e = conn.identity
    if not eq_approx(mu(ONE), ONE):
        return False
    region = [x for x in carrier.elements if le_approx(e, mu(x))]
    for i, x in enumerate(region):
        for y in region[i + 1:]:
            if not le_approx(mu(y), mu(x)):  # non-increasing on the region
                return False
    return True


_CASES = {}


def _case(case_id):
    def reg(fn):
        _CASES[case_id] = fn
        return fn
    return reg


@_case("prop17")
def _case_prop17(mu, conn, domain, carrier):
    _validate_min_aggregation(conn, domain)
    carrier = carrier or _min_carrier(domain)
    lhs = check_fuzzy_submonoid(mu, carrier, a_submonoid_kind(conn)).holds
    rhs = eq_approx(mu(ONE), ONE)
    return lhs, rhs, "iff", carrier


@_case("prop18")
def _case_prop18(mu, conn, domain, carrier):
    _validate_min_aggregation(conn, domain)
    carrier = carrier or _max_carrier(domain)
    lhs = check_fuzzy_submonoid(mu, carrier, a_submonoid_kind(conn)).holds
    rhs = eq_approx(mu(ZERO), ONE)
    return lhs, rhs, "iff", carrier


@_case("disjunctive-uninorm")
def _case_disjunctive(mu, conn, domain, carrier):
    _validate_disjunctive(conn, domain)
    carrier = carrier or _min_carrier(domain)
    lhs = check_fuzzy_submonoid(mu, carrier, u_submonoid_kind(conn)).holds
    rhs = all(eq_approx(v, ONE) for v in _mu_values(mu, carrier))
    return lhs, rhs, "iff", carrier


@_case("prop20")
def _case_prop20(mu, conn, domain, carrier):
    _validate_prop20_shape(conn, domain)
    carrier = carrier or _min_carrier(domain)
    lhs = check_fuzzy_submonoid(mu, carrier, u_submonoid_kind(conn)).holds
    rhs = _rhs_prop20(mu, conn, carrier)
    return lhs, rhs, "iff", carrier


@_case("prop24")
def _case_prop24(mu, conn, domain, carrier):
    _validate_nullnorm(conn, domain)
    carrier = carrier or _min_carrier(domain)
    k = conn.absorber if conn.absorber is not None else conn(ZERO, ONE)
    lhs = check_fuzzy_submonoid(mu, carrier, f_submonoid_kind(conn)).holds
    rhs = all(le_approx(k, v) for v in _mu_values(mu, carrier))
    return lhs, rhs, "implies", carrier


@_case("prop25-tnorm")
def _case_prop25_tnorm(mu, conn, domain, carrier):
    _validate_fm_shape(conn, domain)
    carrier = carrier or _min_carrier(domain)
    k = conn.absorber if conn.absorber is not None else conn(ZERO, ONE)
    lhs = check_fuzzy_submonoid(mu, carrier, f_submonoid_kind(conn)).holds
    rhs = eq_approx(mu(ONE), ONE) and all(le_approx(k, v)
                                          for v in _mu_values(mu, carrier))
    return lhs, rhs, "iff", carrier


@_case("prop25-tconorm")
def _case_prop25_tconorm(mu, conn, domain, carrier):
    _validate_fm_shape(conn, domain)
    carrier = carrier or _max_carrier(domain)
    k = conn.absorber if conn.absorber is not None else conn(ZERO, ONE)
    lhs = check_fuzzy_submonoid(mu, carrier, f_submonoid_kind(conn)).holds
    rhs = eq_approx(mu(ZERO), ONE) and all(le_approx(k, v)
                                           for v in _mu_values(mu, carrier))
    return lhs, rhs, "iff", carrier


def characterize_special_cases(case_id: str, mu: FuzzySubset, conn: Connective,
                               domain, carrier: Optional[CarrierMonoid] = None) -> PropertyReport:
    """Evaluate both sides of a named characterization independently.

    The left side always runs the relevant submonoid check; the right
    side is the closed-form condition. Disagreement on an iff case (or
    a broken implication) is a red-flag FAILS naming the side at fault.
    """
    try:
        case = _CASES[case_id]
    except KeyError:
        raise DomainError(f"unknown characterization case: {case_id!r}") from None
    lhs, rhs, relation, carrier = case(mu, conn, domain, carrier)
    if relation == "iff":
        consistent = lhs == rhs
    else:
        consistent = (not lhs) or rhs
    details = {
        "case": case_id, "mu": mu.name, "operator": conn.name,
        "lhs_submonoid_check": lhs, "rhs_closed_form": rhs,
        "relation": relation,
    }
    if consistent:
        return PropertyReport(f"characterization:{case_id}", Verdict.HOLDS,
                              carrier.to_json(), details=details)
    details["failed_side"] = "rhs" if lhs else "lhs"
    return PropertyReport(f"characterization:{case_id}", Verdict.FAILS,
                          carrier.to_json(),
                          witnesses=[Witness((mu.name,), ())], details=details)


# --- uninorm non-existence refutations ---

def uninorm_family(es: Sequence, tnorms: Sequence[Connective],
                   scnorms: Sequence[Connective]) -> list:
    """Both parametric families over the given parameter grids, in a
    deterministic order."""
    from .connectives import construct_uninorm_max, construct_uninorm_min

    members = []
    for build in (construct_uninorm_min, construct_uninorm_max):
        for e in es:
            for t in tnorms:
                for s in scnorms:
                    members.append(build(e, t, s))
    return members


def refute_uninorm_existence(mu: FuzzySubset, carrier_conn: Connective,
                             family: Sequence[Connective], domain) -> PropertyReport:
    """Confirm that no family member admits ``mu`` as a U-fuzzy
    submonoid of the carrier, re-deriving the boundary witness pair
    (identity against a larger point, or its mirror for disjunction
    carriers) whenever that pair is itself a violation.
    """
    if carrier_conn.role not in (Role.TNORM, Role.TCONORM):
        raise DomainError("the carrier must be a t-norm or t-conorm")
    carrier = CarrierMonoid.from_connective(carrier_conn, domain)
    pts = domain.points
    witnesses = []
    member_verdicts = {}
    for member in family:
        rep = check_fuzzy_submonoid(mu, carrier, u_submonoid_kind(member))
        member_verdicts[member.name] = rep.verdict.value
        if rep.holds:
            continue
        e = member.identity
        if carrier_conn.role is Role.TNORM:
            candidates = [(e, y) for y in pts if y > e]
        else:
            candidates = [(1 - e, y) for y in pts if y < 1 - e]
        for x, y in candidates:
            lhs = member(mu(x), mu(y))
            rhs = mu(carrier_conn(x, y))
            if not le_approx(lhs, rhs):
                witnesses.append(Witness((member.name, x, y), (lhs, rhs)))
                break
    passing = [name for name, v in member_verdicts.items()
               if v == Verdict.HOLDS.value]
    details = {"mu": mu.name, "carrier": carrier_conn.name,
               "members": member_verdicts}
    if passing:
        return PropertyReport("uninorm-refutation", Verdict.FAILS,
                              domain.to_json(),
                              witnesses=[Witness((name,), ()) for name in passing],
                              details=details)
    return PropertyReport("uninorm-refutation", Verdict.HOLDS, domain.to_json(),
                          witnesses=witnesses, details=details)
