"""Axiom suites and classical operator properties over exact grids.

All quantifiers run exhaustively over the supplied domain. Verdicts
are domain-qualified; a FAILS report always carries witnesses that
re-evaluate to violations of the defining inequality. Strict
comparisons in float mode can be undecidable within tolerance, in
which case the affected instances are reported VACUOUS.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from .connectives import Connective, Role
from .errors import BudgetExceededError, DomainError
from .reports import (GridDomain, PropertyReport, SearchBudget, Verdict,
                      Witness, combine, conclude)
from .scalars import (FLOAT_TOL, ONE, ZERO, eq3, eq_approx, format_scalar,
                      le3, lt3)


def _check_eq_binary(conn, pairs, property_id, domain):
    """Equality axiom over explicit (x, y, lhs, rhs) quadruples."""
    witnesses, undecided = [], 0
    count = 0
    for x, y, lhs, rhs in pairs:
        count += 1
        r = eq3(lhs, rhs)
        if r is None:
            undecided += 1
        elif not r:
            witnesses.append(Witness((x, y), (lhs, rhs)))
    return conclude(property_id, domain, witnesses, undecided, instances=count)


def _commutativity(conn, pts, property_id, domain):
    quads = []
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            quads.append((x, y, conn(x, y), conn(y, x)))
    return _check_eq_binary(conn, quads, property_id, domain)


def _associativity(conn, pts, property_id, domain):
    witnesses, undecided = [], 0
    for x in pts:
        for y in pts:
            xy = conn(x, y)
            for z in pts:
                lhs = conn(xy, z)
                rhs = conn(x, conn(y, z))
                r = eq3(lhs, rhs)
                if r is None:
                    undecided += 1
                elif not r:
                    witnesses.append(Witness((x, y, z), (lhs, rhs)))
    return conclude(property_id, domain, witnesses, undecided,
                    instances=len(pts) ** 3)


def _monotonicity(conn, pts, property_id, domain):
    witnesses, undecided = [], 0
    for x in pts:
        for i, y in enumerate(pts):
            vy = conn(x, y)
            wy = conn(y, x)
            for z in pts[i + 1:]:
                r = le3(vy, conn(x, z))
                if r is None:
                    undecided += 1
                elif not r:
                    witnesses.append(Witness((x, y, z), (vy, conn(x, z))))
                r = le3(wy, conn(z, x))
                if r is None:
                    undecided += 1
                elif not r:
                    witnesses.append(Witness((y, z, x), (wy, conn(z, x))))
    return conclude(property_id, domain, witnesses, undecided, instances=1)


def _identity_axiom(conn, pts, e, property_id, domain):
    quads = []
    for x in pts:
        quads.append((x, e, conn(x, e), x))
        quads.append((e, x, conn(e, x), x))
    return _check_eq_binary(conn, quads, property_id, domain)


def _uninorm_identity(conn, pts, property_id, domain):
    if conn.identity is not None:
        rep = _identity_axiom(conn, pts, conn.identity, property_id, domain)
        rep.details["identity"] = format_scalar(conn.identity)
        return rep
    # no declared identity: search the grid for one
    for e in pts:
        if all(eq_approx(conn(x, e), x) for x in pts):
            return PropertyReport(property_id, Verdict.HOLDS, domain,
                                  details={"identity": format_scalar(e),
                                           "identity_searched": True})
    return PropertyReport(property_id, Verdict.FAILS, domain,
                          witnesses=[Witness(("no-identity-element",), ())],
                          details={"identity": None, "identity_searched": True})


def _nullnorm_absorber(conn, pts, property_id, domain):
    k = conn.absorber if conn.absorber is not None else conn(ZERO, ONE)
    witnesses, undecided = [], 0
    for x in pts:
        r = eq3(conn(k, x), k)
        if r is None:
            undecided += 1
        elif not r:
            witnesses.append(Witness((k, x), (conn(k, x), k)))
        if x <= k:
            r = eq3(conn(ZERO, x), x)
            if r is None:
                undecided += 1
            elif not r:
                witnesses.append(Witness((ZERO, x), (conn(ZERO, x), x)))
        if x >= k:
            r = eq3(conn(ONE, x), x)
            if r is None:
                undecided += 1
            elif not r:
                witnesses.append(Witness((ONE, x), (conn(ONE, x), x)))
    rep = conclude(property_id, domain, witnesses, undecided, instances=1)
    rep.details["absorber"] = format_scalar(k)
    return rep


def _aggregation_axioms(conn, pts, domain):
    """Monotonicity plus the two boundary values, at arities 2 and 3."""
    witnesses, undecided = [], 0
    for arity in (2, 3):
        zeros = (ZERO,) * arity
        ones = (ONE,) * arity
        for args, expected in ((zeros, ZERO), (ones, ONE)):
            r = eq3(conn(*args), expected)
            if r is None:
                undecided += 1
            elif not r:
                witnesses.append(Witness(args, (conn(*args), expected)))
    boundary = conclude("A2:boundary", domain, witnesses, undecided, instances=1)
    witnesses, undecided = [], 0
    for x in pts:
        for i, y in enumerate(pts):
            v = conn(x, y)
            for z in pts[i + 1:]:
                r = le3(v, conn(x, z))
                if r is None:
                    undecided += 1
                elif not r:
                    witnesses.append(Witness((x, y, z), (v, conn(x, z))))
    mono = conclude("A1:monotonicity", domain, witnesses, undecided, instances=1)
    return [mono, boundary]


_AXIOM_PREFIX = {Role.TNORM: "T", Role.TCONORM: "S",
                 Role.UNINORM: "U", Role.NULLNORM: "F"}


def check_axioms(conn: Connective, domain: GridDomain) -> PropertyReport:
    """Per-axiom verdicts for the operator's declared role.

    Associativity runs over every triple of domain points; intermediate
    values may leave the grid, which is fine because evaluation stays
    exact for rational-valued operators.
    """
    pts = domain.points
    dom = domain.to_json()
    role = conn.role
    if role is Role.AGGREGATION:
        children = _aggregation_axioms(conn, pts, dom)
    else:
        p = _AXIOM_PREFIX[role]
        children = [
            _commutativity(conn, pts, f"{p}1:commutativity", dom),
            _associativity(conn, pts, f"{p}2:associativity", dom),
            _monotonicity(conn, pts, f"{p}3:monotonicity", dom),
        ]
        if role is Role.TNORM:
            children.append(_identity_axiom(conn, pts, ONE, f"{p}4:boundary", dom))
        elif role is Role.TCONORM:
            children.append(_identity_axiom(conn, pts, ZERO, f"{p}4:boundary", dom))
        elif role is Role.UNINORM:
            children.append(_uninorm_identity(conn, pts, f"{p}4:identity", dom))
        else:
            children.append(_nullnorm_absorber(conn, pts, f"{p}4:absorbing", dom))
    return combine(f"axioms:{role.value}", children, dom,
                   details={"operator": conn.name})


def _require_tnorm(conn: Connective) -> None:
    if conn.role is not Role.TNORM:
        raise DomainError(f"expected a t-norm, got {conn.name} ({conn.role.value})")


def check_strict_monotonicity(conn: Connective, domain) -> PropertyReport:
    """Strict increase in the second argument for every positive first
    argument: T(x, y) < T(x, z) whenever x > 0 and y < z."""
    _require_tnorm(conn)
    pts = domain.points
    witnesses, undecided = [], 0
    instances = 0
    for x in pts:
        if x == 0:
            continue
        for i, y in enumerate(pts):
            vy = conn(x, y)
            for z in pts[i + 1:]:
                instances += 1
                vz = conn(x, z)
                r = lt3(vy, vz)
                if r is None:
                    undecided += 1
                elif not r:
                    witnesses.append(Witness((x, y, z), (vy, vz)))
    return conclude("strict-monotonicity", domain.to_json(), witnesses, undecided,
                    instances=instances, details={"operator": conn.name})


def check_cancellation(conn: Connective, domain, conditional: bool = False) -> PropertyReport:
    """Cancellation law, plain or conditional.

    Plain: T(x, y) = T(x, z) forces x = 0 or y = z. Conditional: the
    same equation with a positive common value forces y = z.
    """
    _require_tnorm(conn)
    pts = domain.points
    witnesses, undecided = [], 0
    instances = 0
    for x in pts:
        if not conditional and x == 0:
            continue
        for i, y in enumerate(pts):
            vy = conn(x, y)
            for z in pts[i + 1:]:
                instances += 1
                vz = conn(x, z)
                if not eq_approx(vy, vz):
                    continue
                if conditional:
                    r = lt3(ZERO, vy)
                    if r is None:
                        undecided += 1
                    elif r:
                        witnesses.append(Witness((x, y, z), (vy, vz)))
                else:
                    witnesses.append(Witness((x, y, z), (vy, vz)))
    prop = "conditional-cancellation" if conditional else "cancellation"
    return conclude(prop, domain.to_json(), witnesses, undecided,
                    instances=instances, details={"operator": conn.name})


def _power_trajectory(conn, x, cap):
    """Powers x^(1)..x^(cap) with early stop at an exact fixpoint.

    Returns (trajectory, stationary_value). A fixpoint persists forever
    (T(v, x) = v reproduces itself), so a stationary trajectory decides
    the search exactly.
    """
    traj = []
    cur = x
    stationary = None
    for n in range(1, cap + 1):
        traj.append((n, cur))
        if n == cap:
            break
        nxt = conn(cur, x)
        if eq3(nxt, cur) is True:
            stationary = cur
            break
        cur = nxt
    return traj, stationary


def check_archimedean(conn: Connective, domain, budget: Optional[SearchBudget] = None) -> PropertyReport:
    """Existential power search: for interior x, y some power of x must
    drop strictly below y within the budget.

    A pair whose trajectory goes exactly stationary above the target
    provably fails; a pair still strictly decreasing at the cap is
    inconclusive.
    """
    _require_tnorm(conn)
    budget = budget or SearchBudget()
    interior = domain.interior
    witnesses, undecided = [], 0
    inconclusive = 0
    max_witness_n = 0
    for x in interior:
        # trajectory is independent of y; walk it once per x
        traj, stationary_at = _power_trajectory(conn, x, budget.n_max)
        for y in interior:
            target = y
            found = None
            for n, value in traj:
                r = lt3(value, target)
                if r is None:
                    undecided += 1
                    found = "undecided"
                    break
                if r:
                    found = n
                    break
            if found == "undecided":
                continue
            if found is not None:
                max_witness_n = max(max_witness_n, found)
                continue
            if stationary_at is not None:
                witnesses.append(Witness((x, y), (stationary_at,)))
            else:
                inconclusive += 1
    details = {"operator": conn.name}
    if max_witness_n:
        details["max_witness_n"] = max_witness_n
    if inconclusive:
        details["inconclusive_pairs"] = inconclusive
    return conclude("archimedean", domain.to_json(), witnesses, undecided,
                    inconclusive=inconclusive, instances=len(interior) ** 2,
                    budget=budget.to_json(), details=details)


def check_limit_property(conn: Connective, domain, budget: Optional[SearchBudget] = None) -> PropertyReport:
    """Power trajectories of interior points must approach 0.

    Convergence is declared on exact zero or on dropping strictly below
    epsilon; an exactly stationary positive trajectory fails; a still
    moving trajectory at the iteration cap is inconclusive.
    """
    _require_tnorm(conn)
    budget = budget or SearchBudget()
    witnesses = []
    inconclusive = 0
    convergence = {}
    for x in domain.interior:
        cur = x
        decided = False
        prev = None
        for n in range(1, budget.iter_cap + 1):
            # the threshold is a budget rule, so it compares plainly;
            # float-valued trajectories converge at the float tolerance
            eps = FLOAT_TOL if isinstance(cur, float) else budget.epsilon
            if cur < eps:
                convergence[format_scalar(x)] = n
                decided = True
                break
            if prev is not None and eq3(cur, prev) is True:
                witnesses.append(Witness((x,), (cur,)))
                decided = True
                break
            prev = cur
            cur = conn(cur, x)
        if not decided:
            inconclusive += 1
    details = {"operator": conn.name, "convergence": convergence}
    if inconclusive:
        details["inconclusive_points"] = inconclusive
    return conclude("limit-property", domain.to_json(), witnesses,
                    inconclusive=inconclusive, instances=len(domain.interior),
                    budget=budget.to_json(), details=details)


def _in_mixed_region(x, y, e) -> bool:
    lo, hi = (x, y) if x <= y else (y, x)
    return lo < e < hi


def classify_uninorm(conn: Connective, domain) -> PropertyReport:
    """Boundary flags plus min/max behavior on the mixed region.

    The verdict reflects the one checkable inequality (values on the
    mixed region bounded between min and max); the classification flags
    live in the details.
    """
    if conn.role not in (Role.UNINORM, Role.TNORM, Role.TCONORM):
        raise DomainError(f"classify expects a uninorm-like operator, got {conn.name}")
    pts = domain.points
    v10 = conn(ONE, ZERO)
    conjunctive = eq_approx(v10, ZERO)
    disjunctive = eq_approx(v10, ONE)
    if conjunctive:
        locally_internal = all(eq_approx(conn(ONE, x), ONE) or eq_approx(conn(ONE, x), x)
                               for x in pts)
    elif disjunctive:
        locally_internal = all(eq_approx(conn(ZERO, x), ZERO) or eq_approx(conn(ZERO, x), x)
                               for x in pts)
    else:
        locally_internal = None
    idempotent = all(eq_approx(conn(x, x), x) for x in pts)

    e = conn.identity
    if e is None:
        for cand in pts:
            if all(eq_approx(conn(x, cand), x) for x in pts):
                e = cand
                break
    witnesses = []
    behavior_min = behavior_max = True
    mixed_pairs = 0
    if e is not None:
        for x in pts:
            for y in pts:
                if not _in_mixed_region(x, y, e):
                    continue
                mixed_pairs += 1
                v = conn(x, y)
                lo, hi = (x, y) if x <= y else (y, x)
                if not (le3(lo, v) is True and le3(v, hi) is True):
                    witnesses.append(Witness((x, y), (v,)))
                if not eq_approx(v, lo):
                    behavior_min = False
                if not eq_approx(v, hi):
                    behavior_max = False
    if mixed_pairs == 0:
        mixed = "empty"
    elif behavior_min and not behavior_max:
        mixed = "min"
    elif behavior_max and not behavior_min:
        mixed = "max"
    elif behavior_min and behavior_max:
        mixed = "degenerate"
    else:
        mixed = "mixed"
    details = {
        "operator": conn.name,
        "conjunctive": conjunctive,
        "disjunctive": disjunctive,
        "locally_internal_on_boundary": locally_internal,
        "idempotent_diagonal": idempotent,
        "mixed_region": mixed,
        "identity": None if e is None else format_scalar(e),
    }
    return conclude("uninorm-classification", domain.to_json(), witnesses, 0,
                    instances=max(mixed_pairs, 1), details=details)


# --- implication harness over enumerated universes ---

@dataclass(frozen=True)
class Universe:
    """A finite enumeration plus named boolean property evaluators."""

    label: str
    members: tuple  # of (label, element)
    evaluators: Mapping[str, Callable]

    @property
    def size(self) -> int:
        return len(self.members)


def verify_implication(premise_id: str, conclusion_id: str, universe: Universe,
                       max_members: int = 200_000) -> PropertyReport:
    """Search the universe for elements where the premise holds and the
    conclusion does not; an empty list confirms the implication there."""
    if universe.size > max_members:
        raise BudgetExceededError(
            f"universe {universe.label!r} has {universe.size} members, "
            f"budget allows {max_members}", size_estimate=universe.size)
    try:
        premise = universe.evaluators[premise_id]
        conclusion = universe.evaluators[conclusion_id]
    except KeyError as exc:
        raise DomainError(f"property {exc} is not checkable on {universe.label!r}") from None
    witnesses = []
    checked = 0
    for label, element in universe.members:
        checked += 1
        if premise(element) and not conclusion(element):
            witnesses.append(Witness((label,), ()))
    return conclude(f"{premise_id}=>{conclusion_id}",
                    {"kind": "universe", "label": universe.label, "size": universe.size},
                    witnesses, 0, instances=checked,
                    details={"checked": checked})


def builtin_tnorm_universe(conns: Sequence[Connective], domain,
                           budget: Optional[SearchBudget] = None) -> Universe:
    """Universe over named t-norms with the classical properties as
    evaluators, each computed by the corresponding exhaustive check."""
    budget = budget or SearchBudget()
    members = tuple((c.name, c) for c in conns)
    evaluators = {
        "strict-monotone": lambda c: check_strict_monotonicity(c, domain).holds,
        "cancellation": lambda c: check_cancellation(c, domain).holds,
        "conditional-cancellation": lambda c: check_cancellation(c, domain, conditional=True).holds,
        "archimedean": lambda c: check_archimedean(c, domain, budget).holds,
        "limit-property": lambda c: check_limit_property(c, domain, budget).holds,
    }
    label = "builtins{" + ",".join(c.short_name for c in conns) + "}@" + domain.label()
    return Universe(label, members, evaluators)
