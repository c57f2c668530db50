"""Finite bounded lattices and lattice-valued substructures.

Lattices come in as cover relations; construction computes the
transitive closure, materializes meet and join tables, and fails loudly
on any pair without a unique meet or join, or on a missing top or
bottom. Degrees in the lattice-valued checks are lattice elements, so
"less than" means the lattice order and incomparable outcomes are
counted rather than silently dropped.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Optional, Sequence

from .errors import (BudgetExceededError, DomainError, NotALatticeError,
                     InputFormatError, TotalityError, UnboundedPosetError)
from .reports import PropertyReport, Verdict, Witness, combine, conclude


@dataclass(frozen=True)
class FiniteLattice:
    elements: tuple
    leq_pairs: frozenset
    meet_table: Mapping
    join_table: Mapping
    bottom: str
    top: str
    name: str = ""

    def leq(self, a, b) -> bool:
        return (a, b) in self.leq_pairs

    def lt(self, a, b) -> bool:
        return a != b and (a, b) in self.leq_pairs

    def comparable(self, a, b) -> bool:
        return (a, b) in self.leq_pairs or (b, a) in self.leq_pairs

    def meet(self, a, b):
        return self.meet_table[(a, b)]

    def join(self, a, b):
        return self.join_table[(a, b)]

    @property
    def interior(self) -> tuple:
        return tuple(x for x in self.elements if x not in (self.bottom, self.top))

    def to_json(self) -> dict:
        return {"kind": "lattice", "name": self.name or "lattice",
                "size": len(self.elements), "elements": list(self.elements)}


def build_lattice(elements: Sequence, covers: Sequence, name: str = "") -> FiniteLattice:
    """Construct from a cover relation.

    The cover relation must be acyclic; reachability gives the order.
    Every pair needs a unique greatest lower bound and least upper
    bound, and the order needs global top and bottom elements.
    """
    elems = tuple(elements)
    if len(set(elems)) != len(elems) or not elems:
        raise DomainError("lattice elements must be non-empty and distinct")
    index = {e: i for i, e in enumerate(elems)}
    succ = {e: set() for e in elems}
    for pair in covers:
        lo, hi = pair
        if lo not in index or hi not in index:
            raise DomainError(f"cover ({lo}, {hi}) mentions unknown elements")
        succ[lo].add(hi)
    # reachability closure
    reach = {e: {e} for e in elems}
    changed = True
    while changed:
        changed = False
        for e in elems:
            grow = set()
            for f in reach[e]:
                grow |= succ[f]
            if not grow <= reach[e]:
                reach[e] |= grow
                changed = True
    for a in elems:
        for b in elems:
            if a != b and b in reach[a] and a in reach[b]:
                raise DomainError(f"cover relation has a cycle through {a} and {b}")
    leq = frozenset((a, b) for a in elems for b in reach[a])
    # bounds first: a topless poset fails join uniqueness too, but the
    # missing bound is the better diagnostic
    bottoms = [e for e in elems if all((e, f) in leq for f in elems)]
    tops = [e for e in elems if all((f, e) in leq for f in elems)]
    if not bottoms:
        raise UnboundedPosetError("poset has no bottom element")
    if not tops:
        raise UnboundedPosetError("poset has no top element")

    def lower_bounds(a, b):
        return [c for c in elems if (c, a) in leq and (c, b) in leq]

    def upper_bounds(a, b):
        return [c for c in elems if (a, c) in leq and (b, c) in leq]

    meet_table, join_table = {}, {}
    for a in elems:
        for b in elems:
            lbs = lower_bounds(a, b)
            greatest = [c for c in lbs if all((d, c) in leq for d in lbs)]
            if len(greatest) != 1:
                raise NotALatticeError(f"pair ({a}, {b}) has no unique meet")
            meet_table[(a, b)] = greatest[0]
            ubs = upper_bounds(a, b)
            least = [c for c in ubs if all((c, d) in leq for d in ubs)]
            if len(least) != 1:
                raise NotALatticeError(f"pair ({a}, {b}) has no unique join")
            join_table[(a, b)] = least[0]
    return FiniteLattice(elems, leq, meet_table, join_table,
                         bottoms[0], tops[0], name=name)


def chain_lattice(size: int) -> FiniteLattice:
    if size < 2:
        raise DomainError("a chain lattice needs at least 2 elements")
    if size == 2:
        labels = ["0", "1"]
    elif size == 3:
        labels = ["0", "m", "1"]
    else:
        labels = ["0"] + [f"m{i}" for i in range(1, size - 1)] + ["1"]
    covers = list(zip(labels, labels[1:]))
    return build_lattice(labels, covers, name=f"chain{size}")


def diamond_lattice() -> FiniteLattice:
    """The four-element lattice with two incomparable mid elements."""
    return build_lattice(["0", "a", "b", "1"],
                         [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
                         name="M2")


def interval_lattice(lat: FiniteLattice, lo, hi) -> FiniteLattice:
    """The sublattice of elements between lo and hi inclusive."""
    if not lat.leq(lo, hi):
        raise DomainError(f"{lo} is not below {hi}")
    members = [x for x in lat.elements if lat.leq(lo, x) and lat.leq(x, hi)]
    leq = frozenset((a, b) for a in members for b in members if lat.leq(a, b))
    meet = {(a, b): lat.meet(a, b) for a in members for b in members}
    join = {(a, b): lat.join(a, b) for a in members for b in members}
    return FiniteLattice(tuple(members), leq, meet, join, lo, hi,
                         name=f"{lat.name}[{lo},{hi}]")


def lattice_from_json(obj: dict, *, path: Optional[str] = None) -> FiniteLattice:
    """Parse {"elements": [...], "covers": [[lo, hi], ...]}."""
    for key in ("elements", "covers"):
        if key not in obj:
            raise InputFormatError("missing key", path=path, field=key)
    elements = obj["elements"]
    covers = obj["covers"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InputFormatError("elements must be a list of labels",
                              path=path, field="elements")
    if not isinstance(covers, list) or not all(
            isinstance(c, list) and len(c) == 2 for c in covers):
        raise InputFormatError("covers must be a list of [lower, upper] pairs",
                              path=path, field="covers")
    try:
        return build_lattice(elements, [tuple(c) for c in covers],
                             name=obj.get("name", ""))
    except (DomainError, NotALatticeError, UnboundedPosetError) as exc:
        raise InputFormatError(str(exc), path=path, field="covers") from None


def load_lattice(path: str) -> FiniteLattice:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc.msg}", path=path,
                              line=exc.lineno) from None
    if not isinstance(obj, dict):
        raise InputFormatError("top-level value must be an object", path=path)
    return lattice_from_json(obj, path=path)


# --- lattice conjunction tables ---

@dataclass(frozen=True)
class LatticeTNorm:
    lattice: FiniteLattice
    table: Mapping
    name: str = "lattice-tnorm"

    def __call__(self, x, y):
        return self.table[(x, y)]


def meet_tnorm(lat: FiniteLattice) -> LatticeTNorm:
    return LatticeTNorm(lat, dict(lat.meet_table), name=f"meet({lat.name})")


def check_lattice_tnorm(cand, lat: FiniteLattice) -> PropertyReport:
    """The four conditions: monotone in the second argument, associative,
    commutative, and top-identity."""
    table = cand.table if isinstance(cand, LatticeTNorm) else cand
    elems = lat.elements
    dom = lat.to_json()
    for x in elems:
        for y in elems:
            if (x, y) not in table:
                raise DomainError(f"table missing entry ({x}, {y})")

    def op(x, y):
        return table[(x, y)]

    mono_w = []
    for x in elems:
        for y in elems:
            for z in elems:
                if lat.leq(y, z) and not lat.leq(op(x, y), op(x, z)):
                    mono_w.append(Witness((x, y, z), (op(x, y), op(x, z))))
    assoc_w = []
    for x in elems:
        for y in elems:
            for z in elems:
                lhs = op(op(x, y), z)
                rhs = op(x, op(y, z))
                if lhs != rhs:
                    assoc_w.append(Witness((x, y, z), (lhs, rhs)))
    comm_w = []
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if op(x, y) != op(y, x):
                comm_w.append(Witness((x, y), (op(x, y), op(y, x))))
    bound_w = []
    for x in elems:
        if op(x, lat.top) != x:
            bound_w.append(Witness((x, lat.top), (op(x, lat.top), x)))
    children = [
        conclude("L1:monotonicity", dom, mono_w, 0, instances=1),
        conclude("L2:associativity", dom, assoc_w, 0, instances=1),
        conclude("L3:commutativity", dom, comm_w, 0, instances=1),
        conclude("L4:boundary", dom, bound_w, 0, instances=1),
    ]
    return combine("lattice-tnorm", children, dom)


def enumerate_lattice_tnorms(lat: FiniteLattice, cap: Optional[int] = None) -> list:
    """All conjunction tables on the lattice, by backtracking.

    Cell values are bounded above by the meet of their coordinates and
    propagate monotonicity constraints against already assigned cells;
    associativity is filtered at the leaves. Deterministic order.
    """
    elems = lat.elements
    n = len(elems)
    if n > 6:
        free_count = sum(1 for i in range(n) for j in range(i, n)
                         if elems[i] != lat.top and elems[j] != lat.top)
        raise BudgetExceededError(
            f"lattice of size {n} exceeds the enumeration budget",
            size_estimate=n ** free_count)
    non_top = [e for e in elems if e != lat.top]
    free = [(non_top[i], non_top[j]) for i in range(len(non_top))
            for j in range(i, len(non_top))]
    results = []

    def leq(a, b):
        return lat.leq(a, b)

    def candidates(pair, assigned):
        x, y = pair
        cap_elem = lat.meet(x, y)
        out = []
        for v in elems:
            if not leq(v, cap_elem):
                continue
            ok = True
            for (px, py), pv in assigned.items():
                # monotone against comparable assigned cells (both orders)
                for qx, qy in ((px, py), (py, px)):
                    if leq(qx, x) and leq(qy, y) and not leq(pv, v):
                        ok = False
                    if leq(x, qx) and leq(y, qy) and not leq(v, pv):
                        ok = False
                if not ok:
                    break
            if ok:
                out.append(v)
        return out

    def full_table(assigned):
        table = {}
        for x in elems:
            table[(x, lat.top)] = x
            table[(lat.top, x)] = x
        for (x, y), v in assigned.items():
            table[(x, y)] = v
            table[(y, x)] = v
        return table

    def associative(table):
        for x in elems:
            for y in elems:
                xy = table[(x, y)]
                for z in elems:
                    if table[(xy, z)] != table[(x, table[(y, z)])]:
                        return False
        return True

    def walk(pos, assigned):
        if cap is not None and len(results) >= cap:
            return
        if pos == len(free):
            table = full_table(assigned)
            if associative(table):
                label = ",".join(str(assigned[p]) for p in free)
                results.append(LatticeTNorm(lat, table, name=f"T[{label}]"))
            return
        pair = free[pos]
        for v in candidates(pair, assigned):
            assigned[pair] = v
            walk(pos + 1, assigned)
            del assigned[pair]

    walk(0, {})
    return results


def restrict_tnorm(t: LatticeTNorm, sub: FiniteLattice) -> LatticeTNorm:
    """Restriction to an interval sublattice; closure is verified first."""
    members = set(sub.elements)
    table = {}
    for x in sub.elements:
        for y in sub.elements:
            v = t(x, y)
            if v not in members:
                raise DomainError(
                    f"restriction is not closed: ({x}, {y}) maps to {v}")
            table[(x, y)] = v
    return LatticeTNorm(sub, table, name=f"{t.name}|{sub.name}")


# --- lattice-valued membership maps ---

@dataclass(frozen=True)
class LSubset:
    lattice: FiniteLattice
    fn: Callable
    name: str = "lsubset"

    def __call__(self, x):
        return self.fn(x)


def lsubset_identity(lat: FiniteLattice) -> LSubset:
    return LSubset(lat, lambda x: x, name="identity")


def lsubset_top(lat: FiniteLattice) -> LSubset:
    return LSubset(lat, lambda x: lat.top, name="one")


def lsubset_table(lat: FiniteLattice, mapping: Mapping, name: str = "") -> LSubset:
    entries = dict(mapping)

    def fn(x):
        try:
            return entries[x]
        except KeyError:
            raise TotalityError(f"lattice membership table has no value at {x}") from None

    label = name or "mu(" + ",".join(str(entries[e]) for e in lat.elements) + ")"
    return LSubset(lat, fn, name=label)


def enumerate_lsubsets(lat: FiniteLattice) -> Iterator[LSubset]:
    for values in itertools.product(lat.elements, repeat=len(lat.elements)):
        yield lsubset_table(lat, dict(zip(lat.elements, values)))


def check_lattice_fuzzy_subnorm(mu: LSubset, t: LatticeTNorm) -> PropertyReport:
    """Meet of memberships below the membership of the product, plus
    full membership at the top."""
    lat = t.lattice
    witnesses = []
    for x in lat.elements:
        for y in lat.elements:
            lhs = lat.meet(mu(x), mu(y))
            rhs = mu(t(x, y))
            if not lat.leq(lhs, rhs):
                witnesses.append(Witness((x, y), (lhs, rhs)))
    top_val = mu(lat.top)
    if top_val != lat.top:
        witnesses.append(Witness((lat.top,), (top_val, lat.top)))
    return conclude("lattice-fuzzy-t-subnorm", lat.to_json(), witnesses, 0,
                    instances=1, details={"mu": mu.name, "tnorm": t.name})


def _lattice_powers(t: LatticeTNorm, x) -> tuple:
    """x, x^2, ... to the fixpoint; finite lattices always reach one."""
    seq = [x]
    cur = x
    for _ in range(len(t.lattice.elements) + 1):
        nxt = t(cur, x)
        if nxt == cur:
            return tuple(seq), cur
        seq.append(nxt)
        cur = nxt
    return tuple(seq), cur  # pragma: no cover - non-monotone tables only


def check_lattice_fuzzy_property(mu: LSubset, t: LatticeTNorm, prop,
                                 gate: bool = True) -> PropertyReport:
    """Lattice renderings of the five fuzzified properties.

    Order comparisons between membership values use the lattice order;
    pairs the definition writes as y < z quantify over comparable pairs
    only, and both the exclusions and incomparable outcomes are counted
    in the report. Power sequences are decided by exact stationarity.
    ``gate=False`` skips the t-subnorm precondition and evaluates the
    bare quantified statement.
    """
    from .fuzzy import FuzzyProp

    lat = t.lattice
    dom = lat.to_json()
    details = {"mu": mu.name, "tnorm": t.name}
    if gate:
        subnorm = check_lattice_fuzzy_subnorm(mu, t)
        if not subnorm.holds:
            return PropertyReport(f"lattice-{prop.value}", Verdict.VACUOUS, dom,
                                  witnesses=list(subnorm.witnesses),
                                  tags=("NOT_A_SUBNORM",), details=details)
    elems = lat.elements
    witnesses = []
    instances = 0
    excluded = 0
    incomparable_outcomes = 0

    comparable_pairs = []
    for i, y in enumerate(elems):
        for z in elems[i + 1:]:
            if lat.lt(y, z):
                comparable_pairs.append((y, z))
            elif lat.lt(z, y):
                comparable_pairs.append((z, y))
            else:
                excluded += 1

    if prop is FuzzyProp.FSTRICT:
        for x in lat.interior:
            for y, z in comparable_pairs:
                instances += 1
                vy = mu(t(x, y))
                vz = mu(t(x, z))
                if not lat.lt(vz, vy):  # need mu(T(x,y)) > mu(T(x,z))
                    if not lat.comparable(vy, vz):
                        incomparable_outcomes += 1
                    witnesses.append(Witness((x, y, z), (vy, vz)))
        details["excluded_incomparable_pairs"] = excluded

    elif prop is FuzzyProp.FCANCEL:
        for x in elems:
            if x == lat.bottom:
                continue
            for i, y in enumerate(elems):
                for z in elems[i + 1:]:
                    instances += 1
                    vy = mu(t(x, y))
                    if vy == mu(t(x, z)):
                        witnesses.append(Witness((x, y, z), (vy,)))

    elif prop is FuzzyProp.FCONDCANCEL:
        mu0 = mu(lat.bottom)
        for x in elems:
            for i, y in enumerate(elems):
                for z in elems[i + 1:]:
                    instances += 1
                    vy = mu(t(x, y))
                    if vy != mu(t(x, z)) or not lat.lt(mu0, vy):
                        continue
                    if mu(y) != mu(z):
                        witnesses.append(Witness((x, y, z), (vy, mu(y), mu(z))))

    elif prop is FuzzyProp.FARCH:
        for x in lat.interior:
            seq, fix = _lattice_powers(t, x)
            for y in lat.interior:
                instances += 1
                target = mu(y)
                found = any(lat.lt(mu(v), target) for v in seq + (fix,))
                if not found:
                    if any(not lat.comparable(mu(v), target) for v in seq + (fix,)):
                        incomparable_outcomes += 1
                    witnesses.append(Witness((x, y), (fix, mu(fix), target)))

    elif prop is FuzzyProp.FLIMIT:
        mu0 = mu(lat.bottom)
        for x in lat.interior:
            instances += 1
            _, fix = _lattice_powers(t, x)
            if mu(fix) != mu0:
                witnesses.append(Witness((x,), (fix, mu(fix), mu0)))

    else:  # pragma: no cover
        raise DomainError(f"unknown property {prop}")

    if incomparable_outcomes:
        details["incomparable_outcomes"] = incomparable_outcomes
    return conclude(f"lattice-{prop.value}", dom, witnesses, 0,
                    instances=instances, details=details)


# --- lattice-valued equalities and vague structure ---

def validate_lattice_fuzzy_equality(fn: Callable, t: LatticeTNorm,
                                    lat: FiniteLattice) -> PropertyReport:
    elems = lat.elements
    dom = lat.to_json()
    refl_w = [Witness((x,), (fn(x, x),)) for x in elems if fn(x, x) != lat.top]
    sym_w = []
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if fn(x, y) != fn(y, x):
                sym_w.append(Witness((x, y), (fn(x, y), fn(y, x))))
    trans_w = []
    for x in elems:
        for y in elems:
            exy = fn(x, y)
            for z in elems:
                lhs = t(exy, fn(y, z))
                if not lat.leq(lhs, fn(x, z)):
                    trans_w.append(Witness((x, y, z), (lhs, fn(x, z))))
    separates = all(x == y or fn(x, y) != lat.top
                    for x in elems for y in elems)
    children = [
        conclude("E1:reflexivity", dom, refl_w, 0, instances=len(elems)),
        conclude("E2:symmetry", dom, sym_w, 0, instances=1),
        conclude("E3:transitivity", dom, trans_w, 0, instances=1),
    ]
    return combine("lattice-fuzzy-equality", children, dom,
                   details={"tnorm": t.name, "separates_points": separates})


def lattice_crisp_equality(lat: FiniteLattice) -> Callable:
    def fn(x, y):
        return lat.top if x == y else lat.bottom
    return fn


def enumerate_lattice_equalities(lat: FiniteLattice, t: LatticeTNorm) -> list:
    """All symmetric reflexive candidates filtered by transitivity."""
    elems = lat.elements
    pairs = [(elems[i], elems[j]) for i in range(len(elems))
             for j in range(i + 1, len(elems))]
    out = []
    for values in itertools.product(elems, repeat=len(pairs)):
        table = {(x, x): lat.top for x in elems}
        for (x, y), v in zip(pairs, values):
            table[(x, y)] = v
            table[(y, x)] = v

        def fn(a, b, _table=table):
            return _table[(a, b)]

        if validate_lattice_fuzzy_equality(fn, t, lat).holds:
            out.append(table)
    return out


def induce_lattice_vague_tnorm(equality: Mapping, t: LatticeTNorm) -> dict:
    """Ternary degree table: degree that t(x, y) equals z."""
    lat = t.lattice
    table = {}
    for x in lat.elements:
        for y in lat.elements:
            v = t(x, y)
            for z in lat.elements:
                table[(x, y, z)] = equality[(v, z)]
    return table


def check_lattice_vague_structures(equality_fn, t: LatticeTNorm,
                                   lat: FiniteLattice,
                                   max_tuples: int = 2_000_000) -> PropertyReport:
    """Composite check: equality axioms, the three vague-operation
    conditions for the induced ternary table, the monoid inequality,
    and commutativity, all with lattice-valued degrees."""
    if len(lat.elements) ** 7 > max_tuples:
        raise BudgetExceededError(
            f"lattice of size {len(lat.elements)} exceeds the 7-tuple budget",
            size_estimate=len(lat.elements) ** 7)
    dom = lat.to_json()
    eq_report = validate_lattice_fuzzy_equality(equality_fn, t, lat)
    children = [eq_report]
    if eq_report.holds:
        elems = lat.elements
        eq_table = {(a, b): equality_fn(a, b) for a in elems for b in elems}
        mu = induce_lattice_vague_tnorm(eq_table, t)
        children.append(_lattice_vague_op_conditions(mu, eq_table, t, lat))
        children.append(_lattice_vague_monoid(mu, eq_table, t, lat))
        children.append(_lattice_vague_commutativity(mu, eq_table, t, lat))
    return combine("lattice-vague-structures", children, dom,
                   details={"tnorm": t.name})


def _lattice_vague_op_conditions(mu, eq, t, lat) -> PropertyReport:
    elems = lat.elements
    dom = lat.to_json()
    bot = lat.bottom
    ext_w = []
    for x in elems:
        for y in elems:
            for z in elems:
                m = mu[(x, y, z)]
                if m == bot:
                    continue
                for x2 in elems:
                    f1 = t(m, eq[(x, x2)])
                    if f1 == bot:
                        continue
                    for y2 in elems:
                        f2 = t(f1, eq[(y, y2)])
                        if f2 == bot:
                            continue
                        for z2 in elems:
                            lhs = t(f2, eq[(z, z2)])
                            if not lat.leq(lhs, mu[(x2, y2, z2)]):
                                ext_w.append(Witness((x, y, z, x2, y2, z2),
                                                     (lhs, mu[(x2, y2, z2)])))
    fun_w = []
    for x in elems:
        for y in elems:
            for z in elems:
                m = mu[(x, y, z)]
                for z2 in elems:
                    lhs = t(m, mu[(x, y, z2)])
                    if not lat.leq(lhs, eq[(z, z2)]):
                        fun_w.append(Witness((x, y, z, z2), (lhs, eq[(z, z2)])))
    tot_w = []
    for x in elems:
        for y in elems:
            if not any(mu[(x, y, z)] == lat.top for z in elems):
                tot_w.append(Witness((x, y), ()))
    children = [
        conclude("V1:extensionality", dom, ext_w, 0, instances=1),
        conclude("V2:functionality", dom, fun_w, 0, instances=1),
        conclude("V3:totality", dom, tot_w, 0, instances=1),
    ]
    return combine("lattice-vague-op", children, dom)


def _lattice_vague_monoid(mu, eq, t, lat) -> PropertyReport:
    elems = lat.elements
    bot = lat.bottom
    witnesses = []
    for y in elems:
        for z in elems:
            for d in elems:
                f1 = mu[(y, z, d)]
                if f1 == bot:
                    continue
                for x in elems:
                    for m in elems:
                        f2 = t(f1, mu[(x, d, m)])
                        if f2 == bot:
                            continue
                        for q in elems:
                            f3 = t(f2, mu[(x, y, q)])
                            if f3 == bot:
                                continue
                            for w in elems:
                                lhs = t(f3, mu[(q, z, w)])
                                if not lat.leq(lhs, eq[(m, w)]):
                                    witnesses.append(
                                        Witness((x, y, z, d, m, q, w),
                                                (lhs, eq[(m, w)])))
    identity = None
    for e in elems:
        if all(t(mu[(e, a, a)], mu[(a, e, a)]) == lat.top for a in elems):
            identity = e
            break
    if identity is None:
        witnesses.append(Witness(("no-identity-element",), ()))
    rep = conclude("lattice-vague-monoid", lat.to_json(), witnesses, 0, instances=1)
    rep.details["identity"] = identity
    return rep


def _lattice_vague_commutativity(mu, eq, t, lat) -> PropertyReport:
    elems = lat.elements
    witnesses = []
    for a in elems:
        for b in elems:
            for m in elems:
                f1 = mu[(a, b, m)]
                if f1 == lat.bottom:
                    continue
                for w in elems:
                    lhs = t(f1, mu[(b, a, w)])
                    if not lat.leq(lhs, eq[(m, w)]):
                        witnesses.append(Witness((a, b, m, w), (lhs, eq[(m, w)])))
    return conclude("lattice-vague-commutativity", lat.to_json(), witnesses, 0,
                    instances=1)


def check_lattice_vague_strict_monotone(mu, lat: FiniteLattice,
                                        reading: str = "any-degree") -> PropertyReport:
    """Lattice-degree analog of the monotonicity law on induced tables."""
    elems = lat.elements
    witnesses = []
    instances = 0
    for x in elems:
        for y in elems:
            if not lat.lt(x, y):
                continue
            for z in elems:
                for a in elems:
                    da = mu[(x, z, a)]
                    for b in elems:
                        db = mu[(y, z, b)]
                        if reading == "crisp":
                            if not (da == lat.top and db == lat.top):
                                continue
                        elif da != db:
                            continue
                        instances += 1
                        if not lat.lt(a, b):
                            witnesses.append(Witness((x, y, z, a, b), (da, db)))
    rep = conclude("lattice-vague-strict-monotonicity", lat.to_json(),
                   witnesses, 0, instances=instances)
    rep.details["reading"] = reading
    return rep


def check_lattice_vague_cancellation(mu, lat: FiniteLattice,
                                     reading: str = "any-degree") -> PropertyReport:
    elems = lat.elements
    witnesses = []
    instances = 0
    for a in elems:
        for b in elems:
            for x in elems:
                for c in elems:
                    da = mu[(a, x, c)]
                    db = mu[(b, x, c)]
                    if reading == "crisp":
                        if not (da == lat.top and db == lat.top):
                            continue
                    elif da != db:
                        continue
                    instances += 1
                    if a != b:
                        witnesses.append(Witness((a, b, x, c), (da, db)))
    rep = conclude("lattice-vague-cancellation", lat.to_json(), witnesses, 0,
                   instances=instances)
    rep.details["reading"] = reading
    return rep
