"""Degree-valued equalities and vague operations on the unit interval.

A T-fuzzy equality assigns each pair a degree of sameness, transitive
through the chosen conjunction. A vague binary operation assigns each
triple (x, y, z) the degree to which x combined with y "is" z; the
canonical instance sets that degree to the equality between the
operator value and z. All checks here quantify over full Cartesian
powers of the carrier, so carriers are kept small and the tuple count
is budget-guarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .carriers import FiniteGroup
from .connectives import Connective, Role
from .errors import BudgetExceededError, DomainError
from .reports import (PropertyReport, Verdict, Witness, combine, conclude)
from .scalars import ONE, ZERO, Scalar, eq3, eq_approx, format_scalar, le3

#: Readings of the equality-of-degrees premise in the monotonicity and
#: cancellation laws: "any-degree" matches any common degree, "crisp"
#: demands the common degree be 1.
READINGS = ("any-degree", "crisp")


def _carrier_label(carrier) -> str:
    return "{" + ",".join(format_scalar(x) for x in carrier) + "}"


@dataclass(frozen=True)
class TFuzzyEquality:
    """A degree-valued equality, kept callable rather than tabulated so
    induced operators can ask about values the carrier grid does not
    contain (products under non-grid-closed operators)."""

    label: str
    carrier: tuple
    tnorm: Connective
    fn: Callable
    validated: bool = False
    separates_points: bool = False

    def __call__(self, a, b) -> Scalar:
        return self.fn(a, b)

    def to_json(self) -> dict:
        return {"kind": "fuzzy-equality", "label": self.label,
                "tnorm": self.tnorm.name, "size": len(self.carrier)}


def validate_fuzzy_equality(fn: Callable, tnorm: Connective, carrier: Sequence) -> PropertyReport:
    """Reflexivity, symmetry, and transitivity through the conjunction,
    each as a child verdict; point separation is reported as a detail."""
    carrier = tuple(carrier)
    dom = {"kind": "carrier", "label": _carrier_label(carrier), "size": len(carrier)}
    refl_w, undec_r = [], 0
    for x in carrier:
        r = eq3(fn(x, x), ONE)
        if r is None:
            undec_r += 1
        elif not r:
            refl_w.append(Witness((x, x), (fn(x, x),)))
    sym_w, undec_s = [], 0
    for i, x in enumerate(carrier):
        for y in carrier[i + 1:]:
            r = eq3(fn(x, y), fn(y, x))
            if r is None:
                undec_s += 1
            elif not r:
                sym_w.append(Witness((x, y), (fn(x, y), fn(y, x))))
    trans_w, undec_t = [], 0
    for x in carrier:
        for y in carrier:
            exy = fn(x, y)
            for z in carrier:
                lhs = tnorm(exy, fn(y, z))
                r = le3(lhs, fn(x, z))
                if r is None:
                    undec_t += 1
                elif not r:
                    trans_w.append(Witness((x, y, z), (lhs, fn(x, z))))
    separates = all(x == y or not eq_approx(fn(x, y), ONE)
                    for x in carrier for y in carrier)
    children = [
        conclude("E1:reflexivity", dom, refl_w, undec_r, instances=len(carrier)),
        conclude("E2:symmetry", dom, sym_w, undec_s, instances=1),
        conclude("E3:transitivity", dom, trans_w, undec_t, instances=1),
    ]
    return combine("fuzzy-equality", children, dom,
                   details={"tnorm": tnorm.name, "separates_points": separates})


def make_fuzzy_equality(label: str, fn: Callable, tnorm: Connective,
                        carrier: Sequence, require_valid: bool = True) -> TFuzzyEquality:
    carrier = tuple(carrier)
    report = validate_fuzzy_equality(fn, tnorm, carrier)
    if require_valid and not report.holds:
        raise DomainError(f"{label} is not a fuzzy equality for {tnorm.name}")
    separates = bool(report.details.get("separates_points"))
    return TFuzzyEquality(label, carrier, tnorm, fn,
                          validated=report.holds, separates_points=separates)


def _crisp_fn(a, b):
    return ONE if a == b else ZERO


def crisp_equality(carrier: Sequence, tnorm: Connective) -> TFuzzyEquality:
    return make_fuzzy_equality("crisp", _crisp_fn, tnorm, carrier)


def _linear_fn(a, b):
    d = a - b
    return 1 - (d if d >= 0 else -d)


def linear_equality(carrier: Sequence, tnorm: Connective) -> TFuzzyEquality:
    """1 - |a - b|; transitive for conjunctions below the Lukasiewicz one."""
    return make_fuzzy_equality("linear", _linear_fn, tnorm, carrier)


@dataclass(frozen=True)
class VagueBinaryOp:
    label: str
    carrier: tuple
    equality: TFuzzyEquality
    table: Mapping  # (x, y, z) -> degree

    def __call__(self, x, y, z) -> Scalar:
        return self.table[(x, y, z)]

    @property
    def tnorm(self) -> Connective:
        return self.equality.tnorm

    def to_json(self) -> dict:
        return {"kind": "vague-op", "label": self.label,
                "tnorm": self.tnorm.name, "size": len(self.carrier)}


@dataclass(frozen=True)
class VagueTNorm:
    base: VagueBinaryOp
    underlying: Connective

    def __call__(self, x, y, z) -> Scalar:
        return self.base.table[(x, y, z)]

    @property
    def carrier(self) -> tuple:
        return self.base.carrier

    @property
    def equality(self) -> TFuzzyEquality:
        return self.base.equality

    @property
    def tnorm(self) -> Connective:
        return self.base.equality.tnorm

    def to_json(self) -> dict:
        return {"kind": "vague-tnorm", "label": self.base.label,
                "underlying": self.underlying.name, "size": len(self.carrier)}


def vague_op_from_table(label: str, carrier: Sequence, equality: TFuzzyEquality,
                        table: Mapping) -> VagueBinaryOp:
    carrier = tuple(carrier)
    for x in carrier:
        for y in carrier:
            for z in carrier:
                if (x, y, z) not in table:
                    raise DomainError(f"vague table missing entry ({x}, {y}, {z})")
    return VagueBinaryOp(label, carrier, equality, dict(table))


def _table_entries_from_json(obj: dict, arity: int, *, path=None) -> dict:
    from .errors import InputFormatError
    from .scalars import parse_rational, unit

    if obj.get("form") != "table":
        raise InputFormatError("expected a table form", path=path, field="form")
    entries = obj.get("entries")
    if not isinstance(entries, list):
        raise InputFormatError("table form needs an entries list",
                              path=path, field="entries")
    mapping = {}
    for i, entry in enumerate(entries):
        if not isinstance(entry, list) or len(entry) != arity + 1:
            raise InputFormatError(
                f"entry {i} must have {arity} key components and a value",
                path=path, field="entries")
        try:
            key = tuple(parse_rational(str(k)) for k in entry[:arity])
            mapping[key] = unit(str(entry[arity]))
        except ValueError as exc:
            raise InputFormatError(str(exc), path=path, field="entries") from None
    return mapping


def equality_from_json(obj: dict, tnorm: Connective, *, path=None,
                       require_valid: bool = True) -> TFuzzyEquality:
    """Arity-2 rational-table schema:
    {"form": "table", "entries": [["x", "y", "degree"], ...]}."""
    from .errors import TotalityError
    from .scalars import format_scalar

    mapping = _table_entries_from_json(obj, 2, path=path)
    carrier = tuple(sorted({k[0] for k in mapping} | {k[1] for k in mapping}))

    def fn(a, b):
        try:
            return mapping[(a, b)]
        except KeyError:
            raise TotalityError(
                f"equality table has no value at ({format_scalar(a)}, "
                f"{format_scalar(b)})") from None

    label = obj.get("name", "table-equality")
    return make_fuzzy_equality(label, fn, tnorm, carrier,
                               require_valid=require_valid)


def vague_table_from_json(obj: dict, equality: TFuzzyEquality, *,
                          path=None) -> VagueBinaryOp:
    """Arity-3 rational-table schema for ternary degree maps."""
    mapping = _table_entries_from_json(obj, 3, path=path)
    return vague_op_from_table(obj.get("name", "table-op"),
                               equality.carrier, equality, mapping)


def induce_vague_tnorm(equality: TFuzzyEquality, conn: Connective) -> VagueTNorm:
    """Canonical vague operator: the degree that conn(x, y) equals z.

    Totality is witnessed by z = conn(x, y) itself, where the degree is
    the reflexive 1.
    """
    if not equality.validated:
        raise DomainError("the fuzzy equality must be validated first")
    if conn.role is not Role.TNORM:
        raise DomainError(f"expected a t-norm, got {conn.name}")
    carrier = equality.carrier
    table = {}
    for x in carrier:
        for y in carrier:
            v = conn(x, y)
            for z in carrier:
                table[(x, y, z)] = equality(v, z)
    base = VagueBinaryOp(f"induced({equality.label},{conn.name})",
                         carrier, equality, table)
    return VagueTNorm(base, conn)


def _tuple_budget(size: int, power: int, cap: int, what: str) -> None:
    total = size ** power
    if total > cap:
        raise BudgetExceededError(
            f"{what} needs {total} tuples on a carrier of size {size}; "
            f"budget allows {cap}", size_estimate=total)


def check_vague_binary_op(op: VagueBinaryOp, max_tuples: int = 2_000_000) -> PropertyReport:
    """The three defining conditions: extensionality through the
    equality, functionality of the result degree, and totality."""
    carrier = op.carrier
    n = len(carrier)
    _tuple_budget(n, 6, max_tuples, "extensionality")
    t = op.tnorm
    eq = op.equality
    dom = op.to_json()

    ext_w, undec_e = [], 0
    for x in carrier:
        for y in carrier:
            for z in carrier:
                m = op(x, y, z)
                if m == 0:
                    continue  # the conjunction bottoms out at 0
                for x2 in carrier:
                    f1 = t(m, eq(x, x2))
                    if f1 == 0:
                        continue
                    for y2 in carrier:
                        f2 = t(f1, eq(y, y2))
                        if f2 == 0:
                            continue
                        for z2 in carrier:
                            lhs = t(f2, eq(z, z2))
                            r = le3(lhs, op(x2, y2, z2))
                            if r is None:
                                undec_e += 1
                            elif not r:
                                ext_w.append(Witness((x, y, z, x2, y2, z2),
                                                     (lhs, op(x2, y2, z2))))
    ext = conclude("V1:extensionality", dom, ext_w, undec_e, instances=1)

    fun_w, undec_f = [], 0
    for x in carrier:
        for y in carrier:
            for z in carrier:
                m = op(x, y, z)
                if m == 0:
                    continue
                for z2 in carrier:
                    lhs = t(m, op(x, y, z2))
                    r = le3(lhs, eq(z, z2))
                    if r is None:
                        undec_f += 1
                    elif not r:
                        fun_w.append(Witness((x, y, z, z2), (lhs, eq(z, z2))))
    fun = conclude("V2:functionality", dom, fun_w, undec_f, instances=1)

    tot_w = []
    for x in carrier:
        for y in carrier:
            if not any(eq_approx(op(x, y, z), ONE) for z in carrier):
                tot_w.append(Witness((x, y), ()))
    tot = conclude("V3:totality", dom, tot_w, 0, instances=1)

    return combine("vague-binary-op", [ext, fun, tot], dom)


def check_vague_monoid(op: VagueBinaryOp, max_tuples: int = 2_000_000) -> PropertyReport:
    """Associativity-style inequality over all seven-tuples plus an
    identity element search.

    Tables that are not vague binary operations in the first place fail
    here up front, tagged NOT_VAGUE_OP.
    """
    gate = check_vague_binary_op(op, max_tuples)
    dom = op.to_json()
    if gate.verdict is Verdict.FAILS:
        return PropertyReport("vague-monoid", Verdict.FAILS, dom,
                              witnesses=list(gate.children[0].witnesses)
                              + list(gate.children[1].witnesses)
                              + list(gate.children[2].witnesses),
                              tags=("NOT_VAGUE_OP",))
    carrier = op.carrier
    n = len(carrier)
    _tuple_budget(n, 7, max_tuples, "the vague associativity loop")
    t = op.tnorm
    eq = op.equality
    witnesses, undecided = [], 0
    for y in carrier:
        for z in carrier:
            for d in carrier:
                f1 = op(y, z, d)
                if f1 == 0:
                    continue
                for x in carrier:
                    for m in carrier:
                        f2 = t(f1, op(x, d, m))
                        if f2 == 0:
                            continue
                        for q in carrier:
                            f3 = t(f2, op(x, y, q))
                            if f3 == 0:
                                continue
                            for w in carrier:
                                lhs = t(f3, op(q, z, w))
                                r = le3(lhs, eq(m, w))
                                if r is None:
                                    undecided += 1
                                elif not r:
                                    witnesses.append(
                                        Witness((x, y, z, d, m, q, w),
                                                (lhs, eq(m, w))))
    identity = None
    for e in carrier:
        if all(eq_approx(t(op(e, a, a), op(a, e, a)), ONE) for a in carrier):
            identity = e
            break
    if identity is None:
        witnesses.append(Witness(("no-identity-element",), ()))
    rep = conclude("vague-monoid", dom, witnesses, undecided, instances=1)
    rep.details["identity"] = None if identity is None else format_scalar(identity)
    return rep


def check_vague_commutativity(v: VagueTNorm) -> PropertyReport:
    """T(degree(a,b,m), degree(b,a,w)) never exceeds the equality of m
    and w."""
    carrier = v.carrier
    t = v.tnorm
    eq = v.equality
    witnesses, undecided = [], 0
    for a in carrier:
        for b in carrier:
            for m in carrier:
                f1 = v(a, b, m)
                if f1 == 0:
                    continue
                for w in carrier:
                    lhs = t(f1, v(b, a, w))
                    r = le3(lhs, eq(m, w))
                    if r is None:
                        undecided += 1
                    elif not r:
                        witnesses.append(Witness((a, b, m, w), (lhs, eq(m, w))))
    return conclude("vague-commutativity", v.to_json(), witnesses, undecided,
                    instances=1)


def _check_reading(reading: str) -> None:
    if reading not in READINGS:
        raise DomainError(f"unknown premise reading {reading!r}; use one of {READINGS}")


def _degrees_match(da, db, reading: str) -> bool:
    if reading == "crisp":
        return eq_approx(da, ONE) and eq_approx(db, ONE)
    return eq_approx(da, db)


def check_vague_strict_monotone(v: VagueTNorm, reading: str = "any-degree") -> PropertyReport:
    """x < y with matching degrees at (x,z,a) and (y,z,b) must force
    a < b. The premise reading (any common degree, or degree 1 only) is
    configurable and recorded in the report."""
    _check_reading(reading)
    carrier = v.carrier
    witnesses = []
    instances = 0
    for i, x in enumerate(carrier):
        for y in carrier[i + 1:]:
            for z in carrier:
                for a in carrier:
                    da = v(x, z, a)
                    for b in carrier:
                        if not _degrees_match(da, v(y, z, b), reading):
                            continue
                        instances += 1
                        if not a < b:
                            witnesses.append(Witness((x, y, z, a, b),
                                                     (da, v(y, z, b))))
    rep = conclude("vague-strict-monotonicity", v.to_json(), witnesses, 0,
                   instances=instances)
    rep.details["reading"] = reading
    return rep


def check_vague_cancellation(v: VagueTNorm, reading: str = "any-degree") -> PropertyReport:
    """Matching degrees at (a,x,c) and (b,x,c) must force a = b."""
    _check_reading(reading)
    carrier = v.carrier
    witnesses = []
    instances = 0
    for a in carrier:
        for b in carrier:
            for x in carrier:
                for c in carrier:
                    da = v(a, x, c)
                    if not _degrees_match(da, v(b, x, c), reading):
                        continue
                    instances += 1
                    if a != b:
                        witnesses.append(Witness((a, b, x, c), (da, v(b, x, c))))
    rep = conclude("vague-cancellation", v.to_json(), witnesses, 0,
                   instances=instances)
    rep.details["reading"] = reading
    return rep


# --- vague groups over finite carriers ---

@dataclass(frozen=True)
class VagueGroup:
    group: FiniteGroup
    equality: TFuzzyEquality
    table: Mapping  # (a, b, c) -> degree

    def __call__(self, a, b, c) -> Scalar:
        return self.table[(a, b, c)]

    def to_json(self) -> dict:
        return {"kind": "vague-group", "label": self.group.monoid.label,
                "size": len(self.group.elements)}


def crisp_vague_group(group: FiniteGroup) -> VagueGroup:
    """Degree-1 on exact products, 0 elsewhere, with crisp equality."""
    from .connectives import T_M

    elements = group.elements
    eq = crisp_equality(elements, T_M)
    table = {(a, b, c): (ONE if group.op(a, b) == c else ZERO)
             for a in elements for b in elements for c in elements}
    return VagueGroup(group, eq, table)


def vague_group_from_table(group: FiniteGroup, equality: TFuzzyEquality,
                           table: Mapping) -> VagueGroup:
    return VagueGroup(group, equality, dict(table))


def check_vague_group_cancellation(v: VagueGroup) -> PropertyReport:
    """Both one-sided generalized cancellation inequalities.

    The carrier must be a genuine vague group: identity and inverse
    degrees of 1 are preconditions, not check outcomes.
    """
    group = v.group
    elements = group.elements
    e = group.identity
    for a in elements:
        inv = group.inverse[a]
        if not (eq_approx(v(inv, a, e), ONE) and eq_approx(v(a, inv, e), ONE)):
            raise DomainError(
                f"inverse degree below 1 at element {a}; not a vague group")
        if not (eq_approx(v(e, a, a), ONE) and eq_approx(v(a, e, a), ONE)):
            raise DomainError(
                f"identity degree below 1 at element {a}; not a vague group")
    eq = v.equality
    witnesses, undecided = [], 0
    for a in elements:
        for b in elements:
            for c in elements:
                ebc = eq(b, c)
                for u in elements:
                    left = min(v(a, b, u), v(a, c, u))
                    r = le3(left, ebc)
                    if r is None:
                        undecided += 1
                    elif not r:
                        witnesses.append(Witness(("L", a, b, c, u), (left, ebc)))
                    right = min(v(b, a, u), v(c, a, u))
                    r = le3(right, ebc)
                    if r is None:
                        undecided += 1
                    elif not r:
                        witnesses.append(Witness(("R", a, b, c, u), (right, ebc)))
    return conclude("vague-group-cancellation", v.to_json(), witnesses,
                    undecided, instances=1)
