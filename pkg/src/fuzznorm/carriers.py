"""Carrier monoids and finite groups that fuzzy subsets live on.

A carrier is either grid-backed (the unit interval under a connective,
sampled at grid points) or a finite table. Table carriers are validated
on construction: identity law always, associativity and closure for
finite tables. Grid carriers inherit the connective's own axiom report
instead of re-proving associativity here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

from .connectives import Connective
from .errors import DomainError, InputFormatError
from .scalars import parse_rational


@dataclass(frozen=True)
class CarrierMonoid:
    label: str
    elements: tuple
    op: Callable
    identity: object
    grid_backed: bool = False

    def to_json(self) -> dict:
        return {"kind": "carrier", "label": self.label, "size": len(self.elements)}

    @staticmethod
    def from_connective(conn: Connective, domain) -> "CarrierMonoid":
        """Unit-interval monoid under ``conn`` sampled at domain points."""
        if conn.identity is None:
            raise DomainError(
                f"{conn.name} declares no identity element; not a monoid carrier")
        label = f"([0,1],{conn.name})@{domain.label()}"
        return CarrierMonoid(label, tuple(domain.points), conn, conn.identity,
                             grid_backed=True)

    @staticmethod
    def from_table(elements: Sequence, table: Mapping, identity,
                   label: str = "") -> "CarrierMonoid":
        elems = tuple(elements)
        if identity not in elems:
            raise DomainError("identity element is not a carrier element")
        elem_set = set(elems)

        def op(a, b):
            return table[(a, b)]

        for a in elems:
            for b in elems:
                if (a, b) not in table:
                    raise DomainError(f"operation table missing entry ({a}, {b})")
                if table[(a, b)] not in elem_set:
                    raise DomainError(f"operation table leaves the carrier at ({a}, {b})")
        for a in elems:
            if table[(identity, a)] != a or table[(a, identity)] != a:
                raise DomainError(f"identity law fails at {a}")
        for a in elems:
            for b in elems:
                ab = table[(a, b)]
                for c in elems:
                    if table[(ab, c)] != table[(a, table[(b, c)])]:
                        raise DomainError(f"associativity fails at ({a}, {b}, {c})")
        return CarrierMonoid(label or f"table-monoid(size={len(elems)})",
                             elems, op, identity)


@dataclass(frozen=True)
class FiniteGroup:
    monoid: CarrierMonoid
    inverse: Mapping

    @property
    def elements(self) -> tuple:
        return self.monoid.elements

    @property
    def identity(self):
        return self.monoid.identity

    def op(self, a, b):
        return self.monoid.op(a, b)

    def to_json(self) -> dict:
        return {"kind": "group", "label": self.monoid.label,
                "size": len(self.elements)}

    @staticmethod
    def from_table(elements: Sequence, table: Mapping, identity,
                   label: str = "") -> "FiniteGroup":
        monoid = CarrierMonoid.from_table(elements, table, identity, label)
        inverse = {}
        for a in monoid.elements:
            for b in monoid.elements:
                if table[(a, b)] == identity and table[(b, a)] == identity:
                    inverse[a] = b
                    break
            else:
                raise DomainError(f"element {a} has no two-sided inverse")
        return FiniteGroup(monoid, inverse)


def cyclic_group(n: int) -> FiniteGroup:
    """Integers mod n under addition."""
    if n < 1:
        raise DomainError("cyclic group order must be positive")
    elements = tuple(range(n))
    table = {(a, b): (a + b) % n for a in elements for b in elements}
    return FiniteGroup.from_table(elements, table, 0, label=f"Z{n}")


def _coerce_element(text: str):
    """File elements are labels; numeric ones become exact rationals."""
    try:
        return parse_rational(text)
    except ValueError:
        return text


def carrier_from_json(obj: dict, *, path: Optional[str] = None) -> CarrierMonoid:
    """Parse the finite-carrier file format:
    {"elements": [...], "op": [[...]], "identity": "e"}."""
    for key in ("elements", "op", "identity"):
        if key not in obj:
            raise InputFormatError("missing key", path=path, field=key)
    raw_elems = obj["elements"]
    if not isinstance(raw_elems, list) or not raw_elems:
        raise InputFormatError("elements must be a non-empty list",
                              path=path, field="elements")
    elems = tuple(_coerce_element(str(e)) for e in raw_elems)
    rows = obj["op"]
    if not isinstance(rows, list) or len(rows) != len(elems):
        raise InputFormatError("op must be a square matrix over elements",
                              path=path, field="op")
    table = {}
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != len(elems):
            raise InputFormatError("op must be a square matrix over elements",
                                  path=path, field="op")
        for j, cell in enumerate(row):
            table[(elems[i], elems[j])] = _coerce_element(str(cell))
    identity = _coerce_element(str(obj["identity"]))
    try:
        return CarrierMonoid.from_table(elems, table, identity,
                                        label=obj.get("label", ""))
    except DomainError as exc:
        raise InputFormatError(str(exc), path=path, field="op") from None


def load_carrier(path: str) -> CarrierMonoid:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc.msg}", path=path,
                              line=exc.lineno) from None
    if not isinstance(obj, dict):
        raise InputFormatError("top-level value must be an object", path=path)
    return carrier_from_json(obj, path=path)
