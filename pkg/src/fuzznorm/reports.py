"""Verdicts, witnesses, domains, budgets, and report rendering.

Every check in the package returns a ``PropertyReport``. A HOLDS
verdict is always domain-qualified: it asserts the property on the
exact finite domain recorded in the report, never on the continuum.
FAILS verdicts carry witnesses that re-evaluate to violations; VACUOUS
covers budget-limited or undecidable outcomes. Reports serialize to a
stable JSON shape and a human-readable text form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import DomainError
from .scalars import ONE, ZERO, format_scalar, format_scalar_text


class Verdict(Enum):
    HOLDS = "HOLDS_ON_DOMAIN"
    FAILS = "FAILS"
    VACUOUS = "VACUOUS"


_VERDICT_RANK = {Verdict.FAILS: 0, Verdict.VACUOUS: 1, Verdict.HOLDS: 2}


def verdict_meet(verdicts: Iterable[Verdict]) -> Verdict:
    """FAILS dominates, then VACUOUS; all-HOLDS stays HOLDS."""
    vs = list(verdicts)
    if not vs:
        return Verdict.HOLDS
    return min(vs, key=_VERDICT_RANK.__getitem__)


def _json_value(v):
    if isinstance(v, Fraction):
        return format_scalar(v)
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _json_value(x) for k, x in v.items()}
    return str(v)


@dataclass(frozen=True)
class Witness:
    """One input tuple plus the evaluated values that expose a violation."""

    inputs: tuple
    values: tuple = ()

    def to_json(self) -> dict:
        return {"inputs": _json_value(self.inputs), "values": _json_value(self.values)}

    def render_text(self) -> str:
        ins = ", ".join(format_scalar_text(v) for v in self.inputs)
        if not self.values:
            return f"({ins})"
        vals = ", ".join(format_scalar_text(v) for v in self.values)
        return f"({ins}) -> [{vals}]"


@lru_cache(maxsize=None)
def _grid_points(resolution: int) -> tuple:
    return tuple(Fraction(i, resolution) for i in range(resolution + 1))


@dataclass(frozen=True)
class GridDomain:
    """The rationals 0, 1/n, ..., 1 as a desk-scale stand-in for [0, 1]."""

    resolution: int

    def __post_init__(self):
        if self.resolution < 2:
            raise DomainError(f"grid resolution must be at least 2, got {self.resolution}")

    @property
    def points(self) -> tuple:
        return _grid_points(self.resolution)

    @property
    def interior(self) -> tuple:
        return self.points[1:-1]

    def to_json(self) -> dict:
        return {"kind": "grid", "resolution": self.resolution}

    def label(self) -> str:
        return f"grid(n={self.resolution})"


@dataclass(frozen=True)
class FinitePoints:
    """An explicit finite set of rationals in [0, 1], sorted, with 0 and 1."""

    points: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        if len(pts) < 2 or sorted(set(pts)) != list(pts):
            raise DomainError("finite domain points must be sorted and distinct")
        if pts[0] != ZERO or pts[-1] != ONE:
            raise DomainError("finite domain must contain 0 and 1")
        object.__setattr__(self, "points", pts)

    @property
    def interior(self) -> tuple:
        return self.points[1:-1]

    def to_json(self) -> dict:
        return {"kind": "finite", "size": len(self.points),
                "points": [format_scalar(p) for p in self.points]}

    def label(self) -> str:
        return "chain{" + ",".join(format_scalar(p) for p in self.points) + "}"


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the existential searches.

    ``n_max`` bounds the power exponent search, ``iter_cap`` bounds
    limit iterations, and ``epsilon`` is the threshold below which a
    decreasing trajectory counts as converged on exact grids.
    """

    n_max: int = 64
    iter_cap: int = 128
    epsilon: Fraction = Fraction(1, 1024)

    def __post_init__(self):
        if self.n_max < 1 or self.iter_cap < 1:
            raise DomainError("budget caps must be at least 1")
        if self.epsilon <= 0:
            raise DomainError("epsilon must be positive")

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "iter_cap": self.iter_cap,
                "epsilon": format_scalar(self.epsilon)}


@dataclass
class PropertyReport:
    property_id: str
    verdict: Verdict
    domain: dict
    witnesses: list = field(default_factory=list)
    budget: dict = field(default_factory=dict)
    tags: tuple = ()
    details: dict = field(default_factory=dict)
    children: tuple = ()

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict is Verdict.FAILS

    def child(self, property_id: str) -> "PropertyReport":
        for c in self.children:
            if c.property_id == property_id:
                return c
        raise KeyError(property_id)

    def to_json(self) -> dict:
        obj = {
            "property_id": self.property_id,
            "verdict": self.verdict.value,
            "domain": _json_value(self.domain),
            "witnesses": [w.to_json() for w in self.witnesses],
            "budget": _json_value(self.budget),
        }
        if self.tags:
            obj["tags"] = list(self.tags)
        if self.details:
            obj["details"] = _json_value(self.details)
        if self.children:
            obj["children"] = [c.to_json() for c in self.children]
        return obj

    def render_text(self, indent: int = 0, max_witnesses: int = 3) -> str:
        pad = "  " * indent
        line = f"{pad}[{self.verdict.value}] {self.property_id}"
        if self.tags:
            line += "  tags=" + ",".join(self.tags)
        lines = [line]
        if self.witnesses:
            shown = self.witnesses[:max_witnesses]
            extra = len(self.witnesses) - len(shown)
            for w in shown:
                lines.append(f"{pad}  witness {w.render_text()}")
            if extra > 0:
                head = f"{pad}  ... {extra} more witness"
                lines.append(head + ("es" if extra != 1 else ""))
        for key in sorted(self.details):
            lines.append(f"{pad}  {key}: {_json_value(self.details[key])}")
        for c in self.children:
            lines.append(c.render_text(indent + 1, max_witnesses))
        return "\n".join(lines)

    def merge(self, other: "PropertyReport") -> "PropertyReport":
        """Combine two partial reports for the same property.

        Associative and commutative: verdicts meet, witnesses union in
        sorted order, so parallel partitions of a search space merge to
        the same report regardless of arrival order.
        """
        if self.property_id != other.property_id:
            raise DomainError("cannot merge reports for different properties")
        seen = {}
        for w in list(self.witnesses) + list(other.witnesses):
            seen.setdefault((w.inputs, w.values), w)
        witnesses = [seen[k] for k in sorted(seen, key=_witness_sort_key)]
        details = dict(self.details)
        details.update(other.details)
        return PropertyReport(
            property_id=self.property_id,
            verdict=verdict_meet([self.verdict, other.verdict]),
            domain=self.domain,
            witnesses=witnesses,
            budget={**self.budget, **other.budget},
            tags=tuple(dict.fromkeys(self.tags + other.tags)),
            details=details,
            children=self.children + other.children,
        )


def _witness_sort_key(key):
    inputs, values = key
    return tuple(str(x) for x in inputs), tuple(str(x) for x in values)


def conclude(property_id: str, domain: dict, witnesses: Sequence[Witness],
             undecided: int = 0, *, inconclusive: int = 0,
             instances: Optional[int] = None, budget: Optional[dict] = None,
             tags: tuple = (), details: Optional[dict] = None) -> PropertyReport:
    """Standard verdict assembly.

    Witnesses mean FAILS. Otherwise the verdict is VACUOUS when float
    comparisons were undecidable within tolerance, when a search budget
    ran out before a decision, or when the quantification was empty;
    each source carries its own tag. Anything else HOLDS on the domain.
    """
    details = dict(details or {})
    extra_tags = []
    if undecided > 0:
        extra_tags.append("float-tolerance-undecidable")
        details["undecided_instances"] = undecided
    if inconclusive > 0:
        extra_tags.append("budget-exhausted")
    if witnesses:
        verdict = Verdict.FAILS
    elif undecided > 0 or inconclusive > 0:
        verdict = Verdict.VACUOUS
    elif instances == 0:
        verdict = Verdict.VACUOUS
        extra_tags.append("empty-quantification")
    else:
        verdict = Verdict.HOLDS
    return PropertyReport(property_id, verdict, domain, list(witnesses),
                          dict(budget or {}), tags + tuple(extra_tags), details)


def combine(property_id: str, children: Sequence[PropertyReport], domain: dict,
            budget: Optional[dict] = None, details: Optional[dict] = None,
            tags: tuple = ()) -> PropertyReport:
    """Parent report whose verdict is the meet of its children."""
    return PropertyReport(
        property_id=property_id,
        verdict=verdict_meet(c.verdict for c in children),
        domain=domain,
        witnesses=[],
        budget=dict(budget or {}),
        tags=tags,
        details=dict(details or {}),
        children=tuple(children),
    )


def dumps(obj) -> str:
    """Deterministic JSON rendering used by the CLI and report files."""
    if isinstance(obj, PropertyReport):
        obj = obj.to_json()
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True) + "\n"
