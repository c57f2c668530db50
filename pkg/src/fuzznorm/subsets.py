"""Membership maps from a carrier into [0, 1].

A subset is total on its carrier: the builtin forms are closed-form
expressions defined on all of [0, 1], while table forms raise
``TotalityError`` at any point they do not cover (grid carriers whose
operation leaves the grid surface this as a totality failure, which the
CLI maps to its own exit code).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

from .errors import InputFormatError, TotalityError, UnknownOperatorError
from .scalars import ONE, ZERO, Scalar, format_scalar, parse_rational, unit


@dataclass(frozen=True)
class FuzzySubset:
    name: str
    fn: Callable[[object], Scalar]

    def __call__(self, x) -> Scalar:
        return self.fn(x)

    def values_on(self, elements: Iterable) -> tuple:
        return tuple(self.fn(x) for x in elements)


def _id_fn(x):
    return x


def _one_fn(x):
    return ONE


def _zero_fn(x):
    return ZERO


def _complement_fn(x):
    return 1 - x


class _StepFn:
    # identity below the threshold, full membership from it on
    def __init__(self, e: Fraction):
        self.e = e

    def __call__(self, x):
        return x if x < self.e else ONE


class _IndicatorFn:
    def __init__(self, members: frozenset):
        self.members = members

    def __call__(self, x):
        return ONE if x in self.members else ZERO


class _TableFn:
    def __init__(self, entries: Mapping):
        self.entries = dict(entries)

    def __call__(self, x):
        try:
            return self.entries[x]
        except (KeyError, TypeError):
            raise TotalityError(
                f"membership table has no value at {format_scalar(x)}") from None


MU_ID = FuzzySubset("builtin:identity", _id_fn)
MU_ONE = FuzzySubset("builtin:one", _one_fn)
MU_ZERO = FuzzySubset("builtin:zero", _zero_fn)
MU_COMPLEMENT = FuzzySubset("builtin:complement", _complement_fn)


def step_subset(e) -> FuzzySubset:
    e = unit(e)
    return FuzzySubset(f"builtin:step({e})", _StepFn(e))


def indicator_subset(members: Iterable, name: str = "") -> FuzzySubset:
    members = frozenset(members)
    if not name:
        name = "indicator{" + ",".join(sorted(format_scalar(m) for m in members)) + "}"
    return FuzzySubset(name, _IndicatorFn(members))


def table_subset(entries: Mapping, name: str = "") -> FuzzySubset:
    clean = {}
    for key, value in entries.items():
        v = value if isinstance(value, (Fraction, float)) else unit(value)
        clean[key] = v
    if not name:
        body = ",".join(f"{format_scalar(k)}:{format_scalar(v)}"
                        for k, v in sorted(clean.items(), key=lambda kv: str(kv[0])))
        name = "table{" + body + "}"
    return FuzzySubset(name, _TableFn(clean))


_BUILTINS = {
    "identity": lambda: MU_ID,
    "one": lambda: MU_ONE,
    "zero": lambda: MU_ZERO,
    "complement": lambda: MU_COMPLEMENT,
}

_STEP_RE = re.compile(r"^step\((.+)\)$")


def parse_builtin_subset(spec: str) -> FuzzySubset:
    body = spec[len("builtin:"):] if spec.startswith("builtin:") else spec
    if body in _BUILTINS:
        return _BUILTINS[body]()
    m = _STEP_RE.match(body)
    if m:
        try:
            return step_subset(parse_rational(m.group(1)))
        except ValueError as exc:
            raise UnknownOperatorError(str(exc)) from None
    raise UnknownOperatorError(f"unknown builtin membership form: {spec!r}")


def _coerce_key(text: str):
    try:
        return parse_rational(text)
    except ValueError:
        return text


def subset_from_json(obj: dict, *, path: Optional[str] = None) -> FuzzySubset:
    """Parse the membership file format: {"form": "builtin:identity"} or
    {"form": "table", "entries": [["1/2", "3/4"], ...]}."""
    if "form" not in obj:
        raise InputFormatError("missing key", path=path, field="form")
    form = obj["form"]
    if form == "table":
        entries = obj.get("entries")
        if not isinstance(entries, list):
            raise InputFormatError("table form needs an entries list",
                                  path=path, field="entries")
        mapping = {}
        for i, entry in enumerate(entries):
            if not isinstance(entry, list) or len(entry) != 2:
                raise InputFormatError(f"entry {i} must be a [point, value] pair",
                                      path=path, field="entries")
            try:
                mapping[_coerce_key(str(entry[0]))] = unit(str(entry[1]))
            except ValueError as exc:
                raise InputFormatError(str(exc), path=path, field="entries") from None
        return table_subset(mapping, name=obj.get("name", ""))
    if isinstance(form, str):
        try:
            return parse_builtin_subset(form)
        except UnknownOperatorError as exc:
            raise InputFormatError(str(exc), path=path, field="form") from None
    raise InputFormatError("form must be a string", path=path, field="form")


def load_subset(path: str) -> FuzzySubset:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc.msg}", path=path,
                              line=exc.lineno) from None
    if not isinstance(obj, dict):
        raise InputFormatError("top-level value must be an object", path=path)
    return subset_from_json(obj, path=path)


def parse_subset_spec(spec: str) -> FuzzySubset:
    """CLI entry point: builtin:<form> or a path to a JSON file."""
    if spec.startswith("builtin:"):
        return parse_builtin_subset(spec)
    return load_subset(spec)


def intersect_fuzzy_subsets(subsets: Sequence[FuzzySubset]) -> FuzzySubset:
    """Pointwise infimum; the empty intersection is the full subset."""
    if not subsets:
        return MU_ONE
    name = "intersect(" + ",".join(s.name for s in subsets) + ")"

    def fn(x):
        return min(s(x) for s in subsets)

    return FuzzySubset(name, fn)


def enumerate_table_subsets(elements: Sequence, alphabet: Sequence[Fraction]) -> Iterator[FuzzySubset]:
    """Every membership table over the alphabet, in product order."""
    import itertools

    elems = tuple(elements)
    for values in itertools.product(tuple(alphabet), repeat=len(elems)):
        name = "mu(" + ",".join(format_scalar(v) for v in values) + ")"
        yield table_subset(dict(zip(elems, values)), name=name)
