"""JSON instance files: a prime, variable names, a module and an ideal.

Example::

    {
      "prime": 32003,
      "vars": ["x", "y"],
      "module": [{"shift": 0, "denominator": [[2, 0]]}],
      "ideal": [[1, 0]]
    }

A component without ``numerator`` is cyclic (numerator ``(1)``); a missing
``denominator`` means the zero ideal.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .linalg import DEFAULT_PRIME, is_prime
from .module import Component, GradedModule
from .monomial import MonomialIdeal, format_ideal


class DataFormatError(InputError):
    """The instance file is not valid JSON or violates the schema."""


@dataclass(frozen=True)
class InstanceFile:
    prime: int
    vars: tuple[str, ...]
    module: GradedModule
    ideal: MonomialIdeal

    def to_json(self) -> dict:
        m = len(self.vars)
        comps = []
        for c in self.module.components:
            rec = {"shift": c.shift}
            if not c.numerator.is_unit():
                rec["numerator"] = [list(g) for g in c.numerator.gens]
            rec["denominator"] = [list(g) for g in c.denominator.gens]
            comps.append(rec)
        return {"prime": self.prime, "vars": list(self.vars), "module": comps,
                "ideal": [list(g) for g in self.ideal.gens] if m else []}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def describe(self) -> dict:
        return {"module": str(self.module), "ideal": format_ideal(self.ideal, self.vars),
                "vars": list(self.vars), "prime": self.prime}


def _exponents(raw, m: int, where: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(raw, list):
        raise DataFormatError(f"{where}: expected a list of exponent vectors")
    out = []
    for k, vec in enumerate(raw):
        if (not isinstance(vec, list) or len(vec) != m
                or not all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in vec)):
            raise DataFormatError(f"{where}[{k}]: expected {m} non-negative integers, got {vec!r}")
        out.append(tuple(vec))
    return tuple(out)


def from_json(data) -> InstanceFile:
    if not isinstance(data, dict):
        raise DataFormatError("top level must be a JSON object")
    unknown = set(data) - {"prime", "vars", "module", "ideal"}
    if unknown:
        raise DataFormatError(f"unknown fields {sorted(unknown)}")
    prime = data.get("prime", DEFAULT_PRIME)
    if not isinstance(prime, int) or isinstance(prime, bool) or not is_prime(prime) or prime <= 1000:
        raise DataFormatError(f"prime: expected a prime above 1000, got {prime!r}")
    if prime >= 2**31:
        raise DataFormatError(f"prime: must be below 2^31, got {prime}")
    if prime < DEFAULT_PRIME:
        print(f"warning: prime {prime} is below {DEFAULT_PRIME}; Monte Carlo failure "
              "probability grows", file=sys.stderr)
    names = data.get("vars")
    if not isinstance(names, list) or not names or not all(isinstance(v, str) for v in names):
        raise DataFormatError("vars: expected a non-empty list of names")
    if len(set(names)) != len(names):
        raise DataFormatError("vars: duplicate names")
    m = len(names)
    comps_raw = data.get("module")
    if not isinstance(comps_raw, list) or not comps_raw:
        raise DataFormatError("module: expected a non-empty list of components")
    comps = []
    for k, rec in enumerate(comps_raw):
        where = f"module[{k}]"
        if not isinstance(rec, dict):
            raise DataFormatError(f"{where}: expected an object")
        extra = set(rec) - {"shift", "numerator", "denominator"}
        if extra:
            raise DataFormatError(f"{where}: unknown fields {sorted(extra)}")
        shift = rec.get("shift", 0)
        if not isinstance(shift, int) or isinstance(shift, bool):
            raise DataFormatError(f"{where}.shift: expected an integer")
        num = (_exponents(rec["numerator"], m, where + ".numerator")
               if "numerator" in rec else ((0,) * m,))
        den = _exponents(rec.get("denominator", []), m, where + ".denominator")
        try:
            comps.append(Component(shift, MonomialIdeal(m, num), MonomialIdeal(m, den)))
        except InputError as exc:
            raise DataFormatError(f"{where}: {exc}") from exc
    module = GradedModule(m, tuple(comps), prime)
    if module.is_zero():
        raise DataFormatError("module: every component is zero")
    ideal = MonomialIdeal(m, _exponents(data.get("ideal", []), m, "ideal"))
    return InstanceFile(prime, tuple(names), module, ideal)


def loads(text: str) -> InstanceFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return from_json(data)


def load(path: str | Path) -> InstanceFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)
