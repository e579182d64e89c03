"""Theorem profiles: mad bound, color budget, reducible configurations, discharge rules.

Profiles are plain data. They can be written to and read from JSON, where
degree bounds use a compact text form: ``"3"`` (exactly 3), ``"4-"`` (at most
4), ``"7+"`` (at least 7), ``"D-"`` (at most Delta), ``"D-2-"`` (at most Delta-2).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

Kind = Literal["exact", "at_most", "at_least"]


@dataclass(frozen=True)
class DegreeBound:
    kind: Kind
    value: int
    relative: bool = False  # value is an offset c in "Delta - c"

    def __post_init__(self) -> None:
        if self.relative and self.value < 0:
            raise ValueError("Delta-relative offset must be nonnegative")

    def threshold(self, delta: int) -> int:
        return delta - self.value if self.relative else self.value

    def admits(self, degree: int, delta: int) -> bool:
        t = self.threshold(delta)
        if self.kind == "exact":
            return degree == t
        if self.kind == "at_most":
            return degree <= t
        return degree >= t

    def text(self) -> str:
        base = ("D" if not self.value else f"D-{self.value}") if self.relative else str(self.value)
        return base + {"exact": "", "at_most": "-", "at_least": "+"}[self.kind]

    @classmethod
    def parse(cls, s: str) -> "DegreeBound":
        s = s.strip()
        m = re.fullmatch(r"(D(?:-(\d+))?|\d+)([-+]?)", s)
        if not m:
            raise ValueError(f"bad degree bound {s!r}")
        kind: Kind = {"": "exact", "-": "at_most", "+": "at_least"}[m.group(3)]
        if m.group(1).startswith("D"):
            return cls(kind, int(m.group(2) or 0), True)
        return cls(kind, int(m.group(1)), False)


@dataclass(frozen=True)
class ConfigPattern:
    """A center vertex whose neighbors can be injectively matched to ``neighbors``.

    ``removal`` is ``"vertex"`` (delete the center) or ``"edge"`` (delete the
    edge from the center to the neighbor matched to ``neighbors[edge_to]``).
    """

    name: str
    center: DegreeBound
    neighbors: tuple[DegreeBound, ...] = ()
    removal: Literal["vertex", "edge"] = "vertex"
    edge_to: int = 0

    def __post_init__(self) -> None:
        if self.center.kind == "exact" and not self.center.relative \
                and len(self.neighbors) > self.center.value:
            raise ValueError(f"{self.name}: more neighbor bounds than center degree")
        if self.removal == "edge" and not 0 <= self.edge_to < len(self.neighbors):
            raise ValueError(f"{self.name}: edge removal needs a matched neighbor")


@dataclass(frozen=True)
class DegreeRange:
    low: int | None = None
    high: int | None = None

    def admits(self, d: int) -> bool:
        return (self.low is None or d >= self.low) and (self.high is None or d <= self.high)


@dataclass(frozen=True)
class Rule:
    """Giver -> receiver transfer between adjacent vertices.

    ``amount`` is ``(a, b, c, e)`` meaning ``(a*d + b) / (c*d + e)`` where ``d``
    is the giver's degree, or ``None`` for a uniform split of the giver's
    positive weight at the start of the phase among its qualifying receivers.
    """

    name: str
    giver: DegreeRange
    receiver: DegreeRange
    amount: tuple[int, int, int, int] | None
    receiver_has_neighbor_of_degree: int | None = None

    def value(self, d: int) -> Fraction:
        a, b, c, e = self.amount
        return Fraction(a * d + b, c * d + e)


@dataclass(frozen=True)
class DischargeProfile:
    target: Fraction
    phases: tuple[tuple[Rule, ...], ...]


@dataclass(frozen=True)
class TheoremProfile:
    id: str
    mad_bound: Fraction
    k_floor: int
    extra_colors: int
    delta_window: str
    catalog: tuple[ConfigPattern, ...]
    discharge: DischargeProfile
    windows: tuple[tuple[int | None, int | None], ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.catalog:
            raise ValueError("catalog must be nonempty")

    def working_k(self, max_degree: int) -> int:
        return max(max_degree, self.k_floor)

    def budget(self, max_degree: int) -> tuple[int, int]:
        """(num_colors, weak_cap) used by the catalog colorer."""
        return self.working_k(max_degree) + self.extra_colors, self.extra_colors

    def in_window(self, max_degree: int) -> bool:
        return any((lo is None or max_degree >= lo) and (hi is None or max_degree <= hi)
                   for lo, hi in self.windows)


# ---------------------------------------------------------------------------
# built-in profiles

B = DegreeBound.parse


def _pat(name: str, center: str, nbrs: str = "", removal: str = "vertex", edge_to: int = 0):
    bounds = tuple(B(x) for x in nbrs.split(",")) if nbrs else ()
    return ConfigPattern(name, B(center), bounds, removal, edge_to)


def _linear(name, giver, receiver, amount, needs=None):
    return Rule(name, DegreeRange(*giver), DegreeRange(*receiver), amount, needs)


_SMALL = (_pat("1-vertex", "1"), _pat("2-vertex", "2"))

T1 = TheoremProfile(
    "T1", Fraction(4), 7, 3, "Delta >= 7",
    _SMALL + (
        _pat("3-vertex adjacent to a 3-vertex", "3", "3", "edge"),
        _pat("((D-2)-,(D-1)-,D-)-vertex", "3", "D-2-,D-1-,D-", "edge"),
        _pat("(3,3,(D-1)-,D-)-vertex", "4", "3,3,D-1-,D-"),
        _pat("(3,4-,4-,4-)-vertex", "4", "3,4-,4-,4-"),
    ),
    DischargeProfile(Fraction(4), (
        (_linear("R1", (5, None), (3, 3), (1, -4, 1, 0)),
         _linear("R2", (5, None), (4, 4), (1, -4, 1, 0), needs=3)),
        (Rule("R3", DegreeRange(4, 4), DegreeRange(3, 3), None),),
    )),
    ((7, None),),
)

T2 = TheoremProfile(
    "T2", Fraction(9, 2), 9, 4, "Delta >= 9",
    _SMALL + (
        _pat("((D-1)-,D-,D-)-vertex", "3", "D-1-,D-,D-"),
        _pat("4-vertex adjacent to a 4--vertex", "4", "4-", "edge"),
        _pat("(5-,5-,5-,5-)-vertex", "4", "5-,5-,5-,5-"),
    ),
    DischargeProfile(Fraction(9, 2), (
        (_linear("R", (5, None), (None, 4), (2, -9, 2, 0)),),
    )),
    ((9, None),),
)

T3 = TheoremProfile(
    "T3", Fraction(5), 9, 5, "Delta >= 9 or Delta <= 5",
    _SMALL + (
        _pat("3-vertex", "3"),
        _pat("4-vertex adjacent to a 5--vertex", "4", "5-", "edge"),
        _pat("4-vertex adjacent to two 6-vertices", "4", "6,6"),
    ),
    DischargeProfile(Fraction(5), (
        (_linear("R", (6, None), (4, 4), (1, -5, 1, 0)),),
    )),
    ((9, None), (None, 5)),
)

T4 = TheoremProfile(
    "T4", Fraction(5), 7, 6, "6 <= Delta <= 8",
    _SMALL + (
        _pat("3-vertex", "3"),
        _pat("((D-1)-,D-,D-,D-)-vertex", "4", "D-1-,D-,D-,D-"),
    ),
    DischargeProfile(Fraction(5), (
        (_linear("R", (6, None), (4, 4), (1, -5, 1, 0)),),
    )),
    ((6, 8),),
)

T5 = TheoremProfile(
    "T5", Fraction(6), 12, 6, "Delta >= 12 or Delta <= 6",
    _SMALL + (
        _pat("3-vertex", "3"),
        _pat("((D-1)-,D-,D-,D-)-vertex", "4", "D-1-,D-,D-,D-"),
        _pat("(8-,8-,8-,D-,D-)-vertex", "5", "8-,8-,8-,D-,D-"),
    ),
    DischargeProfile(Fraction(6), (
        (_linear("R", (7, None), (4, 5), (1, -6, 1, 0)),),
    )),
    ((12, None), (None, 6)),
)

T6 = TheoremProfile(
    "T6", Fraction(6), 8, 7, "7 <= Delta <= 11",
    _SMALL + (
        _pat("3-vertex", "3"),
        _pat("4-vertex", "4"),
        _pat("5-vertex adjacent to a 6--vertex", "5", "6-", "edge"),
        _pat("(5,5,5,5,5,5,D-)-vertex", "7", "5,5,5,5,5,5,D-"),
    ),
    DischargeProfile(Fraction(6), (
        (_linear("R1", (7, 7), (5, 5), (0, 1, 0, 5)),
         _linear("R2", (8, None), (5, 5), (1, -6, 1, 0))),
    )),
    ((7, 11),),
)

PROFILES = {p.id: p for p in (T1, T2, T3, T4, T5, T6)}


def get_profile(name: str) -> TheoremProfile:
    key = name.upper()
    if key in PROFILES:
        return PROFILES[key]
    return load_profile(name)


# ---------------------------------------------------------------------------
# declarative documents


def _range_doc(r: DegreeRange) -> dict:
    return {"min": r.low, "max": r.high}


def profile_to_document(p: TheoremProfile) -> dict:
    return {
        "id": p.id,
        "mad_bound": str(p.mad_bound),
        "k_floor": p.k_floor,
        "extra_colors": p.extra_colors,
        "delta_window": p.delta_window,
        "windows": [list(w) for w in p.windows],
        "catalog": [
            {"name": c.name, "center": c.center.text(),
             "neighbors": [b.text() for b in c.neighbors],
             "removal": c.removal, **({"edge_to": c.edge_to} if c.removal == "edge" else {})}
            for c in p.catalog
        ],
        "discharge": {
            "target": str(p.discharge.target),
            "phases": [
                [{"name": r.name, "giver": _range_doc(r.giver), "receiver": _range_doc(r.receiver),
                  "amount": list(r.amount) if r.amount else "uniform",
                  "receiver_has_neighbor_of_degree": r.receiver_has_neighbor_of_degree}
                 for r in phase]
                for phase in p.discharge.phases
            ],
        },
    }


def profile_from_document(doc: dict) -> TheoremProfile:
    catalog = tuple(
        ConfigPattern(c["name"], B(c["center"]), tuple(B(x) for x in c.get("neighbors", [])),
                      c.get("removal", "vertex"), int(c.get("edge_to", 0)))
        for c in doc["catalog"])
    phases = []
    for phase in doc["discharge"]["phases"]:
        rules = []
        for r in phase:
            amount = None if r["amount"] == "uniform" else tuple(int(x) for x in r["amount"])
            rules.append(Rule(r["name"], DegreeRange(r["giver"].get("min"), r["giver"].get("max")),
                              DegreeRange(r["receiver"].get("min"), r["receiver"].get("max")),
                              amount, r.get("receiver_has_neighbor_of_degree")))
        phases.append(tuple(rules))
    return TheoremProfile(
        doc["id"], Fraction(doc["mad_bound"]), int(doc["k_floor"]), int(doc["extra_colors"]),
        doc.get("delta_window", ""), catalog,
        DischargeProfile(Fraction(doc["discharge"]["target"]), tuple(phases)),
        tuple(tuple(w) for w in doc.get("windows", [])),
    )


def load_profile(path: str) -> TheoremProfile:
    with open(path) as fh:
        return profile_from_document(json.load(fh))
