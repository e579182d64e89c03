"""Replaying a profile's discharging rules with exact weights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..graph import Graph
from .profiles import Rule, TheoremProfile


@dataclass(frozen=True)
class DischargeReport:
    initial: tuple[Fraction, ...]
    final: tuple[Fraction, ...]

    @property
    def initial_sum(self) -> Fraction:
        return sum(self.initial, Fraction(0))

    @property
    def final_sum(self) -> Fraction:
        return sum(self.final, Fraction(0))

    @property
    def negative(self) -> list[int]:
        return [v for v, w in enumerate(self.final) if w < 0]


def _receivers(g: Graph, rule: Rule, v: int) -> list[int]:
    out = []
    for w in g.neighbors(v):
        if not rule.receiver.admits(g.degree(w)):
            continue
        need = rule.receiver_has_neighbor_of_degree
        if need is not None and not any(g.degree(x) == need for x in g.neighbors(w)):
            continue
        out.append(w)
    return out


def apply_discharge(g: Graph, profile: TheoremProfile) -> DischargeReport:
    """Start from ``d(v) - target`` and run each phase's rules simultaneously.

    Within a phase every transfer reads the weights as they stood when the
    phase began; uniform rules split only positive weight.
    """
    target = profile.discharge.target
    weights = [Fraction(g.degree(v)) - target for v in range(g.n)]
    initial = tuple(weights)
    for phase in profile.discharge.phases:
        start = list(weights)
        for rule in phase:
            for v in range(g.n):
                if not rule.giver.admits(g.degree(v)):
                    continue
                recv = _receivers(g, rule, v)
                if not recv:
                    continue
                if rule.amount is None:
                    if start[v] <= 0:
                        continue
                    share = start[v] / len(recv)
                else:
                    share = rule.value(g.degree(v))
                for w in recv:
                    weights[v] -= share
                    weights[w] += share
    return DischargeReport(initial, tuple(weights))
