"""Exhaustive property sweeps behind ``demazure-support check``."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .charring import (
    a2_demazure_dim_formula,
    demazure_character,
    demazure_character_from_word,
    dimension,
)
from .rootsys import build_root_system
from .supports import saturation_violations
from .weyl import (
    all_elements,
    all_reduced_words,
    bruhat_leq,
    from_word,
    long_element,
    subsets,
    support,
)


@dataclass
class CheckReport:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self, limit: int = 10) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.name}: {self.cases} cases, {len(self.failures)} counterexamples"]
        lines.extend(f"  {f}" for f in self.failures[:limit])
        if len(self.failures) > limit:
            lines.append(f"  ... {len(self.failures) - limit} more")
        return "\n".join(lines)


def _weights(rank: int, lmax: int):
    return product(range(lmax + 1), repeat=rank)


def check_saturation(lmax: int, primes: Sequence[int], rank: int = 2, order: str = "bruhat") -> CheckReport:
    rs = build_root_system("A", rank)
    report = CheckReport(f"saturation[{order}] A{rank}")
    for p in primes:
        for lam in _weights(rank, lmax):
            report.cases += 1
            for w1, w2, s1, s2 in saturation_violations(rs, p, lam, order):
                report.failures.append(
                    f"p={p} lam={lam} w1={w1} < w2={w2}: "
                    f"G·V(w2)={s2} not in G·V(w1)={s1}"
                )
    return report


def check_parabolic_bounds(rank: int) -> CheckReport:
    """v <= w_{S(v)}, and v <= w_I implies S(v) ⊆ I and w_{S(v)} <= w_I."""
    report = CheckReport(f"parabolic bound lemma A{rank}")
    for v in all_elements(rank):
        report.cases += 1
        wS = long_element(support(v), rank)
        if not bruhat_leq(v, wS):
            report.failures.append(f"v={v} not <= w_S(v)")
        for I in subsets(rank):
            wI = long_element(I, rank)
            if bruhat_leq(v, wI) and not (support(v) <= I and bruhat_leq(wS, wI)):
                report.failures.append(f"v={v} I={sorted(I)}")
    return report


def check_dimension(lmax: int) -> CheckReport:
    rs = build_root_system("A", 2)
    s_ab = from_word([1, 2], 2)
    report = CheckReport("dimension formula A2")
    for lam in _weights(2, lmax):
        report.cases += 1
        got = dimension(demazure_character(rs, s_ab, lam))
        want = a2_demazure_dim_formula(lam)
        if got != want:
            report.failures.append(f"lam={lam}: operator {got} != closed form {want}")
    return report


def check_words(lmax: int, rank: int = 2) -> CheckReport:
    rs = build_root_system("A", rank)
    report = CheckReport(f"reduced-word independence A{rank}")
    words = {w: all_reduced_words(w) for w in all_elements(rank)}
    for lam in _weights(rank, lmax):
        for w, ws in words.items():
            report.cases += 1
            chars = {demazure_character_from_word(rs, word, lam) for word in ws}
            if len(chars) != 1:
                report.failures.append(f"w={w} lam={lam}")
    return report
