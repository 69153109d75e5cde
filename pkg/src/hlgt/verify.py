"""Exhaustive identity suites over grids of weakly decreasing partitions.

Every check is an exact polynomial equality in Z[x, q, t]; there are no
tolerances.  A suite iterates all weakly decreasing tuples up to a given
length and part bound and compares a pattern-statistic evaluator against
the brute-force oracle product it is supposed to equal.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import formulas, oracle
from .polyring import Polynomial, monomial, parameter
from .patterns import is_strictly_decreasing, staircase, weakly_decreasing_tuples

SUITE_NAMES = ("main", "recursive", "tokuyama", "stanley", "monomial", "raising", "all")


@dataclass
class CaseResult:
    lam: tuple[int, ...]
    identity: str
    ok: bool


@dataclass
class VerifyReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def passed(self) -> int:
        return sum(c.ok for c in self.cases)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "wall_time": self.wall_time,
            "cases": [
                {"lambda": list(c.lam), "identity": c.identity, "ok": c.ok}
                for c in self.cases
            ],
        }


def grid(n_max: int, part_max: int) -> Iterator[tuple[int, ...]]:
    """All weakly decreasing tuples of length 1..n_max with parts <= part_max."""
    for n in range(1, n_max + 1):
        yield from weakly_decreasing_tuples(n, part_max)


def _product_hl(lam: tuple[int, ...]) -> Polynomial:
    return oracle.weyl_denominator(len(lam), "q") * oracle.hall_littlewood(lam)


def _product_schur(lam: tuple[int, ...]) -> Polynomial:
    return oracle.weyl_denominator(len(lam), "q") * oracle.schur(lam)


def check_case(suite: str, lam: Sequence[int]) -> list[CaseResult]:
    """Run the named suite's identities for one partition."""
    lam = tuple(lam)
    n = len(lam)
    results: list[CaseResult] = []

    def record(identity: str, ok: bool) -> None:
        results.append(CaseResult(lam, identity, ok))

    if suite == "main":
        record("closed=vq*hl", formulas.hl_pattern_expansion(lam) == _product_hl(lam))
    elif suite == "recursive":
        record("recursive=vq*hl", formulas.hl_row_recursion(lam) == _product_hl(lam))
    elif suite == "tokuyama":
        toku = formulas.tokuyama_sum(lam)
        record("tokuyama=vq*schur", toku == _product_schur(lam))
        record(
            "closed@t=0=tokuyama",
            formulas.hl_pattern_expansion(lam).substitute("t", 0) == toku,
        )
        record(
            "tokuyama_recursive=vq*schur",
            formulas.tokuyama_row_recursion(lam) == _product_schur(lam),
        )
    elif suite == "stanley":
        closed = formulas.hl_pattern_expansion(lam)
        record(
            "closed@q=-1,t=0=v(-1)*schur",
            closed.substitute("q", -1).substitute("t", 0)
            == oracle.weyl_denominator(n, "q").substitute("q", -1) * oracle.schur(lam),
        )
        hl_m1 = oracle.hall_littlewood(lam).substitute("t", -1)
        record(
            "filtered=x^rho*hl@t=-1",
            formulas.stanley_filtered_sum(lam) == monomial(1, staircase(n)) * hl_m1,
        )
        if is_strictly_decreasing(lam):
            record("stanley=hl@t=-1", formulas.stanley_sum(lam) == hl_m1)
    elif suite == "monomial":
        mono = oracle.monomial_symmetric(lam)
        record("hl@t=1=monomial", oracle.hall_littlewood(lam).substitute("t", 1) == mono)
        record(
            "closed@t=1=vq*monomial",
            formulas.hl_pattern_expansion(lam).substitute("t", 1)
            == oracle.weyl_denominator(n, "q") * mono,
        )
    elif suite == "raising":
        t = parameter("t", n)
        base = oracle.hall_littlewood(lam)
        for i in range(n - 1):
            if lam[i] == lam[i + 1] + 1:
                raised = formulas.elementary_raise(lam, i)
                record(
                    f"raise[{i + 1},{i + 2}]=t*hl",
                    oracle.hall_littlewood(raised) == t * base,
                )
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return results


def run_suite(suite: str, n_max: int, part_max: int) -> VerifyReport:
    """Run one named suite (or all of them) over the grid."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITE_NAMES}")
    suites = SUITE_NAMES[:-1] if suite == "all" else (suite,)
    report = VerifyReport(suite)
    start = time.perf_counter()
    for lam in grid(n_max, part_max):
        for name in suites:
            report.cases.extend(check_case(name, lam))
    report.wall_time = time.perf_counter() - start
    return report
