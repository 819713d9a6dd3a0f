"""Exhaustive bounded checking of the catalog against a model adapter."""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..frel import BoundaryError
from .adapter import FAMILIES, Mutated, get_adapter
from .catalog import Equation, select
from .terms import evaluate

WIDE_DEFAULT = 2


@dataclass
class CheckConfig:
    max_grade: int = 3
    max_set: int = 3
    overrides: dict = field(default_factory=dict)
    workers: int | None = None
    only: tuple = ()

    def __post_init__(self):
        if self.max_grade < 0 or self.max_set < 0:
            raise ValueError("bounds must be non-negative")
        if self.workers is None:
            self.workers = int(os.environ.get("GDC_WORKERS", "1") or 1)

    def size_cap(self, eq: Equation) -> int:
        if eq.id in self.overrides:
            return min(self.overrides[eq.id], self.max_set)
        return min(WIDE_DEFAULT, self.max_set) if eq.wide else self.max_set


@dataclass
class CheckResult:
    equation: str
    grades: tuple
    sizes: tuple
    status: str  # "pass", "fail" or "error"
    counterexample: dict | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def record(self, timing: bool = False) -> dict:
        out = {"equation": self.equation, "grades": list(self.grades),
               "sizes": list(self.sizes), "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if timing:
            out["seconds"] = round(self.seconds, 4)
        return out


@dataclass
class CheckReport:
    model: str
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.ok]

    def merge(self, other: "CheckReport") -> "CheckReport":
        return CheckReport(self.model, self.results + other.results)

    def by_equation(self) -> dict:
        table: dict = {}
        for r in self.results:
            row = table.setdefault(r.equation, {"pass": 0, "fail": 0, "error": 0})
            row[r.status] += 1
        return table

    def summary(self) -> str:
        rows = self.by_equation()
        width = max((len(k) for k in rows), default=8)
        lines = [f"{'equation':<{width}}  pass  fail  error"]
        for k, row in rows.items():
            lines.append(f"{k:<{width}}  {row['pass']:>4}  {row['fail']:>4}  {row['error']:>5}")
        total = len(self.results)
        bad = len(self.failures)
        lines.append(f"{self.model}: {total} checks, {total - bad} passed, {bad} failed")
        return "\n".join(lines)


def _carriers(model, eq: Equation, sizes: tuple) -> dict:
    return {slot: model.carrier(n, slot) for slot, n in zip(eq.slots, sizes)}


def _given_choices(model, eq: Equation, carriers: dict):
    if not eq.given:
        yield {}
        return
    pools = []
    for name, a, b in eq.given:
        src, tgt = carriers[a], carriers[b]
        # a dual model stores X -> Y as a map Y -> X
        pools.append(model.morphisms(tgt, src) if model.dual else model.morphisms(src, tgt))
    for combo in itertools.product(*pools):
        yield {name: m for (name, _, _), m in zip(eq.given, combo)}


def check(model, eq: Equation, grades: tuple, sizes: tuple) -> CheckResult:
    """Compare both sides of ``eq`` at one grade tuple and carrier-size tuple."""
    if len(grades) != len(eq.grades):
        raise ValueError(f"{eq.id} takes {len(eq.grades)} grades, got {len(grades)}")
    start = time.perf_counter()
    carriers = _carriers(model, eq, sizes)
    status, cex = "pass", None
    try:
        for lhs_t, rhs_t in eq.sides(tuple(grades)):
            for given in _given_choices(model, eq, carriers):
                lhs = evaluate(lhs_t, model, carriers, given)
                rhs = evaluate(rhs_t, model, carriers, given)
                if not model.equal(lhs, rhs):
                    status = "fail"
                    cex = {"lhs_term": lhs_t.render(), "rhs_term": rhs_t.render(),
                           **model.difference(lhs, rhs)}
                    if given:
                        cex["given"] = {k: model.serialize(v) for k, v in given.items()}
                    break
            if status != "pass":
                break
    except BoundaryError as exc:
        status, cex = "error", {"error": str(exc)}
    return CheckResult(eq.id, tuple(grades), tuple(sizes), status, cex,
                       time.perf_counter() - start)


def instances(eq: Equation, config: CheckConfig) -> list:
    cap = config.size_cap(eq)
    grades = eq.grade_tuples(config.max_grade)
    sizes = list(itertools.product(range(cap + 1), repeat=len(eq.slots)))
    return [(g, s) for g in grades for s in sizes]


def _run_chunk(key: str, eq_id: str, jobs: list) -> list:
    model = get_adapter(key)
    (eq,) = select([eq_id])
    return [check(model, eq, g, s) for g, s in jobs]


def check_all(model, config: CheckConfig | None = None) -> CheckReport:
    """Run every selected equation over all instances within the bounds."""
    config = config or CheckConfig()
    eqs = select(config.only)
    report = CheckReport(model.key)
    if config.workers and config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = [pool.submit(_run_chunk, model.key, eq.id, instances(eq, config))
                       for eq in eqs]
            for fut in futures:  # catalog order, whatever the completion order
                report.results.extend(fut.result())
        return report
    for eq in eqs:
        for g, s in instances(eq, config):
            report.results.append(check(model, eq, g, s))
    return report


def mutation_report(model, config: CheckConfig | None = None, families=FAMILIES) -> dict:
    """For each family, the first check that passes on ``model`` but fails once
    that family is replaced by zero (None if the mutation goes unnoticed)."""
    config = config or CheckConfig(max_grade=2, max_set=2)
    jobs = [(eq, g, s) for eq in select(config.only) for g, s in instances(eq, config)]
    baseline = [check(model, eq, g, s).ok for eq, g, s in jobs]
    out = {}
    for fam in families:
        mutant = Mutated(model, fam)
        out[fam] = None
        for (eq, g, s), good in zip(jobs, baseline):
            if not good:
                continue
            res = check(mutant, eq, g, s)
            if not res.ok:
                out[fam] = res
                break
    return out
