"""Verification suites reproducing the package's headline claims by
exhaustion, shared between the CLI and the acceptance tests.

Each suite examines a full population (all pairs of two-column tableaux,
all nodes of a poset, ...) and reports a pass/fail with a counterexample
when one exists.  ``suites_for`` picks the suites whose claims apply at a
given size: the coincidence of the two orders holds up to n = 5, and the
proper-extension search is meaningful from n = 6 on.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import LimitError
from .orders import chain_leq, chain_poset, duflo_poset
from .tableau import Tableau, enumerate_tableaux, row_text
from .twocol import canonical_word, cover, cover_recursive, fast_leq_words
from .words import weak_leq


@dataclass
class CheckResult:
    name: str
    n: int
    population: int
    passed: bool
    counterexample: str | None = None
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name} n={self.n} population={self.population} ({self.seconds:.2f}s)"
        if self.counterexample:
            label = "witness" if self.passed else "counterexample"
            out += f"\n  {label}: {self.counterexample}"
        return out


@dataclass
class VerifyReport:
    n: int
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [c.line() for c in self.checks]
        verdict = "all checks passed" if self.passed else "FAILURES present"
        out.append(f"{verdict} in {self.elapsed:.2f}s")
        return out


def _pair_label(t: Tableau, s: Tableau, order: str) -> str:
    return f"T={row_text(t)} S={row_text(s)} order={order}"


def _two_column(n: int) -> list[Tableau]:
    return list(enumerate_tableaux(n, max_columns=2, limit=max(n, 8)))


def thm311_check(n: int) -> CheckResult:
    """Chain order equals the canonical-word comparison on two-column pairs."""
    start = time.perf_counter()
    nodes = _two_column(n)
    words = {t: canonical_word(t).word for t in nodes}
    bad = None
    count = 0
    for t in nodes:
        for s in nodes:
            count += 1
            if chain_leq(t, s) != weak_leq(words[t], words[s]):
                bad = _pair_label(t, s, "chain-vs-word")
                break
        if bad:
            break
    return CheckResult("thm311", n, count, bad is None, bad,
                       time.perf_counter() - start)


def cor312_check(n: int) -> CheckResult:
    """The induced weak order restricted to two-column nodes equals the
    canonical-word comparison."""
    start = time.perf_counter()
    poset = duflo_poset(n)
    nodes = [t for t in poset.nodes if len(t.columns) <= 2]
    bad = None
    count = 0
    for t in nodes:
        for s in nodes:
            count += 1
            if poset.leq(t, s) != fast_leq_words(t, s):
                bad = _pair_label(t, s, "duflo-vs-word")
                break
        if bad:
            break
    return CheckResult("cor312", n, count, bad is None, bad,
                       time.perf_counter() - start)


def prop316_check(n: int) -> CheckResult:
    """Explicit cover = recursive cover = brute-force poset cover on the
    two-column family."""
    start = time.perf_counter()
    poset = duflo_poset(n).restrict(lambda t: len(t.columns) <= 2)
    bad = None
    for t in poset.nodes:
        explicit = cover(t)
        recursive = cover_recursive(t)
        brute = sorted(poset.cover_of(t), key=row_text)
        if not explicit == recursive == brute:
            bad = f"T={row_text(t)} order=cover"
            break
    return CheckResult("prop316", n, len(poset.nodes), bad is None, bad,
                       time.perf_counter() - start)


def coincide_check(n: int) -> CheckResult:
    """The induced weak order and the chain order agree on all tableaux."""
    start = time.perf_counter()
    dp = duflo_poset(n)
    cp = chain_poset(n)
    bad = None
    count = len(dp.nodes) ** 2
    for i, t in enumerate(dp.nodes):
        for j, s in enumerate(dp.nodes):
            d = dp.leq_rows[i] >> j & 1
            c = cp.leq(t, s)
            if bool(d) != c:
                bad = _pair_label(t, s, "duflo-vs-chain")
                break
        if bad:
            break
    return CheckResult("coincide", n, count, bad is None, bad,
                       time.perf_counter() - start)


def extension_check(n: int) -> CheckResult:
    """There is a pair related in the chain order but not in the induced
    weak order; the witness pair is reported."""
    start = time.perf_counter()
    dp = duflo_poset(n)
    cp = chain_poset(n)
    witness = None
    count = len(dp.nodes) ** 2
    for t in dp.nodes:
        for s in dp.nodes:
            if cp.leq(t, s) and not dp.leq(t, s):
                witness = _pair_label(t, s, "chain-not-duflo")
                break
        if witness:
            break
    return CheckResult("extension", n, count, witness is not None,
                       witness, time.perf_counter() - start)


SUITES = {
    "thm311": (thm311_check, lambda n: 1 <= n <= 8),
    "cor312": (cor312_check, lambda n: 1 <= n <= 7),
    "prop316": (prop316_check, lambda n: 1 <= n <= 7),
    "coincide": (coincide_check, lambda n: 1 <= n <= 5),
    "extension": (extension_check, lambda n: 6 <= n <= 7),
}


def run_suite(n: int, suite: str = "all") -> VerifyReport:
    start = time.perf_counter()
    report = VerifyReport(n=n)
    if suite == "all":
        selected = [name for name, (_, applies) in SUITES.items() if applies(n)]
        if not selected:
            raise LimitError(f"no verification suite applies at n={n}")
    else:
        if suite not in SUITES:
            raise LimitError(f"unknown suite {suite!r}")
        selected = [suite]
    for name in selected:
        check, _ = SUITES[name]
        report.checks.append(check(n))
    report.elapsed = time.perf_counter() - start
    return report
