"""Suite registry, runner and report rendering."""

from __future__ import annotations

import fnmatch
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from ..algebra import Element, TermCapExceeded, format_element
from ..series import Series, SeriesMatrix

DEFAULT_SEED = 20240101


class UnknownSuite(KeyError):
    pass


class UnsupportedParameters(ValueError):
    pass


@dataclass(frozen=True)
class SuiteSpec:
    """What to run.

    ``bound`` caps the level sum ``r + s (+ t)`` of relation instances; it
    defaults to ``cutoff`` minus whatever lookahead a suite needs, so that no
    case touches a level above ``cutoff``.  ``nu = None`` means every
    composition of ``n`` for the suites that depend on one.
    """

    suite: str
    n: int = 2
    nu: Optional[Tuple[int, ...]] = None
    cutoff: int = 4
    bound: Optional[int] = None
    seed: int = DEFAULT_SEED
    only: Optional[str] = None
    levels: Tuple[int, ...] = (2, 3)

    def params(self) -> dict:
        out = {"n": self.n, "cutoff": self.cutoff}
        if self.nu is not None:
            out["nu"] = list(self.nu)
        if self.bound is not None:
            out["bound"] = self.bound
        if self.only:
            out["only"] = self.only
        if self.suite in ("kappa", "all"):
            out["levels"] = list(self.levels)
        return out

    def level_bound(self, lookahead: int = 0) -> int:
        """Largest admissible level sum for instances reading ``lookahead``
        levels beyond it."""
        if self.bound is None:
            return self.cutoff - lookahead
        if self.bound + lookahead > self.cutoff:
            raise UnsupportedParameters(
                f"bound {self.bound} needs cutoff >= {self.bound + lookahead}, got {self.cutoff}")
        return self.bound


class Case(NamedTuple):
    id: str
    ref: str
    check: Callable[[], object]


@dataclass
class CaseRecord:
    id: str
    paper_ref: str
    status: str
    residual: Optional[str]
    ms: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class SuiteReport:
    suite: str
    params: dict
    seed: int
    cases: List[CaseRecord] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


class SuiteDef(NamedTuple):
    name: str
    summary: str
    max_n: int
    build: Callable[[SuiteSpec], Iterable[Case]]


SUITES: Dict[str, SuiteDef] = {}


def suite(name: str, summary: str, max_n: int = 3):
    def register(fn):
        SUITES[name] = SuiteDef(name, summary, max_n, fn)
        return fn
    return register


def _load() -> None:
    # suite modules register themselves on import
    from . import determinants, lemmas, maps, pbw, presentations  # noqa: F401


CATALOG = ("rtt", "levi", "drinfeld", "drinfeld-lemmas", "parabolic", "parabolic-lemmas",
           "root-vectors", "automorphisms", "hopf", "psi", "kappa", "center", "qdet", "sl",
           "pbw-independence")


def suite_names() -> List[str]:
    """Registered suites, catalog order first."""
    _load()
    known = [s for s in CATALOG if s in SUITES]
    return known + sorted(set(SUITES) - set(known))


def _definition(spec: SuiteSpec) -> SuiteDef:
    _load()
    if spec.suite not in SUITES:
        raise UnknownSuite(spec.suite)
    d = SUITES[spec.suite]
    if not 1 <= spec.n <= d.max_n:
        raise UnsupportedParameters(f"suite {spec.suite} supports 1 <= n <= {d.max_n}, got {spec.n}")
    if spec.cutoff < 1:
        raise UnsupportedParameters("cutoff must be positive")
    if spec.nu is not None and (sum(spec.nu) != spec.n or min(spec.nu, default=0) < 1):
        raise UnsupportedParameters(f"nu={spec.nu} is not a composition of {spec.n}")
    return d


def matches(case_id: str, pattern: Optional[str]) -> bool:
    """Comma-separated globs; a bare relation name such as ``pr9`` selects the
    cases of that relation."""
    if not pattern:
        return True
    head = case_id.split(":", 1)[0]
    for pat in pattern.split(","):
        pat = pat.strip()
        if not pat:
            continue
        if any(ch in pat for ch in "*?["):
            if fnmatch.fnmatchcase(case_id, pat) or fnmatch.fnmatchcase(head, pat):
                return True
        elif pat in (case_id, head):
            return True
    return False


def _cases(spec: SuiteSpec) -> Iterator[Case]:
    d = _definition(spec)
    for case in d.build(spec):
        if matches(case.id, spec.only):
            yield case


def list_cases(spec: SuiteSpec) -> List[Tuple[str, str, str]]:
    """``(case id, reference, parameter instance)`` in execution order."""
    return [(c.id, c.ref, c.id.partition(":")[2]) for c in _cases(spec)]


# -- residuals ------------------------------------------------------------------

def residual_text(value) -> Optional[str]:
    """``None`` when ``value`` is an exact zero, else a printable residual.

    Accepts Elements, Series (first nonzero coefficient), SeriesMatrix,
    iterables of those, scalars, ``None``/``True`` (pass), ``False`` and
    strings (fail with message).
    """
    if value is None or value is True:
        return None
    if value is False:
        return "check returned false"
    if isinstance(value, str):
        return value or None
    if isinstance(value, Element):
        nf = value.normal_form()
        return None if not nf.terms else format_element(nf)
    if isinstance(value, Series):
        for k, c in enumerate(value.coeffs):
            text = residual_text(c)
            if text:
                return f"[u^-{k}] {text}"
        return None
    if isinstance(value, SeriesMatrix):
        for i, row in enumerate(value.rows):
            for j, s in enumerate(row):
                text = residual_text(s)
                if text:
                    return f"({i + 1},{j + 1}) {text}"
        return None
    if isinstance(value, tuple) and len(value) == 2 and isinstance(value[0], str):
        text = residual_text(value[1])
        return f"[{value[0]}] {text}" if text else None
    if isinstance(value, (list, tuple, Iterator)) or hasattr(value, "__next__"):
        for item in value:
            text = residual_text(item)
            if text:
                return text
        return None
    if value == 0:
        return None
    return str(value)


def run_suite(spec: SuiteSpec) -> SuiteReport:
    report = SuiteReport(spec.suite, spec.params(), spec.seed)
    start = time.perf_counter()
    for case in _cases(spec):
        t0 = time.perf_counter()
        try:
            text = residual_text(case.check())
        except TermCapExceeded as exc:
            text = f"error: {exc}"
        ms = (time.perf_counter() - t0) * 1000.0
        report.cases.append(CaseRecord(case.id, case.ref, "fail" if text else "pass", text, ms))
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def run_all(spec: SuiteSpec) -> List[SuiteReport]:
    """Run every suite whose range admits ``spec.n``."""
    out = []
    for name in suite_names():
        if spec.n <= SUITES[name].max_n:
            out.append(run_suite(SuiteSpec(name, spec.n, spec.nu, spec.cutoff, spec.bound,
                                           spec.seed, spec.only, spec.levels)))
    return out


# -- rendering ------------------------------------------------------------------

def report_dict(report: SuiteReport, timings: bool = False) -> dict:
    return {
        "suite": report.suite,
        "params": report.params,
        "cases": [
            {
                "id": c.id,
                "paper_ref": c.paper_ref,
                "status": c.status,
                "residual": c.residual,
                "ms": round(c.ms, 3) if timings else 0,
            }
            for c in report.cases
        ],
        "passed": report.passed,
        "failed": report.failed,
        "elapsed_ms": round(report.elapsed_ms, 3) if timings else 0,
        "seed": report.seed,
    }


def summary_line(report: SuiteReport) -> str:
    total = len(report.cases)
    if report.ok:
        return f"PASS {report.passed}/{total}"
    return f"FAIL {report.passed}/{total} ({report.failed} failed)"


def render_report(report: SuiteReport, format: str = "text", timings: bool = False,
                  verbose: bool = False) -> str:
    """Text or JSON.  JSON omits wall-clock times unless ``timings`` is set, so
    equal inputs give byte-identical output."""
    if format == "json":
        return json.dumps(report_dict(report, timings), indent=2, sort_keys=False)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    params = " ".join(f"{k}={','.join(map(str, v)) if isinstance(v, list) else v}"
                      for k, v in report.params.items())
    lines = [f"suite {report.suite}: {params} seed={report.seed}"]
    for c in report.cases:
        if verbose or not c.passed:
            tag = "ok  " if c.passed else "FAIL"
            line = f"  {tag} {c.id}  {c.paper_ref}"
            if timings:
                line += f"  {c.ms:.1f} ms"
            lines.append(line)
            if c.residual:
                lines.append(f"       residual: {c.residual}")
    tail = summary_line(report)
    if timings:
        tail += f"  ({report.elapsed_ms / 1000.0:.2f} s)"
    lines.append(tail)
    return "\n".join(lines)
