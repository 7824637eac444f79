"""Predicted-versus-observed checks of the structural theorems on n-T(R).

Each ``check_*`` function tests its hypotheses on the ring, computes the
theorem's prediction from ring data alone, computes the observed value by
brute force on the graph, and returns a :class:`VerificationReport`.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Callable, Iterable, Sequence

from .graph import (
    Complete,
    NTotalGraph,
    SINGLETON,
    Selector,
    Signature,
    build_graph,
    complete_bipartite,
)
from .ideals import (
    CapExceeded,
    IdealCaseParams,
    NotGenerating,
    find_nth_root_of_minus_one,
    ideal_case_params,
    min_zd_generators,
    nth_power_classes,
    zd_generates_ring,
    zero_divisor_profile,
)
from .rings import DEFAULT_VERTEX_CAP, Element, Product, ProductRing, Ring, RingSpec, make_ring

DEFAULT_GENERATOR_CAP = 6


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    ring: str
    n: int
    verdict: Verdict
    predicted: Any = None
    observed: Any = None
    reason: str | None = None  # the failed hypothesis, for n/a
    notes: tuple[str, ...] = ()

    @property
    def applicable(self) -> bool:
        return self.verdict is not Verdict.NOT_APPLICABLE

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "ring": self.ring,
            "n": self.n,
            "verdict": self.verdict.value,
            "hypothesis": "applicable" if self.applicable else "not applicable",
            "reason": self.reason,
            "predicted": jsonable(self.predicted),
            "observed": jsonable(self.observed),
            "notes": list(self.notes),
        }


def jsonable(value):
    if isinstance(value, Signature):
        return value.labels()
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=str)
    if isinstance(value, Element):
        return str(value)
    if isinstance(value, enum.Enum):
        return value.value
    return value


def show(value) -> str:
    value = jsonable(value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={show(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "[" + " ".join(str(v) for v in value) + "]"
    return "-" if value is None else str(value)


# ---------------------------------------------------------------------------
# Shared per-(ring, n) data
# ---------------------------------------------------------------------------


class Facts:
    """Lazily computed ring and graph data shared by all checks of one (R, n)."""

    def __init__(self, ring: Ring, n: int):
        self.ring = ring
        self.n = n

    @cached_property
    def profile(self):
        return zero_divisor_profile(self.ring)

    @cached_property
    def params(self) -> IdealCaseParams:
        return ideal_case_params(self.ring, self.n)

    @cached_property
    def two_is_zd(self) -> bool:
        two = self.ring.one + self.ring.one
        return two in self.profile.zero_divisors

    @cached_property
    def full(self) -> NTotalGraph:
        return build_graph(self.ring, self.n, Selector.ALL, cap=self.ring.cardinality)

    @cached_property
    def reg(self) -> NTotalGraph:
        return build_graph(self.ring, self.n, Selector.REG, cap=self.ring.cardinality)

    @cached_property
    def root(self) -> Element | None:
        return find_nth_root_of_minus_one(self.ring, self.n)

    @cached_property
    def generated(self) -> bool:
        return zd_generates_ring(self.ring)

    @cached_property
    def d01(self):
        return self.full.distance(self.ring.zero, self.ring.one)

    def min_generators(self, cap: int) -> int:
        return _min_generators(self.ring, cap)

    @property
    def odd_or_root(self) -> bool:
        return self.n % 2 == 1 or self.root is not None


@lru_cache(maxsize=256)
def _min_generators(ring: Ring, cap: int) -> int:
    return min_zd_generators(ring, cap)


@lru_cache(maxsize=8)
def facts(ring: Ring, n: int) -> Facts:
    return Facts(ring, n)


def _report(theorem: str, f: Facts, predicted, observed, ok: bool | None = None,
            notes: Iterable[str] = ()) -> VerificationReport:
    if ok is None:
        ok = predicted == observed
    return VerificationReport(
        theorem, str(f.ring), f.n, Verdict.PASS if ok else Verdict.FAIL,
        predicted, observed, None, tuple(notes),
    )


def _na(theorem: str, f: Facts, reason: str, observed=None,
        notes: Iterable[str] = ()) -> VerificationReport:
    return VerificationReport(
        theorem, str(f.ring), f.n, Verdict.NOT_APPLICABLE, None, observed, reason, tuple(notes),
    )


def _component_sets(g: NTotalGraph) -> set[frozenset[Element]]:
    return {frozenset(c) for c in g.components()}


# ---------------------------------------------------------------------------
# Z(R) is an ideal
# ---------------------------------------------------------------------------


def check_T1(ring: Ring, n: int) -> VerificationReport:
    """2 in Z(R): n-T(R) is K_alpha plus d copies of K_gamma."""
    name = "T1"
    f = facts(ring, n)
    if not f.profile.zr_is_ideal:
        return _na(name, f, "Z(R) is not an ideal")
    if not f.two_is_zd:
        return _na(name, f, "2 is not a zero-divisor")
    p = f.params
    predicted = Signature.of([Complete(p.alpha)] + [Complete(p.gamma)] * p.d)
    observed = f.full.signature

    classes = nth_power_classes(ring, n)
    blocks = {frozenset(f.profile.zero_divisors)}
    blocks |= {classes.union(a) for a in classes.powers}
    notes = []
    if blocks != _component_sets(f.full):
        notes.append("components differ from the cosets grouped by nth power")
    return _report(name, f, predicted, observed, ok=predicted == observed and not notes,
                   notes=notes)


def check_T2(ring: Ring, n: int) -> VerificationReport:
    """2 not in Z(R): Reg part edgeless iff d odd, else d/2 copies of K_{gamma,gamma}."""
    name = "T2"
    f = facts(ring, n)
    if not f.profile.zr_is_ideal:
        return _na(name, f, "Z(R) is not an ideal")
    if f.two_is_zd:
        return _na(name, f, "2 is a zero-divisor")
    p = f.params
    kz = Complete(p.alpha)
    if p.d % 2:
        # Reg edgeless, so every regular element is its own component.
        sig = Signature.of([kz] + [SINGLETON] * (p.alpha * (p.beta - 1)))
        predicted = {"reg_totally_disconnected": True, "signature": sig}
    else:
        sig = Signature.of([kz] + [complete_bipartite(p.gamma, p.gamma)] * (p.d // 2))
        predicted = {"reg_totally_disconnected": False, "signature": sig}
    observed = {
        "reg_totally_disconnected": f.reg.is_totally_disconnected(),
        "signature": f.full.signature,
    }
    notes = []
    if p.d % 2 == 0:
        classes = nth_power_classes(ring, n)
        labels = classes.coset_of
        blocks = {frozenset(f.profile.zero_divisors)}
        for a in classes.powers:
            minus_a = Element(ring, int(labels[(-a).code]))
            blocks.add(classes.union(a) | classes.union(minus_a))
        if blocks != _component_sets(f.full):
            notes.append("components differ from the pairs of nth-power classes a, -a")
    return _report(name, f, predicted, observed, ok=predicted == observed and not notes,
                   notes=notes)


def check_reg_connectivity_corollary(ring: Ring, n: int) -> VerificationReport:
    """n-T(Reg(R)) connected iff gcd(n, beta-1) = (beta-1)/2, and then K_{gamma,gamma}."""
    name = "reg-connectivity"
    f = facts(ring, n)
    if not f.profile.zr_is_ideal:
        return _na(name, f, "Z(R) is not an ideal")
    if f.two_is_zd:
        return _na(name, f, "2 is a zero-divisor")
    if len(f.profile.regulars) < 2:
        return _na(name, f, "|Reg(R)| < 2")
    p = f.params
    connected = p.g * 2 == p.beta - 1
    predicted: dict = {"connected": connected}
    observed: dict = {"connected": f.reg.is_connected()}
    if connected:
        predicted["reg_signature"] = Signature.of([complete_bipartite(p.gamma, p.gamma)])
        observed["reg_signature"] = f.reg.signature
    return _report(name, f, predicted, observed)


def check_diam_girth_membership(ring: Ring, n: int) -> VerificationReport:
    name = "reg-diam-girth"
    f = facts(ring, n)
    if not f.profile.zr_is_ideal:
        return _na(name, f, "Z(R) is not an ideal")
    diam, girth = f.reg.diameter, f.reg.girth
    predicted = {"diameter": "{0,1,2,inf}", "girth": "{3,4,inf}"}
    observed = {"diameter": diam, "girth": girth}
    ok = diam in (0, 1, 2, math.inf) and girth in (3, 4, math.inf)
    return _report(name, f, predicted, observed, ok=ok)


# ---------------------------------------------------------------------------
# Z(R) is not an ideal
# ---------------------------------------------------------------------------


def check_path01_criterion(ring: Ring, n: int) -> VerificationReport:
    """Connected iff there is a path from 0 to 1."""
    name = "path-0-1"
    f = facts(ring, n)
    if f.profile.zr_is_ideal:
        return _na(name, f, "Z(R) is an ideal")
    predicted = {"connected": not math.isinf(f.d01)}
    observed = {"connected": f.full.is_connected(), "d(0,1)": f.d01}
    return _report(name, f, predicted, observed, ok=predicted["connected"] == observed["connected"])


def check_reg_implies_total(ring: Ring, n: int) -> VerificationReport:
    """n odd, or n even with u^n = -1: n-T(Reg(R)) connected implies n-T(R) connected."""
    name = "reg-implies-total"
    f = facts(ring, n)
    if f.profile.zr_is_ideal:
        return _na(name, f, "Z(R) is an ideal")
    notes = []
    if n % 2 == 0 and f.root is None and f.full.is_connected():
        notes.append("n-T(R) is connected although no u has u^n = -1")
    observed = {"reg_connected": f.reg.is_connected(), "connected": f.full.is_connected()}
    if not f.odd_or_root:
        return _na(name, f, "n is even and no u has u^n = -1", observed, notes)
    if not f.reg.is_connected():
        return _na(name, f, "n-T(Reg(R)) is not connected", observed, notes)
    return _report(name, f, {"connected": True}, {"connected": f.full.is_connected()},
                   notes=notes)


def check_generation_criterion(ring: Ring, n: int) -> VerificationReport:
    """Connected iff (Z(R)) = R for n odd or with a root of -1; connected implies it always."""
    name = "generation"
    f = facts(ring, n)
    if f.profile.zr_is_ideal:
        return _na(name, f, "Z(R) is an ideal")
    connected = f.full.is_connected()
    if f.odd_or_root:
        predicted = {"connected": f.generated}
        ok = connected == f.generated
    else:
        predicted = {"connected implies (Z(R))=R": True}
        ok = f.generated or not connected
    observed = {"connected": connected, "(Z(R))=R": f.generated}
    return _report(name, f, predicted, observed, ok=ok)


def _formula_gate(f: Facts, cap: int) -> tuple[str | None, tuple[str, ...], int | None]:
    notes = ()
    if f.profile.zr_is_ideal:
        return "Z(R) is an ideal", notes, None
    if not f.generated:
        return "(Z(R)) != R", notes, None
    if not f.odd_or_root:
        notes = (f"observed diameter {show(f.full.diameter)}, d(0,1) = {show(f.d01)}",)
        return "n is even and no u has u^n = -1", notes, None
    try:
        m = f.min_generators(cap)
    except CapExceeded:
        return f"no generating set of <= {cap} zero-divisors", notes, None
    except NotGenerating:  # pragma: no cover - excluded by the generated check
        return "(Z(R)) != R", notes, None
    return None, notes, m


def check_diameter_formula(ring: Ring, n: int, cap: int = DEFAULT_GENERATOR_CAP):
    """diam(n-T(R)) = min number of generating zero-divisors = d(0,1)."""
    name = "diameter-formula"
    f = facts(ring, n)
    reason, notes, m = _formula_gate(f, cap)
    if reason:
        return _na(name, f, reason, notes=notes)
    predicted = {"diameter": m, "d(0,1)": m}
    observed = {"diameter": f.full.diameter, "d(0,1)": f.d01}
    return _report(name, f, predicted, observed)


def check_reg_diam_lower_bound(ring: Ring, n: int, cap: int = DEFAULT_GENERATOR_CAP):
    """diam(n-T(R)) = m implies diam(n-T(Reg(R))) >= m - 2."""
    name = "reg-diam-bound"
    f = facts(ring, n)
    reason, notes, m = _formula_gate(f, cap)
    if reason:
        return _na(name, f, reason, notes=notes)
    if f.full.diameter != m:
        return _na(name, f, f"diam(n-T(R)) = {show(f.full.diameter)} differs from m = {m}")
    observed = {"reg_diameter": f.reg.diameter}
    return _report(name, f, {"reg_diameter": f">= {m - 2}"}, observed,
                   ok=f.reg.diameter >= m - 2)


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------


def check_product_odd(ring: Ring, n: int) -> VerificationReport:
    name = "product-odd"
    f = facts(ring, n)
    if not isinstance(ring, ProductRing):
        return _na(name, f, "R is not a product ring")
    if n % 2 == 0:
        return _na(name, f, "n is even")
    predicted = {"connected": True, "diameter": 2}
    observed = {"connected": f.full.is_connected(), "diameter": f.full.diameter}
    return _report(name, f, predicted, observed)


def _factor_has_almost_root(factor: Ring, n: int) -> bool:
    """Some x in the factor with x^n + 1 a zero-divisor of the factor."""
    zd = zero_divisor_profile(factor).zd_mask
    vals = factor.add_codes(factor.pow_codes(factor.all_codes(), n), factor.one_code)
    return bool(zd[vals].any())


def check_product_even(ring: Ring, n: int) -> VerificationReport:
    name = "product-even"
    f = facts(ring, n)
    if not isinstance(ring, ProductRing):
        return _na(name, f, "R is not a product ring")
    if n % 2:
        return _na(name, f, "n is odd")
    exists = any(_factor_has_almost_root(r, n) for r in ring.factors)
    predicted: dict = {"connected": exists}
    observed: dict = {"connected": f.full.is_connected()}
    if f.root is not None:
        predicted["diameter"] = 2
        observed["diameter"] = f.full.diameter
    return _report(name, f, predicted, observed)


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------


CHECKS: tuple[tuple[str, Callable], ...] = (
    ("T1", check_T1),
    ("T2", check_T2),
    ("reg-connectivity", check_reg_connectivity_corollary),
    ("reg-diam-girth", check_diam_girth_membership),
    ("path-0-1", check_path01_criterion),
    ("reg-implies-total", check_reg_implies_total),
    ("generation", check_generation_criterion),
    ("diameter-formula", check_diameter_formula),
    ("reg-diam-bound", check_reg_diam_lower_bound),
    ("product-odd", check_product_odd),
    ("product-even", check_product_even),
)
_CAPPED = {"diameter-formula", "reg-diam-bound"}


def run_checks(ring: Ring, n: int, cap: int = DEFAULT_GENERATOR_CAP) -> list[VerificationReport]:
    """Every check for one (ring, n); an unexpected error becomes a Fail entry."""
    out = []
    for name, check in CHECKS:
        try:
            rep = check(ring, n, cap) if name in _CAPPED else check(ring, n)
        except Exception as exc:  # report, never abort the sweep
            rep = VerificationReport(name, str(ring), n, Verdict.FAIL,
                                     notes=(f"error: {type(exc).__name__}: {exc}",))
        out.append(rep)
    return out


def _job(args) -> list[VerificationReport]:
    spec, n, cap, vcap = args
    ring = make_ring(spec, vcap)
    reports = run_checks(ring, n, cap)
    facts.cache_clear()
    return reports


def run_suite(specs: Sequence[RingSpec], n_values: Iterable[int],
              cap: int = DEFAULT_GENERATOR_CAP, vertex_cap: int = DEFAULT_VERTEX_CAP,
              workers: int = 1) -> list[VerificationReport]:
    """Run every check on every (ring, n) pair, in input order."""
    n_values = list(n_values)
    for spec in specs:
        make_ring(spec, vertex_cap)  # fail fast on invalid specs
    jobs = [(spec, n, cap, vertex_cap) for spec in specs for n in n_values]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_job, jobs, chunksize=4))
    else:
        chunks = [_job(j) for j in jobs]
    return [r for chunk in chunks for r in chunk]


@dataclass
class Summary:
    counts: Counter = field(default_factory=Counter)

    @property
    def failed(self) -> int:
        return self.counts[Verdict.FAIL]

    def __str__(self):
        return (f"pass {self.counts[Verdict.PASS]}, fail {self.counts[Verdict.FAIL]}, "
                f"n/a {self.counts[Verdict.NOT_APPLICABLE]}")


def summarize(reports: Iterable[VerificationReport]) -> Summary:
    return Summary(Counter(r.verdict for r in reports))


def format_table(reports: Sequence[VerificationReport]) -> str:
    header = ("theorem", "ring", "n", "verdict", "predicted", "observed")
    rows = [header] + [
        (r.theorem, r.ring, str(r.n), r.verdict.value,
         show(r.predicted) if r.applicable else f"({r.reason})", show(r.observed))
        for r in reports
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = []
    for row in rows:
        cells = [c.ljust(w) for c, w in zip(row[:5], widths)] + [row[5]]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)
