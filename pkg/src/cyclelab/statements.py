"""Catalog of the long-cycle theorems and conjectures, and their evaluation on a graph.

Every statement has the same skeleton: a graph-level hypothesis (a connectivity
requirement plus, for forward statements, a degree condition), and either

* FORWARD: a bound on the residual metric (p_bar or c_bar) of the longest
  cycles, or
* REVERSE: a per-cycle residual condition implying a lower bound on the
  circumference c.

Degree conditions are compared in exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .cycles import CycleAnalysis, CycleSeq
from .invariants import INFINITY, ExtendedNat, InvariantBundle

SCHEMA_VERSION = "cyclelab.statements.v1"


class Family(str, Enum):
    SIGMA = "SIGMA"
    DELTA = "DELTA"


class Direction(str, Enum):
    FORWARD = "FORWARD"
    REVERSE = "REVERSE"


class Metric(str, Enum):
    P_BAR = "P_BAR"
    C_BAR = "C_BAR"


class Status(str, Enum):
    PROVED = "PROVED"
    OPEN = "OPEN"


class Provenance(str, Enum):
    THEOREM = "theorem"
    CONJECTURE = "conjecture"
    CLASSICAL = "classical"


class Verdict(str, Enum):
    VACUOUS = "VACUOUS"
    CONFIRMED = "CONFIRMED"
    VIOLATED = "VIOLATED"


class Quantifier(str, Enum):
    FORALL_LONGEST = "FORALL_LONGEST"
    EXISTS_LONGEST = "EXISTS_LONGEST"


# Connectivity requirements
KAPPA_LAMBDA = "kappa >= lambda"
KAPPA_MIN1 = "kappa >= min(lambda, delta-lambda+1)"
KAPPA_MIN2 = "kappa >= min(lambda, delta-lambda+2)"

# Degree hypotheses
DEG_NONE = "none"
DEG_DELTA = "delta >= (n+2)/(lambda+1)+lambda-2"
DEG_SIGMA = "sigma_{lambda+1} >= n+lambda(lambda-1)"

# Residual hypotheses (REVERSE only); r stands for the residual metric
RES_NONE = "none"
RES_LAMBDA = "r >= lambda-1"
RES_MIN = "r >= min(lambda-1, delta-lambda+1)"

# Conclusions
CON_R_LAMBDA = "r <= lambda-1"
CON_R_MIN = "r <= min(lambda-1, delta-lambda)"
CON_C_DELTA = "c >= lambda(delta-lambda+2)"
CON_C_SIGMA = "c >= sigma_lambda-lambda(lambda-2)"


@dataclass(frozen=True)
class Fixed:
    """Explicit constants for the classical results, which fix lambda.

    ``kappa``: required connectivity. Degree hypothesis ``delta >= (n+num)/den``
    when ``sigma_k`` is None, else ``sigma_k >= n+num``. Residual hypothesis
    ``r >= residual`` and conclusion ``r <= bound`` or ``c >= mult*X+offset``
    where X is delta or sigma_k.
    """

    kappa: int
    num: int | None = None
    den: int | None = None
    sigma_k: int | None = None
    residual: int | None = None
    bound: int | None = None
    mult: int | None = None
    offset: int | None = None


@dataclass(frozen=True)
class Statement:
    id: str
    title: str
    family: Family
    direction: Direction
    residual_metric: Metric
    connectivity_req: str
    degree_hypothesis: str
    residual_hypothesis: str
    conclusion: str
    status: Status
    provenance: Provenance
    fixed_lambda: int | None = None
    fixed: Fixed | None = None

    def hypothesis_text(self) -> str:
        r = "p_bar" if self.residual_metric is Metric.P_BAR else "c_bar"
        if self.fixed is not None:
            f = self.fixed
            parts = [f"kappa >= {f.kappa}"]
            if self.direction is Direction.FORWARD:
                if f.sigma_k is None:
                    parts.append(f"delta >= (n+{f.num})/{f.den}")
                else:
                    parts.append(f"sigma_{f.sigma_k} >= n+{f.num}")
            else:
                parts.append(f"{r} >= {f.residual}")
            return " and ".join(parts)
        parts = [self.connectivity_req]
        if self.degree_hypothesis != DEG_NONE:
            parts.append(self.degree_hypothesis)
        if self.residual_hypothesis != RES_NONE:
            parts.append(self.residual_hypothesis.replace("r ", f"{r} ", 1))
        return " and ".join(parts)

    def conclusion_text(self) -> str:
        r = "p_bar" if self.residual_metric is Metric.P_BAR else "c_bar"
        if self.fixed is not None:
            f = self.fixed
            if self.direction is Direction.FORWARD:
                return f"{r} <= {f.bound}"
            base = "delta" if f.sigma_k is None else f"sigma_{f.sigma_k}"
            term = base if f.mult == 1 else f"{f.mult}{base}"
            return f"c >= {term}{f.offset:+d}" if f.offset else f"c >= {term}"
        return self.conclusion.replace("r ", f"{r} ", 1)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "family": self.family.value,
            "direction": self.direction.value,
            "residual_metric": self.residual_metric.value,
            "status": self.status.value,
            "provenance": self.provenance.value,
            "lambda_domain": (
                f"lambda = {self.fixed_lambda}" if self.fixed_lambda else "1 <= lambda <= delta"
            ),
            "hypothesis": self.hypothesis_text(),
            "conclusion": self.conclusion_text(),
        }


def _param(id, title, family, direction, metric, conn, deg, res, con, status, prov):
    return Statement(id, title, family, direction, metric, conn, deg, res, con, status, prov)


def _classical(id, title, lam, family, direction, fixed):
    conn = KAPPA_LAMBDA
    if direction is Direction.FORWARD:
        deg = DEG_SIGMA if family is Family.SIGMA else DEG_DELTA
        res, con = RES_NONE, CON_R_LAMBDA
    else:
        deg, res = DEG_NONE, RES_LAMBDA
        con = CON_C_SIGMA if family is Family.SIGMA else CON_C_DELTA
    return Statement(
        id, title, family, direction, Metric.P_BAR, conn, deg, res, con,
        Status.PROVED, Provenance.CLASSICAL, lam, fixed,
    )


S, D = Family.SIGMA, Family.DELTA
FW, RV = Direction.FORWARD, Direction.REVERSE
PB, CB = Metric.P_BAR, Metric.C_BAR
OPEN, PROVED = Status.OPEN, Status.PROVED
CONJ, THM = Provenance.CONJECTURE, Provenance.THEOREM

_CATALOG: tuple[Statement, ...] = (
    _param("C1", "Bondy (sigma, p_bar)", S, FW, PB, KAPPA_LAMBDA, DEG_SIGMA, RES_NONE, CON_R_LAMBDA, OPEN, CONJ),
    _param("C2", "reverse (sigma, p_bar)", S, RV, PB, KAPPA_LAMBDA, DEG_NONE, RES_LAMBDA, CON_C_SIGMA, OPEN, CONJ),
    _param("C3", "Bondy (delta, p_bar)", D, FW, PB, KAPPA_LAMBDA, DEG_DELTA, RES_NONE, CON_R_LAMBDA, OPEN, CONJ),
    _param("C4", "Jung reverse (delta, p_bar)", D, RV, PB, KAPPA_LAMBDA, DEG_NONE, RES_LAMBDA, CON_C_DELTA, OPEN, CONJ),
    _param("C5", "(sigma, c_bar)", S, FW, CB, KAPPA_LAMBDA, DEG_SIGMA, RES_NONE, CON_R_LAMBDA, OPEN, CONJ),
    _param("C6", "reverse (sigma, c_bar)", S, RV, CB, KAPPA_LAMBDA, DEG_NONE, RES_LAMBDA, CON_C_SIGMA, OPEN, CONJ),
    _param("C7", "(sigma, c_bar), (c_bar, kappa)-improvement", S, FW, CB, KAPPA_MIN1, DEG_SIGMA, RES_NONE, CON_R_MIN, OPEN, CONJ),
    _param("C8", "reverse (sigma, c_bar), (c_bar, kappa)-improvement", S, RV, CB, KAPPA_MIN2, DEG_NONE, RES_MIN, CON_C_SIGMA, OPEN, CONJ),
    _param("C9", "(sigma, p_bar), (p_bar, kappa)-improvement", S, FW, PB, KAPPA_MIN1, DEG_SIGMA, RES_NONE, CON_R_MIN, OPEN, CONJ),
    _param("C10", "reverse (sigma, p_bar), (p_bar, kappa)-improvement", S, RV, PB, KAPPA_MIN2, DEG_NONE, RES_MIN, CON_C_SIGMA, OPEN, CONJ),
    _param("T1", "(delta, c_bar)", D, FW, CB, KAPPA_LAMBDA, DEG_DELTA, RES_NONE, CON_R_LAMBDA, PROVED, THM),
    _param("T2", "reverse (delta, c_bar)", D, RV, CB, KAPPA_LAMBDA, DEG_NONE, RES_LAMBDA, CON_C_DELTA, PROVED, THM),
    _param("T3", "(delta, c_bar), c_bar-improvement", D, FW, CB, KAPPA_LAMBDA, DEG_DELTA, RES_NONE, CON_R_MIN, PROVED, THM),
    _param("T4", "reverse (delta, c_bar), c_bar-improvement", D, RV, CB, KAPPA_LAMBDA, DEG_NONE, RES_MIN, CON_C_DELTA, PROVED, THM),
    _param("T5", "(delta, c_bar), kappa-improvement", D, FW, CB, KAPPA_MIN1, DEG_DELTA, RES_NONE, CON_R_LAMBDA, PROVED, THM),
    _param("T6", "reverse (delta, c_bar), kappa-improvement", D, RV, CB, KAPPA_MIN2, DEG_NONE, RES_LAMBDA, CON_C_DELTA, PROVED, THM),
    _param("T7", "(delta, c_bar), (c_bar, kappa)-improvement", D, FW, CB, KAPPA_MIN1, DEG_DELTA, RES_NONE, CON_R_MIN, PROVED, THM),
    _param("T8", "reverse (delta, c_bar), (c_bar, kappa)-improvement", D, RV, CB, KAPPA_MIN2, DEG_NONE, RES_MIN, CON_C_DELTA, PROVED, THM),
    _classical("CL-a", "Dirac 1952", 1, D, FW, Fixed(kappa=1, num=0, den=2, bound=0)),
    _classical("CL-b", "Nash-Williams 1971", 2, D, FW, Fixed(kappa=2, num=2, den=3, bound=1)),
    _classical("CL-c", "Fan 1987", 3, D, FW, Fixed(kappa=3, num=6, den=4, bound=2)),
    _classical("CL-d", "Dirac 1952", 1, D, RV, Fixed(kappa=1, residual=0, mult=1, offset=1)),
    _classical("CL-e", "Dirac 1952", 2, D, RV, Fixed(kappa=2, residual=1, mult=2, offset=0)),
    _classical("CL-f", "Voss, Zuluaga 1977", 3, D, RV, Fixed(kappa=3, residual=2, mult=3, offset=-3)),
    _classical("CL-g", "Jung 1990", 4, D, RV, Fixed(kappa=4, residual=3, mult=4, offset=-8)),
    _classical("CL-h", "Ore 1960", 1, S, FW, Fixed(kappa=1, sigma_k=2, num=0, bound=0)),
    _classical("CL-i", "Bondy 1980", 2, S, FW, Fixed(kappa=2, sigma_k=3, num=2, bound=1)),
    _classical("CL-j", "Zou 1987", 3, S, FW, Fixed(kappa=3, sigma_k=4, num=6, bound=2)),
    _classical("CL-k", "Dirac 1952", 1, S, RV, Fixed(kappa=1, sigma_k=1, residual=0, mult=1, offset=1)),
    _classical("CL-l", "Bondy 1971; Bermond 1976; Linial 1976", 2, S, RV, Fixed(kappa=2, sigma_k=2, residual=1, mult=1, offset=0)),
    _classical("CL-m", "Fraisse, Jung 1989", 3, S, RV, Fixed(kappa=3, sigma_k=3, residual=2, mult=1, offset=-3)),
    _classical("CL-n", "Chiba, Tsugaki, Yamashita 2014", 4, S, RV, Fixed(kappa=4, sigma_k=4, residual=3, mult=1, offset=-8)),
)

_BY_ID = {s.id: s for s in _CATALOG}


def catalog() -> list[Statement]:
    return list(_CATALOG)


def lookup(statement_id: str) -> Statement:
    try:
        return _BY_ID[statement_id]
    except KeyError:
        raise KeyError(f"unknown statement id {statement_id!r}") from None


def select(selector: str) -> list[Statement]:
    """Resolve ``all``, ``proved``, ``open``, ``theorems``, ``classical`` or a comma list of ids.

    A list may contain ranges such as ``T1-T8``, ``C7-C10`` or ``CL-d-CL-g``.
    """
    selector = selector.strip()
    groups = {
        "all": lambda s: True,
        "proved": lambda s: s.status is Status.PROVED,
        "open": lambda s: s.status is Status.OPEN,
        "theorems": lambda s: s.provenance is Provenance.THEOREM,
        "classical": lambda s: s.provenance is Provenance.CLASSICAL,
    }
    if selector.lower() in groups:
        return [s for s in _CATALOG if groups[selector.lower()](s)]
    ids: list[str] = []
    for token in (t.strip() for t in selector.split(",")):
        if not token:
            continue
        if token in _BY_ID:
            ids.append(token)
            continue
        ids.extend(_expand_range(token))
    chosen = set(ids)
    return [s for s in _CATALOG if s.id in chosen]


def _expand_range(token: str) -> list[str]:
    keys = [s.id for s in _CATALOG]
    for k, start in enumerate(keys):
        prefix = start + "-"
        if token.startswith(prefix) and token[len(prefix):] in _BY_ID:
            end = keys.index(token[len(prefix):])
            if end < k:
                break
            return keys[k:end + 1]
    raise KeyError(f"unknown statement id {token!r}")


# evaluation ---------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    statement_id: str
    lam: int
    verdict: Verdict
    quantifier_mode: Quantifier
    hypothesis_margin: int
    conclusion_margin: Optional[ExtendedNat]
    witness: Optional[CycleSeq]
    vacuity_reason: Optional[str] = None

    @property
    def tight(self) -> bool:
        return self.verdict is Verdict.CONFIRMED and self.conclusion_margin == 0

    def to_dict(self) -> dict:
        margin = self.conclusion_margin
        return {
            "statement": self.statement_id,
            "lambda": self.lam,
            "verdict": self.verdict.value,
            "mode": self.quantifier_mode.value,
            "hypothesis_margin": self.hypothesis_margin,
            "conclusion_margin": margin if margin is None or isinstance(margin, int) else str(margin),
            "tight": self.tight,
            "witness": list(self.witness.vertices) if self.witness else None,
            "vacuity_reason": self.vacuity_reason,
        }


def lambda_domain(s: Statement, bundle: InvariantBundle) -> list[int]:
    if s.fixed_lambda is not None:
        return [s.fixed_lambda]
    return list(range(1, bundle.min_degree + 1))


def _connectivity_requirement(s: Statement, lam: int, delta: int) -> int:
    if s.fixed is not None:
        return s.fixed.kappa
    if s.connectivity_req == KAPPA_LAMBDA:
        return lam
    if s.connectivity_req == KAPPA_MIN1:
        return min(lam, delta - lam + 1)
    return min(lam, delta - lam + 2)


def _degree_margin(s: Statement, lam: int, b: InvariantBundle) -> Optional[ExtendedNat]:
    """Slack of the degree hypothesis as an integer (None if there is none).

    For a rational threshold t the slack is ``delta - ceil(t)``, which is
    nonnegative exactly when ``delta >= t``.
    """
    n, delta = b.n, b.min_degree
    if s.direction is Direction.REVERSE:
        return None
    f = s.fixed
    if s.family is Family.DELTA:
        if f is not None:
            threshold = Fraction(n + f.num, f.den)
        else:
            threshold = Fraction(n + 2, lam + 1) + lam - 2
        return delta - math.ceil(threshold)
    if f is not None:
        sigma, need = b.sigma_at(f.sigma_k), n + f.num
    else:
        sigma, need = b.sigma_at(lam + 1), n + lam * (lam - 1)
    return sigma - need


def _residual_threshold(s: Statement, lam: int, delta: int) -> int:
    if s.fixed is not None:
        return s.fixed.residual
    if s.residual_hypothesis == RES_LAMBDA:
        return lam - 1
    return min(lam - 1, delta - lam + 1)


def _residual_bound(s: Statement, lam: int, delta: int) -> int:
    if s.fixed is not None:
        return s.fixed.bound
    if s.conclusion == CON_R_LAMBDA:
        return lam - 1
    return min(lam - 1, delta - lam)


def _circumference_bound(s: Statement, lam: int, b: InvariantBundle) -> ExtendedNat:
    delta = b.min_degree
    f = s.fixed
    if f is not None:
        base = delta if f.sigma_k is None else b.sigma_at(f.sigma_k)
        if base is INFINITY:
            return INFINITY
        return f.mult * base + f.offset
    if s.conclusion == CON_C_DELTA:
        return lam * (delta - lam + 2)
    sigma = b.sigma_at(lam)
    return sigma if sigma is INFINITY else sigma - lam * (lam - 2)


def _residual(metric: Metric, profile) -> int:
    return profile.p_bar if metric is Metric.P_BAR else profile.c_bar


def evaluate(
    bundle: InvariantBundle,
    analysis: CycleAnalysis,
    s: Statement,
    lam: int,
    mode: Quantifier = Quantifier.FORALL_LONGEST,
    allow_outside_domain: bool = False,
) -> CheckResult:
    """Verdict of statement ``s`` at ``lam`` on an analysed graph."""
    delta = bundle.min_degree
    if s.fixed_lambda is not None:
        if lam != s.fixed_lambda:
            raise ValueError(f"{s.id} holds only at lambda = {s.fixed_lambda}")
    elif lam < 1 or (lam > delta and not allow_outside_domain):
        raise ValueError(f"lambda = {lam} outside 1..delta = {delta} for {s.id}")

    conn_margin = bundle.connectivity - _connectivity_requirement(s, lam, delta)
    deg_margin = _degree_margin(s, lam, bundle)
    graph_margin = conn_margin if deg_margin is None else min(conn_margin, deg_margin)

    def result(verdict, hyp, concl, witness, reason=None):
        return CheckResult(s.id, lam, verdict, mode, hyp, concl, witness, reason)

    if graph_margin < 0:
        return result(Verdict.VACUOUS, graph_margin, None, None, "hypothesis")

    cycles, profiles = analysis.longest_cycles, analysis.profiles
    values = [_residual(s.residual_metric, p) for p in profiles]
    forall = mode is Quantifier.FORALL_LONGEST

    if s.direction is Direction.FORWARD:
        bound = _residual_bound(s, lam, delta)
        margins = [bound - r for r in values]
        pick = min if forall else max
        m = pick(margins)
        i = margins.index(m)
        verdict = Verdict.CONFIRMED if m >= 0 else Verdict.VIOLATED
        return result(verdict, graph_margin, m, cycles[i])

    threshold = _residual_threshold(s, lam, delta)
    qualifying = [i for i, r in enumerate(values) if r >= threshold]
    if not qualifying:
        best = max(values) - threshold if values else -threshold
        return result(Verdict.VACUOUS, min(graph_margin, best), None, None, "residual")
    i = qualifying[0]
    hyp = min(graph_margin, values[i] - threshold)
    bound = _circumference_bound(s, lam, bundle)
    if bound is INFINITY:
        return result(Verdict.VACUOUS, hyp, None, cycles[i], "sigma-infinite")
    m = analysis.circumference - bound
    if m >= 0:
        return result(Verdict.CONFIRMED, hyp, m, cycles[i])
    if not forall and len(qualifying) < len(values):
        return result(Verdict.VACUOUS, hyp, m, None, "exists-nonqualifying")
    return result(Verdict.VIOLATED, hyp, m, cycles[i])


def evaluate_all(
    bundle: InvariantBundle,
    analysis: CycleAnalysis,
    statements: list[Statement],
    mode: Quantifier = Quantifier.FORALL_LONGEST,
    lambdas: list[int] | None = None,
    allow_outside_domain: bool = False,
) -> list[CheckResult]:
    """Evaluate each statement at each lambda of its domain (or of ``lambdas``)."""
    out = []
    for s in statements:
        if s.fixed_lambda is not None:
            lams = [s.fixed_lambda] if lambdas is None or s.fixed_lambda in lambdas else []
        elif lambdas is None:
            lams = lambda_domain(s, bundle)
        else:
            lams = [lam for lam in lambdas if lam >= 1 and (allow_outside_domain or lam <= bundle.min_degree)]
        for lam in lams:
            out.append(evaluate(bundle, analysis, s, lam, mode, allow_outside_domain))
    return out


# proof pivots --------------------------------------------------------------


def check_reduction_identity(n: int, delta: int, mu: int) -> bool:
    """Whether the two forms of the degree threshold agree after putting mu = delta-lambda+1."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= mu <= delta:
        raise ValueError(f"mu = {mu} outside 1..delta = {delta}")
    before = delta >= Fraction(n + 2, delta - mu + 2) + delta - mu - 1
    after = delta >= Fraction(n + 2, mu + 1) + mu - 2
    return before == after


def check_reduction_identity_thm8(delta: int, lam: int, mu: int) -> bool:
    """Whether lambda(delta-lambda+2) equals mu(delta-mu+2) under mu = delta-lambda+2."""
    if mu != delta - lam + 2 or mu < 2:
        raise ValueError(f"mu = {mu} is not delta-lambda+2 >= 2 for delta={delta}, lambda={lam}")
    return lam * (delta - lam + 2) == mu * (delta - mu + 2)


def sweep_identities(n_max: int = 60, delta_max: int = 12) -> dict:
    """Run both pivot checks over the standard ranges and count failures."""
    threshold_cases = bound_cases = 0
    failures = []
    for delta in range(1, delta_max + 1):
        for mu in range(1, (delta + 1) // 2 + 1):
            for n in range(1, n_max + 1):
                threshold_cases += 1
                if not check_reduction_identity(n, delta, mu):
                    failures.append({"check": "degree_threshold", "n": n, "delta": delta, "mu": mu})
        for lam in range((delta + 3) // 2, delta + 1):
            bound_cases += 1
            mu = delta - lam + 2
            if not check_reduction_identity_thm8(delta, lam, mu):
                failures.append({"check": "circumference_bound", "delta": delta, "lambda": lam, "mu": mu})
    return {"threshold_cases": threshold_cases, "bound_cases": bound_cases, "failures": failures}
