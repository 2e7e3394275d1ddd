"""Cross-checks between the window-count formulas and exact linear algebra.

``run_verification`` runs every check up to a maximum size and returns
one :class:`CheckResult` per formula. The ``s_table`` hook lets tests
substitute a corrupted window-count routine to exercise the failure path.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field
from typing import Callable

from . import criterion
from .certificates import chain_to_tbar, membership_chain, validate_certificate
from .errors import DegenerateSampleError, ProofViolationError
from .oracle import (
    DEFAULT_RETRIES,
    centralizer_dim_oracle,
    flag_of_tableau,
    flag_stabilizer_dim_oracle,
    jordan_chain,
    nilpotent_map,
    random_centralizer_element,
    rank_table,
)
from .tableaux import (
    enumerate_row_standard,
    enumerate_standard,
    make_shape,
    parse_tableau,
    shape_chain,
    shapes_up_to,
    switch_entries,
    t_bar,
    t_star,
    x_set,
)

log = logging.getLogger(__name__)

DEFAULT_SEEDS = (1, 2, 3)
SEEDS_ENV = "SPRINGER2COL_SEEDS"


def seeds_from_env(default=DEFAULT_SEEDS) -> tuple[int, ...]:
    raw = os.environ.get(SEEDS_ENV, "").strip()
    if not raw:
        return tuple(default)
    try:
        seeds = tuple(int(x) for x in raw.split(",") if x.strip())
    except ValueError:
        raise ValueError(f"{SEEDS_ENV} must be comma-separated naturals, got {raw!r}") from None
    if not seeds or any(x < 0 for x in seeds):
        raise ValueError(f"{SEEDS_ENV} must be comma-separated naturals, got {raw!r}")
    return seeds


@dataclass(frozen=True)
class RunConfig:
    max_n: int = 7
    seeds: tuple[int, ...] = DEFAULT_SEEDS
    retries: int = DEFAULT_RETRIES

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")


@dataclass
class CheckResult:
    name: str
    anchor: str
    passed: bool = True
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, msg: str):
        self.passed = False
        if len(self.failures) < 5:
            self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f": {self.failures[0]}" if self.failures else ""
        return f"[{status}] {self.name} ({self.anchor}) - {self.cases} cases, {self.seconds:.2f}s{extra}"


SChecker = Callable[[object], criterion.PairInvariantTable]


def run_verification(config: RunConfig, s_table: SChecker | None = None) -> list[CheckResult]:
    s_table = s_table or criterion.s_table_of_rowstandard

    def component_table(t):
        return s_table(t_star(t))

    checks = [
        _check_rank_formula,
        _check_centralizer,
        _check_stabilizer,
        _check_generic_orbit,
        _check_jordan_chain,
        _check_tbar_universal,
        _check_classifier,
        _check_certificates,
        _check_worked_example,
    ]
    out = []
    for check in checks:
        res = check(config, s_table, component_table)
        log.info(res.line())
        out.append(res)
    return out


def _timed(name, anchor):
    def deco(fn):
        def run(config, s_table, component_table):
            res = CheckResult(name, anchor)
            start = time.perf_counter()
            fn(res, config, s_table, component_table)
            res.seconds = time.perf_counter() - start
            return res
        return run
    return deco


@_timed("rank of u on V_j/V_i equals the window count", "rank-quotient formula")
def _check_rank_formula(res, config, s_table, component_table):
    for shape in shapes_up_to(config.max_n):
        u = nilpotent_map(shape)
        for tp in enumerate_row_standard(shape):
            ranks = rank_table(flag_of_tableau(tp), u)
            table = s_table(tp)
            for (i, j), v in table.items():
                res.cases += 1
                if ranks[i, j] != v:
                    res.fail(f"{tp} window ({i},{j}): rank {ranks[i, j]} vs count {v}")


@_timed("centralizer dimension is r^2 + s^2", "centralizer dimension")
def _check_centralizer(res, config, s_table, component_table):
    for shape in shapes_up_to(config.max_n):
        res.cases += 1
        got = centralizer_dim_oracle(nilpotent_map(shape))
        if got != criterion.centralizer_dim_formula(shape):
            res.fail(f"shape ({shape}): oracle {got}")


@_timed("stabilizer of the T* flag has dimension r(r+1)/2 + s(s+1)/2", "open-orbit stabilizer count")
def _check_stabilizer(res, config, s_table, component_table):
    for shape in shapes_up_to(config.max_n):
        u = nilpotent_map(shape)
        r, s = shape.r, shape.s
        want = r * (r + 1) // 2 + s * (s + 1) // 2
        for t in enumerate_standard(shape):
            res.cases += 1
            star = t_star(t)
            got = flag_stabilizer_dim_oracle(u, star)
            comb = criterion.flag_stabilizer_dim_combinatorial(star)
            if not got == comb == want:
                res.fail(f"{t}: oracle {got}, three-term count {comb}, expected {want}")


@_timed("generic centralizer translate of the T* flag realizes the component table", "generic rank on the component")
def _check_generic_orbit(res, config, s_table, component_table):
    for shape in shapes_up_to(config.max_n):
        u = nilpotent_map(shape)
        for t in enumerate_standard(shape):
            bound = component_table(t)
            base = flag_of_tableau(t_star(t))
            for seed in config.seeds:
                res.cases += 1
                try:
                    g = random_centralizer_element(u, seed, config.retries)
                except DegenerateSampleError as exc:
                    res.fail(str(exc))
                    continue
                if not (g @ u.matrix == u.matrix @ g):
                    res.fail(f"seed {seed}: sample does not commute with u")
                ranks = rank_table(base.translate(g), u)
                for (i, j), v in bound.items():
                    if ranks[i, j] != v:
                        res.fail(f"{t} seed {seed} window ({i},{j}): rank {ranks[i, j]} vs {v}")
                        break


@_timed("fixed flag lies in the cell of T iff the column contents agree", "cell of a standard tableau")
def _check_jordan_chain(res, config, s_table, component_table):
    for shape in shapes_up_to(min(config.max_n, 7)):
        u = nilpotent_map(shape)
        standards = enumerate_standard(shape)
        for tp in enumerate_row_standard(shape):
            chain = jordan_chain(flag_of_tableau(tp), u).types
            for t in standards:
                res.cases += 1
                same_cell = chain == shape_chain(t)
                same_cols = set(tp.second_col) == set(t.second_col)
                if same_cell != same_cols:
                    res.fail(f"{tp} vs {t}: chain match {same_cell}, column match {same_cols}")


@_timed("T-bar passes the membership test for every component", "T-bar in every component")
def _check_tbar_universal(res, config, s_table, component_table):
    for shape in shapes_up_to(config.max_n):
        tb = s_table(t_bar(shape))
        for t in enumerate_standard(shape):
            res.cases += 1
            w = tb.first_violation(component_table(t))
            if w is not None:
                res.fail(f"{t}: T-bar violates window {w}")


@_timed("count >= r(r-1)/2, equality iff nonsingular; hooks nonsingular; tangent count", "singularity criterion")
def _check_classifier(res, config, s_table, component_table):
    for shape in shapes_up_to(config.max_n):
        n = shape.n
        for t in enumerate_standard(shape):
            res.cases += 1
            rep = criterion.classify(t)
            for problem in rep.check():
                res.fail(f"{t}: {problem}")
            if rep.fixed_point_count < rep.threshold:
                res.fail(f"{t}: count {rep.fixed_point_count} below threshold")
            if shape.is_hook and rep.singular:
                res.fail(f"{t}: hook shape classified singular")
            tan = criterion.tangent_dimension(t, rep)
            if tan.dim + len(tan.orthogonal_relations) != n * (n - 1) // 2:
                res.fail(f"{t}: tangent complementarity fails")
            bound = component_table(t)
            for probe_pair, verdict in rep.probe_verdicts.items():
                probe = s_table(_probe(shape, probe_pair))
                if (probe.first_violation(bound) is None) != verdict.member:
                    res.fail(f"{t}: probe {probe_pair} verdict disagrees with the supplied table")


def _probe(shape, pair):
    return switch_entries(t_bar(shape), *pair)


@_timed("membership chains and degeneration chains replay without violation", "fixed-point criterion proof")
def _check_certificates(res, config, s_table, component_table):
    for shape in shapes_up_to(min(config.max_n, 7)):
        rows = enumerate_row_standard(shape)
        for tp in rows:
            res.cases += 1
            try:
                problems = validate_certificate(chain_to_tbar(tp))
            except ProofViolationError as exc:
                problems = [str(exc)]
            for p in problems:
                res.fail(f"chain to T-bar from {tp}: {p}")
        for t in enumerate_standard(shape):
            bound = component_table(t)
            for tp in rows:
                res.cases += 1
                w = s_table(tp).first_violation(bound)
                if w is None:
                    try:
                        problems = validate_certificate(membership_chain(t, tp), t)
                    except (ProofViolationError, ValueError) as exc:
                        problems = [str(exc)]
                    for p in problems:
                        res.fail(f"membership chain {t} <- {tp}: {p}")
                else:
                    i, j = w
                    if not s_table(tp)[i, j] > bound[i, j]:
                        res.fail(f"witness {w} for {tp} does not re-verify")


@_timed("worked example: count 10 > 6 for rows (1,3),(2,5),(4),(6)", "worked example")
def _check_worked_example(res, config, s_table, component_table):
    if config.max_n < 6:
        return
    t = parse_tableau(make_shape(4, 2), "1,3;2,5;4;6")
    bound = component_table(t)
    count = sum(s_table(p.tableau).first_violation(bound) is None for p in x_set(t.shape))
    res.cases += 1
    if count != 10:
        res.fail(f"count {count} instead of 10")
