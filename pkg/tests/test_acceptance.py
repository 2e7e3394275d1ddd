"""Acceptance gate: twelve end-to-end criteria, one test each.

Every test records a single ``[PASS]`` / ``[FAIL]`` line; the lines are
printed together in the terminal summary (see conftest.py). Running this
file directly prints them too.
"""

import time

import pytest

from springer2col.certificates import membership_chain, validate_certificate
from springer2col.criterion import (
    classify,
    is_member,
    s_table_of_component,
    s_table_of_rowstandard,
    tangent_dimension,
)
from springer2col.errors import ProofViolationError
from springer2col.oracle import (
    centralizer_dim_oracle,
    flag_of_tableau,
    flag_stabilizer_dim_oracle,
    nilpotent_map,
    random_centralizer_element,
    rank_table,
)
from springer2col.tableaux import (
    enumerate_row_standard,
    enumerate_standard,
    make_shape,
    parse_tableau,
    shapes_up_to,
    t_bar,
    t_star,
    x_set,
)

ACCEPTANCE_LINES = []

WORKED = ((4, 2), "1,3;2,5;4;6")

SINGULAR_LIST = [
    ((4, 3), "1,3;2,5;4,7;6"),
    ((4, 3), "1,2;3,4;5,6;7"),
    ((4, 4), "1,3;2,5;4,7;6,8"),
    ((4, 4), "1,2;3,4;5,6;7,8"),
    ((5, 2), "1,4;2,6;3;5;7"),
    ((5, 2), "1,3;2,5;4;6;7"),
]

PROBE_LITERALS = {
    "2,5;1,6;3;4", "3,5;2,6;1;4", "4,5;2,6;3;1", "1,5;3,6;2;4", "1,5;4,6;3;2", "1,5;2,6;4;3",
    "1,2;5,6;3;4", "1,3;2,6;5;4", "1,4;2,6;3;5", "1,5;2,3;6;4", "1,5;2,4;3;6",
}

SEEDS = (1, 2, 3)


def standard_tableaux(max_n, min_n=1):
    for shape in shapes_up_to(max_n, min_n):
        for t in enumerate_standard(shape):
            yield t


def record(number, title, passed, detail):
    line = f"[{'PASS' if passed else 'FAIL'}] AC{number:02d} {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed


def check(number, title, failures, detail, limit=None, elapsed=None):
    passed = not failures
    if limit is not None and elapsed is not None and elapsed >= limit:
        passed = False
        failures = failures + [f"took {elapsed:.2f}s, limit {limit}s"]
    if elapsed is not None:
        detail = f"{detail} ({elapsed:.2f}s)"
    if failures:
        detail = f"{detail}; first problem: {failures[0]}"
    assert record(number, title, passed, detail), detail


def test_ac01_worked_example():
    start = time.perf_counter()
    (r, s), literal = WORKED
    rep = classify(parse_tableau(make_shape(r, s), literal))
    elapsed = time.perf_counter() - start
    failures = []
    if (rep.fixed_point_count, rep.threshold, rep.singular) != (10, 6, True):
        failures.append(f"got count {rep.fixed_point_count}, threshold {rep.threshold}, singular {rep.singular}")
    check(1, "worked example", failures, f"count {rep.fixed_point_count} > threshold {rep.threshold}", 1.0, elapsed)


def test_ac02_singular_list():
    start = time.perf_counter()
    failures = []
    for (r, s), literal in SINGULAR_LIST:
        rep = classify(parse_tableau(make_shape(r, s), literal))
        if not rep.singular:
            failures.append(f"{literal} classified nonsingular")
    elapsed = time.perf_counter() - start
    check(2, "listed singular tableaux", failures, f"{len(SINGULAR_LIST) - len(failures)}/6 singular", 5.0, elapsed)


def test_ac03_t_star():
    got = t_star(parse_tableau(make_shape(4, 2), "1,3;2,5;4;6"))
    failures = [] if got.literal() == "2,3;4,5;1;6" else [f"got {got.literal()}"]
    check(3, "T* of the worked example", failures, f"T* = {got.literal()}")


def test_ac04_probe_set():
    got = {p.tableau.literal() for p in x_set(make_shape(4, 2))}
    failures = []
    if got != PROBE_LITERALS:
        failures.append(f"missing {sorted(PROBE_LITERALS - got)}, extra {sorted(got - PROBE_LITERALS)}")
    check(4, "probe set of (4,2)", failures, f"{len(got)} probes")


def test_ac05_hook_nonsingular():
    failures, count = [], 0
    for t in standard_tableaux(10):
        if t.shape.s > 1:
            continue
        count += 1
        if classify(t).singular:
            failures.append(f"{t.literal()} singular")
    check(5, "hook shapes nonsingular, n <= 10", failures, f"{count} tableaux")


def test_ac06_equality_when_nonsingular():
    failures, count = [], 0
    for t in standard_tableaux(10):
        rep = classify(t)
        if rep.singular:
            continue
        count += 1
        r = t.shape.r
        if rep.fixed_point_count != r * (r - 1) // 2:
            failures.append(f"{t.literal()}: count {rep.fixed_point_count}")
    check(6, "nonsingular count equals r(r-1)/2, n <= 10", failures, f"{count} nonsingular tableaux")


def test_ac07_rank_equals_window_count():
    start = time.perf_counter()
    failures, cases = [], 0
    for shape in shapes_up_to(7):
        u = nilpotent_map(shape)
        for tp in enumerate_row_standard(shape):
            ranks = rank_table(flag_of_tableau(tp), u)
            counts = dict(s_table_of_rowstandard(tp).items())
            cases += len(ranks)
            if ranks != counts:
                bad = next(k for k in ranks if ranks[k] != counts[k])
                failures.append(f"{tp.literal()} window {bad}: rank {ranks[bad]} vs count {counts[bad]}")
    elapsed = time.perf_counter() - start
    check(7, "rank on quotients equals window count, n <= 7", failures, f"{cases} windows", 120.0, elapsed)


def test_ac08_centralizer_dimensions():
    failures, cases = [], 0
    for shape in shapes_up_to(8):
        r, s = shape.r, shape.s
        u = nilpotent_map(shape)
        if centralizer_dim_oracle(u) != r * r + s * s:
            failures.append(f"centralizer of {shape}")
        want = r * (r + 1) // 2 + s * (s + 1) // 2
        for t in enumerate_standard(shape):
            cases += 1
            got = flag_stabilizer_dim_oracle(u, t_star(t))
            if got != want:
                failures.append(f"stabilizer of T* for {t.literal()}: {got} != {want}")
    check(8, "centralizer and T* stabilizer dimensions, n <= 8", failures, f"{cases} stabilizers")


def test_ac09_generic_orbit():
    failures, cases = [], 0
    for shape in shapes_up_to(7):
        u = nilpotent_map(shape)
        for t in enumerate_standard(shape):
            want = dict(s_table_of_component(t).items())
            base = flag_of_tableau(t_star(t))
            for seed in SEEDS:
                cases += 1
                moved = base.translate(random_centralizer_element(u, seed))
                if rank_table(moved, u) != want:
                    failures.append(f"{t.literal()} seed {seed}")
    check(9, "generic orbit ranks, n <= 7, 3 seeds", failures, f"{cases} sampled flags")


def test_ac10_proof_replay():
    failures, members, witnesses = [], 0, 0
    for shape in shapes_up_to(7):
        rows = enumerate_row_standard(shape)
        for t in enumerate_standard(shape):
            bound = s_table_of_component(t)
            for tp in rows:
                v = is_member(t, tp, bound)
                if v.member:
                    members += 1
                    try:
                        cert = membership_chain(t, tp)
                    except ProofViolationError as exc:
                        failures.append(str(exc))
                        continue
                    problems = validate_certificate(cert, t)
                    if problems:
                        failures.append(f"{t.literal()} / {tp.literal()}: {problems[0]}")
                    if any(not is_member(t, mid, bound).member for mid in cert.tableaux()):
                        failures.append(f"{t.literal()} / {tp.literal()}: intermediate leaves the component")
                else:
                    witnesses += 1
                    i, j = v.witness
                    if not s_table_of_rowstandard(tp)[i, j] > bound[i, j]:
                        failures.append(f"{t.literal()} / {tp.literal()}: witness {v.witness} does not re-verify")
    check(10, "membership chains and witnesses, n <= 7", failures, f"{members} chains, {witnesses} witnesses")


def test_ac11_t_bar_universal():
    failures, count = [], 0
    for t in standard_tableaux(10):
        count += 1
        if not is_member(t, t_bar(t.shape)).member:
            failures.append(t.literal())
    check(11, "T-bar lies on every component, n <= 10", failures, f"{count} components")


def test_ac12_tangent_complementarity():
    failures, count = [], 0
    for t in standard_tableaux(10):
        count += 1
        n = t.shape.n
        rep = classify(t)
        tan = tangent_dimension(t, rep)
        if tan.dim + len(tan.orthogonal_relations) != n * (n - 1) // 2:
            failures.append(f"{t.literal()}: {tan.dim} + {len(tan.orthogonal_relations)}")
        if rep.singular != (tan.dim > rep.component_dim):
            failures.append(f"{t.literal()}: verdict vs tangent dimension")
    check(12, "tangent complementarity, n <= 10", failures, f"{count} components")


if __name__ == "__main__":
    import sys
    ok = True
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac"):
            try:
                fn()
            except AssertionError:
                ok = False
    sys.exit(0 if ok else 1)
