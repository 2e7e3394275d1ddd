"""Discrete replays of the two degeneration arguments.

``chain_to_tbar`` walks any row-standard tableau down to T-bar. Each step
is the limit of a one-parameter unipotent subgroup of the centralizer, so
every step can only lower window counts. ``membership_chain`` starts from
a tableau accepted by the membership test and moves toward the column
content of the standard tableau. Each step switches two entries and keeps
the test satisfied, so the starting flag lies in the closure of the
orbit of the end point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .criterion import is_member, s_table_of_component, s_table_of_rowstandard
from .errors import ProofViolationError, ValidityError
from .tableaux import (
    RowStandardTableau,
    StandardTableau,
    make_tableau,
    switch_entries,
    t_bar,
)

__all__ = [
    "INFINITY",
    "MoveStep",
    "Certificate",
    "chain_to_tbar",
    "membership_chain",
    "validate_certificate",
]

# right neighbour of an entry with no right neighbour; larger than any entry
INFINITY = float("inf")

StepKind = Literal["toward_tbar", "case_A", "case_B"]


@dataclass(frozen=True)
class MoveStep:
    source: RowStandardTableau
    target: RowStandardTableau
    kind: StepKind
    switched: tuple[int, int]
    pivot: dict
    # second entry transposition made by the same toward_tbar move, if any
    companion: tuple[int, int] | None = None

    def to_record(self) -> dict:
        return {
            "from": self.source.literal(),
            "to": self.target.literal(),
            "kind": self.kind,
            "switched": list(self.switched),
            "companion": list(self.companion) if self.companion else None,
            "pivot": {k: (None if v == INFINITY else v) for k, v in self.pivot.items()},
        }


@dataclass(frozen=True)
class Certificate:
    start: RowStandardTableau
    steps: tuple[MoveStep, ...]
    goal: str  # "reached_tbar" or "reached_column_content_of(<literal>)"

    @property
    def end(self) -> RowStandardTableau:
        return self.steps[-1].target if self.steps else self.start

    def __len__(self):
        return len(self.steps)

    def tableaux(self) -> list[RowStandardTableau]:
        return [self.start] + [st.target for st in self.steps]

    def to_record(self) -> dict:
        return {
            "start": self.start.literal(),
            "goal": self.goal,
            "steps": [st.to_record() for st in self.steps],
        }


def _apply_transpositions(tp: RowStandardTableau, pairs) -> RowStandardTableau:
    perm = {}
    for x, y in pairs:
        perm[x], perm[y] = y, x
    f = lambda e: perm.get(e, e)  # noqa: E731
    return make_tableau(tp.shape, map(f, tp.first_col), map(f, tp.second_col))


def _tbar_step(tp: RowStandardTableau) -> MoveStep | None:
    shape = tp.shape
    r, n = shape.r, shape.n
    contents = tp.contents
    # boxes 1..i-1 already hold 1..i-1, so i is the smallest entry not in box i
    i = next((k for k in range(1, n + 1) if contents[k - 1] != k), None)
    if i is None:
        return None
    j = tp.box_of(i)
    # box pairs (moved box, target box) of the unipotent e_j -> e_j + t e_i
    box_pairs = [(j, i)]
    if i > r:
        box_pairs.append((j - r, i - r))
    elif j + r <= n:
        box_pairs.append((j + r, i + r))
    # in the limit a pair of boxes trades entries iff the moved box holds the smaller one
    swaps = []
    for x, y in box_pairs:
        ex, ey = contents[x - 1], contents[y - 1]
        if ex < ey:
            swaps.append((ex, ey))
    try:
        target = _apply_transpositions(tp, swaps)
    except ValidityError as exc:
        raise ProofViolationError(f"degeneration of {tp} at entry {i} is not row-standard: {exc}") from exc
    return MoveStep(
        source=tp,
        target=target,
        kind="toward_tbar",
        switched=swaps[0],
        companion=swaps[1] if len(swaps) > 1 else None,
        pivot={"i": i, "box": j},
    )


def chain_to_tbar(tp: RowStandardTableau) -> Certificate:
    """Chain of degenerations from ``tp`` to T-bar; at most ``n`` steps."""
    n = tp.shape.n
    steps = []
    cur = tp
    while (step := _tbar_step(cur)) is not None:
        if len(steps) >= n:
            raise ProofViolationError(f"degeneration of {tp} did not reach T-bar in {n} steps")
        steps.append(step)
        cur = step.target
    if cur != t_bar(tp.shape):
        raise ProofViolationError(f"degeneration of {tp} stopped at {cur}")
    return Certificate(tp, tuple(steps), "reached_tbar")


def _omega(tp: RowStandardTableau, entry: int):
    nb = tp.right_neighbor(entry)
    return INFINITY if nb is None else nb


def _membership_step(t: StandardTableau, cur: RowStandardTableau) -> MoveStep | None:
    n = cur.shape.n
    i = next((k for k in range(1, n + 1) if t.column_of(k) != cur.column_of(k)), None)
    if i is None:
        return None
    if not (cur.column_of(i) == 1 and t.column_of(i) == 2):
        raise ProofViolationError(f"smallest misplaced entry {i} of {cur} is in the wrong column")
    candidates = [
        j for j in range(i + 1, n + 1)
        if cur.column_of(j) == 2 and cur.left_neighbor(j) <= i
    ]
    if not candidates:
        raise ProofViolationError(f"no second-column entry j > {i} with left neighbour <= {i} in {cur}")
    j = min(candidates)
    w_i = _omega(cur, i)
    case_a = [k for k in range(i + 1, j + 1) if cur.column_of(k) == 1 and _omega(cur, k) > w_i]
    try:
        if case_a:
            ip = min(case_a)
            w_ip = _omega(cur, ip)
            if not (i < ip < w_i < w_ip):
                raise ProofViolationError(f"case A ordering fails: {i} < {ip} < {w_i} < {w_ip}")
            target = switch_entries(cur, i, ip)
            return MoveStep(cur, target, "case_A", (i, ip), {"i": i, "j": j, "i_prime": ip, "omega_i": w_i, "omega_i_prime": w_ip})
        jp = cur.left_neighbor(j)
        if not (j < w_i and jp < i):
            raise ProofViolationError(f"case B ordering fails: j={j}, omega(i)={w_i}, left neighbour {jp}, i={i}")
        target = switch_entries(cur, i, j)
        return MoveStep(cur, target, "case_B", (i, j), {"i": i, "j": j, "j_prime": jp, "omega_i": w_i})
    except ValidityError as exc:
        raise ProofViolationError(f"switch in {cur} is not row-standard: {exc}") from exc


def membership_chain(t: StandardTableau, tp: RowStandardTableau) -> Certificate:
    """Chain of switches from an accepted ``tp`` to a tableau with the column content of ``t``.

    Every intermediate tableau is re-checked against the membership test.
    """
    bound = s_table_of_component(t)
    verdict = is_member(t, tp, bound)
    if not verdict.member:
        raise ValueError(f"{tp} fails the membership test for {t} at window {verdict.witness}")
    n = t.shape.n
    # each step raises the smallest misplaced entry or its right neighbour
    limit = (n + 1) * (n + 2)
    steps = []
    cur = tp
    while (step := _membership_step(t, cur)) is not None:
        if len(steps) >= limit:
            raise ProofViolationError(f"membership chain from {tp} does not terminate")
        v = is_member(t, step.target, bound)
        if not v.member:
            raise ProofViolationError(f"{step.kind} step {cur} -> {step.target} breaks the test at {v.witness}")
        steps.append(step)
        cur = step.target
    return Certificate(tp, tuple(steps), f"reached_column_content_of({t.literal()})")


def validate_certificate(cert: Certificate, t: StandardTableau | None = None) -> list[str]:
    """Re-check every step independently; returns a list of problems."""
    problems = []
    prev = cert.start
    bound = s_table_of_component(t) if t is not None else None
    for k, st in enumerate(cert.steps):
        if st.source != prev:
            problems.append(f"step {k} does not start where step {k - 1} ended")
        pairs = [st.switched] + ([st.companion] if st.companion else [])
        try:
            expected = _apply_transpositions(st.source, pairs)
        except ValidityError as exc:
            problems.append(f"step {k} produces a non-row-standard tableau: {exc}")
            expected = None
        if expected is not None and expected != st.target:
            problems.append(f"step {k} target does not match its switches")
        if st.kind == "toward_tbar":
            if not s_table_of_rowstandard(st.target).dominated_by(s_table_of_rowstandard(st.source)):
                problems.append(f"step {k} raises a window count")
        elif st.kind == "case_A":
            i, ip = st.switched
            w_i, w_ip = st.pivot["omega_i"], st.pivot["omega_i_prime"]
            if not (i < ip < w_i < w_ip):
                problems.append(f"case A step {k} violates i < i' < omega(i) < omega(i')")
        elif st.kind == "case_B":
            i, j = st.switched
            if not (j < st.pivot["omega_i"] and st.pivot["j_prime"] < i):
                problems.append(f"case B step {k} violates j < omega(i) or j' < i")
        if bound is not None and st.kind != "toward_tbar":
            if not s_table_of_rowstandard(st.target).dominated_by(bound):
                problems.append(f"step {k} leaves the component")
        prev = st.target
    if cert.goal == "reached_tbar":
        if prev != t_bar(cert.start.shape):
            problems.append("chain does not end at T-bar")
    elif t is not None and prev.column_content() != t.column_content():
        problems.append("chain does not end at the column content of the component tableau")
    return problems
