"""Window counts, the fixed-point membership test and the singularity classifier.

For a row-standard tableau with first column ``a'_p`` and second column
``b'_p`` the window count of ``(i, j)`` is the number of two-box rows with
``i < a'_p`` and ``b'_p <= j``. For a standard tableau ``T`` the component
table is the window-count table of ``t_star(T)``. A torus-fixed flag lies on
the component of ``T`` exactly when its table is dominated by the component
table, and a component is singular exactly when more than ``r(r-1)/2`` of
the probes in ``x_set`` lie on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .tableaux import (
    RowStandardTableau,
    StandardTableau,
    TwoColumnShape,
    t_star,
    x_set,
)

__all__ = [
    "PairInvariantTable",
    "MembershipVerdict",
    "ComponentReport",
    "Relation",
    "TangentSpace",
    "s_table_of_rowstandard",
    "s_table_of_component",
    "is_member",
    "classify",
    "component_dimension",
    "tangent_dimension",
    "centralizer_dim_formula",
    "flag_stabilizer_dim_combinatorial",
    "flag_stabilizer_dim_rowstandard",
    "window_pairs",
]


def window_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All ``(i, j)`` with ``0 <= i < j <= n`` in lexicographic order."""
    for i in range(n):
        for j in range(i + 1, n + 1):
            yield i, j


@dataclass(frozen=True)
class PairInvariantTable:
    """Upper-triangular ``(n+1) x (n+1)`` table of window counts.

    Index with ``table[i, j]`` for ``0 <= i < j <= n``.
    """

    shape: TwoColumnShape
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij) -> int:
        i, j = ij
        if not 0 <= i < j <= self.shape.n:
            raise IndexError(f"window ({i},{j}) needs 0 <= i < j <= {self.shape.n}")
        return self.values[i][j]

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for i, j in window_pairs(self.shape.n):
            yield (i, j), self.values[i][j]

    def dominated_by(self, other: PairInvariantTable) -> bool:
        return all(v <= other.values[i][j] for (i, j), v in self.items())

    def first_violation(self, bound: PairInvariantTable) -> tuple[int, int] | None:
        """Lexicographically smallest window where this table exceeds ``bound``."""
        for (i, j), v in self.items():
            if v > bound.values[i][j]:
                return i, j
        return None

    def is_monotone(self) -> bool:
        n = self.shape.n
        for i, j in window_pairs(n):
            v = self.values[i][j]
            if i > 0 and self.values[i - 1][j] < v:
                return False
            if j < n and self.values[i][j + 1] < v:
                return False
        return True


def _table_from_rows(shape: TwoColumnShape, pairs) -> PairInvariantTable:
    n = shape.n
    values = [[0] * (n + 1) for _ in range(n + 1)]
    for a, b in pairs:
        # the pair is counted for every i < a and j >= b
        for i in range(a):
            row = values[i]
            for j in range(b, n + 1):
                row[j] += 1
    return PairInvariantTable(shape, tuple(tuple(row) for row in values))


def s_table_of_rowstandard(t: RowStandardTableau) -> PairInvariantTable:
    return _table_from_rows(t.shape, zip(t.first_col, t.second_col))


def s_table_of_component(t: StandardTableau) -> PairInvariantTable:
    return s_table_of_rowstandard(t_star(t))


class MembershipVerdict(NamedTuple):
    member: bool
    witness: tuple[int, int] | None = None


def is_member(t: StandardTableau, tp: RowStandardTableau, component_table: PairInvariantTable | None = None) -> MembershipVerdict:
    """Decide whether the fixed flag of ``tp`` lies on the component of ``t``.

    Non-members come with the smallest window ``(i, j)`` where the count of
    ``tp`` exceeds the component count.
    """
    if t.shape != tp.shape:
        raise ValueError(f"shapes differ: {t.shape} vs {tp.shape}")
    bound = component_table if component_table is not None else s_table_of_component(t)
    witness = s_table_of_rowstandard(tp).first_violation(bound)
    return MembershipVerdict(witness is None, witness)


def component_dimension(shape: TwoColumnShape) -> int:
    r, s = shape.r, shape.s
    return r * (r - 1) // 2 + s * (s - 1) // 2


def centralizer_dim_formula(shape: TwoColumnShape) -> int:
    return shape.r ** 2 + shape.s ** 2


def flag_stabilizer_dim_combinatorial(tp: RowStandardTableau) -> int:
    """Three-term count of centralizer elements stabilizing the flag of ``tp``.

    Exact for tableaux whose second column increases (in particular for
    ``t_star`` of a standard tableau); the third term assumes that ordering.
    """
    r, s = tp.shape.r, tp.shape.s
    a, b = tp.first_col, tp.second_col
    one_box = sum(1 for p in range(r) for q in range(s, r) if a[p] <= a[q])
    mixed = sum(1 for p in range(r) for q in range(s) if a[p] < b[q])
    two_box = sum(1 for p in range(s) for q in range(p, s) if a[p] <= a[q])
    return one_box + mixed + two_box


def flag_stabilizer_dim_rowstandard(tp: RowStandardTableau) -> int:
    """Same count, valid for every row-standard tableau.

    The two-box term compares both columns instead of relying on row order.
    """
    r, s = tp.shape.r, tp.shape.s
    a, b = tp.first_col, tp.second_col
    one_box = sum(1 for p in range(r) for q in range(s, r) if a[p] <= a[q])
    mixed = sum(1 for p in range(r) for q in range(s) if a[p] < b[q])
    two_box = sum(1 for p in range(s) for q in range(s) if a[p] <= a[q] and b[p] <= b[q])
    return one_box + mixed + two_box


@dataclass(frozen=True)
class ComponentReport:
    tableau: StandardTableau
    fixed_point_count: int
    threshold: int
    component_dim: int
    tangent_dim: int
    singular: bool
    member_switch_pairs: tuple[tuple[int, int], ...]
    # cached verdicts for every probe, keyed by switch pair
    probe_verdicts: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def shape(self) -> TwoColumnShape:
        return self.tableau.shape

    def check(self) -> list[str]:
        """Internal consistency problems; empty when the report is coherent."""
        s = self.shape.s
        problems = []
        if self.singular != (self.fixed_point_count > self.threshold):
            problems.append("verdict disagrees with count vs threshold")
        if self.tangent_dim != self.fixed_point_count + s * (s - 1) // 2:
            problems.append("tangent dimension is not count + s(s-1)/2")
        if self.singular != (self.tangent_dim > self.component_dim):
            problems.append("verdict disagrees with tangent vs component dimension")
        if not self.singular and self.fixed_point_count != self.threshold:
            problems.append("nonsingular component with count != threshold")
        if len(self.member_switch_pairs) != self.fixed_point_count:
            problems.append("member pair list does not match the count")
        return problems


def classify(t: StandardTableau) -> ComponentReport:
    """Singularity verdict for the component indexed by ``t``."""
    shape = t.shape
    r, s = shape.r, shape.s
    bound = s_table_of_component(t)
    verdicts = {(p.i, p.j): is_member(t, p.tableau, bound) for p in x_set(shape)}
    members = tuple(ij for ij, v in verdicts.items() if v.member)
    threshold = r * (r - 1) // 2
    return ComponentReport(
        tableau=t,
        fixed_point_count=len(members),
        threshold=threshold,
        component_dim=component_dimension(shape),
        tangent_dim=len(members) + s * (s - 1) // 2,
        singular=len(members) > threshold,
        member_switch_pairs=members,
        probe_verdicts=verdicts,
    )


class Relation(NamedTuple):
    """A linear form vanishing on the tangent space at the T-bar flag.

    ``coordinate(i, j)`` alone when ``partner`` is None, otherwise
    ``coordinate(i, j) - coordinate(*partner)``.
    """

    pair: tuple[int, int]
    partner: tuple[int, int] | None
    reason: str  # "long_pair" or "non_member_probe"


@dataclass(frozen=True)
class TangentSpace:
    dim: int
    member_pairs: tuple[tuple[int, int], ...]
    paired_pairs: tuple[tuple[int, int], ...]
    orthogonal_relations: tuple[Relation, ...]


def tangent_dimension(t: StandardTableau, report: ComponentReport | None = None) -> TangentSpace:
    """Tangent space of the component of ``t`` at the T-bar flag, in chart coordinates.

    Chart coordinates are indexed by ``1 <= i < j <= n``. The pairs split
    three ways. Pairs with ``i > r`` give tangent vectors ``e(i,j) + e(i-r,j-r)``.
    Pairs with ``j >= i + r`` give vanishing coordinates. The remaining pairs
    are the probes: members give tangent vectors ``e(i,j)``; a non-member
    gives the relation ``x(i,j) = x(i+r,j+r)`` if ``j <= s``, else ``x(i,j) = 0``.
    """
    shape = t.shape
    r, s, n = shape.r, shape.s, shape.n
    if report is None:
        report = classify(t)
    members = report.member_switch_pairs
    member_set = set(members)
    paired = tuple((i, j) for i in range(r + 1, n + 1) for j in range(i + 1, n + 1))
    relations = [
        Relation((i, j), None, "long_pair")
        for i in range(1, n + 1) for j in range(i + r, n + 1)
    ]
    for i in range(1, r + 1):
        for j in range(i + 1, min(i + r - 1, n) + 1):
            if (i, j) in member_set:
                continue
            partner = (i + r, j + r) if j <= s else None
            relations.append(Relation((i, j), partner, "non_member_probe"))
    dim = len(members) + len(paired)
    if dim + len(relations) != n * (n - 1) // 2:
        raise AssertionError(
            f"tangent generators and relations do not span the chart: {dim} + {len(relations)} != {n * (n - 1) // 2}"
        )
    return TangentSpace(dim, members, paired, tuple(relations))

