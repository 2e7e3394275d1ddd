"""Shared brute-force oracles and hypothesis strategies.

Nothing here calls the code paths it is used to check: tableaux are found by
filtering permutations, window counts are recounted from the definition,
and orbit limits are computed with sympy rather than the package's own
elimination.
"""

from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import strategies as st

from springer2col.tableaux import RowStandardTableau, TwoColumnShape, shapes_up_to


def shapes(max_n, min_n=1):
    return shapes_up_to(max_n, min_n)


def shape_ids(seq):
    return [f"{sh.r},{sh.s}" for sh in seq]


def brute_row_standard(shape):
    """Every numbering of the shape, filtered by row increase; as (first, second) columns."""
    r, s, n = shape.r, shape.s, shape.n
    out = set()
    for perm in permutations(range(1, n + 1)):
        first, second = perm[:r], perm[r:]
        if all(first[p] < second[p] for p in range(s)):
            out.add((first, second))
    return out


def brute_standard(shape):
    def inc(seq):
        return all(x < y for x, y in zip(seq, seq[1:]))
    return {(a, b) for a, b in brute_row_standard(shape) if inc(a) and inc(b)}


def naive_window(first, second, i, j):
    return sum(1 for a, b in zip(first, second) if i < a < b <= j)


def naive_t_star(first, second):
    """Hand-coded first-column renumbering; independent of the package version."""
    s = len(second)
    remaining = sorted(first)
    star = []
    for p in range(len(first)):
        if p == 0 and s:
            a = second[0] - 1
        elif p < s:
            a = max(x for x in remaining if x < second[p])
        else:
            a = min(remaining)
        remaining.remove(a)
        star.append(a)
    return tuple(star), tuple(second)


def naive_member(t_cols, tp_cols, n):
    sf, ss = naive_t_star(*t_cols)
    return all(
        naive_window(*tp_cols, i, j) <= naive_window(sf, ss, i, j)
        for i in range(n) for j in range(i + 1, n + 1)
    )


def u_matrix(shape):
    n, r = shape.n, shape.r
    return sympy.Matrix(n, n, lambda a, b: 1 if b >= r and a == b - r else 0)


def unit(n, box):
    return sympy.Matrix(n, 1, lambda a, _: 1 if a == box - 1 else 0)


def limit_flag(basis, N):
    """Limit as t -> oo of the flag spanned by (I + tN) applied to ``basis`` (sympy columns).

    Returns, for each k, a matrix whose columns span the k-th limit space.
    Uses eps = 1/t: columns eps*b + N*b, repeatedly cancelling constant
    terms and dividing by eps until the leading terms are independent.
    """
    n = len(basis)
    out = []
    for k in range(1, n + 1):
        # each column is a list of coefficient vectors [c0, c1, ...] in eps
        cols = [[N * b, b] for b in basis[:k]]
        while True:
            lead = sympy.Matrix.hstack(*[c[0] for c in cols])
            if lead.rank() == k:
                out.append(lead)
                break
            null = lead.nullspace()[0]
            m = max(idx for idx in range(k) if null[idx] != 0)
            depth = max(len(c) for c in cols)
            combo = []
            for d in range(depth):
                v = sympy.zeros(n, 1)
                for idx in range(k):
                    if null[idx] != 0 and d < len(cols[idx]):
                        v += null[idx] * cols[idx][d]
                combo.append(v)
            assert combo[0] == sympy.zeros(n, 1)
            combo = combo[1:]
            while combo and combo[0] == sympy.zeros(n, 1):
                combo = combo[1:]
            assert combo, "combination vanished identically"
            cols[m] = combo
    return out


def same_flag(flag_a, flag_b):
    for a, b in zip(flag_a, flag_b):
        if a.rank() != b.rank() or sympy.Matrix.hstack(a, b).rank() != a.rank():
            return False
    return True


def coordinate_flag(tp):
    n = tp.shape.n
    basis = [unit(n, x) for x in tp.boxes]
    return [sympy.Matrix.hstack(*basis[:k]) for k in range(1, n + 1)], basis


@st.composite
def two_column_shapes(draw, max_n=8, min_n=1):
    n = draw(st.integers(min_n, max_n))
    s = draw(st.integers(0, n // 2))
    return TwoColumnShape(n - s, s)


@st.composite
def row_standard_tableaux(draw, max_n=8, min_n=1):
    shape = draw(two_column_shapes(max_n, min_n))
    perm = draw(st.permutations(range(1, shape.n + 1)))
    first, second = list(perm[:shape.r]), list(perm[shape.r:])
    for p in range(shape.s):
        if first[p] > second[p]:
            first[p], second[p] = second[p], first[p]
    return RowStandardTableau(shape, first, second)


@st.composite
def rational_matrices(draw, max_rows=6, max_cols=6, integral=False):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    if integral:
        elem = st.integers(-4, 4).map(Fraction)
    else:
        elem = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    # bias toward rank deficiency by repeating rows
    base = draw(st.lists(st.lists(elem, min_size=cols, max_size=cols), min_size=1, max_size=rows))
    extra = draw(st.lists(st.tuples(st.sampled_from(range(len(base))), st.sampled_from(range(len(base))), elem), max_size=3))
    data = [list(r) for r in base]
    for a, b, c in extra:
        data.append([x + c * y for x, y in zip(data[a], data[b])])
    return data


@pytest.fixture
def example_shape():
    return TwoColumnShape(4, 2)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
