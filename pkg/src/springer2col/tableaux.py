"""Two-column Young diagrams and their standard / row-standard tableaux.

A tableau is stored by columns: ``first_col`` holds the entries of the
first column from top to bottom, ``second_col`` those of the second
column. Row ``p`` (1-based) is ``(first_col[p-1], second_col[p-1])`` when
``p <= s`` and ``(first_col[p-1],)`` otherwise. Entries are 1-based.

Boxes are indexed the way the Jordan basis is: the box in row ``p`` of the
first column is box ``p``, the box in row ``p`` of the second column is box
``r + p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence

from .errors import InternalError, ParseError, ShapeError, ValidityError

__all__ = [
    "TwoColumnShape",
    "RowStandardTableau",
    "StandardTableau",
    "Probe",
    "make_shape",
    "shapes_up_to",
    "make_tableau",
    "parse_tableau",
    "parse_shape",
    "enumerate_row_standard",
    "enumerate_standard",
    "t_bar",
    "t_star",
    "switch_entries",
    "x_set",
    "shape_chain",
]


@dataclass(frozen=True, order=True)
class TwoColumnShape:
    """Young diagram with two columns of lengths ``r >= s >= 0``."""

    r: int
    s: int

    def __post_init__(self):
        if not (isinstance(self.r, int) and isinstance(self.s, int)):
            raise ShapeError(f"column lengths must be integers, got {self.r!r}, {self.s!r}")
        if self.s < 0:
            raise ShapeError(f"column lengths must be non-negative, got s={self.s}")
        if self.s > self.r:
            raise ShapeError(f"first column must be at least as long as the second: r={self.r} < s={self.s}")

    @property
    def n(self) -> int:
        return self.r + self.s

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return (2,) * self.s + (1,) * (self.r - self.s)

    @property
    def is_hook(self) -> bool:
        return self.s <= 1

    def __str__(self):
        return f"{self.r},{self.s}"


def make_shape(r: int, s: int) -> TwoColumnShape:
    return TwoColumnShape(r, s)


def parse_shape(text: str) -> TwoColumnShape:
    """Parse ``"r,s"`` into a shape."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ParseError(f"shape literal must be 'r,s', got {text!r}")
    try:
        r, s = (int(p) for p in parts)
    except ValueError:
        raise ParseError(f"shape literal must contain two integers, got {text!r}") from None
    return make_shape(r, s)


def shapes_up_to(max_n: int, min_n: int = 1) -> list[TwoColumnShape]:
    """All two-column shapes with ``min_n <= n <= max_n``, ordered by ``(n, r)``."""
    out = []
    for n in range(min_n, max_n + 1):
        for s in range(n // 2, -1, -1):
            out.append(TwoColumnShape(n - s, s))
    return out


@dataclass(frozen=True, eq=False)
class RowStandardTableau:
    """Numbering of a two-column diagram by ``1..n`` increasing along rows."""

    shape: TwoColumnShape
    first_col: tuple[int, ...]
    second_col: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "first_col", tuple(self.first_col))
        object.__setattr__(self, "second_col", tuple(self.second_col))
        self._validate()

    def _validate(self):
        r, s, n = self.shape.r, self.shape.s, self.shape.n
        if len(self.first_col) != r or len(self.second_col) != s:
            raise ValidityError(
                f"column lengths ({len(self.first_col)},{len(self.second_col)}) do not match shape ({r},{s})"
            )
        entries = self.first_col + self.second_col
        if sorted(entries) != list(range(1, n + 1)):
            raise ValidityError(f"entries {sorted(entries)} are not a bijection onto 1..{n}")
        for p, (a, b) in enumerate(zip(self.first_col, self.second_col), start=1):
            if not a < b:
                raise ValidityError(f"row {p} is not increasing: ({a},{b})")

    # equality ignores the Standard/RowStandard refinement
    def _key(self):
        return (self.shape, self.first_col, self.second_col)

    def __eq__(self, other):
        if not isinstance(other, RowStandardTableau):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"{type(self).__name__}({self.literal()!r}, shape=({self.shape}))"

    def __str__(self):
        return self.literal()

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        s = self.shape.s
        return tuple(
            (a, self.second_col[p]) if p < s else (a,)
            for p, a in enumerate(self.first_col)
        )

    @property
    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def literal(self) -> str:
        return ";".join(",".join(str(x) for x in row) for row in self.rows)

    @cached_property
    def boxes(self) -> tuple[int, ...]:
        """``boxes[k-1]`` is the basis index of the box holding entry ``k``."""
        r = self.shape.r
        out = [0] * self.shape.n
        for p, a in enumerate(self.first_col, start=1):
            out[a - 1] = p
        for p, b in enumerate(self.second_col, start=1):
            out[b - 1] = r + p
        return tuple(out)

    @cached_property
    def contents(self) -> tuple[int, ...]:
        """``contents[x-1]`` is the entry sitting in box ``x``."""
        return self.first_col + self.second_col

    def box_of(self, entry: int) -> int:
        return self.boxes[entry - 1]

    def column_of(self, entry: int) -> int:
        """1 or 2."""
        return 1 if self.box_of(entry) <= self.shape.r else 2

    def right_neighbor(self, entry: int) -> int | None:
        """Entry to the right of a first-column entry, ``None`` if there is none."""
        x = self.box_of(entry)
        r, s = self.shape.r, self.shape.s
        if x > r:
            raise ValueError(f"{entry} is not in the first column")
        return self.second_col[x - 1] if x <= s else None

    def left_neighbor(self, entry: int) -> int:
        x = self.box_of(entry)
        if x <= self.shape.r:
            raise ValueError(f"{entry} is not in the second column")
        return self.first_col[x - self.shape.r - 1]

    @property
    def is_column_increasing(self) -> bool:
        return _increasing(self.first_col) and _increasing(self.second_col)

    def column_content(self) -> tuple[frozenset, frozenset]:
        return frozenset(self.first_col), frozenset(self.second_col)

    def as_standard(self) -> StandardTableau:
        return StandardTableau(self.shape, self.first_col, self.second_col)


class StandardTableau(RowStandardTableau):
    """Row-standard tableau whose columns also increase top to bottom."""

    def _validate(self):
        super()._validate()
        if not _increasing(self.first_col):
            raise ValidityError(f"first column {self.first_col} is not increasing")
        if not _increasing(self.second_col):
            raise ValidityError(f"second column {self.second_col} is not increasing")


def _increasing(seq: Sequence[int]) -> bool:
    return all(x < y for x, y in zip(seq, seq[1:]))


def make_tableau(shape: TwoColumnShape, first_col, second_col) -> RowStandardTableau:
    """Build the most specific tableau type the columns allow."""
    t = RowStandardTableau(shape, first_col, second_col)
    return t.as_standard() if t.is_column_increasing else t


def parse_tableau(shape: TwoColumnShape, rows: str) -> RowStandardTableau:
    """Parse a literal such as ``"1,3;2,5;4;6"`` (rows top to bottom, separated by ``;``)."""
    text = rows.strip()
    if not text:
        if shape.n == 0:
            return make_tableau(shape, (), ())
        raise ParseError("empty tableau literal")
    parsed = []
    for k, chunk in enumerate(text.split(";"), start=1):
        tokens = [tok.strip() for tok in chunk.split(",")]
        try:
            parsed.append([int(tok) for tok in tokens])
        except ValueError:
            raise ParseError(f"row {k} of {rows!r} contains a non-integer token") from None
    lengths = tuple(len(row) for row in parsed)
    if lengths != shape.row_lengths:
        raise ValidityError(f"row lengths {lengths} do not match shape ({shape}) which needs {shape.row_lengths}")
    first = [row[0] for row in parsed]
    second = [row[1] for row in parsed if len(row) == 2]
    return make_tableau(shape, first, second)


def enumerate_row_standard(shape: TwoColumnShape) -> list[RowStandardTableau]:
    """All row-standard tableaux, lexicographic in the row reading word."""
    return [RowStandardTableau(shape, *_split_word(shape, w)) for w in _row_standard_words(shape)]


def _split_word(shape, word):
    first, second, k = [], [], 0
    for length in shape.row_lengths:
        first.append(word[k])
        if length == 2:
            second.append(word[k + 1])
        k += length
    return first, second


def _row_standard_words(shape) -> Iterator[tuple[int, ...]]:
    n = shape.n
    # position k of the word must exceed position k-1 when k is the right box of a row
    right_box = []
    for length in shape.row_lengths:
        right_box.extend([False, True][:length])
    used = [False] * (n + 1)
    word = []

    def rec(k):
        if k == n:
            yield tuple(word)
            return
        lo = word[-1] + 1 if right_box[k] else 1
        for x in range(lo, n + 1):
            if not used[x]:
                used[x] = True
                word.append(x)
                yield from rec(k + 1)
                word.pop()
                used[x] = False

    yield from rec(0)


def enumerate_standard(shape: TwoColumnShape) -> list[StandardTableau]:
    """All standard tableaux, lexicographic in the row reading word."""
    r, s, n = shape.r, shape.s, shape.n
    out = []
    for second in combinations(range(1, n + 1), s):
        # ballot condition: the k-th second-column entry needs k first-column entries below it
        if all(b >= 2 * k for k, b in enumerate(second, start=1)):
            first = tuple(x for x in range(1, n + 1) if x not in second)
            out.append(StandardTableau(shape, first, second))
    out.sort(key=lambda t: t.reading_word)
    return out


def t_bar(shape: TwoColumnShape) -> StandardTableau:
    """Column-filled tableau: ``1..r`` down the first column, ``r+1..n`` down the second."""
    r, n = shape.r, shape.n
    return StandardTableau(shape, range(1, r + 1), range(r + 1, n + 1))


def t_star(t: StandardTableau) -> RowStandardTableau:
    """Renumber the first column of ``t`` so that the flag has an open centralizer orbit.

    The second column is kept. The first row gets ``b_1 - 1``; row ``p <= s``
    gets the largest unused first-column entry below ``b_p``; the remaining
    one-box rows get the unused entries in increasing order.
    """
    if not isinstance(t, StandardTableau):
        t = t.as_standard()
    s = t.shape.s
    b = t.second_col
    pool = set(t.first_col)
    star = []
    for p in range(s):
        if p == 0:
            a = b[0] - 1
            if a not in pool:
                raise InternalError(f"b_1 - 1 = {a} is not a first-column entry of {t}")
        else:
            below = [x for x in pool if x < b[p]]
            if not below:
                raise InternalError(f"no unused first-column entry below {b[p]} in {t}")
            a = max(below)
        pool.remove(a)
        star.append(a)
    star.extend(sorted(pool))
    return RowStandardTableau(t.shape, star, b)


def switch_entries(t: RowStandardTableau, i: int, j: int) -> RowStandardTableau:
    """Exchange entries ``i`` and ``j``; raises ValidityError if rows stop increasing."""
    n = t.shape.n
    if i == j:
        raise ValueError(f"cannot switch an entry with itself ({i})")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"entries ({i},{j}) out of range 1..{n}")

    def swap(x):
        return j if x == i else i if x == j else x

    return make_tableau(t.shape, map(swap, t.first_col), map(swap, t.second_col))


class Probe(NamedTuple):
    """An element of the probe set: T-bar with entries ``i`` and ``j`` switched."""

    tableau: RowStandardTableau
    i: int
    j: int


def x_set(shape: TwoColumnShape) -> list[Probe]:
    """Row-standard single switches of T-bar with ``i <= r`` and ``i < j < i + r``, ordered by ``(i, j)``."""
    base = t_bar(shape)
    r, n = shape.r, shape.n
    return [
        Probe(switch_entries(base, i, j), i, j)
        for i in range(1, r + 1)
        for j in range(i + 1, min(i + r - 1, n) + 1)
    ]


def shape_chain(t: RowStandardTableau) -> tuple[tuple[int, int], ...]:
    """Chain of subdiagrams cut out by entries ``<= i``, as ``(one_box_rows, two_box_rows)`` per ``i``.

    Only meaningful as a diagram chain for standard tableaux.
    """
    second = set(t.second_col)
    out, twos = [(0, 0)], 0
    for i in range(1, t.shape.n + 1):
        twos += i in second
        out.append((i - 2 * twos, twos))
    return tuple(out)
