"""Concrete linear algebra for the objects the combinatorics talks about.

The nilpotent map ``u`` acts on the Jordan basis ``e_1..e_n`` by
``u(e_i) = 0`` for ``i <= r`` and ``u(e_i) = e_{i-r}`` otherwise. A
row-standard tableau gives the coordinate flag whose ``k``-th space is
spanned by the basis vectors of the boxes holding ``1..k``. Everything here
is computed by exact elimination and never consults the window-count
formulas, so it can be used to check them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateSampleError
from .linalg import ExactMatrix, concat_columns, rank, rank_of_vectors, solve_dim
from .tableaux import RowStandardTableau, TwoColumnShape

__all__ = [
    "NilpotentMap",
    "CoordinateFlag",
    "JordanChain",
    "nilpotent_map",
    "flag_of_tableau",
    "rank_quotient",
    "rank_table",
    "jordan_chain",
    "centralizer_dim_oracle",
    "flag_stabilizer_dim_oracle",
    "random_centralizer_element",
    "DEFAULT_RETRIES",
]

DEFAULT_RETRIES = 8
SAMPLE_RANGE = 9


@dataclass(frozen=True)
class NilpotentMap:
    shape: TwoColumnShape
    matrix: ExactMatrix

    @property
    def n(self) -> int:
        return self.shape.n

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        r, n = self.shape.r, self.shape.n
        # u(e_i) = e_{i-r} for i > r: coefficient of e_i moves down r places
        return tuple(v[k + r] if k + r < n else Fraction(0) for k in range(n))


def nilpotent_map(shape: TwoColumnShape) -> NilpotentMap:
    n, r = shape.n, shape.r
    rows = [[0] * n for _ in range(n)]
    for i in range(r + 1, n + 1):
        rows[i - r - 1][i - 1] = 1
    return NilpotentMap(shape, ExactMatrix.from_rows(rows, cols=n))


def _unit(n: int, k: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(x == k)) for x in range(1, n + 1))


@dataclass(frozen=True)
class CoordinateFlag:
    """Complete flag given by an ordered basis; ``V_i`` is spanned by the first ``i`` vectors."""

    shape: TwoColumnShape
    basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = self.shape.n
        if len(self.basis) != n or any(len(v) != n for v in self.basis):
            raise ValueError(f"a flag in dimension {n} needs {n} vectors of length {n}")

    @property
    def n(self) -> int:
        return self.shape.n

    def subspace(self, i: int) -> ExactMatrix:
        """Basis of ``V_i`` as the columns of an ``n x i`` matrix."""
        return ExactMatrix.from_columns(self.basis[:i], rows=self.n)

    def is_complete(self) -> bool:
        return rank(self.subspace(self.n)) == self.n

    def is_u_stable(self, u: NilpotentMap) -> bool:
        for i in range(1, self.n + 1):
            span = self.subspace(i)
            image = ExactMatrix.from_columns([u.apply(self.basis[i - 1])], rows=self.n)
            if rank(concat_columns(span, image)) != i:
                return False
        return True

    def translate(self, g: ExactMatrix) -> CoordinateFlag:
        """The flag ``g . F``."""
        moved = g @ ExactMatrix.from_columns(self.basis, rows=self.n)
        return CoordinateFlag(self.shape, tuple(moved.columns()))


def flag_of_tableau(tp: RowStandardTableau) -> CoordinateFlag:
    n = tp.shape.n
    return CoordinateFlag(tp.shape, tuple(_unit(n, x) for x in tp.boxes))


def rank_quotient(f: CoordinateFlag, u: NilpotentMap, i: int, j: int) -> int:
    """Rank of ``u`` on ``V_j / V_i``, computed as ``dim(V_i + u(V_j)) - i``."""
    n = f.n
    if not 0 <= i < j <= n:
        raise IndexError(f"window ({i},{j}) needs 0 <= i < j <= {n}")
    image = ExactMatrix.from_columns([u.apply(v) for v in f.basis[:j]], rows=n)
    return rank(concat_columns(f.subspace(i), image)) - i


def rank_table(f: CoordinateFlag, u: NilpotentMap) -> dict[tuple[int, int], int]:
    """``rank_quotient`` for every window, sharing the image vectors across windows."""
    n = f.n
    images = [u.apply(v) for v in f.basis]
    return {
        (i, j): rank_of_vectors(f.basis[:i] + tuple(images[:j])) - i
        for i in range(n) for j in range(i + 1, n + 1)
    }


@dataclass(frozen=True)
class JordanChain:
    """Jordan type ``(ones, twos)`` of ``u`` restricted to each ``V_i``, ``i = 0..n``."""

    types: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, (ones, twos) in enumerate(self.types):
            if ones + 2 * twos != i:
                raise ValueError(f"type {ones, twos} at step {i} has the wrong size")
            if i and twos - self.types[i - 1][1] not in (0, 1):
                raise ValueError(f"two-box count jumps at step {i}")


def jordan_chain(f: CoordinateFlag, u: NilpotentMap) -> JordanChain:
    n = f.n
    types = [(0, 0)]
    for i in range(1, n + 1):
        image = ExactMatrix.from_columns([u.apply(v) for v in f.basis[:i]], rows=n)
        twos = rank(image)
        types.append((i - 2 * twos, twos))
    return JordanChain(tuple(types))


def _commutator_equations(u: NilpotentMap) -> list[list[int]]:
    """Rows of the linear map ``X -> Xu - uX`` on ``vec(X)`` (``X[a][b]`` at index ``a*n + b``)."""
    n = u.n
    U = [[int(u.matrix[k, l]) for l in range(n)] for k in range(n)]
    eqs = []
    for k in range(n):
        for l in range(n):
            row = [0] * (n * n)
            for b in range(n):
                if U[b][l]:
                    row[k * n + b] += U[b][l]
            for a in range(n):
                if U[k][a]:
                    row[a * n + l] -= U[k][a]
            eqs.append(row)
    return eqs


def centralizer_dim_oracle(u: NilpotentMap) -> int:
    """Dimension of the algebra of endomorphisms commuting with ``u``."""
    n = u.n
    if n == 0:
        return 0
    return solve_dim(_commutator_equations(u), n * n)


def flag_stabilizer_dim_oracle(u: NilpotentMap, tp: RowStandardTableau) -> int:
    """Dimension of ``{X : Xu = uX, X(V_i) <= V_i for all i}`` for the flag of ``tp``."""
    n = u.n
    if n == 0:
        return 0
    eqs = _commutator_equations(u)
    boxes = tp.boxes
    # stability: X e_{box(k)} has no component along e_{box(l)} for l > k
    for k in range(n):
        for l in range(k + 1, n):
            row = [0] * (n * n)
            row[(boxes[l] - 1) * n + (boxes[k] - 1)] = 1
            eqs.append(row)
    return solve_dim(eqs, n * n)


def random_centralizer_element(u: NilpotentMap, seed: int, retries: int = DEFAULT_RETRIES) -> ExactMatrix:
    """Invertible element of the centralizer of ``u`` with small random integer parameters.

    Free parameters are the images of the one-box-row vectors ``e_{s+1..r}``
    (inside ``ker u``) and of the second-column vectors ``e_{r+1..n}``; the
    image of ``e_q`` for ``q <= s`` is forced to be ``u g e_{r+q}``.
    Deterministic in ``seed``.
    """
    shape = u.shape
    r, s, n = shape.r, shape.s, shape.n
    rng = random.Random(seed)
    for _ in range(retries):
        cols = [None] * n
        for q in range(s + 1, r + 1):
            cols[q - 1] = tuple(Fraction(rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE)) if k < r else Fraction(0) for k in range(n))
        for q in range(r + 1, n + 1):
            cols[q - 1] = tuple(Fraction(rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE)) for _ in range(n))
        for q in range(1, s + 1):
            cols[q - 1] = u.apply(cols[q + r - 1])
        g = ExactMatrix.from_columns(cols, rows=n)
        if rank(g) == n:
            return g
    raise DegenerateSampleError(f"no invertible centralizer element after {retries} draws (seed {seed})")
