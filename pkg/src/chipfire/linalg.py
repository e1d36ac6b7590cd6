"""Exact rational linear algebra for the per-period balance system.

If a game returns to the same configuration after one period, every vertex
sent out as many chips as it received.  With ``f_v`` the number of times
``v`` fired during the period this reads ``deg+(v) f_v = sum_{u->v} f_u``,
a homogeneous system whose matrix is the (transposed) digraph Laplacian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContractError, DomainError, NoPositiveSolution, StructuralError
from .graph import DirectedMultigraph


class ExactMatrix:
    """Dense row-major matrix of :class:`fractions.Fraction` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(x) for x in entries)
        if rows <= 0 or cols <= 0:
            raise ContractError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ContractError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> ExactMatrix:
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ContractError("ragged rows")
        return cls(len(rows), width, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def matvec(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.cols:
            raise ContractError("dimension mismatch")
        return [sum((a * b for a, b in zip(self.row(i), x)), Fraction(0))
                for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"


@dataclass(frozen=True)
class RrefResult:
    rref: ExactMatrix
    rank: int
    pivot_columns: tuple[int, ...]


@dataclass(frozen=True)
class FiringVector:
    """Smallest positive integer solution of a balance system."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if any(x < 1 for x in self.counts):
            raise ContractError("firing vector entries must be positive")
        if math.gcd(*self.counts) != 1:
            raise ContractError("firing vector must be primitive (gcd 1)")

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    @property
    def maximum(self) -> int:
        return max(self.counts)


def balance_laplacian(g: DirectedMultigraph) -> ExactMatrix:
    """Matrix ``L`` with ``L f = 0`` iff ``f`` keeps every pile unchanged.

    ``L[v][v] = deg+(v)`` and ``L[v][u] = -(number of edges u->v)``.
    """
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    for v, d in enumerate(g.out_degree):
        rows[v][v] = d
    for (u, v), k in g.multiplicity.items():
        rows[v][u] -= k
    return ExactMatrix.from_rows(rows)


def reduced_row_echelon(m: ExactMatrix) -> RrefResult:
    """Gauss-Jordan elimination over the rationals.

    The pivot in each column is the first row (from the current pivot row
    down) with a nonzero entry, so results are reproducible.
    """
    a = m.to_rows()
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        pivot_row = a[r]
        for i in range(rows):
            if i != r:
                factor = a[i][c]
                if factor:
                    a[i] = [x - factor * y for x, y in zip(a[i], pivot_row)]
        pivots.append(c)
        r += 1
    return RrefResult(ExactMatrix.from_rows(a), len(pivots), tuple(pivots))


def kernel_basis(m: ExactMatrix) -> list[list[Fraction]]:
    """Rational basis of the right null space, one vector per free column."""
    res = reduced_row_echelon(m)
    pivot_set = set(res.pivot_columns)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        x = [Fraction(0)] * m.cols
        x[free] = Fraction(1)
        for i, pc in enumerate(res.pivot_columns):
            x[pc] = -res.rref[i, free]
        basis.append(x)
    return basis


def primitive_integer_vector(x: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers, keeping its direction."""
    lcm = 1
    for q in x:
        lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
    ints = [int(q * lcm) for q in x]
    g = math.gcd(*ints)
    return [v // g for v in ints] if g else ints


def minimal_positive_kernel_vector(g: DirectedMultigraph) -> FiringVector:
    """Smallest positive integer firing vector balancing every vertex.

    Raises StructuralError if the balance system's kernel is not
    one-dimensional and NoPositiveSolution if its generator has entries of
    both signs or a zero entry.
    """
    m = balance_laplacian(g)
    basis = kernel_basis(m)
    if len(basis) != 1:
        rank = m.cols - len(basis)
        raise StructuralError(
            f"balance system has rank {rank} on {m.cols} vertices; "
            f"kernel dimension is {len(basis)}, expected 1", rank=rank)
    f = primitive_integer_vector(basis[0])
    if all(x <= 0 for x in f):
        f = [-x for x in f]
    if any(x <= 0 for x in f):
        raise NoPositiveSolution(f"kernel generator {f} is not strictly positive")
    return FiringVector(tuple(f))


def complete_graph_recurrence(n: int) -> int:
    """``T_1 = T_2 = T_3 = 1`` and ``T_n = T_{n-2} + (n-1) T_{n-1}``."""
    if n < 1:
        raise DomainError("recurrence index must be at least 1")
    prev, cur = 1, 1  # T_{k-1}, T_k at k = 3
    for k in range(4, n + 1):
        prev, cur = cur, prev + (k - 1) * cur
    return cur


def bipartite_lower_bound(a: int) -> int:
    """``f_4`` of the minimal firing vector of the useful orientation of K_{a,a}.

    For ``a = 2`` the orientation is a directed 4-cycle and the value is 1.
    """
    from .constructions import useful_bipartite

    if a < 2:
        raise DomainError("bipartite bound needs a >= 2")
    return minimal_positive_kernel_vector(useful_bipartite(a))[3]
