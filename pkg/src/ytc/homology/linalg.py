"""Exact ranks of sparse boundary matrices.

Rational ranks go through sympy's ``DomainMatrix`` over ``QQ``, which eliminates with
exact rationals. GF(2) ranks use Python integers as bit rows.
"""

from typing import Dict, Iterable, List, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

SparseColumn = Dict[int, int]


def rank_rational(columns: Sequence[SparseColumn], n_rows: int) -> int:
    """Rank over QQ of the matrix whose columns are given as ``{row: entry}`` maps."""
    if not columns or n_rows == 0:
        return 0
    rows: Dict[int, Dict[int, object]] = {}
    for j, column in enumerate(columns):
        for i, value in column.items():
            if value:
                rows.setdefault(i, {})[j] = QQ(value)
    if not rows:
        return 0
    matrix = DomainMatrix(rows, (n_rows, len(columns)), QQ)
    return int(matrix.rank())


def rank_gf2(vectors: Iterable[int]) -> int:
    """Rank over GF(2) of bit vectors, reducing each against pivots keyed by leading bit."""
    pivots: Dict[int, int] = {}
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = v
                break
            v ^= pivot
    return len(pivots)


def gf2_columns(columns: Sequence[SparseColumn]) -> List[int]:
    """Pack sparse integer columns into bit vectors, keeping odd entries."""
    packed = []
    for column in columns:
        bits = 0
        for i, value in column.items():
            if value % 2:
                bits |= 1 << i
        packed.append(bits)
    return packed
