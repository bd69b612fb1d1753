"""
Exact linear algebra over Q and Z_(p) backed by sympy.

Matrices travel through the package as lists of rows of ``Fraction``; this
module converts at the boundary.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, Rational
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_decomp

logger = logging.getLogger(__name__)

Rows = Sequence[Sequence]


def _to_sympy(rows: Rows, ncols: Optional[int] = None) -> Matrix:
    rows = [list(r) for r in rows]
    if not rows:
        return Matrix.zeros(0, ncols or 0)
    return Matrix([[Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows])


def _to_fraction(x) -> Fraction:
    x = Rational(x)
    return Fraction(int(x.p), int(x.q))


def rank(rows: Rows) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return _to_sympy(rows).rank()


def nullspace(rows: Rows, ncols: int) -> List[Tuple[Fraction, ...]]:
    """Basis of {x : rows . x = 0} in Q^ncols."""
    rows = [list(r) for r in rows if any(r)]
    if ncols == 0:
        return []
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    return [tuple(_to_fraction(x) for x in v) for v in _to_sympy(rows).nullspace()]


def inverse(rows: Rows) -> List[List[Fraction]]:
    m = _to_sympy(rows).inv()
    return [[_to_fraction(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def solve(rows: Rows, rhs: Sequence, ncols: int) -> Optional[List[Fraction]]:
    """One rational solution of rows . x = rhs, or None."""
    if ncols == 0:
        return [] if all(Fraction(b) == 0 for b in rhs) else None
    a = _to_sympy(rows, ncols)
    b = _to_sympy([[x] for x in rhs], 1)
    try:
        sol, params = a.gauss_jordan_solve(b)
    except ValueError:
        return None
    sol = sol.subs({t: 0 for t in params})
    return [_to_fraction(sol[i, 0]) for i in range(ncols)]


def matmul(a: Rows, b: Rows) -> List[List[Fraction]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((Fraction(r[k]) * Fraction(b[k][j]) for k in range(inner)), Fraction(0)) for j in range(cols)] for r in a]


def integer_column_basis(vectors: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """
    Integer basis of the Q-span of vectors, as columns of a full-column-rank matrix.

    Returns:
        list of rows (len(vectors[0]) rows, one column per basis vector)
    """
    if not vectors:
        return []
    m = _to_sympy([list(v) for v in vectors]).T
    cols = m.columnspace()
    scaled = []
    for col in cols:
        values = [_to_fraction(x) for x in col]
        denominator = lcm(*[v.denominator for v in values]) if values else 1
        scaled.append([int(v * denominator) for v in values])
    return [list(row) for row in zip(*scaled)]


def valuation(x: Fraction, p: int) -> Optional[int]:
    """p-adic valuation; None stands for +infinity (x = 0)."""
    x = Fraction(x)
    if x == 0:
        return None
    v, num, den = 0, x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def p_local_coset_hits_zero(basis: List[List[int]], target: Sequence[int], p: int) -> Tuple[bool, Optional[List[Fraction]]]:
    """
    Decide whether target + L meets p.Z_(p)^k, with L the saturation in Z_(p)^k
    of the column span of ``basis`` (k rows, full column rank).

    Returns:
        (hit, x) where x in L satisfies target + x in p.Z_(p)^k when hit is True
    """
    k = len(target)
    if not basis or not basis[0]:
        hit = all(int(t) % p == 0 for t in target)
        return hit, ([Fraction(0)] * k if hit else None)
    m = len(basis[0])
    _, s, _ = smith_normal_decomp(DM(basis, ZZ))
    s_rows = [[int(x) for x in row] for row in s.to_list()]
    image = [-sum(s_rows[i][j] * int(target[j]) for j in range(k)) for i in range(k)]
    if any(value % p for value in image[m:]):
        return False, None
    head = [Fraction(v) for v in image[:m]] + [Fraction(0)] * (k - m)
    s_inverse = inverse(s_rows)
    x = [sum((s_inverse[i][j] * head[j] for j in range(k)), Fraction(0)) for i in range(k)]
    logger.debug(f"p-local coset meets p-multiples (p={p}, rank {m} of {k})")
    return True, x
