"""Unreduced Burau representation over Z[t, t^-1].

Convention: sigma_i acts by the block ``[[1-t, t], [1, 0]]`` on rows/cols (i, i+1),
and a word maps to the left-to-right product of its letters' matrices.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .braid import BraidWord
from .laurent import ONE, ZERO, LaurentPolynomial, PolyMatrix, matrix_trace, t

BurauMatrix = PolyMatrix

_T_INV = t ** -1


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")


@lru_cache(maxsize=None)
def burau_generator(n: int, i: int, sign: int = 1) -> PolyMatrix:
    _check_index(n, i)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    a, b = i - 1, i
    if sign > 0:
        block = ((1 - t, t), (ONE, ZERO))
    else:
        block = ((ZERO, ONE), (_T_INV, 1 - _T_INV))
    for dr, r in enumerate((a, b)):
        for dc, c in enumerate((a, b)):
            rows[r][c] = block[dr][dc]
    return PolyMatrix(rows)


def _apply_generator(rows: list[list[LaurentPolynomial]], i: int, sign: int) -> None:
    """Right-multiply the row list in place by the generator matrix (touches two columns)."""
    a, b = i - 1, i
    for row in rows:
        x, y = row[a], row[b]
        if sign > 0:
            # [x y] @ [[1-t, t], [1, 0]]
            row[a] = x * (1 - t) + y
            row[b] = x * t
        else:
            # [x y] @ [[0, 1], [t^-1, 1-t^-1]]
            row[a] = y * _T_INV
            row[b] = x + y * (1 - _T_INV)


def burau(w: BraidWord) -> PolyMatrix:
    n = w.strands
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    for x in w.letters:
        _apply_generator(rows, abs(x), 1 if x > 0 else -1)
    return PolyMatrix(rows)


def burau_trace(w: BraidWord) -> LaurentPolynomial:
    return matrix_trace(burau(w))


def _alternating(lo: int, hi: int, sign_of) -> LaurentPolynomial:
    return LaurentPolynomial({(0, m): sign_of(m) for m in range(lo, hi + 1)})


def burau_power_sigma1(n: int, k: int) -> PolyMatrix:
    """Closed form for the Burau matrix of sigma_1^k (k >= 1)."""
    if n < 2:
        raise ValueError("need at least 2 strands")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"closed form needs k >= 1, got {k!r}")
    neg_t = lambda m: (-1) ** m  # coefficient of t^m in (-t)^m
    alt = lambda m: (-1) ** (m + 1)
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    rows[0][0] = _alternating(0, k, neg_t)
    rows[0][1] = _alternating(1, k, alt)
    rows[1][0] = _alternating(0, k - 1, neg_t)
    rows[1][1] = _alternating(1, k - 1, alt)
    return PolyMatrix(rows)


def evaluate_integer(m: PolyMatrix, t_value: int) -> list[list[int]]:
    """Entrywise value at ``t = t_value``; non-integer results raise instead of truncating."""
    if t_value == 0:
        raise ValueError("t = 0 is not allowed (negative exponents)")
    out = []
    for r in range(m.rows):
        row = []
        for c in range(m.cols):
            v: Fraction = m[r, c].evaluate(t=t_value)
            if v.denominator != 1:
                raise ValueError(f"entry ({r + 1},{c + 1}) evaluates to non-integer {v} at t={t_value}")
            row.append(int(v))
        out.append(row)
    return out


def trace_at(w: BraidWord, t_value: int) -> int:
    v = burau_trace(w).evaluate(t=t_value)
    if v.denominator != 1:
        raise ValueError(f"trace evaluates to non-integer {v} at t={t_value}")
    return int(v)
