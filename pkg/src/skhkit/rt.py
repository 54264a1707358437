"""Diagrammatic Reshetikhin-Turaev matrices of braids, split into blocks by annular grading.

An orientation state of n strands is an int whose bit ``n-1-p`` is 1 when the
arrow at position p (0-based, left to right) points up.  With position 0 as the
most significant bit, numeric order is lexicographic order with down < up.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping

from .braid import BraidWord
from .burau import burau_trace
from .laurent import ONE, ZERO, LaurentPolynomial, PolyMatrix, q, render, render_matrix

_Q_INV = q ** -1


def state_k(state: int, n: int) -> int:
    up = bin(state).count("1")
    return up - (n - up)


def state_label(state: int, n: int) -> str:
    return "".join("u" if (state >> (n - 1 - p)) & 1 else "d" for p in range(n))


def parse_state(label: str) -> int:
    s = 0
    for ch in label:
        if ch not in "ud":
            raise ValueError(f"bad state label {label!r}")
        s = (s << 1) | (ch == "u")
    return s


@lru_cache(maxsize=None)
def block_states(n: int, k: int) -> tuple[int, ...]:
    """States of grading k in canonical (lexicographic, down first) order."""
    _check_k(n, k)
    return tuple(s for s in range(1 << n) if state_k(s, n) == k)


def _check_k(n: int, k: int) -> None:
    if abs(k) > n or (k + n) % 2:
        raise ValueError(f"invalid grading k={k} for {n} strands")


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")


class RTMatrix:
    """Sparse matrix over Z[q, q^-1] indexed by orientation states of n strands."""

    __slots__ = ("strands", "_rows")

    def __init__(self, strands: int, entries: Mapping[tuple[int, int], LaurentPolynomial] | None = None):
        self.strands = strands
        rows: dict[int, dict[int, LaurentPolynomial]] = {}
        for (r, c), v in (entries or {}).items():
            v = LaurentPolynomial.coerce(v)
            if v:
                rows.setdefault(r, {})[c] = v
        self._rows = rows

    @classmethod
    def _from_rows(cls, strands: int, rows: dict[int, dict[int, LaurentPolynomial]]) -> "RTMatrix":
        obj = cls.__new__(cls)
        obj.strands = strands
        obj._rows = rows
        return obj

    @classmethod
    def identity(cls, n: int) -> "RTMatrix":
        return cls._from_rows(n, {s: {s: ONE} for s in range(1 << n)})

    def entries(self) -> Iterator[tuple[tuple[int, int], LaurentPolynomial]]:
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield (r, c), row[c]

    def __getitem__(self, rc: tuple[int, int]) -> LaurentPolynomial:
        r, c = rc
        return self._rows.get(r, {}).get(c, ZERO)

    def __eq__(self, other):
        if not isinstance(other, RTMatrix):
            return NotImplemented
        return self.strands == other.strands and self._rows == other._rows

    def __matmul__(self, other: "RTMatrix") -> "RTMatrix":
        if self.strands != other.strands:
            raise ValueError("strand mismatch")
        out: dict[int, dict[int, LaurentPolynomial]] = {}
        orows = other._rows
        for r, row in self._rows.items():
            acc: dict[int, LaurentPolynomial] = {}
            for mid, x in row.items():
                orow = orows.get(mid)
                if not orow:
                    continue
                for c, y in orow.items():
                    prev = acc.get(c)
                    acc[c] = x * y if prev is None else prev + x * y
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out[r] = acc
        return RTMatrix._from_rows(self.strands, out)

    def __add__(self, other: "RTMatrix") -> "RTMatrix":
        if self.strands != other.strands:
            raise ValueError("strand mismatch")
        out = {r: dict(row) for r, row in self._rows.items()}
        for r, row in other._rows.items():
            dest = out.setdefault(r, {})
            for c, v in row.items():
                s = dest.get(c, ZERO) + v
                if s:
                    dest[c] = s
                else:
                    dest.pop(c, None)
        return RTMatrix._from_rows(self.strands, {r: row for r, row in out.items() if row})

    def scale(self, s: "LaurentPolynomial | int") -> "RTMatrix":
        s = LaurentPolynomial.coerce(s)
        if not s:
            return RTMatrix(self.strands)
        return RTMatrix._from_rows(
            self.strands, {r: {c: s * v for c, v in row.items()} for r, row in self._rows.items()}
        )

    def __sub__(self, other: "RTMatrix") -> "RTMatrix":
        return self + other.scale(-1)

    def is_block_diagonal(self) -> bool:
        n = self.strands
        return all(state_k(r, n) == state_k(c, n) for (r, c), _ in self.entries())

    def block(self, k: int) -> PolyMatrix:
        return rt_block(self, k)

    def trace_block(self, k: int) -> LaurentPolynomial:
        acc = ZERO
        for s in block_states(self.strands, k):
            acc = acc + self[s, s]
        return acc

    def dump(self) -> str:
        return dump_blocks(self)


@lru_cache(maxsize=None)
def tl_capcup(n: int, i: int) -> RTMatrix:
    """Matrix of the cap-cup smoothing on strands (i, i+1)."""
    _check_index(n, i)
    a = n - i  # bit of position i-1
    b = n - 1 - i  # bit of position i
    down_up = 1 << b
    up_down = 1 << a
    mask = down_up | up_down
    weights = {
        (down_up, down_up): q,
        (down_up, up_down): ONE,
        (up_down, down_up): ONE,
        (up_down, up_down): _Q_INV,
    }
    entries = {}
    for s in range(1 << n):
        pair = s & mask
        if pair not in (down_up, up_down):
            continue
        rest = s & ~mask
        for other in (down_up, up_down):
            entries[(s, rest | other)] = weights[(pair, other)]
    return RTMatrix(n, entries)


@lru_cache(maxsize=None)
def rt_generator(n: int, i: int, sign: int = 1) -> RTMatrix:
    """sigma_i -> I - q U, sigma_i^-1 -> U - q I (the two smoothings swap roles)."""
    _check_index(n, i)
    u = tl_capcup(n, i)
    ident = RTMatrix.identity(n)
    if sign > 0:
        return ident - u.scale(q)
    if sign < 0:
        return u - ident.scale(q)
    raise ValueError("sign must be +1 or -1")


def rt_resolution(n: int, i: int, smoothing: int, sign: int = 1) -> RTMatrix:
    """Matrix of one smoothing of a crossing: 0 is identity-like for a positive crossing."""
    capcup = (smoothing == 1) if sign > 0 else (smoothing == 0)
    return tl_capcup(n, i) if capcup else RTMatrix.identity(n)


def rt_matrix(w: BraidWord) -> RTMatrix:
    n = w.strands
    m = RTMatrix.identity(n)
    for x in w.letters:
        m = m @ rt_generator(n, abs(x), 1 if x > 0 else -1)
    return m


def rt_block(m: RTMatrix, k: int) -> PolyMatrix:
    states = block_states(m.strands, k)
    return PolyMatrix([[m[r, c] for c in states] for r in states])


def dump_blocks(m: RTMatrix) -> str:
    n = m.strands
    chunks = []
    for k in range(n, -n - 1, -2):
        states = block_states(n, k)
        head = f"k={k} basis: " + " ".join(state_label(s, n) for s in states)
        chunks.append(head + "\n" + render_matrix(rt_block(m, k)))
    return "\n".join(chunks)


def chi_skh_from_rt(w: BraidWord) -> LaurentPolynomial:
    """Graded Euler characteristic from block traces of the RT matrix."""
    n = w.strands
    m = rt_matrix(w)
    total = ZERO
    for k in range(-n, n + 1, 2):
        tr = m.trace_block(k)
        if tr:
            total = total + tr * LaurentPolynomial.monomial(1, k, k)
    prefactor = LaurentPolynomial.monomial((-1) ** w.n_minus, w.n_plus - 2 * w.n_minus, 0)
    return prefactor * total


def k_part(chi: LaurentPolynomial, k: int) -> LaurentPolynomial:
    """Terms of a (q, t) polynomial whose t-exponent is k."""
    return chi.part("t", k)


def lemma_generator_form(n: int, i: int, sign: int = 1) -> PolyMatrix:
    """The k = n-2 block of a generator, written down directly.

    Positive: 1 on the diagonal except the block ``[[1-q^2, -q], [-q, 0]]`` at (i, i+1).
    Negative: -q on the diagonal except the block ``[[0, 1], [1, q^-1 - q]]``.
    """
    _check_index(n, i)
    if sign > 0:
        scalar = ONE
        block = ((1 - q * q, -q), (-q, ZERO))
    elif sign < 0:
        scalar = -q
        block = ((ZERO, ONE), (ONE, _Q_INV - q))
    else:
        raise ValueError("sign must be +1 or -1")
    rows = [[scalar if r == c else ZERO for c in range(n)] for r in range(n)]
    for dr, r in enumerate((i - 1, i)):
        for dc, c in enumerate((i - 1, i)):
            rows[r][c] = block[dr][dc]
    return PolyMatrix(rows)


def lemma_prefactor(sign: int) -> LaurentPolynomial:
    """Scalar s with J(generator)|[n-2] = s * L(generator): q^-1 for positive, -q^2 for negative."""
    return _Q_INV if sign > 0 else LaurentPolynomial.monomial(-1, 2, 0)


def lemma_factored_form(n: int, i: int, sign: int = 1) -> PolyMatrix:
    """The factored matrix L with J(generator)|[n-2] = lemma_prefactor(sign) * L."""
    return lemma_generator_form(n, i, sign).scale(lemma_prefactor(sign).inverse())


def conjugator_A(n: int) -> PolyMatrix:
    """diag(q^-1, -q^-2, q^-3, ...): conjugates the factored forms into Burau at t = q^2."""
    if n < 1:
        raise ValueError("need at least one strand")
    return PolyMatrix.diagonal(LaurentPolynomial.monomial((-1) ** (m + 1), -m, 0) for m in range(1, n + 1))


def theorem_trace_rhs(w: BraidWord) -> LaurentPolynomial:
    """(qt)^(n-2) q^(n+ - n-) tr(Burau(w)) evaluated at t = q^2."""
    n = w.strands
    tr = burau_trace(w).substitute("t", q * q)
    return LaurentPolynomial.monomial(1, n - 2 + w.n_plus - w.n_minus, n - 2) * tr


def describe_chi(w: BraidWord, k: int | None = None) -> str:
    chi = chi_skh_from_rt(w)
    if k is None:
        return render(chi)
    return render(k_part(chi, k))
