"""Exact Laurent polynomials in the variables q and t, and small dense matrices over them.

Every polynomial is stored as a map from an exponent pair ``(deg_q, deg_t)`` to a
nonzero integer coefficient.  Values are immutable once built.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

VARIABLES = ("q", "t")
_VAR_INDEX = {name: idx for idx, name in enumerate(VARIABLES)}

# Desk-scale words keep exponents tiny; anything past this is a bug upstream.
EXPONENT_LIMIT = 2**31 - 1


class LaurentPolynomial:
    """Integer Laurent polynomial in ``q`` and ``t`` (canonical: no zero coefficients)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != 2:
                    raise ValueError(f"exponent vector must have length 2, got {exps!r}")
                if coeff:
                    _check_exponents(exps)
                    clean[(int(exps[0]), int(exps[1]))] = int(coeff)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> "LaurentPolynomial":
        # terms must already be canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls._raw({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, coeff: int = 1, q: int = 0, t: int = 0) -> "LaurentPolynomial":
        _check_exponents((q, t))
        return cls._raw({(q, t): int(coeff)} if coeff else {})

    @classmethod
    def coerce(cls, value: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPolynomial")

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    @property
    def variables(self) -> tuple[str, ...]:
        used = set()
        for exps in self._terms:
            for idx, e in enumerate(exps):
                if e:
                    used.add(idx)
        return tuple(VARIABLES[i] for i in sorted(used))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0, 0), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        elif not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for exps, c in other._terms.items():
            v = out.get(exps, 0) + c
            if v:
                out[exps] = v
            else:
                del out[exps]
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        elif not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPolynomial._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) > len(a):
            a, b = b, a
        out: dict[tuple[int, int], int] = {}
        for (bq, bt), bc in b.items():
            for (aq, at), ac in a.items():
                key = (aq + bq, at + bt)
                out[key] = out.get(key, 0) + ac * bc
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only exist for monomials")
            ((eq, et), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative powers need a unit coefficient")
            return LaurentPolynomial.monomial(c ** (-k), eq * k, et * k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "LaurentPolynomial":
        """Inverse of a unit monomial (±qᵃtᵇ)."""
        return self ** -1

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Fraction):
            if other.denominator != 1:
                return False
            other = other.numerator
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- structure ----------------------------------------------------------

    def degree(self, var: str) -> int:
        """Largest exponent of ``var``; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        idx = _var_index(var)
        return max(e[idx] for e in self._terms)

    def min_degree(self, var: str) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        idx = _var_index(var)
        return min(e[idx] for e in self._terms)

    def part(self, var: str, exponent: int) -> "LaurentPolynomial":
        """Terms whose ``var`` exponent equals ``exponent`` (the variable is kept)."""
        idx = _var_index(var)
        return LaurentPolynomial._raw({e: c for e, c in self._terms.items() if e[idx] == exponent})

    def coefficient(self, var: str, exponent: int) -> "LaurentPolynomial":
        """Coefficient of ``var**exponent`` as a polynomial in the remaining variable."""
        idx = _var_index(var)
        out = {}
        for e, c in self._terms.items():
            if e[idx] == exponent:
                key = list(e)
                key[idx] = 0
                out[tuple(key)] = c
        return LaurentPolynomial._raw(out)

    def substitute(self, var: str, replacement: "LaurentPolynomial | int") -> "LaurentPolynomial":
        """Replace ``var`` by a monomial; negative exponents stay representable."""
        rep = LaurentPolynomial.coerce(replacement)
        if not rep.is_monomial():
            raise ValueError(f"replacement must be a single nonzero monomial, got {rep}")
        idx = _var_index(var)
        ((rq, rt), rc), = rep._terms.items()
        out: dict[tuple[int, int], int] = {}
        for e, c in self._terms.items():
            p = e[idx]
            rest = list(e)
            rest[idx] = 0
            key = (rest[0] + rq * p, rest[1] + rt * p)
            _check_exponents(key)
            if p >= 0:
                coeff = c * rc**p
            else:
                if rc not in (1, -1):
                    raise ValueError("negative exponent needs a unit coefficient in the replacement")
                coeff = c * rc ** (-p)
            out[key] = out.get(key, 0) + coeff
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c})

    def evaluate(self, **values) -> Fraction:
        """Exact numeric value; every variable that appears must be given."""
        total = Fraction(0)
        for (eq, et), c in self._terms.items():
            term = Fraction(c)
            for name, e in (("q", eq), ("t", et)):
                if e:
                    if name not in values:
                        raise ValueError(f"no value given for {name}")
                    v = Fraction(values[name])
                    if v == 0 and e < 0:
                        raise ZeroDivisionError(f"{name}=0 with negative exponent")
                    term *= v**e
            total += term
        return total

    # -- text ---------------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentPolynomial({render(self)!r})"


def _check_exponents(exps) -> None:
    for e in exps:
        if not -EXPONENT_LIMIT <= e <= EXPONENT_LIMIT:
            raise OverflowError(f"exponent {e} out of range")


def _var_index(var: str) -> int:
    try:
        return _VAR_INDEX[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}; expected one of {VARIABLES}") from None


ZERO = LaurentPolynomial._raw({})
ONE = LaurentPolynomial._raw({(0, 0): 1})
q = LaurentPolynomial._raw({(1, 0): 1})
t = LaurentPolynomial._raw({(0, 1): 1})


def _render_monomial(exps: tuple[int, int]) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(p: LaurentPolynomial) -> str:
    """Canonical text: terms in ascending lexicographic exponent order, e.g. ``-t^-1 + 2 - q*t``."""
    items = sorted(p._terms.items())
    if not items:
        return "0"
    out = []
    for n, (exps, c) in enumerate(items):
        mono = _render_monomial(exps)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if n == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<body>
            (?P<coeff>\d+)(?:\s*\*\s*(?P<mono1>[qt](?:\^-?\d+)?(?:\s*\*\s*[qt](?:\^-?\d+)?)*))?
          | (?P<mono2>[qt](?:\^-?\d+)?(?:\s*\*\s*[qt](?:\^-?\d+)?)*)
        )\s*""",
    re.VERBOSE,
)
_FACTOR_RE = re.compile(r"([qt])(?:\^(-?\d+))?")


def parse(text: str) -> LaurentPolynomial:
    """Inverse of :func:`render`; also tolerates arbitrary term order and spacing."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ZERO
    terms: dict[tuple[int, int], int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator before {s[pos:]!r}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        mono = m.group("mono1") or m.group("mono2") or ""
        exps = [0, 0]
        for name, e in _FACTOR_RE.findall(mono):
            exps[_VAR_INDEX[name]] += int(e) if e else 1
        key = (exps[0], exps[1])
        terms[key] = terms.get(key, 0) + sign * coeff
        pos = m.end()
    return LaurentPolynomial(terms)


def poly_add(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a + b


def poly_mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a * b


def substitute(p: LaurentPolynomial, var: str, replacement) -> LaurentPolynomial:
    return p.substitute(var, replacement)


class PolyMatrix:
    """Dense ``rows x cols`` grid of :class:`LaurentPolynomial`."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Sequence[Sequence["LaurentPolynomial | int"]]):
        grid = [tuple(LaurentPolynomial.coerce(x) for x in row) for row in entries]
        if not grid or not grid[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged matrix rows")
        self.rows = len(grid)
        self.cols = width
        self._entries = tuple(grid)

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[ONE if r == c else ZERO for c in range(n)] for r in range(n)])

    @classmethod
    def diagonal(cls, diag: Iterable["LaurentPolynomial | int"]) -> "PolyMatrix":
        d = [LaurentPolynomial.coerce(x) for x in diag]
        n = len(d)
        return cls([[d[r] if r == c else ZERO for c in range(n)] for r in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, rc: tuple[int, int]) -> LaurentPolynomial:
        r, c = rc
        return self._entries[r][c]

    def row(self, r: int) -> tuple[LaurentPolynomial, ...]:
        return self._entries[r]

    def tolist(self) -> list[list[LaurentPolynomial]]:
        return [list(row) for row in self._entries]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return matrix_mul(self, other)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return PolyMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._entries, other._entries)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + other.scale(-1)

    def scale(self, s: "LaurentPolynomial | int") -> "PolyMatrix":
        s = LaurentPolynomial.coerce(s)
        return PolyMatrix([[s * x for x in row] for row in self._entries])

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(x) for x in row] for row in self._entries])

    def substitute(self, var: str, replacement) -> "PolyMatrix":
        return self.map(lambda x: x.substitute(var, replacement))

    def trace(self) -> LaurentPolynomial:
        return matrix_trace(self)

    def __str__(self):
        return render_matrix(self)

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"


def matrix_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = list(zip(*b._entries))
    out = []
    for row in a._entries:
        nz = [(k, x) for k, x in enumerate(row) if x._terms]
        out_row = []
        for col in bt:
            acc = ZERO
            for k, x in nz:
                y = col[k]
                if y._terms:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return PolyMatrix(out)


def matrix_trace(a: PolyMatrix) -> LaurentPolynomial:
    if not a.is_square():
        raise ValueError(f"trace of non-square {a.rows}x{a.cols} matrix")
    acc = ZERO
    for i in range(a.rows):
        acc = acc + a[i, i]
    return acc


def conjugate(m: PolyMatrix, d: PolyMatrix) -> PolyMatrix:
    """Return ``d @ m @ d^-1`` for a diagonal ``d`` of unit monomials."""
    if not d.is_square():
        raise ValueError("conjugating matrix must be square")
    if d.rows != m.rows or not m.is_square():
        raise ValueError(f"cannot conjugate {m.rows}x{m.cols} by {d.rows}x{d.cols}")
    n = d.rows
    diag = []
    for r in range(n):
        for c in range(n):
            if r != c and d[r, c]:
                raise ValueError("conjugating matrix must be diagonal")
        x = d[r, r]
        if not x.is_monomial() or abs(next(iter(x._terms.values()))) != 1:
            raise ValueError(f"diagonal entry {x} is not a unit monomial")
        diag.append(x)
    inv = [x.inverse() for x in diag]
    return PolyMatrix([[diag[r] * m[r, c] * inv[c] for c in range(n)] for r in range(n)])


def evaluate_matrix(m: PolyMatrix, **values) -> list[list[Fraction]]:
    return [[x.evaluate(**values) for x in row] for row in m._entries]


def render_matrix(m: PolyMatrix) -> str:
    cells = [[render(x) for x in row] for row in m._entries]
    widths = [max(len(cells[r][c]) for r in range(m.rows)) for c in range(m.cols)]
    return "\n".join(
        "[ " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + " ]" for row in cells
    )
