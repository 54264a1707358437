"""Braid words on n strands, the text format ``"n: w1 w2 ..."``, and the braid families we study."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators; letter ``+i`` is sigma_i, ``-i`` its inverse."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise ValueError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator index {x} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def n_plus(self) -> int:
        return sum(1 for x in self.letters if x > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for x in self.letters if x < 0)

    @property
    def exponent_sum(self) -> int:
        return self.n_plus - self.n_minus

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def rotate(self, offset: int) -> "BraidWord":
        if not self.letters:
            return self
        k = offset % len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def __str__(self):
        return render_braid(self)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def word(n: int, letters: Iterable[int]) -> BraidWord:
    return BraidWord(n, tuple(letters))


_BRAID_RE = re.compile(r"^\s*(\d+)\s*:\s*((?:[+-]?\d+\s*)*)$")


def parse_braid(text: str) -> BraidWord:
    m = _BRAID_RE.match(text)
    if not m:
        raise BraidParseError(f"malformed braid text {text!r}; expected 'n: w1 w2 ...'")
    n = int(m.group(1))
    letters = tuple(int(tok) for tok in m.group(2).split())
    try:
        return BraidWord(n, letters)
    except ValueError as exc:
        raise BraidParseError(str(exc)) from None


def render_braid(w: BraidWord) -> str:
    if not w.letters:
        return f"{w.strands}:"
    return f"{w.strands}: " + " ".join(str(x) for x in w.letters)


def exponent_sum(w: BraidWord) -> int:
    return w.exponent_sum


def n_plus(w: BraidWord) -> int:
    return w.n_plus


def n_minus(w: BraidWord) -> int:
    return w.n_minus


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")
    return BraidWord(a.strands, a.letters + b.letters)


def conjugate_by_generator(w: BraidWord, i: int) -> BraidWord:
    """sigma_i^{+-1} . w . sigma_i^{-+1} for the signed index ``i``."""
    if i == 0 or abs(i) >= w.strands:
        raise ValueError(f"generator index {i} out of range for {w.strands} strands")
    return BraidWord(w.strands, (i,) + w.letters + (-i,))


def exchange_move(w: BraidWord, offset: int = 0) -> BraidWord:
    """Swap the signs of the two sigma_{n-1} letters in P s^e Q s^-e.

    The word is first rotated left by ``offset``; the rotated word must have the
    form ``P . s^e . Q . s^-e`` with s = sigma_{n-1} and P, Q free of s.  The
    result is rotated back, so cyclic position is preserved.
    """
    n = w.strands
    if n < 2:
        raise ValueError("exchange move needs at least 2 strands")
    m = len(w.letters)
    if m == 0:
        raise ValueError("exchange move needs a nonempty word")
    k = offset % m
    rotated = list(w.letters[k:] + w.letters[:k])
    top = [pos for pos, x in enumerate(rotated) if abs(x) == n - 1]
    if len(top) != 2:
        raise ValueError(
            f"word must contain sigma_{n - 1} exactly twice, found {len(top)} occurrences"
        )
    first, last = top
    if last != m - 1:
        raise ValueError(f"rotated word (offset {offset}) does not end in a sigma_{n - 1} letter")
    if rotated[first] != -rotated[last]:
        raise ValueError("the two sigma_{n-1} letters must have opposite signs")
    rotated[first], rotated[last] = -rotated[first], -rotated[last]
    back = (m - k) % m
    out = rotated[back:] + rotated[:back]
    return BraidWord(n, tuple(out))


# -- explicit families --------------------------------------------------------

MORTON_A = (-2, -2, 3, -2, -1, 2, 2, 2, -3, 2, 1)
MORTON_B = (-2, -2, -3, -2, -1, 2, 2, 2, 3, 2, 1)

MENASCO_X = (-2, 3, 2, -3, 2)
MENASCO_Y = (-4, -2, 3, -2, -3, 2, 4)
MENASCO_Z = (4, -2, 3, -2, -3, 2, -4)

FLYPE_PAIRS = (
    ((3, 3, 2, 2, -3, 1, 1, 2, -1), (3, 3, 2, 2, -3, -1, 2, 1, 1)),
    ((3, -2, -2, 3, 3, 2, -3, -1, 2, 1, 1), (3, -2, -2, 3, 3, 2, -3, 1, 1, 2, -1)),
)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")


def family_morton(k: int) -> tuple[BraidWord, BraidWord]:
    """(sigma_1^k A, sigma_1^k B) on 4 strands."""
    _check_k(k)
    head = (1,) * k
    return BraidWord(4, head + MORTON_A), BraidWord(4, head + MORTON_B)


def family_menasco(k: int) -> tuple[BraidWord, BraidWord]:
    """(sigma_1^k X sigma_1^-k Y, sigma_1^k X sigma_1^-k Z) on 5 strands."""
    _check_k(k)
    mid = (1,) * k + MENASCO_X + (-1,) * k
    return BraidWord(5, mid + MENASCO_Y), BraidWord(5, mid + MENASCO_Z)


def flype_pairs() -> list[tuple[BraidWord, BraidWord]]:
    return [(BraidWord(4, a), BraidWord(4, b)) for a, b in FLYPE_PAIRS]


def all_words(n: int, length: int) -> Iterable[BraidWord]:
    """Every word of exactly ``length`` letters on ``n`` strands."""
    from itertools import product

    alphabet: Sequence[int] = [s * i for i in range(1, n) for s in (1, -1)]
    if length == 0:
        yield BraidWord(n, ())
        return
    if not alphabet:
        return
    for letters in product(alphabet, repeat=length):
        yield BraidWord(n, letters)


def random_word(rng, n: int, max_length: int, min_length: int = 0) -> BraidWord:
    length = rng.randint(min_length, max_length)
    letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)] if n > 1 else []
    return BraidWord(n, tuple(letters))
