import random

import pytest
from hypothesis import strategies as st

from skhkit.braid import BraidWord
from skhkit.laurent import LaurentPolynomial

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def polys(max_terms=5, max_exp=4, variables=("q", "t")):
    exps = st.integers(-max_exp, max_exp)
    key = st.tuples(exps if "q" in variables else st.just(0), exps if "t" in variables else st.just(0))
    return st.dictionaries(key, st.integers(-9, 9), max_size=max_terms).map(LaurentPolynomial)


def braid_words(n, max_length=6):
    if n == 1:
        return st.just(BraidWord(1, ()))
    letter = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_length).map(lambda xs: BraidWord(n, tuple(xs)))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}  {detail}")
