from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import braid_words
from skhkit.braid import BraidWord, all_words, concat, conjugate_by_generator, family_menasco, family_morton, flype_pairs
from skhkit.burau import burau_generator
from skhkit.laurent import ONE, ZERO, LaurentPolynomial, PolyMatrix, conjugate, q, t
from skhkit.rt import (
    RTMatrix,
    block_states,
    chi_skh_from_rt,
    conjugator_A,
    dump_blocks,
    k_part,
    lemma_factored_form,
    lemma_generator_form,
    lemma_prefactor,
    parse_state,
    rt_block,
    rt_generator,
    rt_matrix,
    rt_resolution,
    state_label,
    theorem_trace_rhs,
    tl_capcup,
)

qi = q**-1


def test_basis_order():
    assert [state_label(s, 3) for s in block_states(3, 1)] == ["duu", "udu", "uud"]
    assert parse_state("udu") == 0b101
    assert len(block_states(4, 2)) == 4 and len(block_states(4, 4)) == 1 and len(block_states(4, -4)) == 1
    with pytest.raises(ValueError):
        block_states(3, 2)


def test_capcup_blocks():
    assert rt_block(tl_capcup(3, 1), 1) == PolyMatrix([[q, 1, 0], [1, qi, 0], [0, 0, 0]])
    assert rt_block(tl_capcup(2, 1), 0) == PolyMatrix([[q, 1], [1, qi]])
    u = tl_capcup(3, 2)
    for s in range(8):
        if (s & 0b011) == 0b011:
            assert all(u[s, c] == 0 for c in range(8)) and all(u[r, s] == 0 for r in range(8))
    with pytest.raises(ValueError):
        tl_capcup(3, 3)


def test_generator_blocks():
    want = PolyMatrix([[q - q**3, -(q**2), 0], [-(q**2), 0, 0], [0, 0, q]]).scale(qi)
    assert rt_block(rt_generator(3, 1, 1), 1) == want
    want4 = PolyMatrix([[q, 0, 0, 0], [0, q - q**3, -(q**2), 0], [0, -(q**2), 0, 0], [0, 0, 0, q]]).scale(qi)
    assert rt_block(rt_generator(4, 2, 1), 2) == want4
    for n in range(2, 6):
        for i in range(1, n):
            assert rt_block(rt_generator(n, i, 1), n) == PolyMatrix([[1]])


def test_identity_and_inverse_shift():
    ident = RTMatrix.identity(3)
    assert rt_matrix(BraidWord(3, ())) == ident
    for n in range(2, 5):
        for i in range(1, n):
            prod = rt_generator(n, i, 1) @ rt_generator(n, i, -1)
            assert prod.scale(-qi) == RTMatrix.identity(n)
            assert lemma_factored_form(n, i, 1) @ lemma_factored_form(n, i, -1) == PolyMatrix.identity(n)


def _state_sum(w: BraidWord) -> RTMatrix:
    """Sum over all vertices I of (-q)^|I| times the product of smoothing matrices."""
    n = w.strands
    total = RTMatrix(n)
    for bits in product((0, 1), repeat=len(w.letters)):
        m = RTMatrix.identity(n)
        for x, b in zip(w.letters, bits):
            m = m @ rt_resolution(n, abs(x), b, 1 if x > 0 else -1)
        total = total + m.scale((-q) ** sum(bits))
    return total


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: braid_words(n, 5)))
def test_matches_state_sum(w):
    assert rt_matrix(w) == _state_sum(w)


def test_resolution_swap_for_negative_crossings():
    for n in range(2, 5):
        for i in range(1, n):
            for s in (0, 1):
                assert rt_resolution(n, i, s, -1) == rt_resolution(n, i, 1 - s, 1)
            neg = rt_resolution(n, i, 0, -1) - rt_resolution(n, i, 1, -1).scale(q)
            assert neg == rt_generator(n, i, -1)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(braid_words(n, 4), braid_words(n, 4))))
def test_composition_and_block_diagonal(pair):
    a, b = pair
    m = rt_matrix(concat(a, b))
    assert m == rt_matrix(a) @ rt_matrix(b)
    assert m.is_block_diagonal()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_braid_relations(n):
    for i in range(1, n - 1):
        for s in (1, -1):
            assert rt_matrix(BraidWord(n, (s * i, s * (i + 1), s * i))) == rt_matrix(BraidWord(n, (s * (i + 1), s * i, s * (i + 1))))
    for i in range(1, n):
        for j in range(i + 2, n):
            assert rt_matrix(BraidWord(n, (i, -j))) == rt_matrix(BraidWord(n, (-j, i)))


@pytest.mark.parametrize("n", range(2, 7))
def test_lemma_forms_and_conjugator(n):
    a = conjugator_A(n)
    for i in range(1, n):
        for s in (1, -1):
            assert lemma_generator_form(n, i, s) == rt_block(rt_generator(n, i, s), n - 2)
            assert lemma_generator_form(n, i, s) == lemma_factored_form(n, i, s).scale(lemma_prefactor(s))
            got = conjugate(lemma_factored_form(n, i, s).scale(q ** -s), a)
            assert got == burau_generator(n, i, s).substitute("t", q**2)


def test_lemma_zero_position():
    m = lemma_generator_form(4, 2, 1)
    assert m[2, 2] == 0 and m[1, 1] == 1 - q**2


def test_conjugator_examples():
    assert conjugator_A(3) == PolyMatrix.diagonal([qi, -(q**-2), q**-3])
    assert conjugator_A(2) == PolyMatrix.diagonal([qi, -(q**-2)])


def test_chi_examples():
    assert chi_skh_from_rt(BraidWord(1, ())) == q * t + qi * t**-1
    assert k_part(chi_skh_from_rt(BraidWord(2, (1,))), 0) == q - q**3
    assert k_part(chi_skh_from_rt(BraidWord(2, (-1,))), 0) == qi - q**-3
    assert theorem_trace_rhs(BraidWord(2, (1,))) == q - q**3
    assert theorem_trace_rhs(BraidWord(2, ())) == 2


def _theorem_holds(w):
    return k_part(chi_skh_from_rt(w), w.strands - 2) == theorem_trace_rhs(w)


def test_theorem_on_families():
    words = [w for k in range(3) for w in family_morton(k) + family_menasco(k)]
    words += [w for pair in flype_pairs() for w in pair]
    assert all(_theorem_holds(w) for w in words)


def _walk_prefixes(n, max_length):
    """Yield (word, rt matrix, burau matrix) for every word, sharing prefix products."""
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    stack = [((), RTMatrix.identity(n), PolyMatrix.identity(n))]
    while stack:
        word, m, b = stack.pop()
        yield BraidWord(n, word), m, b
        if len(word) < max_length:
            for x in letters:
                s = 1 if x > 0 else -1
                stack.append((word + (x,), m @ rt_generator(n, abs(x), s), b @ burau_generator(n, abs(x), s)))


@pytest.mark.slow
def test_theorem_exhaustive_four_strands():
    count = 0
    for w, m, b in _walk_prefixes(4, 6):
        chi_k = (-1) ** w.n_minus * q ** (w.n_plus - 2 * w.n_minus) * (q * t) ** 2 * m.trace_block(2)
        rhs = (q * t) ** 2 * q ** (w.n_plus - w.n_minus) * b.trace().substitute("t", q**2)
        assert chi_k == rhs, w
        count += 1
    assert count == sum(6**k for k in range(7))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(braid_words(n, 5), st.integers(1, n - 1), st.sampled_from([1, -1]))))
def test_shifted_block_traces_are_conjugation_invariant(data):
    w, i, s = data
    v = conjugate_by_generator(w, s * i)

    def shifted(x, k):
        pre = LaurentPolynomial.monomial((-1) ** x.n_minus, x.n_plus - 2 * x.n_minus, 0)
        return pre * rt_matrix(x).trace_block(k)

    n = w.strands
    for k in range(-n, n + 1, 2):
        assert shifted(w, k) == shifted(v, k)


def test_dump_format():
    text = dump_blocks(rt_matrix(BraidWord(2, (1,))))
    assert text.splitlines()[0] == "k=2 basis: uu"
    assert "k=0 basis: du ud" in text
