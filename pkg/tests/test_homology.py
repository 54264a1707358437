import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import braid_words
from naive_khovanov import skh_table as naive_skh
from skhkit import kernels
from skhkit.braid import BraidWord, all_words, conjugate_by_generator, family_morton, random_word
from skhkit.homology import (
    ComplexTooLarge,
    CubeVertex,
    build_annular_complex,
    d_squared_is_zero,
    edge_map,
    euler_from_table,
    homology,
    render_table,
    resolve,
    skh,
    skh_equal,
    table_to_json,
)
from skhkit.laurent import q, t
from skhkit.rt import chi_skh_from_rt

SIGMA1 = BraidWord(2, (1,))
SIGMA1_INV = BraidWord(2, (-1,))

SIGMA1_TABLE = {(0, 3, 2): 1, (0, 1, 0): 1, (0, -1, -2): 1, (1, 3, 0): 1}
SIGMA1_INV_TABLE = {(-1, -3, 0): 1, (0, -3, -2): 1, (0, -1, 0): 1, (0, 1, 2): 1}


def test_cube_vertex():
    v = CubeVertex((1, 0, 1))
    assert v.height == 2
    assert CubeVertex.from_int(v.to_int(), 3) == v


def test_resolve_examples():
    d = resolve(BraidWord(3, ()), CubeVertex(()))
    assert len(d) == 3 and d.nontrivial_count == 3
    d0 = resolve(SIGMA1, CubeVertex((0,)))
    assert len(d0) == 2 and d0.nontrivial_count == 2
    d1 = resolve(SIGMA1, CubeVertex((1,)))
    assert len(d1) == 1 and d1.trivial_count == 1


def test_resolve_double_turnback():
    # two stacked cap-cups: an inner circle and an outer one that runs over the
    # closure arcs in opposite directions; both bound disks
    d = resolve(BraidWord(2, (1, 1)), CubeVertex((1, 1)))
    assert len(d) == 2 and d.trivial_count == 2


def test_resolve_length_mismatch():
    with pytest.raises(ValueError):
        resolve(SIGMA1, CubeVertex((0, 1)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: braid_words(n, 6)), st.integers(0, 2**6 - 1))
def test_windings_bounded_and_parity(w, vbits):
    v = CubeVertex.from_int(vbits % (1 << len(w.letters)), len(w.letters))
    d = resolve(w, v)
    assert all(abs(c.winding) <= 1 for c in d.circles)
    assert all(c.trivial == (c.winding == 0) for c in d.circles)
    assert d.nontrivial_count % 2 == w.strands % 2
    assert sorted(x for c in d.circles for x in c.nodes) == list(range((len(w.letters) + 1) * w.strands))


def test_edge_map_example():
    em = edge_map(SIGMA1, CubeVertex((0,)), 0)
    assert em[("+", "-")] == [("-",)]
    assert em[("-", "+")] == [("-",)]
    assert em[("+", "+")] == []
    assert em[("-", "-")] == []
    with pytest.raises(ValueError):
        edge_map(SIGMA1, CubeVertex((1,)), 0)


def test_identity_has_zero_differential():
    cx = build_annular_complex(BraidWord(3, ()))
    assert not any(len(src) for src, _ in cx.differential.values())
    assert cx.n_generators == 8


def test_fixture_tables():
    assert skh(BraidWord(1, ())) == {(0, 1, 1): 1, (0, -1, -1): 1}
    assert skh(SIGMA1) == SIGMA1_TABLE
    assert skh(SIGMA1_INV) == SIGMA1_INV_TABLE
    assert not skh_equal(skh(SIGMA1), skh(SIGMA1_INV))
    assert skh_equal(SIGMA1_TABLE, dict(SIGMA1_TABLE))


def test_euler_examples():
    assert euler_from_table(skh(BraidWord(1, ()))) == q * t + q**-1 * t**-1
    assert euler_from_table(SIGMA1_TABLE) == q**3 * t**2 + q + q**-1 * t**-2 - q**3


def test_generator_gradings():
    cx = build_annular_complex(SIGMA1)
    gens = list(cx.generators())
    assert len(gens) == 4 + 2
    for g in gens:
        d = resolve(SIGMA1, g.vertex)
        plus = g.labels.count("+")
        assert g.j == 2 * plus - len(g.labels) + g.vertex.height + 1
        assert g.k == sum((1 if s == "+" else -1) for s, c in zip(g.labels, d.circles) if not c.trivial)
        assert g.i == g.vertex.height


def test_bound():
    with pytest.raises(ComplexTooLarge):
        build_annular_complex(BraidWord(2, (1,) * 5), max_crossings=4)


def test_naive_oracle_small_corpus():
    for n in (1, 2, 3):
        for length in range(5):
            for w in all_words(n, length):
                assert skh(w) == naive_skh(n, w.letters), w


def test_naive_oracle_random_four_and_five_strands(rng):
    for _ in range(25):
        n = rng.choice([4, 5])
        w = random_word(rng, n, 7)
        assert skh(w) == naive_skh(n, w.letters), w


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: braid_words(n, 7)))
def test_d_squared_and_euler(w):
    cx = build_annular_complex(w)
    assert d_squared_is_zero(cx)
    table = homology(cx)
    assert euler_from_table(table) == chi_skh_from_rt(w)
    assert all(abs(k) <= w.strands for (_, _, k) in table)
    assert all(d > 0 for d in table.values())


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(braid_words(n, 5), st.integers(1, n - 1), st.sampled_from([1, -1]))))
def test_conjugacy_invariance(data):
    w, i, s = data
    assert skh(conjugate_by_generator(w, s * i)) == skh(w)


@pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled kernels not built")
def test_backends_agree(rng):
    words = [random_word(rng, rng.choice([2, 3, 4]), 8) for _ in range(15)] + [family_morton(0)[0]]
    for w in words:
        a = build_annular_complex(w, backend="cython")
        b = build_annular_complex(w, backend="python")
        assert a.sizes == b.sizes
        assert a.differential.keys() == b.differential.keys()
        for cell in a.differential:
            pa = sorted(zip(*(x.tolist() for x in a.differential[cell])))
            pb = sorted(zip(*(x.tolist() for x in b.differential[cell])))
            assert pa == pb
        assert homology(a, backend="cython") == homology(a, backend="python")


def test_output_formats():
    assert render_table(SIGMA1_TABLE).splitlines() == ["0 -1 -2 1", "0 1 0 1", "0 3 2 1", "1 3 0 1"]
    doc = table_to_json(SIGMA1, SIGMA1_TABLE)
    assert doc == {
        "strands": 2,
        "word": [1],
        "table": [[0, -1, -2, 1], [0, 1, 0, 1], [0, 3, 2, 1], [1, 3, 0, 1]],
        "euler": "q^-1*t^-2 + q - q^3 + q^3*t^2",
    }
