from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from trifree.bounds import binomial
from trifree.core import (
    FormatError,
    GuardError,
    N_MAX,
    ParamError,
    Params,
    VertexSet,
    covers,
    format_vertex,
    format_vertex_set,
    hamming_distance,
    is_triangle,
    level,
    parse_vertex,
    parse_vertex_set,
    r_neighbors,
    shadows,
)

import brute

V = parse_vertex


def strs(vs, n):
    return [format_vertex(v, n) for v in vs]


def test_coordinate_convention():
    assert V("100") == 1
    assert V("001") == 4
    assert format_vertex(0b011, 3) == "110"


@given(st.integers(1, 20).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1))))
def test_parse_format_round_trip(nv):
    n, v = nv
    assert V(format_vertex(v, n), n) == v


def test_params_strict_and_exploratory():
    Params(6, 4)
    with pytest.raises(ParamError):
        Params(6, 3)
    with pytest.raises(ParamError):
        Params(6, 6)
    with pytest.raises(ParamError):
        Params(2, 2)
    assert Params(2, 2, exploratory=True).r == 2
    assert Params(5, 3, exploratory=True).half == 1
    with pytest.raises(ParamError):
        Params(3, 4, exploratory=True)
    with pytest.raises(ParamError):
        Params(0, 2)


def test_hamming_examples():
    u = V("010110")
    assert hamming_distance(u, u) == 0
    assert hamming_distance(V("000"), V("111")) == 3
    assert hamming_distance(V("010110"), V("011001")) == brute.dist("010110", "011001") == 4


def test_hamming_dimension_mismatch():
    with pytest.raises(ParamError):
        hamming_distance(V("1111"), V("000"), n=3)


@given(st.integers(0, 2**12 - 1), st.integers(0, 2**12 - 1), st.integers(0, 2**12 - 1))
def test_hamming_metric(u, v, w):
    assert hamming_distance(u, v) == hamming_distance(v, u)
    assert (hamming_distance(u, v) == 0) == (u == v)
    assert hamming_distance(u, w) <= hamming_distance(u, v) + hamming_distance(v, w)


def test_r_neighbors_examples():
    assert strs(r_neighbors(0, Params(3, 2, True)), 3) == ["110", "101", "011"]
    assert sorted(strs(r_neighbors(0, Params(3, 2, True)), 3)) == ["011", "101", "110"]
    assert len(list(r_neighbors(V("101010"), Params(6, 2)))) == brute.pascal(6, 2) == 15
    assert strs(r_neighbors(0, Params(4, 4, True)), 4) == ["1111"]


@given(st.integers(1, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(1, n), st.integers(0, 2**n - 1))))
def test_r_neighbors_properties(args):
    n, r, v = args
    out = list(r_neighbors(v, Params(n, r, exploratory=True)))
    assert out == sorted(set(out))
    assert len(out) == binomial(n, r)
    assert all(hamming_distance(u, v) == r for u in out)


def test_is_triangle_examples():
    p = Params(3, 2, exploratory=True)
    assert is_triangle(V("110"), V("101"), V("011"), p)
    assert not is_triangle(V("000"), V("011"), V("111"), p)
    assert is_triangle(V("000"), V("110"), V("101"), p)
    with pytest.raises(ParamError):
        is_triangle(1, 1, 2, p)


@given(st.integers(0, 63), st.integers(0, 63), st.integers(0, 63), st.integers(0, 63))
def test_is_triangle_symmetries(u, v, w, mask):
    if len({u, v, w}) < 3:
        return
    p = Params(6, 2)
    base = is_triangle(u, v, w, p)
    for a, b, c in permutations((u, v, w)):
        assert is_triangle(a, b, c, p) == base
    assert is_triangle(u ^ mask, v ^ mask, w ^ mask, p) == base
    assert base == (not brute.is_triangle_free(strs((u, v, w), 6), 2))


def test_level():
    assert level(V("000000")) == 0
    assert level(V("010110")) == 3
    assert level(V("111")) == 3


def test_shadows_examples():
    assert sorted(strs(shadows(V("110"), 1), 3)) == ["010", "100"]
    assert sorted(strs(shadows(V("1110"), 2), 4)) == ["0010", "0100", "1000"]
    v = V("1011010")
    assert list(shadows(v, level(v))) == [0]
    with pytest.raises(ParamError):
        list(shadows(V("100"), 2))


def test_covers_examples():
    assert sorted(strs(covers(V("010"), 1, 3), 3)) == ["011", "110"]
    assert strs(covers(0, 3, Params(3, 2, True)), 3) == ["111"]
    assert strs(covers(V("0101"), 2, 4), 4) == ["1111"]
    with pytest.raises(ParamError):
        list(covers(V("0101"), 3, 4))


@pytest.mark.parametrize("n", range(1, 8))
def test_shadow_cover_duality(n):
    for u in range(1 << n):
        for d in range(1, n + 1):
            up = set(covers(u, d, n)) if d <= n - level(u) else set()
            for v in range(1 << n):
                down = set(shadows(v, d)) if d <= level(v) else set()
                assert (u in down) == (v in up)


def test_shadow_counts():
    v = V("1101101")
    for d in range(level(v) + 1):
        assert len(list(shadows(v, d))) == binomial(level(v), d)
        assert len(list(covers(v, d if d <= 2 else 2, 7))) == binomial(2, min(d, 2))


def test_vertex_set_basics():
    vs = VertexSet(3, [5, 1, 5, 3])
    assert vs.members == (1, 3, 5)
    assert 3 in vs and 2 not in vs
    assert len(vs) == 3
    assert vs == VertexSet(3, [1, 3, 5])
    assert vs.translate(1).members == (0, 2, 4)
    with pytest.raises(ParamError):
        VertexSet(2, [4])
    with pytest.raises(GuardError):
        VertexSet(N_MAX + 1, [])


def test_vertex_set_text_round_trip():
    vs = VertexSet.from_strings(["110", "101", "011"])
    text = format_vertex_set(vs, 2)
    assert text.splitlines()[0] == "# n=3 r=2"
    back, r = parse_vertex_set(text)
    assert back == vs and r == 2


def test_vertex_set_parser_rules():
    vs, r = parse_vertex_set("\n# a comment\n110\n\n101  \n")
    assert vs.n == 3 and r is None and len(vs) == 2
    with pytest.raises(FormatError):
        parse_vertex_set("110\n10\n")
    with pytest.raises(FormatError):
        parse_vertex_set("110\n1x1\n")
    with pytest.raises(FormatError):
        parse_vertex_set("# n=4 r=2\n110\n")
    with pytest.raises(FormatError):
        parse_vertex_set("# n=3\n110\n", n=4)
    with pytest.raises(FormatError):
        parse_vertex_set("")
    empty, _ = parse_vertex_set("# n=5 r=2\n")
    assert empty.n == 5 and len(empty) == 0
