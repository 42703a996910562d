from fractions import Fraction

import pytest

from hessvar.roots import build_root_system
from hessvar.weyl import GroupTooLarge, WeylGroup

from conftest import group, words

RANK_LE_3 = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3)]


def test_orders():
    assert len(group("A", 2)) == 6
    assert len(group("A", 3)) == 24
    assert len(group("C", 2)) == 8
    assert len(group("B", 3)) == 48
    assert len(group("D", 4)) == 192


def test_a2_lengths(A2):
    assert [w.length for w in A2] == [0, 1, 1, 2, 2, 3]


def test_c2_longest(C2):
    assert C2.longest.length == 4
    assert C2.longest == C2.from_word("s1s2s1s2")


def test_guard():
    with pytest.raises(GroupTooLarge):
        WeylGroup(build_root_system("A", 5), limit=100)


def test_word_parsing(A3):
    assert A3.from_word("s2s3s1") == A3.from_word("s2*s3*s1") == A3.from_word([2, 3, 1])
    assert A3.from_word("e") == A3.identity
    assert A3.from_word("s1s1") == A3.identity
    with pytest.raises(ValueError):
        A3.from_word("s4")
    with pytest.raises(ValueError):
        A3.from_word("t1")


def test_canonical_word(A3):
    assert str(A3.from_word("s2s1s3")) == "s2*s3*s1"
    assert str(A3.identity) == "e"


def test_act(A2, A3):
    rs = A2.rs
    a1 = rs.simple_root(1)
    assert A2.act(A2.identity, a1) == a1
    assert A2.act(A2.s(1), a1) == rs.negate(a1)
    r3 = A3.rs
    # s2*s1 applies s1 first: e1-e2 -> e2-e1 -> e3-e1
    assert A3.act(A3.from_word("s2s1"), r3.index((1, -1, 0, 0))) == r3.index((-1, 0, 1, 0))
    assert A3.act(A3.from_word("s1s2"), r3.index((1, -1, 0, 0))) == r3.index((0, 1, -1, 0))


def reflect_vec(alpha, v):
    c = Fraction(2 * sum(a * b for a, b in zip(alpha, v)), sum(a * a for a in alpha))
    return tuple(x - c * a for x, a in zip(v, alpha))


@pytest.mark.parametrize("t,r", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_act_matches_reflection_formula(t, r):
    W = group(t, r)
    rs = W.rs
    simple = [rs.roots[a] for a in rs.simple]
    for w in W:
        for k in range(len(rs.roots)):
            v = rs.roots[k]
            for i in reversed(w.word):
                v = reflect_vec(simple[i - 1], v)
            assert W.act(w, k) == rs.index(tuple(int(x) for x in v))


def test_inversions(A3):
    assert A3.inversions(A3.identity) == frozenset()
    for i in (1, 2, 3):
        assert A3.inversions(A3.s(i)) == {A3.rs.simple_root(i)}
    assert len(A3.inversions(A3.from_word("s2s3s1s2"))) == 4


def test_right_descents(A3):
    assert A3.right_descents(A3.from_word("s2s3s1")) == {1, 3}
    assert A3.right_descents(A3.from_word("s2s3s1s2")) == {2}
    assert A3.right_descents(A3.identity) == frozenset()


def test_min_coset_reps(A3):
    reps = A3.min_coset_reps({1, 3}, "left")
    assert set(reps) == words(A3, "e", "s2", "s2s1", "s2s3", "s2s1s3", "s2s1s3s2")
    assert len(A3.min_coset_reps({1}, "left")) == 12
    assert A3.min_coset_reps(set(), "left") == A3.elements
    assert len(A3.min_coset_reps({1, 3}, "right")) == 6
    with pytest.raises(ValueError):
        A3.min_coset_reps({1}, "middle")


def test_parabolic_decompose(A3):
    v = A3.from_word("s2s3s1")
    assert A3.parabolic_decompose(v, {1, 3}) == (A3.identity, v)
    w = A3.from_word("s1s2s3s1")
    assert A3.parabolic_decompose(w, {1, 3}) == (A3.s(1), v)


def test_longest_element(A3):
    assert A3.longest_element(set()) == A3.identity
    w = A3.longest_element({1, 3})
    assert w == A3.from_word("s1s3") and w.length == 2
    w = A3.longest_element({1, 2})
    assert w == A3.from_word("s1s2s1") and w.length == 3


def test_xv_wv(A3):
    assert A3.xv_wv(A3.from_word("s2s3s1")) == (A3.s(2), A3.from_word("s3s1"))
    assert A3.xv_wv(A3.from_word("s2s3s1s2s1")) == (A3.from_word("s2s3"), A3.from_word("s1s2s1"))
    assert A3.xv_wv(A3.identity) == (A3.identity, A3.identity)


def test_reflection(A2):
    rs = A2.rs
    assert A2.reflection(rs.simple_root(1)) == A2.s(1)
    theta = rs.index((1, 0, -1))
    assert A2.reflection(theta) == A2.from_word("s1s2s1")
    assert A2.reflection(rs.negate(theta)) == A2.reflection(theta)


def test_one_line(A3, C2):
    assert A3.one_line(A3.from_word("s2s1")) == (3, 1, 2, 4)
    with pytest.raises(ValueError):
        C2.one_line(C2.s(1))


@pytest.mark.parametrize("t,r", RANK_LE_3)
def test_length_identities(t, r):
    W = group(t, r)
    for w in W:
        n = len(W.inversions(w))
        assert n == len(W.inversions(W.inverse(w))) == w.length == len(w.word)
        assert W.from_word(w.word) == w


@pytest.mark.parametrize("t,r", RANK_LE_3)
def test_weyl_permutes_roots(t, r):
    W = group(t, r)
    everything = range(len(W.rs.roots))
    for w in W:
        assert W.act_set(w, everything) == frozenset(everything)


@pytest.mark.parametrize("t,r", RANK_LE_3)
def test_descent_remark(t, r):
    W = group(t, r)
    for w in W:
        n_inv = W.inversions(W.inverse(w))
        for g in W.rs.positive:
            shorter = W.mul(W.reflection(g), w).length < w.length
            assert shorter == (g in n_inv)
