import random

import pytest
from hypothesis import given, strategies as st

from fockkl.partitions import (
    Partition,
    conjugate,
    dominance_leq,
    hat,
    is_n_regular,
    is_n_restricted,
    n_core,
    partitions,
    restricted_decomp,
    rho,
    tilde,
)
from oracles import peel_core

parts = st.lists(st.integers(1, 9), max_size=5).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_conjugate_examples():
    assert conjugate((6, 2, 1)) == (3, 2, 1, 1, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((5,)) == (1,) * 5


def test_parse_and_print():
    assert Partition.parse("6,2,1") == (6, 2, 1)
    assert Partition.parse("[]") == () and Partition.parse("") == ()
    assert str(Partition(())) == "[]" and str(Partition((8, 1))) == "8,1"
    for bad in ("1,2", "3,-1", "a"):
        with pytest.raises(ValueError):
            Partition.parse(bad)


def test_pad_rejects_long_partitions():
    assert Partition((8, 1)).pad(3) == (8, 1, 0)
    with pytest.raises(ValueError):
        Partition((1, 1, 1)).pad(2)
    with pytest.raises(ValueError):
        hat((1, 1, 1), 2, 2)


def test_dominance_examples():
    assert dominance_leq((1, 1, 1), (3,))
    assert not dominance_leq((3,), (1, 1, 1))
    assert dominance_leq((2, 2), (3, 1))
    with pytest.raises(ValueError):
        dominance_leq((2,), (1,))


def test_regularity_examples():
    assert is_n_regular((12, 6, 3), 3)
    assert not is_n_regular((1, 1, 1), 3)
    assert is_n_regular((), 3)
    assert is_n_restricted((3, 2, 1), 3) and not is_n_restricted((3,), 3)


def test_worked_example_maps():
    assert restricted_decomp((6, 2, 1), 3, 3) == ((3, 2, 1), (1, 0, 0))
    assert hat((6, 2, 1), 3, 3) == (12, 6, 3)
    assert hat((6, 2, 1), 3, 3).size == 21
    assert [tilde(l, 3, 3) for l in [(6, 2, 1), (7, 1, 1), (6, 3), (8, 1)]] == [
        (10, 6, 5), (11, 5, 5), (10, 7, 4), (12, 5, 4)]


def test_small_maps():
    assert restricted_decomp((3,), 3, 1) == ((0,), (1,))
    assert restricted_decomp((2, 1), 3, 3) == ((2, 1, 0), (0, 0, 0))
    assert hat((), 3, 3) == (8, 4)
    assert tilde((), 2, 2) == (1, 1)


def test_core_examples():
    assert n_core((1,), 5) == (1,)
    assert n_core((2, 1), 3) == ()
    assert n_core((6, 2, 1), 3) == n_core((7, 1, 1), 3) == peel_core((6, 2, 1), 3)


def test_partition_enumeration():
    assert [len(partitions(m)) for m in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    ps = partitions(6)
    assert ps == sorted(ps, reverse=True)
    assert partitions(5, max_length=2) == [(5,), (4, 1), (3, 2)]


def test_reverse_lex_extends_dominance():
    for m in range(1, 9):
        ps = partitions(m)
        for i, a in enumerate(ps):
            for b in ps[i + 1:]:
                assert not dominance_leq(a, b) or a == b


@given(parts)
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


@given(parts, parts)
def test_conjugation_reverses_dominance(a, b):
    if a.size == b.size:
        assert dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a))


@given(parts, st.integers(2, 4), st.integers(0, 2))
def test_restricted_decomp_properties(p, n, extra):
    r = max(1, p.length) + extra
    mu0, mu1 = restricted_decomp(p, n, r)
    assert tuple(a + n * b for a, b in zip(mu0, mu1)) == p.pad(r)
    assert is_n_restricted(mu0, n)
    assert all(mu0[i] >= mu0[i + 1] for i in range(r - 1))
    assert all(mu1[i] >= mu1[i + 1] >= 0 for i in range(r - 1))
    if is_n_restricted(p, n):
        assert mu0 == p.pad(r) and not any(mu1)


@given(parts, st.integers(2, 4), st.integers(0, 2))
def test_hat_and_tilde(p, n, extra):
    r = max(1, p.length) + extra
    h = hat(p, n, r)
    assert len(set(h.pad(r))) == r
    assert is_n_regular(h, n)
    assert h.size == tilde(p, n, r).size == p.size + (n - 1) * r * (r - 1)
    mu0, mu1 = restricted_decomp(p, n, r)
    assert h.pad(r) == tuple(2 * (n - 1) * a + b + n * c for a, b, c in zip(rho(r), reversed(mu0), mu1))


@given(parts, st.integers(2, 4))
def test_core_agrees_with_rim_hook_peeling(p, n):
    c = n_core(p, n)
    assert c == peel_core(p, n) == peel_core(p, n, choose=max)
    assert peel_core(p, n, choose=random.Random(p.size).choice) == c
    assert n_core(c, n) == c
    assert (p.size - c.size) % n == 0
