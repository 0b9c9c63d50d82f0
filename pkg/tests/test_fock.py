import pytest
from hypothesis import given, settings, strategies as st

from fockkl.fock import (
    FockVector,
    check_theorem1,
    check_theorem2,
    d_matrix,
    d_poly,
    d_poly_via_r,
    e_matrix,
    ell_mu,
    gplus_vector,
)
from fockkl.laurent import ONE, ZERO, LaurentPoly, q
from fockkl.partitions import Partition, conjugate, dominance_leq, n_core, partitions

GOLDEN_ROWS = [(6, 2, 1), (7, 1, 1), (6, 3), (8, 1)]


def test_small_entries():
    assert d_poly((1, 1), (2,), 2, 2) == q
    assert d_poly((2,), (1, 1), 2, 2) == ZERO
    assert d_poly((2, 1), (2, 1), 3) == ONE
    assert d_poly((), (), 2) == ONE


def test_input_validation():
    with pytest.raises(ValueError):
        d_poly((2,), (1,), 2)
    with pytest.raises(ValueError):
        d_poly((1, 1, 1), (3,), 2, 2)
    with pytest.raises(ValueError):
        d_poly((2,), (2,), 1)


def test_m2_matrices():
    d = d_matrix(2, 2)
    assert d.index == [(2,), (1, 1)]
    assert [[d[a, b] for b in d.index] for a in d.index] == [[ONE, ZERO], [q, ONE]]
    e = e_matrix(2, 2)
    assert e[(2,), (1, 1)] == q and e[(1, 1), (2,)] == ZERO
    assert e[(2,), (2,)] == ONE


def test_empty_partition_matrices():
    d = d_matrix(0, 3)
    assert d.index == [()] and d[(), ()] == ONE
    assert e_matrix(0, 3)[(), ()] == ONE


def test_e_matrix_needs_full_index():
    with pytest.raises(ValueError):
        e_matrix(4, 2, 2)


def test_worked_example_column():
    v = gplus_vector((6, 2, 1), 3, 3)
    assert sorted(v.coeffs) == sorted(conjugate(l) for l in GOLDEN_ROWS)
    assert v[conjugate((6, 2, 1))] == ONE
    assert gplus_vector((6, 2, 1), 3, 3, route="tilt") == v


def test_gplus_small():
    assert gplus_vector((1, 1), 2) == FockVector({Partition((2,)): ONE, Partition((1, 1)): q})
    # a single column of m boxes in a trivial block
    v = gplus_vector((3,), 5)
    assert v == FockVector({Partition((1, 1, 1)): ONE})
    assert v.to_json() == [{"partition": "1,1,1", "poly": "1"}]


def test_ell_mu():
    assert ell_mu((6, 2, 1), 3, 3) == 0
    assert ell_mu((), 3, 2) == 0
    assert ell_mu((1,), 2, 2) == 1


def test_worked_example_identity():
    for lam in GOLDEN_ROWS:
        c = check_theorem2(lam, (6, 2, 1), 3, 3)
        assert c.holds and c.shift == 3
        assert c.rhs == c.dual.bar().shift(3)
        assert check_theorem1(lam, (6, 2, 1), 3, 3)


def test_diagonal_of_dual():
    for n in (2, 3):
        for r in (2, 3):
            for mu in partitions(4, max_length=r):
                c = check_theorem2(mu, mu, n, r)
                assert c.lhs == ONE and c.dual == LaurentPoly.monomial(c.shift)


@pytest.mark.parametrize("n", [2, 3])
def test_matrix_invariants(n):
    for m in range(7):
        d = d_matrix(m, n)
        for (lam, mu), v in d.entries.items():
            assert v.is_polynomial() and all(c > 0 for c in v.terms.values())
            assert n_core(lam, n) == n_core(mu, n)
            assert dominance_leq(lam, mu)
            if lam != mu:
                assert v.valuation() >= 1
        for mu in d.index:
            assert d[mu, mu] == ONE


def test_rank_stability():
    for n in (2, 3):
        for m in range(6):
            for lam in partitions(m):
                for mu in partitions(m):
                    base = d_poly(lam, mu, n)
                    top = max(2, lam.length, mu.length) + 1
                    assert d_poly(lam, mu, n, top) == base


def test_routes_on_small_grid():
    for n in (2, 3):
        for m in range(5):
            for r in (2, 3):
                for lam in partitions(m, max_length=r):
                    for mu in partitions(m, max_length=r):
                        assert d_poly_via_r(lam, mu, n, r) == d_poly(conjugate(lam), conjugate(mu), n)


def test_exports():
    d = d_matrix(3, 2)
    csv_text = d.to_csv()
    lines = csv_text.strip().splitlines()
    assert lines[0].startswith("#") and "reverse-lexicographic" in lines[0]
    assert len(lines) == 1 + 1 + 3
    js = d.to_json()
    assert js["index"] == ["3", "2,1", "1,1,1"]
    assert js["entries"]["1,1,1"]["3"] == str(d[(1, 1, 1), (3,)])


def test_e_specialises_to_integers_and_inverts():
    for n in (2, 3):
        for m in range(6):
            d, e = d_matrix(m, n), e_matrix(m, n)
            for lam in d.index:
                for mu in d.index:
                    assert isinstance(e[lam, mu].eval_at(-1), int)
                    s = ZERO
                    for nu in d.index:
                        s = s + e[conjugate(lam), conjugate(nu)].substitute_neg_q() * d[nu, mu]
                    assert s == (ONE if lam == mu else ZERO)


small_pairs = st.integers(0, 5).flatmap(
    lambda m: st.tuples(st.sampled_from(partitions(m, max_length=3)), st.sampled_from(partitions(m, max_length=3)))
)


@given(small_pairs, st.sampled_from([2, 3]), st.sampled_from([2, 3]))
@settings(max_examples=80, deadline=None)
def test_dual_identity_property(pair, n, r):
    lam, mu = pair
    if lam.length > r or mu.length > r:
        return
    c = check_theorem2(lam, mu, n, r)
    assert c.holds
    assert c.dual.is_zero() or c.dual.degree() <= c.shift
