"""Ladder induction in the level-1 Fock space: an independent computation of
the canonical basis vectors G(mu) for n-regular mu.

The Chevalley operator f_i adds a node of residue ``i = (col - row) mod n``;
the coefficient of the new diagram is ``q^N`` where N is the number of
addable i-nodes minus the number of removable i-nodes strictly above the
added node.  Divided powers are obtained by dividing by the balanced
q-factorial.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .fock import FockVector
from .laurent import ONE, ZERO, LaurentPoly, q_factorial
from .partitions import Partition, is_n_regular

__all__ = ["fock_f", "ladders", "ladder_vector", "llt_gplus_oracle"]


def _addable(lam: Tuple[int, ...]) -> List[Tuple[int, int]]:
    out = []
    for a in range(1, len(lam) + 2):
        row = lam[a - 1] if a <= len(lam) else 0
        above = lam[a - 2] if a >= 2 else None
        if above is None or above > row:
            out.append((a, row + 1))
    return out


def _removable(lam: Tuple[int, ...]) -> List[Tuple[int, int]]:
    out = []
    for a in range(1, len(lam) + 1):
        below = lam[a] if a < len(lam) else 0
        if lam[a - 1] > below:
            out.append((a, lam[a - 1]))
    return out


def _f_basis(lam: Partition, i: int, n: int) -> Dict[Partition, LaurentPoly]:
    t = tuple(lam)
    add = [c for c in _addable(t) if (c[1] - c[0]) % n == i]
    rem = [c for c in _removable(t) if (c[1] - c[0]) % n == i]
    out: Dict[Partition, LaurentPoly] = {}
    for a, b in add:
        expo = sum(1 for c in add if c[0] < a) - sum(1 for c in rem if c[0] < a)
        parts = list(t) + [0]
        parts[a - 1] += 1
        out[Partition(parts)] = LaurentPoly.monomial(expo)
    return out


def fock_f(i: int, k: int, v: FockVector, n: int) -> FockVector:
    """The divided power f_i^(k) applied to ``v``."""
    if not 0 <= i < n:
        raise ValueError(f"residue {i} out of range for n={n}")
    if k < 0:
        raise ValueError("divided power must be nonnegative")
    cur = dict(v.coeffs)
    for _ in range(k):
        nxt: Dict[Partition, LaurentPoly] = {}
        for lam, c in cur.items():
            for mu, t in _f_basis(lam, i, n).items():
                nxt[mu] = nxt.get(mu, ZERO) + c * t
        cur = {mu: c for mu, c in nxt.items() if c}
    if k > 1:
        fac = q_factorial(k)
        cur = {mu: c.divexact(fac) for mu, c in cur.items()}
    return FockVector(cur)


def ladders(mu: Sequence[int], n: int) -> List[Tuple[int, int]]:
    """(residue, node count) for each nonempty ladder of ``mu`` in increasing order.

    Node (a, b) lies on ladder ``(a - 1) + (n - 1)(b - 1)``, so a ladder climbs
    n - 1 rows per column and all its nodes share the residue ``-k mod n``.
    """
    counts: Dict[int, int] = {}
    for a, b in Partition(mu).cells():
        k = (a - 1) + (n - 1) * (b - 1)
        counts[k] = counts.get(k, 0) + 1
    return [(-k % n, counts[k]) for k in sorted(counts)]


def ladder_vector(mu: Sequence[int], n: int) -> FockVector:
    """Product of divided powers along the ladders of ``mu``, applied to the vacuum."""
    v = FockVector({Partition(()): ONE})
    for i, k in ladders(mu, n):
        v = fock_f(i, k, v, n)
    return v


def _bar_symmetric_part(c: LaurentPoly) -> LaurentPoly:
    """The bar-invariant a with c - a in q Z[q]."""
    terms = {}
    for e, a in c.terms.items():
        if e <= 0:
            terms[e] = terms.get(e, 0) + a
            if e < 0:
                terms[-e] = terms.get(-e, 0) + a
    return LaurentPoly(terms)


@lru_cache(maxsize=None)
def _oracle(mu: Partition, n: int) -> FockVector:
    v = dict(ladder_vector(mu, n).coeffs)
    if v.get(mu) != ONE:
        raise AssertionError(f"ladder vector of {mu} is not unitriangular")
    # clear offending coefficients from the most dominant row downwards
    for lam in sorted(v, reverse=True):
        if lam == mu or lam not in v:
            continue
        c = v[lam]
        if c.is_zero() or (c.valuation() >= 1):
            continue
        if not is_n_regular(lam, n):
            raise AssertionError(f"offending coefficient at non-regular row {lam}")
        a = _bar_symmetric_part(c)
        for nu, g in _oracle(lam, n).coeffs.items():
            w = v.get(nu, ZERO) - a * g
            if w:
                v[nu] = w
            else:
                v.pop(nu, None)
    return FockVector(v)


def llt_gplus_oracle(mu: Sequence[int], n: int) -> FockVector:
    """G(mu) = sum_lam d_{lam,mu}(q) |lam> for n-regular ``mu``."""
    mu = Partition(mu)
    if not is_n_regular(mu, n):
        raise ValueError(f"{mu} is not {n}-regular")
    out = _oracle(mu, n)
    for lam, c in out.coeffs.items():
        if lam != mu and not (c.is_polynomial() and c.valuation() >= 1):
            raise AssertionError(f"reduction left a non-positive-degree coefficient at {lam}")
    return out
