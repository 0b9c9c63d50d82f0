"""Kazhdan-Lusztig polynomials of the affine symmetric group and the
parabolic / inverse variants built from them.

Normalisation.  ``h(x, w)`` is the KL polynomial in the variable ``q = v``
with ``h(w, w) = 1`` and ``h(x, w)`` in ``q Z[q]`` for ``x < w``; it is related
to the classical polynomial by ``h(x, w) = q^(l(w)-l(x)) P_{x,w}(q^-2)``
(see :meth:`KLTable.kl_p`).  All the alternating sums below use ``h``.

Inverse polynomials follow the defining relation

    sum_x Q_{x,z}(-q) h(x, w)(q) = delta_{z,w},

so ``Q_{x,z}`` is nonzero only when ``z <= x``; it equals the usual inverse
KL polynomial of the pair ``z <= x`` and has nonnegative coefficients.

Parabolic polynomials for the level ``-n`` action are indexed by points of
Z^r; ``Q-_{mu,lam} = Q_{w(mu,-n), w(lam,-n)}`` for points in one orbit and 0
otherwise, and ``P-`` is obtained by inverting the ``Q-`` matrix.
"""

from __future__ import annotations

import threading
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .affine import (
    AffinePerm,
    act_level,
    alcove_point,
    bruhat_leq,
    finite_elements,
    identity,
    is_min_coset_rep,
    longest_finite,
    stabilizer_longest,
    w_min,
)
from .laurent import ONE, ZERO, LaurentPoly, neg_q_power
from .partitions import Partition, hat, rho

__all__ = ["KLTable", "kl_table"]

Point = Tuple[int, ...]
Column = Dict[AffinePerm, LaurentPoly]


class KLTable:
    """Memoised KL data for the affine symmetric group of rank ``r``.

    Cached entries are complete dictionaries inserted in one step, so a
    reader never sees a partially built column; recomputation of the same
    cell always yields the same value.
    """

    def __init__(self, r: int, check: bool = True):
        if r < 2:
            raise ValueError("rank must be at least 2")
        self.r = r
        self.check = check
        self.e = identity(r)
        self.w0 = longest_finite(r)
        self.finite = finite_elements(r)
        self._ideal: Dict[AffinePerm, FrozenSet[AffinePerm]] = {}
        self._pideal: Dict[AffinePerm, FrozenSet[AffinePerm]] = {}
        self._h: Dict[AffinePerm, Column] = {}
        self._n: Dict[AffinePerm, Column] = {}
        self._qrow: Dict[AffinePerm, Column] = {}
        self._pminus: Dict[Tuple[Point, int], Dict[Point, LaurentPoly]] = {}

    # ------------------------------------------------------------------
    # Bruhat intervals

    def _as_affine(self, w: AffinePerm) -> AffinePerm:
        if len(w) != self.r:
            raise ValueError("rank mismatch")
        if not w.is_affine():
            raise ValueError(f"{w} is not in the non-extended affine symmetric group")
        return w

    def ideal(self, w: AffinePerm) -> FrozenSet[AffinePerm]:
        """All x <= w."""
        hit = self._ideal.get(w)
        if hit is not None:
            return hit
        self._as_affine(w)
        chain = []
        u = w
        while u not in self._ideal and u.length() > 0:
            chain.append(u)
            u = u.right_mul_gen(u.right_descents()[0])
        base = self._ideal.get(u) or frozenset([u])
        self._ideal[u] = base
        for y in reversed(chain):
            s = y.right_descents()[0]
            lower = self._ideal[y.right_mul_gen(s)]
            self._ideal[y] = lower | frozenset(x.right_mul_gen(s) for x in lower)
        return self._ideal[w]

    def parabolic_ideal(self, w: AffinePerm) -> FrozenSet[AffinePerm]:
        """Minimal coset representatives x <= w (w itself a minimal representative)."""
        hit = self._pideal.get(w)
        if hit is not None:
            return hit
        chain = []
        u = w
        while u not in self._pideal and u.length() > 0:
            chain.append(u)
            u = u.right_mul_gen(u.right_descents()[0])
        base = self._pideal.get(u) or frozenset([u])
        self._pideal[u] = base
        for y in reversed(chain):
            s = y.right_descents()[0]
            lower = self._pideal[y.right_mul_gen(s)]
            extra = []
            for x in lower:
                if not x.has_right_descent(s):
                    xs = x.right_mul_gen(s)
                    if is_min_coset_rep(xs):
                        extra.append(xs)
            self._pideal[y] = lower | frozenset(extra)
        return self._pideal[w]

    # ------------------------------------------------------------------
    # ordinary KL polynomials

    def h_column(self, w: AffinePerm) -> Column:
        """{x: h(x, w)} over x <= w with nonzero value."""
        hit = self._h.get(w)
        if hit is not None:
            return hit
        self._as_affine(w)
        # build bottom-up along a descent chain to keep recursion shallow
        chain = []
        u = w
        while u not in self._h and u.length() > 0:
            chain.append(u)
            u = u.left_mul_gen(u.left_descents()[0])
        if u not in self._h:
            self._h[u] = {u: ONE}
        for y in reversed(chain):
            self._h[y] = self._compute_h(y)
        return self._h[w]

    def _compute_h(self, y: AffinePerm) -> Column:
        s = y.left_descents()[0]
        v = y.left_mul_gen(s)
        hv = self.h_column(v)
        col: Column = {}
        for x in self.ideal(y):
            sx = x.left_mul_gen(s)
            a = hv.get(sx, ZERO)
            b = hv.get(x, ZERO)
            if b:
                b = b.shift(-1 if x.has_left_descent(s) else 1)
            c = a + b
            if c:
                col[x] = c
        for z, pz in hv.items():
            if z == v:
                continue
            mu = pz.coefficient(1)
            if mu and z.has_left_descent(s):
                for x, px in self.h_column(z).items():
                    c = col.get(x, ZERO) - px * mu
                    if c:
                        col[x] = c
                    else:
                        col.pop(x, None)
        if self.check:
            ly = y.length()
            for x, p in col.items():
                if x == y:
                    assert p == ONE
                    continue
                assert all(c > 0 for c in p.terms.values()), f"negative KL coefficient at {x},{y}"
                assert p.valuation() >= 1 and p.degree() == ly - x.length()
                assert all((e - ly + x.length()) % 2 == 0 for e in p.terms)
        return col

    def h(self, x: AffinePerm, w: AffinePerm) -> LaurentPoly:
        if x.tau_power != w.tau_power:
            return ZERO
        return self.h_column(w.underline()).get(x.underline(), ZERO)

    def kl_p(self, x: AffinePerm, w: AffinePerm) -> LaurentPoly:
        """Classical KL polynomial P_{x,w} in the variable q = v^2."""
        p = self.h(x, w)
        if not p:
            return ZERO
        d = w.length() - x.length()
        return LaurentPoly({(d - e) // 2: c for e, c in p.terms.items()})

    def mu(self, x: AffinePerm, w: AffinePerm) -> int:
        return self.h(x, w).coefficient(1)

    # ------------------------------------------------------------------
    # inverse KL polynomials

    def q_row(self, x: AffinePerm, ceiling: Optional[AffinePerm] = None) -> Column:
        """{z: Q_{x,z}}; Q_{x,z} vanishes unless z <= x.

        With ``ceiling`` the unitriangular inversion runs over the whole ideal
        below the ceiling instead of below ``x`` (the result is the same).
        """
        if ceiling is None:
            hit = self._qrow.get(x)
            if hit is not None:
                return hit
        self._as_affine(x)
        top = x if ceiling is None else ceiling
        if ceiling is not None and not bruhat_leq(x, ceiling):
            raise ValueError("argument not below ceiling")
        members = sorted(self.ideal(top), key=lambda t: -t.length())
        # column x of the inverse of the matrix [h(y, t)]_{y,t}
        c: Dict[AffinePerm, LaurentPoly] = {x: ONE}
        for t in members:
            ct = c.get(t)
            if not ct:
                continue
            for y, p in self.h_column(t).items():
                if y != t:
                    v = c.get(y, ZERO) - p * ct
                    if v:
                        c[y] = v
                    else:
                        c.pop(y, None)
        row = {z: v.substitute_neg_q() for z, v in c.items()}
        if self.check:
            for z, v in row.items():
                assert v.is_polynomial() and all(cf > 0 for cf in v.terms.values()), (x, z, v)
        if ceiling is None:
            self._qrow[x] = row
        return row

    def kl_q(self, x: AffinePerm, z: AffinePerm, ceiling: Optional[AffinePerm] = None) -> LaurentPoly:
        """Q_{x,z} from the relation sum_x Q_{x,z}(-q) h(x,w)(q) = delta_{z,w}."""
        if x.tau_power != z.tau_power:
            return ZERO
        x, z = x.underline(), z.underline()
        if ceiling is not None:
            ceiling = ceiling.underline()
            if not (bruhat_leq(x, ceiling) and bruhat_leq(z, ceiling)):
                raise ValueError("arguments not below ceiling")
        return self.q_row(x, ceiling).get(z, ZERO)

    # ------------------------------------------------------------------
    # parabolic polynomials for the sign-type module (Deodhar recursion)

    def n_column(self, y: AffinePerm) -> Column:
        """{x: n_{x,y}} for minimal coset representatives x <= y."""
        hit = self._n.get(y)
        if hit is not None:
            return hit
        self._as_affine(y)
        if not is_min_coset_rep(y):
            raise ValueError(f"{y} is not a minimal coset representative")
        chain = []
        u = y
        while u not in self._n and u.length() > 0:
            chain.append(u)
            u = u.right_mul_gen(u.right_descents()[0])
        if u not in self._n:
            self._n[u] = {u: ONE}
        for t in reversed(chain):
            self._n[t] = self._compute_n(t)
        return self._n[y]

    def _compute_n(self, y: AffinePerm) -> Column:
        s = y.right_descents()[0]
        u = y.right_mul_gen(s)
        nu = self.n_column(u)
        col: Column = {}
        for x in self.parabolic_ideal(y):
            xs = x.right_mul_gen(s)
            if x.has_right_descent(s):
                c = nu.get(xs, ZERO) + nu.get(x, ZERO).shift(-1)
            elif is_min_coset_rep(xs):
                c = nu.get(xs, ZERO) + nu.get(x, ZERO).shift(1)
            else:
                continue
            if c:
                col[x] = c
        for z in sorted(col, key=lambda t: -t.length()):
            if z == y or z not in col:
                continue
            p = col[z]
            assert p.is_polynomial()
            c0 = p.coefficient(0)
            if c0:
                for x, px in self.n_column(z).items():
                    v = col.get(x, ZERO) - px * c0
                    if v:
                        col[x] = v
                    else:
                        col.pop(x, None)
        if self.check:
            assert col.get(y) == ONE
            for x, p in col.items():
                if x != y:
                    assert p.valuation() >= 1, (x, y, p)
        return col

    def n_poly(self, x: AffinePerm, y: AffinePerm) -> LaurentPoly:
        """sum_{s in S_r} (-q)^l(s) h(s x, y).

        For minimal coset representatives this is read off the parabolic
        recursion; otherwise the sum is taken literally.
        """
        x, y = self._as_affine(x), self._as_affine(y)
        if is_min_coset_rep(x) and is_min_coset_rep(y):
            return self.n_column(y).get(x, ZERO)
        return self.n_poly_direct(x, y)

    def n_poly_direct(self, x: AffinePerm, y: AffinePerm) -> LaurentPoly:
        col = self.h_column(y)
        total = ZERO
        for s in self.finite:
            p = col.get(s * x)
            if p:
                total = total + neg_q_power(s.length()) * p
        return total

    def m_poly(self, x: AffinePerm, w: AffinePerm) -> LaurentPoly:
        """sum_{s in S_r} (-q)^(l(w0)-l(s)) Q_{s x, w0 w} for minimal coset representatives."""
        if not (is_min_coset_rep(x) and is_min_coset_rep(w)):
            raise ValueError("m_poly takes minimal coset representatives")
        l0 = self.w0.length()
        target = self.w0 * w
        total = ZERO
        for s in self.finite:
            p = self.kl_q(s * x, target)
            if p:
                total = total + neg_q_power(l0 - s.length()) * p
        return total

    # ------------------------------------------------------------------
    # parabolic polynomials indexed by points (level -n)

    def q_minus(self, mu: Sequence[int], lam: Sequence[int], n: int) -> LaurentPoly:
        mu, lam = tuple(mu), tuple(lam)
        if sum(mu) != sum(lam):
            return ZERO
        if alcove_point(mu, -n) != alcove_point(lam, -n):
            return ZERO
        return self.kl_q(w_min(mu, -n), w_min(lam, -n))

    def minus_support(self, lam: Sequence[int], n: int) -> List[Point]:
        """Orbit points mu with w(mu,-n) <= w(lam,-n)."""
        lam = tuple(lam)
        zeta = alcove_point(lam, -n)
        top = w_min(lam, -n)
        return sorted({act_level(x, -n, zeta) for x in self.ideal(top)})

    def p_minus_column(self, lam: Sequence[int], n: int) -> Dict[Point, LaurentPoly]:
        """{mu: P-_{mu,lam}} by inverting the Q- matrix on the finite support."""
        lam = tuple(lam)
        key = (lam, n)
        hit = self._pminus.get(key)
        if hit is not None:
            return hit
        pts = self.minus_support(lam, n)
        wmap = {p: w_min(p, -n) for p in pts}
        order = sorted(pts, key=lambda p: -wmap[p].length())
        # sum_mu Q-_{mu,alpha}(-q) P-_{mu,lam} = delta_{alpha,lam}; Q-_{mu,alpha} needs w(alpha) <= w(mu)
        col: Dict[Point, LaurentPoly] = {lam: ONE}
        for mu in order:
            cm = col.get(mu)
            if not cm:
                continue
            row = self.q_row(wmap[mu])
            for alpha in pts:
                if alpha == mu:
                    continue
                qv = row.get(wmap[alpha])
                if qv:
                    v = col.get(alpha, ZERO) - qv.substitute_neg_q() * cm
                    if v:
                        col[alpha] = v
                    else:
                        col.pop(alpha, None)
        self._pminus[key] = col
        return col

    def p_minus(self, mu: Sequence[int], lam: Sequence[int], n: int) -> LaurentPoly:
        return self.p_minus_column(lam, n).get(tuple(mu), ZERO)

    def r_poly(self, beta: Sequence[int], alpha: Sequence[int], n: int) -> LaurentPoly:
        """sum_{s in S_r} (-q)^l(s) Q-_{s beta, alpha}, for strictly dominant beta, alpha."""
        beta, alpha = tuple(beta), tuple(alpha)
        for p in (beta, alpha):
            if len(p) != self.r or any(p[i] <= p[i + 1] for i in range(self.r - 1)):
                raise ValueError(f"{p} is not strictly dominant")
        total = ZERO
        for s in self.finite:
            v = self.q_minus(act_level(s, -n, beta), alpha, n)
            if v:
                total = total + neg_q_power(s.length()) * v
        return total

    # ------------------------------------------------------------------
    # alcove data attached to partitions

    def w_alpha(self, alpha: Sequence[int], n: int) -> AffinePerm:
        return w_min(alpha, n)

    def alcove_hat(self, w: AffinePerm, mu: Sequence[int], n: int) -> AffinePerm:
        """The minimal representative of the alcove paired with ``w = w_alpha`` (closed form)."""
        r = self.r
        alpha = tuple(a + b for a, b in zip(Partition(mu).pad(r), rho(r)))
        wa = w_min(alpha, n)
        if w != wa:
            raise ValueError("alcove_hat expects w = w_alpha for alpha = mu + rho")
        xi = act_level(wa.inverse(), n, alpha)
        w0xi, _ = stabilizer_longest(xi, n)
        target = tuple(a + b for a, b in zip(hat(mu, n, r).pad(r), rho(r)))
        return w_min(target, n) * w0xi

    def alcove_hat_by_reflection(self, w: AffinePerm, mu: Sequence[int], n: int) -> AffinePerm:
        """Same element, from the box-translate / reflect / translate description of the alcove.

        Alcoves are tracked through their barycentres, scaled by r so that the
        level-n action becomes the level-rn action on integer points.
        """
        from .partitions import restricted_decomp

        r = self.r
        base = tuple(n * c for c in rho(r))  # r * barycentre of the fundamental alcove
        bary = act_level(w, r * n, base)
        _, mu1 = restricted_decomp(mu, n, r)
        shifted = tuple(bary[i] - r * n * mu1[i] for i in range(r))
        reflected = shifted[::-1]
        rh = rho(r)
        image = tuple(reflected[i] + r * (2 * n * rh[i] + n * mu1[i]) for i in range(r))
        out = w_min(image, r * n)
        back = act_level(out.inverse(), r * n, image)
        diff = {back[i] - base[i] for i in range(r)}
        assert len(diff) == 1, "reflected barycentre is not a barycentre"
        return out


_tables: Dict[int, KLTable] = {}
_tables_lock = threading.Lock()


def kl_table(r: int) -> KLTable:
    """Shared table for rank r."""
    with _tables_lock:
        t = _tables.get(r)
        if t is None:
            t = _tables[r] = KLTable(r)
        return t
