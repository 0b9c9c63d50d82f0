"""Canonical-basis coefficients d_{lam,mu}(q) and e_{lam,mu}(q) of the level-1
Fock space, computed from parabolic KL polynomials of the affine symmetric
group, and the hat/tilde duality between arbitrary and n-regular columns.

Two independent routes give d:

* ``d_poly`` (the default) reads ``d_{lam,mu}`` off the sign-type parabolic
  polynomial ``n_{w_beta w0, w_alpha w0}`` at rank ``r``, where
  ``beta = lam + rho``, ``alpha = mu + rho`` and ``w0`` is the longest element
  of the stabiliser of the alcove point of ``alpha``;
* ``d_poly_via_r`` evaluates ``r_{beta,alpha}``, the alternating sum of
  inverse parabolic polynomials at level ``-n``, which equals the entry
  ``d_{lam',mu'}`` of the conjugate pair.

Matrices are indexed by partitions in reverse-lexicographic order, so the
d-matrix is lower unitriangular: ``d_{lam,mu} != 0`` forces ``lam <= mu`` in
dominance order.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .affine import act_level, stabilizer_longest, w_min
from .kl import kl_table
from .laurent import ONE, ZERO, LaurentPoly
from .partitions import Partition, conjugate, hat, n_core, partitions, rho, tilde

__all__ = [
    "FockMatrix",
    "FockVector",
    "TheoremCheck",
    "d_poly",
    "d_poly_via_r",
    "d_matrix",
    "e_matrix",
    "gplus_vector",
    "ell_mu",
    "check_theorem1",
    "check_theorem2",
]

Entry = Tuple[Partition, Partition]


def _shifted(p: Partition, r: int) -> Tuple[int, ...]:
    return tuple(a + b for a, b in zip(p.pad(r), rho(r)))


def _check_pair(lam: Sequence[int], mu: Sequence[int], n: int, r: int) -> Tuple[Partition, Partition]:
    lam, mu = Partition(lam), Partition(mu)
    if n < 2:
        raise ValueError("n must be at least 2")
    if r < 2:
        raise ValueError("rank r must be at least 2")
    if lam.size != mu.size:
        raise ValueError(f"partitions {lam} and {mu} have different sizes")
    if lam.length > r or mu.length > r:
        raise ValueError(f"partition length exceeds r={r}")
    return lam, mu


def _rank_for(*parts: Partition) -> int:
    return max([2] + [p.length for p in parts])


@dataclass(frozen=True)
class FockVector:
    """A finite combination of standard basis vectors |lam>."""

    coeffs: Dict[Partition, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {Partition(k): v for k, v in self.coeffs.items() if v}
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, lam: Sequence[int]) -> LaurentPoly:
        return self.coeffs.get(Partition(lam), ZERO)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def support(self) -> List[Partition]:
        return sorted(self.coeffs, reverse=True)

    def to_json(self) -> List[dict]:
        return [{"partition": str(lam), "poly": str(self.coeffs[lam])} for lam in self.support()]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({self.coeffs[lam]})|{lam}>" for lam in self.support())


@dataclass
class FockMatrix:
    """Entries ``(lam, mu) -> poly`` over the partitions of m of length <= r."""

    kind: str
    m: int
    n: int
    r: int
    index: List[Partition]
    entries: Dict[Entry, LaurentPoly]

    def __getitem__(self, key: Tuple[Sequence[int], Sequence[int]]) -> LaurentPoly:
        lam, mu = key
        return self.entries.get((Partition(lam), Partition(mu)), ZERO)

    def column(self, mu: Sequence[int]) -> FockVector:
        mu = Partition(mu)
        return FockVector({lam: v for (lam, c), v in self.entries.items() if c == mu})

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# {self.kind}-matrix m={self.m} n={self.n} r={self.r}; "
                  "rows lambda, columns mu, reverse-lexicographic order\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda\\mu"] + [str(mu) for mu in self.index])
        for lam in self.index:
            w.writerow([str(lam)] + [str(self[lam, mu]) for mu in self.index])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": {"m": self.m, "n": self.n, "r": self.r},
            "order": "reverse-lexicographic",
            "index": [str(p) for p in self.index],
            "entries": {
                str(lam): {str(mu): str(self[lam, mu]) for mu in self.index if self[lam, mu]}
                for lam in self.index
            },
        }

    def to_text(self) -> str:
        lines = [f"{self.kind}-matrix m={self.m} n={self.n} r={self.r}"]
        for lam in self.index:
            row = [str(self[lam, mu]) for mu in self.index]
            lines.append(f"{str(lam):>12} | " + "  ".join(f"{c:>6}" for c in row))
        return "\n".join(lines)


# ----------------------------------------------------------------------
# single entries


def ell_mu(mu: Sequence[int], n: int, r: int) -> int:
    """Length of the longest element of the stabiliser of the alcove point of mu + rho."""
    mu = Partition(mu)
    alpha = _shifted(mu, r)
    xi = act_level(w_min(alpha, n).inverse(), n, alpha)
    return stabilizer_longest(xi, n)[1]


def d_poly(lam: Sequence[int], mu: Sequence[int], n: int, r: Optional[int] = None) -> LaurentPoly:
    """d_{lam,mu}(q) from the sign-type parabolic KL polynomial at rank r."""
    lam, mu = Partition(lam), Partition(mu)
    if r is None:
        r = _rank_for(lam, mu)
    lam, mu = _check_pair(lam, mu, n, r)
    if n_core(lam, n) != n_core(mu, n):
        return ZERO
    if lam == mu:
        return ONE
    beta, alpha = _shifted(lam, r), _shifted(mu, r)
    wa = w_min(alpha, n)
    wb = w_min(beta, n)
    xi = act_level(wa.inverse(), n, alpha)
    w0xi, _ = stabilizer_longest(xi, n)
    return kl_table(r).n_poly(wb * w0xi, wa * w0xi)


def d_poly_via_r(lam: Sequence[int], mu: Sequence[int], n: int, r: Optional[int] = None) -> LaurentPoly:
    """r_{lam+rho, mu+rho} at level -n; this is d_{lam',mu'}(q)."""
    lam, mu = Partition(lam), Partition(mu)
    if r is None:
        r = _rank_for(lam, mu)
    lam, mu = _check_pair(lam, mu, n, r)
    if n_core(lam, n) != n_core(mu, n):
        return ZERO
    return kl_table(r).r_poly(_shifted(lam, r), _shifted(mu, r), n)


def _d_conj(lam: Partition, mu: Partition, n: int, r: int, route: str) -> LaurentPoly:
    """d_{lam',mu'} for lam, mu of length <= r."""
    if route == "r":
        return d_poly_via_r(lam, mu, n, r)
    if route == "tilt":
        lc, mc = conjugate(lam), conjugate(mu)
        return d_poly(lc, mc, n, _rank_for(lc, mc))
    raise ValueError(f"unknown route {route!r}")


# ----------------------------------------------------------------------
# matrices and vectors


def d_matrix(m: int, n: int, r: Optional[int] = None, progress: Optional[Callable[[str], None]] = None) -> FockMatrix:
    """All d_{lam,mu} over partitions of m with at most r parts (r defaults to m).

    Entries do not depend on the rank once it covers both lengths, so each
    one is computed at the smallest admissible rank.
    """
    r = max(2, m if r is None else r)
    index = partitions(m, max_length=r)
    entries: Dict[Entry, LaurentPoly] = {}
    for j, mu in enumerate(index, 1):
        if progress:
            progress(f"column {j}/{len(index)}: {mu}")
        for lam in index:
            v = d_poly(lam, mu, n)
            if v:
                entries[lam, mu] = v
    return FockMatrix("d", m, n, r, index, entries)


def _invert_unitriangular(index: List[Partition], entries: Dict[Entry, LaurentPoly]) -> Dict[Entry, LaurentPoly]:
    """Inverse of a lower unitriangular matrix (rows/columns in ``index`` order)."""
    pos = {p: i for i, p in enumerate(index)}
    rows: Dict[Partition, Dict[Partition, LaurentPoly]] = {p: {} for p in index}
    for (lam, mu), v in entries.items():
        if pos[lam] < pos[mu]:
            raise ValueError("matrix is not lower triangular in the given order")
        if lam == mu and v != ONE:
            raise ValueError("matrix does not have unit diagonal")
        rows[lam][mu] = v
    inv: Dict[Entry, LaurentPoly] = {}
    for j, mu in enumerate(index):
        # forward substitution for column mu of the inverse
        col: Dict[Partition, LaurentPoly] = {mu: ONE}
        for lam in index[j + 1:]:
            acc = ZERO
            for nu, v in rows[lam].items():
                if nu != lam and nu in col:
                    acc = acc + v * col[nu]
            if acc:
                col[lam] = -acc
        for lam, v in col.items():
            inv[lam, mu] = v
    return inv


def e_matrix(m: int, n: int, r: Optional[int] = None, progress: Optional[Callable[[str], None]] = None) -> FockMatrix:
    """e_{lam,mu}(q), defined by: [e_{lam',mu'}(-q)] is the inverse of [d_{lam,mu}(q)].

    Conjugation must map the index set to itself, so r >= m is required.
    """
    r = max(2, m if r is None else r)
    if r < m:
        raise ValueError("e_matrix needs r >= m so that conjugate partitions are indexed")
    d = d_matrix(m, n, r, progress)
    inv = _invert_unitriangular(d.index, d.entries)
    entries = {(conjugate(lam), conjugate(mu)): v.substitute_neg_q() for (lam, mu), v in inv.items()}
    return FockMatrix("e", m, n, r, d.index, entries)


def gplus_vector(mu: Sequence[int], n: int, r: Optional[int] = None, route: str = "tilt") -> FockVector:
    """The canonical basis vector G+_{mu'} = sum_lam d_{lam',mu'}(q) |lam'>.

    Only lam dominating mu can contribute, so every row has at most r parts
    when mu does.  ``route="tilt"`` computes each entry from the conjugate
    pair directly; ``route="r"`` uses the level -n alternating sum at rank r.
    """
    mu = Partition(mu)
    if r is None:
        r = _rank_for(mu)
    _check_pair(mu, mu, n, r)
    out: Dict[Partition, LaurentPoly] = {}
    for lam in partitions(mu.size, max_length=r):
        if n_core(lam, n) != n_core(mu, n):
            continue
        v = _d_conj(lam, mu, n, r, route)
        if v:
            out[conjugate(lam)] = v
    return FockVector(out)


# ----------------------------------------------------------------------
# the hat / tilde duality


@dataclass(frozen=True)
class TheoremCheck:
    lam: Partition
    mu: Partition
    n: int
    r: int
    lhs: LaurentPoly  # d_{lam',mu'}(q)
    dual: LaurentPoly  # d_{tilde lam, hat mu}(q)
    shift: int  # l - l_mu
    rhs: LaurentPoly  # q^shift * dual(q^-1)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"lambda": str(self.lam), "mu": str(self.mu), "lhs": str(self.lhs), "rhs": str(self.rhs)}


def check_theorem2(lam: Sequence[int], mu: Sequence[int], n: int, r: int, route: str = "r") -> TheoremCheck:
    """Compare d_{lam',mu'}(q) with q^(l - l_mu) d_{tilde lam, hat mu}(q^-1).

    The left side is computed at size m by ``route`` ("r" at rank r, or
    "tilt" at the rank of the conjugates); the right side by the parabolic
    route at size m + (n-1) r (r-1) and rank r.
    """
    lam, mu = _check_pair(lam, mu, n, r)
    lhs = _d_conj(lam, mu, n, r, route)
    lt, mh = tilde(lam, n, r), hat(mu, n, r)
    dual = d_poly(lt, mh, n, r)
    shift = r * (r - 1) // 2 - ell_mu(mu, n, r)
    return TheoremCheck(lam, mu, n, r, lhs, dual, shift, dual.bar().shift(shift))


def check_theorem1(lam: Sequence[int], mu: Sequence[int], n: int, r: int, route: str = "r") -> bool:
    """The q = 1 specialisation: d_{lam',mu'} = d_{tilde lam, hat mu}."""
    c = check_theorem2(lam, mu, n, r, route)
    return c.lhs.eval_at(1) == c.dual.eval_at(1)


def pairs(m: int, r: int) -> Iterable[Tuple[Partition, Partition]]:
    """All (lam, mu) of size m with at most r parts, in reverse-lexicographic order."""
    idx = partitions(m, max_length=r)
    for mu in idx:
        for lam in idx:
            yield lam, mu


def dumps(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
