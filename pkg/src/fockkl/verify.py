"""Batch verification suites.

Every suite walks a finite grid of instances, compares two independently
computed sides of an identity and collects a :class:`Report`.  Work items are
pure functions of their arguments, so they can be farmed out to a process
pool; results are gathered in submission order, which keeps reports
byte-identical whatever the degree of parallelism.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import fock
from .affine import AffinePerm, act_level, identity, stabilizer_longest, w_min
from .kl import kl_table
from .laurent import ONE, ZERO, LaurentPoly
from .llt import llt_gplus_oracle
from .partitions import Partition, conjugate, is_n_regular, n_core, partitions

__all__ = [
    "Report",
    "SUITES",
    "run_suite",
    "verify_th1",
    "verify_th2",
    "verify_inverse",
    "verify_routes",
    "verify_chain",
    "verify_oracle",
    "verify_recursion",
    "verify_kl_orthogonality",
    "verify_parabolic_orthogonality",
    "length_ball",
]

Progress = Optional[Callable[[str], None]]
# (label_lambda, label_mu, lhs, rhs, ok)
Outcome = Tuple[str, str, str, str, bool]


@dataclass
class Report:
    command: str
    params: Dict[str, object]
    checked: int = 0
    failed: int = 0
    counterexamples: List[Dict[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def add(self, outcome: Outcome) -> None:
        lam, mu, lhs, rhs, ok = outcome
        self.checked += 1
        if not ok:
            self.failed += 1
            self.counterexamples.append({"lambda": lam, "mu": mu, "lhs": lhs, "rhs": rhs})

    def extend(self, outcomes: Iterable[Outcome]) -> "Report":
        for o in outcomes:
            self.add(o)
        return self

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.failed += other.failed
        self.counterexamples.extend(other.counterexamples)
        return self

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "checked": self.checked,
            "failed": self.failed,
            "counterexamples": self.counterexamples,
        }

    def to_text(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{self.command}: {status} checked={self.checked} failed={self.failed}"]
        for c in self.counterexamples:
            lines.append(f"  lambda={c['lambda']} mu={c['mu']} lhs={c['lhs']} rhs={c['rhs']}")
        return "\n".join(lines)


def _outcome(lam: object, mu: object, lhs: LaurentPoly, rhs: LaurentPoly) -> Outcome:
    return (str(lam), str(mu), str(lhs), str(rhs), lhs == rhs)


def _run(fn: Callable, items: Sequence[tuple], jobs: int, progress: Progress, label: str) -> List:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            out = []
            for k, res in enumerate(pool.map(fn, *zip(*items), chunksize=max(1, len(items) // (4 * jobs))), 1):
                out.append(res)
                if progress and k % 50 == 0:
                    progress(f"{label}: {k}/{len(items)}")
            return out
    out = []
    for k, args in enumerate(items, 1):
        out.append(fn(*args))
        if progress and k % 50 == 0:
            progress(f"{label}: {k}/{len(items)}")
    return out


def _grid(ms: Iterable[int], ns: Iterable[int], rs: Iterable[int]) -> List[Tuple[Partition, Partition, int, int]]:
    items = []
    for n in ns:
        for r in rs:
            for m in ms:
                idx = partitions(m, max_length=r)
                for mu in idx:
                    for lam in idx:
                        items.append((lam, mu, n, r))
    return items


# ----------------------------------------------------------------------
# Fock-space level identities


def _th2_item(lam: Partition, mu: Partition, n: int, r: int) -> Outcome:
    c = fock.check_theorem2(lam, mu, n, r)
    return _outcome(lam, mu, c.lhs, c.rhs)


def _th1_item(lam: Partition, mu: Partition, n: int, r: int) -> Outcome:
    c = fock.check_theorem2(lam, mu, n, r)
    a, b = c.lhs.eval_at(1), c.dual.eval_at(1)
    return (str(lam), str(mu), str(a), str(b), a == b)


def verify_th2(ms: Iterable[int], ns: Iterable[int], rs: Iterable[int], jobs: int = 1, progress: Progress = None) -> Report:
    """d_{lam',mu'}(q) = q^(l - l_mu) d_{tilde lam, hat mu}(q^-1) on the grid."""
    ms, ns, rs = list(ms), list(ns), list(rs)
    rep = Report("verify th2", {"m": ms, "n": ns, "r": rs})
    return rep.extend(_run(_th2_item, _grid(ms, ns, rs), jobs, progress, "th2"))


def verify_th1(ms: Iterable[int], ns: Iterable[int], rs: Iterable[int], jobs: int = 1, progress: Progress = None) -> Report:
    """The q = 1 specialisation d_{lam',mu'} = d_{tilde lam, hat mu}."""
    ms, ns, rs = list(ms), list(ns), list(rs)
    rep = Report("verify th1", {"m": ms, "n": ns, "r": rs})
    return rep.extend(_run(_th1_item, _grid(ms, ns, rs), jobs, progress, "th1"))


def _routes_item(lam: Partition, mu: Partition, n: int, r: int) -> Outcome:
    lhs = fock.d_poly(conjugate(lam), conjugate(mu), n)
    rhs = fock.d_poly_via_r(lam, mu, n, r)
    return _outcome(conjugate(lam), conjugate(mu), lhs, rhs)


def verify_routes(ms: Iterable[int], ns: Iterable[int], rs: Iterable[int], jobs: int = 1, progress: Progress = None) -> Report:
    """Parabolic-KL route against the level -n alternating sum, entry by entry."""
    ms, ns, rs = list(ms), list(ns), list(rs)
    rep = Report("verify routes", {"m": ms, "n": ns, "r": rs})
    return rep.extend(_run(_routes_item, _grid(ms, ns, rs), jobs, progress, "routes"))


def _chain_item(lam: Partition, mu: Partition, n: int, r: int) -> List[Outcome]:
    """The intermediate identities linking r_{beta,alpha} to d_{tilde lam, hat mu}."""
    if n_core(lam, n) != n_core(mu, n):
        return []
    T = kl_table(r)
    beta, alpha = fock._shifted(lam, r), fock._shifted(mu, r)
    wb, wa = w_min(beta, n), w_min(alpha, n)
    xi = act_level(wa.inverse(), n, alpha)
    w0xi, lxi = stabilizer_longest(xi, n)
    rv = T.r_poly(beta, alpha, n)
    mv = T.m_poly(wb, wa)
    mv_top = T.m_poly(wb * w0xi, wa)
    what = T.alcove_hat(wa, mu, n)
    nv = T.n_poly(wb * w0xi, what)
    tag = f"{mu} n={n} r={r}"
    outs = [
        _outcome(lam, f"{tag} [r = m]", rv, mv),
        _outcome(lam, f"{tag} [stabiliser shift]", rv.shift(lxi), mv_top),
        _outcome(lam, f"{tag} [m = dual n]", mv_top, nv.bar().shift(T.w0.length())),
    ]
    other = T.alcove_hat_by_reflection(wa, mu, n)
    return outs + [(str(lam), f"{tag} [alcove hat]", str(what), str(other), what == other)]


def verify_chain(ms: Iterable[int], ns: Iterable[int], rs: Iterable[int], jobs: int = 1, progress: Progress = None) -> Report:
    ms, ns, rs = list(ms), list(ns), list(rs)
    rep = Report("verify chain", {"m": ms, "n": ns, "r": rs})
    for outs in _run(_chain_item, _grid(ms, ns, rs), jobs, progress, "chain"):
        rep.extend(outs)
    return rep


def _inverse_item(m: int, n: int) -> List[Outcome]:
    d = fock.d_matrix(m, n)
    e = fock.e_matrix(m, n)
    outs = []
    for lam in d.index:
        lc = conjugate(lam)
        for mu in d.index:
            s = ZERO
            for nu in d.index:
                a = e[lc, conjugate(nu)]
                if a:
                    s = s + a.substitute_neg_q() * d[nu, mu]
            outs.append(_outcome(lam, mu, s, ONE if lam == mu else ZERO))
    return outs


def verify_inverse(ms: Iterable[int], ns: Iterable[int], jobs: int = 1, progress: Progress = None) -> Report:
    """sum_nu e_{lam',nu'}(-q) d_{nu,mu}(q) = delta_{lam,mu}."""
    ms, ns = list(ms), list(ns)
    rep = Report("verify inverse", {"m": ms, "n": ns})
    for outs in _run(_inverse_item, [(m, n) for n in ns for m in ms], jobs, progress, "inverse"):
        rep.extend(outs)
    return rep


def _oracle_item(mu: Partition, n: int) -> Outcome:
    a = llt_gplus_oracle(mu, n)
    mc = conjugate(mu)
    b = fock.gplus_vector(mc, n, max(2, mc.length))
    return (str(mu), str(mu), str(a), str(b), a == b)


def verify_oracle(ms: Iterable[int], ns: Iterable[int], jobs: int = 1, progress: Progress = None) -> Report:
    """Ladder-induction columns against the KL columns, all n-regular labels."""
    ms, ns = list(ms), list(ns)
    rep = Report("verify oracle", {"m": ms, "n": ns})
    items = [(mu, n) for n in ns for m in ms for mu in partitions(m) if is_n_regular(mu, n)]
    return rep.extend(_run(_oracle_item, items, jobs, progress, "oracle"))


# ----------------------------------------------------------------------
# KL-level identities


def length_ball(r: int, radius: int) -> List[AffinePerm]:
    """Elements of the affine symmetric group of length <= radius."""
    seen = {identity(r)}
    layer = [identity(r)]
    for _ in range(radius):
        nxt = []
        for w in layer:
            for i in range(r):
                if not w.has_right_descent(i):
                    u = w.right_mul_gen(i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        layer = nxt
    return sorted(seen, key=lambda w: (w.length(), tuple(w)))


def verify_kl_orthogonality(r: int, radius: int) -> Report:
    """sum_x Q_{x,z}(-q) h(x, w) = delta_{z,w} and Q_{x#,z#} = Q_{x,z} on a length ball."""
    T = kl_table(r)
    rep = Report("verify kl-orthogonality", {"r": r, "radius": radius})
    ball = length_ball(r, radius)
    for w in ball:
        col = T.h_column(w)
        for z in T.ideal(w):
            s = ZERO
            for x, h in col.items():
                qv = T.q_row(x).get(z)
                if qv:
                    s = s + qv.substitute_neg_q() * h
            rep.add(_outcome(z, w, s, ONE if z == w else ZERO))
    for x in ball:
        for z, v in T.q_row(x).items():
            rep.add(_outcome(x, f"{z} [sharp]", T.kl_q(x.sharp(), z.sharp()), v))
    return rep


def _strict(p: Sequence[int]) -> bool:
    return all(p[i] > p[i + 1] for i in range(len(p) - 1))


def _dominant_box(r: int, side: int) -> List[Tuple[int, ...]]:
    return [p for p in itertools.product(range(side + 1), repeat=r) if _strict(p)]


def verify_parabolic_orthogonality(r: int, n: int, side: Optional[int] = None) -> Report:
    """Inverse relation between Q- and P-, and the pairing of r with P-, on a point box."""
    side = 2 * n if side is None else side
    T = kl_table(r)
    rep = Report("verify parabolic-orthogonality", {"r": r, "n": n, "side": side})
    for lam in _dominant_box(r, side):
        pts = T.minus_support(lam, n)
        col = T.p_minus_column(lam, n)
        for alpha in pts:
            s = ZERO
            for mu in pts:
                p = col.get(mu)
                if p:
                    s = s + T.q_minus(mu, alpha, n).substitute_neg_q() * p
            rep.add(_outcome(alpha, f"{lam} [Q-/P-]", s, ONE if alpha == lam else ZERO))
        dom = [b for b in pts if _strict(b)]
        for alpha in dom:
            s = ZERO
            for b in dom:
                p = col.get(b)
                if p:
                    s = s + T.r_poly(b, alpha, n).substitute_neg_q() * p
            rep.add(_outcome(alpha, f"{lam} [r/P-]", s, ONE if alpha == lam else ZERO))
    return rep


def verify_recursion(r: int, n: int, side: Optional[int] = None) -> Report:
    """Wall crossing for P-: vanishing on walls, q-shift across them, reflection formula."""
    side = 2 * n if side is None else side
    T = kl_table(r)
    rep = Report("verify recursion", {"r": r, "n": n, "side": side})
    for lam in _dominant_box(r, side):
        pts = T.minus_support(lam, n)
        for mu in pts:
            pm = T.p_minus(mu, lam, n)
            for i in range(1, r):
                smu = list(mu)
                smu[i - 1], smu[i] = smu[i], smu[i - 1]
                smu = tuple(smu)
                if mu[i - 1] == mu[i]:
                    rep.add(_outcome(smu, f"{lam} [wall s{i}]", T.p_minus(smu, lam, n), ZERO))
                elif mu[i - 1] > mu[i]:
                    rep.add(_outcome(smu, f"{lam} [cross s{i}]", T.p_minus(smu, lam, n), pm.shift(1)))
            if _strict(mu):
                for s in T.finite:
                    sb = act_level(s, -n, mu)
                    rep.add(_outcome(sb, f"{lam} [reflect {mu}]", T.p_minus(sb, lam, n), pm.shift(s.length())))
            elif len(set(mu)) < r:
                rep.add(_outcome(mu, f"{lam} [singular]", pm, ZERO))
    return rep


# ----------------------------------------------------------------------
# dispatch


def run_suite(scope: str, m: int, n: int, r: Optional[int] = None, up_to: bool = False,
              jobs: int = 1, progress: Progress = None) -> Report:
    """Entry point shared by the command line: one scope, one (m, n, r) setting."""
    ms = list(range(m + 1)) if up_to else [m]
    if scope in ("th1", "th2", "routes"):
        rs = [r if r is not None else max(2, m)]
        fn = {"th1": verify_th1, "th2": verify_th2, "routes": verify_routes}[scope]
        rep = fn(ms, [n], rs, jobs, progress)
        if scope == "routes":
            rep.merge(verify_chain(ms, [n], rs, jobs, progress))
        rep.command = f"verify {scope}"
        rep.params = {"m": m, "n": n, "r": rs[0], "up_to": up_to}
        return rep
    if scope == "inverse":
        rep = verify_inverse(ms, [n], jobs, progress)
    elif scope == "oracle":
        rep = verify_oracle(ms, [n], jobs, progress)
    elif scope == "recursion":
        rr = r if r is not None else 2
        rep = verify_recursion(rr, n)
        rep.merge(verify_parabolic_orthogonality(rr, n))
        rep.merge(verify_kl_orthogonality(rr, 8 if rr <= 3 else 5))
        rep.command = "verify recursion"
        rep.params = {"n": n, "r": rr}
        return rep
    else:
        raise ValueError(f"unknown verification scope {scope!r}")
    rep.params = {"m": m, "n": n, "up_to": up_to}
    return rep


SUITES = ("th1", "th2", "inverse", "routes", "oracle", "recursion")
