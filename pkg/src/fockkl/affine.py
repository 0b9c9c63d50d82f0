"""The extended affine symmetric group in window notation and its level-k
actions on Z^r.

An element ``w`` is stored as its window ``(w(1), ..., w(r))`` and acts on Z
by ``w(i + r) = w(i) + r``.  Composition is composition of maps,
``(u * v)(i) = u(v(i))``.  Generators::

    s_i (1 <= i < r)  swaps i and i+1
    s_0               window (0, 2, 3, ..., r-1, r+1)
    tau               window (2, 3, ..., r+1)

The level-k action on points ``p`` of Z^r is ``(w.p)_{w(j)} = p_j`` with the
convention ``p_{j+r} = p_j - k``.  Concretely s_i swaps coordinates i and
i+1, s_0 sends p to ``(p_r + k, p_2, ..., p_{r-1}, p_1 - k)`` and tau sends p
to ``(p_r + k, p_1, ..., p_{r-1})``.

Fundamental domains (modulo constant vectors, for the non-extended group):

* level k > 0: ``p_1 >= ... >= p_r`` and ``p_1 - p_r <= k``;
* level k < 0: ``p_1 <= ... <= p_r`` and ``p_r - p_1 <= |k|``  (the mirror
  image of the positive-level domain under coordinate reversal).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, List, Sequence, Tuple, Union

__all__ = [
    "AffinePerm",
    "generator",
    "identity",
    "compose",
    "inverse",
    "sharp",
    "underline",
    "act_level",
    "in_alcove",
    "w_min",
    "stabilizer_longest",
    "bruhat_leq",
    "is_min_coset_rep",
    "finite_elements",
    "longest_finite",
    "from_word",
]

Point = Tuple[int, ...]


class AffinePerm(tuple):
    """Window notation of an element of the extended affine symmetric group."""

    def __new__(cls, window: Iterable[int]):
        w = tuple(int(x) for x in window)
        r = len(w)
        if r < 1:
            raise ValueError("empty window")
        if sorted(x % r for x in w) != list(range(r)):
            raise ValueError(f"window {w} does not have distinct residues mod {r}")
        return super().__new__(cls, w)

    @classmethod
    def _make(cls, w: Iterable[int]) -> "AffinePerm":
        return tuple.__new__(cls, w)

    @classmethod
    def parse(cls, text: str) -> "AffinePerm":
        s = text.strip().strip("[]")
        return cls(int(t) for t in s.split(","))

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__

    @property
    def rank(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        r = len(self)
        t, j = divmod(i - 1, r)
        return self[j] + t * r

    def __mul__(self, other: "AffinePerm") -> "AffinePerm":  # type: ignore[override]
        if not isinstance(other, AffinePerm):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError("rank mismatch")
        return AffinePerm._make(self(v) for v in other)

    def inverse(self) -> "AffinePerm":
        r = len(self)
        out = [0] * r
        for j, v in enumerate(self, 1):
            t, i = divmod(v - 1, r)
            out[i] = j - t * r
        return AffinePerm._make(out)

    def length(self) -> int:
        return _length(self)

    @property
    def tau_power(self) -> int:
        r = len(self)
        return (sum(self) - r * (r + 1) // 2) // r

    def underline(self) -> "AffinePerm":
        a = self.tau_power
        if not a:
            return self
        return AffinePerm._make(self(i - a) for i in range(1, len(self) + 1))

    def sharp(self) -> "AffinePerm":
        """The automorphism with s_i -> s_{-i} and tau -> tau^-1 (conjugation by j -> 1-j)."""
        r = len(self)
        return AffinePerm._make(1 - self(1 - j) for j in range(1, r + 1))

    def is_affine(self) -> bool:
        """Membership in the non-extended group."""
        return self.tau_power == 0

    def left_mul_gen(self, i: int) -> "AffinePerm":
        """s_i * self."""
        r = len(self)
        a, b = i % r, (i + 1) % r
        return AffinePerm._make(v + 1 if v % r == a else v - 1 if v % r == b else v for v in self)

    def right_mul_gen(self, i: int) -> "AffinePerm":
        """self * s_i."""
        r = len(self)
        w = list(self)
        if i == 0:
            w[0], w[r - 1] = self[r - 1] - r, self[0] + r
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePerm._make(w)

    def has_right_descent(self, i: int) -> bool:
        if i == 0:
            return self[-1] - len(self) > self[0]
        return self[i - 1] > self[i]

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)

    def right_descents(self) -> List[int]:
        return [i for i in range(len(self)) if self.has_right_descent(i)]

    def left_descents(self) -> List[int]:
        return self.inverse().right_descents()

    def reduced_word(self) -> List[int]:
        """Generator indices i_1 ... i_k with self = s_{i_1} ... s_{i_k} tau^a."""
        w = self.underline()
        word: List[int] = []
        while True:
            ds = w.right_descents()
            if not ds:
                break
            word.append(ds[0])
            w = w.right_mul_gen(ds[0])
        return word[::-1]

    def word_string(self) -> str:
        return " ".join(f"s{i}" for i in self.reduced_word())

    def act(self, p: Sequence[int], k: int) -> Point:
        return act_level(self, k, p)


@lru_cache(maxsize=None)
def _length(w: Tuple[int, ...]) -> int:
    r = len(w)
    total = 0
    for i in range(r):
        wi = w[i]
        for j in range(i + 1, r):
            total += abs((w[j] - wi) // r)
    return total


def identity(r: int) -> AffinePerm:
    return AffinePerm._make(range(1, r + 1))


def generator(i: Union[int, str], r: int) -> AffinePerm:
    """s_i for 0 <= i < r, or tau when ``i == "tau"``."""
    if r < 2:
        raise ValueError("rank must be at least 2")
    if i == "tau":
        return AffinePerm._make(range(2, r + 2))
    if not isinstance(i, int) or not 0 <= i < r:
        raise ValueError(f"invalid generator index {i!r} for rank {r}")
    return identity(r).right_mul_gen(i)


def from_word(word: Iterable[int], r: int) -> AffinePerm:
    w = identity(r)
    for i in word:
        w = w.right_mul_gen(i)
    return w


def compose(u: AffinePerm, v: AffinePerm) -> AffinePerm:
    return u * v


def inverse(u: AffinePerm) -> AffinePerm:
    return u.inverse()


def sharp(u: AffinePerm) -> AffinePerm:
    return u.sharp()


def underline(u: AffinePerm) -> AffinePerm:
    return u.underline()


def act_level(u: AffinePerm, k: int, p: Sequence[int]) -> Point:
    """Level-k action of ``u`` on the point ``p`` of Z^r."""
    if k == 0:
        raise ValueError("level must be nonzero")
    r = len(u)
    if len(p) != r:
        raise ValueError("rank mismatch")
    out = [0] * r
    for j in range(r):
        t, i = divmod(u[j] - 1, r)
        # (u.p)_{u(j)} = p_j and p_{i + t r} = p_i - t k
        out[i] = p[j] + t * k
    return tuple(out)


def in_alcove(p: Sequence[int], k: int) -> bool:
    """Closed fundamental domain of the level-k action (modulo constants)."""
    r = len(p)
    if k > 0:
        return all(p[i] >= p[i + 1] for i in range(r - 1)) and p[0] - p[-1] <= k
    return all(p[i] <= p[i + 1] for i in range(r - 1)) and p[-1] - p[0] <= -k


def _wall_step(p: Point, k: int) -> int:
    """Lowest generator index whose wall strictly separates p from the domain, or -1."""
    r = len(p)
    if k > 0:
        if p[0] - p[-1] > k:
            return 0
        for i in range(1, r):
            if p[i - 1] < p[i]:
                return i
    else:
        if p[-1] - p[0] > -k:
            return 0
        for i in range(1, r):
            if p[i - 1] > p[i]:
                return i
    return -1


@lru_cache(maxsize=None)
def _w_min_affine(p: Point, k: int) -> Tuple[AffinePerm, Point]:
    r = len(p)
    w = identity(r)
    steps = 0
    s_cache = [generator(i, r) for i in range(r)]
    while True:
        i = _wall_step(p, k)
        if i < 0:
            break
        p = act_level(s_cache[i], k, p)
        w = w.right_mul_gen(i)
        steps += 1
    assert w.length() == steps, "greedy wall crossing produced a non-reduced word"
    return w, p


def w_min(p: Sequence[int], k: int, mode: str = "tilde-underline") -> AffinePerm:
    """Minimal-length ``w`` with ``w^-1 . p`` in the fundamental domain.

    ``mode="tilde-underline"`` returns the element of the non-extended group
    acting on Z^r modulo constants.  ``mode="hat"`` returns the element of the
    extended group for the domain normalised by ``0 <= sum(p) < |k|``; its
    non-extended component is the former.
    """
    if k == 0:
        raise ValueError("level must be nonzero")
    p = tuple(int(x) for x in p)
    w, c = _w_min_affine(p, k)
    if mode in ("tilde-underline", "underline"):
        return w
    if mode != "hat":
        raise ValueError(f"unknown mode {mode!r}")
    s = sum(c)
    a = s // k if k > 0 else -(s // -k)
    r = len(p)
    tau_a = AffinePerm._make(range(1 + a, r + 1 + a))
    return w * tau_a


def alcove_point(p: Sequence[int], k: int) -> Point:
    """The representative of the orbit of ``p`` in the closed domain (same coordinate sum)."""
    return _w_min_affine(tuple(int(x) for x in p), k)[1]


def fixing_generators(p: Sequence[int], k: int) -> List[int]:
    r = len(p)
    out = []
    for i in range(r):
        g = generator(i, r)
        if act_level(g, k, p) == tuple(p):
            out.append(i)
    return out


def parabolic_longest(gens: Sequence[int], r: int) -> AffinePerm:
    """Longest element of the (finite) parabolic subgroup generated by ``gens``."""
    if len(set(gens)) >= r:
        raise ValueError("parabolic subgroup is infinite")
    w = identity(r)
    grew = True
    while grew:
        grew = False
        for i in gens:
            if not w.has_right_descent(i):
                w = w.right_mul_gen(i)
                grew = True
    return w


def stabilizer_longest(p: Sequence[int], k: int) -> Tuple[AffinePerm, int]:
    """Longest element of the stabiliser of a point of the closed domain, with its length."""
    if not in_alcove(p, k):
        raise ValueError(f"{tuple(p)} is not in the closed fundamental domain at level {k}")
    w = parabolic_longest(fixing_generators(p, k), len(p))
    return w, w.length()


_bruhat_memo: Dict[Tuple[AffinePerm, AffinePerm], bool] = {}


def bruhat_leq(x: AffinePerm, w: AffinePerm) -> bool:
    """Bruhat order on the non-extended group (descent recursion)."""
    if x.tau_power != w.tau_power:
        return False
    x, w = x.underline(), w.underline()
    key = (x, w)
    hit = _bruhat_memo.get(key)
    if hit is not None:
        return hit
    lx, lw = x.length(), w.length()
    if lx > lw:
        res = False
    elif lx == lw:
        res = x == w
    elif lx == 0:
        res = True
    else:
        s = w.right_descents()[0]
        ws = w.right_mul_gen(s)
        if x.has_right_descent(s):
            res = bruhat_leq(x.right_mul_gen(s), ws)
        else:
            res = bruhat_leq(x, ws)
    _bruhat_memo[key] = res
    return res


def is_min_coset_rep(w: AffinePerm) -> bool:
    """No left descent in the finite symmetric group, i.e. ``w^-1`` has increasing window."""
    inv = w.inverse()
    return all(inv[i] < inv[i + 1] for i in range(len(inv) - 1))


@lru_cache(maxsize=None)
def finite_elements(r: int) -> Tuple[AffinePerm, ...]:
    """The finite symmetric group generated by s_1, ..., s_{r-1}."""
    return tuple(AffinePerm._make(p) for p in permutations(range(1, r + 1)))


def longest_finite(r: int) -> AffinePerm:
    return AffinePerm._make(range(r, 0, -1))
