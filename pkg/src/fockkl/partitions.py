"""Integer partitions: conjugation, dominance, n-cores and the size-raising
maps ``hat`` / ``tilde`` between partitions of ``m`` and of
``m + (n-1) r (r-1)``.

Partitions are tuples of positive weakly decreasing integers; vectors in Z^r
are plain tuples of ints.
"""

from __future__ import annotations

from typing import Iterator, List, Sequence, Tuple

__all__ = [
    "Partition",
    "rho",
    "conjugate",
    "dominance_leq",
    "is_n_regular",
    "is_n_restricted",
    "restricted_decomp",
    "hat",
    "tilde",
    "n_core",
    "partitions",
]

Vector = Tuple[int, ...]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition((6, 2, 1)).conjugate()
    Partition(3, 2, 1, 1, 1, 1)
    >>> Partition.parse("8,1").pad(3)
    (8, 1, 0)
    """

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        s = text.strip()
        if s in ("", "[]", "()", "0"):
            return cls(())
        s = s.strip("[]()")
        try:
            return cls(int(t) for t in s.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}: {exc}") from None

    def __repr__(self) -> str:
        return "Partition(" + ", ".join(map(str, self)) + ")"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "[]"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def pad(self, r: int) -> Vector:
        """The r-vector obtained by appending zeros."""
        if len(self) > r:
            raise ValueError(f"partition {self} has more than r={r} parts")
        return tuple(self) + (0,) * (r - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Cells (row, col), 1-based, in English notation."""
        for i, p in enumerate(self, 1):
            for j in range(1, p + 1):
                yield i, j


def rho(r: int) -> Vector:
    """(r-1, r-2, ..., 1, 0)."""
    return tuple(range(r - 1, -1, -1))


def conjugate(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return p
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """a is dominated by b (partial sums of a never exceed those of b)."""
    a, b = Partition(a), Partition(b)
    if sum(a) != sum(b):
        raise ValueError("dominance compares partitions of the same size")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def is_n_regular(p: Sequence[int], n: int) -> bool:
    """No part occurs n or more times."""
    p = tuple(p)
    return all(p[i] != p[i + n - 1] for i in range(len(p) - n + 1))


def is_n_restricted(p: Sequence[int], n: int) -> bool:
    """Consecutive differences, including the last part itself, are < n."""
    p = tuple(p) + (0,)
    return all(p[i] - p[i + 1] < n for i in range(len(p) - 1))


def restricted_decomp(p: Sequence[int], n: int, r: int) -> Tuple[Vector, Vector]:
    """Split ``p`` as ``mu0 + n*mu1`` with ``mu0`` n-restricted.

    The trailing part of ``mu0`` is also kept below ``n`` (a virtual zero row
    follows it), which is what makes the decomposition unique.

    >>> restricted_decomp((6, 2, 1), 3, 3)
    ((3, 2, 1), (1, 0, 0))
    """
    v = Partition(p).pad(r) + (0,)
    mu0 = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        mu0[i] = mu0[i + 1] + (v[i] - v[i + 1]) % n
    mu0 = tuple(mu0[:r])
    mu1 = tuple((v[i] - mu0[i]) // n for i in range(r))
    return mu0, mu1


def hat(p: Sequence[int], n: int, r: int) -> Partition:
    """``2(n-1) rho_r + reverse(mu0) + n mu1``; always has distinct parts."""
    mu0, mu1 = restricted_decomp(p, n, r)
    rh = rho(r)
    return Partition(2 * (n - 1) * rh[i] + mu0[r - 1 - i] + n * mu1[i] for i in range(r))


def tilde(p: Sequence[int], n: int, r: int) -> Partition:
    """Add ``(n-1)(r-1)`` to each of the r padded coordinates."""
    c = (n - 1) * (r - 1)
    return Partition(x + c for x in Partition(p).pad(r))


def beta_numbers(p: Sequence[int], k: int) -> List[int]:
    """First-column hook lengths of ``p`` padded to ``k`` rows."""
    p = Partition(p)
    if k < len(p):
        raise ValueError("need at least as many beads as parts")
    v = tuple(p) + (0,) * (k - len(p))
    return [v[i] + k - 1 - i for i in range(k)]


def from_beta_numbers(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    k = len(b)
    return Partition(b[i] - (k - 1 - i) for i in range(k))


def n_core(p: Sequence[int], n: int) -> Partition:
    """Slide every bead on the n-runner abacus as far up as it goes.

    >>> n_core((2, 1), 3)
    Partition()
    """
    p = Partition(p)
    k = len(p)
    counts = [0] * n
    for b in beta_numbers(p, k):
        counts[b % n] += 1
    beads = [j + n * t for j in range(n) for t in range(counts[j])]
    return from_beta_numbers(beads)


def partitions(m: int, max_length: int | None = None, max_part: int | None = None) -> List[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order ((m) first)."""
    if max_length is None:
        max_length = m
    if max_part is None:
        max_part = m
    out: List[Partition] = []

    def rec(rest: int, cap: int, slots: int, acc: List[int]) -> None:
        if rest == 0:
            out.append(Partition(acc))
            return
        if slots == 0:
            return
        for part in range(min(rest, cap), 0, -1):
            if part * slots < rest:
                break
            acc.append(part)
            rec(rest - part, part, slots - 1, acc)
            acc.pop()

    rec(m, max_part, max_length, [])
    return out
