"""Exact Laurent polynomials in one variable ``q`` with integer coefficients.

Values are immutable and kept in canonical sparse form: a mapping from
exponent to a nonzero Python ``int`` (so coefficients never overflow).

Convention on the variable
--------------------------
Throughout the package ``q`` is the *square root* of the classical
Kazhdan-Lusztig variable, i.e. the normalisation in which a KL polynomial
reads ``h_{x,w}(q) = q^(l(w)-l(x)) P_{x,w}(q^-2)``.  Only
:func:`fockkl.kl.KLTable.kl_p` returns polynomials in the classical variable.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = ["LaurentPoly", "q", "add", "mul", "bar", "eval_at", "substitute_neg_q"]

_EXP_BOUND = 2 ** 31

Scalar = Union[int, "LaurentPoly"]


def _check_exp(e: int) -> int:
    if not -_EXP_BOUND < e < _EXP_BOUND:
        raise OverflowError(f"exponent {e} out of range")
    return e


class LaurentPoly:
    """An element of Z[q, q^-1].

    >>> p = LaurentPoly({-1: 1, 2: 3}) + 2
    >>> str(p)
    'q^-1 + 2 + 3*q^2'
    >>> LaurentPoly.parse(str(p)) == p
    True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], int, None] = None):
        if terms is None:
            d: Dict[int, int] = {}
        elif isinstance(terms, int):
            d = {0: terms} if terms else {}
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            d = {}
            for e, c in items:
                e = _check_exp(int(e))
                c = d.get(e, 0) + int(c)
                if c:
                    d[e] = c
                else:
                    d.pop(e, None)
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d: Dict[int, int]) -> "LaurentPoly":
        # d must already be canonical (no zero coefficients)
        p = object.__new__(cls)
        p._terms = d
        p._hash = None
        return p

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls._raw({_check_exp(e): c} if c else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        """Terms in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of zero polynomial")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of zero polynomial")
        return min(self._terms)

    def is_polynomial(self) -> bool:
        """True when no negative powers of q occur."""
        return all(e >= 0 for e in self._terms)

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return self
            other = LaurentPoly._raw({0: other})
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        d = dict(self._terms)
        for e, c in other._terms.items():
            c += d.get(e, 0)
            if c:
                d[e] = c
            else:
                del d[e]
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({_check_exp(e + eb): c * cb for e, c in a.items()})
        if len(a) == 1:
            return other * self
        d: Dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                d[e] = d.get(e, 0) + ca * cb
        return LaurentPoly._raw({_check_exp(e): c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only units can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly._raw({_check_exp(e * k): c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({_check_exp(e + k): c for e, c in self._terms.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not other._terms:
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._terms)
        lo_b, hi_b = other.valuation(), other.degree()
        lead = other._terms[lo_b]
        top = self.degree() - hi_b if rem else 0
        quot: Dict[int, int] = {}
        while rem:
            lo = min(rem)
            e = lo - lo_b
            c, r = divmod(rem[lo], lead)
            if r or e > top:
                raise ArithmeticError("inexact division")
            quot[e] = c
            for eb, cb in other._terms.items():
                k = e + eb
                v = rem.get(k, 0) - c * cb
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quot)

    # -- substitutions ----------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The substitution q -> q^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def substitute_neg_q(self) -> "LaurentPoly":
        """The substitution q -> -q."""
        return LaurentPoly._raw({e: (-c if e & 1 else c) for e, c in self._terms.items()})

    def eval_at(self, x: int) -> int:
        if x == 1:
            return sum(self._terms.values())
        if x == -1:
            return sum(-c if e & 1 else c for e, c in self._terms.items())
        raise ValueError("only the specialisations q = 1 and q = -1 are supported")

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text and json ------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in sorted(self._terms.items()):
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(r"([+-])?(?:(\d+)(?:\*(q)(?:\^(-?\d+))?)?|(q)(?:\^(-?\d+))?)")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the textual form produced by ``str``, e.g. ``"q^-1 + 2 - 3*q^2"``."""
        s = "".join(text.split())
        if not s:
            raise ValueError("empty polynomial string")
        d: Dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            sign, num, q1, e1, q2, e2 = m.groups()
            if sign is None and not first:
                raise ValueError(f"missing operator in {text!r} at offset {pos}")
            if num is None and q2 is None:
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            c = -1 if sign == "-" else 1
            if num is not None:
                c *= int(num)
                e = (int(e1) if e1 is not None else 1) if q1 else 0
            else:
                e = int(e2) if e2 is not None else 1
            d[e] = d.get(e, 0) + c
            pos = m.end()
            first = False
        return cls(d)

    def to_json(self) -> Dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in obj.items()})


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
q = LaurentPoly._raw({1: 1})


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def eval_at(a: LaurentPoly, x: int) -> int:
    return a.eval_at(x)


def substitute_neg_q(a: LaurentPoly) -> LaurentPoly:
    return a.substitute_neg_q()


def neg_q_power(k: int) -> LaurentPoly:
    """(-q)^k for k >= 0."""
    return LaurentPoly._raw({k: -1 if k & 1 else 1})


def q_integer(k: int) -> LaurentPoly:
    """The balanced quantum integer [k] = q^(k-1) + q^(k-3) + ... + q^(1-k)."""
    return LaurentPoly._raw({k - 1 - 2 * j: 1 for j in range(k)})


def q_factorial(k: int) -> LaurentPoly:
    out = ONE
    for j in range(2, k + 1):
        out = out * q_integer(j)
    return out
