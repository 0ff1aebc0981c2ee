"""Integer Laurent polynomials in one and two variables.

Both classes are immutable mappings from exponents to nonzero integer
coefficients.  Arithmetic is exact; no floating point is ever involved.
"""

from __future__ import annotations

from typing import Iterable, Mapping


def _clean(terms: Iterable[tuple]) -> dict:
    out: dict = {}
    for exp, c in terms:
        if c:
            out[exp] = out.get(exp, 0) + c
    return {e: c for e, c in out.items() if c}


class LaurentPoly1:
    """Laurent polynomial in a single variable (by default ``A``)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _clean((int(e), int(c)) for e, c in items)
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly1":
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly1":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def __add__(self, other):
        other = _coerce1(other)
        return LaurentPoly1(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly1({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce1(other))

    def __rsub__(self, other):
        return _coerce1(other) - self

    def __mul__(self, other):
        other = _coerce1(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly1(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPoly1({-e * -n: c ** -n})
        result = LaurentPoly1.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: "LaurentPoly1") -> "LaurentPoly1":
        """Exact division; raises ``ArithmeticError`` on a nonzero remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly1()
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        lead_e = other.max_degree()
        lead_c = other._terms[lead_e]
        floor = self.min_degree() - other.min_degree()
        while rem:
            top = max(rem)
            shift = top - lead_e
            q, r = divmod(rem[top], lead_c)
            if r or shift < floor:
                raise ArithmeticError("inexact Laurent division")
            quot[shift] = q
            for e, c in other._terms.items():
                k = e + shift
                v = rem.get(k, 0) - q * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly1(quot)

    def substitute_power(self, k: int) -> "LaurentPoly1":
        """Return p(A**k); ``k = -1`` inverts the variable."""
        return LaurentPoly1({e * k: c for e, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1.const(other)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly1({self.format()})"

    def format(self, var: str = "A") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                pw = var if e == 1 else f"{var}^{e}"
                body = pw if mag == 1 else f"{mag}*{pw}"
            parts.append(("-" if c < 0 else "+") + body)
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s

    def lines(self) -> list[str]:
        """``exponent:coefficient`` lines in increasing exponent order."""
        return [f"{e}:{c}" for e, c in self.items()]


class LaurentPoly2:
    """Laurent polynomial in ``a`` and ``z`` keyed by ``(a_exp, z_exp)``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _clean(((int(e[0]), int(e[1])), int(c)) for e, c in items)
        self._hash = None

    @classmethod
    def monomial(cls, a_exp: int, z_exp: int, coeff: int = 1) -> "LaurentPoly2":
        return cls({(a_exp, z_exp): coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def deg_a(self) -> int:
        """Largest ``a``-exponent carrying a nonzero coefficient."""
        return max(e[0] for e in self._terms)

    def min_deg_a(self) -> int:
        return min(e[0] for e in self._terms)

    def __add__(self, other):
        other = _coerce2(other)
        return LaurentPoly2(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce2(other))

    def __rsub__(self, other):
        return _coerce2(other) - self

    def __mul__(self, other):
        other = _coerce2(other)
        out: dict = {}
        for (a1, z1), c1 in self._terms.items():
            for (a2, z2), c2 in other._terms.items():
                k = (a1 + a2, z1 + z2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly2.const(1)
        for _ in range(n):
            result = result * self
        return result

    def invert_a(self) -> "LaurentPoly2":
        return LaurentPoly2({(-a, z): c for (a, z), c in self._terms.items()})

    def negate_z(self) -> "LaurentPoly2":
        return LaurentPoly2({(a, z): -c if z % 2 else c for (a, z), c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __repr__(self):
        body = " ".join(f"{c:+d}*a^{a}*z^{z}" for (a, z), c in self.items()) or "0"
        return f"LaurentPoly2({body})"

    def lines(self) -> list[str]:
        """``a-exp z-exp coeff`` lines sorted by (a, z)."""
        return [f"{a} {z} {c}" for (a, z), c in self.items()]


def _coerce1(x) -> LaurentPoly1:
    if isinstance(x, LaurentPoly1):
        return x
    if isinstance(x, int):
        return LaurentPoly1.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a LaurentPoly1")


def _coerce2(x) -> LaurentPoly2:
    if isinstance(x, LaurentPoly2):
        return x
    if isinstance(x, int):
        return LaurentPoly2.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a LaurentPoly2")
