"""Exact Laurent polynomials with integer coefficients in one variable."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Sparse integer Laurent polynomial ∑ c_k x^k.

    Zero coefficients are never stored. Instances are treated as immutable and
    are hashable. `var` only affects printing.
    """

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "x"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for k, c in items:
            acc[int(k)] = acc.get(int(k), 0) + int(c)
        self._terms = {k: c for k, c in acc.items() if c}
        self.var = var

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "x") -> "LaurentPoly":
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "x") -> "LaurentPoly":
        return cls({0: c}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, k: int) -> int:
        return self._terms.get(k, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def __add__(self, other):
        other = _coerce(other, self.var)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-_coerce(other, self.var))

    def __rsub__(self, other):
        return _coerce(other, self.var) - self

    def __mul__(self, other):
        other = _coerce(other, self.var)
        out: dict[int, int] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                out[a + b] = out.get(a + b, 0) + ca * cb
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({-k * (-e): c ** (-e)}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def scale_exponents(self, factor: int) -> "LaurentPoly":
        """Substitute x ↦ x^factor (factor may be negative)."""
        return LaurentPoly({e * factor: c for e, c in self._terms.items()}, self.var)

    def divide_exponents(self, d: int) -> "LaurentPoly":
        """Substitute x^d ↦ x; every exponent must be divisible by d."""
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(e, d)
            if r:
                raise ValueError(f"exponent {e} not divisible by {d}")
            out[q] = c
        return LaurentPoly(out, self.var)

    def mirror(self) -> "LaurentPoly":
        return self.scale_exponents(-1)

    def with_var(self, var: str) -> "LaurentPoly":
        return LaurentPoly(self._terms, var)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"LaurentPoly({self._terms!r}, var={self.var!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            c = self._terms[k]
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                pw = self.var if k == 1 else f"{self.var}^{k}"
                body = pw if mag == 1 else f"{mag}*{pw}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(x, var: str) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x, var)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")
