"""Exact single-variable Laurent polynomials with integer coefficients."""

from __future__ import annotations

import re
from typing import Mapping


class LaurentPoly:
    """Immutable Laurent polynomial in ``A``; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {int(k): int(v) for k, v in (terms or {}).items() if v}
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of :meth:`__str__`."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        terms: dict[int, int] = {}
        # split before each sign that is not part of an exponent
        for tok in re.split(r"(?<!\^)(?=[+-])", text):
            tok = tok.lstrip("+")
            if not tok:
                continue
            if "A" not in tok:
                coeff, exp = int(tok), 0
            else:
                c, _, e = tok.partition("A")
                coeff = {"": 1, "-": -1}.get(c.rstrip("*"), None)
                if coeff is None:
                    coeff = int(c.rstrip("*"))
                exp = int(e[1:]) if e.startswith("^") else 1
            terms[exp] = terms.get(exp, 0) + coeff
        return cls(terms)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: v * other for k, v in self._terms.items()})
        out: dict[int, int] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (k, v), = self._terms.items()
            if v not in (1, -1):
                raise ValueError("monomial is not a unit")
            return LaurentPoly({k * n: v ** (-n)})
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: v for e, v in self._terms.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """A -> 1/A, the effect of mirroring on the bracket."""
        return LaurentPoly({-e: v for e, v in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in sorted(self._terms.items(), reverse=True):
            if exp == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}A" + ("" if exp == 1 else f"^{exp}")
            parts.append(("-" if c < 0 else "+") + body)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __repr__(self):
        return f"LaurentPoly({self})"
