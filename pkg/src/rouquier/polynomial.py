"""Sparse multivariate polynomials with integer coefficients."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

Monomial = tuple[str, ...]


class FormalPolynomial:
    """Monomials are sorted tuples of variable names; zero terms are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            if c:
                key = tuple(sorted(mono))
                self._terms[key] = self._terms.get(key, 0) + int(c)
        self._terms = {m: c for m, c in self._terms.items() if c}

    @classmethod
    def monomial(cls, variables: Iterable[str], coeff: int = 1) -> "FormalPolynomial":
        return cls({tuple(variables): coeff})

    @classmethod
    def constant(cls, c: int) -> "FormalPolynomial":
        return cls({(): c})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = FormalPolynomial.constant(other)
        return isinstance(other, FormalPolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "FormalPolynomial") -> "FormalPolynomial":
        out = defaultdict(int, self._terms)
        for m, c in other._terms.items():
            out[m] += c
        return FormalPolynomial(out)

    def __neg__(self) -> "FormalPolynomial":
        return FormalPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "FormalPolynomial") -> "FormalPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "FormalPolynomial":
        if isinstance(other, int):
            return FormalPolynomial({m: c * other for m, c in self._terms.items()})
        out: dict[Monomial, int] = defaultdict(int)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out[tuple(sorted(m1 + m2))] += c1 * c2
        return FormalPolynomial(out)

    __rmul__ = __mul__

    def dump(self) -> str:
        """Canonical text: one ``coeff*var*var`` term per line, in sorted monomial order."""
        lines = []
        for m in sorted(self._terms):
            body = "*".join(m) if m else "1"
            lines.append(f"{self._terms[m]}*{body}")
        return "\n".join(lines) if lines else "0"

    def __repr__(self) -> str:
        return f"FormalPolynomial({self.dump().replace(chr(10), ' + ')})"
