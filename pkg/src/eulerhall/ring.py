"""Exact arithmetic in the squarefree ring Z[x1, x2, ...] / (xi*xi = 0).

This is the even cohomology of a finite product of 2-spheres: one
commuting degree-one generator per sphere coordinate, with every square
vanishing, so only squarefree monomials survive a product.  The ring is
over countably many generators; any concrete element touches finitely
many, so no ambient dimension is ever fixed.

Representation: an element is a sparse map ``{frozenset of atom ids ->
nonzero int coefficient}``.  The empty frozenset is the constant monomial
(so ``{frozenset(): 1}`` is the unit) and the empty map is zero.
Coefficients are Python ints; matching counts grow factorially, so
fixed-width integers would overflow.  Elements are immutable after
construction and safe to share between workers.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import InvalidInput

Monomial = frozenset  # frozenset[int]: the squarefree support of one term


def _check_atom(a) -> int:
    if not isinstance(a, int) or isinstance(a, bool) or a < 1:
        raise InvalidInput(f"atom ids must be integers >= 1, got {a!r}")
    return a


class RingElement:
    """A sparse, immutable element of the squarefree ring."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        normalized: dict[frozenset, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, int) or isinstance(coeff, bool):
                    raise InvalidInput(f"coefficients must be ints, got {coeff!r}")
                if coeff == 0:
                    continue
                key = frozenset(_check_atom(a) for a in mono)
                normalized[key] = normalized.get(key, 0) + coeff
                if normalized[key] == 0:
                    del normalized[key]
        self._terms = normalized

    @classmethod
    def _raw(cls, terms: dict) -> "RingElement":
        # Trusted constructor: terms already canonical (frozenset keys,
        # no zero coefficients).
        elem = cls.__new__(cls)
        elem._terms = terms
        return elem

    @property
    def terms(self) -> Mapping[frozenset, int]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, atoms: Iterable[int]) -> int:
        """Coefficient of the monomial with the given support (0 if absent)."""
        return self._terms.get(frozenset(atoms), 0)

    def homogeneous_degree(self) -> int | None:
        """Common degree of all monomials, or None if zero or mixed."""
        degrees = {len(mono) for mono in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def support(self) -> frozenset:
        """Union of all atoms appearing in any monomial."""
        out: set = set()
        for mono in self._terms:
            out |= mono
        return frozenset(out)

    def __add__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = terms.get(mono, 0) + coeff
            if c:
                terms[mono] = c
            elif mono in terms:
                del terms[mono]
        return RingElement._raw(terms)

    def __neg__(self) -> "RingElement":
        return RingElement._raw({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        terms: dict[frozenset, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                if ma & mb:  # shared atom: the square kills the term
                    continue
                key = ma | mb
                c = terms.get(key, 0) + ca * cb
                if c:
                    terms[key] = c
                elif key in terms:
                    del terms[key]
        return RingElement._raw(terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def render(self) -> str:
        """Stable text form, e.g. ``2*x1*x2 + x3*x4``.

        Monomials are ordered by (degree, ascending atom tuple) so equal
        elements always render identically.
        """
        if not self._terms:
            return "0"
        pieces = []
        for mono in sorted(self._terms, key=lambda s: (len(s), tuple(sorted(s)))):
            coeff = self._terms[mono]
            body = "*".join(f"x{a}" for a in sorted(mono))
            if not body:
                text = str(abs(coeff))
            elif abs(coeff) == 1:
                text = body
            else:
                text = f"{abs(coeff)}*{body}"
            pieces.append(("-" if coeff < 0 else "+", text))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RingElement({self.render()})"


def zero() -> RingElement:
    return RingElement._raw({})


def one() -> RingElement:
    return RingElement._raw({frozenset(): 1})


def generator(a: int) -> RingElement:
    """The degree-one generator attached to sphere coordinate ``a``."""
    _check_atom(a)
    return RingElement._raw({frozenset((a,)): 1})


def monomial(atoms: Iterable[int], coeff: int = 1) -> RingElement:
    """The single-term element ``coeff * prod(x_a for a in atoms)``."""
    if coeff == 0:
        return zero()
    return RingElement._raw({frozenset(_check_atom(a) for a in atoms): coeff})


def add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def coeff(e: RingElement, atoms: Iterable[int]) -> int:
    return e.coeff(atoms)


def is_zero(e: RingElement) -> bool:
    return e.is_zero


def product_of_generators(seq: Iterable[int], n: int) -> RingElement:
    """Product x_{i1} * ... * x_{in} for an n-sequence over {1..n}.

    By the squarefree rule this is the full monomial x1*...*xn exactly
    when the sequence is a permutation of {1..n}, and zero otherwise.
    Agreement with the fold of ``mul`` over ``generator`` is part of the
    test suite, not assumed here.
    """
    ids = [_check_atom(a) for a in seq]
    if len(ids) != n:
        raise InvalidInput(f"expected a sequence of length {n}, got {len(ids)}")
    if any(a > n for a in ids):
        raise InvalidInput(f"sequence entries must lie in 1..{n}")
    if len(set(ids)) == n:
        return RingElement._raw({frozenset(ids): 1})
    return zero()
