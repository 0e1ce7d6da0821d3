"""Exact noncommutative polynomial arithmetic over the integers.

Elements live in the free unital ring Z<x_1, ..., x_n, t, t^-1> on chord
symbols and a basepoint symbol t, subject to the single relation
t*t^-1 = t^-1*t = 1.  A polynomial is a finite sum of monomials; a monomial
is an integer coefficient times an ordered word of symbols.  Symbols are
plain strings; "t" and "t^-1" are reserved for the basepoint.

Besides ring arithmetic the module provides the two evaluation maps used by
linearization: `evaluate` (apply a scalar value to every symbol) and
`s_linear_part` (the coefficient of the first-order term after substituting
x -> s*x + eps(x) on chords, computed positionally so the bookkeeping
variable s never needs to exist).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotAUnit, UnknownGenerator

T_SYMBOL = "t"
T_INV_SYMBOL = "t^-1"

_NAT_SPLIT = re.compile(r"(\d+)")


def is_basepoint(symbol: str) -> bool:
    return symbol == T_SYMBOL or symbol == T_INV_SYMBOL


def symbol_sort_key(symbol: str):
    """Total order on symbols: t < t^-1 < chords in natural name order.

    Natural order compares digit runs numerically, so a2 < a10.
    """
    if symbol == T_SYMBOL:
        return (0,)
    if symbol == T_INV_SYMBOL:
        return (1,)
    parts = tuple(
        (0, int(run)) if run.isdigit() else (1, run)
        for run in _NAT_SPLIT.split(symbol)
        if run != ""
    )
    return (2, parts)


def word_sort_key(word: tuple[str, ...]):
    """Length-lexicographic order on words, used for canonical term order."""
    return (len(word), tuple(symbol_sort_key(x) for x in word))


def _normalize_word(word: Iterable[str]) -> tuple[str, ...]:
    # Cancel adjacent t / t^-1 pairs; a single stack pass suffices.
    out: list[str] = []
    for x in word:
        if out and (
            (out[-1] == T_SYMBOL and x == T_INV_SYMBOL)
            or (out[-1] == T_INV_SYMBOL and x == T_SYMBOL)
        ):
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Poly:
    """Immutable integer-coefficient noncommutative polynomial.

    Normalized form: no zero coefficients, words carry no adjacent
    t, t^-1 pair.  Equality and hashing are by value.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[str, ...], int] | None = None):
        normalized: dict[tuple[str, ...], int] = {}
        if terms:
            for word, coeff in terms.items():
                if coeff == 0:
                    continue
                w = _normalize_word(word)
                c = normalized.get(w, 0) + coeff
                if c:
                    normalized[w] = c
                elif w in normalized:
                    del normalized[w]
        self._terms = normalized

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly({(): 1})

    @staticmethod
    def constant(c: int) -> "Poly":
        return Poly({(): c})

    @staticmethod
    def gen(name: str) -> "Poly":
        return Poly({(name,): 1})

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> dict[tuple[str, ...], int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[str, ...], int]]:
        return sorted(self._terms.items(), key=lambda item: word_sort_key(item[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def symbols(self) -> set[str]:
        out: set[str] = set()
        for word in self._terms:
            out.update(word)
        return out

    def chord_symbols(self) -> set[str]:
        return {x for x in self.symbols() if not is_basepoint(x)}

    def constant_coefficient(self) -> int:
        return self._terms.get((), 0)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            c = out.get(word, 0) + coeff
            if c:
                out[word] = c
            elif word in out:
                del out[word]
        result = Poly.zero()
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        result = Poly.zero()
        result._terms = {w: -c for w, c in self._terms.items()}
        return result

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[str, ...], int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = _normalize_word(w1 + w2)
                c = out.get(w, 0) + c1 * c2
                if c:
                    out[w] = c
                elif w in out:
                    del out[w]
        result = Poly.zero()
        result._terms = out
        return result

    def __rmul__(self, other) -> "Poly":
        # Coefficients are central, so scalar multiplication commutes.
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly<{format_poly(self)}>"


def _coerce(value) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly.constant(value)
    return NotImplemented


def gen(name: str) -> Poly:
    return Poly.gen(name)


t_gen = Poly.gen(T_SYMBOL)
t_inv_gen = Poly.gen(T_INV_SYMBOL)


def format_monomial(word: tuple[str, ...], coeff: int) -> str:
    if not word:
        return str(coeff)
    body = "*".join(word)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}*{body}"


def format_poly(p: Poly) -> str:
    """Canonical text form: terms in length-lex order, '+'/'-' separated."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    pieces = [format_monomial(*terms[0])]
    for word, coeff in terms[1:]:
        if coeff < 0:
            pieces.append(" - " + format_monomial(word, -coeff))
        else:
            pieces.append(" + " + format_monomial(word, coeff))
    return "".join(pieces)


def degree_of_word(word: Iterable[str], grading: Mapping[str, int]) -> int:
    """Sum of symbol gradings along the word; t and t^-1 contribute 0."""
    total = 0
    for x in word:
        if is_basepoint(x):
            continue
        if x not in grading:
            raise UnknownGenerator(f"no grading for symbol {x!r}")
        total += grading[x]
    return total


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def unit_inverse(p: Poly) -> Poly:
    """Inverse of a unit.  Units of the free ring are +-(t^k), k in Z."""
    terms = list(p._terms.items())
    if len(terms) != 1:
        raise NotAUnit(f"{p} is not a unit")
    word, coeff = terms[0]
    if coeff not in (1, -1) or any(not is_basepoint(x) for x in word):
        raise NotAUnit(f"{p} is not a unit")
    inv_word = tuple(
        T_SYMBOL if x == T_INV_SYMBOL else T_INV_SYMBOL for x in reversed(word)
    )
    return Poly({inv_word: coeff})


def substitute(p: Poly, images: Mapping[str, Poly | int]) -> Poly:
    """Apply the unital ring homomorphism sending generators to `images`.

    Every chord symbol occurring in p needs an image; t defaults to itself.
    If t^-1 occurs, the image of t must be a unit.
    """
    image_polys: dict[str, Poly] = {}
    for name, value in images.items():
        image_polys[name] = value if isinstance(value, Poly) else Poly.constant(value)
    t_image = image_polys.get(T_SYMBOL, t_gen)
    t_inv_image: Poly | None = None

    out = Poly.zero()
    for word, coeff in p._terms.items():
        factor = Poly.constant(coeff)
        for x in word:
            if x == T_SYMBOL:
                factor = factor * t_image
            elif x == T_INV_SYMBOL:
                if t_inv_image is None:
                    t_inv_image = unit_inverse(t_image)
                factor = factor * t_inv_image
            else:
                if x not in image_polys:
                    raise UnknownGenerator(f"no substitution image for {x!r}")
                factor = factor * image_polys[x]
        out = out + factor
    return out


def _scalar_for(symbol: str, eps: Mapping[str, object]):
    """Value of a symbol under eps; t^-1 maps to the inverse of eps[t]."""
    if symbol == T_SYMBOL or symbol == T_INV_SYMBOL:
        if T_SYMBOL not in eps:
            raise UnknownGenerator("eps does not assign a value to t")
        value = eps[T_SYMBOL]
        if symbol == T_SYMBOL:
            return value
        if isinstance(value, Fraction):
            if value == 0:
                raise NotAUnit("eps(t) = 0 has no inverse")
            return 1 / value
        if value in (1, -1):
            return value
        raise NotAUnit(f"eps(t) = {value} is not invertible over Z")
    if symbol not in eps:
        raise UnknownGenerator(f"eps does not assign a value to {symbol!r}")
    return eps[symbol]


def evaluate(p: Poly, eps: Mapping[str, object]):
    """Ring-map evaluation: each symbol is replaced by its eps value."""
    total = 0
    for word, coeff in p._terms.items():
        value = coeff
        for x in word:
            value = value * _scalar_for(x, eps)
        total += value
    return total


def s_linear_part(p: Poly, eps: Mapping[str, object]) -> dict[str, object]:
    """Coefficient vector of the linear term after x -> s*x + eps(x).

    Chord letters carry the substitution; basepoint letters act as the
    scalar eps(t)^{+-1}.  For each monomial c*x_1...x_m and each position j
    holding a chord, the product c * prod_{l != j} eps(x_l) is added to the
    entry of x_j.  Every chord occurring in p gets an entry, possibly zero.
    """
    out: dict[str, object] = {}
    for word in p._terms:
        for x in word:
            if not is_basepoint(x):
                out.setdefault(x, 0)
    for word, coeff in p._terms.items():
        scalars = [_scalar_for(x, eps) for x in word]
        for j, x in enumerate(word):
            if is_basepoint(x):
                continue
            value = coeff
            for l, s in enumerate(scalars):
                if l != j:
                    value = value * s
            out[x] = out[x] + value
    return out
