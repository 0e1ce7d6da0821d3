"""Augmentations: verification, exhaustive enumeration, tangent spaces.

An augmentation is a unital ring map from the DGA to a commutative ring R
that vanishes on chords of nonzero degree, sends t to -1, and annihilates
the differential.  It is determined by its values on degree-0 chords, so
enumeration is a finite search over those coordinates; only the degree-1
differentials impose constraints (every monomial in d(a) for |a| != 1
contains a chord of nonzero degree and dies under evaluation).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from . import algebra
from .algebra import evaluate, s_linear_part, symbol_sort_key
from .dga import DGA
from .errors import (
    FieldRequired,
    InvalidParameter,
    InvalidValue,
    NotAnAugmentation,
    ParseError,
    SearchTooLarge,
    UnknownGenerator,
)
from .matrices import rank_mod_p, rank_rationals
from .rings import ZZ, RingDesc, Zmod

DEFAULT_SEARCH_CAP = 10**8


def search_cap_from_env(default: int = DEFAULT_SEARCH_CAP) -> int:
    """Enumeration cap, overridable via the LCH_SEARCH_CAP variable."""
    raw = os.environ.get("LCH_SEARCH_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidParameter(f"LCH_SEARCH_CAP={raw!r} is not an integer") from None


@dataclass(frozen=True)
class Augmentation:
    """Ring descriptor plus values on degree-0 chords; t always maps to -1.

    Values are stored canonically (ring-coerced, zeros dropped); chords of
    nonzero degree implicitly map to 0.
    """

    ring: RingDesc
    values: dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for name, value in self.values.items():
            v = self.ring.coerce(value)
            if not self.ring.is_zero(v):
                cleaned[name] = v
        object.__setattr__(self, "values", cleaned)

    @property
    def t_value(self):
        return self.ring.coerce(-1)

    def value_of(self, chord: str):
        return self.values.get(chord, self.ring.coerce(0))

    def eps_map(self, dga: DGA) -> dict[str, object]:
        """Full symbol->value map for evaluation against a specific DGA.

        Checks that assigned names are declared degree-0 chords.
        """
        grading = dga.grading
        for name, value in self.values.items():
            if name not in grading:
                raise UnknownGenerator(f"augmentation assigns unknown chord {name!r}")
            if grading[name] != 0 and not self.ring.is_zero(value):
                raise InvalidValue(
                    f"chord {name!r} has degree {grading[name]}; augmentations vanish there"
                )
        eps = {name: self.values.get(name, 0) if deg == 0 else 0 for name, deg in dga.chords}
        # t evaluates to -1 as a plain integer: exact in Z, congruent to the
        # canonical representative mod m, and Fraction-compatible over Q.
        eps[algebra.T_SYMBOL] = -1
        return eps

    def reduction(self, m: int) -> "Augmentation":
        """Compose with Z -> Z/m (only for integer-valued augmentations)."""
        if self.ring != ZZ:
            raise InvalidValue("reduction applies to integer augmentations")
        return Augmentation(ring=Zmod(m), values=dict(self.values))

    def literal(self) -> str:
        """Text form like 'a1=2, a3=1 @ Z'; zero values are omitted."""
        items = sorted(self.values.items(), key=lambda kv: symbol_sort_key(kv[0]))
        body = ", ".join(f"{k}={v}" for k, v in items)
        return f"{body} @ {self.ring}" if body else f"@ {self.ring}"

    def to_json_obj(self) -> dict:
        return {
            "ring": str(self.ring),
            "values": {k: str(v) for k, v in sorted(self.values.items(), key=lambda kv: symbol_sort_key(kv[0]))},
        }


def combine_values(v1: dict, v2: dict) -> dict:
    out = dict(v1)
    out.update(v2)
    return out


def parse_augmentation_literal(text: str, default_ring: RingDesc | None = None) -> Augmentation:
    """Parse 'a1=2, a2=-1 @ Z/5'.  The '@ ring' part is optional."""
    text = text.strip()
    ring = default_ring
    if "@" in text:
        body, _, ring_text = text.rpartition("@")
        parsed_ring = RingDesc.parse(ring_text)
        if ring is not None and parsed_ring != ring:
            raise ParseError(
                f"augmentation literal says ring {parsed_ring}, context says {ring}"
            )
        ring = parsed_ring
        text = body.strip()
    if ring is None:
        ring = ZZ
    values: dict[str, object] = {}
    if text:
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "=" not in chunk:
                raise ParseError(f"bad assignment {chunk!r} in augmentation literal")
            name, _, raw = chunk.partition("=")
            name = name.strip()
            raw = raw.strip()
            if not name.isidentifier() and "#" not in name:
                raise ParseError(f"bad chord name {name!r} in augmentation literal")
            try:
                value: object = Fraction(raw) if "/" in raw else int(raw)
            except ValueError:
                raise ParseError(f"bad value {raw!r} for {name!r}") from None
            if name in values:
                raise ParseError(f"chord {name!r} assigned twice")
            values[name] = value
    return Augmentation(ring=ring, values=values)


def is_augmentation(dga: DGA, aug: Augmentation) -> bool:
    """True iff evaluating every differential under aug gives 0 in the ring.

    All chords are checked, although only degree-1 differentials can fail
    on a validly graded DGA.
    """
    eps = aug.eps_map(dga)
    for chord in dga.diff:
        if not aug.ring.is_zero(evaluate(dga.differential(chord), eps)):
            return False
    return True


# ----------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------


def _compile_constraints(dga: DGA, variables: list[str]):
    """Degree-1 differentials as sparse polynomials in the degree-0 chords.

    Each constraint is (fire_depth, terms) with terms a list of
    (coefficient, variable-index tuple); t letters fold into the
    coefficient as factors of -1, and monomials containing a chord of
    nonzero degree are dropped (they evaluate to 0).
    """
    index = {name: i for i, name in enumerate(variables)}
    grading = dga.grading
    constraints = []
    for chord in dga.chords_of_degree(1):
        terms: list[tuple[int, tuple[int, ...]]] = []
        for word, coeff in dga.differential(chord).terms.items():
            c = coeff
            idxs: list[int] = []
            dead = False
            for x in word:
                if algebra.is_basepoint(x):
                    c = -c
                elif grading[x] != 0:
                    dead = True
                    break
                else:
                    idxs.append(index[x])
            if not dead:
                terms.append((c, tuple(idxs)))
        fire_depth = max((max(t[1]) for t in terms if t[1]), default=-1)
        constraints.append((fire_depth, terms))
    return constraints


def _enumerate(dga: DGA, ring: RingDesc, domain: list, cap: int) -> list[Augmentation]:
    variables = dga.chords_of_degree(0)
    size = len(domain) ** len(variables)
    if size > cap:
        raise SearchTooLarge(
            f"{len(domain)}^{len(variables)} = {size} assignments exceeds cap {cap}"
        )
    constraints = _compile_constraints(dga, variables)
    by_depth: dict[int, list] = {}
    for depth, terms in constraints:
        by_depth.setdefault(depth, []).append(terms)

    def holds(terms, assignment) -> bool:
        total = 0
        for c, idxs in terms:
            v = c
            for i in idxs:
                v *= assignment[i]
            total += v
        return ring.is_zero(total)

    # Constant constraints (no degree-0 variables) decide everything up front.
    for terms in by_depth.get(-1, []):
        if not holds(terms, []):
            return []

    results: list[Augmentation] = []
    n = len(variables)
    assignment: list = [0] * n

    def walk(depth: int):
        if depth == n:
            results.append(
                Augmentation(ring=ring, values=dict(zip(variables, assignment)))
            )
            return
        for value in domain:
            assignment[depth] = value
            if all(holds(terms, assignment) for terms in by_depth.get(depth, [])):
                walk(depth + 1)

    if n == 0:
        # No degree-0 chords: the empty assignment stands or falls with the
        # constant constraints checked above.
        return [Augmentation(ring=ring, values={})]
    walk(0)
    return results


def enumerate_augmentations(
    dga: DGA, ring: RingDesc, cap: int | None = None
) -> list[Augmentation]:
    """All augmentations over a finite ring Z/m, in lexicographic value order.

    The search is a depth-first walk of the value grid that prunes with each
    degree-1 constraint as soon as its variables are assigned; the output
    order is the same as filtering the full grid in lexicographic order.
    """
    if not ring.is_finite:
        raise InvalidParameter(f"enumeration needs a finite ring, got {ring}")
    cap = search_cap_from_env() if cap is None else cap
    return _enumerate(dga, ring, list(ring.elements()), cap)


def enumerate_augmentations_bounded(
    dga: DGA, bound: int, cap: int | None = None
) -> list[Augmentation]:
    """All integer augmentations with every value in [-bound, bound]."""
    if bound < 0:
        raise InvalidParameter("bound must be >= 0")
    cap = search_cap_from_env() if cap is None else cap
    return _enumerate(dga, ZZ, list(range(-bound, bound + 1)), cap)


# ----------------------------------------------------------------------
# tangent space of the augmentation variety
# ----------------------------------------------------------------------


def tangent_space_dim(dga: DGA, aug: Augmentation) -> int:
    """Dimension of the Zariski tangent space at a field-valued point.

    Equals dim A_0 minus the rank of the linearized boundary block from
    degree-1 chords to degree-0 chords over the field.
    """
    if not aug.ring.is_field:
        raise FieldRequired(f"tangent space needs a field, got {aug.ring}")
    if not is_augmentation(dga, aug):
        raise NotAnAugmentation("the given point is not on the augmentation variety")
    eps = aug.eps_map(dga)
    deg0 = dga.chords_of_degree(0)
    deg1 = dga.chords_of_degree(1)
    row_of = {name: i for i, name in enumerate(deg0)}
    block = [[0] * len(deg1) for _ in deg0]
    for j, chord in enumerate(deg1):
        for name, value in s_linear_part(dga.differential(chord), eps).items():
            i = row_of.get(name)
            if i is not None:
                block[i][j] = value
    if aug.ring.kind == "Q":
        rank = rank_rationals(block)
    else:
        rank = rank_mod_p(block, aug.ring.modulus)
    return len(deg0) - rank
