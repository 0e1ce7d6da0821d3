"""DGA data model, validation, and built-in constructors.

A DGA here is combinatorial input data: chords with integer gradings, a
basepoint symbol t of degree 0, and a degree -1 differential given on
generators as noncommutative polynomials.  The differential extends to
products by the signed Leibniz rule d(xy) = (dx)y + (-1)^{|x|} x (dy).

Built-ins:

* ``unknot``      -- one chord a, |a| = 1, da = t + 1.
* ``lambda0``     -- an 11-chord knot DGA whose integer augmentations eps_n
                     produce Z/n torsion in linearized homology.
* ``lambda_k(k)`` -- a (2k+11)-chord family placing the torsion in
                     gradings k and -k-1 (k = 0 is ``lambda0``).
* ``connected_sum`` and ``geography_dga`` assemble larger examples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import algebra
from .algebra import Poly, degree_of_word, gen, substitute, t_gen
from .errors import (
    InvalidParameter,
    UnknownGenerator,
    ValidationFailed,
)

_RESERVED = (algebra.T_SYMBOL, algebra.T_INV_SYMBOL)


@dataclass(frozen=True)
class DGA:
    """Chords with gradings, a basepoint t, and a differential.

    ``chords`` fixes the declaration order used everywhere downstream
    (matrix rows/columns, enumeration order, serialization).  ``diff``
    maps chord names to polynomials; omitted chords have zero
    differential.  ``tb`` is optional metadata; when absent it can be
    derived with :func:`euler_tb`.
    """

    name: str
    chords: tuple[tuple[str, int], ...]
    diff: dict[str, Poly] = field(default_factory=dict)
    tb: int | None = None

    def __post_init__(self):
        seen = set()
        for chord, _deg in self.chords:
            if chord in _RESERVED:
                raise InvalidParameter(f"chord name {chord!r} is reserved")
            if chord in seen:
                raise InvalidParameter(f"duplicate chord {chord!r}")
            seen.add(chord)
        cleaned = {}
        for chord, p in self.diff.items():
            if chord not in seen:
                raise UnknownGenerator(f"differential given for undeclared chord {chord!r}")
            for x in p.chord_symbols():
                if x not in seen:
                    raise UnknownGenerator(
                        f"differential of {chord!r} uses undeclared symbol {x!r}"
                    )
            if not p.is_zero():
                cleaned[chord] = p
        object.__setattr__(self, "diff", cleaned)

    # -- lookups ----------------------------------------------------------

    @property
    def grading(self) -> dict[str, int]:
        return dict(self.chords)

    def chord_names(self) -> list[str]:
        return [name for name, _ in self.chords]

    def degree_of(self, chord: str) -> int:
        for name, deg in self.chords:
            if name == chord:
                return deg
        raise UnknownGenerator(f"unknown chord {chord!r}")

    def chords_of_degree(self, degree: int) -> list[str]:
        return [name for name, deg in self.chords if deg == degree]

    def differential(self, chord: str) -> Poly:
        if chord not in {name for name, _ in self.chords}:
            raise UnknownGenerator(f"unknown chord {chord!r}")
        return self.diff.get(chord, Poly.zero())

    def tb_value(self) -> int:
        return self.tb if self.tb is not None else euler_tb(self)


@dataclass(frozen=True)
class ValidationReport:
    grading_ok: bool
    d_squared_ok: bool
    failures: tuple[tuple[str, Poly], ...]

    @property
    def ok(self) -> bool:
        return self.grading_ok and self.d_squared_ok


def differentiate(dga: DGA, p: Poly) -> Poly:
    """Extend the differential to a polynomial by the signed Leibniz rule."""
    grading = dga.grading
    out = Poly.zero()
    for word, coeff in p.terms.items():
        prefix_degree = 0
        for j, x in enumerate(word):
            if not algebra.is_basepoint(x):
                dx = dga.diff.get(x)
                if dx is not None:
                    sign = -1 if prefix_degree % 2 else 1
                    term = Poly({word[:j]: coeff * sign}) * dx * Poly({word[j + 1 :]: 1})
                    out = out + term
                prefix_degree += grading[x]
    return out


def validate(dga: DGA) -> ValidationReport:
    """Check gradings (each monomial of d(a) has degree |a|-1) and d^2 = 0."""
    grading = dga.grading
    failures: list[tuple[str, Poly]] = []
    grading_ok = True
    d_squared_ok = True
    for chord, deg in dga.chords:
        p = dga.diff.get(chord)
        if p is None:
            continue
        bad_terms = {
            word: coeff
            for word, coeff in p.terms.items()
            if degree_of_word(word, grading) != deg - 1
        }
        if bad_terms:
            grading_ok = False
            failures.append((chord, Poly(bad_terms)))
        dd = differentiate(dga, p)
        if not dd.is_zero():
            d_squared_ok = False
            failures.append((chord, dd))
    return ValidationReport(grading_ok, d_squared_ok, tuple(failures))


def euler_tb(dga: DGA) -> int:
    """Signed chord count sum((-1)^{|a|}); equals tb for these knot DGAs."""
    return sum(1 if deg % 2 == 0 else -1 for _, deg in dga.chords)


# ----------------------------------------------------------------------
# built-in DGAs
# ----------------------------------------------------------------------


def unknot() -> DGA:
    """One right cusp: a single chord a with |a| = 1 and da = t + 1."""
    return DGA(
        name="unknot",
        chords=(("a", 1),),
        diff={"a": t_gen + Poly.one()},
    )


def lambda0() -> DGA:
    """11-chord knot DGA with a two-branch augmentation variety.

    Gradings: a1..a6 in degree 0, a7..a10 in degree 1, a11 in degree -1.
    The integer augmentations eps_n = (n,-1,1,0,0,1) with eps_n(t) = -1
    give linearized homology with Z/n torsion in degrees 0 and -1.
    """
    a = {i: gen(f"a{i}") for i in range(1, 12)}
    one = Poly.one()
    diff = {
        "a2": a[4] * a[11],
        "a5": -(a[11] * a[1]),
        "a7": -(a[1] * a[4]),
        "a8": t_gen + a[1] + a[3] + a[1] * a[2] * a[3] + a[7] * a[11] * a[3],
        "a9": one - (one + a[3] * a[2]) * a[1] * a[6] - a[3] * (a[4] + a[6] + a[4] * a[5] * a[6]),
        "a10": one - a[4] - a[6] - a[6] * a[5] * a[4] - a[6] * a[11] * a[7],
    }
    chords = tuple(
        (f"a{i}", 0 if i <= 6 else (1 if i <= 10 else -1)) for i in range(1, 12)
    )
    return DGA(name="lambda0", chords=chords, diff=diff)


def lambda_k(k: int) -> DGA:
    """The (2k+11)-chord family member, k >= 1.

    Gradings: |a5| = k+1, |a4| = k, |a7| = -k, |a6| = -k-1; a8, a9 and the
    right-cusp chain a_{k+11}..a_{2k+11} sit in degree 1; a1, a2, a3 and
    the crossing chain a_{10}..a_{k+10} sit in degree 0.  Augmentations are
    cut out by a1 + a3 + a1*a2*a3 = 1 with the chain chords sent to 1, and
    eps_n := (a1, a2, a3) = (n, -1, 1) puts Z/n torsion in gradings k
    and -k-1 (for k = 1 the degree-k copy merges into degree 1).
    """
    if k < 1:
        raise InvalidParameter(f"lambda_k needs k >= 1, got {k}")
    n_chords = 2 * k + 11
    a = {i: gen(f"a{i}") for i in range(1, n_chords + 1)}
    one = Poly.one()
    diff: dict[str, Poly] = {
        "a2": a[4] * a[6],
        "a5": -(a[1] * a[4]),
        "a7": ((-1) ** (k + 1)) * (a[6] * a[1]),
        "a8": t_gen + a[1] + a[3] + a[1] * a[2] * a[3] + a[5] * a[6] * a[3],
        "a9": one - (a[1] + a[3] + a[3] * a[2] * a[1] + a[3] * a[4] * a[7]) * a[10],
        f"a{2 * k + 11}": one - a[k + 10] * (one + a[6] * a[5] + a[7] * a[4]),
    }
    for i in range(k):
        diff[f"a{k + 11 + i}"] = one - a[10 + i] * a[11 + i]

    grading = {1: 0, 2: 0, 3: 0, 4: k, 5: k + 1, 6: -k - 1, 7: -k, 8: 1, 9: 1}
    for i in range(10, k + 11):
        grading[i] = 0
    for i in range(k + 11, 2 * k + 12):
        grading[i] = 1
    chords = tuple((f"a{i}", grading[i]) for i in range(1, n_chords + 1))
    return DGA(name=f"lambda{k}", chords=chords, diff=diff)


# ----------------------------------------------------------------------
# connected sums
# ----------------------------------------------------------------------


def _fresh_suffix(taken: set[str], names: list[str]) -> str:
    j = 2
    while any(f"{name}#{j}" in taken for name in names):
        j += 1
    return f"#{j}"


def _fresh_c_name(taken: set[str]) -> str:
    if "c" not in taken:
        return "c"
    j = 2
    while f"c#{j}" in taken:
        j += 1
    return f"c#{j}"


def _connected_sum_parts(d1: DGA, d2: DGA) -> tuple[DGA, dict[str, str], str]:
    """Sum DGA plus the rename map applied to d2's chords and the c name."""
    for d in (d1, d2):
        report = validate(d)
        if not report.ok:
            raise ValidationFailed(f"connected_sum needs valid inputs; {d.name} fails")

    taken = set(d1.chord_names())
    names2 = d2.chord_names()
    rename: dict[str, str] = {}
    if taken & set(names2):
        suffix = _fresh_suffix(taken | set(names2), names2)
        rename = {name: name + suffix for name in names2}
    else:
        rename = {name: name for name in names2}
    c_name = _fresh_c_name(taken | set(rename.values()))
    c = gen(c_name)

    # d1 keeps its chords; t is replaced by c in its differentials.
    diff: dict[str, Poly] = {}
    images1: dict[str, Poly] = {name: gen(name) for name in d1.chord_names()}
    images1[algebra.T_SYMBOL] = c
    for chord, p in d1.diff.items():
        diff[chord] = substitute(p, images1)

    # d2's chords are renamed; its basepoint t' becomes -t*c.
    images2: dict[str, Poly] = {name: gen(rename[name]) for name in names2}
    images2[algebra.T_SYMBOL] = -(t_gen * c)
    for chord, p in d2.diff.items():
        diff[rename[chord]] = substitute(p, images2)

    chords = (
        tuple(d1.chords)
        + tuple((rename[name], deg) for name, deg in d2.chords)
        + ((c_name, 0),)
    )
    summed = DGA(name=f"{d1.name}#{d2.name}", chords=chords, diff=diff)
    return summed, rename, c_name


def connected_sum(d1: DGA, d2: DGA) -> DGA:
    """Connected sum: disjoint chords plus one new degree-0 chord c.

    In d1's differentials t is replaced by c; in d2's, t is replaced by
    -t*c; c itself is closed.  Chord name collisions are resolved by
    suffixing d2's chords with ``#j``.
    """
    return _connected_sum_parts(d1, d2)[0]


def connected_sum_augmented(d1: DGA, aug1, d2: DGA, aug2):
    """Connected sum together with the combined augmentation.

    Both augmentations must share a ring and send t to -1; the combined
    augmentation keeps each summand's values (under the renaming) and
    sends the new chord c to -1.
    """
    from .augment import Augmentation, combine_values
    from .errors import RingMismatch

    if aug1.ring != aug2.ring:
        raise RingMismatch(f"augmentation rings differ: {aug1.ring} vs {aug2.ring}")
    summed, rename, c_name = _connected_sum_parts(d1, d2)
    values = combine_values(aug1.values, {rename[k]: v for k, v in aug2.values.items()})
    values[c_name] = aug1.ring.coerce(-1)
    return summed, Augmentation(ring=aug1.ring, values=values)


# ----------------------------------------------------------------------
# geography construction
# ----------------------------------------------------------------------


def _family_member_for_grading(i: int) -> tuple[DGA, int]:
    """Family member whose eps_n torsion slot sits in grading i (i != 0, 1)."""
    if i > 1:
        return lambda_k(i), i
    if i == -1:
        return lambda0(), -1
    return lambda_k(-i - 1), i


def _eps_n_values(base: DGA, n: int) -> dict[str, int]:
    """The eps_n assignment for a family member (lambda0 or lambda_k)."""
    values = {"a1": n, "a2": -1, "a3": 1}
    if base.name == "lambda0":
        values["a6"] = 1
    else:
        for chord in base.chords_of_degree(0):
            if chord not in ("a1", "a2", "a3"):
                values[chord] = 1
    return values


def geography_dga(i: int, m: int, torsions: list[int]):
    """DGA + integer augmentation with LCH_i = Z^m + Z/n_1 + ... + Z/n_k.

    Built as an iterated connected sum of m + len(torsions) copies of the
    family member whose torsion slot is grading i: the first m copies
    carry eps_0 (contributing Z each) and the rest carry eps_{n_j}.
    Gradings 0 and 1 are excluded (duality pins them down).
    """
    from .augment import Augmentation
    from .rings import ZZ

    if i in (0, 1):
        raise InvalidParameter("grading 0 and 1 are excluded (duality constraints)")
    if m < 0:
        raise InvalidParameter("free rank must be >= 0")
    for n in torsions:
        if n < 2:
            raise InvalidParameter(f"torsion orders must be >= 2, got {n}")
    if m + len(torsions) < 1:
        raise InvalidParameter("need at least one summand")

    base, _ = _family_member_for_grading(i)
    ns = [0] * m + list(torsions)

    result = base
    aug = Augmentation(ring=ZZ, values=_eps_n_values(base, ns[0]))
    for n in ns[1:]:
        copy_aug = Augmentation(ring=ZZ, values=_eps_n_values(base, n))
        result, aug = connected_sum_augmented(result, aug, base, copy_aug)
    result = DGA(name=f"geography[{i}]", chords=result.chords, diff=result.diff, tb=result.tb)
    return result, aug
