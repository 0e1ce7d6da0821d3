"""Structural checks on linearized homology.

These operations package the theorems that constrain what linearized
homology can look like: Sabloff duality over fields, the rigidity of
knots with all chords in nonnegative degree, the dimension obstruction to
a filling inducing an augmentation, torsion evidence scans over several
primes, and additivity of homology under connected sums away from
degrees 0 and 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .augment import (
    Augmentation,
    enumerate_augmentations,
    enumerate_augmentations_bounded,
)
from .dga import DGA, connected_sum_augmented
from .errors import FieldRequired, RingMismatch
from .homology import HomologyGroup, field_homology, integral_homology
from .linearize import linearized_differential
from .rings import ZZ, Zmod


def _field_dims(dga: DGA, aug: Augmentation) -> dict[int, int]:
    if not aug.ring.is_field:
        raise FieldRequired(f"a field augmentation is required, got {aug.ring}")
    complex_ = linearized_differential(dga, aug)
    return field_homology(complex_, aug.ring)


# ----------------------------------------------------------------------
# Sabloff duality
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class DualityReport:
    """Field dimensions of LCH paired degree against minus-degree.

    Duality holds when dim_i = dim_{-i} for every i != 1 and the degree-1
    dimension exceeds the degree minus-1 dimension by exactly one.
    """

    field_name: str
    dims: dict[int, int]
    pairs: tuple[tuple[int, int, int], ...]  # (i, dim_i, dim_{-i}) for i >= 0
    duality_ok: bool
    degree1_excess: int

    def format_report(self) -> str:
        lines = [f"field {self.field_name}"]
        for i, a, b in self.pairs:
            mark = "" if (a == b if i != 1 else a == b + 1) else "  <-- mismatch"
            lines.append(f"dim_{i} = {a}   dim_{-i} = {b}{mark}")
        lines.append(
            "duality holds" if self.duality_ok else "duality FAILS"
        )
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "field": self.field_name,
            "dims": {str(d): v for d, v in sorted(self.dims.items(), reverse=True)},
            "duality_ok": self.duality_ok,
            "degree1_excess": self.degree1_excess,
        }


def sabloff_check(dga: DGA, aug: Augmentation) -> DualityReport:
    """Dimension symmetry dim_i = dim_{-i} (i != 1), dim_1 = dim_{-1} + 1."""
    dims = _field_dims(dga, aug)
    top = max((abs(d) for d in dims), default=1)
    top = max(top, 1)
    pairs = []
    ok = True
    for i in range(top + 1):
        a = dims.get(i, 0)
        b = dims.get(-i, 0)
        pairs.append((i, a, b))
        if i == 1:
            ok = ok and a == b + 1
        else:
            ok = ok and a == b
    return DualityReport(
        field_name=str(aug.ring),
        dims=dims,
        pairs=tuple(pairs),
        duality_ok=ok,
        degree1_excess=dims.get(1, 0) - dims.get(-1, 0),
    )


# ----------------------------------------------------------------------
# positivity
# ----------------------------------------------------------------------


class Positivity(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not applicable"


def positivity_check(dga: DGA, aug: Augmentation) -> Positivity:
    """For all-nonnegative gradings, LCH must be Z in degree 1 and
    Z^{tb+1} in degree 0, nothing else.

    Returns NOT_APPLICABLE when some chord has negative grading.  The
    augmentation must be integer-valued (the statement is integral).
    """
    if aug.ring != ZZ:
        raise RingMismatch("positivity_check is an integral statement; use a Z augmentation")
    if any(deg < 0 for _, deg in dga.chords):
        return Positivity.NOT_APPLICABLE
    homology = integral_homology(linearized_differential(dga, aug))
    tb = dga.tb_value()
    expected = {1: HomologyGroup(free_rank=1)}
    if tb + 1 > 0:
        expected[0] = HomologyGroup(free_rank=tb + 1)
    matches = homology.groups == expected
    return Positivity.HOLDS if matches else Positivity.FAILS


# ----------------------------------------------------------------------
# filling obstruction
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ObstructionVerdict:
    """Total field dimension of LCH vs. what a filling would force.

    A filling of a knot with odd tb is a once-punctured genus-(tb+1)/2
    surface, so relative homology has total dimension tb + 2 and the
    Seidel isomorphism forces the LCH dimensions to add up to exactly
    that.  `geometric_possible` False is conclusive; True only means this
    obstruction is silent.  Even tb admits no orientable filling at all.
    """

    field_name: str
    total_dim: int
    expected_filling_dim: int | None
    geometric_possible: bool
    reason: str

    def format_report(self) -> str:
        lines = [
            f"field {self.field_name}",
            f"total LCH dimension: {self.total_dim}",
            f"filling would give:  {self.expected_filling_dim}",
            ("no obstruction (filling not excluded)" if self.geometric_possible else f"NOT geometric: {self.reason}"),
        ]
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "field": self.field_name,
            "total_dim": self.total_dim,
            "expected_filling_dim": self.expected_filling_dim,
            "geometric_possible": self.geometric_possible,
            "reason": self.reason,
        }


def filling_obstruction(dga: DGA, aug: Augmentation) -> ObstructionVerdict:
    dims = _field_dims(dga, aug)
    total = sum(dims.values())
    tb = dga.tb_value()
    if tb % 2 == 0:
        return ObstructionVerdict(
            field_name=str(aug.ring),
            total_dim=total,
            expected_filling_dim=None,
            geometric_possible=False,
            reason=f"tb = {tb} is even: 2g - 1 = tb has no integer solution, "
            "so no orientable exact filling exists",
        )
    expected = tb + 2
    possible = total == expected
    reason = (
        "dimension matches a once-punctured genus-%d filling" % ((tb + 1) // 2)
        if possible
        else f"total dimension {total} != {expected} forced by the Seidel isomorphism"
    )
    return ObstructionVerdict(
        field_name=str(aug.ring),
        total_dim=total,
        expected_filling_dim=expected,
        geometric_possible=possible,
        reason=reason,
    )


# ----------------------------------------------------------------------
# torsion scan
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class DimClass:
    dims: tuple[tuple[int, int], ...]  # sorted (degree, dim) pairs
    count: int
    example: str  # literal of one augmentation in the class


@dataclass(frozen=True)
class TorsionScanReport:
    """Evidence table: mod-p dimension classes and bounded integral torsion.

    A prime is flagged when different Z/p augmentations give different
    dimension vectors -- the signature that integral torsion can hide
    behind field-level jumps.
    """

    dga_name: str
    prime_classes: dict[int, tuple[DimClass, ...]]
    flagged_primes: tuple[int, ...]
    bound: int | None
    integral_torsion: tuple[tuple[str, tuple[tuple[int, tuple[int, ...]], ...]], ...]
    torsion_free_count: int

    def format_report(self) -> str:
        lines = [f"torsion scan: {self.dga_name}"]
        for p in sorted(self.prime_classes):
            classes = self.prime_classes[p]
            flag = "  ** dimension jump **" if p in self.flagged_primes else ""
            lines.append(f"mod {p}: {len(classes)} dimension class(es){flag}")
            for cls in classes:
                dims = ", ".join(f"{d}:{v}" for d, v in cls.dims)
                lines.append(f"  {{{dims}}} x{cls.count}   e.g. {cls.example}")
        if self.bound is not None:
            lines.append(f"integer augmentations with |values| <= {self.bound}:")
            lines.append(f"  torsion-free: {self.torsion_free_count}")
            for literal, torsion in self.integral_torsion:
                parts = "; ".join(
                    f"H_{d} torsion {list(t)}" for d, t in torsion
                )
                lines.append(f"  {literal}: {parts}")
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "dga": self.dga_name,
            "primes": {
                str(p): [
                    {"dims": {str(d): v for d, v in cls.dims}, "count": cls.count, "example": cls.example}
                    for cls in classes
                ]
                for p, classes in self.prime_classes.items()
            },
            "flagged_primes": list(self.flagged_primes),
            "bound": self.bound,
            "integral_torsion": [
                {"augmentation": lit, "torsion": {str(d): list(t) for d, t in tors}}
                for lit, tors in self.integral_torsion
            ],
            "torsion_free_count": self.torsion_free_count,
        }


def torsion_scan(
    dga: DGA,
    primes: list[int],
    bound: int | None = None,
    cap: int | None = None,
) -> TorsionScanReport:
    prime_classes: dict[int, tuple[DimClass, ...]] = {}
    flagged = []
    for p in primes:
        ring = Zmod(p)
        if not ring.is_field:
            raise FieldRequired(f"{p} is not prime")
        groups: dict[tuple, list[Augmentation]] = {}
        for aug in enumerate_augmentations(dga, ring, cap=cap):
            dims = _field_dims(dga, aug)
            key = tuple(sorted(dims.items()))
            groups.setdefault(key, []).append(aug)
        classes = tuple(
            DimClass(dims=key, count=len(augs), example=augs[0].literal())
            for key, augs in sorted(groups.items())
        )
        prime_classes[p] = classes
        if len(classes) > 1:
            flagged.append(p)

    integral: list[tuple[str, tuple]] = []
    torsion_free = 0
    if bound is not None:
        for aug in enumerate_augmentations_bounded(dga, bound, cap=cap):
            homology = integral_homology(linearized_differential(dga, aug))
            torsion = tuple(
                (d, homology.group(d).torsion)
                for d in homology.degrees()
                if homology.group(d).torsion
            )
            if torsion:
                integral.append((aug.literal(), torsion))
            else:
                torsion_free += 1
    return TorsionScanReport(
        dga_name=dga.name,
        prime_classes=prime_classes,
        flagged_primes=tuple(flagged),
        bound=bound,
        integral_torsion=tuple(integral),
        torsion_free_count=torsion_free,
    )


# ----------------------------------------------------------------------
# connected-sum additivity
# ----------------------------------------------------------------------


def connected_sum_additivity_check(
    d1: DGA, aug1: Augmentation, d2: DGA, aug2: Augmentation
) -> bool:
    """Compare LCH of the sum with the degreewise direct sum, away from 0, 1.

    Both augmentations must be integer-valued over the same ring; the
    comparison is integral (free rank and invariant factors).
    """
    if aug1.ring != aug2.ring:
        raise RingMismatch(f"rings differ: {aug1.ring} vs {aug2.ring}")
    if aug1.ring != ZZ:
        raise RingMismatch("additivity is compared integrally; use Z augmentations")
    summed, combined = connected_sum_augmented(d1, aug1, d2, aug2)
    H_sum = integral_homology(linearized_differential(summed, combined))
    H1 = integral_homology(linearized_differential(d1, aug1))
    H2 = integral_homology(linearized_differential(d2, aug2))
    degrees = set(H_sum.degrees()) | set(H1.degrees()) | set(H2.degrees())
    for d in degrees:
        if d in (0, 1):
            continue
        if H_sum.group(d) != H1.group(d).direct_sum(H2.group(d)):
            return False
    return True
