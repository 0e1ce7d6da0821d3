"""Exact homology of integer chain complexes via Smith normal form.

The integral homology of (V, d) is read off from the Smith form of each
boundary matrix: H_d = ker(M_d) / im(M_{d+1}) with the kernel basis taken
from the column transform V of M_d's Smith decomposition and the image
expressed in those coordinates.  Field dimensions, the mod-2 Bockstein,
and a universal-coefficient consistency check round out the module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FieldRequired, NotAComplex, RingMismatch
from .linearize import ChainComplex
from .matrices import (
    SpanModP,
    identity,
    kernel_mod_p,
    mat_vec,
    rank_mod_p,
    rank_rationals,
)
from .rings import QQ, ZZ, RingDesc


# ----------------------------------------------------------------------
# Smith normal form
# ----------------------------------------------------------------------


def _snf_inplace(A, m: int, n: int, U, V, Vinv) -> int:
    """Diagonalize A by unimodular row/column operations; returns the rank.

    Pivot choice is the entry of minimal absolute value in the remaining
    block; between reductions, failures of the pivot to divide the rest of
    the block are repaired by folding the offending row into the pivot row,
    which strictly shrinks the pivot.  All arithmetic is exact.
    """

    def row_add(i, j, q):  # row_i += q * row_j
        Ai, Aj = A[i], A[j]
        for c in range(n):
            Ai[c] += q * Aj[c]
        Ui, Uj = U[i], U[j]
        for c in range(m):
            Ui[c] += q * Uj[c]

    def col_add(j, i, q):  # col_j += q * col_i
        for r in range(m):
            A[r][j] += q * A[r][i]
        for r in range(n):
            V[r][j] += q * V[r][i]
        Wi, Wj = Vinv[i], Vinv[j]
        for c in range(n):
            Wi[c] -= q * Wj[c]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                x = Ai[j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])
        while True:
            p = A[t][t]
            # Shrink the pivot one non-divisible entry at a time: the
            # remainder replaces the pivot, so |pivot| strictly decreases
            # and the loop terminates.
            shrunk = False
            for i in range(t + 1, m):
                if A[i][t] % p:
                    row_add(i, t, -(A[i][t] // p))
                    row_swap(t, i)
                    shrunk = True
                    break
            if shrunk:
                continue
            for j in range(t + 1, n):
                if A[t][j] % p:
                    col_add(j, t, -(A[t][j] // p))
                    col_swap(t, j)
                    shrunk = True
                    break
            if shrunk:
                continue
            # The pivot divides its whole row and column: eliminate exactly.
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
            # Fold in a row whose entries the pivot fails to divide, so the
            # next round shrinks the pivot; this enforces d1 | d2 | ...
            offender = None
            for i in range(t + 1, m):
                Ai = A[i]
                for j in range(t + 1, n):
                    if Ai[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, 1)
        t += 1

    for i in range(t):
        if A[i][i] < 0:
            for c in range(n):
                A[i][c] = -A[i][c]
            for c in range(m):
                U[i][c] = -U[i][c]
    return t


def _snf_full(M, m: int, n: int):
    """(D, U, V, Vinv, rank) with D = U*M*V, V*Vinv = I, U, V unimodular."""
    A = [list(M[i]) for i in range(m)]
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)
    rank = _snf_inplace(A, m, n, U, V, Vinv)
    return A, U, V, Vinv, rank


def smith_normal_form(M):
    """Smith normal form: returns (U, D, V) with D = U*M*V.

    U and V are unimodular; D is diagonal with nonnegative entries forming
    a divisibility chain d1 | d2 | ...  M is a list of equal-length rows.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    D, U, V, _, _ = _snf_full(M, m, n)
    return U, D, V


def invariant_factors(M) -> list[int]:
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    m = len(M)
    n = len(M[0]) if m else 0
    D, _, _, _, rank = _snf_full(M, m, n)
    return [D[i][i] for i in range(rank)]


# ----------------------------------------------------------------------
# homology groups
# ----------------------------------------------------------------------


def _primary_parts(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group: free rank + invariant factors.

    Torsion is stored in invariant-factor form d1 | d2 | ... with each
    d_i >= 2, so equality of groups is equality of these fields.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if a < 2 or b % a:
                raise ValueError(f"not a divisibility chain: {self.torsion}")
        if self.torsion and self.torsion[0] < 2:
            raise ValueError(f"invariant factors must be >= 2: {self.torsion}")

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def primary_decomposition(self) -> list[int]:
        """Torsion as prime powers, e.g. Z/12 + Z/2 -> [4, 3, 2] sorted."""
        parts: list[int] = []
        for d in self.torsion:
            parts.extend(p**e for p, e in _primary_parts(d).items())
        return sorted(parts, reverse=True)

    def p_torsion_count(self, p: int) -> int:
        return sum(1 for d in self.torsion if d % p == 0)

    def direct_sum(self, other: "HomologyGroup") -> "HomologyGroup":
        return from_orders(
            [0] * (self.free_rank + other.free_rank)
            + list(self.torsion)
            + list(other.torsion)
        )

    def __str__(self) -> str:
        pieces = []
        if self.free_rank == 1:
            pieces.append("Z")
        elif self.free_rank > 1:
            pieces.append(f"Z^{self.free_rank}")
        pieces.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(pieces) if pieces else "0"

    def to_json_obj(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


TRIVIAL_GROUP = HomologyGroup()


def from_orders(orders) -> HomologyGroup:
    """Group from a list of cyclic orders (0 = Z), in canonical form."""
    rank = 0
    primary: dict[int, list[int]] = {}
    for d in orders:
        d = abs(d)
        if d == 0:
            rank += 1
        elif d > 1:
            for p, e in _primary_parts(d).items():
                primary.setdefault(p, []).append(e)
    width = max((len(v) for v in primary.values()), default=0)
    factors = []
    for i in range(width):
        f = 1
        for p, exps in primary.items():
            exps = sorted(exps, reverse=True)
            if i < len(exps):
                f *= p ** exps[i]
        factors.append(f)
    return HomologyGroup(free_rank=rank, torsion=tuple(sorted(factors)))


@dataclass(frozen=True)
class GradedHomology:
    """Map degree -> HomologyGroup, trivial groups omitted."""

    groups: dict[int, HomologyGroup] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self,
            "groups",
            {d: g for d, g in self.groups.items() if not g.is_trivial()},
        )

    def group(self, degree: int) -> HomologyGroup:
        return self.groups.get(degree, TRIVIAL_GROUP)

    def degrees(self) -> list[int]:
        return sorted(self.groups)

    def euler_characteristic(self) -> int:
        return sum(
            (g.free_rank if d % 2 == 0 else -g.free_rank)
            for d, g in self.groups.items()
        )

    def format_report(self) -> str:
        return "\n".join(
            f"H_{d} = {self.groups[d]}" for d in sorted(self.groups, reverse=True)
        )

    def to_json_obj(self) -> list[dict]:
        return [
            {"degree": d, **self.groups[d].to_json_obj()}
            for d in sorted(self.groups, reverse=True)
        ]

    @staticmethod
    def from_json_obj(obj) -> "GradedHomology":
        return GradedHomology(
            {
                int(item["degree"]): HomologyGroup(
                    int(item["free_rank"]), tuple(int(x) for x in item["torsion"])
                )
                for item in obj
            }
        )


def integral_homology(C: ChainComplex) -> GradedHomology:
    """H_d = ker(M_d) / im(M_{d+1}) over Z, as free rank + invariant factors."""
    if C.ring != ZZ:
        raise NotAComplex(f"integral homology needs an integer complex, got {C.ring}")
    C.check_square_zero()
    groups: dict[int, HomologyGroup] = {}
    for d in C.degrees():
        names = C.basis_of(d)
        n_d = len(names)
        n_prev = len(C.basis_of(d - 1))
        n_next = len(C.basis_of(d + 1))
        M_d = C.matrix(d)
        M_next = C.matrix(d + 1)
        if n_prev == 0:
            rank = 0
            Vinv = identity(n_d)
        else:
            _, _, _, Vinv, rank = _snf_full(M_d, n_prev, n_d)
        k = n_d - rank  # kernel rank; V's last k columns are a kernel basis
        if k == 0:
            continue
        if n_next == 0:
            groups[d] = HomologyGroup(free_rank=k)
            continue
        # Express each image column in kernel coordinates: y = Vinv * col.
        coords = [
            [
                sum(Vinv[i][l] * M_next[l][j] for l in range(n_d))
                for j in range(n_next)
            ]
            for i in range(n_d)
        ]
        for i in range(rank):
            if any(coords[i]):
                raise NotAComplex(f"image at degree {d} is not contained in the kernel")
        B = coords[rank:]
        factors = invariant_factors(B)
        orders = [d_i for d_i in factors] + [0] * (k - len(factors))
        group = from_orders(orders)
        if not group.is_trivial():
            groups[d] = group
    return GradedHomology(groups)


def field_homology(C: ChainComplex, field_ring: RingDesc) -> dict[int, int]:
    """Per-degree dimensions over Q or Z/p; nonzero entries only.

    An integer complex may be tensored with any field; a Z/p complex can
    only be read over Z/p itself.
    """
    if not field_ring.is_field:
        raise FieldRequired(f"{field_ring} is not a field")
    if C.ring != ZZ and C.ring != field_ring:
        raise RingMismatch(f"complex over {C.ring} cannot be read over {field_ring}")

    def rank(M) -> int:
        if not M or not M[0]:
            return 0
        if field_ring == QQ:
            return rank_rationals(M)
        return rank_mod_p(M, field_ring.modulus)

    dims: dict[int, int] = {}
    for d in C.degrees():
        n_d = len(C.basis_of(d))
        dim = n_d - rank(C.matrix(d)) - rank(C.matrix(d + 1))
        if dim:
            dims[d] = dim
    return dims


def bockstein(C: ChainComplex) -> dict[int, int]:
    """Ranks of the Bockstein beta: H_d(Z/2) -> H_{d-1}(Z/2).

    For each mod-2 homology class, lift a representative cycle to a 0/1
    integer vector, apply the integer boundary, halve, and reduce mod 2;
    the rank of the induced map is recorded per degree (nonzero only).
    """
    if C.ring != ZZ:
        raise RingMismatch("the Bockstein lift needs an integer complex")
    C.check_square_zero()
    ranks: dict[int, int] = {}
    for d in C.degrees():
        names = C.basis_of(d)
        n_d = len(names)
        n_prev = len(C.basis_of(d - 1))
        M_d = C.matrix(d)
        M_next = C.matrix(d + 1)
        # mod-2 cycles, modulo mod-2 boundaries
        kernel = kernel_mod_p(M_d, n_prev, n_d, 2)
        image_span = SpanModP(2)
        if M_next and M_next[0]:
            for col in zip(*M_next):
                image_span.add([x % 2 for x in col])
        reps = []
        span = image_span.copy()
        for z in kernel:
            if span.add(z):
                reps.append(z)
        if not reps or n_prev == 0:
            continue
        # beta images, read in H_{d-1}(Z/2) = cycles / im(M_d mod 2)
        target_span = SpanModP(2)
        if M_d and M_d[0]:
            for col in zip(*M_d):
                target_span.add([x % 2 for x in col])
        rank = 0
        for z in reps:
            w = mat_vec(M_d, z)
            if any(x % 2 for x in w):
                raise NotAComplex("mod-2 cycle lift has an odd boundary")
            v = [(x // 2) % 2 for x in w]
            if target_span.add(v):
                rank += 1
        if rank:
            ranks[d] = rank
    return ranks


def uct_check(H: GradedHomology, p: int, dims: dict[int, int]) -> bool:
    """Universal coefficients: dims over Z/p vs. integral ranks and torsion.

    dim H_d(Z/p) must equal free_rank(H_d) + #p-divisible factors of H_d
    + #p-divisible factors of H_{d-1}.
    """
    degrees = set(H.degrees()) | set(dims) | {d + 1 for d in H.degrees()}
    for d in degrees:
        expected = (
            H.group(d).free_rank
            + H.group(d).p_torsion_count(p)
            + H.group(d - 1).p_torsion_count(p)
        )
        if dims.get(d, 0) != expected:
            return False
    return True
