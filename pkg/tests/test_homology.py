import random
from itertools import combinations

import pytest

from lchkit.augment import Augmentation, enumerate_augmentations
from lchkit.dga import DGA, euler_tb, lambda0, lambda_k, unknot
from lchkit.errors import FieldRequired, NotAComplex, RingMismatch
from lchkit.homology import (
    GradedHomology,
    HomologyGroup,
    bockstein,
    field_homology,
    from_orders,
    integral_homology,
    invariant_factors,
    smith_normal_form,
    uct_check,
)
from lchkit.linearize import ChainComplex, linearized_differential
from lchkit.matrices import determinant, identity, matmul, rank_rationals
from lchkit.rings import QQ, ZZ, Zmod


def eps_n(n):
    return Augmentation(ZZ, {"a1": n, "a2": -1, "a3": 1, "a6": 1})


def eps_n_k(k, n):
    values = {"a1": n, "a2": -1, "a3": 1}
    values.update({f"a{i}": 1 for i in range(10, k + 11)})
    return Augmentation(ZZ, values)


# ----------------------------------------------------------------------
# Smith normal form
# ----------------------------------------------------------------------


def minors_gcd(M, k):
    """gcd of all k x k minors (0 if all vanish)."""
    m, n = len(M), len(M[0]) if M else 0
    g = 0
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            sub = [[M[i][j] for j in cols] for i in rows]
            g = _gcd(g, determinant(sub))
            if g == 1:
                return 1
    return abs(g)


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def check_snf(M):
    m, n = len(M), len(M[0]) if M else 0
    U, D, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(determinant(U)) == 1
    assert abs(determinant(V)) == 1
    diag = [D[i][i] for i in range(min(m, n))]
    for i in range(min(m, n)):
        for j in range(n):
            if j != i:
                assert D[i][j] == 0, "off-diagonal entry"
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    assert all(x >= 0 for x in diag)
    return diag


def test_snf_examples():
    diag = check_snf([[2, 0], [0, 3]])
    assert diag == [1, 6]
    U, D, V = smith_normal_form([[0, 0], [0, 0]])
    assert D == [[0, 0], [0, 0]]
    assert U == identity(2) and V == identity(2)
    for n in (5, -5, 0, 7):
        assert check_snf([[n]]) == [abs(n)]


def test_snf_empty_shapes():
    U, D, V = smith_normal_form([])
    assert U == [] and D == [] and V == []
    U, D, V = smith_normal_form([[], []])
    assert len(U) == 2 and D == [[], []] and V == []


def test_snf_random_matrices_with_oracle():
    rng = random.Random(1234)
    for _ in range(300):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        diag = check_snf(M)
        r = rank_rationals(M)
        assert sum(1 for x in diag if x) == r
        dk_prev = 1
        for k in range(1, r + 1):
            dk = minors_gcd(M, k)
            assert diag[k - 1] == dk // dk_prev
            dk_prev = dk


def test_invariant_factors():
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert invariant_factors([[4, 0], [0, 6]]) == [2, 12]
    assert invariant_factors([[0]]) == []


# ----------------------------------------------------------------------
# groups
# ----------------------------------------------------------------------


def test_from_orders_canonicalizes():
    assert from_orders([2, 3]) == HomologyGroup(0, (6,))
    assert from_orders([4, 6]) == HomologyGroup(0, (2, 12))
    assert from_orders([0, 0, 1, 1]) == HomologyGroup(2, ())
    assert from_orders([2, 4, 2]) == HomologyGroup(0, (2, 2, 4))


def test_group_direct_sum_and_str():
    g = HomologyGroup(2, (6,))
    assert str(g) == "Z^2 + Z/6"
    assert str(HomologyGroup(0, ())) == "0"
    assert g.direct_sum(HomologyGroup(0, (4,))) == from_orders([0, 0, 6, 4])
    assert HomologyGroup(0, (12,)).primary_decomposition() == [4, 3]


def test_bad_invariant_factors_rejected():
    with pytest.raises(ValueError):
        HomologyGroup(0, (3, 4))
    with pytest.raises(ValueError):
        HomologyGroup(0, (1, 2))


# ----------------------------------------------------------------------
# integral homology
# ----------------------------------------------------------------------


def test_lambda0_torsion_table():
    d = lambda0()
    for n in (2, 3, 4, 6, 12):
        H = integral_homology(linearized_differential(d, eps_n(n)))
        assert H.groups == {
            1: HomologyGroup(1, ()),
            0: HomologyGroup(2, (n,)),
            -1: HomologyGroup(0, (n,)),
        }




def test_lambda1_table():
    d = lambda_k(1)
    for n in (2, 5):
        H = integral_homology(linearized_differential(d, eps_n_k(1, n)))
        assert H.groups == {
            1: HomologyGroup(1, (n,)),
            0: HomologyGroup(2, ()),
            -2: HomologyGroup(0, (n,)),
        }


def test_lambda_k_table():
    for k in (2, 3):
        d = lambda_k(k)
        for n in (3, 4):
            H = integral_homology(linearized_differential(d, eps_n_k(k, n)))
            assert H.groups == {
                1: HomologyGroup(1, ()),
                0: HomologyGroup(2, ()),
                k: HomologyGroup(0, (n,)),
                -k - 1: HomologyGroup(0, (n,)),
            }


def test_unknot_homology():
    H = integral_homology(linearized_differential(unknot(), Augmentation(ZZ, {})))
    assert H.groups == {1: HomologyGroup(1, ())}


def test_chordless_dga():
    empty = DGA(name="empty", chords=())
    C = linearized_differential(empty, Augmentation(ZZ, {}))
    H = integral_homology(C)
    assert H.groups == {} and H.euler_characteristic() == 0
    assert field_homology(C, QQ) == {}
    assert bockstein(C) == {}


def test_integral_homology_requires_integer_complex():
    C = linearized_differential(lambda0(), eps_n(2).reduction(3))
    with pytest.raises(NotAComplex):
        integral_homology(C)


def test_non_complex_rejected():
    C = ChainComplex(
        ring=ZZ,
        basis={0: ["x"], 1: ["y"], 2: ["z"]},
        boundary={0: [], 1: [[1]], 2: [[1]], 3: [[]]},
    )
    with pytest.raises(NotAComplex):
        C.check_square_zero()
    with pytest.raises(NotAComplex):
        integral_homology(C)


def test_euler_characteristic_matches_tb():
    cases = [
        (lambda0(), eps_n(2)),
        (lambda0(), eps_n(0)),
        (lambda_k(2), eps_n_k(2, 3)),
        (unknot(), Augmentation(ZZ, {})),
    ]
    for dga, aug in cases:
        H = integral_homology(linearized_differential(dga, aug))
        assert H.euler_characteristic() == euler_tb(dga)


def test_euler_characteristic_across_enumerated_augmentations():
    from lchkit.augment import enumerate_augmentations_bounded

    for dga in (lambda0(), lambda_k(1)):
        for aug in enumerate_augmentations_bounded(dga, 2):
            H = integral_homology(linearized_differential(dga, aug))
            assert H.euler_characteristic() == euler_tb(dga)


def test_free_rank_matches_rational_dimension():
    for dga, aug in [(lambda0(), eps_n(3)), (lambda_k(2), eps_n_k(2, 4))]:
        C = linearized_differential(dga, aug)
        H = integral_homology(C)
        dims = field_homology(C, QQ)
        for d in set(H.degrees()) | set(dims):
            assert dims.get(d, 0) == H.group(d).free_rank


# ----------------------------------------------------------------------
# field homology
# ----------------------------------------------------------------------


def test_mod_p_dimension_jump():
    d = lambda0()
    for n, p, expected in [(6, 2, 4), (6, 3, 4), (6, 5, 2), (5, 2, 2)]:
        C = linearized_differential(d, eps_n(n).reduction(p))
        dims = field_homology(C, Zmod(p))
        assert dims.get(0, 0) == expected


def test_lambda_k_field_cases():
    d = lambda_k(2)
    # eps(a1) != 0 over the field: dims {1: 1, 0: 2}
    aug = Augmentation(Zmod(5), {"a1": 1, "a10": 1, "a11": 1, "a12": 1})
    C = linearized_differential(d, aug)
    assert field_homology(C, Zmod(5)) == {1: 1, 0: 2}
    # eps(a1) = 0: seven dimensions spread over six degrees
    aug0 = Augmentation(Zmod(5), {"a3": 1, "a10": 1, "a11": 1, "a12": 1})
    C0 = linearized_differential(d, aug0)
    assert field_homology(C0, Zmod(5)) == {3: 1, 2: 1, 1: 1, 0: 2, -2: 1, -3: 1}


def test_field_homology_ring_rules():
    C = linearized_differential(lambda0(), eps_n(2))
    assert field_homology(C, QQ) == {1: 1, 0: 2}
    with pytest.raises(FieldRequired):
        field_homology(C, Zmod(6))
    Cp = linearized_differential(lambda0(), eps_n(2).reduction(3))
    with pytest.raises(RingMismatch):
        field_homology(Cp, Zmod(5))


# ----------------------------------------------------------------------
# Bockstein and UCT
# ----------------------------------------------------------------------


def test_bockstein_lambda0():
    C2 = linearized_differential(lambda0(), eps_n(2))
    ranks = bockstein(C2)
    assert ranks.get(0, 0) == 1
    # the Z/2 in H_0 is visible from degree 1 as well
    assert ranks == {1: 1, 0: 1}
    C3 = linearized_differential(lambda0(), eps_n(3))
    assert bockstein(C3) == {}


def test_bockstein_matches_exact_two_torsion_counts():
    """rank beta_d = number of invariant factors of H_{d-1} exactly
    divisible by 2 (== 2 mod 4)."""
    cases = [
        (lambda0(), eps_n(2)),
        (lambda0(), eps_n(4)),
        (lambda0(), eps_n(6)),
        (lambda_k(1), eps_n_k(1, 2)),
        (lambda_k(2), eps_n_k(2, 6)),
    ]
    for dga, aug in cases:
        C = linearized_differential(dga, aug)
        H = integral_homology(C)
        ranks = bockstein(C)
        degrees = set(H.degrees()) | {d + 1 for d in H.degrees()}
        for d in degrees:
            expected = sum(1 for f in H.group(d - 1).torsion if f % 2 == 0 and f % 4)
            assert ranks.get(d, 0) == expected


def test_bockstein_zero_complex():
    C = linearized_differential(
        DGA(name="free", chords=(("x", 0), ("y", 1))), Augmentation(ZZ, {})
    )
    assert bockstein(C) == {}


def test_bockstein_requires_integer_complex():
    C = linearized_differential(lambda0(), eps_n(2).reduction(2))
    with pytest.raises(RingMismatch):
        bockstein(C)


def test_uct_check():
    d = lambda0()
    C = linearized_differential(d, eps_n(2))
    H = integral_homology(C)
    assert uct_check(H, 2, field_homology(C, Zmod(2)))
    assert uct_check(H, 3, field_homology(C, Zmod(3)))
    assert field_homology(C, Zmod(3)) == {1: 1, 0: 2}
    # rational dims match free ranks (trivial UCT instance)
    dims_q = field_homology(C, QQ)
    assert all(H.group(deg).free_rank == dim for deg, dim in dims_q.items())
    # a wrong table must fail
    assert not uct_check(H, 2, {0: 1})


def test_uct_across_enumerated_augmentations():
    d = lambda_k(1)
    for aug in enumerate_augmentations(d, Zmod(3)):
        pass  # enumerated field augs exercised elsewhere; here use integer ones
    from lchkit.augment import enumerate_augmentations_bounded

    for aug in enumerate_augmentations_bounded(d, 2):
        C = linearized_differential(d, aug)
        H = integral_homology(C)
        for p in (2, 3, 5, 7):
            Cp = linearized_differential(d, aug.reduction(p))
            assert uct_check(H, p, field_homology(Cp, Zmod(p)))


def _fraction_inverse(M):
    """Exact inverse of a unimodular integer matrix (test-local helper)."""
    from fractions import Fraction

    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if A[i][col] != 0)
        A[col], A[pivot] = A[pivot], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[col])]
    out = [[x for x in row[n:]] for row in A]
    assert all(x.denominator == 1 for row in out for x in row)
    return [[int(x) for x in row] for row in out]


def _random_unimodular(rng, n):
    M = identity(n)
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.randint(-2, 2)
        for c in range(n):
            M[i][c] += q * M[j][c]
    if rng.random() < 0.5 and n > 1:
        i, j = rng.sample(range(n), 2)
        M[i], M[j] = M[j], M[i]
    return M


def test_integral_homology_on_scrambled_known_complexes():
    """Build complexes with homology fixed by design (elementary blocks:
    Z summands and x -> n*y pairs), scramble every chain group by a random
    unimodular change of basis, and demand the designed answer back."""
    rng = random.Random(42)
    for _ in range(60):
        degrees = range(-2, 3)
        sizes = {d: 0 for d in degrees}
        blocks = []  # (degree d, order n) places Z/n at degree d (0 = Z)
        expected: dict[int, list[int]] = {d: [] for d in degrees}
        for _ in range(rng.randrange(1, 6)):
            d = rng.choice([-2, -1, 0, 1])
            n = rng.choice([0, 0, 1, 2, 3, 4, 6, 12])
            if n == 0:
                sizes[d] += 1
                blocks.append((d, 0, sizes[d] - 1, None))
                expected[d].append(0)
            else:
                sizes[d] += 1
                sizes[d + 1] += 1
                blocks.append((d, n, sizes[d] - 1, sizes[d + 1] - 1))
                if n > 1:
                    expected[d].append(n)
        boundary = {
            d: [[0] * sizes.get(d, 0) for _ in range(sizes.get(d - 1, 0))]
            for d in range(-2, 4)
        }
        for d, n, row, col in blocks:
            if n:
                boundary[d + 1][row][col] = n
        # scramble: M'_d = P_{d-1}^{-1} M_d P_d
        P = {d: _random_unimodular(rng, sizes[d]) for d in degrees}
        Pinv = {d: _fraction_inverse(P[d]) for d in degrees}
        scrambled = {}
        for d in range(-2, 4):
            M = boundary[d]
            lo = Pinv.get(d - 1)
            hi = P.get(d)
            if lo and M:
                M = matmul(lo, M)
            if hi and M and M[0]:
                M = matmul(M, hi)
            scrambled[d] = M
        C = ChainComplex(
            ring=ZZ,
            basis={d: [f"g{d}_{i}" for i in range(sizes[d])] for d in degrees},
            boundary=scrambled,
        )
        H = integral_homology(C)
        want = {
            d: from_orders(orders)
            for d, orders in expected.items()
            if not from_orders(orders).is_trivial()
        }
        assert H.groups == want
        # field dimensions agree with UCT on the designed groups
        for p in (2, 3):
            assert uct_check(H, p, field_homology(C, Zmod(p)))
        # Bockstein rank at d counts the exactly-Z/2 factors of H_{d-1}
        ranks = bockstein(C)
        for d in range(-2, 4):
            exact_two = sum(
                1 for f in H.group(d - 1).torsion if f % 2 == 0 and f % 4
            )
            assert ranks.get(d, 0) == exact_two


def test_graded_homology_json_round_trip():
    H = integral_homology(linearized_differential(lambda0(), eps_n(6)))
    obj = H.to_json_obj()
    assert GradedHomology.from_json_obj(obj) == H
    assert H.format_report() == "H_1 = Z\nH_0 = Z^2 + Z/6\nH_-1 = Z/6"
