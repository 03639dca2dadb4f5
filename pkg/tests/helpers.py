"""Shared test utilities: independent oracles, seeded generators, and frozen
reference tables used across the suite."""

from fractions import Fraction

from skewlie import ExactMatrix, SkewAlgebra, algebra3
from skewlie.algebra import Vec


# ---------------------------------------------------------------------------
# independent determinant oracle: memoized first-row cofactor expansion
# ---------------------------------------------------------------------------

def cofactor_determinant(rows):
    """Exact determinant by cofactor expansion; independent of the
    elimination-based path in the package."""
    n = len(rows)
    cache: dict[tuple[int, ...], Fraction | int] = {}

    def minor(cols: tuple[int, ...]):
        if not cols:
            return 1
        if cols in cache:
            return cache[cols]
        r = n - len(cols)
        total = 0
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if entry == 0:
                continue
            rest = cols[:pos] + cols[pos + 1:]
            term = entry * minor(rest)
            total = total + term if pos % 2 == 0 else total - term
        cache[cols] = total
        return total

    return minor(tuple(range(n)))


# ---------------------------------------------------------------------------
# seeded random objects (plain random.Random instances are passed in)
# ---------------------------------------------------------------------------

def rand_fraction(rng, num=9, den=6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_nonzero_fraction(rng, num=9, den=6) -> Fraction:
    while True:
        x = rand_fraction(rng, num, den)
        if x != 0:
            return x


def rand_algebra(rng, dim=3, height=3) -> SkewAlgebra:
    table = {}
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            table[(i, j)] = [rng.randint(-height, height) for _ in range(dim)]
    return SkewAlgebra(dim, table)


def rand_endo(rng, n, height=3) -> ExactMatrix:
    return ExactMatrix([[rng.randint(-height, height) for _ in range(n)]
                        for _ in range(n)])


def rand_invertible(rng, n, height=3) -> ExactMatrix:
    from skewlie import determinant
    while True:
        p = rand_endo(rng, n, height)
        if determinant(p) != 0:
            return p


def rand_vec(rng, n, height=4) -> Vec:
    return tuple(Fraction(rng.randint(-height, height)) for _ in range(n))


# ---------------------------------------------------------------------------
# reference tables (hand-transcribed, independently verified once symbolically)
# ---------------------------------------------------------------------------

def reference_derivation_matrix3(a1, b1, g1, a2, b2, g2, a3, b3, g3):
    """The 9x9 derivation-defect matrix of a dimension-3 algebra, written out
    entry by entry; cross-checks the programmatic assembly in build_M."""
    z = 0
    return [
        [z, z, -a3, -b1, a1, a2, -g1, z, z],
        [b1, -a1, -b3, z, z, b2, z, -g1, z],
        [g1, z, -g3 - a1, z, g1, g2 - b1, z, z, -g1],
        [z, a3, z, -b2, z, z, -g2, a1, a2],
        [b2, -a2 + b3, z, z, -b2, z, z, -g2 + b1, b2],
        [g2, g3, -a2, z, z, -b2, z, g1, z],
        [-a3, z, z, a2 - b3, a3, z, -a1 - g3, z, a3],
        [z, -a3, z, b2, z, z, -b1, -g3, b3],
        [z, z, -a3, g2, g3, -b3, -g1, z, z],
    ]


# Closed-form kernel generators of the derivation matrix for the three
# parametric families. Each satisfies build_M(family) . v = 0 identically in
# the parameters (verified symbolically once; re-verified numerically by the
# tests at every sampled parameter point).

def sol_kernel_generator(b1, g1, b2, g2):
    return (-b2, b2 * (b1 + g2), -b1 * b1 - 2 * b2 * g1 + b1 * g2,
            0, 0, b1, 0, 0, b2)


def sol_kernel_generators_b2_zero(b1, g1, g2):
    return ((0, 0, -g1, 0, 0, 0, 0, 0, 1),
            (0, 0, -b1 + g2, 0, 0, 1, 0, 0, 0))


def ns1_kernel_generator(b2, g2, a3, b3, g3):
    return (-b3 * b3 - b3 * g2 * g3 + b2 * g3 * g3,
            2 * b2 * b3 + b3 * g2 * g2 - b2 * g2 * g3,
            -b3 * g2 + 2 * b2 * g3,
            2 * a3 * b3 + a3 * g2 * g3,
            b3 * b3 - a3 * g2 * g2,
            2 * a3 * g2 + b3 * g3,
            a3 * b3 * g2 - 2 * a3 * b2 * g3,
            2 * a3 * b2 * g2 + b3 * b3 * g2 - b2 * b3 * g3,
            a3 * g2 * g2 + b3 * g2 * g3 - b2 * g3 * g3)


def ns2_kernel_generator(a2, b2, g2, b3, g3):
    return (-a2 * a2 - b2 * g3 * g3 + b3 * b3 + b3 * g2 * g3,
            -2 * a2 * b2 - 2 * b2 * b3 + b2 * g2 * g3 - b3 * g2 * g2,
            -a2 * g2 - 2 * b2 * g3 + b3 * g2,
            a2 * g3 * g3,
            a2 * a2 - a2 * g2 * g3 - b3 * b3,
            g3 * (a2 - b3),
            a2 * g3 * (a2 - b3),
            a2 * b2 * g3 + a2 * b3 * g2 + b2 * b3 * g3 - b3 * b3 * g2,
            g3 * (a2 * g2 + b2 * g3 - b3 * g2))


# Dimension-4 fixtures.

def counterexample4() -> SkewAlgebra:
    """The dimension-4 algebra carrying no Hom-Lie structure."""
    return SkewAlgebra(4, {
        (1, 2): (0, 1, 2, -1),
        (1, 3): (1, 2, -1, 0),
        (1, 4): (2, -1, 0, 1),
        (2, 3): (-1, 0, 1, 2),
        (2, 4): (1, 2, -1, 3),
        (3, 4): (-2, -1, 1, 2),
    })


# Frozen from the cofactor oracle; the Hom-Jacobi matrix of counterexample4.
COUNTEREXAMPLE4_HL_DET = 7574844564


def rigid_dim4() -> SkewAlgebra:
    """Dimension-4 algebra whose derivation matrix has full column rank 16."""
    return SkewAlgebra(4, {
        (1, 2): (1, 0, 0, 1),
        (1, 3): (0, 1, 1, 0),
        (1, 4): (0, 0, 1, 1),
        (2, 3): (1, 0, 1, 0),
        (2, 4): (0, 1, 0, 0),
        (3, 4): (0, 1, 1, 0),
    })


# A published 16x16 integer table related to counterexample4 (it deviates from
# the assembled Hom-Jacobi matrix in 19 entries, so it is used purely as a
# determinant fixture, not as golden data for the builder).
HL16_TABLE = [
    [-5, -1, 3, -4, -1, 1, 1, -6, 0, 3, -3, -3, 0, 0, 0, 0],
    [0, -3, 0, 0, 0, -1, -2, -4, 6, 2, -1, 0, 0, 0, 0, 0],
    [1, 3, -1, 1, 5, -3, -1, 3, 0, -3, 2, 1, 0, 0, 0, 0],
    [-2, -9, -4, 1, -2, -1, -4, -5, -2, -1, 4, 7, 0, 0, 0, 0],
    [-5, -4, 4, 6, 2, 1, -5, -3, 0, 0, 0, 0, 0, 3, -3, -3],
    [3, 3, 4, 4, -2, 0, -5, 4, 0, 0, 0, 0, 6, 2, -1, 0],
    [-5, 6, 1, -3, -2, -5, 4, -1, 0, 0, 0, 0, 0, -3, 2, 1],
    [-1, -8, -3, 5, 2, 5, 4, 1, 0, 0, 0, 0, -2, -1, 4, 7],
    [-5, -1, 3, -7, 0, 0, 0, 0, 2, 1, -5, -3, 1, -1, -1, 6],
    [1, -6, -2, -1, 0, 0, 0, 0, -2, 0, -5, 4, 0, 1, 2, 4],
    [3, -3, -1, 2, 0, 0, 0, 0, -2, -5, 4, -1, -5, 3, 1, -3],
    [-3, -6, -6, -3, 0, 0, 0, 0, 2, 5, 4, 1, 2, 1, 4, 5],
    [0, 0, 0, 0, -5, -1, 3, -7, 5, 4, -4, -6, -5, -1, 3, -4],
    [0, 0, 0, 0, 1, -6, -2, -1, -3, 5, -4, -4, 0, -3, 0, 0],
    [0, 0, 0, 0, 3, -3, -1, 2, 5, -6, -1, 3, 1, 3, -1, 1],
    [0, 0, 0, 0, -3, -6, -6, -3, 1, 8, 3, -5, -2, -9, -4, 1],
]

HL16_TABLE_DET = 11058686421416


def gamma2_family(g2) -> SkewAlgebra:
    """e1*e2 = e2, e1*e3 = g2 e3, e2*e3 = e1; Lie exactly at g2 = -1."""
    return algebra3(0, 1, 0, 0, 0, g2, 1, 0, 0)


# ---------------------------------------------------------------------------
# classification support
# ---------------------------------------------------------------------------

def normal_form_of(result):
    """Rebuild the normal-form algebra that a classification result asserts."""
    from skewlie import abelian, heisenberg
    from skewlie.classify import (ABELIAN, HEISENBERG, NS1, NS2,
                                  SOLVABLE_LIE_LINE, SOLVABLE_LIE_PLANE,
                                  SOLVABLE_NON_LIE, ns1_family, ns2_family,
                                  sol_family)
    p = result.params
    if result.tag == ABELIAN:
        return abelian(3)
    if result.tag == HEISENBERG:
        return heisenberg()
    if result.tag == SOLVABLE_LIE_LINE:
        return SkewAlgebra(3, {(1, 3): (0, 0, 1)})
    if result.tag == SOLVABLE_LIE_PLANE:
        return SkewAlgebra(3, {(1, 2): (0, p["beta1"], p["gamma1"]),
                               (1, 3): (0, p["beta2"], p["gamma2"])})
    if result.tag == SOLVABLE_NON_LIE:
        return sol_family(p["beta1"], p["gamma1"], p["beta2"], p["gamma2"])
    if result.tag == NS1:
        return ns1_family(p["beta2"], p["gamma2"], p["alpha3"], p["beta3"],
                          p["gamma3"])
    if result.tag == NS2:
        return ns2_family(p["alpha2"], p["beta2"], p["gamma2"], p["beta3"],
                          p["gamma3"])
    raise AssertionError(result.tag)
