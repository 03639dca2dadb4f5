"""Linear systems attached to an algebra: the derivation operator and the
Hom-Jacobi operator as matrices acting on flattened endomorphisms.

Endomorphisms are flattened column-major: ``vec_of_endo`` lists the first
column of f, then the second, and so on. Rows of the derivation matrix are
the components of the derivation defect on basis pairs (i, j), pairs in
lexicographic order with i < j, components innermost. Rows of the Hom-Jacobi
matrix do the same over basis triples i < j < k. Both builders assemble
coefficients straight from the structure constants; the ``*_defect``
functions evaluate the same bilinear expressions directly on vectors and
serve as an independent route for cross-checking the assembly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (Endo, SkewAlgebra, Vec, basis_vec, multiply, vadd,
                      zero_vec)
from .errors import DimensionMismatchError, UnsupportedDimError
from .qlinalg import ExactMatrix, echelonize, kernel_basis


def vec_of_endo(f: Endo) -> Vec:
    """Column-major flattening of a square matrix."""
    n = f.rows
    return tuple(f[r, c] for c in range(n) for r in range(n))


def endo_of_vec(n: int, v: Sequence) -> Endo:
    """Inverse of ``vec_of_endo``."""
    if len(v) != n * n:
        raise DimensionMismatchError(f"vector of length {len(v)} is not n^2 for n={n}")
    return ExactMatrix([[v[c * n + r] for c in range(n)] for r in range(n)])


def _check_endo(a: SkewAlgebra, f: Endo) -> None:
    if not (f.is_square and f.rows == a.dim):
        raise DimensionMismatchError(f"{f.rows}x{f.cols} endomorphism on a "
                                     f"dim-{a.dim} algebra")


def derivation_defect(a: SkewAlgebra, f: Endo, x: Sequence, y: Sequence) -> Vec:
    """f(x)*y + x*f(y) - f(x*y); zero for all x, y iff f is a derivation."""
    _check_endo(a, f)
    fx, fy = f.apply(x), f.apply(y)
    fxy = f.apply(multiply(a, x, y))
    return tuple(p + q - r for p, q, r in
                 zip(multiply(a, fx, y), multiply(a, x, fy), fxy))


def hom_jacobi_defect(a: SkewAlgebra, f: Endo,
                      x: Sequence, y: Sequence, z: Sequence) -> Vec:
    """Cyclic sum (xy)f(z) + (yz)f(x) + (zx)f(y)."""
    _check_endo(a, f)
    return vadd(vadd(multiply(a, multiply(a, x, y), f.apply(z)),
                     multiply(a, multiply(a, y, z), f.apply(x))),
                multiply(a, multiply(a, z, x), f.apply(y)))


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _triples(n: int) -> list[tuple[int, int, int]]:
    return [(i, j, k) for i in range(1, n + 1) for j in range(i + 1, n + 1)
            for k in range(j + 1, n + 1)]


def build_M(a: SkewAlgebra) -> ExactMatrix:
    """Matrix of f -> derivation defect, acting on flattened endomorphisms.

    Shape is (n * C(n,2)) x n^2; the kernel is the derivation algebra, the
    rank the dimension of the isomorphism orbit.
    """
    n = a.dim
    pairs = _pairs(n)
    grid = [[Fraction(0)] * (n * n) for _ in range(n * len(pairs))]
    for p, (i, j) in enumerate(pairs):
        cij = a.product(i, j)
        for col in range(n * n):
            c, k = divmod(col, n)  # unit endomorphism sending e_{c+1} to e_{k+1}
            t = list(zero_vec(n))
            if c + 1 == i:
                for m, v in enumerate(a.product(k + 1, j)):
                    t[m] += v
            if c + 1 == j:
                for m, v in enumerate(a.product(i, k + 1)):
                    t[m] += v
            t[k] -= cij[c]
            for m in range(n):
                if t[m] != 0:
                    grid[p * n + m][col] = t[m]
    return ExactMatrix(grid, cols=n * n)


def _double_product(a: SkewAlgebra, i: int, j: int, l: int) -> Vec:
    """(e_i * e_j) * e_l as a coefficient vector."""
    cij = a.product(i, j)
    out = list(zero_vec(a.dim))
    for s, c in enumerate(cij):
        if c == 0:
            continue
        for m, v in enumerate(a.product(s + 1, l)):
            out[m] += c * v
    return tuple(out)


def build_HL(a: SkewAlgebra) -> ExactMatrix:
    """Matrix of f -> Hom-Jacobi defect over basis triples, on flattened f.

    Shape is (n * C(n,3)) x n^2. Requires n >= 3: with no triples the
    Hom-Jacobi condition is vacuous and every dimension-2 algebra carries a
    Hom-Lie structure unconditionally.
    """
    n = a.dim
    if n < 3:
        raise UnsupportedDimError("Hom-Jacobi matrix needs dimension >= 3")
    triples = _triples(n)
    grid = [[Fraction(0)] * (n * n) for _ in range(n * len(triples))]
    for t, (i, j, k) in enumerate(triples):
        for col in range(n * n):
            c, l = divmod(col, n)  # unit endomorphism sending e_{c+1} to e_{l+1}
            acc = zero_vec(n)
            for (p, q, r) in ((i, j, k), (j, k, i), (k, i, j)):
                if c + 1 == r:
                    acc = vadd(acc, _double_product(a, p, q, l + 1))
            for m in range(n):
                if acc[m] != 0:
                    grid[t * n + m][col] = acc[m]
    return ExactMatrix(grid, cols=n * n)


@dataclass(frozen=True)
class DerivationSpace:
    """Basis of the derivation algebra, one endomorphism per kernel vector."""

    basis: tuple[Endo, ...]
    dim: int


@dataclass(frozen=True)
class HomLieSpace:
    """Basis of the space of Hom-Lie twists compatible with the product."""

    basis: tuple[Endo, ...]
    dim: int


def derivation_space(a: SkewAlgebra) -> DerivationSpace:
    """Kernel of the derivation matrix, reshaped to endomorphisms."""
    vecs = kernel_basis(build_M(a))
    return DerivationSpace(tuple(endo_of_vec(a.dim, v) for v in vecs), len(vecs))


def aut_dimension(a: SkewAlgebra) -> int:
    """Dimension of the automorphism group (equals the derivation dimension)."""
    return a.dim * a.dim - orbit_dimension(a)


def orbit_dimension(a: SkewAlgebra) -> int:
    """Dimension of the isomorphism orbit: rank of the derivation matrix."""
    return echelonize(build_M(a)).rank


def homlie_space(a: SkewAlgebra) -> HomLieSpace:
    """All endomorphisms satisfying the Hom-Jacobi identity with the product.

    For n = 2 the condition is vacuous, so the space is all of gl(2): the
    basis lists the four unit endomorphisms in flattening order.
    """
    n = a.dim
    if n == 2:
        units = []
        for col in range(4):
            v = [Fraction(0)] * 4
            v[col] = Fraction(1)
            units.append(endo_of_vec(2, v))
        return HomLieSpace(tuple(units), 4)
    vecs = kernel_basis(build_HL(a))
    return HomLieSpace(tuple(endo_of_vec(n, v) for v in vecs), len(vecs))


def is_homlie(a: SkewAlgebra) -> bool:
    """True iff some nonzero endomorphism satisfies the Hom-Jacobi identity.

    The zero map always satisfies it vacuously, so the test is that the
    solution space has dimension at least 1.
    """
    return a.dim == 2 or homlie_space(a).dim >= 1


def hom_check(a: SkewAlgebra, f: Endo) -> bool:
    """Direct evaluation of the Hom-Jacobi identity on all basis triples.

    Independent of the matrix route: useful as an oracle against it.
    """
    _check_endo(a, f)
    n = a.dim
    zero = zero_vec(n)
    for (i, j, k) in _triples(n):
        if hom_jacobi_defect(a, f, basis_vec(n, i), basis_vec(n, j),
                             basis_vec(n, k)) != zero:
            return False
    return True
