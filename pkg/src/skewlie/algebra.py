"""Skew-symmetric algebras with exact rational structure constants.

An algebra of dimension n is stored as the coefficient vectors of the basis
products e_i * e_j for i < j (1-based); the products for i >= j follow from
skew-symmetry. Everything downstream (multiplication, Jacobiator, series,
Killing form, basis transport) is pure and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatchError, SingularMapError, UnsupportedDimError
from .qlinalg import ExactMatrix, echelonize, inverse, _as_fraction

Vec = tuple[Fraction, ...]
Endo = ExactMatrix

MIN_DIM = 2
MAX_DIM = 6


def as_vec(coords: Sequence) -> Vec:
    return tuple(_as_fraction(x) for x in coords)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def basis_vec(n: int, i: int) -> Vec:
    """Standard basis vector e_i, 1-based."""
    return tuple(Fraction(int(k == i - 1)) for k in range(n))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vec) -> Vec:
    f = _as_fraction(c)
    return tuple(f * a for a in v)


class SkewAlgebra:
    """A skew-symmetric algebra given by structure constants on pairs i < j."""

    __slots__ = ("dim", "_products")

    def __init__(self, dim: int, products: Mapping[tuple[int, int], Sequence] | None = None):
        if not MIN_DIM <= dim <= MAX_DIM:
            raise UnsupportedDimError(f"dimension {dim} outside supported range "
                                      f"{MIN_DIM}..{MAX_DIM}")
        table: dict[tuple[int, int], Vec] = {}
        for (i, j), coeffs in (products or {}).items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"pair ({i},{j}) must satisfy 1 <= i < j <= {dim}")
            vec = as_vec(coeffs)
            if len(vec) != dim:
                raise ValueError(f"product ({i},{j}) has {len(vec)} coefficients, "
                                 f"expected {dim}")
            if any(c != 0 for c in vec):
                table[(i, j)] = vec
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_products", table)

    def __setattr__(self, name, value):
        raise AttributeError("SkewAlgebra is immutable")

    @property
    def products(self) -> dict[tuple[int, int], Vec]:
        """Nonzero structure-constant vectors, keyed by 1-based pairs i < j."""
        return dict(self._products)

    def product(self, i: int, j: int) -> Vec:
        """Coefficient vector of e_i * e_j for any 1-based i, j."""
        if i == j:
            return zero_vec(self.dim)
        if i < j:
            return self._products.get((i, j), zero_vec(self.dim))
        flipped = self._products.get((j, i))
        return zero_vec(self.dim) if flipped is None else tuple(-c for c in flipped)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewAlgebra) and self.dim == other.dim
                and self._products == other._products)

    def __hash__(self) -> int:
        return hash((self.dim, tuple(sorted(self._products.items()))))

    def __repr__(self) -> str:
        terms = ", ".join(f"e{i}e{j}->({', '.join(map(str, v))})"
                          for (i, j), v in sorted(self._products.items()))
        return f"SkewAlgebra(dim={self.dim}, {terms or 'abelian'})"


def abelian(dim: int) -> SkewAlgebra:
    return SkewAlgebra(dim, {})


def heisenberg() -> SkewAlgebra:
    """The 3-dimensional algebra with e1*e2 = e3 and all other products zero."""
    return SkewAlgebra(3, {(1, 2): (0, 0, 1)})


def algebra3(a1, b1, g1, a2, b2, g2, a3, b3, g3) -> SkewAlgebra:
    """Dimension-3 algebra from the nine structure constants.

    Row k of the argument list gives e1*e2, e1*e3, e2*e3 in that order, each
    as (coefficient of e1, of e2, of e3).
    """
    return SkewAlgebra(3, {(1, 2): (a1, b1, g1),
                           (1, 3): (a2, b2, g2),
                           (2, 3): (a3, b3, g3)})


def filiform5(a, b, c, d) -> SkewAlgebra:
    """The 5-dimensional filiform family: e1*e_i = e_{i+1} for i = 2, 3, 4,
    plus e2*e3 = a e4 + b e5, e2*e4 = c e5, e3*e4 = d e5."""
    return SkewAlgebra(5, {
        (1, 2): (0, 0, 1, 0, 0),
        (1, 3): (0, 0, 0, 1, 0),
        (1, 4): (0, 0, 0, 0, 1),
        (2, 3): (0, 0, 0, a, b),
        (2, 4): (0, 0, 0, 0, c),
        (3, 4): (0, 0, 0, 0, d),
    })


def _check_vec(a: SkewAlgebra, v: Sequence) -> Vec:
    vec = as_vec(v)
    if len(vec) != a.dim:
        raise DimensionMismatchError(f"vector of length {len(vec)} in a "
                                     f"{a.dim}-dimensional algebra")
    return vec


def multiply(a: SkewAlgebra, x: Sequence, y: Sequence) -> Vec:
    """Bilinear skew-symmetric product of two vectors."""
    x = _check_vec(a, x)
    y = _check_vec(a, y)
    out = [Fraction(0)] * a.dim
    for i in range(a.dim):
        if x[i] == 0:
            continue
        for j in range(a.dim):
            if y[j] == 0 or i == j:
                continue
            coeff = x[i] * y[j]
            for k, c in enumerate(a.product(i + 1, j + 1)):
                if c != 0:
                    out[k] += coeff * c
    return tuple(out)


def jacobiator(a: SkewAlgebra, x: Sequence, y: Sequence, z: Sequence) -> Vec:
    """(xy)z + (yz)x + (zx)y; vanishes identically iff the algebra is Lie."""
    x, y, z = _check_vec(a, x), _check_vec(a, y), _check_vec(a, z)
    return vadd(vadd(multiply(a, multiply(a, x, y), z),
                     multiply(a, multiply(a, y, z), x)),
                multiply(a, multiply(a, z, x), y))


def is_lie(a: SkewAlgebra) -> bool:
    """True iff the Jacobiator vanishes on all basis triples i < j < k."""
    n = a.dim
    zero = zero_vec(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                if jacobiator(a, basis_vec(n, i), basis_vec(n, j),
                              basis_vec(n, k)) != zero:
                    return False
    return True


def left_mult(a: SkewAlgebra, x: Sequence) -> Endo:
    """The endomorphism y -> x*y; column j is the product x * e_j."""
    x = _check_vec(a, x)
    n = a.dim
    return ExactMatrix.from_columns(
        [multiply(a, x, basis_vec(n, j)) for j in range(1, n + 1)])


def killing_matrix(a: SkewAlgebra) -> ExactMatrix:
    """Symmetric matrix with entry (i, j) = trace(L_{e_i} composed with L_{e_j})."""
    n = a.dim
    ops = [left_mult(a, basis_vec(n, i)) for i in range(1, n + 1)]
    return ExactMatrix([[(ops[i] @ ops[j]).trace() for j in range(n)]
                        for i in range(n)])


def killing_determinant(a: SkewAlgebra) -> Fraction:
    from .qlinalg import determinant
    return determinant(killing_matrix(a))


def transport(a: SkewAlgebra, p: Endo) -> SkewAlgebra:
    """The algebra in the basis given by the columns of p.

    The new product is x, y -> p^{-1} (p(x) * p(y)); transport by the
    identity is the identity, and transports compose contravariantly.
    """
    if not (p.is_square and p.rows == a.dim):
        raise DimensionMismatchError(f"transport of dim-{a.dim} algebra by "
                                     f"{p.rows}x{p.cols} map")
    try:
        pinv = inverse(p)
    except SingularMapError:
        raise SingularMapError("basis-change matrix is singular") from None
    table = {}
    for i in range(1, a.dim + 1):
        for j in range(i + 1, a.dim + 1):
            prod = multiply(a, p.column(i - 1), p.column(j - 1))
            table[(i, j)] = pinv.apply(prod)
    return SkewAlgebra(a.dim, table)


@dataclass(frozen=True)
class Subspace:
    """A subspace in canonical form: basis rows are the RREF of any spanning set."""

    basis: ExactMatrix
    dim: int

    def ambient_dim(self) -> int:
        return self.basis.cols

    def contains(self, v: Sequence) -> bool:
        vec = as_vec(v)
        stacked = ExactMatrix(list(self.basis.row_list()) + [list(vec)],
                              cols=self.basis.cols)
        return echelonize(stacked).rank == self.dim

    def basis_vectors(self) -> list[Vec]:
        return [self.basis.row(i) for i in range(self.dim)]


def span(vectors: Iterable[Sequence], *, dim: int | None = None) -> Subspace:
    """Canonical subspace spanned by the given vectors.

    ``dim`` fixes the ambient dimension and is required when the list is empty.
    """
    vecs = [as_vec(v) for v in vectors]
    if vecs:
        dim = len(vecs[0])
        if any(len(v) != dim for v in vecs):
            raise DimensionMismatchError("spanning vectors of unequal length")
    elif dim is None:
        raise ValueError("empty span needs an explicit ambient dimension")
    if not vecs:
        return Subspace(ExactMatrix.zeros(0, dim), 0)
    ech = echelonize(ExactMatrix(vecs, cols=dim))
    rows = [ech.reduced.row(i) for i in range(ech.rank)]
    return Subspace(ExactMatrix(rows, cols=dim), ech.rank)


def full_space(n: int) -> Subspace:
    return Subspace(ExactMatrix.identity(n), n)


def subspace_product(a: SkewAlgebra, u: Subspace, w: Subspace) -> Subspace:
    """span{ x*y : x a basis vector of u, y a basis vector of w }."""
    if u.ambient_dim() != a.dim or w.ambient_dim() != a.dim:
        raise DimensionMismatchError("subspace from a different ambient space")
    prods = [multiply(a, x, y) for x in u.basis_vectors() for y in w.basis_vectors()]
    return span(prods, dim=a.dim)


@dataclass(frozen=True)
class SeriesReport:
    """Dimensions along a descending series; ends at 0 or at first repeat."""

    kind: str  # "central" or "derived"
    dims: tuple[int, ...]


def _series(a: SkewAlgebra, kind: str) -> SeriesReport:
    full = full_space(a.dim)
    cur = full
    dims = [a.dim]
    while cur.dim > 0:
        nxt = subspace_product(a, cur, full if kind == "central" else cur)
        dims.append(nxt.dim)
        if nxt == cur:
            break
        cur = nxt
    return SeriesReport(kind, tuple(dims))


def central_series(a: SkewAlgebra) -> SeriesReport:
    """Descending central series: each term is (previous term) * (whole algebra)."""
    return _series(a, "central")


def derived_series(a: SkewAlgebra) -> SeriesReport:
    """Derived series: each term is (previous term) * (previous term)."""
    return _series(a, "derived")


def is_nilpotent(a: SkewAlgebra) -> bool:
    return central_series(a).dims[-1] == 0


def is_solvable(a: SkewAlgebra) -> bool:
    return derived_series(a).dims[-1] == 0
