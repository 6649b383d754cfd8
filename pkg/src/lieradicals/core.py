"""Lie algebras given by structure constants over the rationals.

An algebra is the data [e_i, e_j] = sum_k c^k_ij e_k on a chosen basis.  This
module owns validation (antisymmetry and the Jacobi identity), brackets of
vectors and of subspaces, ideal tests and ideal closure, the adjoint
representation, the Killing form and its orthogonal complements, restriction
to a subalgebra, and quotients by ideals.

Everything downstream assumes the rational field.  All the structure theory
used here (Cartan's criteria, the radical formula, the series
characterizations) is valid over any field of characteristic zero, and exact
rational arithmetic is what makes the results machine-checkable.  Algebras
usually presented over C enter through rational split forms, e.g. sl2 with
basis h, e, f.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, is_zero_vector, vadd, vector, zero_vector
from .subspace import Subspace


class NotAnIdealError(ValueError):
    """Raised when an operation requires an ideal and the subspace is not one."""


class NotClosedError(ValueError):
    """Raised when restricting to a subspace that is not bracket-closed."""


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking the structure-constant axioms.

    `indices` are 1-based basis indices: the offending pair for an
    antisymmetry failure, the offending triple for a Jacobi failure.
    """

    ok: bool
    kind: str | None = None  # "antisymmetry" | "jacobi"
    indices: tuple[int, ...] = ()
    message: str = "ok"


class StructureConstants:
    """Sparse bracket table [e_i, e_j] = sum_k c^k_ij e_k.

    Only nonzero brackets are stored; both orientations of a pair are kept so
    lookups never need sign fixing.  Use :meth:`from_brackets` for normal
    construction (one orientation given, the other derived) and
    :meth:`from_table` to wrap a raw, possibly non-antisymmetric table that
    validation should inspect.
    """

    __slots__ = ("dim", "_table")

    def __init__(self, dim: int, table: Mapping[tuple[int, int], Sequence]):
        tab: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for (i, j), v in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"basis index out of range in bracket ({i}, {j})")
            vec = vector(v)
            if len(vec) != dim:
                raise ValueError("bracket coefficient vector has wrong length")
            if not is_zero_vector(vec):
                tab[(i, j)] = vec
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_table", tab)

    def __setattr__(self, name, value):  # pragma: no cover - safety net
        raise AttributeError("StructureConstants is immutable")

    @classmethod
    def from_brackets(
        cls, dim: int, brackets: Mapping[tuple[int, int], Sequence]
    ) -> "StructureConstants":
        """Build from one orientation per pair; the reverse is derived.

        Supplying both orientations with inconsistent values is an error.
        Consistent double definitions are accepted.  Nonzero diagonal entries
        are stored as given so that validation can report them.
        """
        table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for (i, j), v in brackets.items():
            vec = vector(v)
            if len(vec) != dim:
                raise ValueError("bracket coefficient vector has wrong length")
            if is_zero_vector(vec):
                continue
            if i == j:
                table[(i, j)] = vec
                continue
            neg = tuple(-x for x in vec)
            if (i, j) in table:
                if table[(i, j)] != vec:
                    raise ValueError(f"conflicting definitions for bracket ({i}, {j})")
                continue
            table[(i, j)] = vec
            if (j, i) in table:
                if table[(j, i)] != neg:
                    raise ValueError(f"conflicting definitions for bracket ({i}, {j})")
            else:
                table[(j, i)] = neg
        return cls(dim, table)

    @classmethod
    def from_table(
        cls, dim: int, table: Mapping[tuple[int, int], Sequence]
    ) -> "StructureConstants":
        """Wrap a raw table verbatim (no antisymmetry completion)."""
        return cls(dim, table)

    def bracket_basis(self, i: int, j: int) -> tuple[Fraction, ...]:
        """[e_i, e_j] as a coordinate vector."""
        v = self._table.get((i, j))
        return v if v is not None else zero_vector(self.dim)

    def pairs(self):
        """Defining brackets (i < j, nonzero), in index order."""
        for (i, j) in sorted(self._table):
            if i < j:
                yield i, j, self._table[(i, j)]

    def items(self):
        return self._table.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __repr__(self) -> str:
        return f"StructureConstants(dim={self.dim}, nonzero={len(self._table)})"


def _default_labels(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


class LieAlgebra:
    """A finite-dimensional Lie algebra: dimension, constants, basis labels."""

    __slots__ = ("dim", "constants", "labels", "__dict__")

    def __init__(
        self,
        constants: StructureConstants,
        labels: Sequence[str] | None = None,
    ):
        dim = constants.dim
        labels = tuple(labels) if labels is not None else _default_labels(dim)
        if len(labels) != dim:
            raise ValueError("need exactly one label per basis vector")
        if len(set(labels)) != dim:
            raise ValueError("basis labels must be unique")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "constants", constants)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple[int, int], Sequence],
        labels: Sequence[str] | None = None,
    ) -> "LieAlgebra":
        return cls(StructureConstants.from_brackets(dim, brackets), labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.constants == other.constants and self.labels == other.labels

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, labels={self.labels})"

    # -- axioms --------------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check antisymmetry on all pairs, then Jacobi on all basis triples.

        Returns the first violation found; violations are report data, not
        exceptions.  Checking Jacobi on basis triples suffices by
        trilinearity.
        """
        n = self.dim
        c = self.constants
        for i in range(n):
            for j in range(i, n):
                vij = c.bracket_basis(i, j)
                vji = c.bracket_basis(j, i)
                if any(a != -b for a, b in zip(vij, vji)):
                    return ValidationReport(
                        ok=False,
                        kind="antisymmetry",
                        indices=(i + 1, j + 1),
                        message=(
                            f"antisymmetry fails on (e{i + 1}, e{j + 1}): "
                            f"[e{i + 1},e{j + 1}] != -[e{j + 1},e{i + 1}]"
                        ),
                    )
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = vadd(
                        vadd(
                            self.bracket(c.bracket_basis(i, j), self.basis_vector(k)),
                            self.bracket(c.bracket_basis(j, k), self.basis_vector(i)),
                        ),
                        self.bracket(c.bracket_basis(k, i), self.basis_vector(j)),
                    )
                    if not is_zero_vector(s):
                        return ValidationReport(
                            ok=False,
                            kind="jacobi",
                            indices=(i + 1, j + 1, k + 1),
                            message=(
                                f"Jacobi identity fails on triple "
                                f"(e{i + 1}, e{j + 1}, e{k + 1})"
                            ),
                        )
        return ValidationReport(ok=True)

    # -- vectors and spaces ----------------------------------------------------

    def basis_vector(self, i: int) -> tuple[Fraction, ...]:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.dim)

    def bracket(self, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
        """[x, y] by bilinear expansion over the stored nonzero brackets."""
        x = vector(x)
        y = vector(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length disagrees with the algebra dimension")
        out = [Fraction(0)] * self.dim
        for (i, j), v in self.constants.items():
            c = x[i] * y[j]
            if c:
                for k, vk in enumerate(v):
                    if vk:
                        out[k] += c * vk
        return tuple(out)

    def bracket_spaces(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of the pairwise brackets of the two bases: the ideal product."""
        if a.ambient_dim != self.dim or b.ambient_dim != self.dim:
            raise ValueError("subspace ambient dimension disagrees with the algebra")
        vecs = [self.bracket(u, v) for u in a.rows() for v in b.rows()]
        return Subspace.span(vecs, self.dim)

    def is_ideal(self, s: Subspace) -> bool:
        """True iff [L, s] is contained in s."""
        return self.bracket_spaces(self.full_space(), s).leq(s)

    def ideal_closure(self, vectors: Iterable[Sequence]) -> Subspace:
        """Smallest ideal containing the vectors: iterate s <- s + [L, s]."""
        s = Subspace.span(vectors, self.dim)
        full = self.full_space()
        while True:
            t = s.sum(self.bracket_spaces(full, s))
            if t == s:
                return s
            s = t

    # -- adjoint and Killing form -----------------------------------------------

    def ad(self, x: Sequence) -> Matrix:
        """Adjoint matrix of x: column j is [x, e_j]."""
        x = vector(x)
        if len(x) != self.dim:
            raise ValueError("vector length disagrees with the algebra dimension")
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix(
            self.dim,
            self.dim,
            [cols[j][k] for k in range(self.dim) for j in range(self.dim)],
        )

    @cached_property
    def _killing(self) -> Matrix:
        n = self.dim
        ads = [self.ad(self.basis_vector(i)) for i in range(n)]
        ents = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                t = (ads[i] @ ads[j]).trace()
                ents[i][j] = t
                ents[j][i] = t
        return Matrix.from_rows(ents, n)

    def killing_matrix(self) -> Matrix:
        """Gram matrix of the Killing form: K_ij = tr(ad(e_i) ad(e_j))."""
        return self._killing

    def killing_form(self, x: Sequence, y: Sequence) -> Fraction:
        """K(x, y) = tr(ad(x) ad(y)), evaluated through the cached Gram matrix."""
        x = vector(x)
        y = vector(y)
        ky = self._killing.apply(y)
        return sum((a * b for a, b in zip(x, ky)), Fraction(0))

    def killing_orthogonal(self, s: Subspace) -> Subspace:
        """{x : K(x, y) = 0 for all y in s}; an ideal whenever s is one."""
        if s.ambient_dim != self.dim:
            raise ValueError("subspace ambient dimension disagrees with the algebra")
        constraints = s.basis @ self._killing
        return Subspace(self.dim, constraints.kernel())

    # -- subalgebras and quotients -----------------------------------------------

    def restrict(self, s: Subspace) -> "LieAlgebra":
        """The Lie algebra structure induced on a bracket-closed subspace.

        The new basis is s's RREF basis; coordinates of each bracket against
        that basis give the restricted constants.  Raises NotClosedError if
        [s, s] is not contained in s.
        """
        if s.ambient_dim != self.dim:
            raise ValueError("subspace ambient dimension disagrees with the algebra")
        if not self.bracket_spaces(s, s).leq(s):
            raise NotClosedError("subspace is not closed under the bracket")
        rows = s.rows()
        table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for p in range(len(rows)):
            for q in range(p + 1, len(rows)):
                v = self.bracket(rows[p], rows[q])
                coords = s.coordinates(v)
                assert coords is not None  # guaranteed by closure
                table[(p, q)] = coords
        return LieAlgebra(StructureConstants.from_brackets(s.dim, table))

    def embed(self, s: Subspace, coords: Sequence) -> tuple[Fraction, ...]:
        """Map restricted coordinates back to ambient coordinates."""
        coords = vector(coords)
        if len(coords) != s.dim:
            raise ValueError("coordinate length disagrees with the subspace dimension")
        v = [Fraction(0)] * self.dim
        for c, row in zip(coords, s.rows()):
            if c:
                v = [a + c * b for a, b in zip(v, row)]
        return tuple(v)

    def quotient(self, ideal: Subspace) -> tuple["LieAlgebra", Matrix]:
        """Factor algebra by an ideal, plus the linear projection onto it.

        The quotient basis is the set of standard coordinate vectors at the
        non-pivot columns of the ideal's RREF basis, in index order, which
        makes the construction deterministic.  The returned matrix maps
        ambient coordinates to quotient coordinates and is a surjective Lie
        homomorphism.
        """
        if not self.is_ideal(ideal):
            raise NotAnIdealError("quotient requires an ideal")
        proj = ideal.quotient_projection()
        pivot_set = set(ideal.pivots)
        non_pivots = [c for c in range(self.dim) if c not in pivot_set]
        d = len(non_pivots)
        table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for a in range(d):
            for b in range(a + 1, d):
                w = self.bracket(
                    self.basis_vector(non_pivots[a]), self.basis_vector(non_pivots[b])
                )
                table[(a, b)] = proj.apply(w)
        labels = tuple(self.labels[c] for c in non_pivots)
        return LieAlgebra(StructureConstants.from_brackets(d, table), labels), proj
