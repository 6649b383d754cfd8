"""Characteristic series, radicals, and classification predicates.

Three ideal chains organize a finite-dimensional Lie algebra:

* the derived series      L(0) = L,  L(k+1) = [L(k), L(k)]
* the lower central series L^0 = L,  L^(k+1) = [L, L^k]
* the upper central series U_0 = 0,  U_(k+1) = U(U_k), where
  U(I) = {x : [x, L] contained in I} is the upper extension of I.

Each chain is monotone in dimension, so it stabilizes after at most n steps.
The stabilized values are the headline invariants:

* perfect radical  P(L): the largest ideal with [I, I] = I; equals the last
  term of the derived series.  L is solvable iff P(L) = 0, and L / P(L) is
  always solvable.
* near perfect radical NP(L): the largest ideal with [L, I] = I; equals the
  last term of the lower central series.  L is nilpotent iff NP(L) = 0, and
  L / NP(L) is always nilpotent.  P(L) is contained in NP(L).
* smallest upper bounded ideal: the last (largest) term of the upper central
  series; it is contained in every ideal I with U(I) = I.
* radical R(L): the largest solvable ideal, computed exactly as the
  Killing-orthogonal complement of the derived algebra.
* center Z(L) = U(0).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .core import LieAlgebra, NotAnIdealError
from .linalg import Matrix
from .subspace import Subspace


class SeriesKind(Enum):
    DERIVED = "derived"
    LOWER_CENTRAL = "lower_central"
    UPPER_CENTRAL = "upper_central"


@dataclass(frozen=True)
class SeriesReport:
    """A stabilized ideal chain.

    `terms` stores the chain through its first repeated term, so
    terms[stabilization_index] == terms[stabilization_index + 1] always holds
    and the stabilized value is terms[-1].  `chain` gives the strictly
    monotone prefix (indices 0..m), which is what reports display.
    """

    kind: SeriesKind
    terms: tuple[Subspace, ...]
    stabilization_index: int

    @property
    def stable_term(self) -> Subspace:
        return self.terms[self.stabilization_index]

    @property
    def chain(self) -> tuple[Subspace, ...]:
        return self.terms[: self.stabilization_index + 1]


def iterate_series(
    kind: SeriesKind, first: Subspace, step: Callable[[Subspace], Subspace]
) -> SeriesReport:
    """Iterate `step` from `first` until the first repeated term."""
    terms = [first]
    while True:
        nxt = step(terms[-1])
        terms.append(nxt)
        if nxt == terms[-2]:
            return SeriesReport(kind, tuple(terms), len(terms) - 2)


def derived_series(L: LieAlgebra) -> SeriesReport:
    return iterate_series(
        SeriesKind.DERIVED, L.full_space(), lambda t: L.bracket_spaces(t, t)
    )


def lower_central_series(L: LieAlgebra) -> SeriesReport:
    full = L.full_space()
    return iterate_series(
        SeriesKind.LOWER_CENTRAL, full, lambda t: L.bracket_spaces(full, t)
    )


def upper_extension(L: LieAlgebra, ideal: Subspace) -> Subspace:
    """U(I) = {x : [x, e_j] lies in I for every basis vector e_j}.

    Computed as the kernel of the stacked maps x -> [x, e_j] mod I.  Satisfies
    I <= U(I) <= L, and U(I) is again an ideal.
    """
    if not L.is_ideal(ideal):
        raise NotAnIdealError("upper extension requires an ideal")
    proj = ideal.quotient_projection()
    blocks = []
    for j in range(L.dim):
        ad_j = L.ad(L.basis_vector(j))
        # x -> [x, e_j] is -ad(e_j); the sign does not change the kernel but
        # keeps the stacked map honest.
        neg_ad_j = Matrix(ad_j.rows, ad_j.cols, [-a for a in ad_j.entries])
        blocks.append(proj @ neg_ad_j)
    stacked = Matrix.stack(blocks, L.dim)
    return Subspace(L.dim, stacked.kernel())


def upper_central_series(L: LieAlgebra) -> SeriesReport:
    return iterate_series(
        SeriesKind.UPPER_CENTRAL, L.zero_space(), lambda t: upper_extension(L, t)
    )


# -- radicals ----------------------------------------------------------------


def perfect_radical(L: LieAlgebra) -> Subspace:
    """Largest perfect ideal: the stabilized term of the derived series."""
    return derived_series(L).stable_term


def near_perfect_radical(L: LieAlgebra) -> Subspace:
    """Largest ideal I with [L, I] = I: stabilized lower central term."""
    return lower_central_series(L).stable_term


def smallest_upper_bounded_ideal(L: LieAlgebra) -> Subspace:
    """The minimum of {I ideal : U(I) = I}: stabilized upper central term."""
    return upper_central_series(L).stable_term


def center(L: LieAlgebra) -> Subspace:
    """Z(L) = U(0)."""
    return upper_extension(L, L.zero_space())


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    """D(L) = [L, L]."""
    full = L.full_space()
    return L.bracket_spaces(full, full)


def radical(L: LieAlgebra) -> Subspace:
    """Largest solvable ideal, via the Killing-orthogonal complement of D(L)."""
    return L.killing_orthogonal(derived_subalgebra(L))


# -- algebra predicates --------------------------------------------------------

# Zero-dimensional conventions: solvable, nilpotent, perfect and abelian are
# all True for the 0 algebra; semisimple requires a nonzero algebra.


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L).stable_term.is_zero()


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L).stable_term.is_zero()


def is_perfect(L: LieAlgebra) -> bool:
    return derived_subalgebra(L).is_full()


def is_abelian(L: LieAlgebra) -> bool:
    return derived_subalgebra(L).is_zero()


def is_semisimple(L: LieAlgebra) -> bool:
    """radical(L) = 0 on a nonzero algebra, cross-checked against the form.

    Over a characteristic-zero field a trivial radical and a nondegenerate
    Killing form are equivalent; a disagreement between the two computations
    would mean a bug in this package, so it raises instead of picking a side.
    """
    if L.dim == 0:
        return False
    by_radical = radical(L).is_zero()
    by_form = L.killing_orthogonal(L.full_space()).is_zero()
    if by_radical != by_form:  # pragma: no cover - internal consistency gate
        raise RuntimeError(
            "internal error: radical and Killing nondegeneracy disagree"
        )
    return by_radical


# -- ideal predicates ------------------------------------------------------------


def _require_ideal(L: LieAlgebra, s: Subspace) -> None:
    if not L.is_ideal(s):
        raise NotAnIdealError("subspace is not an ideal")


def is_perfect_ideal(L: LieAlgebra, s: Subspace) -> bool:
    """Ideal with [s, s] = s (a perfect Lie algebra in its own right)."""
    _require_ideal(L, s)
    return L.bracket_spaces(s, s) == s


def is_near_perfect_ideal(L: LieAlgebra, s: Subspace) -> bool:
    """Ideal with [L, s] = s."""
    _require_ideal(L, s)
    return L.bracket_spaces(L.full_space(), s) == s


def is_upper_bounded_ideal(L: LieAlgebra, s: Subspace) -> bool:
    """Ideal with U(s) = s."""
    _require_ideal(L, s)
    return upper_extension(L, s) == s


# -- the full profile -------------------------------------------------------------


@dataclass(frozen=True)
class ProfileReport:
    """Everything the library computes about one algebra, in one value."""

    derived: SeriesReport
    lower_central: SeriesReport
    upper_central: SeriesReport
    perfect_radical: Subspace
    near_perfect_radical: Subspace
    radical: Subspace
    center: Subspace
    smallest_upper_bounded: Subspace
    solvable: bool
    nilpotent: bool
    perfect: bool
    abelian: bool
    semisimple: bool

    def flags(self) -> dict[str, bool]:
        return {
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "perfect": self.perfect,
            "abelian": self.abelian,
            "semisimple": self.semisimple,
        }


def profile(L: LieAlgebra) -> ProfileReport:
    """Compute the three series, the radicals and all flags in one pass."""
    der = derived_series(L)
    low = lower_central_series(L)
    upp = upper_central_series(L)
    rad = radical(L)
    d1 = der.terms[1]  # D(L)
    return ProfileReport(
        derived=der,
        lower_central=low,
        upper_central=upp,
        perfect_radical=der.stable_term,
        near_perfect_radical=low.stable_term,
        radical=rad,
        center=upp.terms[1],
        smallest_upper_bounded=upp.stable_term,
        solvable=der.stable_term.is_zero(),
        nilpotent=low.stable_term.is_zero(),
        perfect=d1.is_full(),
        abelian=d1.is_zero(),
        semisimple=is_semisimple(L),
    )
