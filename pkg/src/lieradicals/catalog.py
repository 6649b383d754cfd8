"""Built-in corpus of small Lie algebras with known ground truth.

Each entry records the expected classification flags and the expected
dimensions of the headline invariants, each tagged with its provenance:
``"paper"`` when the fact is quoted from the literature the algebra comes
from, ``"derived"`` when it was worked out independently (by hand and by the
brute-force oracle).  Where the nilradical is known it is stored as explicit
ground truth; nothing in this package computes nilradicals.

Algebras usually stated over C are stored as rational split forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .core import LieAlgebra, StructureConstants
from .subspace import Subspace


class Known(NamedTuple):
    value: object
    provenance: str  # "paper" | "derived"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    known: Mapping[str, Known]
    known_nilradical: Known | None = None
    notes: str = ""


class UnknownAlgebraError(KeyError):
    """Requested catalog name does not exist; the message lists what does."""


def _known(
    solvable,
    nilpotent,
    perfect,
    abelian,
    semisimple,
    p_dim,
    np_dim,
    r_dim,
    z_dim,
    u_dim,
    paper_fields=(),
) -> dict[str, Known]:
    values = {
        "solvable": solvable,
        "nilpotent": nilpotent,
        "perfect": perfect,
        "abelian": abelian,
        "semisimple": semisimple,
        "perfect_radical_dim": p_dim,
        "near_perfect_radical_dim": np_dim,
        "radical_dim": r_dim,
        "center_dim": z_dim,
        "smallest_upper_bounded_dim": u_dim,
    }
    return {
        k: Known(v, "paper" if k in paper_fields else "derived")
        for k, v in values.items()
    }


def _span(dim: int, *vecs) -> Subspace:
    return Subspace.span(vecs, dim)


def _direct_sum(a: LieAlgebra, b: LieAlgebra, labels) -> LieAlgebra:
    """Block direct sum: brackets within each block, zero across."""
    n, m = a.dim, b.dim
    table: dict[tuple[int, int], list] = {}
    for i, j, v in a.constants.pairs():
        table[(i, j)] = list(v) + [0] * m
    for i, j, v in b.constants.pairs():
        table[(n + i, n + j)] = [0] * n + list(v)
    return LieAlgebra(StructureConstants.from_brackets(n + m, table), labels)


def _build_entries() -> dict[str, CatalogEntry]:
    entries: list[CatalogEntry] = []

    abelian1 = LieAlgebra.from_brackets(1, {})
    entries.append(
        CatalogEntry(
            name="abelian1",
            algebra=abelian1,
            known=_known(True, True, False, True, False, 0, 0, 1, 1, 1),
            known_nilradical=Known(_span(1, (1,)), "derived"),
            notes="one-dimensional abelian algebra",
        )
    )

    abelian2 = LieAlgebra.from_brackets(2, {})
    entries.append(
        CatalogEntry(
            name="abelian2",
            algebra=abelian2,
            known=_known(True, True, False, True, False, 0, 0, 2, 2, 2),
            known_nilradical=Known(_span(2, (1, 0), (0, 1)), "derived"),
            notes="two-dimensional abelian algebra",
        )
    )

    # [e1, e2] = e2: the affine line, smallest solvable-not-nilpotent algebra.
    aff1 = LieAlgebra.from_brackets(2, {(0, 1): (0, 1)})
    entries.append(
        CatalogEntry(
            name="aff1",
            algebra=aff1,
            known=_known(True, False, False, False, False, 0, 1, 2, 0, 0),
            known_nilradical=Known(_span(2, (0, 1)), "derived"),
            notes="affine algebra of the line; NP(L) = span{e2}",
        )
    )

    # [e1, e2] = e3: Heisenberg.
    heis3 = LieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)})
    entries.append(
        CatalogEntry(
            name="heis3",
            algebra=heis3,
            known=_known(True, True, False, False, False, 0, 0, 3, 1, 3),
            known_nilradical=Known(_span(3, (1, 0, 0), (0, 1, 0), (0, 0, 1)), "derived"),
            notes="Heisenberg algebra; nilpotent, center span{e3}",
        )
    )

    # [e1, e2] = e3, [e1, e3] = e4: filiform nilpotent of length 3.
    n4 = LieAlgebra.from_brackets(
        4, {(0, 1): (0, 0, 1, 0), (0, 2): (0, 0, 0, 1)}
    )
    entries.append(
        CatalogEntry(
            name="n4",
            algebra=n4,
            known=_known(True, True, False, False, False, 0, 0, 4, 1, 4),
            known_nilradical=Known(Subspace.full(4), "derived"),
            notes="filiform nilpotent algebra with a three-step upper central series",
        )
    )

    # [z, x] = x, [z, y] = x + y, [x, y] = 0 on basis (x, y, z).
    s3_2 = LieAlgebra.from_brackets(
        3,
        {(2, 0): (1, 0, 0), (2, 1): (1, 1, 0)},
        labels=("x", "y", "z"),
    )
    entries.append(
        CatalogEntry(
            name="s3_2",
            algebra=s3_2,
            known=_known(
                True, False, False, False, False, 0, 2, 3, 0, 0,
                paper_fields=("solvable", "near_perfect_radical_dim"),
            ),
            known_nilradical=Known(_span(3, (1, 0, 0), (0, 1, 0)), "derived"),
            notes=(
                "solvable, not nilpotent; span{x, y} is a near perfect ideal "
                "that is not perfect"
            ),
        )
    )

    # Split sl2: [h, e] = 2e, [h, f] = -2f, [e, f] = h.
    sl2 = LieAlgebra.from_brackets(
        3,
        {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)},
        labels=("h", "e", "f"),
    )
    entries.append(
        CatalogEntry(
            name="sl2",
            algebra=sl2,
            known=_known(
                False, False, True, False, True, 3, 3, 0, 0, 0,
                paper_fields=("perfect",),
            ),
            known_nilradical=Known(Subspace.zero(3), "derived"),
            notes="rational split form of sl(2); simple, Killing determinant -128",
        )
    )

    sl2_plus_abelian1 = _direct_sum(sl2, abelian1, ("h", "e", "f", "t"))
    entries.append(
        CatalogEntry(
            name="sl2_plus_abelian1",
            algebra=sl2_plus_abelian1,
            known=_known(False, False, False, False, False, 3, 3, 1, 1, 1),
            known_nilradical=Known(_span(4, (0, 0, 0, 1)), "derived"),
            notes=(
                "reductive sum sl2 + center line; the smallest upper bounded "
                "ideal is the center, a proper nonzero ideal"
            ),
        )
    )

    sl2_plus_s3_2 = _direct_sum(sl2, s3_2, ("h", "e", "f", "x", "y", "z"))
    entries.append(
        CatalogEntry(
            name="sl2_plus_s3_2",
            algebra=sl2_plus_s3_2,
            known=_known(False, False, False, False, False, 3, 5, 3, 0, 0),
            known_nilradical=Known(
                _span(6, (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0)), "derived"
            ),
            notes="block sum; radical is the solvable block, perfect radical the sl2 block",
        )
    )

    return {e.name: e for e in sorted(entries, key=lambda e: e.name)}


_ENTRIES = _build_entries()


def names() -> tuple[str, ...]:
    """Stable, sorted catalog names."""
    return tuple(_ENTRIES)


def get(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownAlgebraError(
            f"unknown algebra {name!r}; available: {', '.join(names())}"
        ) from None


def entries() -> tuple[CatalogEntry, ...]:
    return tuple(_ENTRIES.values())
