"""The algebra text format: parsing and rendering.

Line-based grammar (UTF-8, LF or CRLF; `#` starts a comment, blank lines are
ignored):

    dim <n>                        exactly once, before any bracket line
    basis <name1> ... <namen>      optional; defaults to e1..en
    [<i>,<j>] = <term> (+ <term>)* one per bracket pair, indices 1-based
    [<i>,<j>] = 0

with term := <rational>*e<k> and rational matching -?digits(/digits)?.
Subtraction is written with negative rationals (`-1*e2`), not a `-`
separator.  Each pair may be defined at most once in either orientation;
undeclared brackets are zero and reversed brackets are derived by
antisymmetry.  The parsed algebra must satisfy the antisymmetry and Jacobi
axioms, otherwise parsing fails with the offending indices.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import LieAlgebra, StructureConstants, ValidationReport

_DIM_RE = re.compile(r"dim\s+(\d+)$")
_BASIS_RE = re.compile(r"basis\s+(.+)$")
_BRACKET_RE = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.+)$")
_TERM_RE = re.compile(r"(-?\d+(?:/\d+)?)\s*\*\s*e(\d+)$")


class AlgebraFileError(Exception):
    """Base class for algebra-file failures."""


class ParseError(AlgebraFileError):
    """Syntax, duplicate-bracket, or index-range failure, with a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class InvalidAlgebraError(AlgebraFileError):
    """Input parsed but violates the antisymmetry or Jacobi axioms."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(report.message)


def parse_algebra(text: str) -> LieAlgebra:
    """Parse the text format into a validated algebra.

    Raises ParseError for malformed input and InvalidAlgebraError when the
    bracket table fails validation.
    """
    dim: int | None = None
    labels: tuple[str, ...] | None = None
    brackets: dict[tuple[int, int], list[Fraction]] = {}
    seen_pairs: set[tuple[int, int]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if line.startswith("dim"):
            m = _DIM_RE.fullmatch(line)
            if m is None:
                raise ParseError("malformed dim line", lineno)
            if dim is not None:
                raise ParseError("duplicate dim line", lineno)
            dim = int(m.group(1))
            continue

        if line.startswith("basis"):
            if dim is None:
                raise ParseError("basis line before dim", lineno)
            if labels is not None:
                raise ParseError("duplicate basis line", lineno)
            m = _BASIS_RE.fullmatch(line)
            if m is None:
                raise ParseError("malformed basis line", lineno)
            names = tuple(m.group(1).split())
            if len(names) != dim:
                raise ParseError(
                    f"basis needs exactly {dim} names, got {len(names)}", lineno
                )
            if len(set(names)) != len(names):
                raise ParseError("basis names must be unique", lineno)
            labels = names
            continue

        if line.startswith("["):
            if dim is None:
                raise ParseError("bracket line before dim", lineno)
            m = _BRACKET_RE.fullmatch(line)
            if m is None:
                raise ParseError("malformed bracket line", lineno)
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ParseError(f"bracket index out of range in [{i},{j}]", lineno)
            key = (min(i, j), max(i, j))
            if key in seen_pairs:
                raise ParseError(
                    f"bracket pair ({i},{j}) already defined "
                    "(in this or the reversed orientation)",
                    lineno,
                )
            seen_pairs.add(key)
            rhs = m.group(3).strip()
            vec = [Fraction(0)] * dim
            if rhs != "0":
                for part in rhs.split("+"):
                    t = _TERM_RE.fullmatch(part.strip())
                    if t is None:
                        raise ParseError(f"malformed term {part.strip()!r}", lineno)
                    coeff = Fraction(t.group(1))
                    k = int(t.group(2))
                    if not (1 <= k <= dim):
                        raise ParseError(f"basis index e{k} out of range", lineno)
                    vec[k - 1] += coeff
            brackets[(i - 1, j - 1)] = vec
            continue

        raise ParseError(f"unrecognized line {line!r}", lineno)

    if dim is None:
        raise ParseError("missing dim line")

    algebra = LieAlgebra(StructureConstants.from_brackets(dim, brackets), labels)
    report = algebra.validate()
    if not report.ok:
        raise InvalidAlgebraError(report)
    return algebra


def render_algebra(L: LieAlgebra, name: str | None = None) -> str:
    """Serialize an algebra so that parse_algebra round-trips it exactly."""
    lines = []
    if name:
        lines.append(f"# {name}")
    lines.append(f"dim {L.dim}")
    lines.append("basis " + " ".join(L.labels))
    for i, j, vec in L.constants.pairs():
        terms = " + ".join(
            f"{coeff}*e{k + 1}" for k, coeff in enumerate(vec) if coeff
        )
        lines.append(f"[{i + 1},{j + 1}] = {terms}")
    return "\n".join(lines) + "\n"
