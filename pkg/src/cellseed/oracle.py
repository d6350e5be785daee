"""Exact-arithmetic verification for type A.

Restricted minors become determinants of submatrices of upper unitriangular
matrices, cells are sampled as products of elementary one-parameter matrices
with seeded random rationals, and right e-action degrees become degrees in t
of minor polynomials.  Everything is exact over the rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .rootsys import CellSeedError, WeightVec, Word
from .lift import MinorSymbol, RestrictedMonomial, RestrictedSum

Mat = tuple[tuple[Fraction, ...], ...]


def identity_matrix(n: int) -> Mat:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def elementary(n: int, i: int, t: Fraction) -> Mat:
    """x_i(t) = I + t E_{i,i+1}, the upper elementary unipotent."""
    if not 1 <= i <= n - 1:
        raise CellSeedError(f"letter {i} out of range for size {n}")
    rows = [list(row) for row in identity_matrix(n)]
    rows[i - 1][i] = t
    return tuple(tuple(row) for row in rows)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _random_rational(rng: random.Random) -> Fraction:
    # small nonzero numerators/denominators keep determinant cost bounded
    num = 0
    while num == 0:
        num = rng.randint(-100, 100)
    return Fraction(num, rng.randint(1, 100))


def cell_sample(n: int, word: Word, rng_seed: int) -> Mat:
    """Product x_{i_1}(t_1)...x_{i_r}(t_r) with seeded nonzero rational t's."""
    rng = random.Random(rng_seed)
    rows = [list(r) for r in identity_matrix(n)]
    for i in word:
        if not 1 <= i <= n - 1:
            raise CellSeedError(f"letter {i} out of range for size {n}")
        t = _random_rational(rng)
        # right multiplication by x_i(t): column i+1 += t * column i
        for r in range(n):
            rows[r][i] += t * rows[r][i - 1]
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class MinorSpec:
    """Row and column index sets of a minor, 1-based and sorted."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols):
            raise CellSeedError("minor must be square")

    def __str__(self) -> str:
        r = ",".join(map(str, self.rows))
        c = ",".join(map(str, self.cols))
        return f"D{{{r}|{c}}}"


def word_permutation(word: Word, size: int) -> tuple[int, ...]:
    """Permutation of 1..size of the word, rightmost letter applied first."""
    perm = list(range(1, size + 1))
    for i in reversed(word.letters):
        if not 1 <= i <= size - 1:
            raise CellSeedError(f"letter {i} out of range for size {size}")
        perm = [i + 1 if v == i else i if v == i + 1 else v for v in perm]
    return tuple(perm)


def weyl_minor_spec(v_word: Word, i: int, rank: int) -> MinorSpec:
    """Minor realizing D_{w_i, v(w_i)} in SL_{rank+1}: rows 1..i, cols v({1..i})."""
    size = rank + 1
    if not 1 <= i <= rank:
        raise CellSeedError(f"index {i} out of range for rank {rank}")
    perm = word_permutation(v_word, size)
    cols = tuple(sorted(perm[r - 1] for r in range(1, i + 1)))
    return MinorSpec(tuple(range(1, i + 1)), cols)


def cols_from_weight(weight: WeightVec, i: int) -> tuple[int, ...]:
    """Column set of the extremal weight v(w_i), read off its coordinates.

    In epsilon-coordinates the weight is the indicator vector of the column
    set up to a constant shift.
    """
    rank = len(weight.coeffs)
    raw = [sum(weight.coeffs[k:]) for k in range(rank)] + [0]
    lo = min(raw)
    ones = [idx + 1 for idx, v in enumerate(raw) if v == lo + 1]
    if any(v not in (lo, lo + 1) for v in raw) or len(ones) != i:
        raise CellSeedError(f"{weight} is not an extremal weight of level {i}")
    return tuple(ones)


def minor_spec_from_symbol(sym: MinorSymbol, rank: int) -> MinorSpec:
    """Minor of a restricted symbol; the weight alone determines the columns."""
    return MinorSpec(
        tuple(range(1, sym.fund + 1)), cols_from_weight(sym.weight, sym.fund)
    )


def eval_minor(spec: MinorSpec, mat: Mat) -> Fraction:
    n = len(mat)
    if spec.rows and (spec.rows[-1] > n or spec.cols[-1] > n):
        raise CellSeedError(f"{spec} out of bounds for size {n}")
    sub = [[mat[r - 1][c - 1] for c in spec.cols] for r in spec.rows]
    return _det(sub)


def _det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    det = Fraction(1)
    rows = [row[:] for row in rows]
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c] != 0:
                f = rows[r][c] * inv
                for cc in range(c, n):
                    rows[r][cc] -= f * rows[c][cc]
    return det


# ---------------------------------------------------------------------------
# Polynomials in one variable t over the rationals.


@dataclass(frozen=True)
class PolyInT:
    """Dense rational polynomial; the zero polynomial has empty coefficients."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coeffs) -> "PolyInT":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    def degree(self) -> int:
        """Degree in t; the zero polynomial reports 0."""
        return max(len(self.coeffs) - 1, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "PolyInT") -> "PolyInT":
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (m - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (m - len(other.coeffs))
        return PolyInT.of(*(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "PolyInT":
        return PolyInT(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PolyInT") -> "PolyInT":
        return self + (-other)

    def __mul__(self, other: "PolyInT") -> "PolyInT":
        if self.is_zero() or other.is_zero():
            return PolyInT(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyInT.of(*out)


def _poly_det(rows: list[list[PolyInT]]) -> PolyInT:
    n = len(rows)
    if n == 0:
        return PolyInT.of(1)
    if n == 1:
        return rows[0][0]
    out = PolyInT(())
    for r in range(n):
        if rows[r][0].is_zero():
            continue
        minor = [row[1:] for rr, row in enumerate(rows) if rr != r]
        term = rows[r][0] * _poly_det(minor)
        out = out + (term if r % 2 == 0 else -term)
    return out


def translated_minor_poly(spec: MinorSpec, j: int, mat: Mat, side: str = "left") -> PolyInT:
    """Minor of x_j(t)*mat (side="left") or mat*x_j(t) (side="right") as a polynomial."""
    if side not in ("left", "right"):
        raise CellSeedError(f"unknown side {side!r}")
    n = len(mat)
    if not 1 <= j <= n - 1:
        raise CellSeedError(f"letter {j} out of range for size {n}")
    t = PolyInT.of(0, 1)

    def entry(r: int, c: int) -> PolyInT:
        base = PolyInT.of(mat[r - 1][c - 1])
        if side == "left" and r == j:
            return base + t * PolyInT.of(mat[j][c - 1])
        if side == "right" and c == j + 1:
            return base + t * PolyInT.of(mat[r - 1][j - 1])
        return base

    sub = [[entry(r, c) for c in spec.cols] for r in spec.rows]
    return _poly_det(sub)


def edagger_degree(spec: MinorSpec, j: int, mat: Mat, side: str = "left") -> int:
    """Degree in t of the minor of the translated matrix; 0 for the zero polynomial."""
    return translated_minor_poly(spec, j, mat, side).degree()


def sampled_multidegree(
    spec: MinorSpec,
    js: Sequence[int],
    n: int,
    cell_word: Word,
    samples: int = 5,
    rng_seed: int = 0,
    side: str = "left",
) -> dict[int, int]:
    """Per-index degree maximized over seeded cell samples."""
    out = {j: 0 for j in js}
    for s in range(samples):
        mat = cell_sample(n, cell_word, rng_seed + s)
        for j in js:
            out[j] = max(out[j], edagger_degree(spec, j, mat, side))
    return out


# ---------------------------------------------------------------------------
# Formal minor expressions and the sampling identity checker.

Term = tuple[int, tuple[tuple[MinorSpec, int], ...]]


@dataclass(frozen=True)
class MinorExpr:
    """Integer combination of products of minors."""

    terms: tuple[Term, ...]

    def evaluate(self, mat: Mat) -> Fraction:
        total = Fraction(0)
        for coef, factors in self.terms:
            prod = Fraction(coef)
            for spec, e in factors:
                if prod == 0:
                    break
                prod *= eval_minor(spec, mat) ** e
            total += prod
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for coef, factors in self.terms:
            body = "*".join(
                str(spec) + (f"^{e}" if e > 1 else "") for spec, e in factors
            )
            if not body:
                body = "1"
            if coef == 1:
                parts.append(body)
            elif coef == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coef} {body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" + {p}" if not p.startswith("-") else f" - {p[1:]}"
        return out


def restricted_to_expr(
    x: Union[RestrictedMonomial, RestrictedSum], rank: int
) -> MinorExpr:
    """Formal minor expression of a projected lift."""
    if isinstance(x, RestrictedSum):
        terms = []
        for mono in x.terms:
            terms.extend(restricted_to_expr(mono, rank).terms)
        return MinorExpr(tuple(terms))
    factors = tuple(
        (minor_spec_from_symbol(sym, rank), e) for sym, e in x.factors
    )
    return MinorExpr(((1, factors),))


@dataclass(frozen=True)
class VerifyReport:
    equal: bool
    samples: int
    failed_index: Optional[int] = None
    lhs_value: Optional[Fraction] = None
    rhs_value: Optional[Fraction] = None
    counterexample: Optional[Mat] = None

    def __str__(self) -> str:
        if self.equal:
            return f"PASS: exact equality on {self.samples} samples"
        return (
            f"FAIL at sample {self.failed_index}: "
            f"lhs={self.lhs_value} rhs={self.rhs_value}"
        )


def verify_identity(
    lhs: MinorExpr,
    rhs: MinorExpr,
    n: int,
    cell_word: Word,
    samples: int = 20,
    rng_seed: int = 0,
) -> VerifyReport:
    """Compare two expressions on seeded cell samples with exact arithmetic."""
    for s in range(samples):
        mat = cell_sample(n, cell_word, rng_seed + s)
        lv, rv = lhs.evaluate(mat), rhs.evaluate(mat)
        if lv != rv:
            return VerifyReport(False, samples, s, lv, rv, mat)
    return VerifyReport(True, samples)
