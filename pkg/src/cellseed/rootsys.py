"""Finite-type Cartan data, weight arithmetic and Weyl-group word operations.

Weights are integer vectors in the fundamental-weight basis, so the pairing
<alpha_i^vee, lambda> is just the i-th coordinate.  Words are sequences of
simple-reflection indices written left to right and applied to weights right
to left, i.e. (i1,...,in) acts as s_{i1}(s_{i2}(...s_{in}(lambda))).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional


class CellSeedError(ValueError):
    """Base class for input/validation errors raised by this package."""


class InvalidTypeError(CellSeedError):
    """Unknown family or rank out of range for the family."""


_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_TYPE_RE = re.compile(r"^([A-Ga-g])\s*(\d+)$")


@dataclass(frozen=True, order=True)
class LieType:
    """A finite Cartan-Killing type such as A5 or B3."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise InvalidTypeError(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidTypeError(
                f"rank {self.rank} out of range for family {self.family}"
            )

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = _TYPE_RE.match(text.strip())
        if m is None:
            raise InvalidTypeError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix with the convention a[i][j] = <alpha_i^vee, alpha_j>."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        """Entry a[i][j] with 1-based vertex indices."""
        return self.entries[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        """Simple root alpha_j written in the fundamental-weight basis."""
        return tuple(row[j - 1] for row in self.entries)

    def symmetrizers(self) -> tuple[int, ...]:
        """Smallest positive integers d with d_i a[i][j] = d_j a[j][i]."""
        n = self.rank
        d: list[Optional[Fraction]] = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if i == j or self.entries[i][j] == 0:
                        continue
                    val = d[i] * Fraction(self.entries[i][j], self.entries[j][i])
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        raise CellSeedError("matrix is not symmetrizable")
        denom_lcm = 1
        for x in d:
            denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
        ints = [int(x * denom_lcm) for x in d]
        g = 0
        for x in ints:
            g = gcd(g, x)
        return tuple(x // g for x in ints)


def _chain(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    return a


@lru_cache(maxsize=None)
def cartan_matrix(lie_type: LieType) -> CartanMatrix:
    """Cartan matrix in Bourbaki numbering; in B_n the short root is alpha_n."""
    n = lie_type.rank
    fam = lie_type.family
    a = _chain(n)
    if fam == "B":
        a[n - 1][n - 2] = -2
    elif fam == "C":
        a[n - 2][n - 1] = -2
    elif fam == "D":
        a[n - 1][n - 2] = a[n - 2][n - 1] = 0
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
    elif fam == "E":
        # node 2 hangs off node 4; the chain runs 1-3-4-5-...-n
        for i, j in ((1, 2), (2, 3)):
            a[i - 1][j - 1] = a[j - 1][i - 1] = 0
        for i, j in ((1, 3), (3, 4), (2, 4)):
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif fam == "F":
        a[2][1] = -2
    elif fam == "G":
        a[0][1] = -3
    return CartanMatrix(tuple(tuple(row) for row in a))


@dataclass(frozen=True)
class WeightVec:
    """Integer weight in the fundamental-weight basis."""

    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> "WeightVec":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "WeightVec":
        if not 1 <= i <= rank:
            raise CellSeedError(f"vertex {i} out of range 1..{rank}")
        return cls(tuple(1 if k == i - 1 else 0 for k in range(rank)))

    def pairing(self, i: int) -> int:
        """<alpha_i^vee, self>."""
        return self.coeffs[i - 1]

    def __add__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, c: int) -> "WeightVec":
        return WeightVec(tuple(c * x for x in self.coeffs))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class Word:
    """A word in the simple reflections, stored as its letter sequence."""

    letters: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise CellSeedError(f"cannot parse word {text!r}") from exc

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def prefix(self, k: int) -> "Word":
        return Word(self.letters[:k])

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.letters)


def parse_subset(text: str) -> tuple[int, ...]:
    """Parse a vertex subset given as "{2,4,5}" or "2,4,5"."""
    text = text.strip().lstrip("{").rstrip("}").strip()
    if not text:
        return ()
    try:
        vals = sorted({int(tok) for tok in text.split(",")})
    except ValueError as exc:
        raise CellSeedError(f"cannot parse subset {text!r}") from exc
    return tuple(vals)


@dataclass(frozen=True)
class ParabolicConfig:
    """A splitting of the vertex set into J and its complement K."""

    rank: int
    j_set: tuple[int, ...]
    k_set: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        js = tuple(sorted(set(self.j_set)))
        if not js:
            raise CellSeedError("J must be nonempty")
        if js[0] < 1 or js[-1] > self.rank:
            raise CellSeedError(f"J {js} not within 1..{self.rank}")
        object.__setattr__(self, "j_set", js)
        object.__setattr__(
            self, "k_set", tuple(i for i in range(1, self.rank + 1) if i not in js)
        )

    @classmethod
    def from_j(cls, lie_type: LieType, j_set: Iterable[int]) -> "ParabolicConfig":
        return cls(lie_type.rank, tuple(j_set))


def _check_letters(lie_type: LieType, word: Word) -> None:
    for i in word:
        if not 1 <= i <= lie_type.rank:
            raise CellSeedError(f"letter {i} out of range for {lie_type}")


def reflect(lie_type: LieType, i: int, weight: WeightVec) -> WeightVec:
    """Apply the simple reflection s_i: lambda - <alpha_i^vee, lambda> alpha_i."""
    cm = cartan_matrix(lie_type)
    if not 1 <= i <= lie_type.rank:
        raise CellSeedError(f"vertex {i} out of range for {lie_type}")
    c = weight.pairing(i)
    alpha = cm.column(i)
    return WeightVec(tuple(x - c * a for x, a in zip(weight.coeffs, alpha)))


def apply_word(lie_type: LieType, word: Word, weight: WeightVec) -> WeightVec:
    """Apply a word to a weight, rightmost letter first."""
    _check_letters(lie_type, word)
    for i in reversed(word.letters):
        weight = reflect(lie_type, i, weight)
    return weight


# ---------------------------------------------------------------------------
# Weyl elements as integer matrices acting on simple-root coordinates.

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def _reflection_matrix(lie_type: LieType, i: int) -> Matrix:
    # s_i(alpha_j) = alpha_j - a[i][j] alpha_i, so only row i changes.
    cm = cartan_matrix(lie_type)
    n = lie_type.rank
    rows = []
    for r in range(n):
        if r != i - 1:
            rows.append(tuple(1 if c == r else 0 for c in range(n)))
        else:
            rows.append(
                tuple((1 if c == r else 0) - cm.entry(i, c + 1) for c in range(n))
            )
    return tuple(rows)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def element_matrix(lie_type: LieType, word: Word) -> Matrix:
    """Matrix of the word's Weyl element on simple-root coordinates."""
    _check_letters(lie_type, word)
    m = _identity(lie_type.rank)
    for i in word:
        m = _mat_mul(m, _reflection_matrix(lie_type, i))
    return m


def _column_negative(m: Matrix, i: int) -> bool:
    # Root coordinates of a root have uniform sign, so <=0 everywhere means negative.
    return all(row[i - 1] <= 0 for row in m)


def word_length(lie_type: LieType, word: Word) -> int:
    """Coxeter length of the word's product, by incremental descent counting."""
    _check_letters(lie_type, word)
    m = _identity(lie_type.rank)
    length = 0
    for i in word:
        length += -1 if _column_negative(m, i) else 1
        m = _mat_mul(m, _reflection_matrix(lie_type, i))
    return length


def is_reduced(lie_type: LieType, word: Word) -> bool:
    return word_length(lie_type, word) == len(word)


def reduced_violation(lie_type: LieType, word: Word) -> Optional[int]:
    """First position (1-based) where the running length drops, or None."""
    m = _identity(lie_type.rank)
    for pos, i in enumerate(word, start=1):
        if _column_negative(m, i):
            return pos
        m = _mat_mul(m, _reflection_matrix(lie_type, i))
    return None


def longest_word(lie_type: LieType, subset: Iterable[int] | None = None) -> Word:
    """Reduced word for the longest element of the parabolic on ``subset``.

    Greedy descent on the subset-regular dominant weight; ties broken by the
    smallest index, which makes the output deterministic.  An empty subset
    yields the empty word.
    """
    verts = (
        tuple(sorted(set(subset))) if subset is not None else tuple(lie_type.vertices)
    )
    for i in verts:
        if not 1 <= i <= lie_type.rank:
            raise CellSeedError(f"vertex {i} out of range for {lie_type}")
    lam = WeightVec.zero(lie_type.rank)
    for i in verts:
        lam = lam + WeightVec.fundamental(lie_type.rank, i)
    applied: list[int] = []
    while True:
        i = next((i for i in verts if lam.pairing(i) > 0), None)
        if i is None:
            break
        applied.append(i)
        lam = reflect(lie_type, i, lam)
    return Word(tuple(reversed(applied)))


def _reduced_word_of(lie_type: LieType, m: Matrix) -> Word:
    """Deterministic reduced word for the element with matrix ``m``.

    Peels the smallest right descent (column of ``m`` negative) until the
    identity is reached.
    """
    n = lie_type.rank
    ident = _identity(n)
    rev: list[int] = []
    while m != ident:
        i = next(i for i in range(1, n + 1) if _column_negative(m, i))
        rev.append(i)
        m = _mat_mul(m, _reflection_matrix(lie_type, i))
    return Word(tuple(reversed(rev)))


def cell_word(lie_type: LieType, cfg: ParabolicConfig) -> Word:
    """Reduced word u with w_{K,0} * u = w_0 and lengths adding up."""
    if cfg.rank != lie_type.rank:
        raise CellSeedError("configuration rank does not match the type")
    w0 = longest_word(lie_type)
    wk = longest_word(lie_type, cfg.k_set)
    m = _mat_mul(
        element_matrix(lie_type, Word(tuple(reversed(wk.letters)))),
        element_matrix(lie_type, w0),
    )
    u = _reduced_word_of(lie_type, m)
    assert len(wk) + len(u) == len(w0), "parabolic factorization must be additive"
    return u


def _runs(starts_ends: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    letters: list[int] = []
    for lo, hi in starts_ends:
        letters.extend(range(lo, hi + 1))
    return tuple(letters)


def _staircase(lo: int, hi: int) -> Word:
    """Longest word of the A-chain on letters lo..hi: blocks lo..end, end descending."""
    if hi < lo:
        return Word(())
    return Word(_runs((lo, end) for end in range(hi, lo - 1, -1)))


def two_step_A_words(n: int, j1: int, j2: int) -> tuple[Word, Word, Word, Word]:
    """Factor words (u1,u2,u3,u4) with u1 u2 u3 u4 a reduced word for w_0(A_n).

    u1,u2,u3 are staircase longest words of the three chains of K; u4 is a
    reduced word for w_{K,0}^{-1} w_0 generating the cell, of length
    n + (n-j2)(j2-1) + j1(j2-j1).  For j1 = 1 the returned u4 has the block
    shape s_1..s_n followed by j2-1 runs of length n-j2 and j2-j1 runs of
    length j1; otherwise no reduced word of u4 starts with s_1, and a
    deterministic descent-peeled word is returned instead.
    """
    if not 1 <= j1 < j2 <= n:
        raise CellSeedError(f"need 1 <= j1 < j2 <= n, got {(n, j1, j2)}")
    lt = LieType("A", n)
    u1 = _staircase(1, j1 - 1)
    u2 = _staircase(j1 + 1, j2 - 1)
    u3 = _staircase(j2 + 1, n)
    k_word = u1 + u2 + u3

    w0 = longest_word(lt)
    target = _mat_mul(
        element_matrix(lt, Word(tuple(reversed(k_word.letters)))),
        element_matrix(lt, w0),
    )
    want_len = n + (n - j2) * (j2 - 1) + j1 * (j2 - j1)

    head = tuple(range(1, n + 1))
    u5 = _runs((j2 - t, j2 - t + (n - j2) - 1) for t in range(1, j2))
    u6 = _runs((n - t - j1 + 1, n - t) for t in range(1, j2 - j1 + 1))
    candidate = Word(head + u5 + u6)
    if (
        len(candidate) == want_len
        and element_matrix(lt, candidate) == target
        and is_reduced(lt, candidate)
    ):
        u4 = candidate
    else:
        u4 = _reduced_word_of(lt, target)
    assert len(u4) == want_len, "cell factor has the wrong length"
    return u1, u2, u3, u4


def max_B_words(n: int) -> tuple[Word, Word, tuple[int, ...]]:
    """Type B_n factorization for J = {n}: (u, v, A).

    u is the staircase longest word of the A_{n-1} subsystem on 1..n-1, v the
    cell word made of descending runs n..t for t = 1..n, and A the positions
    inside v whose letter never reoccurs (the run ends t*n - t(t-1)/2).
    """
    if n < 2:
        raise CellSeedError("need n >= 2")
    u = _staircase(1, n - 1)
    letters: list[int] = []
    for t in range(1, n + 1):
        letters.extend(range(n, t - 1, -1))
    v = Word(tuple(letters))
    a_set = tuple(t * n - t * (t - 1) // 2 for t in range(1, n + 1))
    return u, v, a_set
