"""Initial cluster seeds of Schubert cells and exchange-matrix mutation.

Positions are 1-based indices into the generating word.  Rows of the
exchange matrix carry all positions, mutable first, then frozen, each block
in position order; columns are the mutable positions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Optional, Union

from .rootsys import (
    CellSeedError,
    LieType,
    ParabolicConfig,
    Word,
    cartan_matrix,
    reduced_violation,
)


class NonReducedWordError(CellSeedError):
    def __init__(self, word: Word, position: int):
        self.word = word
        self.position = position
        super().__init__(
            f"word {word} is not reduced: length drops at letter {position} "
            f"(prefix {word.prefix(position)})"
        )


def _require_reduced(lie_type: LieType, word: Word) -> None:
    pos = reduced_violation(lie_type, word)
    if pos is not None:
        raise NonReducedWordError(word, pos)


@dataclass(frozen=True)
class SeedIndexData:
    """Predecessor/successor positions and the support of a word.

    ``p[k-1]`` is the largest j < k with the same letter (None if absent),
    ``s[k-1]`` the smallest j > k (None if the letter never reoccurs).
    """

    p: tuple[Optional[int], ...]
    s: tuple[Optional[int], ...]
    support: tuple[int, ...]

    def frozen_positions(self) -> tuple[int, ...]:
        return tuple(k for k, sk in enumerate(self.s, start=1) if sk is None)

    def mutable_positions(self) -> tuple[int, ...]:
        return tuple(k for k, sk in enumerate(self.s, start=1) if sk is not None)


def successor_maps(word: Word) -> SeedIndexData:
    letters = word.letters
    m = len(letters)
    p: list[Optional[int]] = [None] * m
    s: list[Optional[int]] = [None] * m
    last: dict[int, int] = {}
    for k in range(1, m + 1):
        i = letters[k - 1]
        if i in last:
            p[k - 1] = last[i]
            s[last[i] - 1] = k
        last[i] = k
    return SeedIndexData(tuple(p), tuple(s), tuple(sorted(last)))


@dataclass(frozen=True)
class ExchangeMatrix:
    """Extended exchange matrix with labeled rows and columns."""

    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != len(self.row_labels):
            raise CellSeedError("row count does not match row labels")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise CellSeedError("column count does not match column labels")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def entry(self, j: int, k: int) -> int:
        """Entry b_{jk} addressed by position labels."""
        return self.entries[self.row_labels.index(j)][self.col_labels.index(k)]

    def column(self, k: int) -> dict[int, int]:
        """Column k as a map from row position to entry."""
        c = self.col_labels.index(k)
        return {j: row[c] for j, row in zip(self.row_labels, self.entries)}

    def principal_part(self) -> tuple[tuple[int, ...], ...]:
        rows = {j: row for j, row in zip(self.row_labels, self.entries)}
        return tuple(tuple(rows[j]) for j in self.col_labels)

    def mutate(self, k: int) -> "ExchangeMatrix":
        """Matrix mutation at the mutable position k."""
        if k not in self.col_labels:
            raise CellSeedError(f"position {k} is not mutable")
        ck = self.col_labels.index(k)
        rk = self.row_labels.index(k)
        krow = self.entries[rk]
        new_rows = []
        for r, row in enumerate(self.entries):
            bik = row[ck]
            new_row = []
            for c, b in enumerate(row):
                if r == rk or c == ck:
                    new_row.append(-b)
                else:
                    bkj = krow[c]
                    new_row.append(b + (abs(bik) * bkj + bik * abs(bkj)) // 2)
            new_rows.append(tuple(new_row))
        return ExchangeMatrix(self.row_labels, self.col_labels, tuple(new_rows))

    def render(self) -> str:
        """Block layout with row labels, mutable rows above a separator."""
        width = max(
            [len(str(c)) for c in self.col_labels]
            + [len(str(x)) for row in self.entries for x in row]
            + [1]
        )
        lines = ["    " + " ".join(f"{c:>{width}}" for c in self.col_labels)]
        n_mut = len(self.col_labels)
        for r, (label, row) in enumerate(zip(self.row_labels, self.entries)):
            if r == n_mut:
                lines.append("  " + "-" * (2 + (width + 1) * len(self.col_labels)))
            body = " ".join(f"{x:>{width}}" for x in row)
            lines.append(f"{label:>2} ( {body} )")
        return "\n".join(lines)


def initial_matrix(lie_type: LieType, word: Word) -> ExchangeMatrix:
    """Initial exchange matrix of the cell seed for a reduced word.

    b_{jk} is +1 at j = p(k), -1 at j = s(k), the Cartan entry a_{i_j i_k}
    when j < k < s(j) < s(k), its negative when k < j < s(k) < s(j), else 0.
    """
    _require_reduced(lie_type, word)
    data = successor_maps(word)
    cm = cartan_matrix(lie_type)
    letters = word.letters
    m = len(letters)
    INF = m + 1  # stands in for +infinity in the strict chains below

    def s(k: int) -> int:
        v = data.s[k - 1]
        return INF if v is None else v

    mutable = data.mutable_positions()
    row_labels = mutable + data.frozen_positions()

    def entry(j: int, k: int) -> int:
        if j == data.p[k - 1]:
            return 1
        if j == data.s[k - 1]:
            return -1
        if j < k < s(j) < s(k):
            return cm.entry(letters[j - 1], letters[k - 1])
        if k < j < s(k) < s(j):
            return -cm.entry(letters[j - 1], letters[k - 1])
        return 0

    entries = tuple(tuple(entry(j, k) for k in mutable) for j in row_labels)
    return ExchangeMatrix(row_labels, mutable, entries)


@dataclass(frozen=True)
class MinorLabel:
    """Initial variable at a position: fundamental index and prefix word."""

    fund: int
    prefix: Word

    def __str__(self) -> str:
        return f"D{{w{self.fund},({self.prefix})}}"


@dataclass(frozen=True)
class MutationLabel:
    """Variable produced by mutation, tagged with the mutation path."""

    path: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(k) for k in self.path) + ")"


Label = Union[MinorLabel, MutationLabel]


@dataclass(frozen=True)
class SymbolicBinomial:
    """Exponent vectors of the two exchange monomials M_k and L_k."""

    m_expo: tuple[int, ...]
    l_expo: tuple[int, ...]


@dataclass(frozen=True)
class Seed:
    lie_type: LieType
    cfg: ParabolicConfig
    word: Word
    labels: tuple[Label, ...]
    frozen_mask: tuple[bool, ...]
    matrix: ExchangeMatrix
    history: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.labels)

    def mutable_positions(self) -> tuple[int, ...]:
        return self.matrix.col_labels

    def frozen_positions(self) -> tuple[int, ...]:
        return tuple(k for k, f in enumerate(self.frozen_mask, start=1) if f)

    def label(self, k: int) -> Label:
        return self.labels[k - 1]


def initial_seed(lie_type: LieType, cfg: ParabolicConfig, word: Word) -> Seed:
    """Initial seed of the cell generated by ``word``.

    Position k is labeled by the fundamental index i_k and the prefix
    w_{<=k}; it is frozen exactly when the letter i_k never reoccurs.
    """
    if cfg.rank != lie_type.rank:
        raise CellSeedError("configuration rank does not match the type")
    if len(word) == 0:
        empty = ExchangeMatrix((), (), ())
        return Seed(lie_type, cfg, word, (), (), empty)
    matrix = initial_matrix(lie_type, word)
    data = successor_maps(word)
    labels = tuple(
        MinorLabel(word.letters[k - 1], word.prefix(k))
        for k in range(1, len(word) + 1)
    )
    frozen = tuple(sk is None for sk in data.s)
    return Seed(lie_type, cfg, word, labels, frozen, matrix)


def mutate_matrix(matrix: ExchangeMatrix, k: int) -> ExchangeMatrix:
    return matrix.mutate(k)


def exchange_binomial(seed: Seed, k: int) -> SymbolicBinomial:
    """Exponents of M_k (entries b_{ik} > 0) and L_k (entries b_{ik} < 0)."""
    if k not in seed.matrix.col_labels:
        raise CellSeedError(f"position {k} is not mutable")
    m_expo = [0] * seed.size
    l_expo = [0] * seed.size
    for j, b in seed.matrix.column(k).items():
        if b > 0:
            m_expo[j - 1] = b
        elif b < 0:
            l_expo[j - 1] = -b
    return SymbolicBinomial(tuple(m_expo), tuple(l_expo))


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Mutate at k: matrix per the exchange rule, label replaced by the path."""
    new_matrix = seed.matrix.mutate(k)
    history = seed.history + (k,)
    labels = list(seed.labels)
    labels[k - 1] = MutationLabel(history)
    return replace(seed, matrix=new_matrix, labels=tuple(labels), history=history)


# ---------------------------------------------------------------------------
# JSON serialization


def _label_to_json(label: Label) -> dict:
    if isinstance(label, MinorLabel):
        return {"i": label.fund, "word": list(label.prefix.letters)}
    return {"path": list(label.path)}


def _label_from_json(obj: dict) -> Label:
    if "path" in obj:
        return MutationLabel(tuple(obj["path"]))
    return MinorLabel(obj["i"], Word(tuple(obj["word"])))


def seed_to_dict(seed: Seed) -> dict:
    return {
        "type": str(seed.lie_type),
        "J": list(seed.cfg.j_set),
        "word": list(seed.word.letters),
        "labels": [_label_to_json(l) for l in seed.labels],
        "frozen": list(seed.frozen_mask),
        "matrix": {
            "rows": list(seed.matrix.row_labels),
            "cols": list(seed.matrix.col_labels),
            "entries": [list(row) for row in seed.matrix.entries],
        },
        "history": list(seed.history),
    }


def seed_from_dict(obj: dict) -> Seed:
    lie_type = LieType.parse(obj["type"])
    cfg = ParabolicConfig.from_j(lie_type, obj["J"])
    word = Word(tuple(obj["word"]))
    matrix = ExchangeMatrix(
        tuple(obj["matrix"]["rows"]),
        tuple(obj["matrix"]["cols"]),
        tuple(tuple(row) for row in obj["matrix"]["entries"]),
    )
    labels = tuple(_label_from_json(l) for l in obj["labels"])
    frozen = tuple(bool(x) for x in obj["frozen"])
    if len(labels) != len(frozen) or len(labels) != len(matrix.row_labels):
        raise CellSeedError("inconsistent seed data")
    return Seed(lie_type, cfg, word, labels, frozen, matrix, tuple(obj.get("history", ())))


def seed_to_json(seed: Seed) -> str:
    return json.dumps(seed_to_dict(seed), indent=2)


def seed_from_json(text: str) -> Seed:
    return seed_from_dict(json.loads(text))


def render_seed(seed: Seed) -> str:
    lines = [f"seed {seed.lie_type}  J={{{','.join(map(str, seed.cfg.j_set))}}}  word {seed.word}"]
    for k in range(1, seed.size + 1):
        tag = "frozen" if seed.frozen_mask[k - 1] else "mutable"
        lines.append(f"  {k:>2}: {seed.labels[k - 1]}  ({tag})")
    lines.append(seed.matrix.render())
    return "\n".join(lines)
