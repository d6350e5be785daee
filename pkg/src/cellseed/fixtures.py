"""Worked-example seeds and builtin verification fixtures shipped with the package."""

from __future__ import annotations

from importlib import resources

from .rootsys import CellSeedError, Word
from .seedcore import Seed, seed_from_json

FIXTURE_SEEDS = ("a5", "b3")

#: cell words of the two worked examples
A5_WORD = Word((1, 2, 3, 4, 5, 2, 3, 4, 1, 2, 3))
B3_WORD = Word((3, 2, 1, 3, 2, 3))


def load_seed(name: str) -> Seed:
    """Load a shipped example seed ("a5" or "b3") from its JSON file.

    The a5 seed carries the exchange matrix exactly as printed in the worked
    example, which differs from the p/s-formula output at several entries
    (see the package README); the b3 seed agrees with the formula.
    """
    if name not in FIXTURE_SEEDS:
        raise CellSeedError(f"unknown fixture seed {name!r}; have {FIXTURE_SEEDS}")
    text = resources.files("cellseed.data").joinpath(f"{name}.json").read_text()
    return seed_from_json(text)


#: builtin identity sets for the verify command: name -> (n, cell word, lines)
VERIFY_FIXTURES: dict[str, tuple[int, Word, tuple[str, ...]]] = {
    "minor-identities": (
        6,
        A5_WORD,
        (
            "D{1,3|5,6} = D{1|2}*D{2,3|5,6} - D{1,2,3|2,5,6}",
            "D{1,3|5,6} = D{1|2}*D{1,2,3|1,5,6} - D{1,2,3|2,5,6}",
        ),
    ),
}


def lifted_relation_identities(seed: Seed) -> tuple[tuple[str, "object", "object"], ...]:
    """Identities proj(lift of relation) == exchange binomial, per mutable k.

    Both sides are formal minor expressions; the left side uses the lift's own
    (possibly stripped) words, the right side the seed labels, so equality is
    a genuine function identity rather than a symbol comparison.
    """
    from .lift import build_flag_seed, lift_relation, project
    from .oracle import MinorExpr, minor_spec_from_symbol, restricted_to_expr
    from .rootsys import WeightVec, apply_word
    from .lift import MinorSymbol

    rank = seed.lie_type.rank
    fs = build_flag_seed(seed)
    out = []
    for k in seed.mutable_positions():
        rel = lift_relation(fs, k)
        lhs = restricted_to_expr(project(rel), rank)
        from .seedcore import exchange_binomial

        bino = exchange_binomial(seed, k)
        terms = []
        for expo in (bino.m_expo, bino.l_expo):
            factors = []
            for pos, e in enumerate(expo, start=1):
                if not e:
                    continue
                label = seed.label(pos)
                weight = apply_word(
                    seed.lie_type, label.prefix, WeightVec.fundamental(rank, label.fund)
                )
                sym = MinorSymbol(label.fund, weight, label.prefix, "restricted")
                factors.append((minor_spec_from_symbol(sym, rank), e))
            terms.append((1, tuple(factors)))
        rhs = MinorExpr(tuple(terms))
        out.append((f"k={k}", lhs, rhs))
    return tuple(out)
