"""Command-line front end: cartan, w0, cellword, seed, mutate, lift, liftrel,
flagseed and verify subcommands with text or JSON output.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import fixtures
from .exprlang import parse_identity
from .lift import (
    FlagSeed,
    bhat_column,
    build_flag_seed,
    flag_seed_to_dict,
    lift_minor,
    lift_monomial_to_dict,
    lift_relation,
    mutate_flag_seed,
    project,
    render_flag_seed,
)
from .oracle import restricted_to_expr, verify_identity
from .rootsys import (
    CellSeedError,
    LieType,
    ParabolicConfig,
    Word,
    cartan_matrix,
    cell_word,
    longest_word,
    parse_subset,
    word_length,
)
from .seedcore import (
    Seed,
    initial_seed,
    mutate_seed,
    render_seed,
    seed_from_json,
    seed_to_dict,
)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _lie_type(text: str) -> LieType:
    return LieType.parse(text)


def _resolve_seed(args) -> Seed:
    sources = [
        args.seed_file is not None,
        getattr(args, "fixture", None) is not None,
        args.type is not None,
    ]
    if sum(sources) != 1:
        raise CellSeedError(
            "give exactly one seed source: TYPE with --J/--word, --seed-file, or --fixture"
        )
    if args.seed_file is not None:
        with open(args.seed_file) as fh:
            return seed_from_json(fh.read())
    if getattr(args, "fixture", None) is not None:
        return fixtures.load_seed(args.fixture)
    lt = _lie_type(args.type)
    if args.J is None:
        raise CellSeedError("--J is required with an explicit type")
    cfg = ParabolicConfig.from_j(lt, parse_subset(args.J))
    word = Word.parse(args.word) if args.word else cell_word(lt, cfg)
    return initial_seed(lt, cfg, word)


def cmd_cartan(args) -> int:
    cm = cartan_matrix(_lie_type(args.type))
    text = "\n".join(" ".join(f"{x:>2}" for x in row) for row in cm.entries)
    _emit(
        args,
        {
            "type": args.type.upper().replace(" ", ""),
            "entries": [list(r) for r in cm.entries],
            "symmetrizers": list(cm.symmetrizers()),
        },
        text,
    )
    return 0


def cmd_w0(args) -> int:
    lt = _lie_type(args.type)
    subset = parse_subset(args.subset) if args.subset else None
    w = longest_word(lt, subset)
    _emit(
        args,
        {"type": str(lt), "subset": list(subset) if subset else None,
         "word": list(w.letters), "length": len(w)},
        f"{w}  (length {len(w)})",
    )
    return 0


def cmd_cellword(args) -> int:
    lt = _lie_type(args.type)
    cfg = ParabolicConfig.from_j(lt, parse_subset(args.J))
    w = cell_word(lt, cfg)
    _emit(
        args,
        {"type": str(lt), "J": list(cfg.j_set), "K": list(cfg.k_set),
         "word": list(w.letters), "length": len(w)},
        f"{w}  (length {len(w)})",
    )
    return 0


def cmd_seed(args) -> int:
    seed = _resolve_seed(args)
    _emit(args, seed_to_dict(seed), render_seed(seed))
    return 0


def cmd_lift(args) -> int:
    seed = _resolve_seed(args)
    k = args.k
    if not 1 <= k <= seed.size:
        raise CellSeedError(f"position {k} out of range 1..{seed.size}")
    label = seed.label(k)
    mono = lift_minor(seed.lie_type, seed.cfg, label.prefix, label.fund)
    _emit(
        args,
        {"position": k, "lift": lift_monomial_to_dict(mono),
         "projection": str(project(mono))},
        f"~{label} = {mono}   (degree {mono.degree})",
    )
    return 0


def cmd_liftrel(args) -> int:
    seed = _resolve_seed(args)
    fs = build_flag_seed(seed, bhat_literal=args.bhat_literal)
    rel = lift_relation(fs, args.k)
    payload = {
        "k": rel.k,
        "mu": {str(j): c for j, c in zip(rel.mu.js, rel.mu.coeffs) if c},
        "nu": {str(j): c for j, c in zip(rel.nu.js, rel.nu.coeffs) if c},
        "terms": [lift_monomial_to_dict(t) for t in rel.terms],
        "degree": {str(j): c for j, c in zip(rel.degree.js, rel.degree.coeffs) if c},
        "bhat_column": list(bhat_column(fs, rel.k)),
        "projection": str(project(rel)),
    }
    text = f"{rel}\n  projection: {project(rel)}\n  bhat column: {list(bhat_column(fs, rel.k))}"
    _emit(args, payload, text)
    return 0


def cmd_flagseed(args) -> int:
    seed = _resolve_seed(args)
    fs = build_flag_seed(seed, bhat_literal=args.bhat_literal)
    _emit(args, flag_seed_to_dict(fs), render_flag_seed(fs))
    return 0


def _parse_sequence(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def cmd_mutate(args) -> int:
    seed = _resolve_seed(args)
    if args.seq is None and not args.interactive:
        raise CellSeedError("give --seq or --interactive")
    if args.seq is not None:
        for k in _parse_sequence(args.seq):
            seed = mutate_seed(seed, k)
        _emit(args, seed_to_dict(seed), render_seed(seed))
        return 0
    print(render_seed(seed))
    while True:
        print("mutate at (or q to quit)> ", end="", flush=True)
        line = sys.stdin.readline()
        if not line or line.strip().lower() in ("q", "quit"):
            return 0
        try:
            seed = mutate_seed(seed, int(line.strip()))
        except (ValueError, CellSeedError) as exc:
            print(f"cannot mutate: {exc}")
            continue
        print(render_seed(seed))


def _verify_lines(args) -> tuple[int, Word, list[str]]:
    if args.fixture is not None and args.file is not None:
        raise CellSeedError("give either a fixture name or an expression file")
    if args.fixture is not None:
        if args.fixture in fixtures.VERIFY_FIXTURES:
            n, word, lines = fixtures.VERIFY_FIXTURES[args.fixture]
            return n, word, list(lines)
        if args.fixture == "lifted-relations-A5":
            seed = fixtures.load_seed("a5")
            idents = fixtures.lifted_relation_identities(seed)
            return seed.lie_type.rank + 1, seed.word, list(idents)
        raise CellSeedError(f"unknown fixture {args.fixture!r}")
    if args.file is None:
        raise CellSeedError("give --fixture or an expression file")
    if args.n is None or args.cell_word is None:
        raise CellSeedError("--n and --cell-word are required with an expression file")
    with open(args.file) as fh:
        lines = [
            ln.strip()
            for ln in fh
            if ln.strip() and not ln.strip().startswith("#")
        ]
    return args.n, Word.parse(args.cell_word), lines


def cmd_verify(args) -> int:
    n, word, lines = _verify_lines(args)
    results = []
    ok = True
    for idx, line in enumerate(lines):
        if isinstance(line, str):
            name = f"identity {idx + 1}"
            lhs, rhs = parse_identity(line)
        else:
            name, lhs, rhs = line
        report = verify_identity(lhs, rhs, n, word, args.samples, args.rng_seed)
        ok = ok and report.equal
        results.append((name, report))
    text_lines = [f"{name}: {report}" for name, report in results]
    payload = {
        "n": n,
        "cell_word": list(word.letters),
        "samples": args.samples,
        "rng_seed": args.rng_seed,
        "results": [
            {"name": name, "pass": r.equal, "failed_index": r.failed_index}
            for name, r in results
        ],
        "pass": ok,
    }
    _emit(args, payload, "\n".join(text_lines + ["PASS" if ok else "FAIL"]))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--rng-seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument(
        "--bhat-literal",
        action="store_true",
        help="use the literal extension-row sign (beta_j if nonzero, else -alpha_j)",
    )

    seedsrc = argparse.ArgumentParser(add_help=False)
    seedsrc.add_argument("type", nargs="?", help="Lie type such as A5 or B3")
    seedsrc.add_argument("--J", help="J subset, e.g. '{1,3}' or '1,3'")
    seedsrc.add_argument("--word", help="generating word, e.g. '3,2,1,3,2,3' (default: cell word)")
    seedsrc.add_argument("--seed-file", help="read the seed from a JSON file")
    seedsrc.add_argument(
        "--fixture", choices=list(fixtures.FIXTURE_SEEDS), help="use a shipped example seed"
    )

    p = argparse.ArgumentParser(
        prog="cellseed",
        description="Cluster seeds of Schubert cells and their flag-variety lifts.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("cartan", parents=[common], help="print a Cartan matrix")
    sp.add_argument("type")
    sp.set_defaults(func=cmd_cartan)

    sp = sub.add_parser("w0", parents=[common], help="longest-element reduced word")
    sp.add_argument("type")
    sp.add_argument("--subset", help="vertex subset for a parabolic, e.g. '{1,2}'")
    sp.set_defaults(func=cmd_w0)

    sp = sub.add_parser("cellword", parents=[common], help="cell word for a parabolic")
    sp.add_argument("type")
    sp.add_argument("--J", required=True)
    sp.set_defaults(func=cmd_cellword)

    sp = sub.add_parser("seed", parents=[common, seedsrc], help="initial cell seed")
    sp.set_defaults(func=cmd_seed)

    sp = sub.add_parser("lift", parents=[common, seedsrc], help="lift of one variable")
    sp.add_argument("--k", type=int, required=True, help="position of the variable")
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("liftrel", parents=[common, seedsrc], help="lifted exchange relation")
    sp.add_argument("--k", type=int, required=True, help="mutable position")
    sp.set_defaults(func=cmd_liftrel)

    sp = sub.add_parser("flagseed", parents=[common, seedsrc], help="extended flag seed")
    sp.set_defaults(func=cmd_flagseed)

    sp = sub.add_parser("mutate", parents=[common, seedsrc], help="mutate a seed")
    sp.add_argument("--seq", help="comma-separated mutation sequence, e.g. '1,2,1'")
    sp.add_argument("--interactive", action="store_true", help="prompt for indices")
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("verify", parents=[common], help="check minor identities on samples")
    sp.add_argument("--fixture", help="builtin identity set (minor-identities, lifted-relations-A5)")
    sp.add_argument("--file", help="file of identities 'EXPR = EXPR', one per line")
    sp.add_argument("--n", type=int, help="matrix size for SL_n")
    sp.add_argument("--cell-word", help="cell word for sampling")
    sp.add_argument("--samples", type=int, default=20)
    sp.set_defaults(func=cmd_verify)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CellSeedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
