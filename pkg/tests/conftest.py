import random

import pytest

from cellseed import (
    LieType,
    ParabolicConfig,
    Word,
    cartan_matrix,
    initial_seed,
    reflect,
)
from cellseed.fixtures import A5_WORD, B3_WORD, load_seed


@pytest.fixture(scope="session")
def a5():
    return LieType.parse("A5")


@pytest.fixture(scope="session")
def b3():
    return LieType.parse("B3")


@pytest.fixture(scope="session")
def cfg_a5(a5):
    return ParabolicConfig.from_j(a5, (1, 3))


@pytest.fixture(scope="session")
def cfg_b3(b3):
    return ParabolicConfig.from_j(b3, (3,))


@pytest.fixture(scope="session")
def seed_b3(b3, cfg_b3):
    return initial_seed(b3, cfg_b3, B3_WORD)


@pytest.fixture(scope="session")
def seed_a5(a5, cfg_a5):
    """Seed with the formula-computed matrix."""
    return initial_seed(a5, cfg_a5, A5_WORD)


@pytest.fixture(scope="session")
def seed_a5_fixture():
    """Seed carrying the matrix exactly as printed in the worked example."""
    return load_seed("a5")


def positive_roots(lie_type, subset):
    """Positive roots of the sub-root-system on ``subset`` by reflection closure."""
    cm = cartan_matrix(lie_type)
    n = lie_type.rank
    simples = {
        tuple(1 if k == i - 1 else 0 for k in range(n)): i for i in subset
    }
    roots = set(simples)
    frontier = set(simples)
    while frontier:
        new = set()
        for r in frontier:
            for i in subset:
                pairing = sum(cm.entry(i, j + 1) * c for j, c in enumerate(r))
                img = list(r)
                img[i - 1] -= pairing
                img_t = tuple(img)
                if all(c >= 0 for c in img_t) and img_t not in roots and any(img_t):
                    new.add(img_t)
        roots |= new
        frontier = new
    return roots


def random_words(rng, count, max_len=12):
    """Random (type, word) pairs across several finite types."""
    types = [LieType.parse(t) for t in ("A3", "A5", "B3", "C3", "D4", "G2", "F4", "B2")]
    out = []
    for _ in range(count):
        lt = rng.choice(types)
        length = rng.randint(0, max_len)
        letters = tuple(rng.randint(1, lt.rank) for _ in range(length))
        out.append((lt, Word(letters)))
    return out


def braid_moves(lie_type, word, rng, attempts=30):
    """Apply random braid/commutation rewrites; the Weyl element is unchanged."""
    cm = cartan_matrix(lie_type)
    letters = list(word.letters)
    for _ in range(attempts):
        if len(letters) < 2:
            break
        pos = rng.randrange(len(letters) - 1)
        i, j = letters[pos], letters[pos + 1]
        if i == j:
            continue
        m = {0: 2, 1: 3, 2: 4, 3: 6}[cm.entry(i, j) * cm.entry(j, i)]
        seg = letters[pos : pos + m]
        if len(seg) < m:
            continue
        expected = [i if t % 2 == 0 else j for t in range(m)]
        if seg == expected:
            letters[pos : pos + m] = [j if t % 2 == 0 else i for t in range(m)]
    return Word(tuple(letters))
