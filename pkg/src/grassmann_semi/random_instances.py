"""Seeded random instances for property runs and the CLI harness.

Entries are small so that exact arithmetic stays cheap: ``-3..3`` over the
integers and rationals, ``{0, 1}`` over naturals and Booleans, and
``-5..5`` plus ``-inf`` (weight 1/8) over max-plus.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Optional, Sequence

from .exterior import MultiVector
from .hasse_schmidt import Endomorphism
from .scalars import NEG_INF, Kind, PairScalar, ScalarDomain


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent generator for one trial; depends only on ``(seed, trial)``."""
    return random.Random(f"{seed}/{trial}")


def random_scalar(domain: ScalarDomain, rng: random.Random):
    kind = domain.kind
    if kind in (Kind.INTEGERS, Kind.RATIONALS):
        return domain.coerce(rng.randint(-3, 3))
    if kind is Kind.NATURALS:
        return rng.randint(0, 1)
    if kind is Kind.BOOLEANS:
        return rng.random() < 0.5
    if rng.random() < 1 / 8:
        return NEG_INF
    return rng.randint(-5, 5)


def random_endomorphism(n: int, domain: ScalarDomain, rng: random.Random) -> Endomorphism:
    return Endomorphism(n, domain, tuple(tuple(random_scalar(domain, rng) for _ in range(n)) for _ in range(n)))


def random_pair(domain: ScalarDomain, rng: random.Random, negated: bool = True) -> PairScalar:
    """A random nonzero pair; ``negated=False`` keeps the ``neg`` slot empty."""
    while True:
        neg = random_scalar(domain, rng) if negated else domain.zero
        pair = PairScalar(random_scalar(domain, rng), neg, domain)
        if not pair.is_zero():
            return pair


def random_multivector(
    n: int,
    domain: ScalarDomain,
    rng: random.Random,
    degree: int,
    max_terms: int = 3,
    support: Optional[Sequence[int]] = None,
) -> MultiVector:
    """A sparse element of pure ``degree`` whose words use only ``support`` indices."""
    pool = sorted(range(n) if support is None else support)
    words = list(combinations(pool, degree))
    if not words:
        return MultiVector.zero(n, domain)
    chosen = rng.sample(words, min(len(words), rng.randint(1, max_terms)))
    return MultiVector(n, domain, {w: random_pair(domain, rng, negated=degree >= 2) for w in chosen})


def random_vector(n: int, domain: ScalarDomain, rng: random.Random) -> MultiVector:
    return MultiVector.vector(n, domain, [random_scalar(domain, rng) for _ in range(n)])


def random_word(n: int, degree: int, rng: random.Random) -> tuple:
    return tuple(sorted(rng.sample(range(n), degree)))


def split_support(n: int, rng: random.Random, left: int, right: int):
    """Two disjoint random index sets of sizes at least ``left`` and ``right``."""
    idx = list(range(n))
    rng.shuffle(idx)
    cut = rng.randint(left, n - right)
    return sorted(idx[:cut]), sorted(idx[cut:])
