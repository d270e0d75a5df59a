"""Run configuration: reproducible randomness and resource limits."""

from __future__ import annotations

import random
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Config:
    """Knobs for the probabilistic subroutines and the soft envelope.

    Every internal random choice (splitting elements in the equal-degree
    factorization, non-residue searches, pretest prime selection) draws
    from a generator derived from `seed` plus a local tag, so identical
    inputs give identical runs regardless of call order or worker count.
    """

    seed: int = 0
    pretest_primes: int = 5
    # soft input envelope; the CLI enforces it unless --force is given
    max_degree: int = 8
    max_ell: int = 7
    max_rank: int = 4
    # hard resource caps (always enforced)
    max_scan: int = 200_000       # exponent vectors in independence scans
    max_enumeration: int = 50_000  # vectors in the brute-force degree oracle
    max_terms: int = 4096          # inclusion-exclusion terms
    max_bits: int = 200_000        # coefficient size guard in basis exchanges
    debug: bool = False

    def with_seed(self, seed: int) -> "Config":
        return replace(self, seed=seed)


DEFAULT = Config()


def rng_for(cfg: Config, *tags) -> random.Random:
    """Deterministic generator for a given configuration and context tags."""
    key = f"{cfg.seed}|" + "|".join(str(t) for t in tags)
    return random.Random(key)
