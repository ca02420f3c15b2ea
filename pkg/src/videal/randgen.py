"""Random instance generation for fuzz sweeps and property tests.

All sampling goes through an explicit random.Random so identical seeds
reproduce identical instances everywhere (CLI fuzz mode, tests).
"""

import random

from .errors import InternalError
from .filtrations import normally_torsion_free
from .ideals import MonomialIdeal, from_exps
from .rings import Ring, make_ring


def random_ring(rng: random.Random, name: str, var_prefix: str, max_vars: int = 3) -> Ring:
    t = rng.randint(1, max_vars)
    return make_ring(name, [f"{var_prefix}{i + 1}" for i in range(t)])


def random_ideal(
    rng: random.Random,
    ring: Ring,
    max_gens: int = 4,
    max_exp: int = 2,
    squarefree: bool = False,
) -> MonomialIdeal:
    """A random proper nonzero monomial ideal (every generator has
    positive degree, so minimalization cannot produce the unit ideal)."""
    cap = 1 if squarefree else max_exp
    count = rng.randint(1, max_gens)
    gens = []
    for _ in range(count):
        while True:
            exp = tuple(rng.randint(0, cap) for _ in range(ring.nvars))
            if any(exp):
                gens.append(exp)
                break
    return from_exps(ring, gens)


def random_pair(
    rng: random.Random,
    max_vars: int = 3,
    max_gens: int = 4,
    max_exp: int = 2,
    squarefree_first: bool = False,
) -> tuple[MonomialIdeal, MonomialIdeal]:
    ring_a = random_ring(rng, "A", "x", max_vars)
    ring_b = random_ring(rng, "B", "y", max_vars)
    i = random_ideal(rng, ring_a, max_gens, max_exp, squarefree=squarefree_first)
    j = random_ideal(rng, ring_b, max_gens, max_exp)
    return i, j


def random_ntf_pair(
    rng: random.Random,
    max_vars: int = 3,
    max_gens: int = 4,
    max_exp: int = 2,
    k_max: int = 3,
    max_attempts: int = 1000,
) -> tuple[MonomialIdeal, MonomialIdeal, int]:
    """A random pair whose first ideal is square-free and normally
    torsion-free up to k_max.  Rejected draws are counted, never skipped
    silently; the attempt count is returned."""
    attempts = 0
    while attempts < max_attempts:
        attempts += 1
        i, j = random_pair(rng, max_vars, max_gens, max_exp, squarefree_first=True)
        if normally_torsion_free(i, k_max):
            return i, j, attempts
    raise InternalError("could not draw a normally-torsion-free ideal")
