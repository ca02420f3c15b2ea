"""Monomial ideals with canonical minimal generating sets.

Every constructor minimalizes eagerly, so two ideals are equal exactly
when their generator tuples are identical.  Generators are kept in the
canonical graded-lex order and always form an antichain under
divisibility.  The zero ideal has no generators; the unit ideal is
generated by 1.
"""

from dataclasses import dataclass
from typing import Iterable

from .errors import RingMismatchError, VidealError
from .rings import (
    Monomial,
    Ring,
    canonical_key,
    check_same_ring,
    divides_exp,
    lcm_exp,
    mul_exp,
    quot_exp,
)


def minimal_exps(exps: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Antichain of componentwise-minimal vectors, canonically sorted.

    The all-zeros vector (the monomial 1) divides everything, so its
    presence collapses the result to the unit ideal's generator set.
    """
    uniq = sorted(set(exps), key=canonical_key)
    kept: list[tuple[int, ...]] = []
    for e in uniq:
        # Sorted by degree, so only already-kept vectors can divide e.
        if not any(divides_exp(m, e) for m in kept):
            kept.append(e)
    return tuple(kept)


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A monomial ideal, stored by its unique minimal generating set."""

    ring: Ring
    gens: tuple[Monomial, ...]

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def exps(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.exp for g in self.gens)

    def contains(self, f: Monomial) -> bool:
        """Membership: some minimal generator divides f."""
        check_same_ring(self, f)
        fe = f.exp
        return any(divides_exp(g.exp, fe) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff other is a subset of self (as sets of monomials)."""
        check_same_ring(self, other)
        return all(self.contains(g) for g in other.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def from_exps(ring: Ring, exps: Iterable[tuple[int, ...]]) -> MonomialIdeal:
    return MonomialIdeal(
        ring, tuple(Monomial(ring, e) for e in minimal_exps(exps))
    )


def ideal(ring: Ring, gens: Iterable[Monomial]) -> MonomialIdeal:
    """The ideal generated by the given monomials, minimalized."""
    gens = tuple(gens)
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError(
                f"generator {g} lives in {g.ring.name!r}, not {ring.name!r}"
            )
    return from_exps(ring, (g.exp for g in gens))


def minimalize(ring: Ring, raw: Iterable[Monomial]) -> MonomialIdeal:
    """Canonicalize a raw generating set (same as ``ideal``)."""
    return ideal(ring, raw)


def zero_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, (Monomial(ring, (0,) * ring.nvars),))


def sum_ideals(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    ring = check_same_ring(a, b)
    return from_exps(ring, a.exps() + b.exps())


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    ring = check_same_ring(a, b)
    if a.is_zero() or b.is_zero():
        return zero_ideal(ring)
    pairs = {mul_exp(u, v) for u in a.exps() for v in b.exps()}
    return from_exps(ring, pairs)


def power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise VidealError(f"negative ideal power {k}")
    result = unit_ideal(a.ring)
    for _ in range(k):
        result = product(result, a)
    return result


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcm of generators."""
    ring = check_same_ring(a, b)
    if a.is_zero() or b.is_zero():
        return zero_ideal(ring)
    pairs = {lcm_exp(u, v) for u in a.exps() for v in b.exps()}
    return from_exps(ring, pairs)


def intersect_all(ideals: Iterable[MonomialIdeal], ring: Ring) -> MonomialIdeal:
    """Intersection of a family, with the unit ideal as empty product."""
    result = unit_ideal(ring)
    for part in ideals:
        result = intersect(result, part)
    return result


def colon_monomial(a: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """The colon ideal a : f, generated by u / gcd(u, f) over u in G(a).

    The zero ideal has no generators to quotient, so its colon by any
    monomial is again the zero ideal.
    """
    ring = check_same_ring(a, f)
    fe = f.exp
    return from_exps(ring, (quot_exp(u, fe) for u in a.exps()))


def colon_ideal(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The colon ideal a : b, the intersection of a : v over v in G(b)."""
    ring = check_same_ring(a, b)
    if b.is_zero():
        raise VidealError("colon by the zero ideal is the whole ring; not supported")
    result = unit_ideal(ring)
    for v in b.gens:
        result = intersect(result, colon_monomial(a, v))
    return result


@dataclass(frozen=True, slots=True)
class PrimeSupport:
    """A monomial prime, identified with its non-empty set of variables.

    Stored as the sorted tuple of variable indices in the ring's fixed
    order, which doubles as the canonical sort key for primes.
    """

    ring: Ring
    indices: tuple[int, ...]

    def __post_init__(self):
        if not self.indices:
            raise VidealError("a monomial prime needs at least one variable")
        if list(self.indices) != sorted(set(self.indices)):
            raise VidealError("prime support indices must be sorted and distinct")
        if self.indices[-1] >= self.ring.nvars:
            raise VidealError("prime support index out of range")

    @property
    def var_names(self) -> tuple[str, ...]:
        return tuple(self.ring.vars[i] for i in self.indices)

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i in self.indices:
            vec = [0] * self.ring.nvars
            vec[i] = 1
            gens.append(tuple(vec))
        return from_exps(self.ring, gens)

    def contains_prime(self, other: "PrimeSupport") -> bool:
        return set(other.indices) <= set(self.indices)

    def __str__(self) -> str:
        return "(" + ", ".join(self.var_names) + ")"


def prime_support(ring: Ring, var_names: Iterable[str]) -> PrimeSupport:
    return PrimeSupport(ring, tuple(sorted(ring.index(v) for v in var_names)))


def as_prime(a: MonomialIdeal) -> PrimeSupport | None:
    """The prime support of a, or None if a is not a monomial prime."""
    indices = []
    for g in a.gens:
        nz = [i for i, e in enumerate(g.exp) if e]
        if len(nz) != 1 or g.exp[nz[0]] != 1:
            return None
        indices.append(nz[0])
    if not indices:
        return None
    return PrimeSupport(a.ring, tuple(sorted(indices)))


def localize(a: MonomialIdeal, p: PrimeSupport) -> MonomialIdeal:
    """The contraction a R_p ∩ R for a monomial prime p.

    Variables outside p become units in R_p, so localization just
    deletes their exponents from every generator.  A generator supported
    entirely outside p becomes 1 and the result is the unit ideal.
    """
    ring = check_same_ring(a, p)
    keep = set(p.indices)
    mapped = {
        tuple(e if i in keep else 0 for i, e in enumerate(u)) for u in a.exps()
    }
    return from_exps(ring, mapped)


def equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    check_same_ring(a, b)
    return a == b


def is_squarefree(a: MonomialIdeal) -> bool:
    return all(e <= 1 for u in a.exps() for e in u)
