"""Irreducible decomposition, associated primes, and minimal primes.

The decomposition uses the classical splitting recursion: while some
generator factors into two coprime non-unit parts v and w, the ideal is
the intersection of (L + <v>) and (L + <w>); once every generator is a
pure variable power the ideal is irreducible.  Redundant components are
removed at the end by pairwise containment, which suffices because an
irreducible monomial ideal Q is intersection-prime: if no component is
contained in Q, picking one monomial per component outside Q gives an
lcm that lies in the intersection but keeps every exponent on supp(Q)
strictly below Q's, so the intersection is not inside Q either.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import ImproperIdealError, InternalError
from .ideals import (
    MonomialIdeal,
    PrimeSupport,
    colon_monomial,
    from_exps,
    intersect_all,
    sum_ideals,
)
from .rings import canonical_key

_DECOMP_CACHE_LIMIT = 200_000
_decomp_cache: dict[MonomialIdeal, frozenset[MonomialIdeal]] = {}


@dataclass(frozen=True, slots=True)
class IrreducibleComponent:
    """An irreducible monomial ideal (all generators pure variable powers)
    together with its radical prime."""

    ideal: MonomialIdeal
    prime: PrimeSupport


def _require_proper_nonzero(a: MonomialIdeal) -> None:
    if not a.is_proper_nonzero():
        kind = "zero" if a.is_zero() else "unit"
        raise ImproperIdealError(f"operation requires a proper nonzero ideal, got the {kind} ideal")


def _split(a: MonomialIdeal):
    """The first generator (canonical order) with support size >= 2, split
    as its first variable's pure power times the rest; None if irreducible."""
    for g in a.gens:
        support = [i for i, e in enumerate(g.exp) if e]
        if len(support) >= 2:
            i = support[0]
            v = tuple(e if j == i else 0 for j, e in enumerate(g.exp))
            w = tuple(0 if j == i else e for j, e in enumerate(g.exp))
            ring = a.ring
            return (
                sum_ideals(a, from_exps(ring, [v])),
                sum_ideals(a, from_exps(ring, [w])),
            )
    return None


def _decompose(a: MonomialIdeal) -> frozenset[MonomialIdeal]:
    """All leaves of the splitting recursion (possibly redundant).

    Iterative post-order with a shared memo keyed by canonical generator
    sets; the memo is a pure cache and never changes results.
    """
    if len(_decomp_cache) > _DECOMP_CACHE_LIMIT:
        _decomp_cache.clear()
    stack = [a]
    while stack:
        cur = stack[-1]
        if cur in _decomp_cache:
            stack.pop()
            continue
        split = _split(cur)
        if split is None:
            _decomp_cache[cur] = frozenset((cur,))
            stack.pop()
            continue
        left, right = split
        pending = [s for s in (left, right) if s not in _decomp_cache]
        if pending:
            stack.extend(pending)
        else:
            _decomp_cache[cur] = _decomp_cache[left] | _decomp_cache[right]
            stack.pop()
    return _decomp_cache[a]


def _radical_support(q: MonomialIdeal) -> PrimeSupport:
    indices = sorted(next(i for i, e in enumerate(g.exp) if e) for g in q.gens)
    return PrimeSupport(q.ring, tuple(indices))


def irreducible_decomposition(a: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """An irredundant set of irreducible components intersecting to a.

    The intersection equality is re-checked exactly on every call.
    """
    _require_proper_nonzero(a)
    leaves = sorted(_decompose(a), key=lambda q: tuple(canonical_key(e) for e in q.exps()))
    kept = [
        q
        for q in leaves
        if not any(other is not q and q.contains_ideal(other) for other in leaves)
    ]
    if intersect_all(kept, a.ring) != a:
        raise InternalError(f"irreducible decomposition of {a} does not intersect back")
    return tuple(IrreducibleComponent(q, _radical_support(q)) for q in kept)


@lru_cache(maxsize=16384)
def associated_primes(a: MonomialIdeal) -> tuple[PrimeSupport, ...]:
    """Ass(a): the radicals of the irredundant irreducible components.

    Every returned prime is certified by exhibiting a monomial f with
    a : f = p; failure to certify is an internal error (it would mean the
    decomposition and the colon characterization disagree).
    """
    from .vnumbers import local_v  # deferred: vnumbers imports this module

    _require_proper_nonzero(a)
    primes = sorted(
        {c.prime for c in irreducible_decomposition(a)}, key=lambda p: p.indices
    )
    for p in primes:
        try:
            report = local_v(a, p)
        except Exception as exc:
            raise InternalError(f"no colon witness for {p} in Ass({a})") from exc
        if colon_monomial(a, report.witness) != p.as_ideal():
            raise InternalError(f"witness certification failed for {p} in Ass({a})")
    return tuple(primes)


def minimal_primes(a: MonomialIdeal) -> tuple[PrimeSupport, ...]:
    """Min(a): the inclusion-minimal associated primes."""
    primes = associated_primes(a)
    return tuple(
        p
        for p in primes
        if not any(q is not p and p.contains_prime(q) for q in primes)
    )
