"""Variable contexts and exponent-vector monomials.

A Ring here is nothing more than an ordered list of distinct variable
names; no coefficient field is involved anywhere, so every computation
in the library is exact integer combinatorics on exponent vectors.
The fixed variable order is the basis of the canonical monomial order
(total degree first, ties broken lexicographically) that makes all
output deterministic.
"""

from dataclasses import dataclass
from operator import add, le
from typing import Iterator, Sequence

from .errors import RingMismatchError, VidealError


@dataclass(frozen=True, slots=True)
class Ring:
    """An ordered tuple of distinct variable names."""

    name: str
    vars: tuple[str, ...]

    def __post_init__(self):
        if not self.vars:
            raise VidealError(f"ring {self.name!r} needs at least one variable")
        if len(set(self.vars)) != len(self.vars):
            raise VidealError(f"ring {self.name!r} has duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise VidealError(f"ring {self.name!r} has no variable {var!r}") from None

    def __str__(self) -> str:
        return f"{self.name}[{', '.join(self.vars)}]"


def make_ring(name: str, vars: Sequence[str]) -> Ring:
    """Create a ring from an ordered sequence of distinct variable names."""
    return Ring(name, tuple(vars))


def join_rings(a: Ring, b: Ring) -> Ring:
    """Tensor two rings with disjoint variables: the joined variable list
    is ``a``'s variables followed by ``b``'s."""
    overlap = set(a.vars) & set(b.vars)
    if overlap:
        raise VidealError(
            f"rings {a.name!r} and {b.name!r} share variables {sorted(overlap)}"
        )
    return Ring(f"{a.name}*{b.name}", a.vars + b.vars)


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial as a vector of non-negative exponents over a ring.

    The all-zeros vector represents 1.
    """

    ring: Ring
    exp: tuple[int, ...]

    def __post_init__(self):
        if len(self.exp) != self.ring.nvars:
            raise VidealError(
                f"exponent vector of length {len(self.exp)} does not fit "
                f"ring {self.ring.name!r} with {self.ring.nvars} variables"
            )
        if any(e < 0 for e in self.exp):
            raise VidealError("monomial exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.exp)

    def is_one(self) -> bool:
        return not any(self.exp)

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = []
        for var, e in zip(self.ring.vars, self.exp):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "*".join(parts)


def mono(ring: Ring, **exps: int) -> Monomial:
    """Convenience constructor: ``mono(R, x=2, y=1)`` is x^2*y in R."""
    vec = [0] * ring.nvars
    for var, e in exps.items():
        vec[ring.index(var)] = e
    return Monomial(ring, tuple(vec))


def check_same_ring(*objects) -> Ring:
    ring = objects[0].ring
    for obj in objects[1:]:
        if obj.ring != ring:
            raise RingMismatchError(
                f"operands live over different rings "
                f"({ring.name!r} vs {obj.ring.name!r})"
            )
    return ring


# Exponent-tuple kernels.  Hot loops throughout the library work on raw
# tuples and only wrap results in Monomial at API boundaries.

def divides_exp(u: tuple[int, ...], f: tuple[int, ...]) -> bool:
    return all(map(le, u, f))


def gcd_exp(u: tuple[int, ...], f: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(min, u, f))


def lcm_exp(u: tuple[int, ...], f: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(max, u, f))


def mul_exp(u: tuple[int, ...], f: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(add, u, f))


def quot_exp(u: tuple[int, ...], f: tuple[int, ...]) -> tuple[int, ...]:
    """u / gcd(u, f) componentwise: exp(u) - min(exp(u), exp(f))."""
    return tuple(a - b if a > b else 0 for a, b in zip(u, f))


def scale_exp(u: tuple[int, ...], m: int) -> tuple[int, ...]:
    return tuple(e * m for e in u)


def canonical_key(exp: tuple[int, ...]) -> tuple:
    """Sort key for the canonical monomial order: graded, then lex by the
    ring's variable order (higher power of an earlier variable first)."""
    return (sum(exp), tuple(-e for e in exp))


def degree(f: Monomial) -> int:
    return f.degree


def divides(u: Monomial, f: Monomial) -> bool:
    check_same_ring(u, f)
    return divides_exp(u.exp, f.exp)


def gcd(u: Monomial, f: Monomial) -> Monomial:
    ring = check_same_ring(u, f)
    return Monomial(ring, gcd_exp(u.exp, f.exp))


def lcm(u: Monomial, f: Monomial) -> Monomial:
    ring = check_same_ring(u, f)
    return Monomial(ring, lcm_exp(u.exp, f.exp))


def mul(u: Monomial, f: Monomial) -> Monomial:
    ring = check_same_ring(u, f)
    return Monomial(ring, mul_exp(u.exp, f.exp))


def quotient_by_gcd(u: Monomial, f: Monomial) -> Monomial:
    """The per-generator kernel of the colon formula: u / gcd(u, f)."""
    ring = check_same_ring(u, f)
    return Monomial(ring, quot_exp(u.exp, f.exp))


def embedding(src: Ring, dst: Ring) -> tuple[int, ...]:
    """Positions of ``src``'s variables inside ``dst``, matched by name."""
    return tuple(dst.index(v) for v in src.vars)


def embed_exp(
    exp: tuple[int, ...], positions: tuple[int, ...], width: int
) -> tuple[int, ...]:
    vec = [0] * width
    for pos, e in zip(positions, exp):
        vec[pos] = e
    return tuple(vec)


def embed(f: Monomial, dst: Ring) -> Monomial:
    """Embed a monomial into a larger ring containing its variables,
    padding the new coordinates with zeros."""
    positions = embedding(f.ring, dst)
    return Monomial(dst, embed_exp(f.exp, positions, dst.nvars))


def exps_of_degree(nvars: int, d: int, bounds: Sequence[int] | None = None
                   ) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of total degree d, in canonical order.

    Optional per-coordinate upper bounds restrict the enumeration to a box.
    """
    if bounds is None:
        bounds = [d] * nvars
    suffix = [0] * (nvars + 1)
    for i in range(nvars - 1, -1, -1):
        suffix[i] = suffix[i + 1] + bounds[i]

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == nvars - 1:
            if remaining <= bounds[i]:
                yield prefix + (remaining,)
            return
        lo = max(0, remaining - suffix[i + 1])
        for e in range(min(bounds[i], remaining), lo - 1, -1):
            yield from rec(i + 1, remaining - e, prefix + (e,))

    yield from rec(0, d, ())


def monomials_of_degree(ring: Ring, d: int) -> Iterator[Monomial]:
    for exp in exps_of_degree(ring.nvars, d):
        yield Monomial(ring, exp)


def monomials_up_to_degree(ring: Ring, cap: int) -> Iterator[Monomial]:
    """All monomials of degree <= cap, in increasing canonical order."""
    for d in range(cap + 1):
        yield from monomials_of_degree(ring, d)
