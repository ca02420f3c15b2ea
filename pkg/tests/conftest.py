from hypothesis import strategies as st

from videal.ideals import MonomialIdeal, from_exps
from videal.rings import Ring, make_ring


@st.composite
def small_rings(draw, max_vars: int = 3, name: str = "R", prefix: str = "x") -> Ring:
    t = draw(st.integers(1, max_vars))
    return make_ring(name, [f"{prefix}{i}" for i in range(1, t + 1)])


@st.composite
def exponent_vectors(draw, nvars: int, max_exp: int = 3, nonzero: bool = True):
    vec = draw(
        st.lists(st.integers(0, max_exp), min_size=nvars, max_size=nvars).map(tuple)
    )
    if nonzero and not any(vec):
        pos = draw(st.integers(0, nvars - 1))
        vec = tuple(1 if i == pos else e for i, e in enumerate(vec))
    return vec


@st.composite
def small_ideals(
    draw,
    ring: Ring | None = None,
    max_gens: int = 4,
    max_exp: int = 3,
    max_vars: int = 3,
    name: str = "R",
    prefix: str = "x",
) -> MonomialIdeal:
    """Proper nonzero monomial ideals over small rings."""
    if ring is None:
        ring = draw(small_rings(max_vars=max_vars, name=name, prefix=prefix))
    count = draw(st.integers(1, max_gens))
    gens = [draw(exponent_vectors(ring.nvars, max_exp)) for _ in range(count)]
    return from_exps(ring, gens)
