"""The strange Lie superalgebra q(N): generators, parity, superbracket.

q(N) sits inside gl(N|N) as the span of the 2N^2 elements
F_{ij} = E_{ij} + E_{-i,-j} with indices i, j running over
-N..-1, 1..N and the identification F_{ij} = F_{-i,-j}. We store the
canonical representative with i > 0; any constructor input with i < 0 is
normalized by flipping both signs.

The superbracket of two generators is the four-delta expression

    [F_ij, F_kl] = d(k,j) F_il - (-1)^s d(i,l) F_kj
                 + d(k,-j) F_{-i,l} - (-1)^s d(-i,l) F_{k,-j}

with s = (par(i)+par(j)) * (par(k)+par(l)) and par(k) = 0 for k > 0,
1 for k < 0. The deltas are evaluated on the stored indices exactly as
written (the expression is invariant under flipping the signs of either
argument's index pair), and the resulting generators are normalized and
merged.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache

BracketResult = list[tuple[int, "GeneratorIndex"]]


def parity(k: int) -> int:
    """Index parity: 0 for positive, 1 for negative indices."""
    if k == 0:
        raise ValueError("index 0 is not a valid generator index")
    return 0 if k > 0 else 1


@lru_cache(maxsize=None)
def gen(i: int, j: int) -> "GeneratorIndex":
    """Interned generator constructor; hot loops build millions of these."""
    return GeneratorIndex(i, j)


@dataclass(frozen=True, slots=True)
class GeneratorIndex:
    """A generator F_{ij}, stored with the canonical representative i > 0."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == 0 or self.j == 0:
            raise ValueError("generator indices must be nonzero")
        if self.i < 0:
            object.__setattr__(self, "i", -self.i)
            object.__setattr__(self, "j", -self.j)

    def validate(self, N: int) -> "GeneratorIndex":
        if abs(self.i) > N or abs(self.j) > N:
            raise ValueError(f"{self} is not a generator of q({N})")
        return self

    def __str__(self) -> str:
        return f"F({self.i},{self.j})"


class TriangularClass(IntEnum):
    """Triangular classes; integer values give the global PBW order."""

    LOWERING = 0
    CARTAN_ODD = 1
    CARTAN_EVEN = 2
    RAISING = 3


@lru_cache(maxsize=None)
def generator_parity(g: GeneratorIndex) -> int:
    """Z2-degree of F_{ij}: (par(i) + par(j)) mod 2."""
    return (parity(g.i) + parity(g.j)) % 2


@lru_cache(maxsize=None)
def triangular_class(g: GeneratorIndex) -> TriangularClass:
    ai, aj = abs(g.i), abs(g.j)
    if ai > aj:
        return TriangularClass.LOWERING
    if ai < aj:
        return TriangularClass.RAISING
    return TriangularClass.CARTAN_EVEN if g.i == g.j else TriangularClass.CARTAN_ODD


def weight(g: GeneratorIndex, N: int) -> tuple[int, ...]:
    """Weight of F_{ij} in the eps basis: e_|i| - e_|j| (zero on the Cartan)."""
    g.validate(N)
    w = [0] * N
    w[abs(g.i) - 1] += 1
    w[abs(g.j) - 1] -= 1
    return tuple(w)


def _sign(k: int) -> int:
    return 1 if k > 0 else -1


@lru_cache(maxsize=None)
def sort_key(g: GeneratorIndex) -> tuple[int, int, int, int, int]:
    """Global generator order: triangular class, then (|i|, |j|, sgn i, sgn j).

    Lowering operators come first, then the odd Cartan generators
    G_i = F_{i,-i}, then the even Cartan F_{ii}, then raising operators.
    The key is total on normalized generators.
    """
    return (int(triangular_class(g)), abs(g.i), abs(g.j), _sign(g.i), _sign(g.j))


def _merge(raw: list[tuple[int, GeneratorIndex]]) -> BracketResult:
    acc: dict[GeneratorIndex, int] = {}
    for c, g in raw:
        acc[g] = acc.get(g, 0) + c
    out = [(c, g) for g, c in acc.items() if c != 0]
    out.sort(key=lambda t: sort_key(t[1]))
    return out


def superbracket(a: GeneratorIndex, b: GeneratorIndex) -> BracketResult:
    """[F_ij, F_kl] as a merged list of (integer coefficient, generator)."""
    i, j = a.i, a.j
    k, l = b.i, b.j
    s = -1 if (parity(i) + parity(j)) * (parity(k) + parity(l)) % 2 else 1
    raw = []
    if k == j:
        raw.append((1, GeneratorIndex(i, l)))
    if i == l:
        raw.append((-s, GeneratorIndex(k, j)))
    if k == -j:
        raw.append((1, GeneratorIndex(-i, l)))
    if -i == l:
        raw.append((-s, GeneratorIndex(k, -j)))
    return _merge(raw)


def bracket_linear(ta: BracketResult, tb: BracketResult) -> BracketResult:
    """Bilinear extension of the superbracket to linear combinations."""
    raw = []
    for ca, ga in ta:
        for cb, gb in tb:
            for c, g in superbracket(ga, gb):
                raw.append((ca * cb * c, g))
    return _merge(raw)


def jacobi_defect(a: GeneratorIndex, b: GeneratorIndex, c: GeneratorIndex) -> BracketResult:
    """[a,[b,c]] - [[a,b],c] - (-1)^{p(a)p(b)} [b,[a,c]]; empty iff Jacobi holds."""
    one_a = [(1, a)]
    one_b = [(1, b)]
    one_c = [(1, c)]
    sgn = -1 if generator_parity(a) * generator_parity(b) % 2 else 1
    lhs = bracket_linear(one_a, bracket_linear(one_b, one_c))
    rhs1 = bracket_linear(bracket_linear(one_a, one_b), one_c)
    rhs2 = bracket_linear(one_b, bracket_linear(one_a, one_c))
    return _merge([(c0, g) for c0, g in lhs]
                  + [(-c0, g) for c0, g in rhs1]
                  + [(-sgn * c0, g) for c0, g in rhs2])


def all_generators(N: int) -> list[GeneratorIndex]:
    """The 2N^2 normalized generators of q(N), in global order."""
    signed = [k for k in range(-N, N + 1) if k != 0]
    gens = {GeneratorIndex(i, j) for i in signed for j in signed}
    return sorted(gens, key=sort_key)


def signed_indices(N: int) -> list[int]:
    """-N..-1, 1..N in ascending order."""
    return [k for k in range(-N, N + 1) if k != 0]
