"""Free superalgebra on the generators of q(N).

Elements are finite linear combinations of words (tuples of generators)
with exact rational coefficients; multiplication is concatenation and no
commutation relations are applied. The signed matrix-power sums

    C^(n)_{ij} = sum over k_1..k_{n-1} of
                 F_{i,k1} (-1)^{par(k1)} F_{k1,k2} ... (-1)^{par(k_{n-1})} F_{k_{n-1},j}

and the central elements c_n = sum_i C^(n)_{ii} are built here. Several of
their identities (c_n = 0 for even n, the index-flip symmetry, the
recurrence in n) already hold at this level, before any quotient.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterator

from .structure import GeneratorIndex, gen, generator_parity, parity, signed_indices

Word = tuple[GeneratorIndex, ...]


def word_parity(word: Word) -> int:
    return sum(generator_parity(g) for g in word) % 2


class AlgebraElement:
    """Linear combination of words with Fraction coefficients.

    Canonical form stores no zero coefficients; equality is equality of the
    term map. Instances are immutable by convention.
    """

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: dict):
        clean: dict[Word, Fraction] = {}
        for word, c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            clean[tuple(word)] = c
        self.N = N
        self.terms = clean

    @classmethod
    def zero(cls, N: int) -> "AlgebraElement":
        return cls(N, {})

    @classmethod
    def unit(cls, N: int) -> "AlgebraElement":
        return cls(N, {(): Fraction(1)})

    @classmethod
    def from_word(cls, word, N: int, coeff=1) -> "AlgebraElement":
        word = tuple(word)
        for g in word:
            g.validate(N)
        return cls(N, {word: Fraction(coeff)})

    @classmethod
    def from_generator(cls, g: GeneratorIndex, N: int) -> "AlgebraElement":
        return cls.from_word((g,), N)

    def _check_compatible(self, other: "AlgebraElement") -> None:
        if self.N != other.N:
            raise ValueError(f"rank mismatch: q({self.N}) vs q({other.N})")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return AlgebraElement(self.N, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.N, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        self._check_compatible(other)
        out: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, 0) + c1 * c2
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return AlgebraElement(self.N, out)

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c) -> "AlgebraElement":
        c = Fraction(c)
        if c == 0:
            return AlgebraElement.zero(self.N)
        return AlgebraElement(self.N, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "AlgebraElement(0)"
        bits = []
        for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), str(kv[0]))):
            ws = "*".join(str(g) for g in w) if w else "1"
            bits.append(f"{c}*{ws}")
        return "AlgebraElement(" + " + ".join(bits) + ")"


def bracket_with(g: GeneratorIndex, a: AlgebraElement) -> AlgebraElement:
    """Supercommutator g*a - (-1)^{p(g)p(w)} a*g, term-wise by word parity."""
    g.validate(a.N)
    pg = generator_parity(g)
    out: dict[Word, Fraction] = {}

    def add(word: Word, c: Fraction) -> None:
        s = out.get(word, 0) + c
        if s == 0:
            out.pop(word, None)
        else:
            out[word] = s

    for w, c in a.terms.items():
        add((g,) + w, c)
        sgn = -1 if pg * word_parity(w) % 2 else 1
        add(w + (g,), -sgn * c)
    return AlgebraElement(a.N, out)


def casimir_entry_words(n: int, i: int, j: int, N: int) -> Iterator[tuple[Word, int]]:
    """Yield the (2N)^(n-1) signed words of C^(n)_{ij}, before merging."""
    if n < 1:
        raise ValueError("n must be >= 1")
    GeneratorIndex(i, j).validate(N)
    idx = signed_indices(N)
    for ks in product(idx, repeat=n - 1):
        sign = 1
        factors = []
        prev = i
        for k in ks:
            factors.append(gen(prev, k))
            if parity(k):
                sign = -sign
            prev = k
        factors.append(gen(prev, j))
        yield tuple(factors), sign


def build_casimir_entry(n: int, i: int, j: int, N: int) -> AlgebraElement:
    """C^(n)_{ij} as a canonical free-algebra element; C^(1)_{ij} = F_{ij}."""
    out: dict[Word, Fraction] = {}
    for word, sign in casimir_entry_words(n, i, j, N):
        s = out.get(word, 0) + sign
        if s == 0:
            out.pop(word, None)
        else:
            out[word] = s
    return AlgebraElement(N, out)


def build_cn(n: int, N: int) -> AlgebraElement:
    """The central element c_n: sum of C^(n)_{ii} over all 2N signed i."""
    total = AlgebraElement.zero(N)
    for i in signed_indices(N):
        total = total + build_casimir_entry(n, i, i, N)
    return total


def verify_entry_recurrence(n: int, N: int) -> bool:
    """Check C^(n+1)_{ij} = sum_k F_{ik} (-1)^par(k) C^(n)_{kj} word for word."""
    idx = signed_indices(N)
    lower = {(k, j): build_casimir_entry(n, k, j, N) for k in idx for j in idx}
    for i in idx:
        for j in idx:
            rhs = AlgebraElement.zero(N)
            for k in idx:
                step = AlgebraElement.from_generator(gen(i, k), N) * lower[(k, j)]
                rhs = rhs + (step.scaled(-1) if k < 0 else step)
            if rhs != build_casimir_entry(n + 1, i, j, N):
                return False
    return True


def verify_index_symmetry(n: int, N: int) -> bool:
    """Check C^(n)_{-i,-j} = (-1)^(n-1) C^(n)_{ij} for every signed pair."""
    sgn = 1 if (n - 1) % 2 == 0 else -1
    for i in signed_indices(N):
        for j in signed_indices(N):
            lhs = build_casimir_entry(n, -i, -j, N)
            rhs = build_casimir_entry(n, i, j, N).scaled(sgn)
            if lhs != rhs:
                return False
    return True
