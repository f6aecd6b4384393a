"""The 2N-dimensional natural module of q(N) as an independent oracle.

Each generator acts by F_ij |-> E_ij + E_{-i,-j} on the column space with
basis indexed by -N..-1, 1..N (in that order). The central elements c_n
are evaluated by brute-force path summation, with no reuse of any symbolic
machinery, and must come out as exact scalar matrices. For odd n the
scalar must equal the character polynomial evaluated at the module's
highest weight (1, 0, ..., 0); for even n the matrix must vanish. The
possible scalars here are only 2 and 0, so this is a sanity oracle, not a
replacement for the rewriting one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .characters import chi_polynomial
from .errors import VerificationError
from .structure import GeneratorIndex, all_generators, gen, generator_parity, signed_indices

_PATH_MAX_N = 9
_PATH_MAX_RANK = 4


def _pos(k: int, N: int) -> int:
    """Row/column of basis index k in the order (-N..-1, 1..N)."""
    return k + N if k < 0 else k + N - 1


class RepMatrix:
    """Exact 2N x 2N matrix acting on the natural module."""

    __slots__ = ("N", "rows")

    def __init__(self, N: int, rows):
        size = 2 * N
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError(f"expected a {size}x{size} matrix")
        self.N = N
        self.rows = rows

    @classmethod
    def zeros(cls, N: int) -> "RepMatrix":
        return cls(N, [[0] * (2 * N) for _ in range(2 * N)])

    @classmethod
    def identity(cls, N: int) -> "RepMatrix":
        size = 2 * N
        return cls(N, [[1 if r == c else 0 for c in range(size)] for r in range(size)])

    def _check(self, other: "RepMatrix") -> None:
        if self.N != other.N:
            raise ValueError("size mismatch")

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        self._check(other)
        return RepMatrix(self.N, [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "RepMatrix") -> "RepMatrix":
        self._check(other)
        return RepMatrix(self.N, [
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        self._check(other)
        size = 2 * self.N
        cols = list(zip(*other.rows))
        return RepMatrix(self.N, [
            [sum(a * b for a, b in zip(row, col)) for col in cols]
            for row in self.rows])

    def scaled(self, c) -> "RepMatrix":
        c = Fraction(c)
        return RepMatrix(self.N, [[c * x for x in r] for r in self.rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.N == other.N and self.rows == other.rows

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def render(self) -> str:
        width = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(
            "[" + "  ".join(str(x).rjust(width) for x in r) + "]" for r in self.rows)

    def __repr__(self) -> str:
        return f"RepMatrix(N={self.N})\n{self.render()}"


def rho_generator(g: GeneratorIndex, N: int) -> RepMatrix:
    """Matrix of F_ij: ones at positions (i, j) and (-i, -j)."""
    g.validate(N)
    size = 2 * N
    rows = [[0] * size for _ in range(size)]
    rows[_pos(g.i, N)][_pos(g.j, N)] = 1
    rows[_pos(-g.i, N)][_pos(-g.j, N)] = 1
    return RepMatrix(N, rows)


def rho_bracket_defect(a: GeneratorIndex, b: GeneratorIndex, N: int) -> RepMatrix:
    """rho([a, b]) minus the supercommutator of rho(a), rho(b); zero iff rho
    respects the bracket on this pair."""
    from .structure import superbracket

    ra, rb = rho_generator(a, N), rho_generator(b, N)
    sgn = -1 if generator_parity(a) * generator_parity(b) % 2 else 1
    lhs = RepMatrix.zeros(N)
    for c, g in superbracket(a, b):
        lhs = lhs + rho_generator(g, N).scaled(c)
    return lhs - (ra @ rb - (rb @ ra).scaled(sgn))


def rho_cn(n: int, N: int) -> RepMatrix:
    """Matrix of c_n by raw path enumeration over all index chains.

    Each chain (i, k_1, .., k_{n-1}, i) contributes the product of the
    sparse generator matrices, applied right to left to every basis
    vector, weighted by the product of the (-1)^par(k) sign factors.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > _PATH_MAX_N or N > _PATH_MAX_RANK:
        raise ValueError(
            f"path budget exceeded: need n <= {_PATH_MAX_N} and N <= {_PATH_MAX_RANK}")
    signed = signed_indices(N)
    size = 2 * N
    acc = [[0] * size for _ in range(size)]
    for lead in signed:
        for ks in product(signed, repeat=n - 1):
            sign = 1
            for k in ks:
                if k < 0:
                    sign = -sign
            chain = (lead,) + ks + (lead,)
            for start in signed:
                cur = start
                for t in range(n - 1, -1, -1):
                    a, b = chain[t], chain[t + 1]
                    if cur == b:
                        cur = a
                    elif cur == -b:
                        cur = -a
                    else:
                        cur = 0
                        break
                if cur:
                    acc[_pos(cur, N)][_pos(start, N)] += sign
    return RepMatrix(N, acc)


def rho_cn_recurrence(n: int, N: int) -> RepMatrix:
    """Matrix of c_n by dense accumulation, one index-raising step at a time.

    Independent traversal order from rho_cn: for each fixed j it iterates
    M(i) <- sum_k rho(F_ik) (-1)^par(k) M(k) starting from M(k) = rho(F_kj),
    then sums the (j, j) results.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    signed = signed_indices(N)
    total = RepMatrix.zeros(N)
    for j in signed:
        cur = {k: rho_generator(gen(k, j), N) for k in signed}
        for _ in range(n - 1):
            nxt = {}
            for i in signed:
                m = RepMatrix.zeros(N)
                for k in signed:
                    step = rho_generator(gen(i, k), N) @ cur[k]
                    m = m + (step.scaled(-1) if k < 0 else step)
                nxt[i] = m
            cur = nxt
        total = total + cur[j]
    return total


@dataclass(frozen=True)
class ScalarReport:
    n: int
    N: int
    scalar: Fraction
    is_scalar: bool
    max_offdiag_violation: Fraction


def scalar_check(n: int, N: int) -> ScalarReport:
    """Demand that c_n acts as an exact scalar and that the scalar is right.

    For odd n the scalar is compared against the character polynomial at
    the highest weight (1, 0, .., 0); for even n the whole matrix must be
    zero. Any violation raises with a full matrix dump.
    """
    M = rho_cn(n, N)
    scalar = M.rows[0][0]
    offdiag = [abs(M.rows[r][c])
               for r in range(2 * N) for c in range(2 * N) if r != c]
    max_off = max(offdiag, default=Fraction(0))
    is_scalar = max_off == 0 and all(M.rows[d][d] == scalar for d in range(2 * N))
    if not is_scalar:
        raise VerificationError(
            f"c_{n} does not act as a scalar on the natural module of q({N}):\n"
            f"{M.render()}")
    if n % 2 == 1:
        weight = [1] + [0] * (N - 1)
        expected = chi_polynomial((n - 1) // 2, N).poly.eval(weight)
    else:
        expected = Fraction(0)
    if scalar != expected:
        raise VerificationError(
            f"c_{n} acts by {scalar} on the natural module of q({N}), "
            f"expected {expected}:\n{M.render()}")
    return ScalarReport(n, N, scalar, is_scalar, max_off)


def verify_representation_property(N: int) -> bool:
    """Exhaustive bracket preservation over all generator pairs."""
    gens = all_generators(N)
    for a in gens:
        for b in gens:
            if not rho_bracket_defect(a, b, N).is_zero():
                return False
    return True
