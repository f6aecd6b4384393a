"""Normal ordering in U(q(N)) and the projection onto the Cartan part.

This is the brute-force side of the package. Elements of the free algebra
are rewritten modulo the relations

    x y = (-1)^{p(x)p(y)} y x + [x, y]

until every word is sorted by the global generator order (lowering, odd
Cartan, even Cartan, raising); adjacent repeated odd factors reduce via
x*x = (1/2)[x, x]. Each rewrite either shortens a word or removes one
inversion at fixed length, so the process terminates, and the canonical
merged output is independent of the rewrite strategy (tested, not assumed).

Projecting a weight-zero element onto its Cartan words and substituting
F_ii -> lambda_i gives exact central characters with no generating-function
shortcuts, which is what makes this module a useful oracle for the fast
engines in characters.py.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import VerificationError
from .free_algebra import AlgebraElement, Word, bracket_with, build_casimir_entry, build_cn
from .poly import MultiPoly
from .structure import (
    GeneratorIndex,
    all_generators,
    gen,
    generator_parity,
    parity,
    signed_indices,
    sort_key,
    superbracket,
)


@lru_cache(maxsize=None)
def _bracket(x: GeneratorIndex, y: GeneratorIndex) -> tuple:
    return tuple(superbracket(x, y))


def _first_violation(word: Word, leftmost: bool) -> int | None:
    positions = range(len(word) - 1) if leftmost else range(len(word) - 2, -1, -1)
    for p in positions:
        x, y = word[p], word[p + 1]
        if x == y:
            if generator_parity(x):
                return p
            continue
        if sort_key(x) > sort_key(y):
            return p
    return None


def is_normal_word(word: Word) -> bool:
    return _first_violation(word, True) is None


def _merge_into(acc: dict, word: Word, c: Fraction) -> None:
    s = acc.get(word, 0) + c
    if s == 0:
        acc.pop(word, None)
    else:
        acc[word] = s


def normal_order(a: AlgebraElement, strategy: str = "leftmost") -> AlgebraElement:
    """Rewrite a into its canonical sorted form modulo the relations.

    strategy picks which violation gets rewritten first ("leftmost" or
    "rightmost"); the result must not depend on it.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    leftmost = strategy == "leftmost"
    done: dict[Word, Fraction] = {}
    pending: dict[Word, Fraction] = dict(a.terms)
    while pending:
        word, coeff = pending.popitem()
        p = _first_violation(word, leftmost)
        if p is None:
            _merge_into(done, word, coeff)
            continue
        head, tail = word[:p], word[p + 2:]
        x, y = word[p], word[p + 1]
        if x == y:
            half = coeff / 2
            for c, g in _bracket(x, x):
                _merge_into(pending, head + (g,) + tail, half * c)
        else:
            sgn = -1 if generator_parity(x) * generator_parity(y) % 2 else 1
            _merge_into(pending, head + (y, x) + tail, sgn * coeff)
            for c, g in _bracket(x, y):
                _merge_into(pending, head + (g,) + tail, coeff * c)
    return AlgebraElement(a.N, done)


def _word_weight(word: Word, N: int) -> tuple[int, ...]:
    w = [0] * N
    for g in word:
        w[abs(g.i) - 1] += 1
        w[abs(g.j) - 1] -= 1
    return tuple(w)


class CartanElement:
    """Element of the Cartan enveloping algebra in canonical form.

    parts maps a subset S of {1..N} (standing for the ascending product of
    the odd generators G_i, i in S) to a polynomial in lambda_1..lambda_N.
    The empty subset holds the purely even component. Squares G_i^2 never
    appear: they have already been reduced to lambda_i.
    """

    __slots__ = ("N", "parts")

    def __init__(self, N: int, parts: dict):
        clean = {}
        for S, p in parts.items():
            S = frozenset(S)
            if any(i < 1 or i > N for i in S):
                raise ValueError(f"odd index set {set(S)} out of range for q({N})")
            if not p.is_zero():
                clean[S] = p
        self.N = N
        self.parts = clean

    @classmethod
    def zero(cls, N: int) -> "CartanElement":
        return cls(N, {})

    @classmethod
    def from_poly(cls, p: MultiPoly, N: int) -> "CartanElement":
        return cls(N, {frozenset(): p})

    def __add__(self, other: "CartanElement") -> "CartanElement":
        if self.N != other.N:
            raise ValueError("rank mismatch")
        out = dict(self.parts)
        for S, p in other.parts.items():
            out[S] = out.get(S, MultiPoly.zero(self.N)) + p
        return CartanElement(self.N, out)

    def __neg__(self) -> "CartanElement":
        return CartanElement(self.N, {S: -p for S, p in self.parts.items()})

    def __sub__(self, other: "CartanElement") -> "CartanElement":
        return self + (-other)

    def times_poly(self, p: MultiPoly) -> "CartanElement":
        return CartanElement(self.N, {S: part * p for S, part in self.parts.items()})

    def scaled(self, c) -> "CartanElement":
        return CartanElement(self.N, {S: p.scaled(c) for S, p in self.parts.items()})

    def g_mul(self, i: int) -> "CartanElement":
        """Left multiplication by the odd generator G_i."""
        if not 1 <= i <= self.N:
            raise ValueError(f"G_{i} is not a Cartan generator of q({self.N})")
        lam_i = MultiPoly.var(i - 1, self.N)
        out: dict[frozenset, MultiPoly] = {}
        for S, p in self.parts.items():
            sign = -1 if sum(1 for s in S if s < i) % 2 else 1
            if i in S:
                newS, newp = S - {i}, (lam_i * p).scaled(sign)
            else:
                newS, newp = S | {i}, p.scaled(sign)
            out[newS] = out.get(newS, MultiPoly.zero(self.N)) + newp
        return CartanElement(self.N, out)

    def even_part(self) -> MultiPoly:
        return self.parts.get(frozenset(), MultiPoly.zero(self.N))

    def odd_is_zero(self) -> bool:
        return all(not S for S in self.parts)

    def is_zero(self) -> bool:
        return not self.parts

    def __eq__(self, other) -> bool:
        if not isinstance(other, CartanElement):
            return NotImplemented
        return self.N == other.N and self.parts == other.parts

    def render(self) -> str:
        if not self.parts:
            return "0"
        bits = []
        for S in sorted(self.parts, key=lambda s: (len(s), sorted(s))):
            poly = self.parts[S].render()
            if S:
                gs = "*".join(f"G{i}" for i in sorted(S))
                bits.append(f"{gs}*({poly})")
            else:
                bits.append(poly)
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"CartanElement({self.render()})"


def hc_project(a: AlgebraElement) -> CartanElement:
    """Project a weight-zero element onto its Cartan part.

    Normal-orders the input, keeps only the words made entirely of Cartan
    generators, and reads each survivor off as an odd subset times a
    monomial in the lambda variables (F_ii -> lambda_i). Discarding words
    with any non-Cartan factor is sound precisely because the input has
    weight zero: a weight-zero sorted word containing a lowering factor
    must also contain a raising factor.
    """
    N = a.N
    zero_w = (0,) * N
    for word in a.terms:
        if _word_weight(word, N) != zero_w:
            raise VerificationError(
                f"projection input is not weight-zero: word {'*'.join(map(str, word))} "
                f"has weight {_word_weight(word, N)}"
            )
    nf = normal_order(a)
    raw: dict[frozenset, dict[tuple, Fraction]] = {}
    for word, coeff in nf.terms.items():
        odd_is: list[int] = []
        exps = [0] * N
        cartan = True
        for g in word:
            ai, aj = abs(g.i), abs(g.j)
            if ai != aj:
                cartan = False
                break
            if g.i == g.j:
                exps[g.i - 1] += 1
            else:
                odd_is.append(g.i)
        if not cartan:
            continue
        if len(set(odd_is)) != len(odd_is):
            raise VerificationError(
                f"normal form kept a repeated odd factor: {'*'.join(map(str, word))}"
            )
        acc = raw.setdefault(frozenset(odd_is), {})
        key = tuple(exps)
        s = acc.get(key, 0) + coeff
        if s == 0:
            acc.pop(key, None)
        else:
            acc[key] = s
    return CartanElement(N, {S: MultiPoly(d, N) for S, d in raw.items()})


@lru_cache(maxsize=None)
def hc_of_cn(n: int, N: int) -> MultiPoly:
    """Exact central character of c_n, computed purely by rewriting.

    Only odd n is meaningful (c_n vanishes for even n). The projection of
    c_n must land in the even part; a surviving odd component would break
    the scalar action on the highest weight vector, so it is fatal.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    if N < 1:
        raise ValueError("N must be a positive integer")
    ce = hc_project(build_cn(n, N))
    if not ce.odd_is_zero():
        raise VerificationError(
            f"projection of c_{n} for q({N}) has a nonzero odd part: {ce.render()}"
        )
    return ce.even_part()


@dataclass
class CentralityResult:
    """Outcome of brute-force centrality checking; truthy iff all brackets vanish."""

    n: int
    N: int
    offenders: list[GeneratorIndex] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.offenders

    def __bool__(self) -> bool:
        return self.ok


def verify_centrality(n: int, N: int) -> CentralityResult:
    """Check normal_order([g, c_n]) = 0 for every generator g of q(N)."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    cn = build_cn(n, N)
    offenders = []
    for g in all_generators(N):
        if not normal_order(bracket_with(g, cn)).is_zero():
            offenders.append(g)
    return CentralityResult(n, N, offenders)


def verify_commutator_identity(n: int, N: int) -> bool:
    """Exhaustively check the bracket rule for F_{ij} against C^(n)_{kl}.

    For every signed quadruple (i, j, k, l) the normal-ordered free-algebra
    bracket [F_ij, C^(n)_kl] must coincide with the normal-ordered value of

        d(k,j) C_il - (-1)^s d(i,l) C_kj + d(k,-j) C_{-i,l} - (-1)^s d(-i,l) C_{k,-j}

    with s the product of the index-pair parities. This is the n-step
    extension of the defining relations and the engine behind centrality.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = signed_indices(N)
    entries: dict[tuple[int, int], AlgebraElement] = {}
    normal: dict[tuple[int, int], AlgebraElement] = {}

    def entry(a: int, b: int) -> AlgebraElement:
        if (a, b) not in entries:
            entries[(a, b)] = build_casimir_entry(n, a, b, N)
        return entries[(a, b)]

    def nf(a: int, b: int) -> AlgebraElement:
        if (a, b) not in normal:
            normal[(a, b)] = normal_order(entry(a, b))
        return normal[(a, b)]

    for i in idx:
        for j in idx:
            for k in idx:
                for l in idx:
                    s = -1 if (parity(i) + parity(j)) * (parity(k) + parity(l)) % 2 else 1
                    lhs = normal_order(bracket_with(gen(i, j), entry(k, l)))
                    rhs = AlgebraElement.zero(N)
                    if k == j:
                        rhs = rhs + nf(i, l)
                    if i == l:
                        rhs = rhs + nf(k, j).scaled(-s)
                    if k == -j:
                        rhs = rhs + nf(-i, l)
                    if -i == l:
                        rhs = rhs + nf(k, -j).scaled(-s)
                    if lhs != rhs:
                        return False
    return True


@dataclass
class PropositionCase:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class PropositionReport:
    m: int
    N: int
    cases: list[PropositionCase] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[PropositionCase]:
        return [c for c in self.cases if not c.ok]

    def summary(self) -> str:
        lines = [f"propositions for q({self.N}), m <= {self.m}:"]
        for c in self.cases:
            status = "ok" if c.ok else "FAIL"
            suffix = f"  ({c.detail})" if c.detail else ""
            lines.append(f"  {c.name}: {status}{suffix}")
        return "\n".join(lines)


def verify_propositions(m: int, N: int) -> PropositionReport:
    """Re-derive the Cartan recurrences for the C entries by brute force.

    Every left-hand side is a fresh projection of a C entry; every
    right-hand side is assembled from lower entries by CartanElement
    arithmetic (polynomial multiplication and explicit left G_i action).
    The two must agree exactly, case by case.
    """
    if m < 1 or N < 1:
        raise ValueError("m and N must be positive")
    report = PropositionReport(m, N)
    idx = signed_indices(N)

    entries: dict[tuple[int, int, int], AlgebraElement] = {}
    normals: dict[tuple[int, int, int], AlgebraElement] = {}
    images: dict[tuple[int, int, int], CartanElement] = {}

    def entry(n: int, a: int, b: int) -> AlgebraElement:
        key = (n, a, b)
        if key not in entries:
            entries[key] = build_casimir_entry(n, a, b, N)
        return entries[key]

    def nf(n: int, a: int, b: int) -> AlgebraElement:
        key = (n, a, b)
        if key not in normals:
            normals[key] = normal_order(entry(n, a, b))
        return normals[key]

    def hc(n: int, a: int, b: int) -> CartanElement:
        key = (n, a, b)
        if key not in images:
            images[key] = hc_project(nf(n, a, b))
        return images[key]

    def lam(i: int) -> MultiPoly:
        return MultiPoly.var(i - 1, N)

    # squares of the odd Cartan generators
    for i in range(1, N + 1):
        lhs = hc_project(AlgebraElement.from_word((gen(i, -i), gen(i, -i)), N))
        expected = CartanElement.from_poly(lam(i), N)
        report.cases.append(PropositionCase(
            f"odd_square_i{i}", lhs == expected,
            f"G_{i}^2 -> {lhs.render()}"))

    # strictly-raising entries kill the highest weight vector: every term
    # of the normal form of C^(n)_{ij}, |i| < |j|, keeps a raising factor
    for n in range(1, 2 * m + 2):
        pairs = [(i, j) for i in idx for j in idx if abs(i) < abs(j)]
        bad = None
        for i, j in pairs:
            for word in nf(n, i, j).terms:
                if not any(abs(g.i) < abs(g.j) for g in word):
                    bad = (i, j, word)
                    break
            if bad:
                break
        detail = f"{len(pairs)} index pairs" if pairs else "no pairs at N=1"
        if bad:
            detail = f"C^{n}_{bad[0]},{bad[1]} kept {'*'.join(map(str, bad[2]))}"
        report.cases.append(PropositionCase(f"raising_survives_n{n}", bad is None, detail))

    # first recurrence: diagonal entries one step up
    for n in range(1, 2 * m + 1):
        for i in range(1, N + 1):
            lhs = hc(n + 1, i, i)
            rhs = hc(n, i, i).times_poly(lam(i)) - hc(n, -i, i).g_mul(i)
            for k in idx:
                if abs(k) > i:
                    rhs = rhs - hc(n, k, k)
            report.cases.append(PropositionCase(
                f"diag_step_n{n}_i{i}", lhs == rhs))

    # second recurrence: the G-component one step up
    for n in range(1, 2 * m + 1):
        for i in range(1, N + 1):
            lhs = hc(n + 1, -i, i)
            rhs = hc(n, i, i).g_mul(i) - hc(n, -i, i).times_poly(lam(i))
            for k in idx:
                if abs(k) > i:
                    term = hc(n, k, -k)
                    rhs = rhs - (term if k > 0 else term.scaled(-1))
            report.cases.append(PropositionCase(
                f"odd_step_n{n}_i{i}", lhs == rhs))

    # two-step recurrence on odd diagonal entries, plus the index-flip
    # equality which already holds word for word in the free algebra
    for mm in range(1, m + 1):
        for i in range(1, N + 1):
            flip_ok = entry(2 * mm + 1, -i, -i) == entry(2 * mm + 1, i, i)
            lhs = hc(2 * mm + 1, i, i)
            rhs = hc(2 * mm - 1, i, i).times_poly(lam(i) * lam(i) - lam(i))
            for j in range(i + 1, N + 1):
                rhs = rhs - hc(2 * mm - 1, j, j).times_poly(lam(i)).scaled(2)
            report.cases.append(PropositionCase(
                f"two_step_m{mm}_i{i}", flip_ok and lhs == rhs,
                "" if flip_ok else "index flip failed at the word level"))

    # the even-n sums telescope out of the two one-step recurrences
    for mm in range(1, m + 1):
        for i in range(1, N + 1):
            ok1 = hc(2 * mm + 1, i, i) == (
                hc(2 * mm, i, i).times_poly(lam(i)) - hc(2 * mm, -i, i).g_mul(i))
            ok2 = hc(2 * mm, -i, i) == (
                hc(2 * mm - 1, i, i).g_mul(i) - hc(2 * mm - 1, -i, i).times_poly(lam(i)))
            report.cases.append(PropositionCase(f"telescoped_diag_m{mm}_i{i}", ok1))
            report.cases.append(PropositionCase(f"telescoped_odd_m{mm}_i{i}", ok2))

    return report
