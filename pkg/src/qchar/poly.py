"""Exact multivariate polynomials and truncated power series.

Coefficients are `fractions.Fraction` throughout: every identity this
package verifies is an exact polynomial identity, so no floating point is
allowed anywhere. Polynomials live in Q[l1..lN] with a fixed number of
variables; series are truncated at a fixed order in one formal variable z
with polynomial coefficients.

The canonical term order is graded lexicographic with l1 > l2 > ... > lN
(total degree first, ties broken lexicographically). It fixes iteration,
rendering and JSON serialization; the mathematics does not depend on it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Exponents = tuple[int, ...]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


def grlex_key(exps: Exponents) -> tuple[int, Exponents]:
    """Sort key; descending sort by this key gives the canonical order."""
    return (sum(exps), exps)


class MultiPoly:
    """Immutable multivariate polynomial over Q.

    `terms` maps exponent tuples (length `nvars`) to nonzero Fraction
    coefficients. Zero terms are dropped at construction; equality is
    equality of the canonical term map.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: dict, nvars: int):
        clean: dict[Exponents, Fraction] = {}
        for exps, c in terms.items():
            c = _as_fraction(c)
            if c == 0:
                continue
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not have {nvars} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            clean[exps] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "nvars", nvars)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls({}, nvars)

    @classmethod
    def const(cls, c, nvars: int) -> "MultiPoly":
        return cls({(0,) * nvars: _as_fraction(c)}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.const(1, nvars)

    @classmethod
    def var(cls, k: int, nvars: int) -> "MultiPoly":
        """The variable l_{k+1} (0-based index k)."""
        if not 0 <= k < nvars:
            raise ValueError(f"variable index {k} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[k] = 1
        return cls({tuple(exps): Fraction(1)}, nvars)

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s == 0:
                out.pop(exps, None)
            else:
                out[exps] = s
        return MultiPoly(out, self.nvars)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        self._check_compatible(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(out, self.nvars)

    def __rmul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c) -> "MultiPoly":
        c = _as_fraction(c)
        if c == 0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly({e: c * v for e, v in self.terms.items()}, self.nvars)

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.one(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    # -- evaluation and substitution ---------------------------------------

    def eval(self, point: Sequence) -> Fraction:
        """Exact value at a rational point (length must equal nvars)."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} entries, expected {self.nvars}")
        vals = [_as_fraction(x) for x in point]
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(vals, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def subs_var(self, k: int, replacement: "MultiPoly") -> "MultiPoly":
        """Substitute variable k by a polynomial in the same ring."""
        self._check_compatible(replacement)
        out = MultiPoly.zero(self.nvars)
        for exps, c in self.terms.items():
            rest = list(exps)
            e = rest[k]
            rest[k] = 0
            term = MultiPoly({tuple(rest): c}, self.nvars)
            out = out + term * replacement**e
        return out

    def permuted(self, perm: Sequence[int]) -> "MultiPoly":
        """Relabel variables: old variable k becomes variable perm[k]."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError(f"{perm} is not a permutation of 0..{self.nvars - 1}")
        out: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            e = [0] * self.nvars
            for k, x in enumerate(exps):
                e[perm[k]] = x
            out[tuple(e)] = c
        return MultiPoly(out, self.nvars)

    def drop_last_var(self) -> "MultiPoly":
        """Forget the last variable; it must not occur in any term."""
        out = {}
        for exps, c in self.terms.items():
            if exps[-1] != 0:
                raise ValueError(f"last variable occurs in term {exps}")
            out[exps[:-1]] = c
        return MultiPoly(out, self.nvars - 1)

    # -- canonical rendering -----------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in graded-lex order with l1 > l2 > ... > lN."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def render(self) -> str:
        """Canonical text form, e.g. "2*l1^2*l2 - 4/3*l2"; "0" when zero."""
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"l{k + 1}" if e == 1 else f"l{k + 1}^{e}"
                for k, e in enumerate(exps)
                if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()!r}, nvars={self.nvars})"


class TruncatedSeries:
    """Power series in one formal variable z, truncated at a fixed order.

    `coeffs[k]` is the MultiPoly coefficient of z^k, for k = 0..order.
    Arithmetic never reads or writes beyond the truncation order.
    """

    __slots__ = ("coeffs", "order", "nvars")

    def __init__(self, coeffs: Iterable[MultiPoly], order: int):
        coeffs = list(coeffs)
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(coeffs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(coeffs)}")
        nvars = coeffs[0].nvars
        if any(c.nvars != nvars for c in coeffs):
            raise ValueError("coefficient variable counts differ")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "nvars", nvars)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, order: int, nvars: int) -> "TruncatedSeries":
        coeffs = [MultiPoly.one(nvars)] + [MultiPoly.zero(nvars) for _ in range(order)]
        return cls(coeffs, order)

    @classmethod
    def from_dict(cls, entries: dict[int, MultiPoly], order: int, nvars: int) -> "TruncatedSeries":
        coeffs = [entries.get(k, MultiPoly.zero(nvars)) for k in range(order + 1)]
        return cls(coeffs, order)

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated at the common order."""
        self._check_compatible(other)
        out = [MultiPoly.zero(self.nvars) for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        inner = " ; ".join(f"z^{k}: {c}" for k, c in enumerate(self.coeffs))
        return f"TruncatedSeries({inner})"


def geometric_series(b: MultiPoly, order: int) -> TruncatedSeries:
    """Sum of b^k z^k for k = 0..order: the truncated inverse of (1 - b z)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [MultiPoly.one(b.nvars)]
    for _ in range(order):
        coeffs.append(coeffs[-1] * b)
    return TruncatedSeries(coeffs, order)
