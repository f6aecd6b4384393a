"""Named verification suites behind the `verify` CLI subcommand.

Each suite is a fixed, deterministically ordered list of cases; a case is
an independent zero-argument callable returning (ok, detail). Cases may
run concurrently under a --jobs bound, but the report is assembled in
submission order and contains no timing, so the rendered output is
byte-identical for any jobs setting. All randomized cases use fixed seeds.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable

from . import characters, free_algebra, natural_rep, pbw
from .errors import VerificationError
from .free_algebra import AlgebraElement
from .poly import MultiPoly
from .structure import all_generators, gen, jacobi_defect, signed_indices

SUITE_NAMES = ("identities", "pbw", "natrep", "cross", "all")

Case = tuple[str, Callable[[], tuple[bool, str]]]


@dataclass
class CaseResult:
    case_id: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def render(self) -> str:
        lines = []
        for c in self.cases:
            status = "pass" if c.ok else "FAIL"
            suffix = f"  ({c.detail})" if c.detail else ""
            lines.append(f"{c.case_id}: {status}{suffix}")
        passed = sum(1 for c in self.cases if c.ok)
        verdict = "PASS" if self.ok else "FAIL"
        lines.append(f"suite {self.suite}: {verdict} ({passed}/{len(self.cases)} cases)")
        return "\n".join(lines)


def _jacobi_case(N: int) -> Case:
    def run():
        gens = all_generators(N)
        count = 0
        for a in gens:
            for b in gens:
                for c in gens:
                    count += 1
                    if jacobi_defect(a, b, c):
                        return False, f"defect at [{a},[{b},{c}]]"
        return True, f"{count} triples"
    return (f"jacobi_exhaustive_N{N}", run)


def _even_vanishing_case(n: int, N: int) -> Case:
    def run():
        ok = free_algebra.build_cn(n, N).is_zero()
        return ok, "word-level cancellation"
    return (f"even_cn_zero_n{n}_N{N}", run)


def _index_symmetry_case(n: int, N: int) -> Case:
    def run():
        return free_algebra.verify_index_symmetry(n, N), f"{(2 * N) ** 2} entry pairs"
    return (f"index_symmetry_n{n}_N{N}", run)


def _entry_recurrence_case(n: int, N: int) -> Case:
    def run():
        return free_algebra.verify_entry_recurrence(n, N), ""
    return (f"entry_recurrence_n{n}_N{N}", run)


def _commutator_case(n: int, N: int) -> Case:
    def run():
        return pbw.verify_commutator_identity(n, N), f"{(2 * N) ** 4} quadruples"
    return (f"commutator_identity_n{n}_N{N}", run)


def _random_element(rng: random.Random, N: int, length: int) -> AlgebraElement:
    idx = signed_indices(N)
    word = tuple(gen(rng.choice(idx), rng.choice(idx)) for _ in range(length))
    return AlgebraElement.from_word(word, N, Fraction(rng.randint(-3, 3) or 1))


def _confluence_case(N: int, samples: int, max_len: int) -> Case:
    def run():
        rng = random.Random(f"confluence:{N}:{samples}")
        for _ in range(samples):
            a = _random_element(rng, N, rng.randint(0, max_len))
            left = pbw.normal_order(a, "leftmost")
            right = pbw.normal_order(a, "rightmost")
            if left != right:
                return False, f"strategies split on {a!r}"
            if pbw.normal_order(left) != left:
                return False, f"not idempotent on {a!r}"
        return True, f"{samples} random words, length <= {max_len}"
    return (f"confluence_N{N}", run)


def _homomorphism_case(N: int, samples: int) -> Case:
    def run():
        rng = random.Random(f"homomorphism:{N}:{samples}")
        for _ in range(samples):
            a = _random_element(rng, N, rng.randint(0, 3))
            b = _random_element(rng, N, rng.randint(0, 3))
            direct = pbw.normal_order(a * b)
            staged = pbw.normal_order(pbw.normal_order(a) * pbw.normal_order(b))
            if direct != staged:
                return False, f"split on {a!r} * {b!r}"
        return True, f"{samples} random products"
    return (f"normal_order_homomorphism_N{N}", run)


def _centrality_case(n: int, N: int) -> Case:
    def run():
        res = pbw.verify_centrality(n, N)
        if res.ok:
            return True, f"{2 * N * N} generators"
        return False, "offenders: " + ", ".join(map(str, res.offenders))
    return (f"centrality_n{n}_N{N}", run)


def _propositions_case(m: int, N: int) -> Case:
    def run():
        rep = pbw.verify_propositions(m, N)
        if rep.ok:
            return True, f"{len(rep.cases)} identities"
        bad = ", ".join(c.name for c in rep.failures())
        return False, f"failing: {bad}"
    return (f"cartan_recurrences_m{m}_N{N}", run)


def _hc_wellformed_case(n: int, N: int) -> Case:
    def run():
        p = pbw.hc_of_cn(n, N)
        if any(c.denominator != 1 for c in p.terms.values()):
            return False, f"non-integer coefficient in {p.render()}"
        return True, f"degree {p.degree()}"
    return (f"hc_integral_n{n}_N{N}", run)


def _rep_property_case(N: int) -> Case:
    def run():
        ok = natural_rep.verify_representation_property(N)
        return ok, f"{(2 * N * N) ** 2} generator pairs"
    return (f"rep_property_N{N}", run)


def _scalar_case(n: int, N: int) -> Case:
    def run():
        try:
            rep = natural_rep.scalar_check(n, N)
        except VerificationError as e:
            return False, str(e).splitlines()[0]
        return True, f"scalar {rep.scalar}"
    return (f"natural_scalar_n{n}_N{N}", run)


def _path_vs_recurrence_case(n: int, N: int) -> Case:
    def run():
        ok = natural_rep.rho_cn(n, N) == natural_rep.rho_cn_recurrence(n, N)
        return ok, "two traversal orders"
    return (f"path_vs_recurrence_n{n}_N{N}", run)


def _engine_agreement_case(m: int, N: int) -> Case:
    def run():
        rec = characters.chi_cn_recurrence(m, N).poly
        ser = characters.chi_series(m, N)[m].poly
        return rec == ser, ""
    return (f"recurrence_vs_series_m{m}_N{N}", run)


def _closed_form_case(max_m: int, max_N: int, points: int) -> Case:
    def run():
        rng = random.Random(f"closed-form:{max_m}:{max_N}:{points}")
        checked = 0
        while checked < points:
            N = rng.randint(1, max_N)
            m = rng.randint(0, max_m)
            pt = characters.random_admissible_point(rng, N)
            closed = characters.chi_closed_numeric(m, pt)
            direct = characters.chi_polynomial(m, N).poly.eval(pt)
            if closed != direct:
                return False, f"mismatch at m={m}, N={N}, point {pt}"
            checked += 1
        return True, f"{points} admissible points"
    return ("closed_form_agreement", run)


def _oracle_agreement_case(m: int, N: int) -> Case:
    def run():
        slow = pbw.hc_of_cn(2 * m + 1, N)
        fast = characters.chi_polynomial(m, N).poly
        if slow != fast:
            return False, f"pbw: {slow.render()} vs engines: {fast.render()}"
        return True, ""
    return (f"pbw_vs_engines_m{m}_N{N}", run)


def _entry_oracle_case(m: int, N: int) -> Case:
    def run():
        for i in range(1, N + 1):
            image = pbw.hc_project(free_algebra.build_casimir_entry(2 * m + 1, i, i, N))
            if not image.odd_is_zero():
                return False, f"odd part survives for entry i={i}"
            if image.even_part() != characters.chi_entry_recurrence(m, i, N):
                return False, f"entry i={i} disagrees with the matrix power"
        return True, f"diagonal entries i <= {N}"
    return (f"entry_vs_matrix_power_m{m}_N{N}", run)


def _symmetry_case(m: int, N: int) -> Case:
    def run():
        p = characters.chi_polynomial(m, N).poly
        if N <= 3:
            perms = list(permutations(range(N)))
        else:
            perms = [tuple(range(N))]
            rng = random.Random(f"symmetry:{m}:{N}")
            for _ in range(5):
                a, b = rng.sample(range(N), 2)
                t = list(range(N))
                t[a], t[b] = t[b], t[a]
                perms.append(tuple(t))
        for perm in perms:
            if p.permuted(perm) != p:
                return False, f"not invariant under {perm}"
        return True, f"{len(perms)} permutations"
    return (f"chi_symmetric_m{m}_N{N}", run)


def _structural_case(m: int, N: int) -> Case:
    def run():
        p = characters.chi_polynomial(m, N).poly
        if any(c.denominator != 1 for c in p.terms.values()):
            return False, "non-integer coefficient"
        if N >= 2:
            restricted = p.subs_var(N - 1, MultiPoly.zero(N)).drop_last_var()
            if restricted != characters.chi_polynomial(m, N - 1).poly:
                return False, "restriction to lambda_N = 0 broke stability"
        if N == 2:
            folded = p.subs_var(1, -MultiPoly.var(0, 2))
            if not folded.is_zero():
                return False, "lambda_2 = -lambda_1 does not vanish"
        return True, ""
    return (f"chi_structural_m{m}_N{N}", run)


def _identities_cases(N: int, max_n: int) -> list[Case]:
    cases: list[Case] = []
    for rank in range(1, min(N, 2) + 1):
        cases.append(_jacobi_case(rank))
    for rank in range(1, min(N, 3) + 1):
        for n in range(2, min(max_n, 6) + 1, 2):
            cases.append(_even_vanishing_case(n, rank))
    for rank in range(1, min(N, 3) + 1):
        for n in range(1, min(max_n, 6) + 1):
            cases.append(_index_symmetry_case(n, rank))
    for rank in range(1, min(N, 2) + 1):
        for n in range(1, 4):
            cases.append(_entry_recurrence_case(n, rank))
    for rank in range(1, min(N, 2) + 1):
        for n in range(1, min(max_n, 3) + 1):
            cases.append(_commutator_case(n, rank))
    return cases


def _pbw_cases(N: int, max_n: int, long: bool) -> list[Case]:
    rank = min(N, 2)
    cases: list[Case] = [
        _confluence_case(rank, samples=60, max_len=5),
        _homomorphism_case(rank, samples=40),
    ]
    top = min(max_n, 5 if long else 3)
    for r in range(1, rank + 1):
        for n in range(1, top + 1, 2):
            cases.append(_centrality_case(n, r))
    for r in range(1, rank + 1):
        cases.append(_propositions_case(2, r))
    for r in range(1, rank + 1):
        for n in range(1, min(max_n, 5) + 1, 2):
            cases.append(_hc_wellformed_case(n, r))
    return cases


def _natrep_cases(N: int, max_n: int) -> list[Case]:
    cases: list[Case] = []
    for rank in range(1, min(N, 3) + 1):
        cases.append(_rep_property_case(rank))
    for rank in range(1, min(N, 3) + 1):
        for n in range(1, min(max_n, 7) + 1):
            cases.append(_scalar_case(n, rank))
    for n, rank in ((2, 1), (4, 1), (3, 2), (4, 2), (3, 3)):
        if rank <= N and n <= max_n:
            cases.append(_path_vs_recurrence_case(n, rank))
    return cases


def _cross_cases(N: int, max_m: int) -> list[Case]:
    cases: list[Case] = []
    for rank in range(1, min(N, 4) + 1):
        for m in range(0, min(max_m, 6) + 1):
            cases.append(_engine_agreement_case(m, rank))
    cases.append(_closed_form_case(min(max_m, 4), min(N, 3), points=20))
    for rank in range(1, min(N, 2) + 1):
        for m in range(0, min(max_m, 2) + 1):
            cases.append(_oracle_agreement_case(m, rank))
            cases.append(_entry_oracle_case(m, rank))
    for rank in range(1, min(N, 4) + 1):
        for m in range(0, min(max_m, 6) + 1):
            cases.append(_symmetry_case(m, rank))
            cases.append(_structural_case(m, rank))
    return cases


def build_cases(suite: str, N: int | None = None, max_m: int | None = None,
                max_n: int | None = None, long: bool = False) -> list[Case]:
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    cases: list[Case] = []
    if suite in ("identities", "all"):
        cases += _identities_cases(N or 3, max_n or 6)
    if suite in ("pbw", "all"):
        cases += _pbw_cases(N or 2, max_n or 5, long)
    if suite in ("natrep", "all"):
        cases += _natrep_cases(N or 3, max_n or 7)
    if suite in ("cross", "all"):
        cases += _cross_cases(N or 4, max_m if max_m is not None else 6)
    return cases


def run_suite(suite: str, N: int | None = None, max_m: int | None = None,
              max_n: int | None = None, long: bool = False, jobs: int = 1) -> VerifyReport:
    cases = build_cases(suite, N, max_m, max_n, long)
    started = time.monotonic()

    def wrapped(fn: Callable[[], tuple[bool, str]]) -> tuple[bool, str]:
        try:
            return fn()
        except Exception as e:  # a crashing case is a failing case
            return False, f"{type(e).__name__}: {e}"

    if jobs <= 1:
        outcomes = [wrapped(fn) for _, fn in cases]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(wrapped, fn) for _, fn in cases]
            outcomes = [f.result() for f in futures]
    report = VerifyReport(suite)
    for (case_id, _), (ok, detail) in zip(cases, outcomes):
        report.cases.append(CaseResult(case_id, ok, detail))
    report.elapsed = time.monotonic() - started
    return report
