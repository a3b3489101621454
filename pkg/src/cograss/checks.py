"""Named verification suites sweeping every identity at desk scale.

Each suite enumerates its admissible parameters up to a rank cap and
records one exact pass/fail entry per instance.  Checks never mask
exceptions as passes: a raised assertion inside the library counts as a
failed check with the message attached.  Aggregation is sorted by check
id and parameters, so reports are byte-stable for fixed inputs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import conormal, detvar
from .cominuscule import CominusculeContext, build_context, cominuscule_nodes
from .rootsys import build_diagram, inner_form
from .weyl import (
    bruhat_leq,
    bruhat_interval_check,
    demazure,
    enumerate_min_reps,
    longest_element,
    min_rep,
    positive_roots_of,
    weyl_elements,
)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    params: str
    passed: bool
    note: str = ""
    elapsed: Optional[float] = None


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    max_rank: int
    include_e7: bool
    checks: tuple[CheckResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)


def cominuscule_pairs(max_rank: int, include_e7: bool = False,
                      ) -> Iterator[tuple[str, int, int]]:
    """All cominuscule (series, rank, node) triples up to a rank cap."""
    for n in range(1, max_rank + 1):
        for d in cominuscule_nodes("A", n):
            yield ("A", n, d)
    for series in ("B", "C"):
        for n in range(2, max_rank + 1):
            for d in cominuscule_nodes(series, n):
                yield (series, n, d)
    for n in range(4, max_rank + 1):
        for d in cominuscule_nodes("D", n):
            yield ("D", n, d)
    if max_rank >= 6:
        for d in cominuscule_nodes("E", 6):
            yield ("E", 6, d)
    if include_e7 and max_rank >= 7:
        for d in cominuscule_nodes("E", 7):
            yield ("E", 7, d)


# -- per-context checks ----------------------------------------------------------


def check_wsontheta(ctx: CominusculeContext) -> bool:
    d, group = ctx.cominuscule_node, ctx.group
    ok = ctx.w_levi.act(ctx.simple_root(d)) == ctx.highest_root_finite
    ok &= ctx.w_levi.act(ctx.simple_root(0)) == ctx.highest_root_affine_levi
    return ok


def check_form_invariance(ctx: CominusculeContext) -> bool:
    affine = ctx.affine_diagram
    iota = ctx.involution
    for i in affine.nodes:
        for j in affine.nodes:
            if affine.entry(iota[i], iota[j]) != affine.entry(i, j):
                return False
            a, b = affine.simple_root(i), affine.simple_root(j)
            if inner_form(affine, ctx.iota_root(a), ctx.iota_root(b)) != \
                    inner_form(affine, a, b):
                return False
    return ctx.iota_root(affine.delta) == affine.delta


def check_iota_conjugation(ctx: CominusculeContext) -> bool:
    """iota(s_alpha) acts on the root lattice as iota o s_alpha o iota."""
    group = ctx.group
    for node in ctx.affine_diagram.nodes:
        twisted = ctx.iota_elem(group.simple[node])
        for other in ctx.affine_diagram.nodes:
            vec = ctx.simple_root(other)
            direct = twisted.act(vec)
            conjugated = ctx.iota_root(group.simple[node].act(ctx.iota_root(vec)))
            if direct != conjugated:
                return False
    return True


def check_translation_identity(ctx: CominusculeContext) -> bool:
    """tau_q from the coweight equals the product of minimal representatives."""
    tau = ctx.group.from_translation(ctx.translation_coroot)
    via_words = (min_rep(ctx.w0, ctx.levi_nodes)
                 * min_rep(ctx.w_affine_levi, ctx.levi_nodes))
    via_longest = ctx.w0 * ctx.w_levi * ctx.w_affine_levi * ctx.w_levi
    return (tau == via_words == via_longest == ctx.translation_element
            and tau.acts_as_translation()
            and tau.act(ctx.delta()) == ctx.delta()
            and tau.length() == 2 * ctx.dim_quotient)


def check_min_rep_sets(ctx: CominusculeContext) -> bool:
    """Set equalities between the two descriptions of each quotient side."""
    group = ctx.group
    finite, levi = ctx.finite_nodes, ctx.levi_nodes
    affine_levi = ctx.affine_levi_nodes
    w0_levi = enumerate_min_reps(group, finite, levi)
    w0_affine = enumerate_min_reps(group, finite, affine_levi)
    if w0_levi != w0_affine:
        return False
    wd_levi = enumerate_min_reps(group, affine_levi, levi)
    wd_finite = enumerate_min_reps(group, affine_levi, finite)
    if wd_levi != wd_finite:
        return False
    for w in w0_levi:
        v = conormal.twisted_dual(ctx, w)  # asserts v in W_d^0 and the lengths
        if v not in wd_finite:
            return False
        if not (w * v).length() == w.length() + v.length() == ctx.dim_quotient:
            return False
    return True


def check_connected_support(ctx: CominusculeContext) -> bool:
    from .rootsys import is_connected
    group = ctx.group
    for u in enumerate_min_reps(group, ctx.affine_levi_nodes, ctx.finite_nodes):
        if not u.is_identity() and not is_connected(ctx.affine_diagram, u.support()):
            return False
    return True


def check_smoothness_criteria(ctx: CominusculeContext) -> bool:
    group = ctx.group
    for u in enumerate_min_reps(group, ctx.affine_levi_nodes, ctx.finite_nodes):
        report = conormal.is_smooth(ctx, u)  # raises if the criteria disagree
        if not (report.c3 == report.c4 == report.c5 == report.c6):
            return False
    return True


def check_shift_bijection(ctx: CominusculeContext) -> bool:
    group = ctx.group
    return all(conormal.shift_check(ctx, w)
               for w in enumerate_min_reps(group, ctx.finite_nodes, ctx.levi_nodes))


def check_main_predicate(ctx: CominusculeContext) -> bool:
    """Schubert-closure predicate vs criterion (6), with length bookkeeping."""
    group = ctx.group
    for w in enumerate_min_reps(group, ctx.finite_nodes, ctx.levi_nodes):
        report = conormal.closure_is_schubert(ctx, w)
        if report.closure_is_schubert != report.smooth.c6:
            return False
        recovered = ctx.iota_elem(report.v) * ctx.w_levi
        if recovered != ctx.w0 * w:
            return False
    return True


def check_nilpotent_sets(ctx: CominusculeContext) -> bool:
    if not conormal.pairwise_sums_not_roots(ctx):
        return False
    gammas = [ctx.simple_root(i) for i in ctx.finite_nodes]
    gammas += [tuple(-x for x in ctx.simple_root(i)) for i in ctx.levi_nodes]
    return all(conormal.nilpotent_set_check(ctx, g) for g in gammas)


def check_shift_root_bijection(ctx: CominusculeContext) -> bool:
    """alpha -> alpha - delta maps the cotangent roots onto the shifted set."""
    delta = ctx.delta()
    d = ctx.cominuscule_node
    upstairs = {alpha for alpha in positive_roots_of(ctx.group, ctx.finite_nodes)
                if alpha[d] >= 1}
    downstairs = {tuple(-x for x in beta)
                  for beta in positive_roots_of(ctx.group, ctx.affine_levi_nodes)
                  if beta[0] >= 1}
    shifted = {tuple(a - m for a, m in zip(alpha, delta)) for alpha in upstairs}
    return shifted == downstairs and len(upstairs) == ctx.dim_quotient


# -- oracle-level checks -----------------------------------------------------------


def check_bruhat_oracle(series: str, rank: int) -> bool:
    from .weyl import WeylGroup
    group = WeylGroup(build_diagram(series, rank))
    elements = sorted(weyl_elements(group, group.diagram.nodes),
                      key=lambda w: (w.length(), w.reduced_word()))
    for u in elements:
        for w in elements:
            if bruhat_leq(u, w) != bruhat_interval_check(u, w):
                return False
    return True


def check_demazure_associativity(series: str, rank: int) -> bool:
    from .weyl import WeylGroup
    group = WeylGroup(build_diagram(series, rank))
    elements = sorted(weyl_elements(group, group.diagram.nodes),
                      key=lambda w: (w.length(), w.reduced_word()))
    for a in elements:
        for b in elements:
            ab = demazure(a, b)
            for c in elements:
                if demazure(ab, c) != demazure(a, demazure(b, c)):
                    return False
    return True


def check_length_vee(series: str, rank: int) -> bool:
    """l(vw) = l(v) + l(w) iff the Demazure product is the plain product."""
    from .weyl import WeylGroup
    group = WeylGroup(build_diagram(series, rank))
    elements = weyl_elements(group, group.diagram.nodes)
    for v in elements:
        for w in elements:
            additive = (v * w).length() == v.length() + w.length()
            if additive != (demazure(v, w) == v * w):
                return False
    return True


def check_type_d_length_agreement(n: int) -> bool:
    """Matrix-model length equals the signed-permutation inversion statistic."""
    from .weyl import WeylGroup
    group = WeylGroup(build_diagram("D", n))
    seen = {detvar.identity_perm(n)}
    frontier = [detvar.identity_perm(n)]
    while frontier:
        fresh = []
        for p in frontier:
            for i in range(1, n + 1):
                q = p * detvar.generator_perm(n, i)
                if q not in seen:
                    seen.add(q)
                    fresh.append(q)
        frontier = fresh
    if len(seen) != 2 ** (n - 1) * _factorial(n):
        return False
    for p in seen:
        word = detvar.perm_to_word(p)
        if detvar.word_to_perm(n, word) != p:
            return False
        if group.from_word(word).length() != p.length() or len(word) != p.length():
            return False
    return True


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def check_braid_embedding(n: int) -> bool:
    """Type-D braid relations hold among the S_{2n} generator images."""
    gens = {i: detvar.generator_perm(n, i) for i in range(1, n + 1)}
    e = detvar.identity_perm(n)
    for i in range(1, n + 1):
        if gens[i] * gens[i] != e:
            return False
    for i in range(1, n):
        for j in range(i + 1, n):
            if j - i >= 2:
                if gens[i] * gens[j] != gens[j] * gens[i]:
                    return False
            elif gens[i] * gens[j] * gens[i] != gens[j] * gens[i] * gens[j]:
                return False
    for i in range(1, n):
        if i == n - 2:
            lhs = gens[n] * gens[n - 2] * gens[n]
            if lhs != gens[n - 2] * gens[n] * gens[n - 2]:
                return False
        elif gens[n] * gens[i] != gens[i] * gens[n]:
            return False
    return True


def check_detvar_factorizations(n: int) -> bool:
    from .weyl import WeylGroup
    group = WeylGroup(build_diagram("D", n))
    for r in range(0, detvar.even_rank(n) + 1, 2):
        detvar.skew_rank_element(n, r)  # asserts the chain factorization
        dual = (detvar.longest_perm(n) * detvar.skew_rank_element(n, r)
                * detvar.levi_longest_perm(n))
        if dual.values != detvar.dual_stratum_string(n, r):
            return False
        if r < detvar.even_rank(n):
            span = tuple(range(r + 1, n + 1))
            levi = tuple(range(1, n))
            expected = min_rep(longest_element(group, span), levi)
            if group.from_word(detvar.perm_to_word(dual)) != expected:
                return False
        chained = detvar.identity_perm(n)
        for i in range(detvar.even_rank(n) - 1, r, -2):
            chained = chained * detvar.chain_perm(n, i)
        if chained != dual:
            return False
    return True


# -- suite registry -----------------------------------------------------------------


def _context_suite(fn: Callable[[CominusculeContext], bool], check_id: str,
                   max_rank: int, include_e7: bool) -> Iterator[CheckResult]:
    for series, rank, d in cominuscule_pairs(max_rank, include_e7):
        params = f"{series}{rank} d={d}"
        yield _guard(check_id, params, lambda: fn(build_context(series, rank, d)))


def _guard(check_id: str, params: str, thunk: Callable[[], bool]) -> CheckResult:
    start = time.monotonic()
    try:
        ok = bool(thunk())
        note = ""
    except Exception as exc:  # a raised invariant is a failed check, not a crash
        ok = False
        note = f"{type(exc).__name__}: {exc}"
    return CheckResult(check_id, params, ok, note, time.monotonic() - start)


def _suite_wsontheta(max_rank, include_e7):
    yield from _context_suite(check_wsontheta, "wsontheta", max_rank, include_e7)


def _suite_form_inv(max_rank, include_e7):
    yield from _context_suite(check_form_invariance, "form-inv", max_rank, include_e7)


def _suite_iota_conj(max_rank, include_e7):
    yield from _context_suite(check_iota_conjugation, "iota-conj", max_rank, include_e7)


def _suite_result_q(max_rank, include_e7):
    yield from _context_suite(check_translation_identity, "result-q", max_rank, include_e7)


def _suite_vinwsd(max_rank, include_e7):
    yield from _context_suite(check_min_rep_sets, "vinwsd", max_rank, include_e7)
    yield from _context_suite(check_connected_support, "vinwsd-support", max_rank, include_e7)


def _suite_sb_equiv(max_rank, include_e7):
    yield from _context_suite(check_smoothness_criteria, "sb-equiv", max_rank, include_e7)


def _suite_involution_bij(max_rank, include_e7):
    yield from _context_suite(check_shift_root_bijection, "involution-bij-roots",
                              max_rank, include_e7)
    yield from _context_suite(check_shift_bijection, "involution-bij", max_rank, include_e7)


def _suite_main_result(max_rank, include_e7):
    yield from _context_suite(check_main_predicate, "main-result", max_rank, include_e7)


def _suite_nilp(max_rank, include_e7):
    yield from _context_suite(check_nilpotent_sets, "nilp", max_rank, include_e7)


def _suite_detvar_relations(max_rank, include_e7):
    for n in range(4, max_rank + 1):
        yield _guard("detvar-braid", f"n={n}", lambda n=n: check_braid_embedding(n))
        if n == 4:
            yield _guard("detvar-length", f"n={n}",
                         lambda n=n: check_type_d_length_agreement(n))
        report = detvar.check_relations(n)
        for check_id, params, ok in report.checks:
            yield CheckResult(f"detvar-{check_id}", params, ok)
        yield _guard("detvar-factor", f"n={n}", lambda n=n: check_detvar_factorizations(n))


def _suite_intersectw(max_rank, include_e7):
    for n in range(4, max_rank + 1):
        for r in range(0, detvar.even_rank(n) + 1, 2):
            yield _guard("intersectw", f"n={n} r={r}",
                         lambda n=n, r=r: detvar.intersect_identity(n, r))


def _suite_fibre_det(max_rank, include_e7):
    for n in range(4, max_rank + 1):
        for r in range(0, detvar.even_rank(n) + 1, 2):
            yield _guard(
                "fibre-det", f"n={n} r={r}",
                lambda n=n, r=r: detvar.fibre_rank(n, r)[0] == detvar.even_rank(n) - r)


def _suite_oracles(max_rank, include_e7):
    yield _guard("bruhat-oracle", "A3", lambda: check_bruhat_oracle("A", 3))
    yield _guard("bruhat-oracle", "B2", lambda: check_bruhat_oracle("B", 2))
    yield _guard("demazure-assoc", "A3", lambda: check_demazure_associativity("A", 3))
    yield _guard("length-vee", "A3", lambda: check_length_vee("A", 3))
    yield _guard("typed-length", "D4", lambda: check_type_d_length_agreement(4))


SUITES: dict[str, Callable[[int, bool], Iterator[CheckResult]]] = {
    "wsontheta": _suite_wsontheta,
    "form-inv": _suite_form_inv,
    "iota-conj": _suite_iota_conj,
    "result-q": _suite_result_q,
    "vinwsd": _suite_vinwsd,
    "sb-equiv": _suite_sb_equiv,
    "involution-bij": _suite_involution_bij,
    "main-result": _suite_main_result,
    "nilp": _suite_nilp,
    "detvar-relations": _suite_detvar_relations,
    "intersectw": _suite_intersectw,
    "fibre-det": _suite_fibre_det,
    "oracles": _suite_oracles,
}


def run_suite(suite: str, max_rank: int = 5, include_e7: bool = False) -> VerificationReport:
    """Run one named suite (or 'all') and aggregate a sorted report."""
    if suite == "all":
        names = sorted(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(
            f"unknown suite {suite!r}: expected one of {', '.join(sorted(SUITES))} or all")
    checks: list[CheckResult] = []
    for name in names:
        checks.extend(SUITES[name](max_rank, include_e7))
    checks.sort(key=lambda c: (c.check_id, c.params))
    return VerificationReport(suite=suite, max_rank=max_rank,
                              include_e7=include_e7, checks=tuple(checks))
