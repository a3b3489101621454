"""Conormal combinatorics of Schubert varieties in a cominuscule context.

For a minimal representative w in the finite Weyl group, the conormal
direction set consists of the positive roots above the cominuscule node
that w keeps positive.  Its twisted dual v (the diagram involution
applied to w0*w*w_levi) lives in the affine Levi parabolic, and the
closure of the conormal variety inside the ambient affine Schubert
variety is again a Schubert variety exactly when v satisfies the
parabolic-longest-element smoothness criteria.  The fibre over the base
point is indexed by minimal representatives below (w*v) minimised over
the finite nodes.

Everything here is a pure function of an immutable context; reports are
frozen dataclasses with a stable JSON rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import rootsys
from .cominuscule import CominusculeContext
from .rootsys import Vector, is_negative_vec, is_positive_vec, support_of
from .weyl import (
    AffineWeylElement,
    bruhat_leq,
    demazure,
    enumerate_min_reps,
    is_min_rep,
    longest_element,
    min_rep,
    positive_roots_of,
)


@dataclass(frozen=True)
class SmoothnessReport:
    """The four equivalent smoothness tests for one affine Levi element."""

    c3: bool   # Demazure absorption: l(u^-1 * u w_levi) = l(u w_levi)
    c4: bool   # (u w_levi)^-1 sends every simple root of Supp(u) negative
    c5: bool   # inversion set of u equals Phi+_{Supp(u)} minus Phi+_levi
    c6: bool   # u is the minimal coset form w_L w_{L & levi} for L = Supp(u)
    support: tuple[int, ...]
    witness: tuple[AffineWeylElement, AffineWeylElement]

    @property
    def smooth(self) -> bool:
        return self.c6


@dataclass(frozen=True)
class ConormalReport:
    w: AffineWeylElement
    v: AffineWeylElement
    wv: AffineWeylElement
    roots: frozenset[Vector]
    smooth: SmoothnessReport
    closure_is_schubert: bool
    fibre_max: Optional[frozenset[AffineWeylElement]] = None
    fibre_all: Optional[frozenset[AffineWeylElement]] = None


def _require_finite_min_rep(ctx: CominusculeContext, w: AffineWeylElement) -> None:
    if w.group is not ctx.group:
        raise ValueError("element does not live in this context's Weyl group")
    if not w.support() <= set(ctx.finite_nodes):
        raise ValueError("element is not in the finite Weyl group")
    for node in ctx.levi_nodes:
        if w.has_right_descent(node):
            raise ValueError(
                f"element is not a minimal representative: descent at node {node}")


def conormal_roots(ctx: CominusculeContext, w: AffineWeylElement) -> frozenset[Vector]:
    """Positive roots above the cominuscule node that w keeps positive."""
    _require_finite_min_rep(ctx, w)
    d = ctx.cominuscule_node
    picked = set()
    for alpha in positive_roots_of(ctx.group, ctx.finite_nodes):
        if alpha[d] >= 1 and is_positive_vec(w.act(alpha)):
            assert alpha[d] == 1, "cominuscule coefficient must be exactly 1"
            picked.add(alpha)
    return frozenset(picked)


def twisted_dual(ctx: CominusculeContext, w: AffineWeylElement) -> AffineWeylElement:
    """The involution applied to w0 * w * w_levi; lands in the affine Levi."""
    _require_finite_min_rep(ctx, w)
    v = ctx.iota_elem(ctx.w0 * w * ctx.w_levi)
    assert v.support() <= set(ctx.affine_levi_nodes)
    assert is_min_rep(v, ctx.finite_nodes)
    wv = w * v
    assert wv.length() == w.length() + v.length() == ctx.dim_quotient, \
        "length bookkeeping l(wv) = l(w) + l(v) = dim G/P fails"
    return v


def shift_check(ctx: CominusculeContext, w: AffineWeylElement) -> bool:
    """Shift-by-delta bijection between conormal roots and ascents of the dual.

    Also asserts the pointwise identity v(alpha - delta) = -iota(w0(w(alpha)))
    on every positive root above the cominuscule node.
    """
    v = twisted_dual(ctx, w)
    delta = ctx.delta()
    shifted = {tuple(a - m for a, m in zip(alpha, delta))
               for alpha in conormal_roots(ctx, w)}
    negatives_levi = {tuple(-x for x in beta)
                      for beta in positive_roots_of(ctx.group, ctx.affine_levi_nodes)}
    target = {beta for beta in negatives_levi if is_positive_vec(v.act(beta))}
    d = ctx.cominuscule_node
    for alpha in positive_roots_of(ctx.group, ctx.finite_nodes):
        if alpha[d] == 0:
            continue
        lhs = v.act(tuple(a - m for a, m in zip(alpha, delta)))
        rhs = tuple(-x for x in ctx.iota_root(ctx.w0.act(w.act(alpha))))
        assert lhs == rhs, "pointwise shift identity fails"
    assert len(conormal_roots(ctx, w)) == v.length()
    return shifted == target


def is_smooth(ctx: CominusculeContext, u: AffineWeylElement) -> SmoothnessReport:
    """Evaluate the four equivalent smoothness criteria independently."""
    if u.group is not ctx.group:
        raise ValueError("element does not live in this context's Weyl group")
    if not u.support() <= set(ctx.affine_levi_nodes):
        raise ValueError("element is not in the affine Levi parabolic")
    for node in ctx.finite_nodes:
        if u.has_right_descent(node):
            raise ValueError(
                f"element is not minimal over the finite nodes: descent at {node}")

    levi = set(ctx.levi_nodes)
    supp = tuple(sorted(u.support()))
    w_supp = longest_element(ctx.group, supp)
    w_supp_levi = longest_element(ctx.group, set(supp) & levi)
    u_wlevi = u * ctx.w_levi

    c6 = u == w_supp * w_supp_levi
    c3 = demazure(u.inverse(), u_wlevi).length() == u_wlevi.length()
    inv_uw = u_wlevi.inverse()
    c4 = all(is_negative_vec(inv_uw.act(ctx.simple_root(node))) for node in supp)

    supp_roots = positive_roots_of(ctx.group, supp)
    inversions = {alpha for alpha in supp_roots if is_negative_vec(u.act(alpha))}
    expected = {alpha for alpha in supp_roots
                if not support_of(ctx.affine_diagram, alpha) <= levi}
    c5 = inversions == expected

    report = SmoothnessReport(c3=c3, c4=c4, c5=c5, c6=c6, support=supp,
                              witness=(w_supp, w_supp_levi))
    assert c3 == c4 == c5 == c6, f"smoothness criteria disagree: {report}"
    return report


def closure_is_schubert(ctx: CominusculeContext, w: AffineWeylElement,
                        with_fibre: bool = False,
                        full_fibre: bool = False) -> ConormalReport:
    """Decide whether the compactified conormal variety is a Schubert variety.

    The decision is the Demazure absorption test on the twisted dual; it
    is checked against the parabolic-factorization criterion, and the
    length bookkeeping against dim G/B is asserted on the way.
    """
    v = twisted_dual(ctx, w)
    wv = w * v
    roots = conormal_roots(ctx, w)
    assert len(roots) == v.length(), "conormal root count must equal l(v)"
    smooth = is_smooth(ctx, v)
    v_wlevi = v * ctx.w_levi
    predicate = demazure(v.inverse(), v_wlevi) == v_wlevi
    assert predicate == smooth.c6, "Demazure predicate disagrees with criterion (6)"

    dim_gb = len(positive_roots_of(ctx.group, ctx.finite_nodes))
    chain = demazure(w, demazure(v.inverse(), demazure(v, ctx.w_levi)))
    assert chain.length() >= dim_gb
    assert (chain.length() == dim_gb) == predicate, \
        "length bookkeeping does not match the predicate"

    fibre_max = fibre_all = None
    if with_fibre and predicate:
        fibre_all_set = _fibre_index_set(ctx, wv)
        fibre_max = _maxima(fibre_all_set)
        if full_fibre:
            fibre_all = fibre_all_set
    return ConormalReport(w=w, v=v, wv=wv, roots=roots, smooth=smooth,
                          closure_is_schubert=predicate,
                          fibre_max=fibre_max, fibre_all=fibre_all)


def _fibre_index_set(ctx: CominusculeContext,
                     wv: AffineWeylElement) -> frozenset[AffineWeylElement]:
    bound = min_rep(wv, ctx.finite_nodes)
    return enumerate_min_reps(ctx.group, ctx.affine_levi_nodes, ctx.finite_nodes,
                              leq_bound=bound)


def _maxima(elements: frozenset[AffineWeylElement]) -> frozenset[AffineWeylElement]:
    return frozenset(
        u for u in elements
        if not any(x != u and bruhat_leq(u, x) for x in elements))


def fibre_maximal(ctx: CominusculeContext,
                  w: AffineWeylElement) -> frozenset[AffineWeylElement]:
    """Bruhat-maximal labels of the conormal fibre over the base point.

    Requires the Schubert-closure predicate to hold; otherwise the
    report is attached to the error, since the decomposition is only
    available in the smooth case.  The whole index set sits behind
    ``closure_is_schubert(..., with_fibre=True, full_fibre=True)``.
    """
    report = closure_is_schubert(ctx, w, with_fibre=True)
    if not report.closure_is_schubert:
        raise ValueError(
            "conormal closure is not a Schubert variety; fibre decomposition "
            f"is not available (smoothness report: {report.smooth})")
    assert report.fibre_max is not None
    return report.fibre_max


def nilpotent_set_check(ctx: CominusculeContext, gamma: Vector) -> bool:
    """Closure and sign conditions for the shifted cotangent root set plus gamma.

    gamma must be a finite simple root or the negative of a Levi simple
    root.  Checks that the set is closed under root addition and that
    the two witness elements send it into the positive and negative
    roots respectively.
    """
    admissible = {ctx.simple_root(i): i for i in ctx.finite_nodes}
    admissible_neg = {tuple(-x for x in ctx.simple_root(i)): i for i in ctx.levi_nodes}
    d = ctx.cominuscule_node
    group = ctx.group

    psi = [tuple(-x for x in beta)
           for beta in positive_roots_of(group, ctx.affine_levi_nodes)
           if not support_of(ctx.affine_diagram, beta) <= set(ctx.levi_nodes)]
    assert len(psi) == ctx.dim_quotient

    if gamma in admissible:
        node = admissible[gamma]
        if node == d:
            u_plus = ctx.w_affine_levi
            u_minus = group.simple[d]
        else:
            u_plus = ctx.w_affine_levi * group.simple[node]
            u_minus = group.simple[node]
    elif gamma in admissible_neg:
        u_plus = ctx.w_affine_levi
        u_minus = group.identity
    else:
        raise ValueError(
            "gamma must be a finite simple root or a negated Levi simple root")

    members = set(psi) | {gamma}
    for x in psi + [gamma]:
        for y in psi + [gamma]:
            total = tuple(a + b for a, b in zip(x, y))
            if rootsys.is_root(ctx.affine_diagram, total) and total not in members:
                return False
    for vec in members:
        if not is_positive_vec(u_plus.act(vec)):
            return False
        if is_positive_vec(u_minus.act(vec)):
            return False
    return True


def pairwise_sums_not_roots(ctx: CominusculeContext) -> bool:
    """No two elements of the shifted cotangent root set sum to a root."""
    psi = [tuple(-x for x in beta)
           for beta in positive_roots_of(ctx.group, ctx.affine_levi_nodes)
           if not support_of(ctx.affine_diagram, beta) <= set(ctx.levi_nodes)]
    for x in psi:
        for y in psi:
            total = tuple(a + b for a, b in zip(x, y))
            if rootsys.is_root(ctx.affine_diagram, total):
                return False
    return True


def report_to_dict(ctx: CominusculeContext, report: ConormalReport) -> dict:
    """Stable JSON-ready rendering of a conormal report."""
    out = {
        "type": ctx.series,
        "rank": ctx.rank,
        "d": ctx.cominuscule_node,
        "w_word": report.w.word_str(),
        "v_word": report.v.word_str(),
        "wv_word": report.wv.word_str(),
        "R": sorted(list(vec) for vec in report.roots),
        "smooth": {
            "c3": report.smooth.c3,
            "c4": report.smooth.c4,
            "c5": report.smooth.c5,
            "c6": report.smooth.c6,
            "L": list(report.smooth.support),
        },
        "closure_is_schubert": report.closure_is_schubert,
    }
    if report.fibre_max is not None:
        out["fibre_max"] = sorted(u.word_str() for u in report.fibre_max)
    if report.fibre_all is not None:
        out["fibre_all"] = sorted(u.word_str() for u in report.fibre_all)
    return out
