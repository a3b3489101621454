"""Cominuscule contexts: a finite diagram with a chosen cominuscule node.

A simple root is cominuscule when its coefficient in delta (equivalently
in the highest root) is 1.  Fixing such a node d determines the whole
setup used downstream: the Levi node set J (finite nodes minus d), the
affine Levi node set (all affine nodes minus d), the diagram involution
swapping node 0 with node d, the longest elements of the three parabolic
subgroups, and the distinguished translation element of the affine Weyl
group.

The involution is computed from the negated longest Levi element, never
from case tables; the type-D closed form is a test downstream.  The
translation element is computed twice, from its coweight and as the
product of two minimal representatives, and the two must agree exactly:
a mismatch means a convention bug, so it is a hard failure.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from . import rootsys
from .rootsys import DynkinDiagram, Vector, build_diagram
from .weyl import (
    AffineWeylElement,
    WeylGroup,
    longest_element,
    min_rep,
    positive_roots_of,
)


@dataclass(frozen=True, eq=False)
class CominusculeContext:
    """Validated bundle of data attached to one cominuscule pair."""

    series: str
    rank: int
    cominuscule_node: int
    finite_diagram: DynkinDiagram
    affine_diagram: DynkinDiagram
    group: WeylGroup
    finite_nodes: tuple[int, ...]
    levi_nodes: tuple[int, ...]          # finite nodes minus the cominuscule node
    affine_levi_nodes: tuple[int, ...]   # affine nodes minus the cominuscule node
    involution: tuple[int, ...]          # node permutation, position = node
    w0: AffineWeylElement                # longest element of the finite Weyl group
    w_levi: AffineWeylElement            # longest element on levi_nodes
    w_affine_levi: AffineWeylElement     # longest element on affine_levi_nodes
    highest_root_finite: Vector          # theta_0, affine coordinates
    highest_root_affine_levi: Vector     # delta - alpha_d, affine coordinates
    translation_coroot: Vector
    translation_element: AffineWeylElement
    dim_quotient: int

    def iota_node(self, node: int) -> int:
        return self.involution[node]

    def iota_root(self, vec: Vector) -> Vector:
        """Apply the diagram involution to a lattice vector."""
        out = [0] * len(vec)
        for node, value in enumerate(vec):
            if value:
                out[self.involution[node]] = value
        return tuple(out)

    def iota_elem(self, w: AffineWeylElement) -> AffineWeylElement:
        """Conjugation by the involution, through letterwise relabelling."""
        if w.group is not self.group:
            raise ValueError("element does not live in this context's Weyl group")
        return self.group.from_word(self.involution[i] for i in w.reduced_word())

    def delta(self) -> Vector:
        return self.affine_diagram.delta

    def simple_root(self, node: int) -> Vector:
        return self.affine_diagram.simple_root(node)


def cominuscule_nodes(series: str, rank: int) -> tuple[int, ...]:
    """Nodes whose mark in delta equals 1 (empty for E8)."""
    diagram = build_diagram(series, rank, affine=True)
    return tuple(node for node in range(1, rank + 1) if diagram.delta[node] == 1)


@functools.lru_cache(maxsize=None)
def build_context(series: str, rank: int, node: int) -> CominusculeContext:
    """Build and validate the full cominuscule context for (series, rank, node)."""
    finite = build_diagram(series, rank, affine=False)
    affine = build_diagram(series, rank, affine=True)
    if node not in finite.nodes:
        raise ValueError(f"{node} is not a node of {series}_{rank}")
    mark = affine.delta[node]
    if mark != 1:
        raise ValueError(
            f"node {node} of {series}_{rank} is not cominuscule: "
            f"its coefficient in delta is {mark}")

    group = WeylGroup(affine)
    finite_nodes = finite.nodes
    levi = tuple(i for i in finite_nodes if i != node)
    affine_levi = tuple(i for i in affine.nodes if i != node)

    w_levi = longest_element(group, levi)
    w0 = longest_element(group, finite_nodes)
    w_affine_levi = longest_element(group, affine_levi)

    involution = _involution_from_levi(affine, group, node, levi, w_levi)
    _validate_involution(affine, involution)

    theta0 = rootsys.highest_root(affine, finite_nodes)
    assert theta0 == (0,) + rootsys.highest_root(finite), "highest root embeds"
    delta = affine.delta
    thetad = tuple(m - (1 if i == node else 0) for i, m in enumerate(delta))
    assert thetad == rootsys.highest_root(affine, affine_levi), \
        "delta - alpha_d must be the highest root of the affine Levi subsystem"

    alpha_d = affine.simple_root(node)
    alpha_0 = affine.simple_root(0)
    assert w_levi.act(alpha_d) == theta0, "w_J(alpha_d) = theta_0 fails"
    assert w_levi.act(alpha_0) == thetad, "w_J(alpha_0) = theta_d fails"

    coweight = rootsys.fundamental_coweight(finite, node)
    coroot = _integral_shift(finite, group, w0, coweight)
    tau = group.from_translation(coroot)
    tau_from_words = min_rep(w0, levi) * min_rep(w_affine_levi, levi)
    if tau != tau_from_words:
        raise AssertionError(
            "translation element mismatch between the coweight route and the "
            "minimal-representative route; semidirect conventions are broken")
    assert tau == w0 * w_levi * w_affine_levi * w_levi

    dim_quotient = (len(positive_roots_of(group, finite_nodes))
                    - len(positive_roots_of(group, levi)))
    assert tau.length() == 2 * dim_quotient

    return CominusculeContext(
        series=series, rank=rank, cominuscule_node=node,
        finite_diagram=finite, affine_diagram=affine, group=group,
        finite_nodes=finite_nodes, levi_nodes=levi, affine_levi_nodes=affine_levi,
        involution=involution,
        w0=w0, w_levi=w_levi, w_affine_levi=w_affine_levi,
        highest_root_finite=theta0, highest_root_affine_levi=thetad,
        translation_coroot=coroot, translation_element=tau,
        dim_quotient=dim_quotient,
    )


def _involution_from_levi(affine: DynkinDiagram, group: WeylGroup, node: int,
                          levi: tuple[int, ...], w_levi) -> tuple[int, ...]:
    mapping = {0: node, node: 0}
    for j in levi:
        image = tuple(-x for x in w_levi.act(affine.simple_root(j)))
        targets = [k for k in levi if image == affine.simple_root(k)]
        assert len(targets) == 1, "-w_J does not permute the Levi simple roots"
        mapping[j] = targets[0]
    return tuple(mapping[i] for i in affine.nodes)


def _validate_involution(affine: DynkinDiagram, involution: tuple[int, ...]) -> None:
    nodes = affine.nodes
    assert sorted(involution) == list(nodes), "involution is not a node permutation"
    for i in nodes:
        assert involution[involution[i]] == i, "node map is not an involution"
        for j in nodes:
            assert affine.entry(involution[i], involution[j]) == affine.entry(i, j), \
                "involution does not preserve the Cartan matrix"
    delta = affine.delta
    assert all(delta[involution[i]] == delta[i] for i in nodes), "involution moves delta"


def _integral_shift(finite: DynkinDiagram, group: WeylGroup,
                    w0: AffineWeylElement, coweight: tuple[Fraction, ...]) -> Vector:
    """w0(coweight) - coweight in the coroot basis, asserted integral."""
    n = finite.rank
    w0_inv = w0.inverse()
    rhs = []
    for j in finite.nodes:
        pre = w0_inv.act(group.diagram.simple_root(j))
        finite_pre = _finite_part(group.diagram, pre)
        rhs.append(rootsys.pairing(finite, finite_pre, coweight))
    transposed = [[finite.cartan[i][j] for i in range(n)] for j in range(n)]
    moved = rootsys.solve_exact(transposed, rhs)
    shift = tuple(m - c for m, c in zip(moved, coweight))
    assert all(x.denominator == 1 for x in shift), \
        "w0(coweight) - coweight left the coroot lattice"
    return tuple(int(x) for x in shift)


def _finite_part(affine: DynkinDiagram, vec: Vector) -> Vector:
    """Strip the delta component of a level-zero affine vector."""
    level = vec[0]
    delta = affine.delta
    out = tuple(x - level * m for x, m in zip(vec, delta))
    assert out[0] == 0
    return out[1:]
