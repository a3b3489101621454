"""Exact arithmetic in finite and affine Weyl groups.

An element is stored as the integer matrix of its action on the root
lattice of its diagram, kept column-major: ``cols[k]`` is the image of
the simple root of the k-th node.  The action of the affine group on
its root lattice is faithful and linear (a translation tau_q sends a
finite root alpha to alpha - <alpha, q> delta), so this single matrix
is a canonical form with O(rank^2) equality, and right/left
multiplication by a simple reflection is an O(rank^2) column update.

The semidirect description W = W_0 x| (coroot lattice) is available as
a derived view: ``semidirect_pair`` splits an element into its finite
part and translation coweight, and ``from_translation`` builds a pure
translation.  Each affine WeylGroup checks at construction that its
affine generator equals s_theta composed with translation by -theta^vee,
which pins the composition convention (u, q) = u o tau_q with group law
(u, q)(u', q') = (u u', u'^{-1}(q) + q').

Descent stripping uses the smallest node index everywhere, so reduced
words, minimal representatives and traces are deterministic.
"""

from __future__ import annotations

import functools
from typing import Iterable, Optional, Sequence

from .rootsys import (
    DynkinDiagram,
    Vector,
    build_diagram,
    is_finite_type,
    is_negative_vec,
    pairing,
    positive_roots,
    solve_exact,
)


class AffineWeylElement:
    """An element of a finite or affine Weyl group, in matrix canonical form."""

    __slots__ = ("group", "cols", "_hash", "_word", "_inv")

    def __init__(self, group: "WeylGroup", cols: tuple[Vector, ...]):
        self.group = group
        self.cols = cols
        self._hash: Optional[int] = None
        self._word: Optional[tuple[int, ...]] = None
        self._inv: Optional["AffineWeylElement"] = None

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, AffineWeylElement)
                and self.group is other.group and self.cols == other.cols)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.cols)
        return self._hash

    def __repr__(self) -> str:
        return f"<{self.group.diagram.series}~{self.group.diagram.rank} element {self.word_str() or 'e'}>"

    # -- action and products -------------------------------------------------

    def act(self, vec: Sequence[int]) -> Vector:
        """Apply the element to a root-lattice vector."""
        cols = self.cols
        n = len(cols)
        if len(vec) != n:
            raise ValueError("vector does not belong to this group's lattice")
        out = [0] * n
        for k, c in enumerate(vec):
            if c:
                col = cols[k]
                for a in range(n):
                    out[a] += c * col[a]
        return tuple(out)

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        if self.group is not other.group:
            raise ValueError("elements belong to different Weyl groups")
        return AffineWeylElement(self.group, tuple(self.act(col) for col in other.cols))

    def mul_simple_right(self, node: int) -> "AffineWeylElement":
        """self * s_node as an O(rank^2) column update."""
        idx = self.group.diagram.index(node)
        row = self.group.diagram.cartan[idx]
        pivot = self.cols[idx]
        cols = tuple(
            col if row[b] == 0 else tuple(x - row[b] * y for x, y in zip(col, pivot))
            for b, col in enumerate(self.cols))
        return AffineWeylElement(self.group, cols)

    def mul_simple_left(self, node: int) -> "AffineWeylElement":
        """s_node * self as an O(rank^2) entry update."""
        idx = self.group.diagram.index(node)
        row = self.group.diagram.cartan[idx]
        cols = []
        for col in self.cols:
            coeff = sum(r * c for r, c in zip(row, col) if r and c)
            if coeff:
                col = col[:idx] + (col[idx] - coeff,) + col[idx + 1:]
            cols.append(col)
        return AffineWeylElement(self.group, tuple(cols))

    def inverse(self) -> "AffineWeylElement":
        if self._inv is None:
            inv = self.group.from_word(reversed(self.reduced_word()))
            self._inv = inv
            inv._inv = self
        return self._inv

    # -- length, words, descents ----------------------------------------------

    def is_identity(self) -> bool:
        return self.cols == self.group.identity.cols

    def has_right_descent(self, node: int) -> bool:
        """w s_node < w  iff  w(alpha_node) < 0."""
        return is_negative_vec(self.cols[self.group.diagram.index(node)])

    def first_right_descent(self) -> Optional[int]:
        for node in self.group.diagram.nodes:
            if self.has_right_descent(node):
                return node
        return None

    def reduced_word(self) -> tuple[int, ...]:
        """Deterministic reduced word (smallest descent stripped first)."""
        if self._word is None:
            trace = []
            x = self
            while True:
                node = x.first_right_descent()
                if node is None:
                    break
                x = x.mul_simple_right(node)
                trace.append(node)
            assert x.is_identity()
            self._word = tuple(reversed(trace))
        return self._word

    def length(self) -> int:
        return len(self.reduced_word())

    def support(self) -> frozenset[int]:
        """Letters of any reduced word (well defined)."""
        return frozenset(self.reduced_word())

    def word_str(self) -> str:
        return " ".join(str(i) for i in self.reduced_word())

    # -- semidirect product view ----------------------------------------------

    def semidirect_pair(self) -> tuple[tuple[Vector, ...], Vector]:
        """Split into (finite-part matrix, translation coweight).

        The element equals u o tau_q; the finite matrix is column-major
        over the finite nodes, q is integral in the coroot basis.
        """
        group = self.group
        diagram = group.diagram
        if not diagram.affine:
            return self.cols, (0,) * len(diagram.nodes)
        n = diagram.rank
        # alpha_0 coordinate of w(alpha_j) is -<alpha_j, q>, i.e. -(C^T q)_j
        rhs = [-self.cols[j][0] for j in range(1, n + 1)]
        finite = group.finite_diagram
        transposed = [[finite.cartan[i][j] for i in range(n)] for j in range(n)]
        q = solve_exact(transposed, rhs)
        assert all(x.denominator == 1 for x in q), "translation part is not integral"
        qi = tuple(int(x) for x in q)
        delta = diagram.delta
        ucols = []
        for j in range(1, n + 1):
            col = self.cols[j]
            level = col[0]
            ucols.append(tuple(col[k] - level * delta[k] for k in range(1, n + 1)))
        return tuple(ucols), qi

    def acts_as_translation(self) -> bool:
        ucols, _ = self.semidirect_pair()
        n = self.group.diagram.rank
        return ucols == tuple(tuple(1 if a == b else 0 for a in range(n)) for b in range(n))


class WeylGroup:
    """Weyl group of a Dynkin diagram, with shared caches per diagram."""

    _instances: dict[DynkinDiagram, "WeylGroup"] = {}

    def __new__(cls, diagram: DynkinDiagram) -> "WeylGroup":
        existing = cls._instances.get(diagram)
        if existing is not None:
            return existing
        group = super().__new__(cls)
        group._setup(diagram)
        cls._instances[diagram] = group
        return group

    def _setup(self, diagram: DynkinDiagram) -> None:
        self.diagram = diagram
        n = len(diagram.nodes)
        self.identity = AffineWeylElement(
            self, tuple(tuple(1 if a == b else 0 for a in range(n)) for b in range(n)))
        self.identity._word = ()
        self.identity._inv = self.identity
        self.simple = {node: self.identity.mul_simple_right(node)
                       for node in diagram.nodes}
        self._bruhat_memo: dict[tuple, bool] = {}
        if diagram.affine:
            self.finite_diagram = build_diagram(diagram.series, diagram.rank)
            self._check_loop_conventions()
        else:
            self.finite_diagram = diagram

    # -- constructors -----------------------------------------------------------

    def from_word(self, letters: Iterable[int]) -> AffineWeylElement:
        x = self.identity
        for node in letters:
            if node not in self.simple:
                raise ValueError(f"letter {node} is not a node of the diagram")
            x = x.mul_simple_right(node)
        return x

    def from_word_str(self, text: str) -> AffineWeylElement:
        """Parse the canonical space-separated word form ('' = identity)."""
        text = text.strip()
        return self.from_word(int(tok) for tok in text.split()) if text else self.identity

    def from_translation(self, coroot: Sequence[int]) -> AffineWeylElement:
        """The translation tau_q for q in the coroot lattice."""
        diagram = self.diagram
        if not diagram.affine:
            raise ValueError("translations exist only in affine Weyl groups")
        n = diagram.rank
        if len(coroot) != n:
            raise ValueError("coweight length does not match the finite rank")
        delta = diagram.delta
        finite = self.finite_diagram
        theta = tuple(delta[1:])
        cols = []
        for j in range(n + 1):
            base = [0] * (n + 1)
            base[j] = 1
            finite_part = tuple(-t for t in theta) if j == 0 else finite.simple_root(j)
            shift = pairing(finite, finite_part, coroot)
            col = tuple(b - shift * m for b, m in zip(base, delta))
            cols.append(col)
        return AffineWeylElement(self, tuple(cols))

    def embed_finite_matrix(self, ucols: Sequence[Vector]) -> AffineWeylElement:
        """Extend a finite Weyl matrix to the affine lattice (delta fixed)."""
        diagram = self.diagram
        if not diagram.affine:
            return AffineWeylElement(self, tuple(tuple(c) for c in ucols))
        n = diagram.rank
        delta = diagram.delta
        cols = [None] * (n + 1)
        for j in range(1, n + 1):
            cols[j] = (0,) + tuple(ucols[j - 1])
        theta_img = [0] * n
        theta = delta[1:]
        for j in range(n):
            if theta[j]:
                for a in range(n):
                    theta_img[a] += theta[j] * ucols[j][a]
        # alpha_0 = delta - theta, so u(alpha_0) = alpha_0 + theta - u(theta)
        cols[0] = (1,) + tuple(t - ti for t, ti in zip(theta, theta_img))
        return AffineWeylElement(self, tuple(cols))

    # -- convention validation ----------------------------------------------------

    def _check_loop_conventions(self) -> None:
        """Pin the semidirect conventions via s_0 = (s_theta, -theta^vee)."""
        diagram = self.diagram
        finite = self.finite_diagram
        n = diagram.rank
        theta = tuple(diagram.delta[1:])
        # s_theta(alpha_j) = alpha_j + C[0][j] * theta on the finite lattice
        scols = []
        for j in range(1, n + 1):
            base = [0] * n
            base[j - 1] = 1
            c0j = diagram.cartan[0][j]
            scols.append(tuple(b + c0j * t for b, t in zip(base, theta)))
        s_theta = self.embed_finite_matrix(tuple(scols))
        theta_covec = theta_coroot(finite)
        candidate = s_theta * self.from_translation(tuple(-x for x in theta_covec))
        if candidate != self.simple[0]:
            raise AssertionError(
                "semidirect convention mismatch: s_0 != (s_theta, -theta^vee)")


@functools.lru_cache(maxsize=None)
def theta_coroot(finite: DynkinDiagram) -> Vector:
    """theta^vee in the coroot basis: <alpha_j, theta^vee> = 2(alpha_j|theta)/(theta|theta)."""
    from .rootsys import highest_root, inner_form

    n = finite.rank
    theta = highest_root(finite)
    norm = inner_form(finite, theta, theta)
    rhs = []
    for j in finite.nodes:
        num = 2 * inner_form(finite, finite.simple_root(j), theta)
        assert num % norm == 0
        rhs.append(num // norm)
    transposed = [[finite.cartan[i][j] for i in range(n)] for j in range(n)]
    sol = solve_exact(transposed, rhs)
    assert all(x.denominator == 1 for x in sol)
    return tuple(int(x) for x in sol)


# -- order, Bruhat order, Demazure product -------------------------------------


def longest_element(group: WeylGroup, nodes: Iterable[int]) -> AffineWeylElement:
    """The longest element of the parabolic W_nodes (finite type required)."""
    chosen = tuple(sorted(set(nodes)))
    _require_finite_parabolic(group, chosen)
    x = group.identity
    while True:
        for node in chosen:
            if not x.has_right_descent(node):
                x = x.mul_simple_right(node)
                break
        else:
            return x


def _require_finite_parabolic(group: WeylGroup, chosen: Sequence[int]) -> None:
    if not set(chosen) <= set(group.diagram.nodes):
        raise ValueError(f"nodes {chosen} are not nodes of the diagram")
    if group.diagram.affine:
        if len(chosen) == len(group.diagram.nodes):
            raise ValueError("the full affine diagram generates an infinite parabolic")
    elif len(chosen) == len(group.diagram.nodes):
        return  # whole finite group is fine
    if not is_finite_type(group.diagram, chosen):
        raise ValueError(f"node set {chosen} is not of finite type")


def min_rep(w: AffineWeylElement, nodes: Iterable[int]) -> AffineWeylElement:
    """Minimal representative of the coset w W_nodes (right descent stripping)."""
    chosen = tuple(sorted(set(nodes)))
    diagram = w.group.diagram
    if not set(chosen) <= set(diagram.nodes) or len(chosen) >= len(diagram.nodes):
        raise ValueError(f"nodes {chosen} must form a proper subset of the diagram")
    x = w
    while True:
        for node in chosen:
            if x.has_right_descent(node):
                x = x.mul_simple_right(node)
                break
        else:
            return x


def is_min_rep(w: AffineWeylElement, nodes: Iterable[int]) -> bool:
    return all(not w.has_right_descent(node) for node in nodes)


def bruhat_leq(u: AffineWeylElement, w: AffineWeylElement) -> bool:
    """Bruhat order via the lifting recursion, memoized per group."""
    if u.group is not w.group:
        raise ValueError("elements belong to different Weyl groups")
    memo = u.group._bruhat_memo
    def rec(a: AffineWeylElement, b: AffineWeylElement) -> bool:
        la, lb = a.length(), b.length()
        if la == 0:
            return True
        if la > lb:
            return False
        if la == lb:
            return a == b
        key = (a, b)
        cached = memo.get(key)
        if cached is not None:
            return cached
        binv = b.inverse()
        node = next(i for i in b.group.diagram.nodes if binv.has_right_descent(i))
        sa = a.mul_simple_left(node)
        lifted = sa if sa.length() < la else a
        result = rec(lifted, b.mul_simple_left(node))
        memo[key] = result
        return result
    return rec(u, w)


@functools.lru_cache(maxsize=None)
def demazure(u: AffineWeylElement, w: AffineWeylElement) -> AffineWeylElement:
    """Demazure (0-Hecke) product u * w, folding a reduced word of u into w."""
    if u.group is not w.group:
        raise ValueError("elements belong to different Weyl groups")
    x, xinv = w, w.inverse()
    for node in reversed(u.reduced_word()):
        if not xinv.has_right_descent(node):  # s_node x > x: absorb the letter
            x = x.mul_simple_left(node)
            xinv = xinv.mul_simple_right(node)
    return x


def enumerate_min_reps(group: WeylGroup, span_nodes: Iterable[int],
                       quotient_nodes: Iterable[int],
                       leq_bound: Optional[AffineWeylElement] = None,
                       ) -> frozenset[AffineWeylElement]:
    """Breadth-first enumeration of W_span intersect W^quotient.

    Cardinality is checked against |W_span| / |W_{span & quotient}|; an
    optional Bruhat upper bound filters the result afterwards.
    """
    span = tuple(sorted(set(span_nodes)))
    quo = tuple(sorted(set(quotient_nodes)))
    _require_finite_parabolic(group, span)
    if not set(quo) <= set(group.diagram.nodes):
        raise ValueError(f"nodes {quo} are not nodes of the diagram")
    reps = {group.identity}
    frontier = [group.identity]
    while frontier:
        fresh = []
        for u in frontier:
            for node in span:
                x = min_rep(u.mul_simple_left(node), quo)
                if x not in reps:
                    reps.add(x)
                    fresh.append(x)
        frontier = fresh
    both = tuple(sorted(set(span) & set(quo)))
    expected, order_both = weyl_order(group.diagram, span), weyl_order(group.diagram, both)
    assert expected % order_both == 0 and len(reps) == expected // order_both, \
        "minimal representative count does not match the index"
    if leq_bound is not None:
        reps = {u for u in reps if bruhat_leq(u, leq_bound)}
    return frozenset(reps)


def weyl_elements(group: WeylGroup, nodes: Iterable[int]) -> frozenset[AffineWeylElement]:
    """Every element of a finite-type parabolic (test-scale sweeps only)."""
    span = tuple(sorted(set(nodes)))
    _require_finite_parabolic(group, span)
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        fresh = []
        for u in frontier:
            for node in span:
                x = u.mul_simple_right(node)
                if x not in seen:
                    seen.add(x)
                    fresh.append(x)
        frontier = fresh
    return frozenset(seen)


def weyl_order(diagram: DynkinDiagram, nodes: Iterable[int]) -> int:
    """|W_nodes| via classification of the connected components."""
    remaining = set(nodes)
    if not remaining <= set(diagram.nodes):
        raise ValueError("nodes outside the diagram")
    if not is_finite_type(diagram, tuple(sorted(remaining))):
        raise ValueError(f"node set {tuple(sorted(remaining))} is not of finite type")
    total = 1
    while remaining:
        comp = {min(remaining)}
        stack = [min(remaining)]
        while stack:
            i = stack.pop()
            for j in tuple(remaining - comp):
                if diagram.entry(i, j) != 0:
                    comp.add(j)
                    stack.append(j)
        remaining -= comp
        total *= _component_order(diagram, tuple(sorted(comp)))
    return total


def _component_order(diagram: DynkinDiagram, comp: tuple[int, ...]) -> int:
    k = len(comp)
    double = [(i, j) for i in comp for j in comp
              if i < j and diagram.entry(i, j) * diagram.entry(j, i) >= 2]
    if double:
        if diagram.entry(double[0][0], double[0][1]) * diagram.entry(double[0][1], double[0][0]) >= 4:
            raise ValueError("component is not of finite type")
        return (2 ** k) * _factorial(k)  # B_k / C_k
    degrees = {i: sum(1 for j in comp if j != i and diagram.entry(i, j) != 0) for i in comp}
    branches = [i for i, deg in degrees.items() if deg == 3]
    if not branches:
        return _factorial(k + 1)  # A_k
    if len(branches) > 1:
        raise ValueError("component is not of finite type")
    arms = sorted(_arm_lengths(diagram, comp, branches[0]))
    if arms[0] == 1 and arms[1] == 1:
        return (2 ** (k - 1)) * _factorial(k)  # D_k
    exceptional = {(1, 2, 2): 51840, (1, 2, 3): 2903040, (1, 2, 4): 696729600}
    try:
        return exceptional[tuple(arms)]
    except KeyError:
        raise ValueError("component is not of finite type") from None


def _arm_lengths(diagram: DynkinDiagram, comp: tuple[int, ...], centre: int) -> list[int]:
    lengths = []
    for start in comp:
        if start == centre or diagram.entry(centre, start) == 0:
            continue
        length, prev, cur = 1, centre, start
        while True:
            nxt = [j for j in comp
                   if j not in (prev, cur) and diagram.entry(cur, j) != 0]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return lengths


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def bruhat_interval_check(u: AffineWeylElement, w: AffineWeylElement) -> bool:
    """Subword-oracle comparison; exists for tests of bruhat_leq only."""
    word = w.reduced_word()
    group = u.group
    reachable = {group.identity}
    for node in word:
        reachable |= {x.mul_simple_right(node) for x in reachable}
    return u in reachable


def positive_roots_of(group: WeylGroup, nodes: Iterable[int]) -> frozenset[Vector]:
    return positive_roots(group.diagram, tuple(sorted(set(nodes))))


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    return tuple(int(tok) for tok in text.split()) if text else ()


def format_word(letters: Sequence[int]) -> str:
    return " ".join(str(i) for i in letters)


def act(w: AffineWeylElement, vec: Sequence[int]) -> Vector:
    """Module-level alias for the root-lattice action."""
    return w.act(vec)


def length(w: AffineWeylElement) -> int:
    return w.length()


def reduced_word(w: AffineWeylElement) -> tuple[int, ...]:
    return w.reduced_word()


def support(w: AffineWeylElement) -> frozenset[int]:
    return w.support()
