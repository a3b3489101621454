"""Dynkin diagrams and root systems over exact integer arithmetic.

Supported series are A (n >= 1), B (n >= 2), C (n >= 2), D (n >= 4) and
E (n in {6, 7, 8}), each in its finite form and in its untwisted affine
extension.  Node labels follow the classical tables: finite nodes are
1..n (D_n forks at n-2, E-series hang node 2 off node 4), and the affine
node is 0.

Roots, coweights and the imaginary root delta are plain integer (or
Fraction) tuples indexed by the diagram's nodes; no floating point is
used anywhere.  The affine Cartan matrix is not tabulated: it is derived
from the finite highest root theta and the invariant bilinear form, and
the resulting mark vector is checked to span the kernel of the affine
Cartan matrix.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vector = tuple[int, ...]

_RANK_BOUNDS = {"A": 1, "B": 2, "C": 2, "D": 4}
_E_RANKS = (6, 7, 8)


@dataclass(frozen=True)
class DynkinDiagram:
    """A validated finite or untwisted-affine Dynkin diagram.

    ``cartan[i][j]`` is the pairing <alpha_j, alpha_i^vee>, so the simple
    reflection acts by s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i.
    ``marks`` (affine only) are the coefficients of delta in the simple
    root basis; ``symmetrizer`` is the minimal positive integer vector d
    with d_i C[i][j] symmetric.
    """

    series: str
    rank: int
    affine: bool
    nodes: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    marks: Optional[tuple[int, ...]] = None

    def index(self, node: int) -> int:
        return node - self.nodes[0]

    def entry(self, i: int, j: int) -> int:
        """Cartan entry <alpha_j, alpha_i^vee> by node labels."""
        return self.cartan[self.index(i)][self.index(j)]

    @property
    def delta(self) -> Vector:
        if not self.affine:
            raise ValueError("delta exists only for affine diagrams")
        assert self.marks is not None
        return self.marks

    def simple_root(self, node: int) -> Vector:
        vec = [0] * len(self.nodes)
        vec[self.index(node)] = 1
        return tuple(vec)


def _edges(series: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Bonds as (i, j, C[i][j], C[j][i]) over finite node labels."""
    if series in ("A", "B", "C"):
        edges = [(i, i + 1, -1, -1) for i in range(1, rank - 1)]
        if series == "A":
            if rank >= 2:
                edges.append((rank - 1, rank, -1, -1))
        elif series == "B":
            # alpha_n is the short root: <a_{n-1}, a_n^vee> = -2
            edges.append((rank - 1, rank, -1, -2))
        else:
            # C_n: alpha_n is the long root
            edges.append((rank - 1, rank, -2, -1))
        return edges
    if series == "D":
        edges = [(i, i + 1, -1, -1) for i in range(1, rank - 2)]
        edges.append((rank - 2, rank - 1, -1, -1))
        edges.append((rank - 2, rank, -1, -1))
        return edges
    if series == "E":
        spine = [(1, 3), (3, 4), (4, 5), (5, 6)]
        spine += [(6, 7)] if rank >= 7 else []
        spine += [(7, 8)] if rank == 8 else []
        spine.append((2, 4))
        return [(a, b, -1, -1) for a, b in spine]
    raise AssertionError(series)


def _minimal_symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Minimal positive integers d with d_i C[i][j] = d_j C[j][i]."""
    n = len(cartan)
    d: list[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    stack.append(j)
    denom = 1
    for x in d:
        assert x is not None
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]  # type: ignore[arg-type]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def solve_exact(matrix: Sequence[Sequence[Fraction | int]],
                rhs: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """Solve a small square linear system exactly by Gaussian elimination."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def _leading_minors_positive(sym: Sequence[Sequence[int]]) -> bool:
    n = len(sym)
    work = [[Fraction(x) for x in row] for row in sym]
    for k in range(n):
        # fraction-free enough for rank <= 9; pivot must stay positive
        if work[k][k] <= 0:
            return False
        for r in range(k + 1, n):
            factor = work[r][k] / work[k][k]
            work[r] = [x - factor * y for x, y in zip(work[r], work[k])]
    return True


def is_finite_type(diagram: DynkinDiagram, nodes: Optional[Iterable[int]] = None) -> bool:
    """Whether the sub-diagram on ``nodes`` has positive definite form."""
    chosen = sorted(nodes) if nodes is not None else list(diagram.nodes)
    sym = [[diagram.symmetrizer[diagram.index(i)] * diagram.entry(i, j)
            for j in chosen] for i in chosen]
    return _leading_minors_positive(sym)


def is_connected(diagram: DynkinDiagram, nodes: Iterable[int]) -> bool:
    chosen = set(nodes)
    if not chosen:
        return False
    seen = {next(iter(sorted(chosen)))}
    stack = list(seen)
    while stack:
        i = stack.pop()
        for j in chosen - seen:
            if diagram.entry(i, j) != 0:
                seen.add(j)
                stack.append(j)
    return seen == chosen


@functools.lru_cache(maxsize=None)
def build_diagram(series: str, rank: int, affine: bool = False) -> DynkinDiagram:
    """Construct and validate a Dynkin diagram.

    Raises ValueError for invalid (series, rank) pairs, naming the
    violated constraint.
    """
    if series not in ("A", "B", "C", "D", "E"):
        raise ValueError(f"unknown series {series!r}: expected one of A, B, C, D, E")
    if series == "E":
        if rank not in _E_RANKS:
            raise ValueError(f"series E requires rank in {_E_RANKS}, got {rank}")
    elif rank < _RANK_BOUNDS[series]:
        raise ValueError(
            f"series {series} requires rank >= {_RANK_BOUNDS[series]}, got {rank}")

    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in _edges(series, rank):
        cartan[i - 1][j - 1] = cij
        cartan[j - 1][i - 1] = cji
    finite = DynkinDiagram(
        series=series, rank=rank, affine=False,
        nodes=tuple(range(1, rank + 1)),
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizer=_minimal_symmetrizer(cartan),
    )
    _validate_cartan(finite)
    if not _leading_minors_positive(_symmetrized(finite)):
        raise AssertionError("finite Cartan matrix is not positive definite")
    if not affine:
        return finite

    theta = highest_root(finite)
    d = finite.symmetrizer
    theta_norm = _sym_form(finite, theta, theta)
    aff = [[0] * (rank + 1) for _ in range(rank + 1)]
    aff[0][0] = 2
    for j in range(1, rank + 1):
        pair = _sym_form(finite, theta, finite.simple_root(j))
        c0j = Fraction(-2 * pair, theta_norm)
        cj0 = Fraction(-pair, d[j - 1])
        assert c0j.denominator == 1 and cj0.denominator == 1
        aff[0][j] = int(c0j)
        aff[j][0] = int(cj0)
        for k in range(1, rank + 1):
            aff[j][k] = finite.cartan[j - 1][k - 1]
    marks = (1,) + theta
    assert theta_norm % 2 == 0
    diagram = DynkinDiagram(
        series=series, rank=rank, affine=True,
        nodes=tuple(range(rank + 1)),
        cartan=tuple(tuple(row) for row in aff),
        symmetrizer=(theta_norm // 2,) + d,
        marks=marks,
    )
    _validate_cartan(diagram)
    for i in range(rank + 1):
        assert sum(diagram.cartan[i][j] * marks[j] for j in range(rank + 1)) == 0, \
            "marks are not in the kernel of the affine Cartan matrix"
    g = 0
    for m in marks:
        g = gcd(g, m)
    assert g == 1 and marks[0] == 1
    return diagram


def _validate_cartan(diagram: DynkinDiagram) -> None:
    c = diagram.cartan
    n = len(c)
    for i in range(n):
        assert c[i][i] == 2
        for j in range(n):
            if i != j:
                assert c[i][j] <= 0
                assert (c[i][j] == 0) == (c[j][i] == 0)
    d = diagram.symmetrizer
    for i in range(n):
        for j in range(n):
            assert d[i] * c[i][j] == d[j] * c[j][i], "symmetrizer failure"


def _symmetrized(diagram: DynkinDiagram) -> list[list[int]]:
    d = diagram.symmetrizer
    return [[d[i] * x for x in row] for i, row in enumerate(diagram.cartan)]


def _sym_form(diagram: DynkinDiagram, a: Sequence[int], b: Sequence[int]) -> int:
    d = diagram.symmetrizer
    c = diagram.cartan
    total = 0
    for i, ai in enumerate(a):
        if ai:
            total += ai * d[i] * sum(cij * bj for cij, bj in zip(c[i], b) if bj)
    return total


def inner_form(diagram: DynkinDiagram, a: Sequence[int], b: Sequence[int]) -> int:
    """Invariant symmetric bilinear form (a|b), with (a_i|a_j) = d_i C[i][j].

    On an affine diagram (delta | x) = 0 for every x.
    """
    if len(a) != len(diagram.nodes) or len(b) != len(diagram.nodes):
        raise ValueError("vector length does not match the diagram")
    return _sym_form(diagram, a, b)


def pairing(diagram: DynkinDiagram, root: Sequence[int],
            coroot: Sequence[Fraction | int]):
    """<root, coroot> with the coroot in the alpha_i^vee basis."""
    c = diagram.cartan
    return sum(qi * sum(cij * aj for cij, aj in zip(c[i], root) if aj)
               for i, qi in enumerate(coroot) if qi)


def reflect(diagram: DynkinDiagram, node: int, vec: Vector) -> Vector:
    """Simple reflection s_node applied to a lattice vector."""
    i = diagram.index(node)
    coeff = sum(cij * vj for cij, vj in zip(diagram.cartan[i], vec) if vj)
    if not coeff:
        return tuple(vec)
    out = list(vec)
    out[i] -= coeff
    return tuple(out)


def is_positive_vec(vec: Sequence[int]) -> bool:
    return any(vec) and all(x >= 0 for x in vec)


def is_negative_vec(vec: Sequence[int]) -> bool:
    return any(vec) and all(x <= 0 for x in vec)


def support_of(diagram: DynkinDiagram, vec: Sequence[int]) -> frozenset[int]:
    return frozenset(node for node in diagram.nodes if vec[diagram.index(node)])


@functools.lru_cache(maxsize=None)
def _positive_roots_cached(diagram: DynkinDiagram,
                           nodes: tuple[int, ...]) -> frozenset[Vector]:
    simples = [diagram.simple_root(i) for i in nodes]
    pos = set(simples)
    frontier = list(simples)
    while frontier:
        fresh = []
        for vec in frontier:
            for i in nodes:
                img = reflect(diagram, i, vec)
                if img not in pos and is_positive_vec(img):
                    pos.add(img)
                    fresh.append(img)
        frontier = fresh
    return frozenset(pos)


def positive_roots(diagram: DynkinDiagram,
                   nodes: Optional[Iterable[int]] = None) -> frozenset[Vector]:
    """All positive roots of the (sub-)diagram, as coefficient vectors.

    Without ``nodes`` the diagram must be finite; with ``nodes`` the
    chosen subset must be of finite type (affine root systems are
    infinite and are rejected).
    """
    if nodes is None:
        if diagram.affine:
            raise ValueError(
                "affine root systems are infinite; enumerate a proper node subset "
                "or use the alpha + n*delta decomposition")
        chosen = diagram.nodes
    else:
        chosen = tuple(sorted(nodes))
        if not set(chosen) <= set(diagram.nodes):
            raise ValueError(f"nodes {chosen} are not nodes of the diagram")
        if diagram.affine and len(chosen) == len(diagram.nodes):
            raise ValueError("the full affine node set has infinitely many roots")
        if not is_finite_type(diagram, chosen):
            raise ValueError(f"node set {chosen} is not of finite type")
    return _positive_roots_cached(diagram, chosen)


def highest_root(diagram: DynkinDiagram,
                 nodes: Optional[Iterable[int]] = None) -> Vector:
    """The componentwise maximum of the positive roots on a connected set."""
    chosen = tuple(sorted(nodes)) if nodes is not None else diagram.nodes
    if not is_connected(diagram, chosen):
        raise ValueError(f"node set {tuple(chosen)} is disconnected: no highest root")
    roots = positive_roots(diagram, chosen)
    top = tuple(max(r[k] for r in roots) for k in range(len(diagram.nodes)))
    assert top in roots, "componentwise maximum is not a root"
    return top


def fundamental_coweight(diagram: DynkinDiagram, node: int) -> tuple[Fraction, ...]:
    """Coordinates of the fundamental coweight dual to ``node``.

    Expressed in the coroot basis; exact rationals (the coweight need not
    lie in the coroot lattice).
    """
    if diagram.affine:
        raise ValueError("fundamental coweights are taken in the finite diagram")
    n = len(diagram.nodes)
    rhs = [0] * n
    rhs[diagram.index(node)] = 1
    # <alpha_j, sum_i c_i alpha_i^vee> = sum_i c_i C[i][j]  =>  C^T c = e_node
    transposed = [[diagram.cartan[i][j] for i in range(n)] for j in range(n)]
    return solve_exact(transposed, rhs)


def is_real_root(diagram: DynkinDiagram, vec: Vector) -> bool:
    """Whether an affine lattice vector is of the form alpha + n*delta."""
    if not diagram.affine:
        return vec in positive_roots(diagram) or tuple(-x for x in vec) in positive_roots(diagram)
    level = vec[0]
    delta = diagram.delta
    finite = build_diagram(diagram.series, diagram.rank, affine=False)
    fin = tuple(x - level * m for x, m in zip(vec, delta))[1:]
    pos = positive_roots(finite)
    return fin in pos or tuple(-x for x in fin) in pos


def is_root(diagram: DynkinDiagram, vec: Vector) -> bool:
    """Real or imaginary root test (imaginary = nonzero multiple of delta)."""
    if not any(vec):
        return False
    if diagram.affine:
        level = vec[0]
        if level and vec == tuple(level * m for m in diagram.delta):
            return True
    return is_real_root(diagram, vec)


def root_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise dominance order on coefficient vectors."""
    return all(x <= y for x, y in zip(a, b))
