"""Cluster-side data of a periodic tree.

Each edge class carries a signed root vector; stacking them in canonical
column order gives the edge matrix.  From it derive the exchange matrix,
its extended form with coefficient rows, dimension vectors of the summands
attached to the edges, and the quiver of the cluster.  All arithmetic is
exact: integers and fractions only.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .functions import PeriodicFunction, f_map, function_combination
from .linalg import (
    dot,
    from_columns,
    inverse,
    mat_mul,
    mat_vec,
    scale,
    transpose,
)
from .mutation import mutate_tree
from .quiver import PLUS, euler_matrix, projective_roots
from .roots import root_vector
from .tree import UP, PeriodicTree, synthesize_morphism

__all__ = [
    "PREPROJECTIVE_SUMMAND",
    "PREINJECTIVE_SUMMAND",
    "REGULAR_SUMMAND",
    "SHIFTED_PROJECTIVE",
    "ClusterSummand",
    "ExtendedExchangeMatrix",
    "edge_matrix",
    "exchange_matrix",
    "extended_exchange_matrix",
    "fz_mutate",
    "c_vectors",
    "dimension_matrix",
    "psi_infinity",
    "summand",
    "summands",
    "quiver_of_cluster",
    "face_point",
]

PREPROJECTIVE_SUMMAND = "Preprojective"
PREINJECTIVE_SUMMAND = "Preinjective"
REGULAR_SUMMAND = "Regular"
SHIFTED_PROJECTIVE = "ShiftedProjective"


class ClusterSummand(NamedTuple):
    dim: tuple[int, ...]
    kind: str


class ExtendedExchangeMatrix(NamedTuple):
    top: tuple[tuple[int, ...], ...]
    bottom: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=4096)
def edge_matrix(tree: PeriodicTree):
    """Signed root vectors of the edges, as columns in canonical order."""
    n = tree.n
    cols = []
    for l, r, d in tree.edges:
        beta = root_vector(n, l, r)
        cols.append(beta if d == UP else tuple(-x for x in beta))
    return from_columns(cols)


def exchange_matrix(tree: PeriodicTree):
    gamma = edge_matrix(tree)
    e = euler_matrix(tree.eps)
    asym = tuple(
        tuple(e[j][i] - e[i][j] for j in range(tree.n)) for i in range(tree.n)
    )
    return mat_mul(mat_mul(transpose(gamma), asym), gamma)


def extended_exchange_matrix(tree: PeriodicTree) -> ExtendedExchangeMatrix:
    return ExtendedExchangeMatrix(exchange_matrix(tree), scale(edge_matrix(tree), -1))


def fz_mutate(ext: ExtendedExchangeMatrix, k: int) -> ExtendedExchangeMatrix:
    """Matrix mutation at index k applied to all 2n rows."""
    rows = list(ext.top) + list(ext.bottom)
    n = len(ext.top)
    p = k - 1
    new_rows = []
    for i, row in enumerate(rows):
        new_row = []
        for j in range(n):
            if i == p or j == p:
                new_row.append(-row[j])
            else:
                bik, bkj = row[p], rows[p][j]
                new_row.append(row[j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        new_rows.append(tuple(new_row))
    return ExtendedExchangeMatrix(tuple(new_rows[:n]), tuple(new_rows[n:]))


def c_vectors(tree: PeriodicTree) -> tuple[tuple[int, ...], ...]:
    gamma = edge_matrix(tree)
    n = tree.n
    return tuple(tuple(-gamma[i][j] for i in range(n)) for j in range(n))


def dimension_matrix(tree: PeriodicTree):
    """Columns are the dimension vectors of the cluster summands."""
    return transpose(inverse(mat_mul(euler_matrix(tree.eps), edge_matrix(tree))))


class _AffineUnionFind:
    """Union-find whose offsets are affine expressions c + d*mu."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.offset = [(Fraction(0), Fraction(0))] * (n + 1)
        self.mu: Fraction | None = None

    def find(self, v: int):
        path = []
        while self.parent[v] != v:
            path.append(v)
            v = self.parent[v]
        c = d = Fraction(0)
        for u in reversed(path):
            c += self.offset[u][0]
            d += self.offset[u][1]
            self.parent[u] = v
            self.offset[u] = (c, d)
        if path:
            return v, self.offset[path[0]]
        return v, (Fraction(0), Fraction(0))

    def _resolve(self, mu: Fraction) -> None:
        if self.mu is None:
            self.mu = mu
        elif self.mu != mu:
            raise ValueError("inconsistent height constraints")

    def merge(self, a: int, b: int, c: Fraction, d: Fraction) -> None:
        """Impose height(b) = height(a) + c + d*mu."""
        ra, (ca, da) = self.find(a)
        rb, (cb, db) = self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.offset[rb] = (ca + c - cb, da + d - db)
            return
        rc, rd = ca + c - cb, da + d - db
        if rd == 0:
            if rc != 0:
                raise ValueError("inconsistent height constraints")
        else:
            self._resolve(Fraction(-rc, 1) / rd)

    def value(self, v: int) -> Fraction:
        if self.mu is None:
            raise ValueError("height slope left undetermined")
        _, (c, d) = self.find(v)
        return c + d * self.mu


def psi_infinity(tree: PeriodicTree, k: int) -> tuple[int, ...]:
    """Feature vector of the limiting height function for edge k.

    Every edge class except the k-th is collapsed to height zero while the
    k-th rises by exactly one; the result is returned through the
    difference map, always an integer vector.
    """
    n = tree.n
    if not 1 <= k <= n:
        raise ValueError(f"edge index {k} out of range 1..{n}")
    uf = _AffineUnionFind(n)

    def shift(x: int) -> int:
        return (x - tree.bar(x)) // n

    for i, (l, r, d) in enumerate(tree.edges, start=1):
        if i == k:
            continue
        # Collapsed edge: equal heights at both endpoints of the instance.
        uf.merge(tree.bar(l), tree.bar(r), Fraction(0), Fraction(shift(l) - shift(r)))
    l, r, d = tree.edge(k)
    lo, hi = (l, r) if d == UP else (r, l)
    uf.merge(tree.bar(lo), tree.bar(hi), Fraction(1), Fraction(shift(lo) - shift(hi)))
    if uf.mu is None:
        raise ValueError("height slope left undetermined")

    def psi(x: int) -> Fraction:
        return uf.value(tree.bar(x)) + uf.mu * shift(x)

    out = []
    for i in range(1, n + 1):
        y = psi(i) - psi(i - 1)
        if y.denominator != 1:
            raise ValueError("height increments are not integral")
        out.append(int(y))
    return tuple(out)


def summand(tree: PeriodicTree, k: int) -> ClusterSummand:
    """Dimension vector and kind of the summand attached to edge k.

    The kind follows the pairing of the dimension vector with the null
    root, which equals sum(psi): positive means preprojective, zero means
    regular, negative means preinjective unless the negated dimension
    vector is projective, in which case the summand is a shifted
    projective.
    """
    eps = tree.eps
    psi = psi_infinity(tree, k)
    et_inv = inverse(transpose(euler_matrix(eps)))
    dim = mat_vec(et_inv, psi)
    total = sum(psi)
    if total > 0:
        kind = PREPROJECTIVE_SUMMAND
    elif total == 0:
        kind = REGULAR_SUMMAND
    else:
        negated = tuple(-x for x in dim)
        if negated in projective_roots(eps):
            kind = SHIFTED_PROJECTIVE
        else:
            kind = PREINJECTIVE_SUMMAND
    return ClusterSummand(dim, kind)


def summands(tree: PeriodicTree) -> tuple[ClusterSummand, ...]:
    return tuple(summand(tree, k) for k in range(1, tree.n + 1))


def _slot_cycles(tree: PeriodicTree) -> dict[int, list[int | None]]:
    """Occupied attachment slots around each vertex class, in rotation order.

    Plus vertices rotate through [parent, left child, right child], minus
    vertices through [child, right parent, left parent].
    """
    n = tree.n
    cycles: dict[int, list[int | None]] = {v: [None, None, None] for v in range(1, n + 1)}

    def occupy(v: int, slot: int, idx: int) -> None:
        if cycles[v][slot] is not None:
            raise ValueError(f"slot conflict at vertex class {v}")
        cycles[v][slot] = idx

    for idx, (l, r, d) in enumerate(tree.edges, start=1):
        cl, cr = tree.bar(l), tree.bar(r)
        if d == UP:
            # p_l gains a right parent, p_r gains a left child.
            if tree.eps.at(cl) == PLUS:
                occupy(cl, 0, idx)  # parent slot
            else:
                occupy(cl, 1, idx)  # right parent slot
            if tree.eps.at(cr) == PLUS:
                occupy(cr, 1, idx)  # left child slot
            else:
                occupy(cr, 0, idx)  # child slot
        else:
            # p_l gains a right child, p_r gains a left parent.
            if tree.eps.at(cl) == PLUS:
                occupy(cl, 2, idx)  # right child slot
            else:
                occupy(cl, 0, idx)  # child slot
            if tree.eps.at(cr) == PLUS:
                occupy(cr, 0, idx)  # parent slot
            else:
                occupy(cr, 2, idx)  # left parent slot
    return cycles


def quiver_of_cluster(tree: PeriodicTree) -> dict[tuple[int, int], int]:
    """Arrows between edge indices, with multiplicities.

    Read off the exchange matrix and cross-checked against the geometric
    rule: arrows join edges occupying cyclically adjacent slots around a
    shared vertex class, and an empty slot in between blocks the pair.
    """
    b = exchange_matrix(tree)
    n = tree.n
    arrows: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(n):
            if b[i][j] > 0:
                arrows[(i + 1, j + 1)] = b[i][j]

    geometric: dict[tuple[int, int], int] = {}
    for v, slots in _slot_cycles(tree).items():
        for t in range(3):
            src, dst = slots[t], slots[(t + 1) % 3]
            if src is not None and dst is not None and src != dst:
                geometric[(src, dst)] = geometric.get((src, dst), 0) + 1
    if geometric != arrows:
        raise ValueError(
            f"quiver mismatch: matrix gives {arrows}, geometry gives {geometric}"
        )
    return arrows


def face_point(tree: PeriodicTree, k: int) -> PeriodicFunction:
    """A height function on the shared wall between a tree and its mutation.

    The segment between interior points of the two adjacent regions crosses
    only the wall attached to edge k; the crossing point is returned.
    """
    pi0 = synthesize_morphism(tree)
    pi1 = synthesize_morphism(mutate_tree(tree, k, check=False).tree)
    gamma = edge_matrix(tree)
    col = tuple(gamma[i][k - 1] for i in range(tree.n))
    g0 = dot(f_map(pi0), col)
    g1 = dot(f_map(pi1), col)
    if g0 <= 0 or g1 >= 0:
        raise ValueError("interior points do not bracket the wall")
    return function_combination(pi0, pi1, Fraction(g0) / (Fraction(g0) - Fraction(g1)))
