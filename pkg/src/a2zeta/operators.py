"""The four operators of the determinant identity as exact sparse matrices.

All matrices are multiplicity-aware integer matrices over deterministic
index orders: vertices and type-1 edges by their ids, directed chambers in
(chamber, slot) order, i.e. index 3*chamber + slot.

Neighbor rules on a validated complex:

  A1[u][w]   number of type-1 edges u -> w; A2 is its transpose.
  LE[e][f]   1 when dst(e) = src(f) and no chamber contains both e and f.
             The exclusion is existential: a pair lying in several common
             chambers is still excluded once.
  LB[(C,e)][(C',e')]  1 when C' != C shares the edge following e in C's
             cycle, and e' is the edge following that shared edge in C'.
"""

from .complexes import directed_chambers
from .errors import A2ZetaError


class SparseOperator:
    """Integer matrix with a tagged index space."""

    def __init__(self, space, dim, entries):
        self.space = space
        self.dim = dim
        self.entries = dict(entries)
        for (r, c), v in self.entries.items():
            if not (0 <= r < dim and 0 <= c < dim):
                raise A2ZetaError(f"entry ({r},{c}) outside dimension {dim}")
            if v < 0:
                raise A2ZetaError("negative multiplicity")

    def row_sums(self):
        sums = [0] * self.dim
        for (r, _), v in self.entries.items():
            sums[r] += v
        return sums

    def transpose(self):
        return SparseOperator(
            self.space, self.dim, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def to_dense(self):
        m = [[0] * self.dim for _ in range(self.dim)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m

    def trace_power(self, n):
        """Tr A^n by repeated sparse-times-dense multiplication."""
        dense = self.to_dense()
        acc = dense
        for _ in range(n - 1):
            acc = mat_mul(acc, dense)
        return sum(acc[i][i] for i in range(self.dim))

    def __eq__(self, other):
        return (
            isinstance(other, SparseOperator)
            and self.space == other.space
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def export(self):
        """Line-oriented triplet text with a 'sparse' header."""
        lines = [f"sparse {self.dim} {self.dim} {len(self.entries)}"]
        for (r, c) in sorted(self.entries):
            lines.append(f"{r} {c} {self.entries[(r, c)]}")
        return "\n".join(lines) + "\n"


def mat_mul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [
        [sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a
    ]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def identity_matrix(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def vertex_hecke(cx):
    """The vertex operators (A1, A2); A2 is exactly A1 transposed."""
    a1 = {}
    for s, d in cx.edges:
        a1[(s, d)] = a1.get((s, d), 0) + 1
    A1 = SparseOperator("vertices", cx.n_vertices, a1)
    return A1, A1.transpose()


def edge_operator(cx):
    """Adjacency of type-1 edges under the chamber-exclusion rule."""
    excluded = [set() for _ in range(cx.n_edges)]
    for tri in cx.chambers:
        for slot, e in enumerate(tri):
            for f in tri:
                excluded[e].add(f)
    by_src = [[] for _ in range(cx.n_vertices)]
    for f, (s, _) in enumerate(cx.edges):
        by_src[s].append(f)
    entries = {}
    for e in range(cx.n_edges):
        for f in by_src[cx.edge_dst(e)]:
            if f not in excluded[e]:
                entries[(e, f)] = 1
    return SparseOperator("edges1", cx.n_edges, entries)


def chamber_operator(cx):
    """Adjacency of directed chambers.

    For (C, e) with edge cycle e = e1, e2, e3, the neighbors are the (C', e')
    with C' one of the q chambers other than C containing e2, and e' the
    edge following e2 in C'.
    """
    where = cx.chambers_through_edge()
    dim = 3 * cx.n_chambers
    entries = {}
    for cid, tri in enumerate(cx.chambers):
        for slot in range(3):
            e2 = tri[(slot + 1) % 3]
            row = 3 * cid + slot
            for (cid2, slot2) in where[e2]:
                if cid2 == cid:
                    continue
                col = 3 * cid2 + (slot2 + 1) % 3
                entries[(row, col)] = entries.get((row, col), 0) + 1
    op = SparseOperator("directedChambers", dim, entries)
    assert len(directed_chambers(cx)) == dim
    return op


def source_type_of_directed_chamber(cx, idx):
    """Type of the source vertex of the distinguished edge."""
    cid, slot = divmod(idx, 3)
    e = cx.chambers[cid][slot]
    return cx.vertex_types[cx.edge_src(e)]


def edge_source_type(cx, e):
    return cx.vertex_types[cx.edge_src(e)]
