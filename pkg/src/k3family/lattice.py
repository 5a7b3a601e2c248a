"""Gram matrices of simply-laced Coxeter-Dynkin diagrams and their invariants.

Convention: root basis with diagonal -2 and off-diagonal 1 per simple edge,
so the hyperbolic T(2,3,7) lattice comes out even of determinant -1 and
signature (1,9), and E8 comes out negative definite of determinant 1.
Signature is computed by exact congruence diagonalization over the
rationals; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elimination import int_matrix_det
from .rng import Stream


class InvalidDiagramError(Exception):
    pass


@dataclass(frozen=True)
class DynkinDiagram:
    """Simple graph: node count plus undirected edge pairs (0-indexed)."""

    nodes: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        norm = []
        for i, j in self.edges:
            if i == j:
                raise InvalidDiagramError(f"self-loop at node {i}")
            if not (0 <= i < self.nodes and 0 <= j < self.nodes):
                raise InvalidDiagramError(f"edge ({i},{j}) outside 0..{self.nodes - 1}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InvalidDiagramError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edge_text(cls, text: str) -> "DynkinDiagram":
        """Edge-list text: one `i j` pair per line; node count inferred."""
        edges = []
        hi = -1
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            i, j = (int(p) for p in line.split())
            edges.append((i, j))
            hi = max(hi, i, j)
        return cls(nodes=hi + 1, edges=tuple(edges))


def path_with_tail(path_len: int, attach_at: int) -> DynkinDiagram:
    """A path of path_len nodes with one extra node joined to path node
    attach_at (0-indexed)."""
    edges = [(i, i + 1) for i in range(path_len - 1)]
    edges.append((attach_at, path_len))
    return DynkinDiagram(nodes=path_len + 1, edges=tuple(edges))


def t237_diagram() -> DynkinDiagram:
    """T(2,3,7): a 9-node path with a tenth node attached to the third path
    node, i.e. arms of 1, 2, and 6 edges from the branch node."""
    return path_with_tail(9, 2)


def e8_diagram() -> DynkinDiagram:
    """E8: a 7-node path with an eighth node attached to the fifth path
    node (arms of 1, 2, and 4 edges)."""
    return path_with_tail(7, 4)


@dataclass(frozen=True)
class GramMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        rows = tuple(tuple(int(c) for c in r) for r in self.rows)
        if any(len(r) != n for r in rows):
            raise InvalidDiagramError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise InvalidDiagramError("Gram matrix must be symmetric")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "\n".join(" ".join(f"{c:3d}" for c in r) for r in self.rows)


def gram_from_diagram(d: DynkinDiagram) -> GramMatrix:
    """Diagonal -2, entry 1 per simple edge, 0 elsewhere."""
    rows = [[0] * d.nodes for _ in range(d.nodes)]
    for i in range(d.nodes):
        rows[i][i] = -2
    for i, j in d.edges:
        rows[i][j] = 1
        rows[j][i] = 1
    return GramMatrix(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class LatticeInvariants:
    determinant: int
    signature: tuple[int, int]  # (positive, negative) pivot counts
    even: bool
    radical: int  # dimension of the kernel; 0 for nondegenerate lattices


def lattice_invariants(G: GramMatrix) -> LatticeInvariants:
    """Exact determinant, signature by rational congruence diagonalization,
    and evenness (all diagonal entries even).

    A degenerate form is reported with determinant 0 and the kernel
    dimension in `radical`; the signature then counts only nonzero pivots.
    """
    rows = G.as_lists()
    n = G.n
    det = int_matrix_det(rows) if n else 1
    even = all(rows[i][i] % 2 == 0 for i in range(n))

    M = [[Fraction(rows[i][j]) for j in range(n)] for i in range(n)]
    pos = neg = rad = 0
    for k in range(n):
        if M[k][k] == 0:
            # bring a nonzero diagonal entry to position k if possible
            swap = next((i for i in range(k + 1, n) if M[i][i] != 0), None)
            if swap is not None:
                M[k], M[swap] = M[swap], M[k]
                for r in M:
                    r[k], r[swap] = r[swap], r[k]
            else:
                j = next((j for j in range(k + 1, n) if M[k][j] != 0), None)
                if j is None:
                    rad += 1
                    continue
                # row/column addition keeps the form congruent and makes
                # the pivot 2*M[k][j] != 0 (both diagonals are zero here)
                for c in range(n):
                    M[k][c] += M[j][c]
                for r in range(n):
                    M[r][k] += M[r][j]
        piv = M[k][k]
        if piv == 0:
            rad += 1
            continue
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = M[i][k] / piv
            if f == 0:
                continue
            for j in range(k, n):
                M[i][j] -= f * M[k][j]
            for j in range(k, n):
                M[j][i] -= f * M[j][k]
    return LatticeInvariants(determinant=det, signature=(pos, neg), even=even, radical=rad)


def random_unimodular(n: int, stream: Stream, ops: int = 30) -> list[list[int]]:
    """Product of elementary integer operations: determinant +-1 exactly."""
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = stream.below(3)
        i = stream.below(n)
        j = stream.below(n - 1)
        if j >= i:
            j += 1
        if kind == 0:
            c = stream.int_range(-2, 2)
            if c:
                for col in range(n):
                    U[i][col] += c * U[j][col]
        elif kind == 1:
            U[i], U[j] = U[j], U[i]
        else:
            U[i] = [-x for x in U[i]]
    return U


def conjugate(U: list[list[int]], G: GramMatrix) -> GramMatrix:
    """The Gram matrix of the same form in the basis U: U G U^T."""
    n = G.n
    rows = G.as_lists()
    UG = [[sum(U[i][k] * rows[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    out = [[sum(UG[i][k] * U[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    return GramMatrix(tuple(tuple(r) for r in out))
