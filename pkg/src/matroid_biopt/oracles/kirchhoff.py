"""Spanning tree counting by the matrix tree theorem, in exact integer arithmetic."""
from __future__ import annotations

from ..matroids import GraphicMatroid


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Gaussian elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def laplacian(g: GraphicMatroid) -> list[list[int]]:
    n = g.n_vertices
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        if u == v:
            continue
        u -= 1
        v -= 1
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return lap


def count_bases(g: GraphicMatroid) -> int:
    """Number of spanning trees; 0 for a disconnected graph."""
    if g.n_vertices == 1:
        return 1
    lap = laplacian(g)
    minor = [row[1:] for row in lap[1:]]
    return bareiss_determinant(minor)
