"""Goeritz forms and the Gordon-Litherland knot signature.

Conventions (fixed once, locked by ``sigma(T(2,5)) == -4``):

* corner ``k`` of a crossing is the sector between slots ``k`` and ``k+1``;
* ``eta(c) = +1`` when rotating the over strand counterclockwise sweeps the
  shaded corners, i.e. when corners 1 and 3 are shaded;
* a crossing is type II when its shaded corners lie between two incoming
  (or two outgoing) strand ends; an orientable checkerboard surface has no
  type II crossings;
* ``G[i][j] = -sum(eta)`` over crossings joining unshaded regions ``i != j``,
  diagonal entries make the rows sum to zero, the first region is dropped;
* ``sigma(K) = sig(G) - mu`` with ``mu = sum(eta)`` over type II crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .diagram import Diagram, _dart_faces, _occurrences, orient
from .errors import ColoringDisagreement, NonSymmetricInput

__all__ = [
    "Coloring",
    "GoeritzForm",
    "SignatureReport",
    "checkerboard",
    "goeritz_matrix",
    "matrix_signature",
    "integer_determinant",
    "knot_signature",
    "euler_from_signatures",
    "sigma_from_euler",
]


@dataclass(frozen=True)
class Coloring:
    """A proper 2-coloring of the faces; ``shaded[f]`` is True for black faces."""

    shaded: tuple[bool, ...]
    # per crossing: the corner faces (corner k between slots k and k+1)
    corners: tuple[tuple[int, int, int, int], ...]
    types: tuple[str, ...]
    eta: tuple[int, ...]

    @property
    def white(self) -> tuple[int, ...]:
        return tuple(f for f, s in enumerate(self.shaded) if not s)

    @property
    def black(self) -> tuple[int, ...]:
        return tuple(f for f, s in enumerate(self.shaded) if s)


@dataclass(frozen=True)
class GoeritzForm:
    matrix: tuple[tuple[int, ...], ...]
    correction: int
    coloring: Coloring

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def signature(self) -> int:
        return matrix_signature(self.matrix)

    @property
    def determinant(self) -> int:
        return integer_determinant(self.matrix)


@dataclass(frozen=True)
class SignatureReport:
    sigma: int
    determinant: int
    # (sig(G), mu) for the first and second coloring
    breakdown: tuple[tuple[int, int], tuple[int, int]]

    def as_dict(self) -> dict:
        return {
            "sigma": self.sigma,
            "determinant": self.determinant,
            "breakdown": [list(b) for b in self.breakdown],
        }


def _crossing_data(diagram: Diagram):
    xs = diagram.crossings
    occ = _occurrences(xs)
    orbits, face_of = _dart_faces(xs, occ)
    corners = tuple(
        tuple(face_of[(ci, k)] for k in range(4)) for ci in range(len(xs))
    )
    return orbits, corners


def checkerboard(diagram: Diagram) -> tuple[Coloring, Coloring]:
    """Both checkerboard colorings.

    In the first one the face left of edge 1 is white.
    """
    xs = diagram.crossings
    if not xs:
        return (
            Coloring((False, True), (), (), ()),
            Coloring((True, False), (), (), ()),
        )
    orbits, corners = _crossing_data(diagram)
    nf = len(orbits)
    # faces across an edge are the faces left of its two darts
    occ = _occurrences(xs)
    _, face_of = _dart_faces(xs, occ)
    adj: list[set[int]] = [set() for _ in range(nf)]
    for o1, o2 in occ.values():
        f1, f2 = face_of[o1], face_of[o2]
        adj[f1].add(f2)
        adj[f2].add(f1)
    od = orient(diagram)
    first_white = face_of[od.ends[1][0]]
    color = [-1] * nf
    color[first_white] = 0
    stack = [first_white]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if color[g] < 0:
                color[g] = 1 - color[f]
                stack.append(g)
            elif color[g] == color[f]:
                raise ColoringDisagreement("face adjacency graph is not bipartite")
    shading = tuple(c == 1 for c in color)
    return (
        _coloring(shading, corners, od.incoming),
        _coloring(tuple(not s for s in shading), corners, od.incoming),
    )


def _coloring(shaded, corners, incoming):
    types, eta = [], []
    for (f0, f1, _f2, _f3), (ku, ko) in zip(corners, incoming):
        eta.append(1 if shaded[f1] else -1)
        ins = {ku, ko}
        shaded_corner = 1 if shaded[f1] else 0
        pure = (shaded_corner in ins) == ((shaded_corner + 1) % 4 in ins)
        types.append("II" if pure else "I")
    return Coloring(shaded, corners, tuple(types), tuple(eta))


def goeritz_matrix(diagram: Diagram, coloring: Coloring) -> GoeritzForm:
    white = coloring.white
    index = {f: i for i, f in enumerate(white)}
    n = len(white)
    g = [[0] * n for _ in range(n)]
    mu = 0
    for corners, t, eta in zip(coloring.corners, coloring.types, coloring.eta):
        if t == "II":
            mu += eta
        w1, w2 = (corners[0], corners[2]) if eta == 1 else (corners[1], corners[3])
        if w1 == w2:
            continue
        i, j = index[w1], index[w2]
        g[i][j] -= eta
        g[j][i] -= eta
        g[i][i] += eta
        g[j][j] += eta
    reduced = tuple(tuple(row[1:]) for row in g[1:])
    return GoeritzForm(reduced, mu, coloring)


def _check_symmetric(m):
    n = len(m)
    for row in m:
        if len(row) != n:
            raise NonSymmetricInput("matrix is not square")
    for i in range(n):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise NonSymmetricInput(f"entries ({i},{j}) and ({j},{i}) differ")


def matrix_signature(matrix: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric matrix by exact congruence diagonalization.

    When every remaining diagonal entry vanishes, a row/column pair ``j``
    is added to ``i`` to create the nonzero pivot ``2 a_ij``.
    """
    _check_symmetric(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    sig = 0
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][i] != 0), None)
        if p is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                None,
            )
            if pair is None:
                break
            i, j = pair
            for c in range(k, n):
                a[i][c] += a[j][c]
            for r in range(k, n):
                a[r][i] += a[r][j]
            p = i
        if p != k:
            a[k], a[p] = a[p], a[k]
            for row in a:
                row[k], row[p] = row[p], row[k]
        piv = a[k][k]
        sig += 1 if piv > 0 else -1
        for r in range(k + 1, n):
            f = a[r][k] / piv
            if f:
                for c in range(k, n):
                    a[r][c] -= f * a[k][c]
        for r in range(k + 1, n):
            a[r][k] = Fraction(0)
            a[k][r] = Fraction(0)
    return sig


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination (0x0 -> 1)."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def knot_signature(diagram: Diagram) -> SignatureReport:
    """sigma(K) = sig(G) - mu, computed for both colorings which must agree."""
    results = []
    dets = []
    for coloring in checkerboard(diagram):
        form = goeritz_matrix(diagram, coloring)
        results.append((form.signature, form.correction))
        dets.append(abs(form.determinant))
    s1, s2 = (s - mu for s, mu in results)
    if s1 != s2 or dets[0] != dets[1]:
        raise ColoringDisagreement(
            f"colorings disagree: sigma {s1} vs {s2}, det {dets[0]} vs {dets[1]}"
        )
    return SignatureReport(s1, dets[0], (results[0], results[1]))


def euler_from_signatures(sigma_K: int, sigma_cover: int) -> int:
    return 2 * (sigma_K - sigma_cover)


def sigma_from_euler(sigma_K: int, e: int) -> Fraction:
    """sigma(K) - e/2; a non-integer result marks an impossible (K, e) pairing."""
    return Fraction(sigma_K) - Fraction(e, 2)
