"""Complex and generalized Hadamard matrices.

A complex Hadamard matrix (CHM) of size n has unimodular entries and
satisfies U U^dagger = n I. A generalized Hadamard matrix (GHM) drops
unimodularity and asks instead that the entrywise reciprocal transpose
be n times the ordinary inverse, equivalently

    n * U[i, j] * (U^-1)[j, i] = 1   for all i, j.

Every CHM is a GHM, and the GHM class is closed under the equivalence
moves U -> P1 D1 U D2 P2 with permutations P and invertible diagonals D.
This module provides predicates for both classes plus Butson refinement
(entries restricted to q-th roots of unity), dephasing, equivalence
moves, and the standard constructions: Fourier matrices, the two
printed one- and two-parameter families at sizes 4 and 6, and the
block construction that glues n blocks of size m into a GHM of size
n * m.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .linalg import DEFAULT_TOL, Matrix, SingularMatrixError

__all__ = [
    "HadamardVerdict",
    "EquivalenceMove",
    "identity_move",
    "invert_move",
    "permutation_matrix",
    "apply_equivalence",
    "dephase",
    "is_chm",
    "chm_residual",
    "ghm_residual",
    "is_ghm",
    "butson_residual",
    "is_butson",
    "fourier",
    "f4_family",
    "f6_family",
    "dita",
]

#: Largest root order probed when classifying Butson type.
BUTSON_SCAN_LIMIT = 36


@dataclass(frozen=True)
class HadamardVerdict:
    """Classification of one matrix: CHM? GHM? Butson order if any.

    max_residual is the worst residual over the tests that were run;
    it is inf when the matrix is singular or has a zero entry, in which
    case both verdicts are False.
    """

    is_chm: bool
    is_ghm: bool
    butson_order: int | None
    max_residual: float


@dataclass(frozen=True)
class EquivalenceMove:
    """Hadamard equivalence move U -> P(left_perm) D(left_diag) U D(right_diag) P(right_perm).

    Permutations are 0-based images: P(perm)[i, perm[i]] = 1. Diagonal
    entries must be nonzero (invertible diagonals preserve the GHM
    property; unimodular ones preserve CHM).
    """

    left_perm: tuple[int, ...]
    left_diag: tuple[complex, ...]
    right_diag: tuple[complex, ...]
    right_perm: tuple[int, ...]

    def __post_init__(self) -> None:
        for name, perm in (("left_perm", self.left_perm), ("right_perm", self.right_perm)):
            if sorted(perm) != list(range(len(perm))):
                raise ValueError(f"{name} is not a permutation of 0..{len(perm) - 1}: {perm}")
        for name, d in (("left_diag", self.left_diag), ("right_diag", self.right_diag)):
            if any(z == 0 for z in d):
                raise ValueError(f"{name} must have nonzero entries")
        if len(self.left_perm) != len(self.left_diag) or len(self.right_perm) != len(self.right_diag):
            raise ValueError("permutation and diagonal sizes must agree on each side")


def identity_move(n: int) -> EquivalenceMove:
    """The trivial equivalence move on size-n matrices."""
    idp = tuple(range(n))
    ones = (complex(1.0),) * n
    return EquivalenceMove(idp, ones, ones, idp)


def permutation_matrix(perm) -> Matrix:
    """0-1 matrix P with P[i, perm[i]] = 1, so (P @ u)[i] = u[perm[i]]."""
    perm = tuple(int(p) for p in perm)
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
    out = linalg.zeros(n, n)
    out[np.arange(n), perm] = 1.0
    return out


def _inverse_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def invert_move(move: EquivalenceMove) -> EquivalenceMove:
    """The move undoing `move`: apply_equivalence(apply_equivalence(u, m), invert_move(m)) == u."""
    lp_inv = _inverse_perm(move.left_perm)
    rp_inv = _inverse_perm(move.right_perm)
    # P1^-1 D1^-1 = (P1^-1) diag(1/d1[p1[i]]) after commuting the diagonal through.
    left_diag = tuple(1.0 / move.left_diag[p] for p in move.left_perm)
    right_diag = tuple(1.0 / move.right_diag[p] for p in rp_inv)
    return EquivalenceMove(lp_inv, left_diag, right_diag, rp_inv)


def apply_equivalence(u: Matrix, move: EquivalenceMove) -> Matrix:
    """Apply an equivalence move: P1 D1 u D2 P2."""
    u = linalg.as_matrix(u)
    n = u.shape[0]
    if u.shape[1] != n or len(move.left_perm) != n or len(move.right_perm) != n:
        raise ValueError(
            f"move size mismatch: matrix {u.shape}, move {len(move.left_perm)}x{len(move.right_perm)}"
        )
    p1 = permutation_matrix(move.left_perm)
    p2 = permutation_matrix(move.right_perm)
    return p1 @ linalg.diag(move.left_diag) @ u @ linalg.diag(move.right_diag) @ p2


def dephase(u: Matrix) -> tuple[Matrix, EquivalenceMove]:
    """Normalize first row and column to all ones by diagonal rescaling.

    Returns (dephased matrix, move) with the move being the one that was
    applied; an already dephased matrix comes back unchanged with the
    identity move.
    """
    u = linalg.as_matrix(u)
    n = linalg._require_square(u, "dephase input")
    if np.any(u[:, 0] == 0) or np.any(u[0, :] == 0):
        raise ValueError("dephasing requires nonzero first row and column")
    left = tuple(complex(1.0 / u[i, 0]) for i in range(n))
    right = tuple(complex(u[0, 0] / u[0, j]) for j in range(n))
    idp = tuple(range(n))
    move = EquivalenceMove(idp, left, right, idp)
    return apply_equivalence(u, move), move


def chm_residual(u: Matrix) -> float:
    """Worst violation of the CHM conditions |u_ij| = 1 and u u^dagger = n I."""
    u = linalg.as_matrix(u)
    n = linalg._require_square(u, "CHM input")
    r_mod = float(np.max(np.abs(np.abs(u) - 1.0)))
    r_orto = linalg.max_abs(u @ linalg.dagger(u) - n * linalg.identity(n))
    return max(r_mod, r_orto)


def is_chm(u: Matrix, tol: float = DEFAULT_TOL) -> bool:
    """True iff u is a complex Hadamard matrix at the given tolerance."""
    return chm_residual(u) <= tol


def ghm_residual(u: Matrix, tol: float = DEFAULT_TOL) -> float:
    """Worst violation of n * u[i, j] * (u^-1)[j, i] = 1.

    Returns inf when u has a zero entry or is singular at tol (either
    makes the defining identity unsatisfiable).
    """
    u = linalg.as_matrix(u)
    n = linalg._require_square(u, "GHM input")
    if np.any(u == 0):
        return math.inf
    try:
        inv = linalg.inverse(u, tol)
    except SingularMatrixError:
        return math.inf
    return linalg.max_abs(n * u * inv.T - 1.0)


def butson_residual(u: Matrix, q: int) -> float:
    """Largest distance from an entry of u to the nearest q-th root of unity."""
    if q < 1:
        raise ValueError("Butson order must be a positive integer")
    u = linalg.as_matrix(u)
    angles = np.angle(u)
    nearest = np.exp(2j * np.pi * np.round(angles * q / (2 * np.pi)) / q)
    return linalg.max_abs(u - nearest)


def is_butson(u: Matrix, q: int, tol: float = DEFAULT_TOL) -> bool:
    """True iff u is a CHM whose entries are all q-th roots of unity."""
    return is_chm(u, tol) and butson_residual(u, q) <= tol


def is_ghm(u: Matrix, tol: float = DEFAULT_TOL, butson_limit: int = BUTSON_SCAN_LIMIT) -> HadamardVerdict:
    """Classify u as CHM / GHM / Butson in one pass.

    max_residual is the residual of the defining GHM identity (inf for a
    zero entry or a singular matrix, both of which force a False verdict).
    butson_order is the minimal q <= butson_limit whose roots contain all
    entries, reported only when u is a CHM; None otherwise.
    """
    r_ghm = ghm_residual(u, tol)
    ghm_ok = r_ghm <= tol
    chm_ok = chm_residual(u) <= tol
    order: int | None = None
    if chm_ok:
        for q in range(1, butson_limit + 1):
            if butson_residual(u, q) <= tol:
                order = q
                break
    return HadamardVerdict(chm_ok, ghm_ok, order, r_ghm)


def fourier(n: int, ell: int = 1) -> Matrix:
    """Fourier matrix F[j, k] = w^(ell*j*k) with w = exp(2*pi*i/n).

    ell must be coprime to n so that rows stay pairwise orthogonal;
    the result is a Butson matrix of order n.
    """
    if n < 1:
        raise ValueError("Fourier size must be a positive integer")
    if math.gcd(ell, n) != 1:
        raise ValueError(f"twist {ell} must be coprime to the size {n}")
    out = linalg.zeros(n, n)
    for j in range(n):
        for k in range(n):
            out[j, k] = linalg.unit_root(ell * j * k, n)
    return out


def f4_family(a: complex) -> Matrix:
    """One-parameter size-4 family.

    CHM for |a| = 1 (the classic real Hadamard matrix at a = 1), GHM for
    every nonzero a. Coincides with the block construction
    dita(fourier(2), [fourier(2), fourier(2) @ diag(1, a)]).
    """
    a = complex(a)
    if a == 0:
        raise ValueError("family parameter must be nonzero")
    return linalg.as_matrix(
        [
            [1, 1, 1, 1],
            [1, -1, 1, -1],
            [1, a, -1, -a],
            [1, -a, -1, a],
        ]
    )


def f6_family(a: complex, b: complex) -> Matrix:
    """Two-parameter size-6 family.

    CHM for |a| = |b| = 1, GHM for all nonzero a, b. Equals the block
    construction over fourier(2) with blocks fourier(3) and
    fourier(3) @ diag(1, a, b).
    """
    a = complex(a)
    b = complex(b)
    if a == 0 or b == 0:
        raise ValueError("family parameters must be nonzero")
    w = linalg.unit_root(1, 6)
    w2, w4 = w * w, w * w * w * w
    return linalg.as_matrix(
        [
            [1, 1, 1, 1, 1, 1],
            [1, w2, w4, 1, w2, w4],
            [1, w4, w2, 1, w4, w2],
            [1, a, b, -1, -a, -b],
            [1, a * w2, b * w4, -1, -a * w2, -b * w4],
            [1, a * w4, b * w2, -1, -a * w4, -b * w2],
        ]
    )


def dita(a: Matrix, blocks) -> Matrix:
    """Block construction: out block (i, j) = a[i, j] * blocks[i].

    For an n x n GHM `a` and n GHM blocks of equal size m, the result is
    a GHM of size n*m (same statement for CHM inputs). Row i of blocks
    multiplies the whole i-th block row.
    """
    a = linalg.as_matrix(a)
    n = linalg._require_square(a, "outer factor")
    blocks = [linalg.as_matrix(b) for b in blocks]
    if len(blocks) != n:
        raise ValueError(f"need exactly {n} blocks, got {len(blocks)}")
    m = linalg._require_square(blocks[0], "block")
    for b in blocks:
        if b.shape != (m, m):
            raise ValueError(f"all blocks must be {m}x{m}, got {b.shape}")
    out = linalg.zeros(n * m, n * m)
    for i in range(n):
        for j in range(n):
            out[i * m : (i + 1) * m, j * m : (j + 1) * m] = a[i, j] * blocks[i]
    return out
