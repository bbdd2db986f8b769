"""Hecke generators and Yang-Baxter checks.

A local Temperley-Lieb generator T with T^2 = nu * T yields a Hecke
braid generator

    R_check = q * I - T / sqrt(nu),      q + 1/q = sqrt(nu),

which satisfies (R_check - q I)(R_check + (1/q) I) = 0 and, when T
comes from an admissible ansatz, the constant braided Yang-Baxter
equation on three strands. Baxterization turns it into a
spectral-parameter family

    R_check(u) = u * R_check - (1/u) * R_check^-1
               = (u - 1/u) * R_check + ((q - 1/q)/u) * I,

which satisfies the multiplicative-parameter Yang-Baxter equation. The
plain R-matrix is R = Pi @ R_check with Pi the site-swap operator, and
the constant equation in R-form is checked independently.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .linalg import DEFAULT_TOL, Matrix

__all__ = [
    "BraidData",
    "q_from_nu",
    "braid_from_tl",
    "hecke_residual",
    "check_braid",
    "baxterize",
    "baxterize_agreement",
    "spectral_samples",
    "check_spectral_ybe",
    "flip_operator",
    "to_plain_r",
    "check_ybe",
]


@dataclass(frozen=True, eq=False)
class BraidData:
    """Hecke generator R_check with its loop factor nu and parameter q."""

    q: complex
    nu: complex
    r_check: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", complex(self.q))
        object.__setattr__(self, "nu", complex(self.nu))
        object.__setattr__(self, "r_check", linalg.as_matrix(self.r_check))
        linalg._require_square(self.r_check, "braid generator")

    @property
    def local_dim(self) -> int:
        n = math.isqrt(self.r_check.shape[0])
        if n * n != self.r_check.shape[0]:
            raise ValueError(
                f"braid generator dimension {self.r_check.shape[0]} is not a perfect square"
            )
        return n

    def to_dict(self) -> dict:
        return {
            "q": [self.q.real, self.q.imag],
            "nu": [self.nu.real, self.nu.imag],
            "r_check": linalg.matrix_to_dict(self.r_check),
        }

    @staticmethod
    def from_dict(data: dict) -> "BraidData":
        if not isinstance(data, dict):
            raise ValueError("braid document must be a JSON object")
        try:
            q = data["q"]
            nu = data["nu"]
            r_check = linalg.matrix_from_dict(data["r_check"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"braid document missing field: {exc}") from exc
        for name, pair in (("q", q), ("nu", nu)):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ValueError(f"{name} must be a [re, im] pair")
        return BraidData(complex(q[0], q[1]), complex(nu[0], nu[1]), r_check)


def q_from_nu(nu: complex) -> complex:
    """Solve q + 1/q = sqrt(nu) as q = (sqrt(nu) + sqrt(nu - 4)) / 2.

    Principal square roots throughout; for real nu < 4 this gives |q| = 1
    with nonnegative imaginary part. Any root of the quadratic works for
    the Hecke condition, so the branch is fixed purely for determinism.
    """
    nu = complex(nu)
    if nu == 0:
        raise ValueError("loop factor nu must be nonzero")
    return (cmath.sqrt(nu) + cmath.sqrt(nu - 4)) / 2


def braid_from_tl(t_local: Matrix, nu: complex, tol: float = DEFAULT_TOL) -> BraidData:
    """Build R_check = q I - T / sqrt(nu) from a local TL generator.

    Requires T^2 = nu T within tol; the Hecke condition then follows
    identically (its residual equals the one-loop residual over |nu|).
    """
    t_local = linalg.as_matrix(t_local)
    dim = linalg._require_square(t_local, "local generator")
    nu = complex(nu)
    loop = linalg.max_abs(t_local @ t_local - nu * t_local)
    if loop > tol:
        raise ValueError(
            f"input does not satisfy the one-loop relation T^2 = nu*T: residual {loop:.3e}"
        )
    q = q_from_nu(nu)
    r_check = q * linalg.identity(dim) - t_local / cmath.sqrt(nu)
    return BraidData(q, nu, r_check)


def hecke_residual(b: BraidData) -> float:
    """Worst entry of (R_check - q I)(R_check + (1/q) I)."""
    dim = b.r_check.shape[0]
    eye = linalg.identity(dim)
    return linalg.max_abs((b.r_check - b.q * eye) @ (b.r_check + (1 / b.q) * eye))


def _split_local_dim(r: Matrix, n: int | None) -> int:
    dim = linalg._require_square(r, "braid generator")
    root = math.isqrt(dim)
    if root * root != dim:
        raise ValueError(f"generator dimension {dim} is not a perfect square")
    if n is not None and n != root:
        raise ValueError(f"local dimension {n} inconsistent with generator size {dim}")
    return root


def check_braid(r_check: Matrix, n: int | None = None) -> float:
    """Constant braided Yang-Baxter residual on three strands.

    Embeds R12 = R_check (x) I and R23 = I (x) R_check and returns
    max |R12 R23 R12 - R23 R12 R23|.
    """
    r_check = linalg.as_matrix(r_check)
    n = _split_local_dim(r_check, n)
    eye = linalg.identity(n)
    r12 = linalg.kron(r_check, eye)
    r23 = linalg.kron(eye, r_check)
    return linalg.max_abs(r12 @ r23 @ r12 - r23 @ r12 @ r23)


def baxterize(b: BraidData, u: complex, tol: float = DEFAULT_TOL) -> Matrix:
    """Spectral generator R_check(u) = u R_check - (1/u) R_check^-1."""
    u = complex(u)
    if u == 0:
        raise ValueError("spectral parameter must be nonzero")
    rinv = linalg.inverse(b.r_check, tol)
    return u * b.r_check - (1 / u) * rinv


def baxterize_agreement(b: BraidData, u: complex, tol: float = DEFAULT_TOL) -> float:
    """Distance between the two baxterization formulas at parameter u.

    The closed form (u - 1/u) R_check + ((q - 1/q)/u) I equals the
    inverse-based form exactly when the Hecke identity
    R_check^-1 = R_check - (q - 1/q) I holds.
    """
    u = complex(u)
    if u == 0:
        raise ValueError("spectral parameter must be nonzero")
    direct = baxterize(b, u, tol)
    omega = b.q - 1 / b.q
    closed = (u - 1 / u) * b.r_check + (omega / u) * linalg.identity(b.r_check.shape[0])
    return linalg.max_abs(direct - closed)


def spectral_samples(count: int = 20, seed: int = 42) -> list[tuple[complex, complex]]:
    """Deterministic (u, w) pairs: exp(z) with z uniform in the box [-1, 1]^2."""
    if count < 1:
        raise ValueError("sample count must be positive")
    rng = np.random.default_rng(seed)
    box = rng.uniform(-1.0, 1.0, size=(count, 4))
    return [
        (cmath.exp(complex(a, bb)), cmath.exp(complex(c, d)))
        for a, bb, c, d in box
    ]


def check_spectral_ybe(
    b: BraidData,
    samples: list[tuple[complex, complex]] | None = None,
    count: int = 20,
    seed: int = 42,
    tol: float = DEFAULT_TOL,
) -> float:
    """Worst residual of the multiplicative spectral Yang-Baxter equation

        R12(u) R23(u*w) R12(w) = R23(w) R12(u*w) R23(u)

    over the given samples (default: spectral_samples(count, seed)).
    """
    if samples is None:
        samples = spectral_samples(count, seed)
    n = b.local_dim
    eye = linalg.identity(n)
    worst = 0.0
    for u, w in samples:
        u = complex(u)
        w = complex(w)
        if u == 0 or w == 0:
            raise ValueError("spectral parameters must be nonzero")
        r12 = {x: linalg.kron(baxterize(b, x, tol), eye) for x in (u, w, u * w)}
        r23 = {x: linalg.kron(eye, baxterize(b, x, tol)) for x in (u, w, u * w)}
        lhs = r12[u] @ r23[u * w] @ r12[w]
        rhs = r23[w] @ r12[u * w] @ r23[u]
        worst = max(worst, linalg.max_abs(lhs - rhs))
    return worst


def flip_operator(n: int) -> Matrix:
    """Swap operator Pi on two n-dimensional sites: Pi (x (x) y) = y (x) x."""
    if n < 1:
        raise ValueError("site dimension must be positive")
    out = linalg.zeros(n * n, n * n)
    for i in range(n):
        for j in range(n):
            out[i * n + j, j * n + i] = 1.0
    return out


def to_plain_r(b: BraidData) -> Matrix:
    """Plain R-matrix R = Pi @ R_check."""
    return flip_operator(b.local_dim) @ b.r_check


def check_ybe(r: Matrix, n: int | None = None) -> float:
    """Constant Yang-Baxter residual max |R12 R13 R23 - R23 R13 R12|.

    R13 is built by conjugating R12 with the swap of sites 2 and 3.
    Agrees with check_braid(R_check) when r = to_plain_r of the same
    generator.
    """
    r = linalg.as_matrix(r)
    n = _split_local_dim(r, n)
    eye = linalg.identity(n)
    r12 = linalg.kron(r, eye)
    r23 = linalg.kron(eye, r)
    p23 = linalg.kron(eye, flip_operator(n))
    r13 = p23 @ r12 @ p23
    return linalg.max_abs(r12 @ r13 @ r23 - r23 @ r13 @ r12)
