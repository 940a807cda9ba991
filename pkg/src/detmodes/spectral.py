"""Neumann cosine eigenbasis on the unit square.

The basis functions are the L2-orthonormal Laplacian eigenfunctions for zero
Neumann boundary conditions on [0,1]^2:

    psi_kl(x, y) = n_k * n_l * cos(k pi x) * cos(l pi y),   n_0 = 1, n_k = sqrt(2) (k > 0),

with eigenvalues lambda_kl = pi^2 (k^2 + l^2).  A scalar field is represented by
its square coefficient array c[k, l] (k, l = 0..K-1).  Physical-space values
live on the midpoint collocation grid x_i = (i + 1/2)/N, which makes the
forward/backward maps a plain DCT-II pair and the midpoint quadrature of any
product of retained cosines exact as long as the grid is fine enough (the
first aliased wavenumber is 2N).

Modes are ranked by eigenvalue, ties broken lexicographically in (k, l); rank 1
is the constant mode (0, 0) with eigenvalue 0.  Low/high-pass projections split
coefficients by rank.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.fft import dctn, idctn

PI_SQ = np.pi ** 2

#: First nonzero Laplacian eigenvalue on [0,1]^2 with Neumann conditions.
#: The constant mode has eigenvalue 0; formulas that require a positive
#: lambda_1 (Grashof number, mode thresholds) use this value by default.
LAMBDA1_DEFAULT = PI_SQ


def eigenvalue(k: int, l: int) -> float:
    """Laplacian eigenvalue pi^2 (k^2 + l^2) of the cosine mode (k, l)."""
    if k < 0 or l < 0:
        raise ValueError(f"wavenumbers must be nonnegative, got ({k}, {l})")
    return PI_SQ * (k * k + l * l)


class ModeOrdering:
    """Eigenvalue-sorted enumeration of the modes (k, l) with k, l < kmax.

    Ranks are 1-based: rank 1 is (0, 0).  Ties in the eigenvalue are broken by
    lexicographic (k, l), so the ordering is a deterministic bijection between
    ranks 1..kmax^2 and wavenumber pairs.
    """

    def __init__(self, kmax: int):
        if kmax < 1:
            raise ValueError(f"kmax must be >= 1, got {kmax}")
        self.kmax = kmax
        pairs = sorted(
            ((k, l) for k in range(kmax) for l in range(kmax)),
            key=lambda p: (p[0] * p[0] + p[1] * p[1], p),
        )
        self.pairs = pairs
        self.eigenvalues = np.array([eigenvalue(k, l) for k, l in pairs])
        # rank_grid[k, l] = 1-based rank of mode (k, l)
        self.rank_grid = np.empty((kmax, kmax), dtype=np.int64)
        for r, (k, l) in enumerate(pairs, start=1):
            self.rank_grid[k, l] = r

    @property
    def size(self) -> int:
        return len(self.pairs)

    def rank_of(self, k: int, l: int) -> int:
        return int(self.rank_grid[k, l])

    def eigenvalue_of_rank(self, rank: int) -> float:
        """Eigenvalue of the mode at 1-based ``rank``."""
        if not 1 <= rank <= self.size:
            raise ValueError(f"rank {rank} outside 1..{self.size}")
        return float(self.eigenvalues[rank - 1])

    def low_pass_mask(self, m: int) -> np.ndarray:
        """Boolean (kmax, kmax) mask of the modes with rank <= m."""
        if not 1 <= m <= self.size:
            raise ValueError(f"mode count {m} outside 1..{self.size}")
        return self.rank_grid <= m


@lru_cache(maxsize=32)
def _eigenvalue_grid(kmax: int) -> np.ndarray:
    k = np.arange(kmax)
    return PI_SQ * (k[:, None] ** 2 + k[None, :] ** 2)


@lru_cache(maxsize=32)
def _ordering_cached(kmax: int) -> ModeOrdering:
    return ModeOrdering(kmax)


def mode_ordering(kmax: int) -> ModeOrdering:
    """Shared (cached) ModeOrdering for the given cutoff."""
    return _ordering_cached(kmax)


def to_physical(coeffs: np.ndarray, n: int) -> np.ndarray:
    """Evaluate a coefficient array on the n x n midpoint grid.

    Requires n >= K so no modes are dropped; the map is exact (the retained
    cosines are resolved on any grid with n >= K).
    """
    kk = coeffs.shape[0]
    if n < 2:
        raise ValueError(f"grid size must be >= 2, got {n}")
    if n < kk:
        raise ValueError(f"grid size {n} would truncate {kk} retained modes")
    padded = np.zeros((n, n))
    padded[:kk, :kk] = coeffs
    return idctn(padded * n, type=2, norm="ortho")


def to_spectral(grid: np.ndarray, kmax: int | None = None) -> np.ndarray:
    """Project grid values onto the cosine basis; keep modes k, l < kmax."""
    n = grid.shape[0]
    if grid.shape != (n, n):
        raise ValueError(f"expected a square grid, got shape {grid.shape}")
    coeffs = dctn(grid, type=2, norm="ortho") / n
    if kmax is not None:
        if kmax > n:
            raise ValueError(f"cannot retain {kmax} modes from an {n}-point grid")
        coeffs = coeffs[:kmax, :kmax].copy()
    return coeffs


def project_low(coeffs: np.ndarray, m: int, ordering: ModeOrdering | None = None) -> np.ndarray:
    """Keep the m lowest-ranked modes, zero the rest."""
    ordering = ordering or mode_ordering(coeffs.shape[0])
    return np.where(ordering.low_pass_mask(m), coeffs, 0.0)


def project_high(coeffs: np.ndarray, m: int, ordering: ModeOrdering | None = None) -> np.ndarray:
    """Complement of project_low: zero the m lowest-ranked modes."""
    ordering = ordering or mode_ordering(coeffs.shape[0])
    return np.where(ordering.low_pass_mask(m), 0.0, coeffs)


def norm_l2(coeffs: np.ndarray) -> float:
    """L2 norm via Parseval (basis is orthonormal)."""
    return float(np.sqrt((coeffs * coeffs).sum()))


def inner_l2(a: np.ndarray, b: np.ndarray) -> float:
    """L2 inner product via Parseval."""
    return float((a * b).sum())


def grad_norm_l2(coeffs: np.ndarray) -> float:
    """H1 seminorm: (sum over modes of lambda_kl c_kl^2)^(1/2)."""
    lam = _eigenvalue_grid(coeffs.shape[0])
    return float(np.sqrt((lam * coeffs * coeffs).sum()))


# Oversampling factors making the midpoint quadrature of |f|^p exact: a field
# with modes < K raised to the p-th power has modes up to p(K-1), and the
# midpoint rule on n points first errs at wavenumber 2n.
_P_OVERSAMPLE = {4: 2, 8: 4}


def norm_lp(coeffs: np.ndarray, p: int, oversample: int | None = None) -> float:
    """Lp norm for p in {2, 4, 8}.

    p = 2 uses Parseval; p = 4, 8 use midpoint quadrature on an oversampled
    grid (factor 2 resp. 4 by default, which makes the quadrature exact).
    """
    if p == 2:
        return norm_l2(coeffs)
    if p not in _P_OVERSAMPLE:
        raise ValueError(f"unsupported norm exponent {p}; use one of 2, 4, 8")
    factor = _P_OVERSAMPLE[p] if oversample is None else oversample
    if factor < 2:
        raise ValueError(f"oversampling factor must be >= 2, got {factor}")
    g = to_physical(coeffs, factor * coeffs.shape[0])
    return float(np.mean(np.abs(g) ** p) ** (1.0 / p))


def quad_mean(grid: np.ndarray) -> float:
    """Midpoint-rule integral over the unit square (= plain mean)."""
    return float(grid.mean())
