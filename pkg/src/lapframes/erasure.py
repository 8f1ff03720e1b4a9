"""Erasure error operators and worst-case spectral radii.

For an erasure set the error operator is the k x k map assembled from the
erased dual and frame columns. Its nonzero spectrum equals that of the
small r x r matrix of pairwise inner products between the erased frame and
dual vectors, so radii are always computed on the reduced matrix; the full
operator is kept around as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import NamedTuple

import numpy as np

from .frames import DUAL_TOL, DualFrame, Frame, is_dual
from .linalg import EIG_TOL, small_complex_eigenvalues

TIE_TOL = 1e-10
MAX_SETS = 10**6


@dataclass(frozen=True)
class ErasureSet:
    """A nonempty set of 1-based coefficient indices, stored sorted."""

    indices: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) == 0:
            raise ValueError("erasure set must be nonempty")
        if list(self.indices) != sorted(set(self.indices)):
            raise ValueError(f"indices must be sorted and distinct, got {self.indices}")
        if self.indices[0] < 1:
            raise ValueError(f"indices must be >= 1, got {self.indices}")

    @property
    def r(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class ErasureReport:
    """Spectrum of one erasure set's error operator.

    ``eigenvalues`` describes the full operator: the reduced spectrum padded
    with zeros (or truncated to the k largest magnitudes when r > k, the
    surplus being structural zeros of a rank <= k operator).
    """

    lam: ErasureSet
    full_operator: np.ndarray
    reduced: np.ndarray
    eigenvalues: np.ndarray
    radius: float

    def to_doc(self) -> dict:
        return {
            "lambda": list(self.lam.indices),
            "radius": self.radius,
            "eigenvalues": [[float(z.real), float(z.imag)] for z in self.eigenvalues],
            "reduced": [
                [[float(z.real), float(z.imag)] for z in row] for row in self.reduced
            ],
        }


class RhoResult(NamedTuple):
    radius: float
    witness: ErasureSet
    reports: list[ErasureReport]


def _check_lam(f: Frame, lam: ErasureSet) -> np.ndarray:
    if lam.indices[-1] > f.n:
        raise ValueError(f"erasure index {lam.indices[-1]} exceeds n={f.n}")
    return np.asarray(lam.indices) - 1


def _require_dual(f: Frame, d: DualFrame, dual_tol: float) -> None:
    check = is_dual(f, d, dual_tol)
    if not check.ok:
        raise ValueError(f"non-dual pair: duality residual {check.residual:.3e} above {dual_tol:g}")


def error_operator(f: Frame, d: DualFrame, lam: ErasureSet, *, dual_tol: float = DUAL_TOL) -> np.ndarray:
    """k x k matrix of the reconstruction contribution of the erased set."""
    _require_dual(f, d, dual_tol)
    cols = _check_lam(f, lam)
    return d.vectors[:, cols] @ f.synthesis[:, cols].conj().T


def reduced_error_matrix(f: Frame, d: DualFrame, lam: ErasureSet, *, dual_tol: float = DUAL_TOL) -> np.ndarray:
    """r x r matrix with entry (i, j) pairing dual vector j against frame
    vector i over the erased set; shares the full operator's nonzero spectrum."""
    _require_dual(f, d, dual_tol)
    cols = _check_lam(f, lam)
    return f.synthesis[:, cols].conj().T @ d.vectors[:, cols]


def _report(f: Frame, d: DualFrame, cols: np.ndarray, *, eig_tol: float) -> ErasureReport:
    phi = f.synthesis[:, cols]
    psi = d.vectors[:, cols]
    reduced = phi.conj().T @ psi
    eigs = small_complex_eigenvalues(reduced, eig_tol=eig_tol)
    radius = float(np.max(np.abs(eigs)))
    k, r = f.k, len(cols)
    by_mag = eigs[np.argsort(-np.abs(eigs), kind="stable")]
    if r < k:
        spectrum = np.concatenate([by_mag, np.zeros(k - r, dtype=complex)])
    else:
        spectrum = by_mag[:k]
    lam = ErasureSet(tuple(int(c) + 1 for c in cols))
    return ErasureReport(lam, psi @ phi.conj().T, reduced, spectrum, radius)


def erasure_report(f: Frame, d: DualFrame, lam: ErasureSet, *, dual_tol: float = DUAL_TOL,
                   eig_tol: float = EIG_TOL) -> ErasureReport:
    _require_dual(f, d, dual_tol)
    return _report(f, d, _check_lam(f, lam), eig_tol=eig_tol)


def worst_radius(
    f: Frame,
    d: DualFrame,
    r: int,
    *,
    dual_tol: float = DUAL_TOL,
    eig_tol: float = EIG_TOL,
    tie_tol: float = TIE_TOL,
    max_sets: int = MAX_SETS,
) -> RhoResult:
    """Maximum error-operator spectral radius over all erasure sets of size r.

    Enumerates all C(n, r) sets; the witness is the lexicographically
    smallest set whose radius is within ``tie_tol`` of the maximum, so the
    result is independent of evaluation order.
    """
    if not 1 <= r < f.n:
        raise ValueError(f"erasure size r={r} outside [1, {f.n - 1}]")
    total = comb(f.n, r)
    if total > max_sets:
        raise ValueError(f"C({f.n}, {r}) = {total} exceeds the enumeration cap {max_sets}")
    _require_dual(f, d, dual_tol)
    reports = [
        _report(f, d, np.asarray(subset), eig_tol=eig_tol)
        for subset in combinations(range(f.n), r)
    ]
    best = max(report.radius for report in reports)
    witness = next(rep.lam for rep in reports if rep.radius >= best - tie_tol)
    return RhoResult(best, witness, reports)
