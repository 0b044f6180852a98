"""Unit-vector sequences, Gram matrices and the operators built on them.

Convention used everywhere in this package: the inner product <x, y> is
linear in the first argument and conjugate-linear in the second.  Real-mode
data is stored with zero imaginary parts and goes through the same complex
code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ArgumentError,
    DimensionError,
    NormViolation,
    SymmetryViolation,
    WeightMatrixError,
)

# Acceptance tolerance for "unit" vectors; ingestion offers an explicit
# renormalize flag instead of silently rescaling.
UNIT_NORM_TOL = 1e-9
# Gram matrices are PSD up to dense float64 round-off.
PSD_TOL = 1e-10
# Elementwise Hermitian tolerance for matrices handed to the eigensolver.
HERMITIAN_TOL = 1e-12

FIELDS = ("real", "complex")


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class UnitVectorSequence:
    """Ordered finite list of unit-norm vectors, one per row of ``vectors``."""

    vectors: np.ndarray
    field: str = "complex"
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        v = np.array(self.vectors, dtype=np.complex128)
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise DimensionError(
                f"vectors must be a nonempty 2-d array, got shape {np.shape(self.vectors)}"
            )
        if not np.all(np.isfinite(v)):
            raise ArgumentError("vectors contain NaN or Inf entries")
        if self.field not in FIELDS:
            raise ArgumentError(f"field must be one of {FIELDS}, got {self.field!r}")
        if self.field == "real" and np.any(v.imag != 0.0):
            raise ArgumentError("real-mode sequence has nonzero imaginary parts")
        if self.labels is not None and len(self.labels) != v.shape[0]:
            raise DimensionError("labels length does not match vector count")
        norms = np.linalg.norm(v, axis=1)
        bad = np.nonzero(np.abs(norms - 1.0) > UNIT_NORM_TOL)[0]
        if bad.size:
            raise NormViolation(bad[0], norms[bad[0]], tuple(int(i) for i in bad))
        object.__setattr__(self, "vectors", _freeze(v))

    @classmethod
    def from_vectors(
        cls,
        vectors: Iterable[Sequence[complex]],
        field: str | None = None,
        renormalize: bool = False,
        labels: Sequence[str] | None = None,
    ) -> "UnitVectorSequence":
        v = np.array(list(vectors), dtype=np.complex128)
        if v.ndim != 2:
            raise DimensionError("vectors must form a rectangular 2-d array")
        if field is None:
            field = "real" if np.all(v.imag == 0.0) else "complex"
        if renormalize:
            norms = np.linalg.norm(v, axis=1)
            zero = np.nonzero(norms == 0.0)[0]
            if zero.size:
                raise NormViolation(zero[0], 0.0, tuple(int(i) for i in zero))
            v = v / norms[:, None]
        return cls(v, field=field, labels=tuple(labels) if labels is not None else None)

    @property
    def n(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]


@dataclass(frozen=True)
class GramMatrix:
    """Hermitian matrix of pairwise inner products G[i, j] = <f_i, f_j>."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        g = np.array(self.entries, dtype=np.complex128)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise DimensionError(f"Gram matrix must be square, got shape {g.shape}")
        if not np.all(np.isfinite(g)):
            raise ArgumentError("Gram matrix contains NaN or Inf entries")
        if g.size and np.max(np.abs(g - g.conj().T)) > HERMITIAN_TOL:
            raise SymmetryViolation("Gram matrix is not Hermitian within 1e-12")
        object.__setattr__(self, "entries", _freeze(g))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def submatrix(self, block: Sequence[int]) -> np.ndarray:
        idx = np.asarray(block, dtype=int)
        return self.entries[np.ix_(idx, idx)]


@dataclass(frozen=True)
class WeightMatrix:
    """Symmetric nonnegative matrix with zero diagonal; entries |G_ij|^power."""

    entries: np.ndarray
    power: int = 1

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise WeightMatrixError(f"weight matrix must be square, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise WeightMatrixError("weight matrix contains NaN or Inf entries")
        if np.any(a != a.T):
            raise WeightMatrixError("weight matrix is not symmetric")
        if np.any(a < 0.0):
            raise WeightMatrixError("weight matrix has negative entries")
        if np.any(np.diagonal(a) != 0.0):
            raise WeightMatrixError("weight matrix diagonal must be zero")
        if self.power not in (1, 2):
            raise ArgumentError(f"power must be 1 or 2, got {self.power!r}")
        object.__setattr__(self, "entries", _freeze(a))

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def gram(seq: UnitVectorSequence) -> GramMatrix:
    """Gram matrix of the sequence; Hermitian by construction.

    The upper triangle is computed and mirrored, so G[i][j] == conj(G[j][i])
    holds exactly; the diagonal is set to the real squared norms.
    """
    v = seq.vectors
    norms = np.linalg.norm(v, axis=1)
    bad = np.nonzero(np.abs(norms - 1.0) > UNIT_NORM_TOL)[0]
    if bad.size:
        raise NormViolation(bad[0], norms[bad[0]], tuple(int(i) for i in bad))
    full = v @ v.conj().T
    upper = np.triu(full, 1)
    g = upper + upper.conj().T
    g[np.diag_indices_from(g)] = norms**2
    return GramMatrix(g)


def weight_matrix(g: GramMatrix, power: int = 1) -> WeightMatrix:
    """Off-diagonal |G_ij|^power with zero diagonal; symmetric exactly."""
    if power not in (1, 2):
        raise ArgumentError(f"power must be 1 or 2, got {power!r}")
    a = np.abs(g.entries) ** power
    np.fill_diagonal(a, 0.0)
    return WeightMatrix(a, power=power)


def synthesis(seq: UnitVectorSequence, c: Sequence[complex]) -> np.ndarray:
    """Synthesis operator: sum of c_k * f_k, returned in coordinates."""
    cv = np.asarray(c, dtype=np.complex128)
    if cv.ndim != 1 or cv.size != seq.n:
        raise DimensionError(f"expected {seq.n} coefficients, got shape {cv.shape}")
    if not np.all(np.isfinite(cv)):
        raise ArgumentError("coefficients contain NaN or Inf entries")
    return cv @ seq.vectors


def analysis_op(seq: UnitVectorSequence, x: Sequence[complex]) -> np.ndarray:
    """Analysis operator: the coefficient vector (<x, f_i>)_i."""
    xv = np.asarray(x, dtype=np.complex128)
    if xv.ndim != 1 or xv.size != seq.dim:
        raise DimensionError(f"expected a vector of length {seq.dim}, got shape {xv.shape}")
    if not np.all(np.isfinite(xv)):
        raise ArgumentError("vector contains NaN or Inf entries")
    return seq.vectors.conj() @ xv


def hermitian_eigenvalues(m: np.ndarray | GramMatrix) -> np.ndarray:
    """Full real spectrum of a Hermitian matrix, ascending."""
    a = m.entries if isinstance(m, GramMatrix) else np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ArgumentError("matrix contains NaN or Inf entries")
    if a.size and np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOL:
        raise SymmetryViolation("matrix is not Hermitian within 1e-12")
    return np.linalg.eigvalsh(a)
