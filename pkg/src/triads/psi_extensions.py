"""Weighted coefficients whose box weights are deformed integers.

Drawing the weight vector from {n_psi} turns the first/second-kind
machinery into deformed Stirling triangles: with the canonical choice
(1_psi, 2_psi, ..., n_psi),

  [n k]_psi = first kind, n-k indices from (1_psi .. (n-1)_psi)
  {n k}_psi = second kind, n-k indices from (1_psi .. k_psi)

Under the qfact sequence these are the q-Stirling numbers, and at q = 1
the classical ones.  ``comtet_transform`` converts between the two common
q-conventions by the q^(k choose 2) factor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .konvalina import WeightVector, first_kind, second_kind
from .psi import PsiSequence, n_psi
from .scalar import Scalar, qpow


@dataclass(frozen=True)
class PsiWeightVector:
    """Weights selected from the deformed integers of one sequence."""

    base: PsiSequence
    indices: tuple[int, ...]

    def materialize(self) -> WeightVector:
        return WeightVector(
            tuple(n_psi(self.base, j) for j in self.indices),
            source=f"psi:{self.base.name}",
        )


def psi_weights(psi: PsiSequence, n: int) -> WeightVector:
    """The canonical vector (1_psi, 2_psi, ..., n_psi)."""
    return PsiWeightVector(psi, tuple(range(1, n + 1))).materialize()


def psi_stirling_first(psi: PsiSequence, n: int, k: int) -> Scalar:
    """Deformed Stirling triangle of the first kind."""
    if not 0 <= k <= n:
        raise IndexError(f"(n, k) = ({n}, {k}) outside the triangle 0 <= k <= n")
    return first_kind(psi_weights(psi, n - 1), n - k)


def psi_stirling_second(psi: PsiSequence, n: int, k: int) -> Scalar:
    """Deformed Stirling triangle of the second kind."""
    if not 0 <= k <= n:
        raise IndexError(f"(n, k) = ({n}, {k}) outside the triangle 0 <= k <= n")
    return second_kind(psi_weights(psi, k), n - k)


def comtet_transform(k: int, value: Scalar) -> Scalar:
    """Multiply by q^(k choose 2), mapping between the two q-Stirling conventions."""
    if k < 0:
        raise ValueError("comtet_transform expects k >= 0")
    return value * qpow(k * (k - 1) // 2)
