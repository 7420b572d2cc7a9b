"""Classical and quantum correlation measures.

Entropies and mutual information are reported in bits (base-2 logs, with
0 log 0 = 0). Negativity sums the negative half of the partial-transpose
spectrum; eigenvalues within 1e-12 of zero count as zero, since closed
forms produce exact zeros that floating point perturbs.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NotAStateError
from .fock import DensityMatrix, Subsystem, partial_trace, partial_transpose
from .linalg import sym_eigenvalues

NEGATIVITY_ZERO_TOL = 1e-12
_PSD_TOL = 1e-10


def entropy_from_eigenvalues(eigenvalues, neg_tol: float = _PSD_TOL) -> float:
    """Shannon entropy -sum(l log2 l) of a spectrum, in bits.

    Raises ``NotAStateError`` if any eigenvalue is below ``-neg_tol``;
    smaller negative noise is clipped to zero.
    """
    e = np.asarray(eigenvalues, dtype=float)
    if e.size and float(e.min()) < -neg_tol:
        raise NotAStateError(
            f"eigenvalue {float(e.min()):.3e} below -{neg_tol:.0e}: not a state")
    e = e[e > 0.0]
    if e.size == 0:
        return 0.0
    return float(-(e * np.log2(e)).sum())


def von_neumann_entropy(rho: DensityMatrix, method: str = "auto") -> float:
    """Von Neumann entropy of a density matrix, in bits."""
    return entropy_from_eigenvalues(sym_eigenvalues(rho.entries, method=method))


def mutual_information(rho_ab: DensityMatrix, method: str = "auto") -> float:
    """Total correlations S_A + S_B - S_AB of a bipartite state, in bits."""
    if len(rho_ab.basis) != 2:
        raise ValueError("mutual information needs a bipartite state")
    sub_a, sub_b = rho_ab.subsystems
    s_a = von_neumann_entropy(partial_trace(rho_ab, (sub_a,)), method=method)
    s_b = von_neumann_entropy(partial_trace(rho_ab, (sub_b,)), method=method)
    s_ab = von_neumann_entropy(rho_ab, method=method)
    value = s_a + s_b - s_ab
    return 0.0 if -1e-12 < value < 0.0 else value


def negativity_from_pt_eigenvalues(eigenvalues) -> float:
    """Minus the sum of the negative partial-transpose eigenvalues."""
    e = np.asarray(eigenvalues, dtype=float)
    neg = e[e < -NEGATIVITY_ZERO_TOL]
    return float(-neg.sum()) if neg.size else 0.0


def negativity(rho_ab: DensityMatrix, transposed: Subsystem,
               method: str = "auto") -> float:
    """Entanglement negativity of a bipartite state."""
    eta = partial_transpose(rho_ab, transposed)
    return negativity_from_pt_eigenvalues(sym_eigenvalues(eta.entries, method=method))


def log_negativity_from_negativity(neg: float) -> float:
    """Logarithmic negativity log2(1 + 2N); zero exactly when N is zero."""
    if neg < 0:
        raise ValueError(f"negativity must be >= 0, got {neg}")
    return math.log2(1.0 + 2.0 * neg)


def log_negativity(rho_ab: DensityMatrix, transposed: Subsystem,
                   method: str = "auto") -> float:
    return log_negativity_from_negativity(negativity(rho_ab, transposed, method=method))
