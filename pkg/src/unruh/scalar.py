"""Scalar field seen from a uniformly accelerated frame.

The accelerated-frame vacuum is a two-mode squeezed state over the Rob and
AntiRob wedges, so every matrix lives on a truncated Fock space. Truncation
is adaptive: the cutoff grows until the dropped tail mass of both the
vacuum and the one-particle state is below ``tail_tol``, and the loss is
carried around explicitly as ``trace_deficit`` rather than renormalized
away, so closed-form coefficients can be compared entry for entry.

Hardcore bosons reuse the same machinery with the cutoff pinned to the
occupation cap instead of adapted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ConvergenceError, NotAStateError, OracleMismatchError, TruncationError
from .fock import (Bipartition, DensityMatrix, FieldKind, LabeledBasis,
                   SqueezingParam, StateVector, Subsystem, partial_trace,
                   partial_transpose, reduced_density_matrix)
from .linalg import sym_eigenvalues, tridiagonal_eigenvalues
from .measures import (log_negativity_from_negativity,
                       negativity_from_pt_eigenvalues, von_neumann_entropy)
from .report import CorrelationReport

ORACLE_TOL = 1e-9
_PT_PSD_ERROR_TOL = 1e-10
_SERIES_FLOOR = 1e-22
_SERIES_CAP = 1_000_000


@dataclass(frozen=True)
class TruncationConfig:
    """Fock truncation and block-sum controls.

    ``n_max`` is the cutoff of the squeezed-mode sums (Rob occupations then
    reach n_max + 1 through the one-particle component); ``None`` adapts it
    to ``tail_tol``. ``d_max``/``block_tol`` govern the Rob-AntiRob
    block-sum negativity. ``n_cap`` bounds adaptive growth.
    """

    n_max: int | None = None
    tail_tol: float = 1e-12
    d_max: int = 400
    block_tol: float = 1e-14
    n_cap: int = 4096

    def __post_init__(self):
        if self.n_max is not None and self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if self.tail_tol <= 0:
            raise ValueError("tail_tol must be positive")
        if self.d_max < 2:
            raise ValueError(f"d_max must be >= 2, got {self.d_max}")
        if self.block_tol <= 0:
            raise ValueError("block_tol must be positive")


@dataclass(frozen=True)
class HardcoreConfig:
    """Bosonic mode with the squeezed-sum occupation capped at ``cap``.

    ``truncate_only`` keeps the raw truncated coefficients (trace < 1, the
    loss recorded as trace_deficit); ``renormalized`` rescales the pure
    state to unit norm first. Block positivity, hence the vanishing
    Alice-AntiRob negativity, is invariant under that rescaling.
    """

    cap: int
    mode: str = "truncate_only"

    MODES = ("truncate_only", "renormalized")

    def __post_init__(self):
        if self.cap < 1:
            raise ValueError(f"cap must be >= 1, got {self.cap}")
        if self.mode not in self.MODES:
            raise ValueError(f"mode must be one of {self.MODES}, got {self.mode!r}")


class SubsystemEntropies(NamedTuple):
    S_R: float
    S_Rbar: float
    S_AR: float
    S_ARbar: float
    S_RRbar: float
    S_A: float


def rapidity_scalar(q: float) -> SqueezingParam:
    """Squeezing parameter r = artanh(q) for q = exp(-pi k0 c / a) in [0, 1).

    q -> 1 (infinite acceleration) sends r to infinity, hence the open
    interval.
    """
    if not 0.0 <= q < 1.0:
        raise ValueError(f"q must lie in [0, 1) (r diverges at 1), got {q}")
    return SqueezingParam(FieldKind.SCALAR, math.atanh(q))


def _r_value(r) -> float:
    if isinstance(r, SqueezingParam):
        if r.field_kind is FieldKind.DIRAC:
            raise ValueError("expected a scalar/hardcore squeezing parameter")
        return r.r
    rv = float(r)
    if not math.isfinite(rv) or rv < 0:
        raise ValueError(f"squeezing parameter must be finite and >= 0, got {r}")
    return rv


# ---------------------------------------------------------------------------
# truncation
# ---------------------------------------------------------------------------

def vacuum_tail(x: float, n_max: int) -> float:
    """Mass of the squeezed vacuum beyond occupation n_max; x = tanh^2 r."""
    return x ** (n_max + 1)


def one_particle_tail(x: float, n_max: int) -> float:
    """Mass of the one-particle state beyond summation index n_max."""
    return x ** (n_max + 1) * ((n_max + 2) - (n_max + 1) * x)


def resolve_n_max(r, cfg: TruncationConfig) -> int:
    """Cutoff honouring both state tails, grown adaptively unless pinned."""
    if cfg.n_max is not None:
        return cfg.n_max
    x = math.tanh(_r_value(r)) ** 2
    n = 1
    while max(vacuum_tail(x, n), one_particle_tail(x, n)) > cfg.tail_tol:
        n += 1
        if n > cfg.n_cap:
            raise TruncationError(
                f"n_max adaptation exceeded the hard cap {cfg.n_cap} at r={_r_value(r)}; "
                f"loosen tail_tol or set n_max explicitly")
    return n


def truncation_deficits(r, n_max: int) -> tuple[float, float]:
    """(vacuum, one-particle) tail masses at a given cutoff."""
    x = math.tanh(_r_value(r)) ** 2
    return vacuum_tail(x, n_max), one_particle_tail(x, n_max)


# ---------------------------------------------------------------------------
# state builders
# ---------------------------------------------------------------------------

def _bases(n_max: int) -> tuple[LabeledBasis, LabeledBasis]:
    # Rob reaches n_max + 1 through the one-particle component
    return (LabeledBasis.fock(Subsystem.ROB, n_max + 1),
            LabeledBasis.fock(Subsystem.ANTIROB, n_max))


def scalar_vacuum(r, cfg: TruncationConfig = TruncationConfig()) -> StateVector:
    """Accelerated-frame vacuum: amplitude tanh^n r / cosh r on (n, n)."""
    rv = _r_value(r)
    n_max = resolve_n_max(rv, cfg)
    rob, antirob = _bases(n_max)
    t, ch = math.tanh(rv), math.cosh(rv)
    amps = np.zeros((rob.dim, antirob.dim))
    n = np.arange(n_max + 1)
    amps[n, n] = t ** n / ch
    deficit = vacuum_tail(t * t, n_max)
    return StateVector((rob, antirob), amps.ravel(), trace_deficit=deficit)


def scalar_one_particle(r, cfg: TruncationConfig = TruncationConfig()) -> StateVector:
    """Minkowski one-particle state: tanh^n r sqrt(n+1)/cosh^2 r on (n+1, n)."""
    rv = _r_value(r)
    n_max = resolve_n_max(rv, cfg)
    rob, antirob = _bases(n_max)
    t, ch = math.tanh(rv), math.cosh(rv)
    amps = np.zeros((rob.dim, antirob.dim))
    n = np.arange(n_max + 1)
    amps[n + 1, n] = t ** n * np.sqrt(n + 1) / ch ** 2
    deficit = one_particle_tail(t * t, n_max)
    return StateVector((rob, antirob), amps.ravel(), trace_deficit=deficit)


def scalar_tripartite_state(r, cfg: TruncationConfig = TruncationConfig(),
                            renormalized: bool = False) -> StateVector:
    """(|0>_A |vacuum> + |1>_A |one particle>)/sqrt(2) over Alice x Rob x AntiRob."""
    rv = _r_value(r)
    n_max = resolve_n_max(rv, cfg)
    pinned = TruncationConfig(n_max=n_max, tail_tol=cfg.tail_tol,
                              d_max=cfg.d_max, block_tol=cfg.block_tol)
    vac = scalar_vacuum(rv, pinned)
    one = scalar_one_particle(rv, pinned)
    alice = LabeledBasis.fock(Subsystem.ALICE, 1)
    amps = np.zeros((2, vac.amplitudes.size))
    amps[0] = vac.amplitudes
    amps[1] = one.amplitudes
    amps /= math.sqrt(2.0)
    deficit = (vac.trace_deficit + one.trace_deficit) / 2.0
    if renormalized:
        amps /= math.sqrt(1.0 - deficit)
        deficit = 0.0
    return StateVector((alice,) + vac.basis, amps.ravel(), trace_deficit=deficit)


# ---------------------------------------------------------------------------
# closed-form density matrices
# ---------------------------------------------------------------------------

def _closed_rho(rv: float, n_max: int, bipartition: Bipartition,
                scale: float = 1.0) -> DensityMatrix:
    t, ch = math.tanh(rv), math.cosh(rv)
    dv, do = truncation_deficits(rv, n_max)
    deficit = (dv + do) / 2.0
    alice = LabeledBasis.fock(Subsystem.ALICE, 1)
    rob, antirob = _bases(n_max)
    if bipartition is Bipartition.ALICE_ROB:
        d_r = rob.dim
        m = np.zeros((2 * d_r, 2 * d_r))
        for n in range(n_max + 1):
            pref = t ** (2 * n) / (2 * ch ** 2) * scale
            i0 = n            # |0, n>
            i1 = d_r + n + 1  # |1, n+1>
            m[i0, i0] += pref
            m[i1, i1] += pref * (n + 1) / ch ** 2
            v = pref * math.sqrt(n + 1) / ch
            m[i0, i1] += v
            m[i1, i0] += v
        basis = (alice, rob)
    elif bipartition is Bipartition.ALICE_ANTIROB:
        d_b = antirob.dim
        m = np.zeros((2 * d_b, 2 * d_b))
        for n in range(n_max + 1):
            pref = t ** (2 * n) / (2 * ch ** 2) * scale
            m[n, n] += pref
            m[d_b + n, d_b + n] += pref * (n + 1) / ch ** 2
            if n + 1 <= n_max:
                v = pref * math.sqrt(n + 1) * t / ch
                m[n + 1, d_b + n] += v
                m[d_b + n, n + 1] += v
        basis = (alice, antirob)
    elif bipartition is Bipartition.ROB_ANTIROB:
        d_r, d_b = rob.dim, antirob.dim
        m = np.zeros((d_r * d_b, d_r * d_b))
        for n in range(n_max + 1):
            for mm in range(n_max + 1):
                pref = t ** (n + mm) / (2 * ch ** 2) * scale
                m[n * d_b + n, mm * d_b + mm] += pref
                m[(n + 1) * d_b + n, (mm + 1) * d_b + mm] += (
                    pref * math.sqrt(n + 1) * math.sqrt(mm + 1) / ch ** 2)
        basis = (rob, antirob)
    else:
        raise ValueError(f"unknown bipartition {bipartition}")
    out_deficit = 1.0 - scale * (1.0 - deficit)
    return DensityMatrix(basis, m, trace_deficit=max(out_deficit, 0.0))


def scalar_closed_rho(r, cfg: TruncationConfig, bipartition: Bipartition) -> DensityMatrix:
    """Closed-form bipartite density matrix, truncated, deficit recorded."""
    rv = _r_value(r)
    return _closed_rho(rv, resolve_n_max(rv, cfg), bipartition)


# ---------------------------------------------------------------------------
# entropies
# ---------------------------------------------------------------------------

def rob_weight(n: int, x: float) -> float:
    """n-th eigenvalue of Rob's reduced state; x = tanh^2 r."""
    if n == 0:
        return (1.0 - x) / 2.0
    return x ** (n - 1) * (1.0 - x) * (x + n * (1.0 - x)) / 2.0


def antirob_weight(n: int, x: float) -> float:
    """n-th eigenvalue of AntiRob's reduced state; x = tanh^2 r."""
    return x ** n * (1.0 - x) * (1.0 + (n + 1) * (1.0 - x)) / 2.0


def _series_entropy(weight, x: float) -> float:
    total = 0.0
    n = 0
    while True:
        w = weight(n, x)
        if w > 0.0:
            total -= w * math.log2(w)
        if n >= 8 and w < _SERIES_FLOOR:
            return total
        n += 1
        if n > _SERIES_CAP:
            raise ConvergenceError(
                f"entropy series did not converge within {_SERIES_CAP} terms "
                f"(x={x})", partial_value=total)


def scalar_entropies(r, cfg: TruncationConfig = TruncationConfig()) -> SubsystemEntropies:
    """Series-summed subsystem entropies, in bits.

    For the pure tripartite state the joint entropies collapse onto the
    single-party ones: S_AR = S_Rbar, S_ARbar = S_R, S_RRbar = S_A = 1.
    """
    x = math.tanh(_r_value(r)) ** 2
    s_r = _series_entropy(rob_weight, x)
    s_rbar = _series_entropy(antirob_weight, x)
    return SubsystemEntropies(S_R=s_r, S_Rbar=s_rbar, S_AR=s_rbar,
                              S_ARbar=s_r, S_RRbar=1.0, S_A=1.0)


def antirob_entropy_from_rob(r, s_rob: float) -> float:
    """AntiRob entropy from Rob's, using the weight shift q_n = p_{n+2}/tanh^2 r.

    S_Rbar = S_R / tanh^2 r + log2(1/(2 cosh^2 r)) / sinh^2 r + log2(tanh^2 r).
    Singular at r = 0, where the direct limit is 0.
    """
    rv = _r_value(r)
    if rv == 0.0:
        return 0.0
    th2 = math.tanh(rv) ** 2
    sh2 = math.sinh(rv) ** 2
    ch2 = math.cosh(rv) ** 2
    return s_rob / th2 + math.log2(1.0 / (2.0 * ch2)) / sh2 + math.log2(th2)


# ---------------------------------------------------------------------------
# negativities
# ---------------------------------------------------------------------------

def scalar_negativity_AR(r, cfg: TruncationConfig = TruncationConfig()) -> float:
    """Alice-Rob negativity as a series over partial-transpose blocks.

    Each 2x2 block of the partial transpose contributes one non-positive
    eigenvalue; terms are summed until both the term and its geometric tail
    bound drop below tail_tol. Starts at 1/2 in the inertial limit and
    decays to zero with acceleration.
    """
    rv = _r_value(r)
    if rv == 0.0:
        return 0.5
    t, ch, sh = math.tanh(rv), math.cosh(rv), math.sinh(rv)
    x = t * t
    total = 0.0
    n = 0
    while True:
        b = n / sh ** 2 + x
        term = x ** n / (4 * ch ** 2) * abs(b - math.sqrt(b * b + 4 / ch ** 2))
        total += term
        tail_bound = term * x / (1.0 - x)
        if n >= 4 and term < cfg.tail_tol and tail_bound < cfg.tail_tol:
            return total
        n += 1
        if n > _SERIES_CAP:
            raise ConvergenceError("negativity series did not converge",
                                   partial_value=total)


def scalar_negativity_ARbar(r, cfg: TruncationConfig = TruncationConfig()) -> float:
    """Alice-AntiRob negativity: identically zero for every acceleration.

    Asserts the claim rather than assuming it: every 2x2 block of the
    partial transpose has non-negative determinant, and the numerically
    computed spectrum must stay above -1e-10 (an eigenvalue below that is
    an implementation bug and raises).
    """
    rv = _r_value(r)
    n_max = resolve_n_max(rv, cfg)
    t, ch = math.tanh(rv), math.cosh(rv)
    for n in range(n_max + 1):
        pref = t ** (2 * n) / (2 * ch ** 2)
        det = pref * pref * ((n + 2) * t * t / ch ** 2 - (n + 1) * t * t / ch ** 2)
        if det < -1e-30:
            raise NotAStateError(f"partial-transpose block {n} has negative determinant")
    rho = _closed_rho(rv, n_max, Bipartition.ALICE_ANTIROB)
    eta = partial_transpose(rho, Subsystem.ANTIROB)
    eigs = sym_eigenvalues(eta.entries, method="lapack")
    if float(eigs.min()) < -_PT_PSD_ERROR_TOL:
        raise NotAStateError(
            f"Alice-AntiRob partial transpose has eigenvalue {eigs.min():.3e} "
            f"< -{_PT_PSD_ERROR_TOL:.0e}")
    return 0.0


def rrbar_block_basis(D: int) -> list[tuple[int, int]]:
    """Occupation pairs (rob, antirob) with rob + antirob = D - 1, interleaved
    from the outside in so the block is tridiagonal."""
    out = []
    for j in range(D):
        if j % 2 == 0:
            out.append((j // 2, D - 1 - j // 2))
        else:
            out.append((D - 1 - (j - 1) // 2, (j - 1) // 2))
    return out


def rrbar_block_diagonals(r, D: int) -> tuple[np.ndarray, np.ndarray]:
    """(diagonal, off-diagonal) of the D-dimensional Rob-AntiRob PT block.

    The diagonal vanishes except for its last entry; couplings alternate
    between tanh^(D-1)/(2 cosh^2) (odd positions) and
    sqrt((D-l) l) tanh^(D-2)/(2 cosh^4) (even positions 2l).
    """
    if D < 1:
        raise ValueError(f"block dimension must be >= 1, got {D}")
    rv = _r_value(r)
    t, ch = math.tanh(rv), math.cosh(rv)
    a = np.zeros(D + 1)
    for ell in range(1, D + 1):
        if ell % 2 == 1:
            a[ell] = t ** (D - 1) / (2 * ch ** 2)
        else:
            l = ell // 2
            a[ell] = math.sqrt((D - l) * l) * t ** (D - 2) / (2 * ch ** 4)
    diag = np.zeros(D)
    diag[D - 1] = a[D]
    return diag, a[1:D].copy()


def rrbar_block(r, D: int) -> np.ndarray:
    """Dense D x D Rob-AntiRob partial-transpose block."""
    diag, off = rrbar_block_diagonals(r, D)
    m = np.diag(diag)
    for k in range(D - 1):
        m[k, k + 1] = m[k + 1, k] = off[k]
    return m


def rrbar_block_constructive(psi: StateVector, D: int) -> np.ndarray:
    """Restriction of the constructive Rob-AntiRob partial transpose to the
    block with rob + antirob = D - 1, in the interleaved basis ordering.

    Labels beyond the truncated axes contribute zero rows/columns, matching
    the truncated state viewed as a vector in the untruncated space.
    """
    tensor = psi.tensor()
    if psi.subsystems != (Subsystem.ALICE, Subsystem.ROB, Subsystem.ANTIROB):
        raise ValueError("expected an Alice x Rob x AntiRob state")
    d_r, d_b = tensor.shape[1], tensor.shape[2]
    basis = rrbar_block_basis(D)
    n_idx = np.array([p[0] for p in basis])
    m_idx = np.array([p[1] for p in basis])
    ok_n = n_idx < d_r
    ok_m = m_idx < d_b
    block = np.zeros((D, D))
    for a in range(tensor.shape[0]):
        g = tensor[a][np.clip(n_idx, 0, d_r - 1)[:, None],
                      np.clip(m_idx, 0, d_b - 1)[None, :]]
        g[~ok_n, :] = 0.0
        g[:, ~ok_m] = 0.0
        block += g * g.T
    return block


def _block_negativity_sum(block_eigs, d_max: int, block_tol: float) -> float:
    """Accumulate per-block negative eigenvalues until three consecutive
    blocks fall below block_tol; ``block_eigs(D)`` yields a spectrum."""
    total = 0.0
    quiet = 0
    for D in range(1, d_max + 1):
        contrib = negativity_from_pt_eigenvalues(block_eigs(D))
        total += contrib
        if contrib < block_tol:
            quiet += 1
            if quiet >= 3:
                return total
        else:
            quiet = 0
    raise ConvergenceError(
        f"Rob-AntiRob block sum did not converge within d_max={d_max} blocks",
        partial_value=total)


def scalar_negativity_RRbar(r, cfg: TruncationConfig = TruncationConfig()) -> float:
    """Rob-AntiRob negativity: direct sum of the tridiagonal PT blocks.

    Strictly increasing with acceleration and unbounded; block contributions
    decay geometrically in tanh r, so a window of three sub-tolerance blocks
    guards against stopping on a parity dip.
    """
    rv = _r_value(r)
    if rv == 0.0:
        return 0.0
    return _block_negativity_sum(
        lambda D: tridiagonal_eigenvalues(*rrbar_block_diagonals(rv, D)),
        cfg.d_max, cfg.block_tol)


def _constructive_rrbar_negativity(psi: StateVector, d_max: int,
                                   block_tol: float) -> float:
    """Block negativity with entries taken from the state, not the closed form."""
    def eigs(D):
        block = rrbar_block_constructive(psi, D)
        if D == 1:
            return block.ravel()
        off2 = block - np.diag(np.diag(block))
        off2 -= np.diag(np.diag(block, 1), 1) + np.diag(np.diag(block, -1), -1)
        scale = max(1.0, float(np.max(np.abs(block))))
        if float(np.max(np.abs(off2))) > 1e-14 * scale:
            raise NotAStateError("constructive PT block is not tridiagonal")
        return tridiagonal_eigenvalues(np.diag(block).copy(), np.diag(block, 1).copy())
    return _block_negativity_sum(eigs, d_max, block_tol)


# ---------------------------------------------------------------------------
# hardcore bosons
# ---------------------------------------------------------------------------

def hardcore_tripartite_state(r, hc: HardcoreConfig) -> StateVector:
    """Capped-occupation tripartite state; cutoff pinned at the cap."""
    cfg = TruncationConfig(n_max=hc.cap)
    return scalar_tripartite_state(r, cfg, renormalized=hc.mode == "renormalized")


def hardcore_rho(r, hc: HardcoreConfig, bipartition: Bipartition) -> DensityMatrix:
    """Closed-form bipartite matrix of the capped mode.

    ``truncate_only`` keeps the squeezed-state coefficients verbatim;
    ``renormalized`` rescales by the kept mass so the trace is one.
    """
    rv = _r_value(r)
    dv, do = truncation_deficits(rv, hc.cap)
    scale = 1.0
    if hc.mode == "renormalized":
        scale = 1.0 / (1.0 - (dv + do) / 2.0)
    return _closed_rho(rv, hc.cap, bipartition, scale=scale)


# ---------------------------------------------------------------------------
# dual-route reports
# ---------------------------------------------------------------------------

def _mutual_informations_from_entropies(ent: SubsystemEntropies) -> dict:
    return {
        "I_AR": ent.S_A + ent.S_R - ent.S_AR,
        "I_ARbar": ent.S_A + ent.S_Rbar - ent.S_ARbar,
        "I_RRbar": ent.S_R + ent.S_Rbar - ent.S_RRbar,
    }


def scalar_closed_measures(r, cfg: TruncationConfig) -> dict:
    ent = scalar_entropies(r, cfg)
    out = _mutual_informations_from_entropies(ent)
    out["N_AR"] = scalar_negativity_AR(r, cfg)
    out["N_ARbar"] = scalar_negativity_ARbar(r, cfg)
    out["N_RRbar"] = scalar_negativity_RRbar(r, cfg)
    return out


def scalar_constructive_measures(r, cfg: TruncationConfig,
                                 psi: StateVector | None = None) -> dict:
    """All six measures from the truncated state alone (LAPACK eigensolves).

    Joint Rob-AntiRob entropies use the exact Schmidt duality of a pure
    state: the nonzero spectrum of a reduction equals that of its
    complement, so S_RRbar comes from Alice's 2x2 reduction.

    The Rob-AntiRob partial-transpose blocks couple amplitudes across
    different occupations, so their entries decay like tanh^(n+m) rather
    than tanh^(2n); that comparison uses a state truncated at twice the
    adaptive cutoff so the amplitude-level tail is below tail_tol too.
    """
    rv = _r_value(r)
    if psi is None:
        psi = scalar_tripartite_state(rv, cfg)
    a, ro, ab = Subsystem.ALICE, Subsystem.ROB, Subsystem.ANTIROB
    rho_ar = reduced_density_matrix(psi, (a, ro))
    rho_arbar = reduced_density_matrix(psi, (a, ab))
    s_ar = von_neumann_entropy(rho_ar, method="lapack")
    s_arbar = von_neumann_entropy(rho_arbar, method="lapack")
    s_a = von_neumann_entropy(reduced_density_matrix(psi, (a,)), method="lapack")
    s_r = von_neumann_entropy(reduced_density_matrix(psi, (ro,)), method="lapack")
    s_rbar = von_neumann_entropy(reduced_density_matrix(psi, (ab,)), method="lapack")
    s_rrbar = s_a
    eta_ar = partial_transpose(rho_ar, ro)
    eta_arbar = partial_transpose(rho_arbar, ab)
    pt_ar = sym_eigenvalues(eta_ar.entries, method="lapack")
    pt_arbar = sym_eigenvalues(eta_arbar.entries, method="lapack")
    if float(pt_arbar.min()) < -_PT_PSD_ERROR_TOL:
        raise NotAStateError(
            f"constructive Alice-AntiRob partial transpose has eigenvalue "
            f"{pt_arbar.min():.3e}")
    n_max = resolve_n_max(rv, cfg)
    deep = TruncationConfig(n_max=2 * n_max + 2, tail_tol=cfg.tail_tol,
                            d_max=cfg.d_max, block_tol=cfg.block_tol)
    psi_deep = scalar_tripartite_state(rv, deep)
    return {
        "I_AR": s_a + s_r - s_ar,
        "I_ARbar": s_a + s_rbar - s_arbar,
        "I_RRbar": s_r + s_rbar - s_rrbar,
        "N_AR": negativity_from_pt_eigenvalues(pt_ar),
        "N_ARbar": negativity_from_pt_eigenvalues(pt_arbar),
        "N_RRbar": _constructive_rrbar_negativity(psi_deep, cfg.d_max, cfg.block_tol),
    }


def _report_from_routes(rv: float, closed: dict, constructive: dict | None,
                        deficit: float, tol: float) -> CorrelationReport:
    discrepancy = float("nan")
    if constructive is not None:
        discrepancy = max(abs(closed[k] - constructive[k]) for k in closed)
        if discrepancy > tol:
            raise OracleMismatchError(
                f"closed-form vs constructive mismatch {discrepancy:.3e} at r={rv}",
                discrepancy=discrepancy)
    n_rrbar = closed["N_RRbar"]
    return CorrelationReport(
        r=rv,
        I_AR=closed["I_AR"], I_ARbar=closed["I_ARbar"], I_RRbar=closed["I_RRbar"],
        N_AR=closed["N_AR"], N_ARbar=closed["N_ARbar"], N_RRbar=n_rrbar,
        logN_RRbar=log_negativity_from_negativity(n_rrbar),
        trace_deficit=deficit,
        oracle_discrepancy=discrepancy,
    )


def scalar_report(r, cfg: TruncationConfig = TruncationConfig(),
                  oracle: bool = True) -> CorrelationReport:
    """Correlation report for the scalar field at one acceleration.

    The reported values come from the series/block closed forms; with
    ``oracle`` enabled they are cross-checked against the truncated
    constructive state. The allowed discrepancy is 1e-9 at the default
    truncation and scales with a loosened tail_tol, since the dropped tail
    shifts the constructive entropies by about tail_tol times a log factor.
    """
    rv = _r_value(r)
    n_max = resolve_n_max(rv, cfg)
    dv, do = truncation_deficits(rv, n_max)
    closed = scalar_closed_measures(rv, cfg)
    constructive = scalar_constructive_measures(rv, cfg) if oracle else None
    tol = max(ORACLE_TOL, 100.0 * cfg.tail_tol)
    return _report_from_routes(rv, closed, constructive, (dv + do) / 2.0, tol)


def hardcore_closed_measures(r, hc: HardcoreConfig) -> dict:
    """Measures from the coefficient-transcribed capped matrices."""
    rv = _r_value(r)
    rho = {bip: hardcore_rho(rv, hc, bip) for bip in Bipartition}
    a, ro, ab = Subsystem.ALICE, Subsystem.ROB, Subsystem.ANTIROB
    singles = {
        a: von_neumann_entropy(partial_trace(rho[Bipartition.ALICE_ROB], (a,)),
                               method="lapack"),
        ro: von_neumann_entropy(partial_trace(rho[Bipartition.ROB_ANTIROB], (ro,)),
                                method="lapack"),
        ab: von_neumann_entropy(partial_trace(rho[Bipartition.ROB_ANTIROB], (ab,)),
                                method="lapack"),
    }
    ent = {bip: von_neumann_entropy(m, method="lapack") for bip, m in rho.items()}
    out = {
        "I_AR": singles[a] + singles[ro] - ent[Bipartition.ALICE_ROB],
        "I_ARbar": singles[a] + singles[ab] - ent[Bipartition.ALICE_ANTIROB],
        "I_RRbar": singles[ro] + singles[ab] - ent[Bipartition.ROB_ANTIROB],
    }
    for key, bip, transposed in (("N_AR", Bipartition.ALICE_ROB, ro),
                                 ("N_ARbar", Bipartition.ALICE_ANTIROB, ab),
                                 ("N_RRbar", Bipartition.ROB_ANTIROB, ab)):
        eta = partial_transpose(rho[bip], transposed)
        out[key] = negativity_from_pt_eigenvalues(
            sym_eigenvalues(eta.entries, method="lapack"))
    return out


def hardcore_constructive_measures(r, hc: HardcoreConfig) -> dict:
    """Measures from the capped tripartite state alone."""
    psi = hardcore_tripartite_state(r, hc)
    a, ro, ab = Subsystem.ALICE, Subsystem.ROB, Subsystem.ANTIROB
    out = {}
    rho = {
        Bipartition.ALICE_ROB: reduced_density_matrix(psi, (a, ro)),
        Bipartition.ALICE_ANTIROB: reduced_density_matrix(psi, (a, ab)),
        Bipartition.ROB_ANTIROB: reduced_density_matrix(psi, (ro, ab)),
    }
    singles = {s: von_neumann_entropy(reduced_density_matrix(psi, (s,)),
                                      method="lapack")
               for s in (a, ro, ab)}
    ent = {bip: von_neumann_entropy(m, method="lapack") for bip, m in rho.items()}
    out["I_AR"] = singles[a] + singles[ro] - ent[Bipartition.ALICE_ROB]
    out["I_ARbar"] = singles[a] + singles[ab] - ent[Bipartition.ALICE_ANTIROB]
    out["I_RRbar"] = singles[ro] + singles[ab] - ent[Bipartition.ROB_ANTIROB]
    for key, bip, transposed in (("N_AR", Bipartition.ALICE_ROB, ro),
                                 ("N_ARbar", Bipartition.ALICE_ANTIROB, ab),
                                 ("N_RRbar", Bipartition.ROB_ANTIROB, ab)):
        eta = partial_transpose(rho[bip], transposed)
        out[key] = negativity_from_pt_eigenvalues(
            sym_eigenvalues(eta.entries, method="lapack"))
    return out


def hardcore_report(r, hc: HardcoreConfig, oracle: bool = True) -> CorrelationReport:
    """Correlation report for the capped-occupation mode."""
    rv = _r_value(r)
    dv, do = truncation_deficits(rv, hc.cap)
    deficit = 0.0 if hc.mode == "renormalized" else (dv + do) / 2.0
    closed = hardcore_closed_measures(rv, hc)
    constructive = hardcore_constructive_measures(rv, hc) if oracle else None
    return _report_from_routes(rv, closed, constructive, deficit, ORACLE_TOL)
