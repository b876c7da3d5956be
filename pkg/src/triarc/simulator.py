"""Dense state-vector and density-matrix simulation for mixed-radix circuits.

Amplitudes are indexed in mixed radix with wire 0 as the most significant
digit, so the basis label "120" on dims (2, 3, 2) is index 1*6 + 2*2 + 0.
All operations are pure: they return new states and never mutate inputs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import pi, sqrt
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .circuits import (
    Circuit,
    GateInstance,
    GateKind,
    WireSpec,
    validate_gate,
)

if TYPE_CHECKING:
    from .noise import KrausChannel

UNITARY_DIM_GUARD = 2 ** 12      # largest full-space dimension for unitary extraction
DENSITY_WIRE_GUARD = 6           # largest wire count for density-matrix evolution

_T_PHASE = np.exp(1j * pi / 4)
_QUBIT_MATRICES = {
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) / sqrt(2),
    GateKind.T: np.diag([1, _T_PHASE]),
    GateKind.TDG: np.diag([1, np.conj(_T_PHASE)]),
    GateKind.S: np.diag([1, 1j]),
    GateKind.SDG: np.diag([1, -1j]),
    GateKind.Z: np.diag([1, -1]),
    GateKind.TOFFOLI: np.array([[0, 1], [1, 0]], dtype=complex),
}
# increment mod 3: columns |0>,|1>,|2> map to |1>,|2>,|0>
_XPLUS1 = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)


def kind_matrix(kind: GateKind, dim: int) -> np.ndarray:
    """Target unitary of a gate kind on a wire of the given dimension.

    Qubit kinds embed on the {|0>,|1>} subspace of a qutrit wire, leaving
    |2> untouched.
    """
    if kind is GateKind.XPLUS1:
        return _XPLUS1.copy()
    if kind is GateKind.XMINUS1:
        return _XPLUS1.conj().T.copy()
    if kind is GateKind.MEASURE:
        raise ValueError("MEASURE has no unitary action")
    u2 = _QUBIT_MATRICES[kind]
    if dim == 2:
        return u2.copy()
    u3 = np.eye(3, dtype=complex)
    u3[:2, :2] = u2
    return u3


# ---------------------------------------------------------------------------
# labels and state values
# ---------------------------------------------------------------------------

def parse_label(dims: Sequence[int], label: str | Sequence[int]) -> tuple[int, ...]:
    digits = tuple(int(ch) for ch in label)
    if len(digits) != len(dims):
        raise ValueError(f"label length {len(digits)} != wire count {len(dims)}")
    for w, (digit, dim) in enumerate(zip(digits, dims)):
        if not (0 <= digit < dim):
            raise ValueError(f"digit {digit} invalid on wire {w} of dimension {dim}")
    return digits


def label_to_index(dims: Sequence[int], label: str | Sequence[int]) -> int:
    idx = 0
    for digit, dim in zip(parse_label(dims, label), dims):
        idx = idx * dim + digit
    return idx


def index_to_label(dims: Sequence[int], index: int) -> str:
    digits = []
    for dim in reversed(dims):
        digits.append(index % dim)
        index //= dim
    return "".join(str(d) for d in reversed(digits))


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit-norm complex amplitudes over the mixed-radix basis."""

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        size = int(np.prod(self.dims))
        if self.amplitudes.shape != (size,):
            raise ValueError(f"amplitude vector must have length {size}")
        norm = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"state norm {norm} deviates from 1 beyond 1e-10")


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, trace-one, positive-semidefinite matrix over the basis."""

    dims: tuple[int, ...]
    entries: np.ndarray

    def __post_init__(self) -> None:
        size = int(np.prod(self.dims))
        if self.entries.shape != (size, size):
            raise ValueError(f"density matrix must be {size}x{size}")
        if not np.allclose(self.entries, self.entries.conj().T, atol=1e-10):
            raise ValueError("density matrix must be Hermitian within 1e-10")
        trace = complex(np.trace(self.entries))
        if abs(trace - 1.0) > 1e-10:
            raise ValueError(f"density matrix trace {trace} deviates from 1")
        if float(np.linalg.eigvalsh(self.entries).min()) < -1e-8:
            raise ValueError("density matrix has an eigenvalue below -1e-8")


@dataclass(frozen=True)
class Histogram:
    """Shot counts keyed by basis-state label."""

    counts: dict[str, int]
    shots: int

    def __post_init__(self) -> None:
        if sum(self.counts.values()) != self.shots:
            raise ValueError("histogram counts must sum to the shot total")


def basis_state(dims: Sequence[int], label: str | Sequence[int]) -> StateVector:
    dims = tuple(dims)
    amps = np.zeros(int(np.prod(dims)), dtype=complex)
    amps[label_to_index(dims, label)] = 1.0
    return StateVector(dims, amps)


def basis_density(dims: Sequence[int], label: str | Sequence[int]) -> DensityMatrix:
    return density_from_state(basis_state(dims, label))


def density_from_state(state: StateVector) -> DensityMatrix:
    return DensityMatrix(state.dims, np.outer(state.amplitudes, state.amplitudes.conj()))


def dominant_basis_label(state: StateVector, atol: float = 1e-12) -> str:
    """Label of the single basis state carrying all probability weight."""
    probs = np.abs(state.amplitudes) ** 2
    idx = int(np.argmax(probs))
    if abs(probs[idx] - 1.0) > atol:
        raise ValueError(f"state is not a basis state (max probability {probs[idx]})")
    return index_to_label(state.dims, idx)


# ---------------------------------------------------------------------------
# gate application
# ---------------------------------------------------------------------------

def _wire_specs(dims: Sequence[int]) -> tuple[WireSpec, ...]:
    return tuple(WireSpec(d) for d in dims)


def _apply_inplace(tensor: np.ndarray, gate: GateInstance, dims: Sequence[int]) -> None:
    """Apply ``gate`` to a dims-shaped amplitude tensor, mutating it.

    The target update is written as per-level slice combinations, skipping
    zero matrix entries and identity rows; the gate set's matrices are
    small and mostly sparse, so this beats a generic tensor contraction.
    """
    target = gate.targets[0]
    dim = dims[target]
    matrix = kind_matrix(gate.kind, dim)
    base: list[slice | int] = [slice(None)] * len(dims)
    for c in gate.controls:
        base[c.wire] = c.value

    def sel(level: int) -> tuple:
        idx = list(base)
        idx[target] = level
        return tuple(idx)

    rows = [
        r for r in range(dim)
        if not (matrix[r, r] == 1 and all(matrix[r, c] == 0 for c in range(dim) if c != r))
    ]
    cols = {c for r in rows for c in range(dim) if matrix[r, c] != 0}
    olds = {c: tensor[sel(c)].copy() for c in cols}
    for r in rows:
        acc = None
        for c in range(dim):
            coeff = matrix[r, c]
            if coeff == 0:
                continue
            term = olds[c] if coeff == 1 else coeff * olds[c]
            acc = term if acc is None else acc + term
        tensor[sel(r)] = acc


def apply_gate(state: StateVector, gate: GateInstance) -> StateVector:
    """New state with the gate's unitary applied on its targets, conditioned
    on every control wire holding its activation value."""
    validate_gate(gate, _wire_specs(state.dims))
    if gate.kind is GateKind.MEASURE:
        raise ValueError("MEASURE has no unitary action; use measure_all")
    tensor = state.amplitudes.reshape(state.dims).copy()
    _apply_inplace(tensor, gate, state.dims)
    return StateVector(state.dims, tensor.reshape(-1))


def simulate(circuit: Circuit, input: str | Sequence[int]) -> StateVector:
    """Run all gates on the given basis-state label. MEASURE gates are
    skipped; sampling lives in measure_all."""
    dims = circuit.dims
    tensor = basis_state(dims, input).amplitudes.reshape(dims)
    for gate in circuit.gates:
        if gate.kind is GateKind.MEASURE:
            continue
        _apply_inplace(tensor, gate, dims)
    return StateVector(dims, tensor.reshape(-1))


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Full unitary, built by simulating each basis column."""
    dims = circuit.dims
    size = int(np.prod(dims))
    if size > UNITARY_DIM_GUARD:
        raise ValueError(f"unitary extraction guarded at dimension {UNITARY_DIM_GUARD}")
    if any(g.kind is GateKind.MEASURE for g in circuit.gates):
        raise ValueError("circuit_unitary requires an all-gate circuit")
    matrix = np.zeros((size, size), dtype=complex)
    for col in range(size):
        matrix[:, col] = simulate(circuit, index_to_label(dims, col)).amplitudes
    return matrix


def qubit_subspace_indices(dims: Sequence[int]) -> np.ndarray:
    """Indices of basis states whose digits are all 0 or 1."""
    dims = tuple(dims)
    idx = np.array([0])
    for dim in dims:
        idx = (idx[:, None] * dim + np.array([0, 1])[None, :]).reshape(-1)
    return idx


def qubit_subspace_unitary(circuit: Circuit) -> np.ndarray:
    """Unitary restricted to the qubit subspace: simulate each all-binary
    basis column and keep the amplitudes on all-binary rows.

    Stays within the extraction guard even when promoted qutrit wires push
    the full space beyond it.
    """
    dims = circuit.dims
    sub = qubit_subspace_indices(dims)
    size = len(sub)
    if size > UNITARY_DIM_GUARD:
        raise ValueError(f"subspace extraction guarded at dimension {UNITARY_DIM_GUARD}")
    matrix = np.zeros((size, size), dtype=complex)
    for col in range(size):
        label = index_to_label(dims, int(sub[col]))
        matrix[:, col] = simulate(circuit, label).amplitudes[sub]
    return matrix


# ---------------------------------------------------------------------------
# measurement sampling
# ---------------------------------------------------------------------------

def measure_all(state: StateVector, shots: int, seed: int) -> Histogram:
    """Sample basis labels with probability |amplitude|^2; deterministic
    under a fixed seed."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    rng = np.random.default_rng(seed)
    probs = np.abs(state.amplitudes) ** 2
    probs = probs / probs.sum()
    outcomes = rng.choice(len(probs), size=shots, p=probs)
    values, counts = np.unique(outcomes, return_counts=True)
    labels = {
        index_to_label(state.dims, int(v)): int(c) for v, c in zip(values, counts)
    }
    return Histogram(labels, shots)


def histogram_to_csv(hist: Histogram) -> str:
    lines = ["label,count"]
    lines += [f"{label},{hist.counts[label]}" for label in sorted(hist.counts)]
    return "\n".join(lines) + "\n"


def state_to_json(state: StateVector) -> str:
    return json.dumps([[float(a.real), float(a.imag)] for a in state.amplitudes])


# ---------------------------------------------------------------------------
# density-matrix evolution
# ---------------------------------------------------------------------------

def _embed_operator(op: np.ndarray, wires: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Embed an operator acting on ``wires`` (in that order) into the full space."""
    n = len(dims)
    rest = [w for w in range(n) if w not in wires]
    order = list(wires) + rest
    rest_size = int(np.prod([dims[w] for w in rest])) if rest else 1
    full = np.kron(op, np.eye(rest_size, dtype=complex))
    perm_dims = [dims[w] for w in order]
    tensor = full.reshape(perm_dims + perm_dims)
    inv = [order.index(w) for w in range(n)]
    tensor = tensor.transpose(inv + [n + p for p in inv])
    size = int(np.prod(dims))
    return tensor.reshape(size, size)


def gate_local_unitary(gate: GateInstance, dims: Sequence[int]) -> tuple[tuple[int, ...], np.ndarray]:
    """(wires, unitary) of a gate over only the wires it touches."""
    wires = gate.wires
    local_dims = [dims[w] for w in wires]
    size = int(np.prod(local_dims))
    target_dim = dims[gate.targets[0]]
    matrix = np.eye(size, dtype=complex)
    # controls come first in `wires`, the target is last (stride 1)
    offset = 0
    for c, dim in zip(gate.controls, local_dims):
        offset = offset * dim + c.value
    offset *= target_dim
    block = slice(offset, offset + target_dim)
    matrix[block, block] = kind_matrix(gate.kind, target_dim)
    return wires, matrix


def evolve_density(
    rho: DensityMatrix,
    step: "GateInstance | KrausChannel",
    wires: Sequence[int] | None = None,
) -> DensityMatrix:
    """Evolve by a unitary gate or a Kraus channel on the given wires.

    Round-off is symmetrized away so Hermiticity is exact on the output.
    """
    if len(rho.dims) > DENSITY_WIRE_GUARD:
        raise ValueError(f"density evolution guarded at {DENSITY_WIRE_GUARD} wires")
    if isinstance(step, GateInstance):
        validate_gate(step, _wire_specs(rho.dims))
        gate_wires, local = gate_local_unitary(step, rho.dims)
        full = _embed_operator(local, gate_wires, rho.dims)
        out = full @ rho.entries @ full.conj().T
    else:
        if wires is None:
            raise ValueError("a Kraus channel needs explicit wires")
        local_dims = tuple(rho.dims[w] for w in wires)
        if tuple(step.dims) != local_dims:
            raise ValueError(f"channel dims {step.dims} do not match wires {local_dims}")
        size = int(np.prod(local_dims))
        completeness = sum(k.conj().T @ k for k in step.operators)
        if not np.allclose(completeness, np.eye(size), atol=1e-10):
            raise ValueError("channel is not trace-preserving within 1e-10")
        out = np.zeros_like(rho.entries)
        for k in step.operators:
            full = _embed_operator(np.asarray(k, dtype=complex), wires, rho.dims)
            out += full @ rho.entries @ full.conj().T
    out = (out + out.conj().T) / 2
    return DensityMatrix(rho.dims, out)
