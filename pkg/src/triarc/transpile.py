"""Toffoli-lowering passes and their per-Toffoli cost profiles.

Two functional lowerings are provided:

- QUTRIT: three generalized ternary CNOTs through a temporarily-ternary
  wire. The second control is promoted to dimension 3, climbs to |2> when
  both controls are |1>, triggers the target flip, and is restored, so no
  T gates and no ancilla wires are needed.
- CLIFFORD_T_FUNCTIONAL: the standard 7-T Clifford+T network, used when a
  qubit-only gate-level circuit is wanted.

SELINGER_COST is an accounting-only profile for the T-depth-1 construction
that spends four ancilla qubits; it has no gate-level form here and cannot
be used to lower circuits.
"""
from __future__ import annotations

from enum import Enum
from typing import Sequence

from .circuits import (
    Circuit,
    CostProfile,
    GateInstance,
    GateKind,
    WireSpec,
    controlled,
    cx,
    depth,
    h,
    t,
    t_metrics,
    tdg,
    xminus1,
    xplus1,
)


class LoweringStrategy(Enum):
    QUTRIT = "qutrit"
    CLIFFORD_T_FUNCTIONAL = "cliffordt"
    SELINGER_COST = "selinger-cost"


FUNCTIONAL_STRATEGIES = (LoweringStrategy.QUTRIT, LoweringStrategy.CLIFFORD_T_FUNCTIONAL)


def decompose_toffoli_qutrit(
    control_a: int,
    control_b: int,
    target: int,
    wires: Sequence[WireSpec] | None = None,
) -> list[GateInstance]:
    """Three-gate qutrit lowering of a Toffoli.

    |1>-controlled increment lifts ``control_b`` to |2> exactly when both
    controls were |1>; a |2>-controlled X then flips the target; the final
    |1>-controlled decrement reverses the first gate and restores the
    controls. ``wires``, when given, lets the dimension precondition fail
    fast instead of at circuit construction.
    """
    if wires is not None and wires[control_b].dimension != 3:
        raise ValueError(f"wire {control_b} must be a qutrit to host the lowering")
    return [
        controlled(xplus1(control_b), control_a, 1),
        cx(control_b, target, value=2),
        controlled(xminus1(control_b), control_a, 1),
    ]


def decompose_toffoli_clifford_t(control_a: int, control_b: int, target: int) -> list[GateInstance]:
    """Standard 7-T Clifford+T Toffoli network (15 gates)."""
    a, b, tg = control_a, control_b, target
    return [
        h(tg),
        cx(b, tg),
        tdg(tg),
        cx(a, tg),
        t(tg),
        cx(b, tg),
        tdg(tg),
        cx(a, tg),
        t(b),
        t(tg),
        h(tg),
        cx(a, b),
        t(a),
        tdg(b),
        cx(a, b),
    ]


def lower_toffolis(circuit: Circuit, strategy: LoweringStrategy) -> Circuit:
    """Replace every TOFFOLI in place with its functional lowering.

    The qutrit strategy promotes each Toffoli's second control wire to
    dimension 3 (idempotent when wires are shared); other gates and the
    circuit's action on the qubit subspace are untouched.
    """
    if strategy is LoweringStrategy.SELINGER_COST:
        raise ValueError("SELINGER_COST is accounting-only and cannot lower circuits")
    new_wires = list(circuit.wires)
    if strategy is LoweringStrategy.QUTRIT:
        for gate in circuit.gates:
            if gate.kind is GateKind.TOFFOLI:
                new_wires[gate.controls[1].wire] = WireSpec(3)
    new_gates: list[GateInstance] = []
    for gate in circuit.gates:
        if gate.kind is not GateKind.TOFFOLI:
            new_gates.append(gate)
            continue
        a, b = (c.wire for c in gate.controls)
        tg = gate.targets[0]
        if strategy is LoweringStrategy.QUTRIT:
            new_gates.extend(decompose_toffoli_qutrit(a, b, tg, new_wires))
        else:
            new_gates.extend(decompose_toffoli_clifford_t(a, b, tg))
    return Circuit(tuple(new_wires), tuple(new_gates))


def cost_profile(strategy: LoweringStrategy) -> CostProfile:
    """Per-Toffoli resource profile of a strategy.

    The baseline profile reports the quoted T-depth-1 figures: depth 7,
    four ancilla, headline gate count 25 alongside the 7 + 16 component
    counts. The functional Clifford+T profile is measured off the actual
    15-gate network.
    """
    if strategy is LoweringStrategy.QUTRIT:
        return CostProfile(
            one_qubit_gates=0,
            two_qubit_gates=0,
            two_qutrit_gates=3,
            depth_per_toffoli=3,
            t_depth_per_toffoli=0,
            ancilla_wires=0,
            table_gate_count=3,
        )
    if strategy is LoweringStrategy.SELINGER_COST:
        return CostProfile(
            one_qubit_gates=7,
            two_qubit_gates=16,
            two_qutrit_gates=0,
            depth_per_toffoli=7,
            t_depth_per_toffoli=1,
            ancilla_wires=4,
            table_gate_count=25,
        )
    network = Circuit((WireSpec(2),) * 3, tuple(decompose_toffoli_clifford_t(0, 1, 2)))
    one_qubit = sum(1 for g in network.gates if len(g.wires) == 1)
    two_qubit = sum(1 for g in network.gates if len(g.wires) == 2)
    _, t_depth = t_metrics(network)
    return CostProfile(
        one_qubit_gates=one_qubit,
        two_qubit_gates=two_qubit,
        two_qutrit_gates=0,
        depth_per_toffoli=depth(network),
        t_depth_per_toffoli=t_depth,
        ancilla_wires=0,
        table_gate_count=None,
    )
