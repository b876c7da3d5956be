"""Adder and multiplier generators against classical arithmetic oracles."""
import numpy as np
import pytest

from triarc import arith as A
from triarc import circuits as C
from triarc import simulator as S
from triarc import transpile as T
from triarc.circuits import GateKind
from triarc.transpile import LoweringStrategy


def run_adder(circuit, layout, a, b):
    label = A.operand_label(circuit, layout, a, b)
    out = S.dominant_basis_label(S.simulate(circuit, label))
    return (
        A.register_value(out, layout.a_wires),
        A.register_value(out, layout.result_wires),
        int(out[layout.carry_wire]),
        [out[w] for w in layout.ancilla_wires],
    )


def run_multiplier(circuit, layout, a, b):
    label = A.operand_label(circuit, layout, a, b)
    out = S.dominant_basis_label(S.simulate(circuit, label))
    return (
        A.register_value(out, layout.result_wires),
        [out[w] for w in layout.ancilla_wires],
    )


# --- adder ------------------------------------------------------------------

def test_adder_rejects_n_zero():
    with pytest.raises(ValueError):
        A.build_adder(0)


def test_adder_uses_only_x_cx_toffoli():
    circuit, _ = A.build_adder(4)
    assert all(g.kind in (GateKind.X, GateKind.TOFFOLI) for g in circuit.gates)


def test_adder_examples_n4():
    circuit, layout = A.build_adder(4)
    a_out, s, carry, anc = run_adder(circuit, layout, 3, 5)
    assert (a_out, s, carry) == (3, 8, 0) and anc == ["0"]
    _, s, carry, _ = run_adder(circuit, layout, 0, 0)
    assert (s, carry) == (0, 0)
    _, s, carry, _ = run_adder(circuit, layout, 15, 1)
    assert (s, carry) == (0, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_adder_exhaustive(n):
    circuit, layout = A.build_adder(n)
    for a in range(2 ** n):
        for b in range(2 ** n):
            a_out, s, carry, anc = run_adder(circuit, layout, a, b)
            assert a_out == a
            assert s == (a + b) % 2 ** n
            assert carry == (a + b) >> n
            assert anc == ["0"]


@pytest.mark.parametrize("n", [2, 3])
def test_adder_qutrit_lowered_exhaustive(n):
    circuit, layout = A.build_adder(n)
    lowered = T.lower_toffolis(circuit, LoweringStrategy.QUTRIT)
    for a in range(2 ** n):
        for b in range(2 ** n):
            a_out, s, carry, anc = run_adder(lowered, layout, a, b)
            assert (a_out, s, carry) == (a, (a + b) % 2 ** n, (a + b) >> n)
            assert anc == ["0"]


def test_adder_spot_checks_n8():
    # sizes beyond the exhaustive guard still build and add correctly
    circuit, layout = A.build_adder(8)
    rng = np.random.default_rng(5)
    for a, b in rng.integers(0, 256, size=(5, 2)):
        a_out, s, carry, anc = run_adder(circuit, layout, int(a), int(b))
        assert (a_out, s, carry) == (a, (a + b) % 256, (a + b) >> 8)
        assert anc == ["0"]


# --- multiplier ---------------------------------------------------------------

def test_multiplier_rejects_bad_sizes():
    with pytest.raises(ValueError):
        A.build_multiplier(0, 2)
    with pytest.raises(ValueError):
        A.build_multiplier(4, 4)  # beyond the simulation guard


def test_multiplier_3x2_headline_case():
    circuit, layout = A.build_multiplier(3, 2)
    product, anc = run_multiplier(circuit, layout, 5, 3)
    assert product == 15
    assert all(d == "0" for d in anc)


def test_multiplier_b_zero():
    circuit, layout = A.build_multiplier(3, 2)
    for a in range(8):
        product, _ = run_multiplier(circuit, layout, a, 0)
        assert product == 0


def test_multiplier_exhaustive_3x2():
    circuit, layout = A.build_multiplier(3, 2)
    for a in range(8):
        for b in range(4):
            product, anc = run_multiplier(circuit, layout, a, b)
            assert product == a * b
            assert all(d == "0" for d in anc)


def test_multiplier_layout_disjoint_and_covering():
    circuit, layout = A.build_multiplier(3, 2)
    groups = [layout.a_wires, layout.b_wires, layout.ancilla_wires, layout.result_wires]
    flat = [w for group in groups for w in group]
    assert len(flat) == len(set(flat)) == len(circuit.wires)


def test_multiplier_2x2_exhaustive():
    circuit, layout = A.build_multiplier(2, 2)
    for a in range(4):
        for b in range(4):
            product, anc = run_multiplier(circuit, layout, a, b)
            assert product == a * b
            assert all(d == "0" for d in anc)


# --- showcase 5x3 circuit ------------------------------------------------------

def test_demo_multiplier_structure():
    circuit, layout = A.build_demo_multiplier()
    assert len(circuit.wires) == 13
    assert C.gate_count(circuit, GateKind.TOFFOLI) == 6


def test_demo_multiplier_yields_15():
    circuit, layout = A.build_demo_multiplier()
    state = S.simulate(circuit, "0" * 13)
    label = S.dominant_basis_label(state, atol=1e-12)
    assert A.register_value(label, layout.result_wires) == 15
    assert A.register_value(label, layout.a_wires) == 5
    assert A.register_value(label, layout.b_wires) == 3


def test_demo_multiplier_lowered_yields_15():
    circuit, layout = A.build_demo_multiplier()
    lowered = T.lower_toffolis(circuit, LoweringStrategy.QUTRIT)
    label = S.dominant_basis_label(S.simulate(lowered, "0" * 13), atol=1e-12)
    assert A.register_value(label, layout.result_wires) == 15
