"""Command-line front end.

Subcommands: build, decompose, simulate, estimate, noise-curve, bounds,
verify. JSON is the structured output; curve and histogram data go out as
CSV. Exit codes: 0 success, 1 runtime error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import arith, circuits, noise, pricing, resources, simulator, transpile
from .transpile import LoweringStrategy

_STRATEGIES = {
    "qutrit": LoweringStrategy.QUTRIT,
    "cliffordt": LoweringStrategy.CLIFFORD_T_FUNCTIONAL,
    "baseline": LoweringStrategy.SELINGER_COST,
}


@dataclass(frozen=True)
class Config:
    """Defaults loadable from a JSON file via --config."""

    p1: float = 1e-4
    p2: float = 1e-2
    t1a: float = 100.0
    t1b: float = 30.0
    tau: float = 0.0
    format: str = "json"
    seed: int = 0
    max_state_dim: int = 2 ** 22  # guard for the simulate subcommand

    def __post_init__(self) -> None:
        if self.max_state_dim < 1:
            raise ValueError("size guards must be positive")
        if self.format not in ("json", "csv"):
            raise ValueError("format must be json or csv")

    @staticmethod
    def load(path: str | None) -> "Config":
        if path is None:
            return Config()
        data = json.loads(Path(path).read_text())
        return Config(**data)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_build(args: argparse.Namespace, config: Config) -> int:
    if args.op == "adder":
        if args.n is None:
            raise ValueError("build --op adder requires --n")
        circuit, layout = arith.build_adder(args.n)
    else:
        na = args.na if args.na is not None else args.n
        nb = args.nb if args.nb is not None else args.n
        if na is None or nb is None:
            raise ValueError("build --op multiplier requires --na and --nb (or --n)")
        circuit, layout = arith.build_multiplier(na, nb)
    _write(circuits.to_json(circuit) + "\n", args.out)
    return 0


def _cmd_decompose(args: argparse.Namespace, config: Config) -> int:
    circuit = circuits.from_json(Path(args.infile).read_text())
    lowered = transpile.lower_toffolis(circuit, _STRATEGIES[args.strategy])
    _write(circuits.to_json(lowered) + "\n", args.out)
    return 0


def _cmd_simulate(args: argparse.Namespace, config: Config) -> int:
    circuit = circuits.from_json(Path(args.infile).read_text())
    size = int(np.prod(circuit.dims))
    if size > config.max_state_dim:
        raise ValueError(f"state dimension {size} exceeds the guard {config.max_state_dim}")
    state = simulator.simulate(circuit, args.input)
    if args.shots is None:
        _write(simulator.state_to_json(state) + "\n", args.out)
    else:
        seed = args.seed if args.seed is not None else config.seed
        hist = simulator.measure_all(state, args.shots, seed)
        _write(simulator.histogram_to_csv(hist), args.out)
    return 0


def _cmd_estimate(args: argparse.Namespace, config: Config) -> int:
    approx = resources.ApproxParams(k=args.k, M=args.M, d=args.d, z=args.z)
    report = resources.estimate_operation(
        args.op, args.n, args.p, approx, _STRATEGIES[args.strategy]
    )
    payload = {"op": args.op, "strategy": args.strategy, **report.to_dict()}
    fmt = args.format or config.format
    if fmt == "json":
        _write(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        keys = [k for k in payload if k != "notes"]
        lines = [",".join(keys), ",".join(str(payload[k]) for k in keys)]
        _write("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_noise_curve(args: argparse.Namespace, config: Config) -> int:
    params = noise.NoiseParams(
        p1=args.p1 if args.p1 is not None else config.p1,
        p2=args.p2 if args.p2 is not None else config.p2,
        T1_level1=args.t1a if args.t1a is not None else config.t1a,
        T1_level2=args.t1b if args.t1b is not None else config.t1b,
        tau_gate=args.tau if args.tau is not None else config.tau,
    )
    counts = range(1, args.max_toffoli + 1)
    conventional = dict(noise.success_curve(LoweringStrategy.SELINGER_COST, counts, params))
    qutrit = dict(noise.success_curve(LoweringStrategy.QUTRIT, counts, params))
    lines = []
    if args.strategy == "both":
        lines.append("toffoli_count,p_success_conventional,p_success_qutrit")
        for k in counts:
            lines.append(f"{k},{conventional[k]:.10g},{qutrit[k]:.10g}")
    else:
        series = qutrit if args.strategy == "qutrit" else conventional
        lines.append(f"toffoli_count,p_success_{args.strategy}")
        for k in counts:
            lines.append(f"{k},{series[k]:.10g}")
    quoted = noise.quoted_error_comparison()
    lines.append(
        f"# quoted error at {quoted['toffoli_count']} Toffolis: "
        f"qutrit {quoted['qutrit_error_percent']}%, "
        f"conventional {quoted['conventional_error_percent']}%"
    )
    lines.append(f"# {quoted['footnote']}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_bounds(args: argparse.Namespace, config: Config) -> int:
    b_l, b_u = args.range
    setup = pricing.PricingSetup(
        d=args.d, T=args.T, n=args.n, w=args.w, beta=args.beta, B_l=b_l, B_u=b_u
    )
    payload = {
        "trunc_error_bound": pricing.trunc_error_bound(setup),
        "disc_error": pricing.disc_error(setup),
    }
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _verify_checks() -> list[tuple[str, bool]]:
    checks: list[tuple[str, bool]] = []

    base = circuits.Circuit((circuits.WireSpec(2),) * 3, (circuits.toffoli(0, 1, 2),))
    ideal = simulator.circuit_unitary(base)
    for name, strategy in (("qutrit", LoweringStrategy.QUTRIT),
                           ("cliffordt", LoweringStrategy.CLIFFORD_T_FUNCTIONAL)):
        lowered = transpile.lower_toffolis(base, strategy)
        restricted = simulator.qubit_subspace_unitary(lowered)
        checks.append((f"toffoli-equivalence-{name}", bool(np.allclose(restricted, ideal, atol=1e-10))))

    for n in (2, 3, 4):
        circuit, layout = arith.build_adder(n)
        ok = _adder_exhaustive(circuit, layout, n)
        checks.append((f"adder-{n}bit-exhaustive", ok))
    circuit, layout = arith.build_adder(3)
    lowered_adder = transpile.lower_toffolis(circuit, LoweringStrategy.QUTRIT)
    checks.append(("adder-3bit-qutrit-exhaustive", _adder_exhaustive(lowered_adder, layout, 3)))

    circuit, layout = arith.build_multiplier(3, 2)
    checks.append(("multiplier-3x2-exhaustive", _multiplier_exhaustive(circuit, layout, 3, 2)))
    lowered_mul = transpile.lower_toffolis(circuit, LoweringStrategy.QUTRIT)
    checks.append(("multiplier-3x2-qutrit-exhaustive",
                   _multiplier_exhaustive(lowered_mul, layout, 3, 2)))

    demo, demo_layout = arith.build_demo_multiplier()
    for name, c in (("demo-multiplier-5x3", demo),
                    ("demo-multiplier-5x3-qutrit",
                     transpile.lower_toffolis(demo, LoweringStrategy.QUTRIT))):
        label = simulator.dominant_basis_label(simulator.simulate(c, "0" * 13))
        checks.append((name, arith.register_value(label, demo_layout.result_wires) == 15))
    return checks


def _adder_exhaustive(circuit: circuits.Circuit, layout: arith.RegisterLayout, n: int) -> bool:
    for a in range(2 ** n):
        for b in range(2 ** n):
            label = arith.operand_label(circuit, layout, a, b)
            out = simulator.dominant_basis_label(simulator.simulate(circuit, label))
            total = a + b
            if arith.register_value(out, layout.result_wires) != total % 2 ** n:
                return False
            if int(out[layout.carry_wire]) != total >> n:
                return False
            if arith.register_value(out, layout.a_wires) != a:
                return False
            if any(out[w] != "0" for w in layout.ancilla_wires):
                return False
    return True


def _multiplier_exhaustive(circuit: circuits.Circuit, layout: arith.RegisterLayout,
                           na: int, nb: int) -> bool:
    for a in range(2 ** na):
        for b in range(2 ** nb):
            label = arith.operand_label(circuit, layout, a, b)
            out = simulator.dominant_basis_label(simulator.simulate(circuit, label))
            if arith.register_value(out, layout.result_wires) != a * b:
                return False
            if any(out[w] != "0" for w in layout.ancilla_wires):
                return False
    return True


def _cmd_verify(args: argparse.Namespace, config: Config) -> int:
    failures = 0
    for name, ok in _verify_checks():
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triarc", description=__doc__)
    parser.add_argument("--config", help="JSON config file with defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="generate an arithmetic circuit")
    p.add_argument("--op", choices=["adder", "multiplier"], required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--na", type=int, default=None)
    p.add_argument("--nb", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("decompose", help="lower every Toffoli gate")
    p.add_argument("--strategy", choices=["qutrit", "cliffordt"], required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("simulate", help="run a circuit on a basis-state label")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--input", required=True, help="basis label, one digit per wire")
    p.add_argument("--shots", type=int, default=None, help="sample a histogram instead of dumping the state")
    p.add_argument("--seed", type=int, default=None, help="sampling seed (default 0)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("estimate", help="closed-form resource estimate")
    p.add_argument("--op", choices=list(resources.OPERATIONS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--z", type=int, default=1)
    p.add_argument("--strategy", choices=["qutrit", "baseline"], default="baseline")
    p.add_argument("--format", choices=["json", "csv"], default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("noise-curve", help="success probability vs Toffoli count")
    p.add_argument("--seed", type=int, default=None, help="accepted for uniformity; the curve is deterministic")
    p.add_argument("--strategy", choices=["qutrit", "conventional", "both"], default="both")
    p.add_argument("--max-toffoli", type=int, default=50)
    p.add_argument("--p1", type=float, default=None)
    p.add_argument("--p2", type=float, default=None)
    p.add_argument("--t1a", type=float, default=None)
    p.add_argument("--t1b", type=float, default=None)
    p.add_argument("--tau", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_noise_curve)

    p = sub.add_parser("bounds", help="pricing error bounds")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--T", type=int, default=1)
    p.add_argument("--w", type=float, default=5.0)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--range", type=float, nargs=2, default=(0.0, 0.0), metavar=("B_L", "B_U"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="run the built-in equivalence suite")
    p.add_argument("--seed", type=int, default=None, help="accepted for uniformity; the suite is deterministic")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        config = Config.load(args.config)
        return args.func(args, config)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
