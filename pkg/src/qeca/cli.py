"""Command-line surface: scans, verdicts, synthesis, simulation, proofs, diagrams.

Exit codes: 0 success, 1 negative verdict (irreversible rule, failed
verification, no witness), 2 usage or input error, 3 capacity guard hit.
Errors go to stderr as single-line JSON records ``{"error": kind,
"message": text}`` so scripts can parse failures without scraping prose.

JSON output is deterministic: identical arguments and input files produce
byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .circuits import deserialize, render_ascii, serialize
from .errors import (CapacityError, CircuitParseError, NotReversibleError,
                     UnsupportedRuleError)
from .reversibility import (SCAN_N_MAX, SCAN_N_MIN, is_reversible_bruteforce,
                            proof_family_witness, scan_all_rules)
from .rules import BoundaryCondition, Configuration, step
from .simulate import StateVector, simulate_basis, simulate_statevector, verify_implementation
from .synthesis import synthesize


def _error_record(kind: str, message: str, **extra):
    record = {"error": kind, "message": message}
    record.update(extra)
    print(json.dumps(record), file=sys.stderr)


class _Parser(argparse.ArgumentParser):
    """argparse with machine-parsable usage errors."""

    def error(self, message):
        _error_record("usage", message)
        raise SystemExit(2)


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _bc(args) -> BoundaryCondition:
    return BoundaryCondition.parse(args.bc)


def _witness_strings(witness) -> list[str] | None:
    if witness is None:
        return None
    return [witness[0].to_string(), witness[1].to_string()]


def _cmd_scan(args) -> int:
    report = scan_all_rules(args.n_min, args.n_max)
    if args.format == "json":
        _write(_dumps(report.to_json_dict()), args.output)
    else:
        _write(report.to_text(), args.output)
    return 0


def _cmd_check(args) -> int:
    verdict = is_reversible_bruteforce(args.rule, args.n, _bc(args))
    witness = _witness_strings(verdict.witness)
    if args.format == "json":
        obj = {"rule": verdict.rule, "n": verdict.n, "bc": verdict.bc.value,
               "reversible": verdict.reversible, "witness": witness}
        _write(_dumps(obj), args.output)
    else:
        line = (f"rule={verdict.rule} n={verdict.n} bc={verdict.bc.value} "
                f"reversible={str(verdict.reversible).lower()}")
        if witness:
            line += f" witness={witness[0]},{witness[1]}"
        _write(line + "\n", args.output)
    return 0 if verdict.reversible else 1


def _cmd_synth(args) -> int:
    circuit = synthesize(args.rule, args.n, _bc(args))
    if args.format == "json":
        _write(serialize(circuit), args.output)
    else:
        _write(render_ascii(circuit), args.output)
    return 0


def _read_circuit(path: str):
    if path == "-":
        return deserialize(sys.stdin.read())
    with open(path, encoding="utf-8") as handle:
        return deserialize(handle.read())


def _cmd_sim(args) -> int:
    if (args.circuit is None) == (args.rule is None):
        _error_record("usage", "provide exactly one of --circuit or --rule")
        return 2
    if (args.bits is None) == (args.state is None):
        _error_record("usage", "provide exactly one of --bits or --state")
        return 2

    if args.bits is not None:
        bits = Configuration.from_string(args.bits)
        if args.rule is not None:
            # direct classical stepping: works for every rule, reversible or not
            result = step(bits, args.rule, _bc(args))
        else:
            result = simulate_basis(_read_circuit(args.circuit), bits)
        if args.format == "json":
            _write(_dumps({"bits": result.to_string()}), args.output)
        else:
            _write(result.to_string() + "\n", args.output)
        return 0

    with open(args.state, encoding="utf-8") as handle:
        state = StateVector.from_json(handle.read())
    if args.rule is not None:
        circuit = synthesize(args.rule, state.n, _bc(args))
    else:
        circuit = _read_circuit(args.circuit)
    result_state = simulate_statevector(circuit, state)
    _write(result_state.to_json(), args.output)
    return 0


def _cmd_prove(args) -> int:
    bc = _bc(args)
    try:
        witness = proof_family_witness(args.rule, bc, args.n)
        source = "closed-form"
    except UnsupportedRuleError:
        verdict = is_reversible_bruteforce(args.rule, args.n, bc)
        if verdict.reversible:
            _error_record("not-reversible",
                          f"rule {args.rule} is reversible at n={args.n} "
                          f"with {bc.value} boundary; no collision exists")
            return 1
        witness = verdict.witness
        source = "brute-force"
    successor = step(witness[0], args.rule, bc)
    if args.format == "json":
        obj = {"rule": args.rule, "n": args.n, "bc": bc.value,
               "witness": _witness_strings(witness),
               "maps_to": successor.to_string(), "source": source}
        _write(_dumps(obj), args.output)
    else:
        _write(f"rule={args.rule} n={args.n} bc={bc.value} "
               f"witness={witness[0].to_string()},{witness[1].to_string()} "
               f"maps_to={successor.to_string()} source={source}\n", args.output)
    return 0


def _cmd_verify(args) -> int:
    bc = _bc(args)
    implemented = verify_implementation(args.rule, args.n, bc)
    obj = {"rule": args.rule, "n": args.n, "bc": bc.value,
           "implemented": implemented, "states_checked": 1 << args.n}
    if args.format == "json":
        _write(_dumps(obj), args.output)
    else:
        _write(f"rule={args.rule} n={args.n} bc={bc.value} "
               f"implemented={str(implemented).lower()}\n", args.output)
    return 0 if implemented else 1


def _cmd_render(args) -> int:
    _write(render_ascii(_read_circuit(args.circuit)), args.output)
    return 0


def _add_rule_n_bc(sub, n_required=True):
    sub.add_argument("--rule", type=int, required=True, metavar="CODE",
                     help="Wolfram rule code in [0, 255]")
    if n_required:
        sub.add_argument("--n", type=int, required=True, help="cell count")
    sub.add_argument("--bc", required=True, choices=["periodic", "fixed"],
                     help="boundary condition")


def _add_common_output(sub):
    sub.add_argument("--format", choices=["json", "text"], default="json")
    sub.add_argument("--output", "-o", metavar="PATH", default=None,
                     help="write to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qeca",
        description="Reversible elementary cellular automata and their circuits.")
    commands = parser.add_subparsers(dest="command", required=True)

    scan = commands.add_parser(
        "scan", help="classify all 256 rules over a range of cell counts")
    scan.add_argument("--n-min", type=int, default=SCAN_N_MIN)
    scan.add_argument("--n-max", type=int, default=SCAN_N_MAX)
    _add_common_output(scan)
    scan.set_defaults(func=_cmd_scan)

    check = commands.add_parser(
        "check", help="brute-force reversibility verdict for one (rule, n, bc)")
    _add_rule_n_bc(check)
    _add_common_output(check)
    check.set_defaults(func=_cmd_check)

    synth = commands.add_parser(
        "synth", help="build the circuit for a reversible (rule, n, bc)")
    _add_rule_n_bc(synth)
    _add_common_output(synth)
    synth.set_defaults(func=_cmd_synth)

    sim = commands.add_parser(
        "sim", help="apply a circuit file or a rule step to bits or a state vector")
    sim.add_argument("--circuit", metavar="PATH",
                     help="circuit JSON file ('-' for stdin)")
    sim.add_argument("--rule", type=int, metavar="CODE",
                     help="step this rule instead of loading a circuit")
    sim.add_argument("--bc", default="periodic", choices=["periodic", "fixed"])
    sim.add_argument("--bits", metavar="BITSTRING",
                     help="configuration, leftmost character is cell 0")
    sim.add_argument("--state", metavar="PATH", help="state-vector JSON file")
    _add_common_output(sim)
    sim.set_defaults(func=_cmd_sim)

    prove = commands.add_parser(
        "prove", help="collision pair proving a (rule, n, bc) irreversible")
    _add_rule_n_bc(prove)
    _add_common_output(prove)
    prove.set_defaults(func=_cmd_prove)

    verify = commands.add_parser(
        "verify", help="exhaustively confirm circuit == automaton step")
    _add_rule_n_bc(verify)
    _add_common_output(verify)
    verify.set_defaults(func=_cmd_verify)

    render = commands.add_parser("render", help="draw a circuit file as text")
    render.add_argument("circuit", metavar="PATH",
                        help="circuit JSON file ('-' for stdin)")
    _add_common_output(render)
    render.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)
    try:
        return args.func(args)
    except CapacityError as exc:
        _error_record("capacity", str(exc))
        return 3
    except NotReversibleError as exc:
        _error_record("not-reversible", str(exc),
                      witness=_witness_strings(exc.witness))
        return 1
    except CircuitParseError as exc:
        _error_record("parse", str(exc))
        return 2
    except (UnsupportedRuleError, ValueError) as exc:
        _error_record("usage", str(exc))
        return 2
    except OSError as exc:
        _error_record("io", str(exc))
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
