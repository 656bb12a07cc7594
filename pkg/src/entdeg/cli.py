"""Command-line front end: analyze a state file, verify sweeps, examples.

Exit codes: 0 success (and, for verify/examples, all checks passed),
1 a verify/examples tolerance check failed, 2 usage or parse error,
3 a numerical precondition failed (purity gate or determinant sign).

State files are UTF-8 JSON with two fields, for instance

    {"dims": [2, 2], "amplitudes": [[0.577, 0], [0.577, 0], [0, 0], [0.577, 0]]}

where each amplitude is a [real, imaginary] pair in the |i, j> ordering
with the first subsystem as the high-order index.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .ensemble import property_sweep
from .fixtures import example_fixtures
from .measure import RESIDUAL_KEYS, EntanglementReport, PurityViolation, analyze
from .states import state_from_amplitudes

EXAMPLES_TOL = 1e-12


def round15(x: float) -> float:
    """Round a float to 15 significant decimal digits.

    15 digits survive a decimal -> double -> decimal round trip exactly,
    which is what makes the emitted JSON byte-stable under re-parsing.
    """
    return float(f"{x:.15g}")


def _jsonable(obj):
    if dataclasses.is_dataclass(obj):
        return _jsonable(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {key: _jsonable(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(val) for val in obj]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int,)):
        return int(obj)
    if isinstance(obj, float):
        return round15(obj)
    return obj


def emit_json(obj) -> str:
    """Serialize with 15-significant-digit floats and sorted keys."""
    return json.dumps(_jsonable(obj), indent=2, sort_keys=True)


def _fmt(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(f"{v:.15g}" for v in x) + ")"
    if isinstance(x, float):
        return f"{x:.15g}"
    return str(x)


def _report_table(rep: EntanglementReport) -> str:
    lines = []
    for name in (
        "local_dim",
        "p_e_det",
        "p_e_schmidt",
        "concurrence",
        "kappa",
        "u",
        "v",
        "u_norm",
        "v_norm",
        "purity",
        "alpha_det",
        "normalization_warning",
        "oracle_checked",
    ):
        lines.append(f"{name:<24}{_fmt(getattr(rep, name))}")
    if rep.constraint_residuals is not None:
        lines.append("constraint_residuals")
        for key in RESIDUAL_KEYS:
            lines.append(f"  {key:<22}{rep.constraint_residuals[key]:.3e}")
    return "\n".join(lines)


def _load_state(path: str):
    text = Path(path).read_text(encoding="utf-8")
    data = json.loads(text)
    try:
        dims = data["dims"]
        raw = data["amplitudes"]
    except (KeyError, TypeError):
        raise ValueError("state file needs 'dims' and 'amplitudes' fields") from None
    if not isinstance(dims, list) or len(dims) != 2:
        raise ValueError("'dims' must be a pair of local dimensions")
    try:
        amps = [complex(float(re), float(im)) for re, im in raw]
    except (TypeError, ValueError):
        raise ValueError("'amplitudes' must be a list of [re, im] pairs") from None
    return state_from_amplitudes(amps, int(dims[0]), int(dims[1]))


def cmd_analyze(args) -> int:
    psi = _load_state(args.input)
    rep = analyze(psi)
    if args.format == "json":
        print(emit_json(rep))
    else:
        print(_report_table(rep))
    return 0


def cmd_verify(args) -> int:
    report = property_sweep(
        args.samples, args.dim, args.seed, tol=args.tol, workers=args.workers
    )
    print(emit_json(report))
    return 0 if report.passed else 1


def cmd_examples(args) -> int:
    print(f"{'fixture':<30}{'expected':>20}{'computed':>22}{'deviation':>12}")
    worst = 0.0
    for fx in example_fixtures():
        rep = analyze(fx.state)
        dev = abs(rep.p_e_det - fx.expected_pe)
        worst = max(worst, dev)
        print(
            f"{fx.name:<30}{fx.expected_pe:>20.15g}{rep.p_e_det:>22.15g}{dev:>12.3e}"
        )
    ok = worst <= EXAMPLES_TOL
    print(f"worst deviation {worst:.3e}, tolerance {EXAMPLES_TOL:g}: {'ok' if ok else 'FAIL'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entdeg",
        description="Degree of entanglement of pure two-qubit and two-qutrit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one state file")
    p_analyze.add_argument("--input", required=True, help="path to a JSON state file")
    p_analyze.add_argument(
        "--format", choices=("json", "table"), default="table", help="output format"
    )
    p_analyze.set_defaults(handler=cmd_analyze)

    p_verify = sub.add_parser(
        "verify", help="sweep seeded Haar-random states and check every invariant"
    )
    p_verify.add_argument("--samples", type=int, default=10000)
    p_verify.add_argument("--dim", type=int, choices=(2, 3), default=2)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.add_argument(
        "--workers", type=int, default=1, help="thread count; does not affect results"
    )
    p_verify.set_defaults(handler=cmd_verify)

    p_examples = sub.add_parser("examples", help="regression table of built-in states")
    p_examples.set_defaults(handler=cmd_examples)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except PurityViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
