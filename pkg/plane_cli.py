#!/usr/bin/env python3
"""
riccati-plane command-line interface

Classify, simulate, verify and sweep the Riccati-reducible special cases of
system #11.

Usage:
    python plane_cli.py classify 11,7 --alpha1 2 --A1 1 --beta2 1 [--json]
    python plane_cli.py simulate 11,2 --alpha1 1 --A1 1 --alpha2 4 --ic 1 1 [--output orbit.csv]
    python plane_cli.py verify 11,11 --alpha1 2 --A1 1 --alpha2 1 --A2 1 [--grid 20]
    python plane_cli.py sweep 11,13 --alpha1 1 --A1 1 --vary A2 --range 0.2 2.0 19
    python plane_cli.py cases [--json]

Exit codes: 0 success, 2 validation, 3 forbidden initial condition or
vanishing denominator, 4 verification failure.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, Optional

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from riccati_plane import api
from riccati_plane.core.config import ConfigManager, configure_logging
from riccati_plane.core.model import FULL_SYMBOLS, RAW_FORM, REDUCED_FORM
from riccati_plane.core.registry import CASE_IDS, DISPLAY_NAMES, RAW_1122, SCHEMA_VERSION, X_EQUATION, case_spec
from riccati_plane.simulation.export import (
    orbit_csv_text,
    orbit_json_payload,
    sweep_csv_text,
    write_orbit,
    write_sweep,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_VERIFICATION = 4


class PlaneCLI:
    """Command-line interface over the riccati_plane api."""

    def __init__(self, config_path: Optional[str] = None):
        """
        Args:
            config_path: JSON config file; the packaged plane_config.json when None
        """
        self.config_path = config_path
        result = ConfigManager(config_path).load_config()
        self.config_error = None if result["success"] else result["msg"]
        self.config: Dict[str, Any] = result["config"]

    # ---- helpers -------------------------------------------------------

    @staticmethod
    def _params(args: argparse.Namespace) -> Dict[str, Optional[float]]:
        return {name: getattr(args, name, None) for name in FULL_SYMBOLS}

    @staticmethod
    def _form(args: argparse.Namespace) -> str:
        return RAW_FORM if getattr(args, "raw", False) else REDUCED_FORM

    @staticmethod
    def _fail(result: Dict[str, Any]) -> int:
        print(f"❌ {result['msg']}", file=sys.stderr)
        return result.get("exit_code", 1)

    @staticmethod
    def _print_json(command: str, data: Dict[str, Any]) -> None:
        payload = {"schema": SCHEMA_VERSION, "command": command}
        payload.update(data)
        print(json.dumps(payload, indent=2, ensure_ascii=False))

    @staticmethod
    def _fmt_point(point: Optional[Dict[str, float]]) -> str:
        if not point:
            return "-"
        return f"({point['x']:.12g}, {point['y']:.12g})"

    def _overrides(self, args: argparse.Namespace) -> Dict[str, Any]:
        return {
            "max_iters": getattr(args, "max_iters", None),
            "conv_tol": getattr(args, "conv_tol", None),
            "period_tol": getattr(args, "period_tol", None),
            "window": getattr(args, "window", None),
        }

    # ---- commands ------------------------------------------------------

    def cmd_classify(self, args: argparse.Namespace) -> int:
        """
        Print the predicted behavior of one parameter point.

        Returns:
            Exit code (0 for success, 2 on validation failure)
        """
        result = api.classify_case(args.case, self._params(args), self._form(args), self.config)
        if not result["success"]:
            return self._fail(result)
        data = result["data"]
        if args.json:
            self._print_json("classify", data)
            return EXIT_OK

        prediction = data["prediction"]
        spec = case_spec(args.case, self._form(args))
        print(f"{spec.label}  {X_EQUATION};  {spec.y_equation}")
        print("=" * 60)
        params = data["case_params"]["params"]
        print("Parameters: " + ", ".join(f"{DISPLAY_NAMES[k]}={v:g}" for k, v in params.items()))
        print(f"Region:     {prediction['region']}")
        print(f"Prediction: {prediction['kind']}")
        if "equilibrium" in prediction:
            print(f"Equilibrium: {self._fmt_point(prediction['equilibrium'])}")
        if "within_steps" in prediction:
            print(f"Reached within {prediction['within_steps']} steps")
        if "saddle" in prediction:
            print(f"Saddle: {self._fmt_point(prediction['saddle'])} (stable manifold: {prediction['manifold']})")
            print(f"Interior attractor: {self._fmt_point(prediction['interior_attractor'])}")
        if data["equilibria"]["kind"] == "Continuum":
            print(f"Equilibria: {data['equilibria']['parameterization']}")
        if data["stability"]:
            print("\nLinearized stability:")
            for entry in data["stability"]:
                m1, m2 = entry["spectrum"]["moduli"]
                print(f"  {entry['role']:9s} {self._fmt_point(entry['point'])}  "
                      f"|λ| = {m1:.6g}, {m2:.6g}  {entry['class']}")
        print("=" * 60)
        return EXIT_OK

    def cmd_simulate(self, args: argparse.Namespace) -> int:
        """
        Iterate one orbit and emit it as CSV (n,x,y) or JSON.

        Returns:
            Exit code (0 for success, 2 validation, 3 forbidden initial condition)
        """
        result = api.simulate_case(args.case, self._params(args), tuple(args.ic),
                                   self._form(args), self.config, **self._overrides(args))
        if not result["success"]:
            return self._fail(result)
        data = result["data"]
        orbit = data["orbit"]

        if args.output:
            fmt = args.format or ("json" if str(args.output).endswith(".json") else "csv")
            path = write_orbit(orbit, args.output, fmt, observed=data["observed"])
            print(f"✅ {orbit.steps + 1} states written to {path}")
            print(f"Observed: {data['summary']} -> {data['observed']['kind']}")
            return EXIT_OK

        if args.json or args.format == "json":
            print(json.dumps(orbit_json_payload(orbit, data["observed"]), indent=2, ensure_ascii=False))
        else:
            sys.stdout.write(orbit_csv_text(orbit))
            print(f"Observed: {data['summary']} -> {data['observed']['kind']}", file=sys.stderr)
        return EXIT_OK

    def cmd_verify(self, args: argparse.Namespace) -> int:
        """
        Conjugacy residual and eigenvalue cross-check.

        Returns:
            Exit code (0 pass, 2 validation, 4 a residual above its threshold)
        """
        result = api.verify_case(args.case, self._params(args), self._form(args),
                                 self.config, grid_size=args.grid)
        if not result["success"]:
            return self._fail(result)
        data = result["data"]
        code = EXIT_OK if data["passed"] else EXIT_VERIFICATION
        if args.json:
            self._print_json("verify", data)
            return code

        spec = case_spec(args.case, self._form(args))
        print(f"🔍 Verification of {spec.label}")
        print("=" * 60)
        if data["conjugate"]:
            mark = "✅" if data["conjugacy_ok"] else "❌"
            print(f"{mark} conjugacy residual {data['residual']:.3e} on a "
                  f"{data['grid_size']}x{data['grid_size']} grid (threshold {data['threshold']:.0e})")
            riccati = data["riccati"]
            print(f"   φ(u) = ({riccati['a']:.6g} + {riccati['b']:.6g}u)/({riccati['c']:.6g} + "
                  f"{riccati['d']:.6g}u), lag {riccati['lag']}, "
                  f"decoupling residual {data['decoupling_residual']:.3e}")
        else:
            print(f"ℹ️  {data['note']}")
        if not data["eigen"]:
            print("   no equilibria; eigenvalue check skipped")
        for entry in data["eigen"]:
            mark = "✅" if entry["gap"] <= data["eigen_threshold"] else "❌"
            print(f"{mark} {entry['role']:9s} {self._fmt_point(entry['point'])}  "
                  f"closed vs numeric gap {entry['gap']:.3e}  {entry['class']}")
        print("=" * 60)
        print("Result: " + ("passed" if data["passed"] else "FAILED"))
        return code

    def cmd_sweep(self, args: argparse.Namespace) -> int:
        """
        Sweep one parameter and emit param,predicted,observed,limit_x,limit_y rows.

        Returns:
            Exit code (0 for success, 2 on validation failure)
        """
        lo, hi, steps = args.range
        ics = [tuple(ic) for ic in args.ic] if args.ic else None
        result = api.sweep_case(args.case, args.vary, lo, hi, int(steps), self._params(args),
                                ics=ics, form=self._form(args), config=self.config,
                                workers=args.workers, **self._overrides(args))
        if not result["success"]:
            return self._fail(result)
        data = result["data"]
        rows = data["rows"]

        if args.output:
            fmt = args.format or ("json" if str(args.output).endswith(".json") else "csv")
            meta = {"case": data["case"], "varying": data["varying"], "flips": data["flips"]}
            path = write_sweep(rows, args.output, fmt, meta=meta)
            print(f"✅ {len(rows)} rows written to {path}")
        elif args.json or args.format == "json":
            self._print_json("sweep", data)
        else:
            sys.stdout.write(sweep_csv_text(rows))

        for flip in data["flips"]:
            a, b = flip["between"]
            print(f"Behavior flip between {a:.6g} and {b:.6g}: {flip['from']} -> {flip['to']}",
                  file=sys.stderr)
        return EXIT_OK

    def cmd_cases(self, args: argparse.Namespace) -> int:
        """
        List the case table.

        Returns:
            Exit code (0)
        """
        specs = [case_spec(i) for i in CASE_IDS] + [RAW_1122]
        if args.json:
            self._print_json("cases", {"x_equation": X_EQUATION, "cases": [s.to_dict() for s in specs]})
            return EXIT_OK
        print(f"System #11: {X_EQUATION}")
        print("=" * 60)
        for spec in specs:
            names = ", ".join(DISPLAY_NAMES[n] for n in spec.param_names)
            suffix = " [raw]" if spec.form == RAW_FORM else ""
            print(f"{spec.label:8s}{suffix:6s} {spec.y_equation:36s} ({names})")
            print(f"{'':14s} {spec.regions}")
        print("=" * 60)
        return EXIT_OK


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('case', help='Case id, e.g. 7 or 11,7')
    for name in FULL_SYMBOLS:
        parser.add_argument(f'--{name}', type=float, default=None, help=f'Parameter {DISPLAY_NAMES[name]}')
    parser.add_argument('--raw', action='store_true',
                        help='Use the raw four-parameter (11,22) form (α₁, A₁, α₂, β₂)')
    parser.add_argument('--json', action='store_true', help='Print JSON instead of text')


def _add_sim_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--max-iters', type=int, default=None, help='Iteration budget')
    parser.add_argument('--conv-tol', type=float, default=None, help='Convergence tolerance')
    parser.add_argument('--period-tol', type=float, default=None, help='Periodicity tolerance')
    parser.add_argument('--window', type=int, default=None, help='Largest period searched')
    parser.add_argument('--output', '-o', default=None, help='Write to this file instead of stdout')
    parser.add_argument('--format', choices=['csv', 'json'], default=None, help='Output format')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Riccati-reducible cases of the planar rational system #11",
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument('--config', default=None, help='Path to JSON configuration file')
    parser.add_argument('--verbose', '-v', action='store_true', help='Debug logging')

    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    classify_parser = subparsers.add_parser('classify', help='Predict the global behavior')
    _add_param_flags(classify_parser)

    simulate_parser = subparsers.add_parser('simulate', help='Iterate one orbit')
    _add_param_flags(simulate_parser)
    simulate_parser.add_argument('--ic', type=float, nargs=2, required=True, metavar=('X0', 'Y0'),
                                 help='Initial condition')
    _add_sim_flags(simulate_parser)

    verify_parser = subparsers.add_parser('verify', help='Check conjugacy and spectra')
    _add_param_flags(verify_parser)
    verify_parser.add_argument('--grid', type=int, default=None, help='Grid size per axis')

    sweep_parser = subparsers.add_parser('sweep', help='Sweep one parameter')
    _add_param_flags(sweep_parser)
    sweep_parser.add_argument('--vary', required=True, help='Parameter symbol to sweep, e.g. A2')
    sweep_parser.add_argument('--range', type=float, nargs=3, required=True, metavar=('LO', 'HI', 'STEPS'),
                              help='Sweep range and number of grid points')
    sweep_parser.add_argument('--ic', type=float, nargs=2, action='append', metavar=('X0', 'Y0'),
                              help='Initial condition (repeatable); config sweep.ics when omitted')
    sweep_parser.add_argument('--workers', type=int, default=None, help='Parallel workers')
    _add_sim_flags(sweep_parser)

    cases_parser = subparsers.add_parser('cases', help='List the case table')
    cases_parser.add_argument('--json', action='store_true', help='Print JSON instead of text')

    return parser


def main(argv=None) -> int:
    """Main entry point for the CLI."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_VALIDATION if e.code else EXIT_OK

    if not args.command:
        parser.print_help()
        return EXIT_VALIDATION

    cli = PlaneCLI(config_path=args.config)
    if cli.config_error:
        print(f"❌ {cli.config_error}", file=sys.stderr)
        return EXIT_VALIDATION
    configure_logging(cli.config, verbose=args.verbose)

    command_handlers = {
        'classify': cli.cmd_classify,
        'simulate': cli.cmd_simulate,
        'verify': cli.cmd_verify,
        'sweep': cli.cmd_sweep,
        'cases': cli.cmd_cases,
    }
    return command_handlers[args.command](args)


if __name__ == '__main__':
    sys.exit(main())
