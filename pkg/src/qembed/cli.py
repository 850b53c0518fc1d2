"""Command-line scan runner: run scenario files or named presets."""

import argparse
import os
import sys

from .greens import QuadratureSettings
from .presets import get_preset, preset_names
from .scenario import emit_csv, emit_plot, load_scenario_file, run_scenario


def _settings(args):
    return QuadratureSettings(rtol=args.tolerance)


def _emit(result, base, no_plot):
    csv_path = base + ".csv"
    emit_csv(result, csv_path)
    print(f"wrote {csv_path}")
    if not no_plot:
        log_y = any(q.startswith("J") for q in result.columns)
        plot_path = base + ".pdf"
        emit_plot(result, plot_path, log_y=log_y)
        print(f"wrote {plot_path}")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="qembed",
        description="Dressed Green functions and polaritonic spectral "
                    "densities for collective light-matter coupling.")
    parser.add_argument("--tolerance", type=float, default=1e-8,
                        help="relative tolerance of the wavevector quadrature")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for Fabry-Perot frequency scans")
    parser.add_argument("--no-plot", action="store_true",
                        help="skip plot emission")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a TOML scenario file")
    p_run.add_argument("scenario_file")
    p_run.add_argument("--out", default=".", help="output directory")

    p_preset = sub.add_parser("preset", help="run a named preset")
    p_preset.add_argument("name", choices=preset_names())
    p_preset.add_argument("--out", default=".", help="output directory")

    sub.add_parser("list-presets", help="list available preset names")

    args = parser.parse_args(argv)

    if args.command == "list-presets":
        for name in preset_names():
            print(name)
        return 0

    os.makedirs(args.out, exist_ok=True)
    settings = _settings(args)

    if args.command == "run":
        scenario = load_scenario_file(args.scenario_file)
        result = run_scenario(scenario, settings=settings, threads=args.threads)
        base = os.path.join(
            args.out,
            os.path.splitext(os.path.basename(args.scenario_file))[0])
        _emit(result, base, args.no_plot)
        return 0

    for label, scenario in get_preset(args.name):
        result = run_scenario(scenario, settings=settings, threads=args.threads)
        _emit(result, os.path.join(args.out, f"{args.name}_{label}"),
              args.no_plot)
    return 0


if __name__ == "__main__":
    sys.exit(main())
