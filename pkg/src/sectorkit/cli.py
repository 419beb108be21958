"""Batch command line over the analytics core.

Exit codes: 0 on success, 2 when the input fails validation, 64 for usage
errors (unknown flags, missing arguments). All numeric output is printed
with 6 decimal places in CSV and key-value lines; JSON output keeps full
precision. Outputs are deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .engine import ProductionPlan, evaluate_plan
from .errors import NotFoundError, ValidationError
from .iotable import leontief_inverse, load_io_table, technical_coefficients
from .linkage import analyze_linkages, linkage_report_csv
from .merger import MergerScenario, hhi, screen
from .structure import rescale_entropy, structure_report, structure_report_csv
from .technology import profile_from_dict, tca, tcc

USAGE_EXIT = 64
VALIDATION_EXIT = 2


class _Parser(argparse.ArgumentParser):
    """argparse reserves exit code 2 for usage errors; remap to 64 so 2 can
    mean data validation failure."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="sectorkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    io_cmd = sub.add_parser("io", help="input-output table analytics")
    io_sub = io_cmd.add_subparsers(dest="io_command", required=True, parser_class=_Parser)
    analyze = io_sub.add_parser("analyze", help="linkage and structure reports for a table")
    analyze.add_argument("table", help="CSV table: sector,<labels...>,final_demand,gross_output")
    analyze.add_argument("--variant", default="intermediate-only",
                         choices=["intermediate-only", "with-final-demand"],
                         help="row entropy variant for the structure report")
    analyze.add_argument("--alpha", type=float, default=0.5,
                         help="weight of the concentration rank in the combined index")
    analyze.add_argument("--gi-orientation", default="backward",
                         choices=["backward", "forward"],
                         help="which linkage rank feeds the combined index")
    analyze.add_argument("--out", metavar="DIR",
                         help="write linkages.csv and structure.csv here instead of stdout")

    entropy_cmd = sub.add_parser("entropy", help="per-sector entropy of a table")
    entropy_cmd.add_argument("table")
    entropy_cmd.add_argument("--with-final-demand", action="store_true",
                             help="extend each sales row with its final-demand share")
    entropy_cmd.add_argument("--units", default="nats",
                             choices=["nats", "bits", "normalized"],
                             help="display units (computation is in nats)")

    hhi_cmd = sub.add_parser("hhi", help="market concentration index and merger screen")
    hhi_cmd.add_argument("--shares", required=True,
                         help="comma-separated percent shares, e.g. 30,30,20,20")
    hhi_cmd.add_argument("--merge", metavar="A,B",
                         help="indices of two merging firms, e.g. 2,3")

    tcc_cmd = sub.add_parser("tcc", help="technology capability score")
    tcc_cmd.add_argument("--profile", required=True,
                         help="JSON file with score and exponent fields, optional eva")

    plan_cmd = sub.add_parser("plan", help="production plan tools")
    plan_sub = plan_cmd.add_subparsers(dest="plan_command", required=True,
                                       parser_class=_Parser)
    evaluate = plan_sub.add_parser("evaluate", help="evaluate a plan JSON file")
    evaluate.add_argument("plan", help="plan JSON file")

    serve_cmd = sub.add_parser("serve", help="run the HTTP service")
    serve_cmd.add_argument("--port", type=int, default=None,
                           help="listening port (default: DC_PORT or 8000)")
    serve_cmd.add_argument("--store", default=None, metavar="DIR",
                           help="record store directory (default: DC_STORE_DIR)")
    serve_cmd.add_argument("--host", default="127.0.0.1")

    return parser


def _read_json(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ValidationError(f"{path} must contain a JSON object")
    return payload


def _parse_floats(raw: str, flag: str) -> list[float]:
    try:
        return [float(part) for part in raw.split(",") if part.strip() != ""]
    except ValueError:
        raise ValidationError(f"{flag} expects comma-separated numbers, got {raw!r}") from None


def _cmd_io_analyze(args) -> int:
    table = load_io_table(args.table)
    inverse = leontief_inverse(technical_coefficients(table))
    linkages = analyze_linkages(inverse)
    structure = structure_report(
        table,
        alpha_rank_weight=args.alpha,
        entropy_variant=args.variant,
        gi_orientation=args.gi_orientation)
    linkage_csv = linkage_report_csv(linkages)
    structure_csv = structure_report_csv(structure)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "linkages.csv").write_text(linkage_csv, encoding="utf-8")
        (out / "structure.csv").write_text(structure_csv, encoding="utf-8")
        print(out / "linkages.csv")
        print(out / "structure.csv")
    else:
        print("# report: linkages")
        sys.stdout.write(linkage_csv)
        print("# report: structure")
        sys.stdout.write(structure_csv)
    return 0


def _cmd_entropy(args) -> int:
    table = load_io_table(args.table)
    variant = "with-final-demand" if args.with_final_demand else "intermediate-only"
    report = structure_report(table, entropy_variant=variant)
    n = len(report.sector_labels)
    row_len = n + 1 if args.with_final_demand else n
    h_rows = rescale_entropy(report.h_row, args.units, row_len)
    h_cols = rescale_entropy(report.h_col, args.units, n)
    print(f"# entropy_variant: {variant}")
    print(f"# entropy_units: {args.units}")
    print("sector,H_row,H_col")
    for i, label in enumerate(report.sector_labels):
        row = "nan" if h_rows[i] != h_rows[i] else f"{h_rows[i]:.6f}"
        col = "nan" if h_cols[i] != h_cols[i] else f"{h_cols[i]:.6f}"
        print(f"{label},{row},{col}")
    return 0


def _cmd_hhi(args) -> int:
    shares = _parse_floats(args.shares, "--shares")
    if args.merge is None:
        print(f"hhi {hhi(shares):.6f}")
        return 0
    merge = args.merge.split(",")
    if len(merge) != 2:
        raise ValidationError(f"--merge expects two indices, got {args.merge!r}")
    try:
        merge_a, merge_b = int(merge[0]), int(merge[1])
    except ValueError:
        raise ValidationError(f"--merge expects integer indices, got {args.merge!r}") from None
    verdict = screen(MergerScenario(shares=tuple(shares), merge_a=merge_a, merge_b=merge_b))
    print(f"pre_hhi {verdict.pre_hhi:.6f}")
    print(f"delta {verdict.delta:.6f}")
    print(f"post_hhi {verdict.post_hhi:.6f}")
    print(f"market_class {verdict.market_class.value}")
    print(f"action {verdict.action.value}")
    print(f"coverage {verdict.coverage:.6f}")
    print(f"rationale {verdict.rationale}")
    return 0


def _cmd_tcc(args) -> int:
    profile = profile_from_dict(_read_json(args.profile))
    value = tcc(profile)
    print(f"tcc {value:.6f}")
    print(f"beta_sum {profile.beta_sum:.6f}")
    if profile.eva is not None:
        print(f"tca {tca(value, profile.eva):.6f}")
    return 0


def _cmd_plan_evaluate(args) -> int:
    plan = ProductionPlan.from_dict(_read_json(args.plan))
    evaluation = evaluate_plan(plan)
    print(json.dumps(evaluation.to_dict(), indent=2))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app, resolve_port, resolve_store_dir

    app = create_app(store_dir=resolve_store_dir(args.store))
    uvicorn.run(app, host=args.host, port=resolve_port(args.port))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "io":
            return _cmd_io_analyze(args)
        if args.command == "entropy":
            return _cmd_entropy(args)
        if args.command == "hhi":
            return _cmd_hhi(args)
        if args.command == "tcc":
            return _cmd_tcc(args)
        if args.command == "plan":
            return _cmd_plan_evaluate(args)
        if args.command == "serve":
            return _cmd_serve(args)
    except ValidationError as exc:
        for item in exc.to_dicts():
            print(f"error: {item['field']}: {item['message']}", file=sys.stderr)
        return VALIDATION_EXIT
    except NotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    parser.error(f"unknown command {args.command!r}")
    return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
