"""trisum command line: verify, eval, figure, show.

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
3 generator-health error.  TG_SEED, when set, overrides --seed.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from trisum import configurations as cfg
from trisum.campaigns import THEOREMS, CampaignSpec, GeneratorHealthError, run_campaign
from trisum.errors import GeometryError, ParseError, Unsupported
from trisum.expr import eval_expression
from trisum.figures import FIGURES, FigureError, FigureSpec, emit_figure
from trisum.triangles import TriangleElement

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_HEALTH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _read_json(arg):
    """JSON given inline, as @path, or '-' for stdin."""
    if arg == "-":
        text = sys.stdin.read()
    elif arg.startswith("@"):
        try:
            text = Path(arg[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {arg[1:]}: {exc.strerror}") from None
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _seed(args):
    env = os.environ.get("TG_SEED")
    if env is None or env == "":
        return args.seed
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"TG_SEED must be an integer, got {env!r}") from None


def cmd_verify(args):
    if args.trials < 1 or args.jobs < 1:
        raise UsageError("--trials and --jobs must be positive")
    spec = CampaignSpec(args.theorem, args.trials, _seed(args), args.jobs)
    try:
        report = run_campaign(spec)
    except GeneratorHealthError as exc:
        print(f"generator health: {exc}", file=sys.stderr)
        return EXIT_HEALTH
    if args.json or args.out:
        _emit(report.dumps(), args.out)
    if not args.json:
        status = "PASS" if report.ok else "FAIL"
        print(f"{status} {report.theorem}: {report.passes}/{report.trials} passed, "
              f"{report.failures} failed, {report.skips} skipped (seed {report.seed})")
    return EXIT_OK if report.ok else EXIT_FAIL


def _element_line(x):
    return f"({', '.join(str(v) for v in x.delta)}) {x.kind.value}"


def cmd_eval(args):
    inputs = _read_json(args.inputs) if args.inputs else {}
    if not isinstance(inputs, dict):
        raise UsageError("inputs must be a JSON object of named elements")
    try:
        result = eval_expression(args.expr, inputs, geometric=args.geometric)
    except (ParseError, Unsupported, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _dumps(result.to_json()) if args.json else _element_line(result) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_figure(args):
    scene = _read_json(args.scene) if args.scene else None
    try:
        result = emit_figure(FigureSpec(args.name, scene, args.out))
    except (KeyError, ValueError) as exc:
        print(f"error: bad scene: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FigureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(result.svg, args.out)
    if not result.ok:
        print(f"warning: {result.warning}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _show_scene(scene):
    data = scene.to_json()
    lines = [f"{data['model']} scene"]
    for label, coords in data["points"].items():
        lines.append(f"  {label:<4} ({' : '.join(coords)})")
    for label, coords in data["lines"].items():
        lines.append(f"  {label:<4} [{' : '.join(coords)}]")
    try:
        if isinstance(scene, cfg.CentralScene):
            derived = cfg.main_construction_central(scene).points()
        else:
            derived = {f"C{k + 1}": c for k, c in enumerate(cfg.main_construction_axis(scene))}
    except GeometryError as exc:
        lines.append(f"  construction: {exc}")
    else:
        for label, p in derived.items():
            lines.append(f"  {label:<4} ({' : '.join(p.to_json())})")
    return "\n".join(lines) + "\n"


def cmd_show(args):
    data = _read_json(args.source)
    try:
        if isinstance(data, dict) and "delta" in data:
            x = TriangleElement.from_json(data)
            text = _dumps(x.to_json()) if args.json else _element_line(x) + "\n"
        elif isinstance(data, dict) and "model" in data:
            scene = cfg.scene_from_json(data)
            text = _dumps(scene.to_json()) if args.json else _show_scene(scene)
        elif isinstance(data, dict) and "theorem" in data:
            text = _dumps(data) if args.json else (
                f"{data['theorem']}: {data['passes']}/{data['trials']} passed, "
                f"{data.get('failures', 0)} failed, {data['skips']} skipped\n")
        else:
            raise UsageError("expected an element, a scene or a report")
    except (KeyError, ValueError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="trisum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write output to this file instead of stdout")

    v = sub.add_parser("verify", parents=[common], help="run a seeded verification campaign")
    v.add_argument("theorem", choices=sorted(THEOREMS))
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", parents=[common], help="evaluate triangle arithmetic")
    e.add_argument("expr", help="e.g. 'A # B', '(A # B) + C', 'half(A)'")
    e.add_argument("--inputs", help="JSON object of named elements, @file or - for stdin")
    e.add_argument("--geometric", action="store_true",
                   help="compute with vertex constructions instead of coordinates")
    e.set_defaults(func=cmd_eval)

    f = sub.add_parser("figure", parents=[common], help="write an SVG figure")
    f.add_argument("name", choices=sorted(FIGURES))
    f.add_argument("--scene", help="scene JSON, @file or - for stdin")
    f.set_defaults(func=cmd_figure)

    s = sub.add_parser("show", parents=[common], help="pretty-print an element, scene or report")
    s.add_argument("source", help="JSON, @file or - for stdin")
    s.set_defaults(func=cmd_show)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
