"""Command-line entry point.

Exit status: 0 success / localized, 2 valid run with a negative verdict,
1 usage or input error. Machine output goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import placements
from .arrangement import check_formula, decide, labeling_for, synthesize_dnf
from .bounds import bounds_report
from .exceptions import LoclabError, NotLocalizableError
from .geometry import parse_scalar
from .render import LAYERS, RenderSpec, render_svg
from .scene import Scene, dump_scene, parse_scene
from .spike import SpikeParams, build_spike_polygon, sample_ab_pair

OK, NEGATIVE, ERROR = 0, 2, 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(obj, stdout) -> None:
    stdout.write(json.dumps(obj, indent=2) + "\n")


def _read_scene(path: str, stdin) -> Scene:
    if path == "-":
        data = stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return parse_scene(data)


def _write(text, path, stdout) -> None:
    if path in (None, "-"):
        if isinstance(text, bytes):
            if hasattr(stdout, "buffer"):
                stdout.buffer.write(text)
                stdout.flush()
            else:
                stdout.write(text.decode("utf-8"))
        else:
            stdout.write(text)
    else:
        mode = "wb" if isinstance(text, bytes) else "w"
        with open(path, mode) as fh:
            fh.write(text)


def cmd_gen(args, stdin, stdout):
    params = SpikeParams(args.m, parse_scalar(args.w), parse_scalar(args.h), parse_scalar(args.delta))
    sp = build_spike_polygon(params)
    _write(dump_scene(Scene.from_spike(sp)), args.output, stdout)
    return OK


def cmd_verify(args, stdin, stdout):
    scene = _read_scene(args.scene, stdin)
    if scene.formula is None:
        raise UsageError("verify: scene has no formula (run `synth` first)")
    verdict = check_formula(labeling_for(scene.polygon, scene.guards), scene.formula)
    _emit(verdict.to_json(), stdout)
    return OK if verdict.ok else NEGATIVE


def cmd_decide(args, stdin, stdout):
    scene = _read_scene(args.scene, stdin)
    verdict = decide(labeling_for(scene.polygon, scene.guards))
    _emit(verdict.to_json(), stdout)
    return OK if verdict.ok else NEGATIVE


def cmd_synth(args, stdin, stdout):
    scene = _read_scene(args.scene, stdin)
    labeling = labeling_for(scene.polygon, scene.guards)
    try:
        scene.formula = synthesize_dnf(labeling)
    except NotLocalizableError:
        _emit(decide(labeling).to_json(), stdout)
        return NEGATIVE
    _write(dump_scene(scene), args.output, stdout)
    return OK


def cmd_bounds(args, stdin, stdout):
    scene = _read_scene(args.scene, stdin)
    sp = scene.spike()
    spikes = [args.spike] if args.spike is not None else list(range(2, sp.m))
    if not spikes:
        raise UsageError("bounds: need m >= 3 for an interior spike")
    reports = [bounds_report(sp, i) for i in spikes]
    _emit(reports[0] if args.spike is not None else reports, stdout)
    return OK


def _solution_scene(scene: Scene, sol) -> Scene:
    return Scene(scene.polygon, sol.guards, scene.roles, sol.formula, scene.params)


def cmd_solve_vertex(args, stdin, stdout):
    scene = _read_scene(args.scene, stdin)
    sp = scene.spike()
    sol = placements.tight_vertex_solution(sp) if args.tight else placements.vertex_solution(sp)
    _write(dump_scene(_solution_scene(scene, sol)), args.output, stdout)
    return OK


def cmd_solve_general(args, stdin, stdout):
    scene = _read_scene(args.scene, stdin)
    sol = placements.general_solution(scene.spike())
    _write(dump_scene(_solution_scene(scene, sol)), args.output, stdout)
    return OK


def cmd_search(args, stdin, stdout):
    scene = _read_scene(args.scene, stdin)
    report = placements.min_vertex_guards(scene.polygon, args.kmax, args.budget, args.workers)
    _emit(report_to_json(report, scene), stdout)
    return OK if report.best_found is not None else NEGATIVE


def report_to_json(report, scene: Scene) -> dict:
    best = None
    if report.best_found is not None:
        best = json.loads(dump_scene(_solution_scene(scene, report.best_found)))
        best = {"size": report.best_found.size, "guards": best["guards"], "formula": best["formula"]}
    return {
        "kmax": report.kmax,
        "candidateCount": report.candidate_count,
        "infeasibleSizes": report.infeasible_sizes,
        "exhaustive": report.exhaustive,
        "subsetsChecked": report.subsets_checked,
        "bestFound": best,
    }


def cmd_render(args, stdin, stdout):
    scene = _read_scene(args.scene, stdin)
    layers = tuple(args.layers.split(",")) if args.layers else ("polygon", "cones")
    if args.viewport:
        parts = [parse_scalar(v) for v in args.viewport.split(",")]
        if len(parts) != 4:
            raise UsageError("render: --viewport needs xmin,ymin,xmax,ymax")
        spec = RenderSpec(tuple(parts), layers)
    else:
        spec = RenderSpec.around(scene.polygon, layers)
    labeling = labeling_for(scene.polygon, scene.guards)
    witnesses = []
    if "witnesses" in layers:
        verdict = decide(labeling)
        if not verdict.ok:
            inside, outside = verdict.witness
            witnesses.append((outside.representative, inside.representative))
        if args.ab is not None:
            sp = scene.spike()
            witnesses.append(sample_ab_pair(sp, args.ab, sp.params.delta / 8))
    svg = render_svg(scene.polygon, scene.guards, spec, witnesses, labeling.lines)
    _write(svg, args.output, stdout)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="loclab", description="Exact wireless-localization toolkit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    g = sub.add_parser("gen", help="build the m-spike polygon")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--h", required=True)
    g.add_argument("--delta", required=True)
    g.add_argument("--w", required=True)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("verify", cmd_verify, "check the scene's formula on every cell"),
        ("decide", cmd_decide, "decide monotone localizability"),
        ("synth", cmd_synth, "attach the subset-minimal DNF"),
        ("solve-general", cmd_solve_general, "general-position guards, ceil(n/2)"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("scene", help="scene JSON path or - for stdin")
        s.add_argument("-o", "--output")
        s.set_defaults(func=func)

    s = sub.add_parser("solve-vertex", help="verified vertex-guard solution")
    s.add_argument("scene")
    s.add_argument("--tight", action="store_true", help="use the 2m-1 construction")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve_vertex)

    b = sub.add_parser("bounds", help="contribution, separator threshold and k")
    b.add_argument("scene")
    b.add_argument("--spike", type=int)
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("search", help="exhaustive canonical vertex-guard search")
    s.add_argument("scene")
    s.add_argument("--kmax", type=int, default=3)
    s.add_argument("--budget", type=float, default=None, help="seconds")
    s.add_argument("--workers", type=int, default=None, help="defaults to $LOCLAB_THREADS or 1")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("render", help="SVG picture of the scene")
    r.add_argument("scene")
    r.add_argument("-o", "--output")
    r.add_argument("--layers", help=f"comma list from {','.join(LAYERS)}")
    r.add_argument("--viewport", help="xmin,ymin,xmax,ymax (exact rationals)")
    r.add_argument("--ab", type=int, help="also draw the A/B pair of this spike")
    r.set_defaults(func=cmd_render)
    return p


def run_command(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, stdin, stdout)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return ERROR
    except (LoclabError, ValueError, IndexError, OSError) as exc:
        stderr.write(f"loclab: {exc}\n")
        return ERROR


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
