"""``hexaweb build | verify | loci``.

Exit codes: 0 success (all checks pass), 1 some check failed, 2 invalid
specification, 3 degenerate construction.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import poncelet, scene, svg, verify
from .errors import GeometryError
from .tolerances import DEFAULTS

EXIT_OK, EXIT_FAIL, EXIT_SPEC, EXIT_DEGENERATE = 0, 1, 2, 3

CONFIG_KEYS = {"seed", "vertices", "rings", "with", "p", "tolerances", "output", "poncelet", "no_timestamp", "checks"}
OUTPUT_KEYS = {"svg", "json", "csv"}
PONCELET_KEYS = {"kind", "samples", "what"}


class SpecError(ValueError):
    pass


def _floats(text, n=None, what="value"):
    try:
        vals = [float(x) for x in str(text).split(",")]
    except ValueError as exc:
        raise SpecError(f"bad {what} {text!r}") from exc
    if n is not None and len(vals) != n:
        raise SpecError(f"{what} needs {n} numbers, got {len(vals)}")
    return vals


def parse_seed(text):
    if isinstance(text, (list, tuple)):
        vals = [float(x) for x in text]
    elif str(text).strip().lower() == "equilateral":
        return (1.0, 1.0, 1.0)
    else:
        vals = _floats(text, 3, "seed")
    if len(vals) != 3:
        raise SpecError("seed needs three sidelengths")
    a, b, c = vals
    if min(vals) <= 0 or a >= b + c or b >= c + a or c >= a + b:
        raise SpecError(f"sides {a:g}, {b:g}, {c:g} violate the triangle inequality")
    return tuple(vals)


def parse_with(items):
    out = []
    kind, samples = None, None
    for raw in items:
        for item in str(raw).split(","):
            item = item.strip()
            if not item:
                continue
            name, *args = item.split(":")
            if name not in scene.CONSTRUCTIONS:
                raise SpecError(f"unknown construction {name!r}; choose from {', '.join(scene.CONSTRUCTIONS)}")
            if name == "poncelet":
                if args:
                    kind = args[0]
                if len(args) > 1:
                    samples = int(args[1])
            out.append(name)
    return out, kind, samples


def parse_tols(items):
    out = {}
    for item in items or []:
        if "=" not in item:
            raise SpecError(f"--tol expects name=value, got {item!r}")
        name, value = item.split("=", 1)
        if name not in DEFAULTS:
            raise SpecError(f"unknown tolerance {name!r}; known: {', '.join(sorted(DEFAULTS))}")
        try:
            out[name] = float(value)
        except ValueError as exc:
            raise SpecError(f"bad tolerance value {value!r}") from exc
    return out


def load_config(path):
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecError("config must be a JSON object")
    unknown = set(data) - CONFIG_KEYS
    if unknown:
        raise SpecError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key, allowed in (("output", OUTPUT_KEYS), ("poncelet", PONCELET_KEYS)):
        if key in data:
            if not isinstance(data[key], dict):
                raise SpecError(f"config {key!r} must be an object")
            bad = set(data[key]) - allowed
            if bad:
                raise SpecError(f"unknown keys in {key!r}: {', '.join(sorted(bad))}")
    if "tolerances" in data:
        bad = set(data["tolerances"]) - set(DEFAULTS)
        if bad:
            raise SpecError(f"unknown tolerances: {', '.join(sorted(bad))}")
    return data


def resolve(args) -> dict:
    """Merge config file and flags (flags win) into one plain dict."""
    cfg = load_config(args.config) if args.config else {}
    out = {
        "sides": None,
        "vertices": None,
        "rings": cfg.get("rings", 1 if args.command == "build" else 2),
        "with": [],
        "p": cfg.get("p"),
        "tolerances": dict(cfg.get("tolerances", {})),
        "output": dict(cfg.get("output", {})),
        "kind": cfg.get("poncelet", {}).get("kind"),
        "samples": cfg.get("poncelet", {}).get("samples"),
        "what": cfg.get("poncelet", {}).get("what"),
        "no_timestamp": bool(cfg.get("no_timestamp", False)),
        "checks": list(cfg.get("checks", [])),
    }
    if "seed" in cfg:
        out["sides"] = parse_seed(cfg["seed"])
    if "vertices" in cfg:
        out["vertices"] = tuple(float(x) for x in np.ravel(cfg["vertices"]))
    if "with" in cfg:
        w, k, s = parse_with(cfg["with"] if isinstance(cfg["with"], list) else [cfg["with"]])
        out["with"], out["kind"], out["samples"] = w, k or out["kind"], s or out["samples"]
    if args.seed is not None:
        out["sides"], out["vertices"] = parse_seed(args.seed), None
    if args.vertices is not None:
        out["vertices"], out["sides"] = tuple(_floats(args.vertices, 6, "vertices")), None
    if out["sides"] is None and out["vertices"] is None:
        out["sides"] = (5.0, 3.0, 4.0)
    if args.rings is not None:
        out["rings"] = args.rings
    if out["rings"] < 0:
        raise SpecError("rings must be >= 0")
    if args.with_:
        w, k, s = parse_with(args.with_)
        out["with"], out["kind"], out["samples"] = w, k or out["kind"], s or out["samples"]
    if args.p is not None:
        out["p"] = tuple(_floats(args.p, 2, "--p"))
    out["tolerances"].update(parse_tols(args.tol))
    for fmt in OUTPUT_KEYS:
        val = getattr(args, fmt, None)
        if val is not None:
            out["output"][fmt] = val
    if getattr(args, "poncelet", None):
        out["kind"] = args.poncelet
    if getattr(args, "samples", None):
        out["samples"] = args.samples
    if getattr(args, "what", None):
        out["what"] = args.what
    if getattr(args, "check", None):
        out["checks"] = [c for item in args.check for c in item.split(",") if c]
    if args.no_timestamp:
        out["no_timestamp"] = True
    if out["kind"] is not None and out["kind"] not in poncelet.KINDS:
        raise SpecError(f"unknown poncelet family {out['kind']!r}; use {' or '.join(poncelet.KINDS)}")
    return out


def _scene_spec(opts) -> scene.SceneSpec:
    return scene.SceneSpec(
        sides=opts["sides"],
        vertices=opts["vertices"],
        rings=opts["rings"],
        constructions=tuple(opts["with"] or ["grid"]),
        p=opts["p"],
        tolerances=opts["tolerances"],
        poncelet_kind=opts["kind"] or "brocard",
        samples=opts["samples"] or 36,
    )


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_build(opts) -> int:
    spec = _scene_spec(opts)
    data = scene.build_scene(spec)
    out = opts["output"]
    if "json" in out:
        _write(out["json"], scene.dumps(data) + "\n")
    if "svg" in out:
        _write(out["svg"], svg.render(data, timestamp=not opts["no_timestamp"]))
    if "csv" in out and "poncelet" in data:
        fam = poncelet.make_family(spec.poncelet_kind, spec.triangle())
        _write(out["csv"], poncelet.locus_csv(fam, ["focal_centroid", "flank_barycenters", "hexagon_centroids"], spec.samples))
    summary = [f"seed sides={','.join(f'{x:.12g}' for x in data['seed']['sides'])}"]
    if "hexagons" in data:
        summary.append(f"hexagons={len(data['hexagons'])} triangles={len(data['triangles'])}")
    if "satellites" in data:
        s = data["satellites"]
        err = abs(s["area_sum"] - s["hexagon_area"]) / s["hexagon_area"]
        summary.append(f"satellite area sum={s['area_sum']:.12g} hexagon area={s['hexagon_area']:.12g} rel_error={err:.3e}")
    if "focal" in data:
        summary.append(f"focal s={data['focal']['s']:.12g}")
    print("\n".join(summary))
    return EXIT_OK


def cmd_verify(opts) -> int:
    spec = _scene_spec(opts)
    tri = spec.triangle()
    ctx = verify.Context(tri, rings=opts["rings"], p=opts["p"], samples=opts["samples"] or 50, overrides=opts["tolerances"])
    names = opts["checks"] or None
    if opts["kind"] and not names:
        names = [n for n in verify.names_for(("poncelet",)) if n.startswith(opts["kind"])]
    results = verify.run(ctx, names)
    for r in results:
        line = r.line()
        if r.detail:
            line += f"  ({r.detail})"
        print(line)
    if opts["kind"] and not opts["checks"]:
        print(conservation_table(ctx.report(opts["kind"])))
    report = {
        "seed": {"sides": list(tri.sides), "vertices": tri.vertices.tolist()},
        "rings": opts["rings"],
        "tolerances": {k: opts["tolerances"][k] for k in sorted(opts["tolerances"])},
        "checks": [r.as_dict() for r in results],
        "summary": {"total": len(results), "passed": sum(r.passed for r in results)},
    }
    if "json" in opts["output"]:
        _write(opts["output"]["json"], scene.dumps(report) + "\n")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def conservation_table(reports) -> str:
    head = f"{'t':>8} {'sum_sq':>14} {'area':>14} {'omega':>14} {'ratio':>14} {'focal_s':>14}"
    rows = [head]
    for r in reports:
        rows.append(f"{r.t_param:8.4f} {r.sum_sq:14.10g} {r.area:14.10g} {r.omega:14.10g} {r.ratio:14.10g} {r.focal_s:14.10g}")
    return "\n".join(rows)


def cmd_loci(opts) -> int:
    spec = _scene_spec(opts)
    kind = opts["kind"] or "homothetic"
    what = opts["what"] or "focal_centroid"
    samples = opts["samples"] or 36
    fam = poncelet.make_family(kind, spec.triangle())
    text = poncelet.locus_csv(fam, [what], samples)
    fit = poncelet.locus_fit(fam, what, samples)
    path = opts["output"].get("csv", "-")
    _write(path, text)
    line = (
        f"fit {kind} {what}: {fit.kind} center=({fit.center[0]:.12g}, {fit.center[1]:.12g}) "
        f"semi_axes=({abs(fit.semi_axes[0]):.12g}, {abs(fit.semi_axes[1]):.12g}) "
        f"aspect={fit.aspect:.12g} max_residual={fit.max_residual:.3e} [{fit.label}]"
    )
    print(line, file=sys.stderr if path == "-" else sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hexaweb", description="Hexagon grids, flank triangles and their parabola webs.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_mutually_exclusive_group()
    g.add_argument("--seed", help="sidelengths a,b,c or 'equilateral'")
    g.add_argument("--vertices", help="x1,y1,x2,y2,x3,y3")
    common.add_argument("--rings", type=int)
    common.add_argument("--with", dest="with_", action="append", help="comma list of constructions; poncelet:KIND:SAMPLES")
    common.add_argument("--p", help="point x,y for satellite constructions")
    common.add_argument("--tol", action="append", help="tolerance override name=value")
    common.add_argument("--config", help="JSON scene config; flags override it")
    common.add_argument("--json")
    common.add_argument("--svg")
    common.add_argument("--csv")
    common.add_argument("--no-timestamp", action="store_true")
    common.add_argument("--samples", type=int)
    common.add_argument("--poncelet", help="homothetic or brocard")
    b = sub.add_parser("build", parents=[common], help="write scene JSON / SVG")
    b.set_defaults(func=cmd_build)
    v = sub.add_parser("verify", parents=[common], help="run the check suite")
    v.add_argument("--all", action="store_true", help="run every check (the default)")
    v.add_argument("--check", action="append", help="check name(s), comma separated")
    v.set_defaults(func=cmd_verify)
    lo = sub.add_parser("loci", parents=[common], help="emit a Poncelet locus as CSV")
    lo.add_argument("--what", help="flank_barycenters, hexagon_centroids, focal_centroid or center(Xk)")
    lo.set_defaults(func=cmd_loci)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = resolve(args)
        if getattr(args, "check", None):
            unknown = [c for c in opts["checks"] if c not in verify.REGISTRY]
            if unknown:
                raise SpecError(f"unknown check(s): {', '.join(unknown)}")
        return args.func(opts)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
