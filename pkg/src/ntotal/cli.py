"""Command line: ``ring-info``, ``graph`` and ``verify``.

Exit codes: 0 success, 1 a theorem check failed, 2 usage or parse error,
3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import families
from .export import FORMATS
from .graph import Selector, build_graph
from .ideals import zero_divisor_profile
from .parse import parse_ring
from .rings import DEFAULT_VERTEX_CAP, CardinalityCap, RingSpec, format_spec, make_ring
from .theorems import DEFAULT_GENERATOR_CAP, format_table, run_suite, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


def parse_n_values(text: str) -> list[int]:
    """``3``, ``1,2,5`` or ranges ``1..6`` / ``1-6``, comma separated."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        for sep in ("..", "-"):
            if sep in part:
                lo, hi = part.split(sep, 1)
                out.extend(range(int(lo), int(hi) + 1))
                break
        else:
            out.append(int(part))
    if not out or min(out) < 1:
        raise ConfigError(f"n values must be integers >= 1, got {text!r}")
    return sorted(set(out))


@dataclass
class SweepConfig:
    rings: list[str] = field(default_factory=list)
    n_values: list[int] = field(default_factory=lambda: list(range(1, 7)))
    selector: str = "all"
    out: Path | None = None
    cap_generators: int = DEFAULT_GENERATOR_CAP
    cap_vertices: int = DEFAULT_VERTEX_CAP

    def specs(self) -> list[RingSpec]:
        return [parse_ring(r) for r in self.rings]

    def validate(self) -> None:
        if self.cap_generators < 1 or self.cap_vertices < 1:
            raise ConfigError("caps must be >= 1")
        Selector(self.selector)


def read_config(path: Path) -> SweepConfig:
    """Line config: ``key = value`` settings; any other line is a ring spec."""
    cfg = SweepConfig()
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            cfg.rings.append(line)
            continue
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        try:
            if key == "ring":
                cfg.rings.append(value)
            elif key == "n":
                cfg.n_values = parse_n_values(value)
            elif key == "selector":
                cfg.selector = value
            elif key == "out":
                cfg.out = Path(value)
            elif key in ("cap_generators", "cap_vertices"):
                setattr(cfg, key, int(value))
            else:
                raise ConfigError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: {exc}") from exc
    return cfg


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_ring_info(args) -> int:
    ring = make_ring(parse_ring(args.spec), args.cap_vertices)
    prof = zero_divisor_profile(ring)
    if args.format == "json":
        print(json.dumps(prof.to_dict(), indent=2))
    else:
        print(prof.describe())
    return EXIT_OK


def cmd_graph(args) -> int:
    render = FORMATS[args.format]
    if args.preset:
        if args.preset != "figures":
            raise ConfigError(f"unknown graph preset {args.preset!r}")
        jobs = [(spec, n, sel) for spec, ns, sel in families.FIGURES for n in ns]
    else:
        if args.spec is None:
            raise ConfigError("a ring spec or --preset is required")
        jobs = [(args.spec, n, args.selector) for n in parse_n_values(args.n)]
    outputs = []
    for spec, n, sel in jobs:
        ring = make_ring(parse_ring(spec), args.cap_vertices)
        g = build_graph(ring, n, Selector(sel), cap=args.cap_vertices)
        outputs.append((f"{n}-T-{sel}-{format_spec(ring.spec)}.{args.format}", render(g)))
    if args.out:
        out = Path(args.out)
        if len(outputs) == 1 and out.suffix:
            _write_atomic(out, outputs[0][1])
        else:
            for name, text in outputs:
                _write_atomic(out / _safe(name), text)
    else:
        sys.stdout.write("".join(text for _, text in outputs))
    return EXIT_OK


def _safe(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_.,+" else "_" for c in name)


def _sweep_config(args) -> SweepConfig:
    cfg = read_config(Path(args.config)) if args.config else SweepConfig()
    if args.preset == "curated":
        cfg.rings += [format_spec(s) for s in families.curated()]
        cfg.n_values = list(families.CURATED_N)
    elif args.preset == "figures":
        cfg.rings += list(dict.fromkeys(spec for spec, _, _ in families.FIGURES))
        cfg.n_values = [1, 2, 3, 4]
    elif args.preset:
        raise ConfigError(f"unknown verify preset {args.preset!r}")
    if args.rings:
        cfg.rings += args.rings
    if args.n:
        cfg.n_values = parse_n_values(args.n)
    if args.out:
        cfg.out = Path(args.out)
    if args.cap_generators is not None:
        cfg.cap_generators = args.cap_generators
    if args.cap_vertices is not None:
        cfg.cap_vertices = args.cap_vertices
    if not cfg.rings:
        raise ConfigError("no rings given (use a config file, --rings or --preset)")
    cfg.validate()
    return cfg


def cmd_verify(args) -> int:
    cfg = _sweep_config(args)
    reports = run_suite(cfg.specs(), cfg.n_values, cfg.cap_generators, cfg.cap_vertices,
                        workers=args.jobs)
    summary = summarize(reports)
    table = format_table(reports)
    doc = {
        "rings": cfg.rings,
        "n": cfg.n_values,
        "summary": {v.value: c for v, c in sorted(summary.counts.items())},
        "reports": [r.to_dict() for r in reports],
    }
    if cfg.out:
        _write_atomic(cfg.out / "report.txt", table + "\n")
        _write_atomic(cfg.out / "report.json", json.dumps(doc, indent=2) + "\n")
    elif not args.quiet:
        print(table)
    print(f"summary: {summary}")
    return EXIT_FAIL if summary.failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ntotal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring-info", help="print the zero-divisor profile of a ring")
    p.add_argument("spec")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cap-vertices", type=int, default=DEFAULT_VERTEX_CAP)
    p.set_defaults(func=cmd_ring_info)

    p = sub.add_parser("graph", help="build and export n-T(R)")
    p.add_argument("spec", nargs="?")
    p.add_argument("--n", default="1")
    p.add_argument("--selector", choices=[s.value for s in Selector], default="all")
    p.add_argument("--format", choices=sorted(FORMATS), default="json")
    p.add_argument("--out")
    p.add_argument("--preset", choices=("figures",))
    p.add_argument("--cap-vertices", type=int, default=DEFAULT_VERTEX_CAP)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="check every theorem on a ring family")
    p.add_argument("config", nargs="?")
    p.add_argument("--rings", nargs="+")
    p.add_argument("--n")
    p.add_argument("--preset", choices=("curated", "figures"))
    p.add_argument("--out")
    p.add_argument("--cap-generators", type=int)
    p.add_argument("--cap-vertices", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--quiet", action="store_true", help="print only the summary")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CardinalityCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
