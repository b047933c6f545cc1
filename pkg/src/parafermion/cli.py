"""``voa``: batch verification commands writing JSON or CSV reports.

Exit codes: 0 all checks pass, 1 a check failed, 2 configuration error,
3 resource cap exceeded (a partial report is still written).
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import List, Optional

import tomli

from .checks import COMMANDS, Context
from .echelon import ResourceCapExceeded
from .lie import UnsupportedAlgebra
from .report import (FORMATS, GENERATOR_SETS, CheckReport, ConfigError, RunConfig, render_csv,
                     render_json, threads_from_env)

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_CAP = 0, 1, 2, 3

log = logging.getLogger("voa")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="voa", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--config", help="TOML file with RunConfig keys; flags override it")
    p.add_argument("--algebra")
    p.add_argument("--level", type=int)
    p.add_argument("--max-weight", type=int, dest="max_weight")
    p.add_argument("--which", choices=GENERATOR_SETS, help="generator set for check-generators")
    p.add_argument("--format", choices=FORMATS, dest="fmt")
    p.add_argument("--out", dest="out_dir")
    p.add_argument("--truncation-regression", action="store_true", default=None,
                   dest="truncation_regression")
    p.add_argument("--virasoro-bound", type=int, dest="virasoro_bound")
    p.add_argument("--bucket-cap", type=int, dest="bucket_cap")
    p.add_argument("--time-cap", type=float, dest="time_cap", help="wall-clock seconds")
    p.add_argument("--max-rank", type=int, dest="max_rank")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def load_config(args: argparse.Namespace) -> RunConfig:
    data = {}
    if args.config:
        try:
            with open(args.config, "rb") as fh:
                data = tomli.load(fh)
        except (OSError, tomli.TOMLDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
    cfg = RunConfig.from_mapping(data)
    for name in ("algebra", "level", "max_weight", "which", "fmt", "out_dir",
                 "truncation_regression", "virasoro_bound", "bucket_cap", "time_cap", "max_rank"):
        value = getattr(args, name)
        if value is not None:
            setattr(cfg, name, value)
    cfg.threads = threads_from_env()
    return cfg.validate()


def output_path(cfg: RunConfig, command: str) -> str:
    stem = f"{command}_{cfg.algebra}_k{cfg.level}_N{cfg.max_weight}"
    if command == "check-generators":
        stem += f"_{cfg.which}"
    return os.path.join(cfg.out_dir, f"{stem}.{cfg.fmt}")


def write_report(cfg: RunConfig, command: str, reports: List[CheckReport],
                 tables: Optional[dict], note: Optional[str] = None) -> str:
    os.makedirs(cfg.out_dir, exist_ok=True)
    path = output_path(cfg, command)
    if cfg.fmt == "json":
        text = render_json(command, cfg, reports, tables, note)
    else:
        text = render_csv(reports, tables)
        if note:
            text += f"# {note}\n"
    with open(path, "w") as fh:
        fh.write(text)
    return path


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = load_config(args)
    except (ConfigError, TypeError) as exc:
        print(f"voa: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    # Buckets are processed sequentially; VOA_THREADS only caps parallelism.
    ctx = Context.from_config(cfg)
    reports: List[CheckReport] = []
    tables = None
    try:
        tables = COMMANDS[args.command](ctx, reports)
    except (ConfigError, UnsupportedAlgebra) as exc:
        print(f"voa: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ResourceCapExceeded as exc:
        note = f"partial results: resource cap exceeded ({exc})"
        path = write_report(cfg, args.command, reports, tables, note)
        print(f"voa: {note}; wrote {path}", file=sys.stderr)
        return EXIT_CAP

    path = write_report(cfg, args.command, reports, tables)
    failed = [r for r in reports if not r.passed]
    for r in reports:
        log.info("%s %s (%.2fs)", "PASS" if r.passed else "FAIL", r.name, r.wall_time)
    for r in failed:
        print(f"FAIL {r.name}: {r.witness}", file=sys.stderr)
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed; wrote {path}")
    return EXIT_FAIL if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
