"""Regenerate the golden reports under golden/ (or compare against them).

    python scripts/acceptance_matrix.py            # rewrite golden/
    python scripts/acceptance_matrix.py --check    # exit 1 on any drift

Comparison ignores the "timestamp" block only.
"""
import argparse
import os
import sys
import tempfile

from parafermion.cli import main as voa, output_path
from parafermion.report import RunConfig, strip_timestamp

GOLDEN = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "golden")

MATRIX = [
    ("graded-dims", "A1", 1, 4, None),
    ("graded-dims", "A1", 2, 6, None),
    ("graded-dims", "A1", 3, 4, None),
    ("graded-dims", "A2", 1, 4, None),
    ("check-virasoro", "A1", 2, 2, None),
    ("check-generators", "A1", 2, 5, "thm2.1"),
    ("check-generators", "A1", 2, 5, "thm3.1"),
    ("check-ideal", "A1", 2, 5, None),
    ("check-weyl", "A2", 1, 3, None),
]


def run_entry(entry, out_dir):
    command, algebra, k, n, which = entry
    argv = [command, "--algebra", algebra, "--level", str(k), "--max-weight", str(n),
            "--format", "json", "--out", out_dir]
    cfg = RunConfig(algebra=algebra, level=k, max_weight=n, out_dir=out_dir)
    if which:
        argv += ["--which", which]
        cfg.which = which
    code = voa(argv)
    return code, output_path(cfg, command)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    if not args.check:
        os.makedirs(GOLDEN, exist_ok=True)
        for entry in MATRIX:
            code, _ = run_entry(entry, GOLDEN)
            if code:
                sys.exit(f"{entry}: exit code {code}")
        return
    drift = 0
    with tempfile.TemporaryDirectory() as tmp:
        for entry in MATRIX:
            code, path = run_entry(entry, tmp)
            with open(path) as fh:
                new = strip_timestamp(fh.read())
            with open(os.path.join(GOLDEN, os.path.basename(path))) as fh:
                old = strip_timestamp(fh.read())
            if code or new != old:
                drift += 1
                print(f"DRIFT {entry}")
    sys.exit(1 if drift else 0)


if __name__ == "__main__":
    main()
