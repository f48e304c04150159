"""w2bound command line: `run` a job and emit the JSON report, or `verify` it."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bounds import EllipticObstructionError, PrimeTooSmall
from .curve import BadReduction
from .jobs import JobError, JobSpec, dumps, load_job, parse_job, run, verify
from .wedge import RankError

EXIT_OK, EXIT_INPUT, EXIT_ELLIPTIC, EXIT_REDUCTION, EXIT_ORACLE = 0, 1, 2, 3, 4


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise JobError(f"--{what}: expected comma separated integers") from exc


def build_job(args) -> JobSpec:
    data: dict = {}
    if args.job:
        base = load_job(args.job)
        data = {"curve": base.curve, "p": base.p, "alpha": base.alpha, "beta": base.beta,
                "known_points": base.known_points, "series": base.series, "name": base.name}
    if args.curve:
        data["curve"] = _ints(args.curve, "curve")
    if args.p is not None:
        data["p"] = args.p
    if args.beta:
        data["beta"], data["alpha"] = _ints(args.beta, "beta"), None
    if args.alpha:
        data["alpha"] = [_ints(v, "alpha") for v in args.alpha.split(";")]
        data["beta"] = None
    data = {k: v for k, v in data.items() if v is not None}
    return parse_job(data)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="w2bound",
                                 description="Upper bounds on W_2(Q) for genus 3 odd hyperelliptic curves.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, text in (("run", "compute the bound report"), ("verify", "run the oracle suite")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("job", nargs="?", help="job file (.json or .toml)")
        sp.add_argument("--curve", help="8 integer coefficients, constant term first")
        sp.add_argument("--p", type=int, help="prime of good reduction")
        sp.add_argument("--beta", help="b01,b02,b12")
        sp.add_argument("--alpha", help="a10,a11,a12;a20,a21,a22")
        if name == "run":
            sp.add_argument("--json-out", help="write the report here instead of stdout")
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        job = build_job(args)
        if args.command == "verify":
            results = verify(job)
            for r in results:
                print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
            failed = [r.name for r in results if not r.passed]
            if failed:
                print(f"failing invariants: {', '.join(failed)}", file=sys.stderr)
                return EXIT_ORACLE
            return EXIT_OK
        report = run(job)
    except (JobError, RankError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BadReduction, PrimeTooSmall) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REDUCTION
    except EllipticObstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.command == "run":
            report = {"schema": 1, "name": job.name, "outcome": "elliptic_obstruction",
                      "p": job.p, "detail": str(exc), "case": {"name": "elliptic", **exc.context}}
            _emit(args, report)
        return EXIT_ELLIPTIC
    _emit(args, report)
    return EXIT_OK


def _emit(args, report: dict):
    text = dumps(report)
    if getattr(args, "json_out", None):
        Path(args.json_out).write_text(text)
        print(f"wrote {args.json_out}")
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
