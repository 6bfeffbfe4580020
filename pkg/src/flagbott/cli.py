"""Command-line front end.

Exit codes: 0 success, 2 validation error (the message names the failed
rule), 3 internal assertion (sample disagreement, non-integer total, or
resampling exhausted).
"""

import argparse
import json
import os
import sys

from .errors import EngineError, ValidationError, ZeroDenominator
from .fixed_points import enumerate_fixed_points
from .localization import MAX_RESAMPLE_ATTEMPTS, invariant
from .oracles import (
    classical_flag_integral,
    grassmannian_quantum_integral,
    pn_localization_sum,
)
from .problem import FlagShape, validate_problem
from .weights import sample_weights

MODES = (
    "invariant",
    "list-fixed-points",
    "oracle-pn",
    "oracle-grassmannian",
    "oracle-classical",
    "report",
)


def parse_insertions(tokens):
    """Insertion tokens ``alpha:beta`` with repeat shorthand ``xN``;
    tokens may also be comma-joined."""
    out = []
    for token in tokens:
        for item in token.split(","):
            item = item.strip()
            if not item:
                continue
            body, _, rep = item.partition("x")
            count = int(rep) if rep else 1
            alpha, _, beta = body.partition(":")
            if not beta or count < 1:
                raise ValidationError(f"bad insertion token {item!r}")
            out.extend([(int(alpha), int(beta))] * count)
    return out


def build_parser():
    p = argparse.ArgumentParser(
        prog="flagbott",
        description="Exact Gromov invariants of flag varieties by Bott "
        "localization over the flag Quot scheme.",
    )
    p.add_argument("--n", type=int, help="ambient dimension")
    p.add_argument("--s", type=int, nargs="+", help="flag ranks s_1 < ... < s_l")
    p.add_argument("--d", type=int, nargs="+", help="multidegree d_1 ... d_l")
    p.add_argument("--insertions", nargs="+", default=[],
                   help="insertions alpha:beta[xN], e.g. 1:1x8")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=2,
                   help="independent admissible samples to cross-check (>= 2)")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--allow-beta-overflow", action="store_true",
                   help="permit beta >= s_{a+1}-s_{a-1} (outside the proven regime)")
    p.add_argument("--mode", choices=MODES, default="invariant")
    p.add_argument("--batch", metavar="PATH",
                   help="JSON-lines file of problems; one result line each")
    p.add_argument("--out", default="report",
                   help="output directory for --mode report")
    return p


def _problem_from_args(args):
    if args.n is None or not args.s or args.d is None:
        raise ValidationError("--n, --s and --d are required")
    shape = FlagShape(args.n, tuple(args.s))
    insertions = parse_insertions(args.insertions)
    return validate_problem(shape, tuple(args.d), insertions,
                            allow_beta_overflow=args.allow_beta_overflow)


def _result_record(problem, value, count, samples, seed, mode):
    return {
        "flag": {"n": problem.shape.n, "s": list(problem.shape.s)},
        "degree": list(problem.degrees),
        "insertions": [{"alpha": it.alpha, "beta": it.beta}
                       for it in problem.insertions],
        "dimension": problem.dimension,
        "fixed_points": count,
        "invariant": str(value),
        "samples": samples,
        "seed": seed,
        "mode": mode,
    }


def _emit(record, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps(record) + "\n")
    else:
        stream.write(f"invariant = {record['invariant']}\n")
        stream.write(
            f"  flag F({','.join(map(str, record['flag']['s']))};{record['flag']['n']})"
            f"  degree {record['degree']}  dim {record['dimension']}"
            f"  fixed points {record['fixed_points']}\n"
        )


def _oracle_at_samples(n_lambdas, seed, samples, evaluate):
    """Evaluate a sample-based oracle at ``samples`` admissible samples and
    check they agree."""
    values = []
    attempt = 0
    for _ in range(max(samples, 1)):
        for _ in range(MAX_RESAMPLE_ATTEMPTS):
            w = sample_weights(n_lambdas, seed, attempt)
            attempt += 1
            try:
                values.append(evaluate(w))
            except ZeroDenominator:
                continue
            break
        else:
            raise EngineError("no admissible sample for the oracle")
    if any(v != values[0] for v in values[1:]):
        raise EngineError(f"oracle values differ across samples: {values}")
    return values[0]


def run_problem(args, stream):
    mode = args.mode
    if mode == "list-fixed-points":
        if args.n is None or not args.s or args.d is None:
            raise ValidationError("--n, --s and --d are required")
        shape = FlagShape(args.n, tuple(args.s))
        degrees = tuple(args.d)
        if len(degrees) != shape.l or any(x < 0 for x in degrees):
            raise ValidationError("degree vector must be l nonnegative integers")
        count = 0
        for fp in enumerate_fixed_points(shape, degrees):
            count += 1
            rec = {
                "chain": [list(J) for J in fp.chain],
                "a": [{str(j): row[j] for j in sorted(row)} for row in fp.a],
                "b": [{str(j): row[j] for j in sorted(row)} for row in fp.b],
            }
            if args.format == "json":
                stream.write(json.dumps(rec) + "\n")
            else:
                stream.write(f"{rec['chain']} a={rec['a']} b={rec['b']}\n")
        if args.format == "text":
            stream.write(f"total: {count} fixed points\n")
        return 0

    if mode == "oracle-pn":
        problem = _problem_from_args(args)
        if problem.shape.s != (1,):
            raise ValidationError("oracle-pn needs s=(1): P^{n-1} as F(1; n)")
        n_proj = problem.shape.n - 1
        d = problem.degrees[0]
        value = _oracle_at_samples(
            n_proj + 1, args.seed, args.samples,
            lambda w: pn_localization_sum(n_proj, d, w),
        )
        record = _result_record(problem, value, 0, args.samples, args.seed, mode)
        _emit(record, args.format, stream)
        return 0

    if mode == "oracle-grassmannian":
        problem = _problem_from_args(args)
        if problem.shape.l != 1:
            raise ValidationError("oracle-grassmannian needs a one-step flag")
        value = grassmannian_quantum_integral(
            problem.shape.n, problem.shape.s[0], problem.degrees[0],
            [it.beta for it in problem.insertions],
        )
        record = _result_record(problem, value, 0, 1, args.seed, mode)
        _emit(record, args.format, stream)
        return 0

    if mode == "oracle-classical":
        problem = _problem_from_args(args)
        if any(problem.degrees):
            raise ValidationError("oracle-classical needs d = 0")
        pairs = [(it.alpha, it.beta) for it in problem.insertions]
        value = _oracle_at_samples(
            problem.shape.n, args.seed, args.samples,
            lambda w: classical_flag_integral(problem.shape, pairs, w),
        )
        record = _result_record(problem, value, 0, args.samples, args.seed, mode)
        _emit(record, args.format, stream)
        return 0

    problem = _problem_from_args(args)
    result = invariant(problem, seed=args.seed, num_samples=max(args.samples, 2),
                       workers=max(args.workers, 1))
    record = _result_record(problem, result.value, result.fixed_point_count,
                            result.samples_used, result.seed, mode)
    if mode == "report":
        from .report import write_report

        paths = write_report(problem, args.out, seed=args.seed)
        record["report"] = paths
    _emit(record, args.format, stream)
    return 0


def run_batch(path, args, stream):
    """One result record per JSON line; malformed or invalid lines yield an
    error record and processing continues."""
    with open(path) as fh:
        lines = fh.readlines()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            shape = FlagShape(int(obj["n"]), tuple(obj["s"]))
            raw = obj.get("insertions", [])
            if raw and isinstance(raw[0], str):
                ins = parse_insertions(raw)
            else:
                ins = [(int(x["alpha"]), int(x["beta"])) for x in raw]
            problem = validate_problem(
                shape, tuple(obj["d"]), ins,
                allow_beta_overflow=bool(obj.get("allow_beta_overflow", False)),
            )
            seed = int(obj.get("seed", args.seed))
            samples = max(int(obj.get("samples", args.samples)), 2)
            result = invariant(problem, seed=seed, num_samples=samples,
                               workers=max(args.workers, 1))
            record = _result_record(problem, result.value,
                                    result.fixed_point_count,
                                    result.samples_used, seed, "invariant")
        except Exception as exc:  # keep going; report the line
            record = {"line": lineno, "error": f"{type(exc).__name__}: {exc}"}
        stream.write(json.dumps(record) + "\n")
    return 0


def run(argv, stream=None):
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.batch:
            return run_batch(args.batch, args, stream)
        return run_problem(args, stream)
    except ValidationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
