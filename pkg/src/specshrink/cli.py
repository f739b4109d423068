"""Command-line interface.

Every command prints one JSON document on standard output.  Exit status is 2
for input or schema errors, 3 for numeric failures and 0 otherwise (a "no"
verdict or a failing verification report is still a successful run).
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .algebra import AlgebraError
from .diophantine import (
    decide_all_shrink_preserving,
    decide_preserve,
    decide_shrink,
    eigenvalue_selection_exists,
    frobenius_number,
)
from .formats import SchemaError, parse_input
from .linalg import NumericFailure
from .mapbuilder import MapSpecError, ShrinkMapSpec, build_block_map, prepare_source
from .verify import DEFAULT_SAMPLES, DEFAULT_TOL, check_preserving, check_shrinking
from .wedderburn import InternalConsistencyError, wedderburn_profile

EXIT_INPUT = 2
EXIT_NUMERIC = 3


class UsageError(ValueError):
    pass


def _load(path, args):
    A, rho = parse_input(path, close=args.close, reflexive_close=args.reflexive_close)
    return A, rho


def _is_sma(A, profile):
    # semisimple algebras are direct sums of full matrix algebras, hence SMAs
    return A.quasi_order is not None or profile.rad_dim == 0


def _source_ks(A, profile, args):
    """Profile of the source in the block order the witness map will use."""
    src = prepare_source(A, profile, args.seed, args.tol)
    return src, list(src.ks)


def cmd_analyze(args):
    A, _ = _load(args.algebra, args)
    return wedderburn_profile(A, args.seed, args.tol).to_json()


def cmd_decide(args):
    A, _ = _load(args.source, args)
    B, _ = _load(args.target, args)
    pa = wedderburn_profile(A, args.seed, args.tol)
    pb = wedderburn_profile(B, args.seed, args.tol)
    ks, ms = _decision_ks(A, pa), pb.ks
    if args.all_preserving:
        d = decide_all_shrink_preserving(ks, ms, _is_sma(A, pa))
        question = "all_shrinking_preserving"
    elif args.preserving:
        d = decide_preserve(ks, ms)
        question = "preserving"
    else:
        d = decide_shrink(ks, ms)
        question = "shrinking"
    out = d.to_json()
    out.update({"question": question, "ks": ks, "ms": ms})
    return out


def _decision_ks(A, profile):
    if A.quasi_order is not None:
        from .sma import condensation

        return list(condensation(A.quasi_order).block_sizes)
    return list(profile.ks)


def cmd_construct(args):
    A, _ = _load(args.source, args)
    B, _ = _load(args.target, args)
    pa = wedderburn_profile(A, args.seed, args.tol)
    pb = wedderburn_profile(B, args.seed, args.tol)
    src, ks = _source_ks(A, pa, args)
    ms = pb.ks
    if args.non_preserving:
        d = decide_all_shrink_preserving(ks, ms, _is_sma(A, pa))
        ok = d.verdict == "no"
    elif args.preserving:
        d = decide_preserve(ks, ms)
        ok = d.verdict == "yes"
    else:
        d = decide_shrink(ks, ms)
        ok = d.verdict == "yes"
    out = {"decision": d.to_json(), "ks": ks, "ms": ms, "written": None}
    if ok:
        spec = build_block_map(src, ms, d.witness)
        text = json.dumps(spec.to_json(), sort_keys=True)
        if args.output == "-":
            out["map"] = spec.to_json()
        else:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
            out["written"] = args.output
    return out


def cmd_verify(args):
    A, _ = _load(args.source, args)
    B, _ = _load(args.target, args)
    try:
        with open(args.map) as fh:
            spec = ShrinkMapSpec.from_json(json.load(fh))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise SchemaError(args.map, f"malformed map spec ({exc})") from exc
    pb = wedderburn_profile(B, args.seed, args.tol)
    if sorted(spec.targets) != sorted(pb.ks):
        raise UsageError(f"map targets {spec.targets} do not match the target profile {pb.ks}")
    jobs = max(1, args.jobs)
    checks = [("shrinking", check_shrinking), ("preserving", check_preserving)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futs = {name: pool.submit(fn, A, spec, args.samples, args.tol, args.seed) for name, fn in checks}
        reports = {name: f.result() for name, f in futs.items()}
    return {
        "family_covers_all": spec.covers_all(),
        "shrinking": reports["shrinking"].to_json(),
        "preserving": reports["preserving"].to_json(),
    }


def cmd_frobenius(args):
    return {"ks": args.ks, "frobenius_number": frobenius_number(args.ks)}


def cmd_eigsel(args):
    A, _ = _load(args.algebra, args)
    p = wedderburn_profile(A, args.seed, args.tol)
    return {"ks": p.ks, "exists": eigenvalue_selection_exists(p.ks)}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--close", action="store_true", help="take the transitive closure of quasi-order inputs")
    common.add_argument("--reflexive-close", action="store_true", help="add missing diagonal pairs to quasi-order inputs")

    parser = argparse.ArgumentParser(prog="specshrink", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="Wedderburn profile of an algebra")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", parents=[common], help="existence of spectrum-shrinking/preserving maps")
    p.add_argument("source")
    p.add_argument("target")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--preserving", action="store_true")
    g.add_argument("--all-preserving", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", parents=[common], help="build a witness map")
    p.add_argument("source")
    p.add_argument("target")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--preserving", action="store_true")
    g.add_argument("--non-preserving", action="store_true", help="witness a shrinking map that is not preserving")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check a witness map on random samples")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("frobenius", help="Frobenius number of coprime block sizes")
    p.add_argument("ks", type=int, nargs="+")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("eigsel", parents=[common], help="existence of a continuous eigenvalue selection")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_eigsel)
    return parser


def run(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        result = args.func(args)
    except (SchemaError, AlgebraError, MapSpecError, UsageError, OSError) as exc:
        print(json.dumps({"error": str(exc), "kind": "input"}, sort_keys=True), file=out)
        return EXIT_INPUT
    except ValueError as exc:
        print(json.dumps({"error": str(exc), "kind": "input"}, sort_keys=True), file=out)
        return EXIT_INPUT
    except (NumericFailure, InternalConsistencyError) as exc:
        print(json.dumps({"error": str(exc), "kind": "numeric"}, sort_keys=True), file=out)
        return EXIT_NUMERIC
    print(json.dumps(result, sort_keys=True, indent=2), file=out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
