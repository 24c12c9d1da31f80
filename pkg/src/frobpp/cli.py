"""Command line: ``frobpp {test,search,challenge,crossval,oracle}``.

Every flag can also come from a ``--config`` file of ``key = value`` lines
(keys are flag names without dashes; ``#`` starts a comment).  Flags given
on the command line win.

Exit status: 0 success, 1 a cross-validation suite found a violation,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .ring import InvalidInput
from .frobenius import frobenius_test, strong_frobenius_test
from .harness.crossval import SUITES, cross_validate
from .harness.oracle import OracleTooLarge, is_composite_oracle
from .harness.search import (
    Family,
    POLY_FAMILIES,
    RangeJob,
    TestSpec,
    challenge_scan,
    emit_finding,
    search_pseudoprimes,
    write_csv,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID = 0, 1, 2


def read_config(path: str) -> dict[str, str]:
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidInput(f"{path}:{lineno}: expected key = value")
            key, value = line.split("=", 1)
            out[key.strip().replace("-", "_")] = value.strip()
    return out


def _residues(text: str) -> tuple[int, ...]:
    return tuple(int(r) for r in text.replace(" ", "").split(",") if r)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobpp", description="Frobenius probable prime laboratory")
    parser.add_argument("--config", help="key = value file supplying flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    families = [f.value for f in Family]

    p = sub.add_parser("test", help="run one test on one n and print its certificate")
    p.add_argument("n", type=int)
    p.add_argument("--family", default="frobenius", choices=families)
    p.add_argument("--params", help="polynomial such as 'x^2-x-1', or comma separated integers")

    p = sub.add_parser("search", help="list composites in a range that pass a test")
    p.add_argument("--lo", type=int, default=3)
    p.add_argument("--hi", type=int)
    p.add_argument("--family", default="frobenius", choices=families)
    p.add_argument("--params")
    p.add_argument("--filter-mod", type=int)
    p.add_argument("--filter-residues", type=_residues, default=())
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write JSON lines here instead of stdout")
    p.add_argument("--csv", help="also write a CSV table here")

    p = sub.add_parser("challenge", help="scan for x^2+5x+5 pseudoprimes that are 2 or 3 mod 5")
    p.add_argument("--limit", type=int, default=10**6)
    p.add_argument("--no-filter", action="store_true", help="diagnostic: drop the residue filter")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("crossval", help="check an implication suite over a range")
    p.add_argument("--suite", choices=sorted(SUITES), action="append")
    p.add_argument("--lo", type=int, default=3)
    p.add_argument("--hi", type=int, default=10**4)

    p = sub.add_parser("oracle", help="classify one n by trial division")
    p.add_argument("n", type=int)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not args.config:
        return args
    config = read_config(args.config)
    # re-parse with config values as defaults for the chosen subcommand
    subparser = parser._subparsers._group_actions[0].choices[args.command]
    known = {a.dest: a for a in subparser._actions}
    defaults = {}
    for key, value in config.items():
        action = known.get(key)
        if action is None:
            raise InvalidInput(f"unknown config key {key!r} for {args.command}")
        if action.const is True and action.nargs == 0:
            defaults[key] = value.lower() in ("1", "true", "yes")
        elif action.type is not None:
            defaults[key] = action.type(value)
        else:
            defaults[key] = [value] if isinstance(action, argparse._AppendAction) else value
    subparser.set_defaults(**defaults)
    return parser.parse_args(argv)


def _spec(family: str, params) -> TestSpec:
    if params is None:
        if Family(family) in POLY_FAMILIES:
            raise InvalidInput(f"{family} needs --params with a polynomial")
        raise InvalidInput(f"{family} needs --params")
    return TestSpec.parse(family, params)


def cmd_test(args) -> int:
    spec = _spec(args.family, args.params)
    if spec.family in (Family.FROBENIUS, Family.STRONG_FROBENIUS):
        run = frobenius_test if spec.family is Family.FROBENIUS else strong_frobenius_test
        report = run(args.n, spec.polynomial)
        record = report.to_record()
        record["F"] = [str(F_i) for F_i in report.F]
        print(json.dumps(record, indent=2))
        return EXIT_INVALID if record["verdict"] == "invalid_input" else EXIT_OK
    ev = spec.evaluate(args.n)
    print(json.dumps({
        "n": str(args.n),
        "family": spec.family.value,
        "params": spec.params_text,
        "verdict": ev.outcome.value,
        "failed_step": ev.failed_step,
    }, indent=2))
    return EXIT_INVALID if ev.outcome.value == "invalid_input" else EXIT_OK


def cmd_search(args) -> int:
    if args.hi is None:
        raise InvalidInput("search needs --hi")
    job = RangeJob(args.lo, args.hi, _spec(args.family, args.params),
                   args.filter_mod, args.filter_residues)
    findings = list(search_pseudoprimes(job, args.workers))
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        for f in findings:
            emit_finding(f, sink)
    finally:
        if args.out:
            sink.close()
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(findings, fh)
    print(f"{len(findings)} finding(s) in [{args.lo}, {args.hi}]", file=sys.stderr)
    return EXIT_OK


def cmd_challenge(args) -> int:
    count = 0
    for f in challenge_scan(args.limit, use_filter=not args.no_filter, workers=args.workers):
        emit_finding(f, sys.stdout)
        count += 1
    print(f"{count} finding(s) up to {args.limit}", file=sys.stderr)
    return EXIT_OK


def cmd_crossval(args) -> int:
    status = EXIT_OK
    for suite in args.suite or sorted(SUITES):
        report = cross_validate(args.lo, args.hi, suite)
        print(report.summary())
        for v in report.violations:
            print(f"  violation n={v.n} {v.params}: {v.detail}")
        for note in report.notes:
            print(f"  note: {note}")
        if not report.ok:
            status = EXIT_VIOLATION
    return status


def cmd_oracle(args) -> int:
    res = is_composite_oracle(args.n)
    out = {"n": str(args.n), "status": res.status.value}
    if res.factor is not None:
        out["factor"] = str(res.factor)
    print(json.dumps(out))
    return EXIT_OK


COMMANDS = {
    "test": cmd_test,
    "search": cmd_search,
    "challenge": cmd_challenge,
    "crossval": cmd_crossval,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = _apply_config(parser, list(sys.argv[1:] if argv is None else argv))
        return COMMANDS[args.command](args)
    except (InvalidInput, OracleTooLarge, ValueError) as e:
        print(f"frobpp: error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
